#include "flagcover/field.hpp"

#include <charconv>

#include "flagcover/errors.hpp"

namespace flagcover {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return result;
}

std::uint64_t reduce(const mpz_class& value, std::uint64_t p) {
  mpz_class r = value % static_cast<unsigned long>(p);
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32U) || !is_prime(p)) {
    throw InvalidArgument("field modulus must be a prime below 2^32, got " +
                          std::to_string(p));
  }
  return Field{p};
}

Field Field::parse(std::string_view text) {
  if (text == "rational" || text == "Q") return rationals();
  if (text.starts_with("fp:")) {
    text.remove_prefix(3);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), p);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
      throw InvalidArgument("bad field modulus '" + std::string(text) + "'");
    }
    return prime(p);
  }
  throw InvalidArgument("unknown field '" + std::string(text) +
                        "' (expected rational or fp:<p>)");
}

std::optional<std::uint64_t> Field::order() const noexcept {
  if (p_ == 0) return std::nullopt;
  return p_;
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long value) const {
  Scalar s;
  s.p_ = p_;
  if (p_ == 0) {
    s.q_ = mpq_class(static_cast<long>(value));
  } else {
    long long r = value % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    s.r_ = static_cast<std::uint64_t>(r);
  }
  return s;
}

Scalar Field::from_rational(const mpq_class& value) const {
  Scalar s;
  s.p_ = p_;
  if (p_ == 0) {
    s.q_ = value;
    s.q_.canonicalize();
    return s;
  }
  std::uint64_t den = reduce(value.get_den(), p_);
  if (den == 0) {
    throw ReductionFailure("denominator of " + value.get_str() +
                           " is divisible by " + std::to_string(p_));
  }
  std::uint64_t num = reduce(value.get_num(), p_);
  s.r_ = num * mod_pow(den, p_ - 2, p_) % p_;
  return s;
}

Scalar Field::parse_scalar(std::string_view text) const {
  mpq_class q;
  if (text.empty() || q.set_str(std::string(text), 10) != 0) {
    throw InvalidArgument("cannot parse scalar '" + std::string(text) + "'");
  }
  if (q.get_den() == 0) {
    throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
  }
  q.canonicalize();
  return from_rational(q);
}

std::string Field::name() const {
  return p_ == 0 ? std::string("rational") : "fp:" + std::to_string(p_);
}

Field Scalar::field() const noexcept { return Field{p_}; }

bool Scalar::is_zero() const noexcept {
  return p_ == 0 ? sgn(q_) == 0 : r_ == 0;
}

bool Scalar::is_one() const noexcept {
  return p_ == 0 ? q_ == 1 : r_ == 1;
}

const mpq_class& Scalar::rational() const {
  if (p_ != 0) throw InvalidArgument("rational() on a prime-field scalar");
  return q_;
}

std::uint64_t Scalar::residue() const {
  if (p_ == 0) throw InvalidArgument("residue() on a rational scalar");
  return r_;
}

void Scalar::check_same_field(const Scalar& rhs) const {
  if (p_ != rhs.p_) {
    throw DimensionMismatch("scalars from different fields");
  }
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (p_ == 0) {
    s.q_ = -q_;
  } else if (r_ != 0) {
    s.r_ = p_ - r_;
  }
  return s;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_same_field(rhs);
  if (p_ == 0) {
    q_ += rhs.q_;
  } else {
    r_ = (r_ + rhs.r_) % p_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  check_same_field(rhs);
  if (p_ == 0) {
    q_ -= rhs.q_;
  } else {
    r_ = (r_ + p_ - rhs.r_) % p_;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_same_field(rhs);
  if (p_ == 0) {
    q_ *= rhs.q_;
  } else {
    r_ = r_ * rhs.r_ % p_;
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  check_same_field(rhs);
  return *this *= rhs.inverse();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw InvalidArgument("division by zero");
  Scalar s = *this;
  if (p_ == 0) {
    s.q_ = 1 / q_;
  } else {
    s.r_ = mod_pow(r_, p_ - 2, p_);
  }
  return s;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_) return false;
  return a.p_ == 0 ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string Scalar::to_string() const {
  if (p_ != 0) return std::to_string(r_);
  return q_.get_str();
}

}  // namespace flagcover
