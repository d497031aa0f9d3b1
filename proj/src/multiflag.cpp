#include "flagcover/multiflag.hpp"

#include "flagcover/bruhat.hpp"
#include "flagcover/errors.hpp"

namespace flagcover {

MuValue mu_formula(std::size_t m, std::size_t d) {
  if (m == 0 || d == 0) throw InvalidArgument("mu(m, d) needs m, d >= 1");
  MuValue mu{m, d, 0};
  if (m == 1 || d == 1) {
    mu.value = d;
  } else if (m % 2 == 0) {
    mu.value = m * d / 2;
  } else {
    // md/2 - d/2 = (m-1)d/2 is an integer for odd m.
    mu.value = (m - 1) * d / 2 + 2 * d / 3;
  }
  return mu;
}

namespace {

void append(GeneratingSet& into, GeneratingSet&& from) {
  for (auto& s : from.sets) into.sets.push_back(std::move(s));
}

CompatibleSet pick(const FlagTuple& t, std::vector<LayerRef> layers) {
  // Transversality makes each of these intersections one-dimensional and
  // outside the lowered layers.
  if (layers.size() == 2) {
    const Subspace meet = layer_intersection(t, layers);
    if (meet.dim() != 1) {
      throw NotTransverse("dim(" + to_string(layers[0]) + " ∩ " + to_string(layers[1]) +
                          ") = " + std::to_string(meet.dim()) + ", expected 1");
    }
  }
  auto witness = find_witness(t, layers);
  if (!witness) {
    throw NotTransverse("no common new vector for the reversal pairing at " +
                        to_string(layers[0]));
  }
  return {std::move(layers), std::move(*witness)};
}

}  // namespace

GeneratingSet synth_m(const FlagTuple& t, const Synth3Options& options) {
  const std::size_t m = t.size();
  GeneratingSet out;
  std::size_t next = 0;
  if (m == 1) return two_flag_generators(t, 0, 0);
  if (t.dim() == 1) {
    // Every layer is the whole line, so one vector serves all flags.
    CompatibleSet all;
    for (std::size_t f = 0; f < m; ++f) all.layers.push_back({f, 1});
    all.witness = {t.field().one()};
    out.sets.push_back(std::move(all));
    return out;
  }
  if (m % 2 == 1) {
    const FlagTuple first3({t[0], t[1], t[2]});
    append(out, synth3(first3, options));
    next = 3;
  }
  for (; next + 1 < m; next += 2) append(out, two_flag_generators(t, next, next + 1));

  const VerifyReport report = verify_generating_set(t, out);
  if (!report.pass) throw InternalInconsistency("synth_m output does not generate the tuple");
  if (out.size() > mu_formula(m, t.dim()).value) {
    throw InternalInconsistency("synth_m exceeded mu(m, d)");
  }
  return out;
}

GeneratingSet transverse_synth(const FlagTuple& t, bool require_transverse) {
  const std::size_t m = t.size();
  const std::size_t d = t.dim();
  if (m != 2 && m != 3) throw InvalidArgument("transverse_synth handles 2 or 3 flags");
  if (require_transverse && !is_transverse(t)) throw NotTransverse("flags are not transverse");
  GeneratingSet out;
  if (m == 2) {
    for (std::size_t i = 1; i <= d; ++i) out.sets.push_back(pick(t, {{kU, i}, {kV, d + 1 - i}}));
    return out;
  }
  for (std::size_t i = 1; 2 * i <= d; ++i) {
    out.sets.push_back(pick(t, {{kU, i}, {kV, d + 1 - i}}));
    out.sets.push_back(pick(t, {{kV, i}, {kW, d + 1 - i}}));
    out.sets.push_back(pick(t, {{kW, i}, {kU, d + 1 - i}}));
  }
  if (d % 2 == 1) {
    const std::size_t mid = (d + 1) / 2;
    out.sets.push_back(pick(t, {{kU, mid}, {kV, mid}}));
    out.sets.push_back(pick(t, {{kW, mid}}));
  }
  return out;
}

}  // namespace flagcover
