#include "flagcover/generating_set.hpp"

#include <algorithm>

#include "flagcover/errors.hpp"

namespace flagcover {

std::string flag_name(std::size_t flag) {
  switch (flag) {
    case kU: return "U";
    case kV: return "V";
    case kW: return "W";
    default: return "F" + std::to_string(flag + 1);
  }
}

std::size_t parse_flag_name(const std::string& name) {
  if (name == "U") return kU;
  if (name == "V") return kV;
  if (name == "W") return kW;
  if (name.size() > 1 && name[0] == 'F') {
    try {
      std::size_t pos = 0;
      const unsigned long n = std::stoul(name.substr(1), &pos);
      if (pos == name.size() - 1 && n >= 1) return n - 1;
    } catch (const std::exception&) {
    }
  }
  throw InvalidArgument("unknown flag name '" + name + "'");
}

std::string to_string(const LayerRef& layer) {
  return flag_name(layer.flag) + std::to_string(layer.level);
}

std::vector<Vector> GeneratingSet::vectors() const {
  std::vector<Vector> out;
  out.reserve(sets.size());
  for (const auto& s : sets) out.push_back(s.witness);
  return out;
}

std::map<LayerRef, std::size_t> GeneratingSet::coverage() const {
  std::map<LayerRef, std::size_t> out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (const auto& layer : sets[i].layers) out.emplace(layer, i);
  }
  return out;
}

VerifyReport verify_generating_set(const FlagTuple& t, std::span<const Vector> vectors) {
  const std::size_t d = t.dim();
  VerifyReport report;
  report.slots = t.size() * d;
  for (std::size_t f = 0; f < t.size(); ++f) {
    std::vector<bool> hit(d + 1, false);
    for (const auto& v : vectors) {
      if (v.size() != d) throw DimensionMismatch("generating vector of wrong length");
      hit[t[f].level_of(v)] = true;
    }
    for (std::size_t level = 1; level <= d; ++level) {
      if (!hit[level]) report.missing.push_back({f, level});
    }
  }
  report.pass = report.missing.empty();
  return report;
}

VerifyReport verify_generating_set(const FlagTuple& t, const GeneratingSet& s) {
  const auto vectors = s.vectors();
  VerifyReport report = verify_generating_set(t, std::span<const Vector>(vectors));
  for (std::size_t i = 0; i < s.sets.size(); ++i) {
    for (const auto& layer : s.sets[i].layers) {
      if (layer.flag >= t.size() || layer.level < 1 || layer.level > t.dim() ||
          !t[layer.flag].is_new(s.sets[i].witness, layer.level)) {
        report.witness_errors.push_back("set " + std::to_string(i) + ": witness not new for " +
                                        to_string(layer));
      }
    }
  }
  report.pass = report.missing.empty() && report.witness_errors.empty();
  return report;
}

void check_layer_refs(const FlagTuple& t, std::span<const LayerRef> layers) {
  std::vector<bool> seen(t.size(), false);
  for (const auto& layer : layers) {
    if (layer.flag >= t.size() || layer.level < 1 || layer.level > t.dim()) {
      throw InvalidArgument("layer " + to_string(layer) + " out of range");
    }
    if (seen[layer.flag]) {
      throw InvalidArgument("two layers from flag " + flag_name(layer.flag));
    }
    seen[layer.flag] = true;
  }
}

Subspace layer_intersection(const FlagTuple& t, std::span<const LayerRef> layers) {
  Subspace meet = Subspace::whole(t.field(), t.dim());
  for (const auto& layer : layers) meet = intersect(meet, t[layer.flag].layer(layer.level));
  return meet;
}

std::optional<Vector> find_witness(const FlagTuple& t, std::span<const LayerRef> layers) {
  check_layer_refs(t, layers);
  const Subspace meet = layer_intersection(t, layers);
  std::vector<Subspace> lowered;
  for (const auto& layer : layers) lowered.push_back(t[layer.flag].layer(layer.level - 1));
  try {
    return avoid_subspaces(meet, lowered);
  } catch (const CoverageImpossible&) {
    return std::nullopt;
  } catch (const FieldTooSmall&) {
    return std::nullopt;
  }
}

bool is_compatible(const FlagTuple& t, std::span<const LayerRef> layers) {
  check_layer_refs(t, layers);
  const Subspace meet = layer_intersection(t, layers);
  for (const auto& layer : layers) {
    if (intersection_dim(meet, t[layer.flag].layer(layer.level - 1)) >= meet.dim()) {
      return false;
    }
  }
  const auto order = t.field().order();
  if (!order || layers.size() <= *order) return true;
  return find_witness(t, layers).has_value();
}

}  // namespace flagcover
