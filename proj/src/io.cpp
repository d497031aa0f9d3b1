#include "flagcover/io.hpp"

#include <fstream>

#include "flagcover/errors.hpp"

namespace flagcover::io {

namespace {

std::string scalar_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw InvalidArgument("scalar must be a string or an integer, got " + j.dump());
}

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InvalidArgument(std::string("missing key '") + key + "'");
  }
  return j.at(key);
}

std::string reduced_fraction(std::size_t num, std::size_t den) {
  mpq_class q(static_cast<unsigned long>(num), static_cast<unsigned long>(den));
  q.canonicalize();
  return q.get_str();
}

json cycle_vertices(const Cycle& c) {
  json out = json::array();
  for (const auto& v : c.vertices) out.push_back(to_string(v));
  return out;
}

}  // namespace

json field_to_json(const Field& field) {
  if (field.is_rational()) return "rational";
  return json{{"prime", field.characteristic()}};
}

Field field_from_json(const json& j) {
  if (j.is_string()) return Field::parse(j.get<std::string>());
  if (j.is_object() && j.contains("prime") && j.at("prime").is_number_unsigned()) {
    return Field::prime(j.at("prime").get<std::uint64_t>());
  }
  throw InvalidArgument("field must be \"rational\" or {\"prime\": p}");
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(s.to_string());
  return out;
}

Vector vector_from_json(const json& j, const Field& field, std::size_t d) {
  if (!j.is_array() || j.size() != d) {
    throw InvalidArgument("vector must be a list of " + std::to_string(d) + " scalars");
  }
  Vector v;
  for (const auto& x : j) v.push_back(field.parse_scalar(scalar_text(x)));
  return v;
}

json flags_to_json(const FlagTuple& t) {
  json flags = json::array();
  for (const auto& f : t.flags()) {
    json columns = json::array();
    for (const auto& col : f.basis().columns()) columns.push_back(vector_to_json(col));
    flags.push_back(std::move(columns));
  }
  return json{{"field", field_to_json(t.field())}, {"d", t.dim()}, {"flags", std::move(flags)}};
}

FlagTuple flags_from_json(const json& j) {
  const Field field = field_from_json(require(j, "field"));
  const json& dj = require(j, "d");
  if (!dj.is_number_unsigned() || dj.get<std::size_t>() == 0) {
    throw InvalidArgument("d must be a positive integer");
  }
  const auto d = dj.get<std::size_t>();
  const json& fj = require(j, "flags");
  if (!fj.is_array() || fj.empty()) throw InvalidArgument("flags must be a nonempty list");
  std::vector<Flag> flags;
  for (const auto& matrix : fj) {
    if (!matrix.is_array() || matrix.size() != d) {
      throw InvalidArgument("each flag must list " + std::to_string(d) + " columns");
    }
    std::vector<Vector> columns;
    for (const auto& col : matrix) columns.push_back(vector_from_json(col, field, d));
    flags.emplace_back(Matrix::from_columns(field, d, columns));
  }
  return FlagTuple(std::move(flags));
}

json generating_set_to_json(const GeneratingSet& s) {
  json sets = json::array();
  for (const auto& set : s.sets) {
    json layers = json::array();
    for (const auto& l : set.layers) {
      layers.push_back(json{{"flag", flag_name(l.flag)}, {"level", l.level}});
    }
    sets.push_back(json{{"layers", std::move(layers)}, {"witness", vector_to_json(set.witness)}});
  }
  return json{{"size", s.size()}, {"sets", std::move(sets)}};
}

GeneratingSet generating_set_from_json(const json& j, const Field& field, std::size_t d) {
  GeneratingSet out;
  const json& sets = require(j, "sets");
  if (!sets.is_array()) throw InvalidArgument("sets must be a list");
  for (const auto& sj : sets) {
    CompatibleSet set;
    for (const auto& lj : require(sj, "layers")) {
      set.layers.push_back({parse_flag_name(require(lj, "flag").get<std::string>()),
                            require(lj, "level").get<std::size_t>()});
    }
    set.witness = vector_from_json(require(sj, "witness"), field, d);
    out.sets.push_back(std::move(set));
  }
  if (j.contains("size") && j.at("size").get<std::size_t>() != out.size()) {
    throw InvalidArgument("size field disagrees with the number of sets");
  }
  return out;
}

json classification_to_json(const CycleClassification& c) {
  auto units = [](const std::vector<CoverUnit>& group) {
    json out = json::array();
    for (const auto& u : group) {
      json cycles = json::array();
      for (const auto& cyc : u.cycles) cycles.push_back(cycle_vertices(cyc));
      out.push_back(json{{"kind", to_string(u.kind)}, {"cycles", std::move(cycles)}});
    }
    return out;
  };
  return json{{"A", units(c.A)},
              {"B", units(c.B)},
              {"C", units(c.C)},
              {"sizes", {{"A", c.a_size()}, {"B", c.b_size()}, {"C", c.c_size()}}}};
}

json certificate_to_json(const CostReport& r) {
  json cycles = json::array();
  for (const auto& uc : r.cycles) {
    cycles.push_back(json{{"kind", to_string(uc.kind)},
                          {"length", uc.length},
                          {"cost", uc.cost},
                          {"bound", uc.bound},
                          {"ok", uc.ok}});
  }
  return json{
      {"d", r.d},
      {"sizes", {{"A", r.a_size}, {"B", r.b_size}, {"C", r.c_size}}},
      {"costs",
       {{"A", r.cost_a}, {"B", r.cost_b}, {"C", r.cost_c}, {"total", r.cost_a + r.cost_b + r.cost_c}}},
      {"cycles", std::move(cycles)},
      {"inequality",
       {{"lhs", reduced_fraction(r.lhs_times_6, 6)},
        {"rhs", r.d},
        {"holds", r.lhs_times_6 >= r.rhs_times_6}}},
      {"pass", r.pass},
      {"violations", r.violations}};
}

json graph_to_json(const PrismGraph& g) {
  json cycles = json::array();
  for (const auto& c : g.cycles()) {
    cycles.push_back(json{{"length", c.length()}, {"vertices", cycle_vertices(c)}});
  }
  return json{{"d", g.dim()},
              {"sigma",
               {{"UV", g.sigma_uv().sigma}, {"VW", g.sigma_vw().sigma}, {"WU", g.sigma_wu().sigma}}},
              {"cycles", std::move(cycles)}};
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidArgument("malformed JSON in " + path.string() + ": " + e.what());
  }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InvalidArgument("cannot write " + tmp.string());
    out << text;
  }
  std::filesystem::rename(tmp, path);
}

void write_json(const std::filesystem::path& path, const json& j) {
  write_text(path, j.dump(2) + "\n");
}

}  // namespace flagcover::io
