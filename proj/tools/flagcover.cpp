// flagcover: generate flag tuples, synthesize generating sets, analyze triples,
// run the exact oracle, and verify certificates. All files are JSON.
//
// Exit codes: 0 success, 1 verify found a non-generating set, 2 invalid
// parameters, 3 retry exhaustion, 4 internal failure, 5 instance too large.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "flagcover/bruhat.hpp"
#include "flagcover/certify.hpp"
#include "flagcover/cover3.hpp"
#include "flagcover/errors.hpp"
#include "flagcover/io.hpp"
#include "flagcover/multiflag.hpp"
#include "flagcover/oracle.hpp"
#include "flagcover/prism.hpp"
#include "flagcover/svg.hpp"

namespace fc = flagcover;
using fc::io::json;

namespace {

struct RunConfig {
  std::string kind;
  std::vector<std::string> inputs;
  std::string field = "rational";
  bool field_given = false;
  std::size_t m = 3;
  std::size_t d = 0;
  std::optional<std::uint64_t> seed;
  long long coeff_bound = 10;
  std::string out;
  std::string svg;
  bool debug_asserts = false;
};

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    fc::io::write_text(cfg.out, text);
  }
}

// Summary lines go to stdout unless the JSON payload already does.
std::ostream& summary(const RunConfig& cfg) { return cfg.out.empty() ? std::cerr : std::cout; }

fc::FlagTuple load_tuple(const RunConfig& cfg, const std::string& path) {
  fc::FlagTuple t = fc::io::flags_from_json(fc::io::read_json(path));
  if (cfg.field_given) {
    const fc::Field target = fc::Field::parse(cfg.field);
    if (target != t.field()) {
      if (!t.field().is_rational()) {
        throw fc::InvalidArgument("cannot move a prime-field tuple to " + target.name());
      }
      t = fc::reduce_mod(t, target);
    }
  }
  return t;
}

std::uint64_t require_seed(const RunConfig& cfg) {
  if (!cfg.seed) throw fc::InvalidArgument("--seed is required for randomized generation");
  return *cfg.seed;
}

void require_d(const RunConfig& cfg) {
  if (cfg.d == 0) throw fc::InvalidArgument("--d must be at least 1");
  if (cfg.m == 0) throw fc::InvalidArgument("--m must be at least 1");
}

int cmd_gen(const RunConfig& cfg) {
  const fc::Field field = fc::Field::parse(cfg.field);
  json j;
  if (cfg.kind == "random") {
    require_d(cfg);
    j = fc::io::flags_to_json(
        fc::random_tuple(cfg.m, cfg.d, field, require_seed(cfg), cfg.coeff_bound));
  } else if (cfg.kind == "transverse") {
    require_d(cfg);
    auto sample =
        fc::random_transverse_tuple(cfg.m, cfg.d, field, require_seed(cfg), cfg.coeff_bound);
    j = fc::io::flags_to_json(sample.tuple);
    j["attempts"] = sample.attempts;
    summary(cfg) << "attempts=" << sample.attempts << "\n";
  } else if (cfg.kind == "standard") {
    require_d(cfg);
    std::vector<fc::Flag> flags(cfg.m, fc::Flag::standard(cfg.d, field));
    j = fc::io::flags_to_json(fc::FlagTuple(std::move(flags)));
  } else if (cfg.kind == "directsum") {
    if (cfg.inputs.size() != 2) throw fc::InvalidArgument("directsum needs two flag files");
    const auto a = fc::io::flags_from_json(fc::io::read_json(cfg.inputs[0]));
    const auto b = fc::io::flags_from_json(fc::io::read_json(cfg.inputs[1]));
    j = fc::io::flags_to_json(fc::direct_sum(a, b));
  } else {
    throw fc::InvalidArgument("unknown generator '" + cfg.kind +
                              "' (random, transverse, directsum, standard)");
  }
  emit(cfg, j.dump(2) + "\n");
  return 0;
}

int cmd_synth(const RunConfig& cfg) {
  const auto t = load_tuple(cfg, cfg.inputs.at(0));
  const auto gens = fc::synth_m(t, fc::Synth3Options{cfg.debug_asserts});
  const auto bound = fc::mu_formula(t.size(), t.dim()).value;
  const bool pass = fc::verify_generating_set(t, gens).pass && gens.size() <= bound;
  emit(cfg, fc::io::generating_set_to_json(gens).dump(2) + "\n");
  summary(cfg) << "m=" << t.size() << " d=" << t.dim() << " size=" << gens.size()
               << " bound=" << bound << "\n";
  return pass ? 0 : 4;
}

int cmd_analyze(const RunConfig& cfg) {
  const auto t = load_tuple(cfg, cfg.inputs.at(0));
  if (t.size() != 3) {
    throw fc::InvalidArgument("analyze needs exactly three flags, got " +
                              std::to_string(t.size()));
  }
  const std::size_t d = t.dim();
  const auto detail = fc::synth3_detailed(t, fc::Synth3Options{cfg.debug_asserts});
  const auto& g = detail.graph;
  const auto& c = detail.classification;
  const auto verdict = fc::is_equality_candidate(g, t);
  const auto path = fc::build_lattice_path(c, d);
  const auto report = fc::evaluate_costs(path, fc::dim_grid(t), c);

  json j = fc::io::graph_to_json(g);
  j["classification"] = fc::io::classification_to_json(c);
  j["equality_candidate"] = {{"value", verdict.candidate}, {"diagnostics", verdict.diagnostics}};
  j["certificate"] = fc::io::certificate_to_json(report);
  j["synth3_size"] = detail.generators.size();
  emit(cfg, j.dump(2) + "\n");

  std::ostream& os = summary(cfg);
  os << "cycles:";
  for (const auto& cyc : g.cycles()) os << ' ' << cyc.length();
  os << "\n|A|=" << c.a_size() << " |B|=" << c.b_size() << " |C|=" << c.c_size() << "\n";
  os << "total cost = " << report.cost_a + report.cost_b + report.cost_c << "\n";
  os << "equality candidate = " << (verdict.candidate ? "true" : "false") << "\n";
  os << "0.5*|A| + 0.333...*|B| >= d : " << (report.pass ? "PASS" : "FAIL") << "\n";

  if (!cfg.svg.empty()) fc::io::write_text(cfg.svg, fc::render_prism_svg(t, g));
  return report.pass ? 0 : 4;
}

int cmd_oracle(const RunConfig& cfg) {
  const auto t = load_tuple(cfg, cfg.inputs.at(0));
  const auto result = fc::mu_exact(t);
  json j = fc::io::generating_set_to_json(result.generators);
  j["mu"] = result.mu;
  emit(cfg, j.dump(2) + "\n");
  summary(cfg) << "mu=" << result.mu << "\n";
  return fc::verify_generating_set(t, result.generators).pass ? 0 : 4;
}

int cmd_mu(const RunConfig& cfg) {
  require_d(cfg);
  std::cout << fc::mu_formula(cfg.m, cfg.d).value << "\n";
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  if (cfg.inputs.size() != 2) throw fc::InvalidArgument("verify needs a flag file and a set file");
  const auto t = load_tuple(cfg, cfg.inputs[0]);
  const auto gens =
      fc::io::generating_set_from_json(fc::io::read_json(cfg.inputs[1]), t.field(), t.dim());
  for (const auto& set : gens.sets) fc::check_layer_refs(t, set.layers);
  const auto report = fc::verify_generating_set(t, gens);
  std::cout << (report.pass ? "PASS" : "FAIL") << " size=" << gens.size() << "\n";
  for (const auto& layer : report.missing) std::cout << "missing " << fc::to_string(layer) << "\n";
  for (const auto& e : report.witness_errors) std::cout << "witness " << e << "\n";
  return report.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simultaneous generating sets for complete flags"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_field = [&](CLI::App* sub) {
    sub->add_option("--field", cfg.field, "rational or fp:<p>")
        ->each([&](const std::string&) { cfg.field_given = true; });
  };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", cfg.out, "Output file"); };

  auto* gen = app.add_subcommand("gen", "Generate a flag tuple");
  gen->add_option("kind", cfg.kind, "random, transverse, directsum or standard")->required();
  gen->add_option("inputs", cfg.inputs, "Input flag files (directsum)");
  gen->add_option("--m", cfg.m, "Number of flags");
  gen->add_option("--d", cfg.d, "Ambient dimension");
  gen->add_option("--seed", cfg.seed, "Random seed");
  gen->add_option("--coeff-bound", cfg.coeff_bound, "Entries drawn from [-b, b]");
  add_field(gen);
  add_out(gen);

  auto* synth = app.add_subcommand("synth", "Synthesize a generating set");
  synth->add_option("input", cfg.inputs, "Flag file")->required()->expected(1);
  synth->add_flag("--debug-asserts", cfg.debug_asserts, "Also check the cost certificate");
  add_field(synth);
  add_out(synth);

  auto* analyze = app.add_subcommand("analyze", "Prism graph, classification and certificate");
  analyze->add_option("input", cfg.inputs, "Flag file (three flags)")->required()->expected(1);
  analyze->add_option("--svg", cfg.svg, "Write the prism diagram here");
  analyze->add_flag("--debug-asserts", cfg.debug_asserts, "Check bounds while synthesizing");
  add_field(analyze);
  add_out(analyze);

  auto* oracle = app.add_subcommand("oracle", "Exact minimum by exhaustive search");
  oracle->add_option("input", cfg.inputs, "Flag file")->required()->expected(1);
  add_field(oracle);
  add_out(oracle);

  auto* mu = app.add_subcommand("mu", "Print the worst-case value mu(m, d)");
  mu->add_option("--m", cfg.m, "Number of flags")->required();
  mu->add_option("--d", cfg.d, "Ambient dimension")->required();

  auto* verify = app.add_subcommand("verify", "Check a generating set against flags");
  verify->add_option("inputs", cfg.inputs, "Flag file and generating-set file")
      ->required()
      ->expected(2);
  add_field(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen) return cmd_gen(cfg);
    if (*synth) return cmd_synth(cfg);
    if (*analyze) return cmd_analyze(cfg);
    if (*oracle) return cmd_oracle(cfg);
    if (*mu) return cmd_mu(cfg);
    if (*verify) return cmd_verify(cfg);
  } catch (const fc::RetryExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const fc::InstanceTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const fc::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const fc::DimensionMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const fc::ReductionFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const fc::NotTransverse& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 2;
}
