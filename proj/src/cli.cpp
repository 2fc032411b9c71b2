#include "asd/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "asd/builtins.hpp"
#include "asd/interval_basis.hpp"
#include "asd/matrix.hpp"
#include "asd/nucleus.hpp"
#include "asd/presets.hpp"
#include "asd/realcalc.hpp"

namespace asd {

namespace {

using json = nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int exit_for(const AxiomReport& rep) {
  if (rep.passed()) return kExitPass;
  if (rep.has_refutation()) return kExitCounterexample;
  return kExitExhausted;
}

std::optional<AbstractBasis<IntervalCode>> interval_by_name(const std::string& name) {
  if (name == "real-line") return real_line_basis();
  if (name == "unit-interval") return unit_interval_basis();
  if (name == "margin-interval") return margin_interval_basis(make_rational(1, 4));
  if (name == "closed-containment") return closed_containment_basis();
  return std::nullopt;
}

FiniteBasis finite_by_name(const std::string& ref) {
  try {
    return preset_basis(ref);
  } catch (const std::invalid_argument&) {
  }
  if (std::filesystem::exists(ref)) return load_finite_basis_file(ref);
  throw UsageError("unknown basis '" + ref + "' (not a preset and no such file)");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int find_code(const FiniteBasis& b, const json& j) {
  if (j.is_number_integer()) {
    int i = j.get<int>();
    if (i < 0 || i >= b.size()) throw UsageError("code index out of range");
    return i;
  }
  const std::string name = j.get<std::string>();
  for (int i = 0; i < b.size(); ++i)
    if (b.code_name(i) == name) return i;
  throw UsageError("unknown code '" + name + "' in " + b.name);
}

std::vector<Rational> params_of(const json& spec) {
  std::vector<Rational> out;
  if (!spec.contains("params")) return out;
  for (const auto& p : spec["params"]) out.push_back(parse_rational(p.is_string() ? p.get<std::string>() : p.dump()));
  return out;
}

struct Options {
  std::size_t samples = 10000;
  std::uint64_t seed = 0;
  bool exhaustive = false;
};

template <class S, class T>
int run_matrix(const Matrix<S, T>& rho, const Universe& u, std::ostream& out) {
  AxiomReport rep = validate_matrix(rho, u);
  out << rep.summary();
  out << (rep.passed() ? "matrix rules: pass\n" : "matrix rules: FAIL\n");
  return exit_for(rep);
}

int validate_matrix_file(const std::string& path, const Options& opt, std::ostream& out) {
  json spec;
  try {
    spec = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("matrix file: ") + e.what());
  }
  const Universe sampled = Universe::random(opt.samples, opt.seed);
  if (spec.contains("expr")) {
    auto e = parse_expr(spec["expr"].get<std::string>());
    return run_matrix(compile(*e), sampled, out);
  }
  if (spec.contains("builtin")) {
    const std::string kind = spec["builtin"].get<std::string>();
    auto params = params_of(spec);
    if (kind == "constant-true") return run_matrix(constant_true_matrix(), sampled, out);
    if (kind == "top-only") return run_matrix(top_only_matrix(), sampled, out);
    if (kind == "choice") {
      if (params.size() != 2) throw UsageError("choice takes two parameters");
      return run_matrix(choice_matrix(params[0], params[1]), sampled, out);
    }
    Builtin b;
    try {
      b = parse_builtin(kind);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    if (builtin_binary(b)) {
      if (!params.empty()) throw UsageError(kind + " takes no parameters");
      return run_matrix(builtin_plane_matrix(b), sampled, out);
    }
    return run_matrix(builtin_real_matrix(b, params), sampled, out);
  }
  if (spec.contains("source") && spec.contains("target")) {
    auto src = std::make_shared<const FiniteBasis>(finite_by_name(spec["source"].get<std::string>()));
    auto tgt = std::make_shared<const FiniteBasis>(finite_by_name(spec["target"].get<std::string>()));
    if (spec.contains("relation")) {
      if (spec["relation"] != "waybelow" || src->name != tgt->name)
        throw UsageError("relation must be \"waybelow\" on one basis");
      return run_matrix(identity(to_abstract(src)), Universe::all(), out);
    }
    if (!spec.contains("pairs")) throw UsageError("matrix file needs \"pairs\", \"relation\", \"builtin\" or \"expr\"");
    std::vector<std::pair<int, int>> pairs;
    for (const auto& p : spec["pairs"]) {
      if (!p.is_array() || p.size() != 2) throw UsageError("each pair is [n, m]");
      pairs.emplace_back(find_code(*src, p[0]), find_code(*tgt, p[1]));
    }
    std::string name = spec.value("name", std::filesystem::path(path).stem().string());
    return run_matrix(pair_list_matrix(name, src, tgt, pairs), Universe::all(), out);
  }
  throw UsageError("matrix file needs \"pairs\", \"relation\", \"builtin\" or \"expr\"");
}

int check_basis(const std::string& ref, const Options& opt, bool samples_given, std::ostream& out) {
  if (auto b = interval_by_name(ref)) {
    if (opt.exhaustive) throw UsageError(ref + " has an infinite carrier; use --samples");
    AxiomReport rep = check_axioms(*b, Universe::random(opt.samples, opt.seed));
    out << rep.summary();
    Classification c = classify(*b, Universe::random(std::min<std::size_t>(opt.samples, 2000), opt.seed));
    out << "compact: " << (c.compact ? "yes" : "no") << "\n";
    if (c.compact) out << "filter: " << (c.filter ? "yes" : "no") << "\n";
    return exit_for(rep);
  }
  FiniteBasis fb = finite_by_name(ref);
  AxiomReport rep(fb.name);
  if (samples_given && !opt.exhaustive) {
    auto ab = to_abstract(std::make_shared<const FiniteBasis>(fb));
    rep = detail::check_axioms_sampled(ab, Universe::random(opt.samples, opt.seed), SearchBound{});
  } else {
    rep = check_axioms(fb);
  }
  out << rep.summary();
  auto ab = to_abstract(std::make_shared<const FiniteBasis>(fb));
  Classification c = classify(ab, Universe::all());
  out << "compact: " << (c.compact ? "yes" : "no") << "\n";
  if (c.compact) out << "filter: " << (c.filter ? "yes" : "no") << "\n";
  return exit_for(rep);
}

int check_nucleus(const std::string& ref, int max_card, std::optional<std::size_t> sampled, std::uint64_t seed,
                  const std::string& universe, std::ostream& out) {
  FiniteBasis fb = finite_by_name(ref);
  NucleusOptions opt;
  opt.literal_cap = max_card;
  opt.sampled = sampled;
  opt.seed = seed;
  if (universe == "all")
    opt.universe = PhiUniverse::all;
  else if (universe != "monotone")
    throw UsageError("--universe must be monotone or all");
  NucleusEngine engine(fb, max_card);
  out << fb.name << ": " << fb.size() << " codes, " << (engine.literal() ? "literal" : "reduced") << " engine\n";
  AxiomReport rep = engine.check_laws(opt);
  rep.declare("recovered-waybelow");
  for (int n = 0; n < fb.size(); ++n)
    for (int m = 0; m < fb.size(); ++m)
      rep.record("recovered-waybelow", engine.recovered_waybelow(n, m) == fb.waybelow(n, m),
                 {fb.code_name(n), fb.code_name(m)});
  out << rep.summary();
  return exit_for(rep);
}

int check_points(const std::string& ref, std::ostream& out) {
  FiniteBasis fb = finite_by_name(ref);
  AxiomReport axioms = check_axioms(fb);
  if (!axioms.passed()) {
    out << axioms.summary() << "basis fails the axioms; the points theorem does not apply\n";
    return kExitCounterexample;
  }
  AxiomReport rep = points_theorem_check(fb);
  out << rep.summary();
  NucleusEngine engine(fb);
  int points = 0;
  for (SigmaNPoint xi = 0; xi < (SigmaNPoint{1} << fb.size()); ++xi)
    if (engine.is_admissible(xi)) {
      out << "  point " << engine.show_point(xi) << "\n";
      ++points;
    }
  out << points << " admissible point(s)\n";
  return exit_for(rep);
}

int eval_cmd(const std::string& text, const std::string& at, const std::string& eps, int max_depth, bool as_json,
             std::ostream& out) {
  auto e = parse_expr(text);
  Rational x = parse_rational(at);
  Rational q = parse_rational(eps);
  if (q <= 0) throw UsageError("--eps must be positive");
  Evaluation r = evaluate(*e, x, q, max_depth);
  if (as_json) {
    json j{{"expr", print_expr(*e)}, {"at", to_string(x)}, {"eps", to_string(q)},
           {"lower", to_string(r.interval.lower)}, {"upper", to_string(r.interval.upper)}, {"depth", r.depth}};
    out << j.dump() << "\n";
  } else {
    out << "[" << to_string(r.interval.lower) << ", " << to_string(r.interval.upper) << "]\n";
  }
  return kExitPass;
}

}  // namespace

int cli_main(int argc, char** argv) { return cli_main(argc, argv, std::cout, std::cerr); }

int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Abstract bases, nuclei, matrices and exact real evaluation"};
  app.name("asd");
  app.require_subcommand(1);

  std::string expr_text, at, eps, basis_ref, file;
  int max_depth = 64;
  bool as_json = false;
  Options opt;
  int max_card = NucleusEngine::kLiteralMax;
  std::size_t nucleus_samples = 0;
  std::string universe = "monotone";

  auto* eval = app.add_subcommand("eval", "Evaluate an expression at a rational point to precision eps");
  eval->add_option("expr", expr_text, "Expression in x")->required();
  eval->add_option("--at", at, "Rational point")->required();
  eval->add_option("--eps", eps, "Positive rational half-width")->required();
  eval->add_option("--max-depth", max_depth, "Largest d tried for δ = 2^-d");
  eval->add_flag("--json", as_json, "Emit JSON");

  auto* cb = app.add_subcommand("check-basis", "Check the basis axioms");
  cb->add_option("basis", basis_ref, "Builtin name, preset or JSON file")->required();
  auto* samples_opt = cb->add_option("--samples", opt.samples, "Random triples for sampled checks");
  cb->add_flag("--exhaustive", opt.exhaustive, "Exhaustive check (finite carriers)");
  cb->add_option("--seed", opt.seed, "Random seed");

  auto* cn = app.add_subcommand("check-nucleus", "Check the nucleus laws and recovered way-below");
  cn->add_option("basis", basis_ref, "Preset or JSON file")->required();
  cn->add_option("--max-card", max_card, "Largest carrier evaluated by literal enumeration")
      ->check(CLI::Range(0, NucleusEngine::kLiteralMax));
  auto* sampled_opt = cn->add_option("--sampled", nucleus_samples, "Random predicate pairs instead of all pairs");
  cn->add_option("--seed", opt.seed, "Random seed");
  cn->add_option("--universe", universe, "Predicate universe: monotone or all");

  auto* cp = app.add_subcommand("check-points", "Admissible points versus rounded lattice homomorphisms");
  cp->add_option("basis", basis_ref, "Preset or JSON file")->required();

  auto* vm = app.add_subcommand("validate-matrix", "Check the matrix rules for a matrix file");
  vm->add_option("file", file, "Matrix JSON file")->required();
  vm->add_option("--samples", opt.samples, "Random instances for infinite carriers");
  vm->add_option("--seed", opt.seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*eval) return eval_cmd(expr_text, at, eps, max_depth, as_json, out);
    if (*cb) return check_basis(basis_ref, opt, samples_opt->count() > 0, out);
    if (*cn) {
      std::optional<std::size_t> sampled;
      if (sampled_opt->count() > 0) sampled = nucleus_samples;
      return check_nucleus(basis_ref, max_card, sampled, opt.seed, universe, out);
    }
    if (*cp) return check_points(basis_ref, out);
    if (*vm) return validate_matrix_file(file, opt, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const EvaluationExhausted& e) {
    err << "exhausted: " << e.what() << "\n";
    return kExitExhausted;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace asd
