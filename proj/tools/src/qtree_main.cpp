// Command-line front end: expression reduction, named verification suites,
// classical enumeration, numerical representation checks and the expression
// transformers. Exit codes: 0 pass, 1 fail/refuted, 2 usage error,
// 3 budget exhausted.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "qtree/classical.hpp"
#include "qtree/fincon.hpp"
#include "qtree/hopf.hpp"
#include "qtree/parser.hpp"
#include "qtree/reps.hpp"
#include "qtree/selfsim.hpp"

using namespace qtree;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Options {
  int k = 2;
  int d = 2;
  int g = 2;
  int wmax = 2;
  int samples = 25;
  std::uint64_t seed = 1;
  std::uint64_t budget = 1'000'000;
  double tol = 1e-10;
  std::string json_path;
  std::string preset;
  std::string relator_file;
  bool timings = false;

  SuiteConfig suite_config() const {
    SuiteConfig cfg;
    cfg.k = k;
    cfg.d = d;
    cfg.g = g;
    cfg.wmax = wmax;
    cfg.samples = samples;
    cfg.seed = seed;
    cfg.budget = budget;
    cfg.tol = tol;
    return cfg;
  }
};

void add_common_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("-k,--alphabet", opt.k, "alphabet size")
      ->check(CLI::Range(2, 10));
  cmd->add_option("-d,--depth", opt.d, "generator depth bound");
  cmd->add_option("-g,--degree", opt.g, "random monomial degree bound");
  cmd->add_option("--wmax", opt.wmax, "restriction word length bound");
  cmd->add_option("--samples", opt.samples, "random monomials per suite");
  cmd->add_option("--seed", opt.seed, "PRNG seed recorded in reports");
  cmd->add_option("--budget", opt.budget, "rewrite step budget per call");
  cmd->add_option("--tol", opt.tol, "numeric tolerance");
  cmd->add_option("--json", opt.json_path, "write the JSON report here");
  cmd->add_flag("--timings", opt.timings,
                "include wall-clock timings in reports (non-deterministic)");
}

void emit(const json& j, const Options& opt) {
  std::cout << j.dump(2) << "\n";
  if (!opt.json_path.empty()) {
    std::ofstream out(opt.json_path);
    out << j.dump(2) << "\n";
  }
}

RelatorSet load_relators(const Options& opt) {
  if (!opt.relator_file.empty()) {
    std::ifstream in(opt.relator_file);
    if (!in) throw std::runtime_error("cannot open " + opt.relator_file);
    json j;
    in >> j;
    return RelatorSet::from_json(j);
  }
  if (!opt.preset.empty()) return RelatorSet::preset(opt.preset, opt.k);
  return RelatorSet::zero(opt.k);
}

int report_exit(const VerificationReport& report) {
  if (report.pass()) return kExitPass;
  for (const auto& id : report.identities) {
    if (id.certificate == ReportCert::BudgetExhausted) return kExitBudget;
  }
  return kExitFail;
}

json portrait_json(const Portrait& g) {
  json j = json::object();
  for (int l = 0; l < g.depth(); ++l) {
    for (const Word& w : enumerate_words(Alphabet(g.k()), l)) {
      json arr = json::array();
      for (int x = 0; x < g.k(); ++x) arr.push_back(g.label(w).apply(x));
      j[w.str()] = std::move(arr);
    }
  }
  return j;
}

int cmd_reduce(const Options& opt, const std::string& expr) {
  Element e = parse_element(expr, Alphabet(opt.k));
  ReductionOutcome out = prove_zero(e, SearchPolicy{{opt.budget}, 1});
  std::cout << to_string(out.result) << "\n"
            << to_string(out.certificate) << "\n";
  if (!opt.json_path.empty()) {
    json j;
    j["input"] = expr;
    j["k"] = opt.k;
    j["result"] = to_string(out.result);
    j["certificate"] = to_string(out.certificate);
    j["trace"] = out.trace;
    std::ofstream f(opt.json_path);
    f << j.dump(2) << "\n";
  }
  return out.certificate == Certificate::BudgetExhausted ? kExitBudget
                                                         : kExitPass;
}

int run_suites(const Options& opt, const std::string& name) {
  SuiteConfig cfg = opt.suite_config();
  std::vector<VerificationReport> reports;
  auto want = [&name](const char* suite) {
    return name == suite || name == "all";
  };
  if (want("cqg-axioms")) reports.push_back(verify_cqg_axioms(cfg));
  if (want("coaction")) reports.push_back(verify_coaction(cfg));
  if (want("hopf-laws")) reports.push_back(verify_hopf_laws(cfg));
  if (want("restriction")) reports.push_back(verify_restriction(cfg));
  if (want("sigma-kappa")) reports.push_back(verify_sigma_kappa(cfg));
  if (want("psi-axiom")) reports.push_back(verify_psi_axiom(cfg));
  if (want("delta-rho")) reports.push_back(verify_delta_rho(cfg));
  if (want("woronowicz-ideal")) {
    reports.push_back(verify_woronowicz_ideal(load_relators(opt), cfg));
  }
  if (want("wreath-iso")) {
    reports.push_back(verify_wreath_iso(load_relators(opt), cfg));
  }
  if (want("wreath-comult")) {
    reports.push_back(verify_wreath_comult(load_relators(opt), cfg));
  }
  if (want("duality")) reports.push_back(verify_duality(cfg));
  if (reports.empty()) {
    std::cerr << "unknown suite '" << name << "'\n";
    return kExitUsage;
  }
  json j;
  if (reports.size() == 1) {
    j = reports[0].to_json(opt.timings);
  } else {
    j = json::array();
    for (const auto& r : reports) j.push_back(r.to_json(opt.timings));
  }
  emit(j, opt);
  int exit_code = kExitPass;
  for (const auto& r : reports) {
    exit_code = std::max(exit_code, report_exit(r));
  }
  return exit_code;
}

int cmd_classical(const Options& opt, const std::string& action) {
  if (action == "count" || action == "enumerate") {
    std::vector<Portrait> group;
    std::uint64_t expected = 0;
    if (opt.preset.empty()) {
      group = enumerate_aut(opt.k, opt.d);
      expected = aut_count(opt.k, opt.d);
    } else {
      SubgroupSpec P = SubgroupSpec::by_name(opt.preset, opt.k);
      group = enumerate_gp(P, opt.d);
      expected = gp_count(P.elements().size(), opt.k, opt.d);
    }
    json j;
    j["k"] = opt.k;
    j["d"] = opt.d;
    if (!opt.preset.empty()) j["preset"] = opt.preset;
    j["count"] = group.size();
    j["formula"] = expected;
    if (action == "enumerate") {
      json list = json::array();
      for (const Portrait& g : group) list.push_back(portrait_json(g));
      j["portraits"] = std::move(list);
    }
    emit(j, opt);
    return group.size() == expected ? kExitPass : kExitFail;
  }
  if (action == "crosscheck") {
    // defining relations pointwise + span rank + structure-map duality
    auto group = enumerate_aut(opt.k, opt.d);
    bool relations_ok = true;
    Alphabet alphabet(opt.k);
    for (int n = 0; n < opt.d && relations_ok; ++n) {
      for (const Word& u : enumerate_words(alphabet, n)) {
        for (const Word& v : enumerate_words(alphabet, n)) {
          for (const Portrait& g : group) {
            int base = n == 0 ? 1 : indicator_eval(Generator(u, v), g);
            for (int x = 0; x < opt.k; ++x) {
              int sy = 0, sz = 0;
              for (int y = 0; y < opt.k; ++y) {
                sy += indicator_eval(Generator(u.append(x), v.append(y)), g);
                sz += indicator_eval(Generator(u.append(y), v.append(x)), g);
              }
              if (sy != base || sz != base) relations_ok = false;
            }
          }
        }
      }
    }
    std::size_t rank = indicator_span_rank(opt.k, opt.d, group);
    VerificationReport duality = verify_duality(opt.suite_config());
    json j;
    j["k"] = opt.k;
    j["d"] = opt.d;
    j["group_order"] = group.size();
    j["relations_pointwise"] = relations_ok;
    j["span_rank"] = rank;
    j["duality"] = duality.to_json(opt.timings);
    bool pass = relations_ok && rank == group.size() && duality.pass();
    j["pass"] = pass;
    emit(j, opt);
    return pass ? kExitPass : kExitFail;
  }
  std::cerr << "unknown classical action '" << action << "'\n";
  return kExitUsage;
}

int cmd_rep_check(const Options& opt, const std::string& family,
                  double theta) {
  MatrixRep rep = [&]() -> MatrixRep {
    if (family == "two-projection") {
      return MatrixRep::two_projection(theta, opt.d);
    }
    if (family == "magic4") return MatrixRep::magic4(theta);
    if (family == "classical") {
      return MatrixRep::classical(opt.k, enumerate_aut(opt.k, opt.d), opt.d);
    }
    throw std::runtime_error("unknown representation family '" + family + "'");
  }();
  rep.tol = opt.tol;
  NumericReport report = rep.check_relations(rep.depth_cap);
  report.tolerance = opt.tol;
  emit(report.to_json(), opt);
  return report.pass() ? kExitPass : kExitFail;
}

int cmd_transform(const Options& opt, const std::string& which, int letter,
                  const std::string& expr) {
  Alphabet alphabet(opt.k);
  if (which == "psi") {
    TensorElement in = parse_tensor(expr, alphabet);
    std::cout << to_string(psi(in)) << "\n";
    return kExitPass;
  }
  Element e = parse_element(expr, alphabet);
  Element out = which == "rho" ? rho(letter, e) : sigma(letter, e);
  std::cout << to_string(out) << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "symbolic engine for quantum automorphisms of homogeneous rooted trees"};
  app.require_subcommand(1);

  Options opt;
  if (const char* env = std::getenv("QTREE_BUDGET")) {
    opt.budget = std::strtoull(env, nullptr, 10);
  }

  std::string expr, suite, action, family = "two-projection";
  int letter = 0;
  double theta = 0.7853981633974483;

  CLI::App* reduce_cmd = app.add_subcommand("reduce", "rewrite an expression");
  reduce_cmd->add_option("expr", expr, "expression")->required();
  add_common_flags(reduce_cmd, opt);

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("suite", suite, "suite name or 'all'")->required();
  add_common_flags(verify_cmd, opt);
  verify_cmd->add_option("--preset", opt.preset, "relator preset name");
  verify_cmd->add_option("--relators", opt.relator_file, "relator JSON file");

  CLI::App* classical_cmd =
      app.add_subcommand("classical", "portrait enumeration and cross-checks");
  classical_cmd->add_option("action", action, "enumerate|count|crosscheck")
      ->required();
  add_common_flags(classical_cmd, opt);
  classical_cmd->add_option("--preset", opt.preset, "subgroup preset name");

  CLI::App* rep_cmd = app.add_subcommand("rep", "numerical representations");
  CLI::App* rep_check = rep_cmd->add_subcommand("check", "relation residuals");
  rep_check->add_option("--family", family, "two-projection|magic4|classical");
  rep_check->add_option("--theta", theta, "projection angle");
  add_common_flags(rep_check, opt);  // --depth doubles as the depth cap

  CLI::App* rho_cmd = app.add_subcommand("rho", "restriction transformer");
  rho_cmd->add_option("letter", letter, "restriction letter")->required();
  rho_cmd->add_option("expr", expr, "expression")->required();
  add_common_flags(rho_cmd, opt);

  CLI::App* sigma_cmd = app.add_subcommand("sigma", "mirror restriction");
  sigma_cmd->add_option("letter", letter, "letter")->required();
  sigma_cmd->add_option("expr", expr, "expression")->required();
  add_common_flags(sigma_cmd, opt);

  CLI::App* psi_cmd = app.add_subcommand("psi", "transition transformer");
  psi_cmd->add_option("expr", expr, "tensor expression p[x] ox ...")
      ->required();
  add_common_flags(psi_cmd, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (reduce_cmd->parsed()) return cmd_reduce(opt, expr);
    if (verify_cmd->parsed()) return run_suites(opt, suite);
    if (classical_cmd->parsed()) return cmd_classical(opt, action);
    if (rep_cmd->parsed()) return cmd_rep_check(opt, family, theta);
    if (rho_cmd->parsed()) return cmd_transform(opt, "rho", letter, expr);
    if (sigma_cmd->parsed()) return cmd_transform(opt, "sigma", letter, expr);
    if (psi_cmd->parsed()) return cmd_transform(opt, "psi", 0, expr);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
