#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "fueter/kernel_spec.hpp"
#include "fueter/text.hpp"
#include "fueter/verify.hpp"

using namespace fueter;
using json = nlohmann::json;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;

struct EvalArgs {
  std::string kernel;
  unsigned n = 3;
  long m = 0;
  long beta = 0;
  std::string side = "left";
  std::string lemma = "l_one";
  int formula = 1;
  long k = 0;
  std::string id;
  std::string s;
  std::string x;
  std::string mode = "exact";
  std::string format = "text";
  double tol = kDefaultTolerance;
};

KernelSpec build_spec(const EvalArgs& a) {
  const auto flavor = flavor_from_name(a.kernel);
  if (!flavor) throw InvalidParams("unknown kernel: " + a.kernel);
  KernelSpec spec;
  spec.n = a.n;
  spec.flavor = *flavor;
  spec.side = side_from_name(a.side);
  spec.m = a.m;
  spec.beta = a.beta;
  spec.lemma = lemma_from_name(a.lemma);
  spec.formula = a.formula;
  spec.k = a.k;
  spec.catalog_id = a.id;
  if (spec.flavor == Flavor::catalog && !a.id.empty()) spec.n = catalog_entry(a.id).n;
  validate(spec);
  return spec;
}

template <class R>
json value_json(const Multivector<R>& v) {
  json coeffs = json::object();
  for (Blade b : canonical_blade_order(v.dim()))
    if (!RingTraits<R>::is_exact_zero(v[b])) coeffs[b == 0 ? "1" : blade_name(b)] = RingTraits<R>::to_string(v[b]);
  return coeffs;
}

int run_eval(const EvalArgs& a) {
  const KernelSpec spec = build_spec(a);
  const Paravector<Rational> s = parse_paravector(a.s, spec.n);
  const Paravector<Rational> x = parse_paravector(a.x, spec.n);
  std::string text;
  json coefficients;
  if (mode_from_name(a.mode) == Mode::exact) {
    const auto v = evaluate(spec, s, x);
    text = format(v);
    coefficients = value_json(v);
  } else {
    const auto to_d = [](const Rational& r) { return r.to_double(); };
    const auto v = evaluate(spec, s.map(to_d), x.map(to_d), a.tol);
    text = format(v);
    coefficients = value_json(v);
  }
  if (a.format == "json") {
    json out = {{"kernel", describe(spec)}, {"mode", a.mode}, {"s", a.s}, {"x", a.x}, {"value", text},
                {"coefficients", coefficients}};
    std::cout << out.dump(2) << '\n';
  } else if (a.format == "text") {
    std::cout << text << '\n';
  } else {
    throw InvalidParams("eval supports --format text|json");
  }
  return 0;
}

struct VerifyArgs {
  std::string config_path;
  std::string out;
  std::string format = "json";
};

int run_verify(CLI::App& cmd, SuiteConfig cli, const VerifyArgs& a) {
  SuiteConfig config;
  if (!a.config_path.empty()) {
    std::ifstream in(a.config_path);
    if (!in) throw InvalidParams("cannot open config file: " + a.config_path);
    json j;
    try {
      j = json::parse(in);
    } catch (const json::parse_error& e) {
      throw InvalidParams(std::string("config is not valid JSON: ") + e.what());
    }
    apply_json(config, j);
  }
  auto given = [&](const char* name) { return cmd.count(name) > 0; };
  if (given("--suite")) config.suite = cli.suite;
  if (given("--n")) config.n_values = cli.n_values;
  if (given("--m")) config.m = cli.m;
  if (given("--beta")) config.beta = cli.beta;
  if (given("--trials")) config.trials = cli.trials;
  if (given("--mode")) config.mode = cli.mode;
  if (given("--seed")) config.seed = cli.seed;
  if (given("--tol")) config.tol = cli.tol;
  if (given("--spot-n")) config.spot_n = cli.spot_n;
  if (given("--spot-tol")) config.spot_tol = cli.spot_tol;
  if (given("--jobs")) config.jobs = cli.jobs;
  if (given("--hn-max")) config.hn_max = cli.hn_max;
  if (given("--nodes")) config.nodes = cli.nodes;
  if (config.suite.empty()) throw InvalidParams("--suite is required");
  if (a.format == "csv" && config.suite != "quadrature")
    throw InvalidParams("csv output is only available for the quadrature convergence table");
  if (a.format != "json" && a.format != "text" && a.format != "csv")
    throw InvalidParams("--format must be json, text or csv");

  const VerificationReport report = run_suite(config);
  std::string body;
  if (a.format == "json") body = report.to_json().dump(2) + "\n";
  else if (a.format == "text") body = report.to_text();
  else body = convergence_csv(report.convergence);

  if (a.out.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(a.out);
    if (!out) throw InvalidParams("cannot write " + a.out);
    out << body;
    std::cerr << report.suite << ": total=" << report.summary.total << " passed=" << report.summary.passed
              << " failed=" << report.summary.failed << " flagged=" << report.summary.flagged << '\n';
  }
  return report.ok() ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clifford kernel evaluation and verification harness"};
  app.require_subcommand(1);

  EvalArgs ea;
  CLI::App* eval = app.add_subcommand("eval", "evaluate a closed-form kernel at a point");
  eval->add_option("--kernel", ea.kernel, "kernel flavor")->required();
  eval->add_option("--n", ea.n, "odd dimension n");
  eval->add_option("--m,--l", ea.m, "Laplacian power m (or l for polyanalytic)");
  eval->add_option("--beta", ea.beta, "Dirac power beta");
  eval->add_option("--side", ea.side, "left or right");
  eval->add_option("--lemma", ea.lemma, "l_one or l_one1");
  eval->add_option("--formula", ea.formula, "lemma formula 1..4");
  eval->add_option("--k", ea.k, "power of (s - x0) in lemma formulas");
  eval->add_option("--id", ea.id, "catalog entry id");
  eval->add_option("--s", ea.s, "s as x0,x1,...,xn")->required();
  eval->add_option("--x", ea.x, "x as x0,x1,...,xn")->required();
  eval->add_option("--mode", ea.mode, "exact or float");
  eval->add_option("--format", ea.format, "text or json");
  eval->add_option("--tol", ea.tol, "float singularity tolerance");

  SuiteConfig vc;
  VerifyArgs va;
  std::string mode = "exact";
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", vc.suite, "suite name");
  verify->add_option("--n", vc.n_values, "dimensions, e.g. 5 or 3,5,7")->delimiter(',');
  verify->add_option("--m", vc.m, "restrict to one Laplacian power");
  verify->add_option("--beta", vc.beta, "restrict to one Dirac power");
  verify->add_option("--trials", vc.trials, "random points per case");
  verify->add_option("--mode", mode, "exact or float");
  verify->add_option("--seed", vc.seed, "random seed");
  verify->add_option("--tol", vc.tol, "float / quadrature tolerance");
  verify->add_option("--spot-n", vc.spot_n, "float spot-check dimensions")->delimiter(',');
  verify->add_option("--spot-tol", vc.spot_tol, "float spot-check tolerance");
  verify->add_option("--jobs", vc.jobs, "worker threads (0: all cores)");
  verify->add_option("--hn-max", vc.hn_max, "largest h_n for the appendix suite");
  verify->add_option("--nodes", vc.nodes, "quadrature nodes");
  verify->add_option("--config", va.config_path, "JSON config file; flags override it");
  verify->add_option("--out", va.out, "write the report to a file");
  verify->add_option("--format", va.format, "json, text or csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (eval->parsed()) return run_eval(ea);
    vc.mode = mode_from_name(mode);
    return run_verify(*verify, vc, va);
  } catch (const SingularKernel& e) {
    std::cerr << e.what() << '\n';
    return kExitConfig;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
}
