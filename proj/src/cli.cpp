#include "rlab/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "rlab/cayley.hpp"
#include "rlab/families.hpp"
#include "rlab/io.hpp"
#include "rlab/log.hpp"
#include "rlab/repro.hpp"
#include "rlab/rootfinder.hpp"
#include "rlab/sylvester.hpp"

namespace rlab {

namespace {

struct Config {
  std::string command;
  std::string input;
  std::string out;
  std::string format = "json";
  std::string method = "cayley";
  std::string basis;
  std::string repro_name;
  std::string family = "exC";
  double tol_accept = 1e-7;
  std::uint64_t seed = 0;
  std::size_t dim = 2;
  bool deflate = false;
  std::vector<double> point;
  std::vector<double> point_imag;
  std::vector<double> params;
};

DegreeGradedBasis named_basis(const std::string& name) {
  if (name.empty() || name == "monomial") return DegreeGradedBasis::monomial();
  if (name == "chebyshev") return DegreeGradedBasis::chebyshev();
  if (name == "legendre") return DegreeGradedBasis::legendre();
  throw InputError("unknown basis \"" + name + "\"");
}

PolynomialSystem load_system(const Config& cfg) {
  if (cfg.input.empty()) throw InputError("--input is required");
  PolynomialSystem sys = io::system_from_json(io::read_json_file(cfg.input));
  if (cfg.basis.empty()) return sys;
  const DegreeGradedBasis target = named_basis(cfg.basis).with_domain(sys.domain());
  std::vector<MultiPoly> polys;
  for (const auto& p : sys.polys()) polys.push_back(convert_basis(p, target));
  return PolynomialSystem(std::move(polys));
}

std::vector<cplx> parse_point(const Config& cfg, std::size_t d) {
  if (cfg.point.size() != d) throw InputError("--point needs " + std::to_string(d) + " components");
  if (!cfg.point_imag.empty() && cfg.point_imag.size() != d) {
    throw InputError("--point-imag needs " + std::to_string(d) + " components");
  }
  std::vector<cplx> x(d);
  for (std::size_t k = 0; k < d; ++k) x[k] = cplx(cfg.point[k], cfg.point_imag.empty() ? 0.0 : cfg.point_imag[k]);
  return x;
}

void emit(const Config& cfg, std::ostream& out, const std::string& text) {
  if (cfg.out.empty() || cfg.out == "-") {
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
  } else {
    io::write_text(cfg.out, text);
  }
}

bool want_csv(const Config& cfg) { return cfg.format == "csv"; }

int cmd_eval(const Config& cfg, std::ostream& out) {
  const PolynomialSystem sys = load_system(cfg);
  const auto x = parse_point(cfg, sys.dim());
  const auto values = system_eval(sys, x);
  if (want_csv(cfg)) {
    std::ostringstream os;
    os << "index,value_re,value_im\n";
    for (std::size_t i = 0; i < values.size(); ++i)
      os << i << ',' << io::format_double(values[i].real()) << ',' << io::format_double(values[i].imag()) << '\n';
    emit(cfg, out, os.str());
  } else {
    nlohmann::json vals = nlohmann::json::array();
    for (const cplx v : values) vals.push_back({v.real(), v.imag()});
    emit(cfg, out, nlohmann::json{{"values", vals}, {"scaled_residual", scaled_residual(sys, x)}}.dump(2));
  }
  return kExitOk;
}

int cmd_cayley(const Config& cfg, std::ostream& out) {
  const HiddenVariableForm hv = hide_variable(load_system(cfg));
  CayleyResultant res = cayley_resultant(hv);
  if (cfg.deflate) res = deflate(res);
  emit(cfg, out, io::cayley_to_json(res).dump(2));
  return kExitOk;
}

int cmd_sylvester(const Config& cfg, std::ostream& out) {
  const PolynomialSystem sys = load_system(cfg);
  if (sys.dim() != 2) throw InputError("sylvester requires d=2");
  const SylvesterResultant res = sylvester_resultant(hide_variable(sys));
  nlohmann::json j = io::matpoly_to_json(res.matrix_poly);
  j["tau1"] = res.tau1;
  j["tau2"] = res.tau2;
  emit(cfg, out, j.dump(2));
  return kExitOk;
}

Method parse_method(const std::string& name) {
  if (name == "cayley") return Method::cayley;
  if (name == "sylvester") return Method::sylvester;
  throw InputError("unknown method \"" + name + "\"");
}

int cmd_solve(const Config& cfg, std::ostream& out) {
  const PolynomialSystem sys = load_system(cfg);
  SolveOptions opts;
  opts.method = parse_method(cfg.method);
  opts.tol_accept = cfg.tol_accept;
  opts.eig.probe_seed = cfg.seed;
  if (opts.method == Method::sylvester && sys.dim() != 2) throw InputError("sylvester requires d=2");
  const auto reports = solve_system(sys, opts);
  emit(cfg, out, want_csv(cfg) ? io::reports_to_csv(reports) : io::reports_to_json(reports).dump(2));
  return kExitOk;
}

int cmd_condition(const Config& cfg, std::ostream& out) {
  const Method method = parse_method(cfg.method);
  std::vector<ConditionReport> rows;
  if (!cfg.input.empty()) {
    const PolynomialSystem sys = load_system(cfg);
    if (method == Method::sylvester && sys.dim() != 2) throw InputError("sylvester requires d=2");
    rows.push_back(condition_at_root(sys, parse_point(cfg, sys.dim()), method));
  } else {
    const DegreeGradedBasis basis = named_basis(cfg.basis);
    const std::vector<double> params = cfg.params.empty() ? std::vector<double>{0.5, 0.2, 0.1} : cfg.params;
    const std::size_t d = cfg.family == "exS" ? 2 : cfg.dim;
    if (method == Method::sylvester && d != 2) throw InputError("sylvester requires d=2");
    const Eigen::MatrixXd q = random_orthogonal(d, cfg.seed + d);
    const double a = std::sqrt(2.0) / 2.0;
    std::function<std::pair<PolynomialSystem, std::vector<cplx>>(double)> family;
    if (cfg.family == "exC") {
      family = [&](double s) { return std::make_pair(example_c(d, s, q, basis), std::vector<cplx>(d, 0.0)); };
    } else if (cfg.family == "exS") {
      family = [&](double s) { return std::make_pair(example_s(s, a, a, basis), std::vector<cplx>(2, 0.0)); };
    } else if (cfg.family == "relcond") {
      family = [&](double u) { return std::make_pair(relcond_system(d, u, basis), std::vector<cplx>(d, 0.0)); };
    } else {
      throw InputError("unknown family \"" + cfg.family + "\"");
    }
    rows = condition_sweep(family, params, method);
  }
  emit(cfg, out, want_csv(cfg) ? io::conditions_to_csv(rows) : io::conditions_to_json(rows).dump(2));
  return kExitOk;
}

int cmd_repro(const Config& cfg, std::ostream& out) {
  const DegreeGradedBasis basis = named_basis(cfg.basis);
  ReproTable table;
  if (cfg.repro_name == "exC") {
    table = repro_example_c({2, 3}, {0.5, 0.2, 0.1}, cfg.seed, basis);
  } else if (cfg.repro_name == "exS") {
    table = repro_example_s({0.5, 0.1}, basis);
  } else if (cfg.repro_name == "cramer") {
    table = repro_cramer(50, {2, 3, 4}, 100.0, cfg.seed, basis);
  } else if (cfg.repro_name == "relcond") {
    table = repro_relcond(2, {1e-2, 1e-4}, basis);
  } else {
    throw InputError("unknown repro experiment \"" + cfg.repro_name + "\"");
  }
  emit(cfg, out, want_csv(cfg) ? repro_to_csv(table) : repro_to_json(table).dump(2));
  return table.all_pass() ? kExitOk : kExitReproFail;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Hidden-variable resultant rootfinding and conditioning experiments", "resultant-lab"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--out", cfg.out, "Output file (default stdout)");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--basis", cfg.basis, "Basis to re-expand input in, or to build families in")
      ->check(CLI::IsMember({"monomial", "chebyshev", "legendre"}));
  app.add_option("--seed", cfg.seed, "Seed for random corpora");
  app.add_option("--method", cfg.method, "Resultant")->check(CLI::IsMember({"cayley", "sylvester"}));
  app.add_option("--tol-accept", cfg.tol_accept, "Scaled residual threshold for spurious roots");

  auto* eval = app.add_subcommand("eval", "Evaluate a system at a point");
  eval->add_option("--input", cfg.input, "System JSON")->required();
  eval->add_option("--point", cfg.point, "Real parts, comma separated")->delimiter(',')->required();
  eval->add_option("--point-imag", cfg.point_imag, "Imaginary parts, comma separated")->delimiter(',');

  auto* cayley = app.add_subcommand("cayley", "Build the Cayley resultant matrix polynomial");
  cayley->add_option("--input", cfg.input, "System JSON")->required();
  cayley->add_flag("--deflate", cfg.deflate, "Trim zero trailing slabs");

  auto* sylv = app.add_subcommand("sylvester", "Build the Sylvester resultant matrix polynomial");
  sylv->add_option("--input", cfg.input, "System JSON")->required();

  auto* solve = app.add_subcommand("solve", "Find all roots in the domain");
  solve->add_option("--input", cfg.input, "System JSON")->required();

  auto* cond = app.add_subcommand("condition", "Eigenvalue versus root conditioning at a known root");
  cond->add_option("--input", cfg.input, "System JSON (with --point)");
  cond->add_option("--point", cfg.point, "Known root, real parts")->delimiter(',');
  cond->add_option("--point-imag", cfg.point_imag, "Known root, imaginary parts")->delimiter(',');
  cond->add_option("--family", cfg.family, "Built-in family")->check(CLI::IsMember({"exC", "exS", "relcond"}));
  cond->add_option("--dim", cfg.dim, "Dimension for exC and relcond");
  cond->add_option("--params", cfg.params, "Parameter grid")->delimiter(',');

  auto* repro = app.add_subcommand("repro", "Reproduce a closed-form example");
  repro->add_option("name", cfg.repro_name, "exC, exS, cramer or relcond")
      ->required()
      ->check(CLI::IsMember({"exC", "exS", "cramer", "relcond"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  try {
    if (eval->parsed()) return cmd_eval(cfg, out);
    if (cayley->parsed()) return cmd_cayley(cfg, out);
    if (sylv->parsed()) return cmd_sylvester(cfg, out);
    if (solve->parsed()) return cmd_solve(cfg, out);
    if (cond->parsed()) return cmd_condition(cfg, out);
    if (repro->parsed()) return cmd_repro(cfg, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed input: " << e.what() << '\n';
    return kExitInput;
  } catch (const EigenSolverError& e) {
    err << "error: eigensolver: " << e.what() << '\n';
    return kExitEigen;
  } catch (const Error& e) {
    err << "error: construction: " << e.what() << '\n';
    return kExitConstruction;
  }
  return kExitInput;
}

}  // namespace rlab
