#include "rlab/io.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace rlab::io {

namespace {

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
  if (j.is_number()) return cplx(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return cplx(j[0].get<double>(), j[1].get<double>());
  }
  throw InputError("expected a number or a [re, im] pair, got " + j.dump());
}

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::vector<double> number_list(const json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array of numbers");
  std::vector<double> out;
  for (const auto& v : j) {
    if (!v.is_number()) throw InputError(std::string(what) + " must contain only numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

json domain_to_json(const Domain& domain) {
  if (domain.kind() == Domain::Kind::interval) return {{"interval", {domain.lo(), domain.hi()}}};
  return {{"disc", {{"center", complex_to_json(domain.center())}, {"radius", domain.radius()}}}};
}

Domain domain_from_json(const json& j) {
  if (j.is_object() && j.contains("interval")) {
    const auto v = number_list(j.at("interval"), "interval");
    if (v.size() != 2) throw InputError("interval needs [lo, hi]");
    return Domain::interval(v[0], v[1]);
  }
  if (j.is_object() && j.contains("disc")) {
    const json& d = j.at("disc");
    return Domain::disc(complex_from_json(require(d, "center")), require(d, "radius").get<double>());
  }
  throw InputError("domain must be {\"interval\": [lo, hi]} or {\"disc\": {...}}");
}

json basis_to_json(const DegreeGradedBasis& basis) {
  json j{{"name", std::string(basis.name())}, {"domain", domain_to_json(basis.domain())}};
  if (basis.kind() != DegreeGradedBasis::Kind::custom) return j;
  const std::size_t n = basis.max_degree();
  json alpha = json::array(), beta = json::array(), gamma = json::array();
  for (std::size_t k = 0; k < n; ++k) {
    alpha.push_back(complex_to_json(basis.alpha(k)));
    beta.push_back(complex_to_json(basis.beta(k)));
  }
  for (std::size_t k = 1; k < n; ++k) {
    json row = json::array();
    for (std::size_t i = 1; i <= k; ++i) row.push_back(complex_to_json(basis.gamma(k, i)));
    gamma.push_back(row);
  }
  j["alpha"] = alpha;
  j["beta"] = beta;
  j["gamma"] = gamma;
  return j;
}

DegreeGradedBasis basis_from_json(const json& j) {
  if (j.is_string()) return basis_from_json(json{{"name", j}});
  const std::string name = require(j, "name").get<std::string>();
  const Domain domain = j.contains("domain") ? domain_from_json(j.at("domain")) : Domain::interval(-1.0, 1.0);
  if (name == "monomial") return DegreeGradedBasis::monomial(domain);
  if (name == "chebyshev") return DegreeGradedBasis::chebyshev(domain);
  if (name == "legendre") return DegreeGradedBasis::legendre(domain);
  if (name == "custom") {
    std::vector<cplx> alpha, beta;
    std::vector<std::vector<cplx>> gamma;
    for (const auto& v : require(j, "alpha")) alpha.push_back(complex_from_json(v));
    for (const auto& v : require(j, "beta")) beta.push_back(complex_from_json(v));
    for (const auto& row : require(j, "gamma")) {
      std::vector<cplx> r;
      for (const auto& v : row) r.push_back(complex_from_json(v));
      gamma.push_back(std::move(r));
    }
    return DegreeGradedBasis::custom(std::move(alpha), std::move(beta), std::move(gamma), domain);
  }
  throw InputError("unknown basis \"" + name + "\"");
}

json system_to_json(const PolynomialSystem& sys) {
  json polys = json::array();
  for (const auto& p : sys.polys()) {
    json re = json::array(), im = json::array();
    for (const cplx c : p.coeffs()) {
      re.push_back(c.real());
      im.push_back(c.imag());
    }
    polys.push_back({{"degrees", p.degrees()}, {"coeffs_real", re}, {"coeffs_imag", im}});
  }
  return {{"basis", basis_to_json(sys.basis())},
          {"dim", sys.dim()},
          {"polys", polys},
          {"domain", domain_to_json(sys.domain())}};
}

PolynomialSystem system_from_json(const json& j) {
  if (!j.is_object()) throw InputError("system JSON must be an object");
  DegreeGradedBasis basis = j.contains("basis") ? basis_from_json(j.at("basis")) : DegreeGradedBasis::monomial();
  if (j.contains("domain")) basis = basis.with_domain(domain_from_json(j.at("domain")));
  const json& polys = require(j, "polys");
  if (!polys.is_array() || polys.empty()) throw InputError("system has an empty polys list");
  const std::size_t dim = j.contains("dim") ? j.at("dim").get<std::size_t>() : polys.size();
  if (dim != polys.size()) throw InputError("dim does not match the number of polynomials");

  std::vector<MultiPoly> out;
  for (const auto& pj : polys) {
    std::vector<std::size_t> degrees;
    for (double v : number_list(require(pj, "degrees"), "degrees")) {
      if (v < 0.0 || v != double(std::size_t(v))) throw InputError("degrees must be non-negative integers");
      degrees.push_back(std::size_t(v));
    }
    if (degrees.size() != dim) throw InputError("each polynomial needs one degree per variable");
    const auto re = number_list(require(pj, "coeffs_real"), "coeffs_real");
    const auto im = pj.contains("coeffs_imag") ? number_list(pj.at("coeffs_imag"), "coeffs_imag")
                                               : std::vector<double>(re.size(), 0.0);
    if (im.size() != re.size()) throw InputError("coeffs_real and coeffs_imag differ in length");
    std::vector<cplx> coeffs(re.size());
    for (std::size_t k = 0; k < re.size(); ++k) coeffs[k] = cplx(re[k], im[k]);
    out.emplace_back(basis, std::move(degrees), std::move(coeffs));
  }
  return PolynomialSystem(std::move(out));
}

json matpoly_to_json(const MatrixPolynomial& p) {
  json coeffs = json::array();
  for (const auto& a : p.coeffs()) {
    json re = json::array(), im = json::array();
    for (Eigen::Index r = 0; r < a.rows(); ++r)
      for (Eigen::Index c = 0; c < a.cols(); ++c) {
        re.push_back(a(r, c).real());
        im.push_back(a(r, c).imag());
      }
    coeffs.push_back({{"real", re}, {"imag", im}});
  }
  return {{"basis", basis_to_json(p.basis())}, {"size", p.size()}, {"degree", p.degree()}, {"coeffs", coeffs}};
}

MatrixPolynomial matpoly_from_json(const json& j) {
  const DegreeGradedBasis basis = basis_from_json(require(j, "basis"));
  const std::size_t n = require(j, "size").get<std::size_t>();
  std::vector<Eigen::MatrixXcd> mats;
  for (const auto& cj : require(j, "coeffs")) {
    const auto re = number_list(require(cj, "real"), "real");
    const auto im = cj.contains("imag") ? number_list(cj.at("imag"), "imag") : std::vector<double>(re.size(), 0.0);
    if (re.size() != n * n || im.size() != n * n) throw InputError("coefficient matrix has the wrong size");
    Eigen::MatrixXcd a(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t k = 0; k < n * n; ++k) a(static_cast<Eigen::Index>(k / n), static_cast<Eigen::Index>(k % n)) = cplx(re[k], im[k]);
    mats.push_back(std::move(a));
  }
  if (j.contains("degree") && j.at("degree").get<std::size_t>() + 1 != mats.size()) {
    throw InputError("degree does not match the number of coefficients");
  }
  return MatrixPolynomial(basis, std::move(mats));
}

json cayley_to_json(const CayleyResultant& res) {
  json j = matpoly_to_json(res.matrix_poly);
  j["unfolding"] = {{"taus", res.unfolding.taus()},
                    {"row_strides", res.unfolding.row_strides()},
                    {"col_strides", res.unfolding.col_strides()}};
  j["deflated"] = res.deflated;
  return j;
}

json reports_to_json(const std::vector<RootReport>& reports) {
  json out = json::array();
  for (const auto& r : reports) {
    json root = json::array();
    for (const cplx z : r.root) root.push_back(complex_to_json(z));
    out.push_back({{"root", root},
                   {"residuals", r.residuals},
                   {"residuals_unpolished", r.residuals_unpolished},
                   {"jacobian_cond", r.jacobian_cond},
                   {"eig_cond", r.eig_cond},
                   {"cond_ratio", r.cond_ratio},
                   {"recovered_from", std::string(recovery_name(r.recovered_from))},
                   {"spurious", r.spurious},
                   {"eigenvalue", complex_to_json(r.eigenvalue)}});
  }
  return out;
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string reports_to_csv(const std::vector<RootReport>& reports) {
  std::ostringstream os;
  const std::size_t d = reports.empty() ? 0 : reports.front().root.size();
  os << "index";
  for (std::size_t k = 1; k <= d; ++k) os << ",x" << k << "_re,x" << k << "_im";
  os << ",max_residual,max_residual_unpolished,jacobian_cond,eig_cond,cond_ratio,recovered_from,spurious,"
        "eigenvalue_re,eigenvalue_im\n";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    os << i;
    for (const cplx z : r.root) os << ',' << format_double(z.real()) << ',' << format_double(z.imag());
    double res = 0.0, pre = 0.0;
    for (double v : r.residuals) res = std::max(res, v);
    for (double v : r.residuals_unpolished) pre = std::max(pre, v);
    os << ',' << format_double(res) << ',' << format_double(pre) << ',' << format_double(r.jacobian_cond) << ','
       << format_double(r.eig_cond) << ',' << format_double(r.cond_ratio) << ',' << recovery_name(r.recovered_from)
       << ',' << (r.spurious ? "true" : "false") << ',' << format_double(r.eigenvalue.real()) << ','
       << format_double(r.eigenvalue.imag()) << '\n';
  }
  return os.str();
}

json conditions_to_json(const std::vector<ConditionReport>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    out.push_back({{"param", r.param},
                   {"d", r.d},
                   {"jacobian_cond", r.jacobian_cond},
                   {"eig_cond", r.eig_cond},
                   {"ratio", r.ratio},
                   {"rayleigh", complex_to_json(r.rayleigh)}});
  }
  return out;
}

std::string conditions_to_csv(const std::vector<ConditionReport>& rows) {
  std::ostringstream os;
  os << "param,d,jacobian_cond,eig_cond,ratio,rayleigh_re,rayleigh_im\n";
  for (const auto& r : rows) {
    os << format_double(r.param) << ',' << r.d << ',' << format_double(r.jacobian_cond) << ','
       << format_double(r.eig_cond) << ',' << format_double(r.ratio) << ',' << format_double(r.rayleigh.real())
       << ',' << format_double(r.rayleigh.imag()) << '\n';
  }
  return os.str();
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError("malformed JSON in " + path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

}  // namespace rlab::io
