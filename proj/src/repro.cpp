#include "rlab/repro.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "rlab/cayley.hpp"
#include "rlab/families.hpp"
#include "rlab/io.hpp"
#include "rlab/rootfinder.hpp"
#include "rlab/tensor.hpp"

namespace rlab {

bool ReproTable::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const ReproRow& r) { return r.pass; });
}

namespace {

std::string fmt_param(const char* name, double v) {
  std::ostringstream os;
  os << name << '=' << v;
  return os.str();
}

ReproRow relative_row(std::string label, double param, std::size_t d, double measured, double expected, double tol) {
  ReproRow row{std::move(label), param, d, measured, expected, 0.0, tol, false};
  row.deviation = std::abs(measured - expected) / std::abs(expected);
  row.pass = row.deviation <= tol;
  return row;
}

}  // namespace

ReproTable repro_example_c(const std::vector<std::size_t>& dims, const std::vector<double>& sigmas,
                           std::uint64_t seed, const DegreeGradedBasis& basis) {
  ReproTable table{"exC", {}};
  for (const std::size_t d : dims) {
    const Eigen::MatrixXd q = random_orthogonal(d, seed + d);
    for (const double sigma : sigmas) {
      const PolynomialSystem sys = example_c(d, sigma, q, basis);
      const std::vector<cplx> origin(d, cplx(0.0));
      const ConditionReport rep = condition_at_root(sys, origin, Method::cayley, sigma);
      table.rows.push_back(relative_row("exC d=" + std::to_string(d) + " " + fmt_param("sigma", sigma), sigma, d,
                                        rep.eig_cond, std::pow(sigma, -double(d)), 5e-2));
    }
  }
  return table;
}

ReproTable repro_example_s(const std::vector<double>& sigmas, const DegreeGradedBasis& basis) {
  ReproTable table{"exS", {}};
  const double a = std::sqrt(2.0) / 2.0;
  for (const double sigma : sigmas) {
    const PolynomialSystem sys = example_s(sigma, a, a, basis);
    const std::vector<cplx> origin(2, cplx(0.0));
    const ConditionReport rep = condition_at_root(sys, origin, Method::sylvester, sigma);
    table.rows.push_back(relative_row("exS kappa " + fmt_param("sigma", sigma), sigma, 2, rep.eig_cond,
                                      std::sqrt(1.0 + sigma * sigma) / (sigma * sigma), 1e-6));
    ReproRow ray{"exS rayleigh " + fmt_param("sigma", sigma), sigma, 2, rep.rayleigh.real(), sigma * sigma, 0.0,
                 1e-10, false};
    ray.deviation = std::abs(rep.rayleigh - cplx(sigma * sigma));
    ray.pass = ray.deviation <= ray.tolerance;
    table.rows.push_back(ray);
  }
  return table;
}

ReproTable repro_cramer(std::size_t count, const std::vector<std::size_t>& dims, double max_cond, std::uint64_t seed,
                        const DegreeGradedBasis& basis) {
  ReproTable table{"cramer", {}};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> mag(0.2, 0.8);
  std::bernoulli_distribution sign(0.5);
  for (std::size_t n = 0; n < count; ++n) {
    const std::size_t d = dims[n % dims.size()];
    const Eigen::MatrixXd a = random_conditioned_matrix(d, max_cond, rng);
    Eigen::VectorXd x(static_cast<Eigen::Index>(d));
    for (Eigen::Index k = 0; k < x.size(); ++k) x(k) = sign(rng) ? mag(rng) : -mag(rng);
    const Eigen::VectorXd b = -a * x;
    const double direct = a.partialPivLu().solve(-b)(static_cast<Eigen::Index>(d) - 1);

    SolveOptions opts;
    opts.method = Method::cayley;
    const auto reports = solve_system(linear_system(a, b, basis), opts);
    ReproRow row{"cramer #" + std::to_string(n) + " d=" + std::to_string(d), double(n), d, 0.0, direct, 0.0, 1e-9,
                 false};
    if (reports.size() == 1) {
      row.measured = reports.front().eigenvalue.real();
      row.deviation = std::abs(reports.front().eigenvalue - cplx(direct)) / std::abs(direct);
    } else {
      row.measured = std::numeric_limits<double>::quiet_NaN();
      row.deviation = std::numeric_limits<double>::infinity();
    }
    row.pass = row.deviation <= row.tolerance;
    table.rows.push_back(row);
  }
  return table;
}

ReproTable repro_relcond(std::size_t d, const std::vector<double>& us, const DegreeGradedBasis& basis) {
  ReproTable table{"relcond", {}};
  for (const double u : us) {
    const HiddenVariableForm hv = hide_variable(relcond_system(d, u, basis));
    const CayleyResultant res = cayley_resultant(hv);
    const CayleyUnfolding& unf = res.unfolding;
    const std::size_t m = unf.free_dim();
    const std::size_t k_deg = res.matrix_poly.degree();

    std::vector<std::size_t> degrees;
    for (std::size_t k = 0; k < m; ++k) degrees.push_back(unf.row_extent(k) - 1);
    for (std::size_t k = 0; k < m; ++k) degrees.push_back(unf.col_extent(k) - 1);
    degrees.push_back(k_deg);
    const MultiPoly target = from_function(basis, degrees, [m](std::span<const cplx> z) {
      cplx v = z[2 * m] * z[2 * m];
      for (std::size_t k = 0; k < m; ++k) v *= z[k] + z[m + k];
      return v;
    });

    double dev = 0.0;
    const auto ext = target.extents();
    std::vector<std::size_t> idx(ext.size(), 0);
    do {
      const std::span<const std::size_t> all(idx);
      const auto r = static_cast<Eigen::Index>(unf.row_index(all.first(m)));
      const auto c = static_cast<Eigen::Index>(unf.col_index(all.subspan(m, m)));
      dev = std::max(dev, std::abs(res.matrix_poly.coeff(idx.back())(r, c) - target(idx)));
    } while (tensor::next_index(idx, ext));

    ReproRow row{"relcond d=" + std::to_string(d) + " " + fmt_param("u", u), u, d, dev, 0.0, dev, 10.0 * u, false};
    row.pass = dev <= row.tolerance;
    table.rows.push_back(row);
  }
  return table;
}

std::string repro_to_csv(const ReproTable& table) {
  std::ostringstream os;
  os << "experiment,label,param,d,measured,expected,deviation,tolerance,pass\n";
  for (const auto& r : table.rows) {
    os << table.name << ',' << r.label << ',' << io::format_double(r.param) << ',' << r.d << ','
       << io::format_double(r.measured) << ',' << io::format_double(r.expected) << ','
       << io::format_double(r.deviation) << ',' << io::format_double(r.tolerance) << ','
       << (r.pass ? "true" : "false") << '\n';
  }
  return os.str();
}

nlohmann::json repro_to_json(const ReproTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : table.rows) {
    rows.push_back({{"label", r.label},
                    {"param", r.param},
                    {"d", r.d},
                    {"measured", r.measured},
                    {"expected", r.expected},
                    {"deviation", r.deviation},
                    {"tolerance", r.tolerance},
                    {"pass", r.pass}});
  }
  return {{"experiment", table.name}, {"all_pass", table.all_pass()}, {"rows", rows}};
}

}  // namespace rlab
