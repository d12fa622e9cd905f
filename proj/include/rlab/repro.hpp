#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "rlab/basis.hpp"

namespace rlab {

/// One measured-versus-closed-form comparison.
struct ReproRow {
  std::string label;
  double param = 0.0;
  std::size_t d = 0;
  double measured = 0.0;
  double expected = 0.0;
  double deviation = 0.0;  // relative unless the experiment says otherwise
  double tolerance = 0.0;
  bool pass = false;
};

struct ReproTable {
  std::string name;
  std::vector<ReproRow> rows;
  bool all_pass() const;
};

/// kappa(x_d*, R_Cayley) at the origin against sigma^{-d}, random orthogonal Q.
ReproTable repro_example_c(const std::vector<std::size_t>& dims, const std::vector<double>& sigmas,
                           std::uint64_t seed, const DegreeGradedBasis& basis = DegreeGradedBasis::monomial());

/// kappa(x_2*, R_Sylv) against sqrt(1 + sigma^2) / sigma^2, and w^T R' v against sigma^2.
ReproTable repro_example_s(const std::vector<double>& sigmas, const DegreeGradedBasis& basis = DegreeGradedBasis::monomial());

/// Hidden component from the Cayley pipeline eigenvalue against a direct solve.
ReproTable repro_cramer(std::size_t count, const std::vector<std::size_t>& dims, double max_cond, std::uint64_t seed,
                        const DegreeGradedBasis& basis = DegreeGradedBasis::monomial());

/// Max coefficient deviation of R_Cayley from prod (s_k + t_k) x_d^2 (absolute).
ReproTable repro_relcond(std::size_t d, const std::vector<double>& us,
                         const DegreeGradedBasis& basis = DegreeGradedBasis::monomial());

std::string repro_to_csv(const ReproTable& table);
nlohmann::json repro_to_json(const ReproTable& table);

}  // namespace rlab
