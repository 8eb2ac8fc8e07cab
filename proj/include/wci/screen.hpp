#pragma once

#include <string>
#include <vector>

#include "wci/candidate.hpp"
#include "wci/numeric.hpp"

namespace wci {

/// Outcome of one named numerical condition.
struct CheckResult {
  std::string name;
  bool passed = true;
  std::string witness;  ///< empty when passed
};

struct ScreenReport {
  Candidate candidate;
  std::vector<CheckResult> checks;

  bool passed() const;
  /// nullptr when the check was not run for this candidate.
  const CheckResult* find(std::string_view name) const;
};

// Check names used in ScreenReport.
inline constexpr const char* kNotLinearCone = "not_linear_cone";
inline constexpr const char* kWpsWellFormed = "wps_well_formed";
inline constexpr const char* kDegreeExceedsWeight = "degree_exceeds_weight";
inline constexpr const char* kCodimensionBound = "codimension_bound";
inline constexpr const char* kQuasismoothDivisibility = "quasismooth_divisibility";
inline constexpr const char* kIsolatedSingularities = "isolated_singularities";
inline constexpr const char* kTerminalSingularities = "terminal_singularities";
inline constexpr const char* kCyWeightProduct = "cy_weight_product";
inline constexpr const char* kLambdaBound = "lambda_bound";

/// True iff some weight equals some degree.
bool is_linear_cone(const Candidate& c);

/// True iff dropping any single weight leaves a coprime set.
bool check_wps_wellformed(const Candidate& c);

/// True iff d_j > a_{j+dim} for every j.
bool check_degree_weight_order(const Candidate& c);

/// c <= dim + alpha + 1 when alpha >= 0, c <= dim when alpha < 0.
bool check_codim_bound(const Candidate& c);

/// Jacobian-derived necessary conditions for quasismoothness:
/// every weight larger than d_1 divides some degree (and then delta_c >= a_n),
/// and when c >= dim + 1, delta_{c-j} >= a_{dim-j} for j = 0..dim.
CheckResult check_quasismooth_divisibility(const Candidate& c);

/// Threefolds only. For every set of mu <= c+1 weights with gcd h > 1, h divides
/// at least mu - 1 degrees; more than c+1 weights are always coprime.
/// Degrees are counted with multiplicity.
CheckResult check_isolated_divisibility(const Candidate& c);

/// Threefolds only. Terminal singularities are isolated, so the isolated
/// conditions are required first. Then for every mu <= c+1 weights with gcd h:
/// h divides at least mu degrees, or exactly mu - 1 degrees and h | (a_m + alpha)
/// for some weight a_m outside the chosen set.
CheckResult check_terminal_divisibility(const Candidate& c);

/// Calabi-Yau threefolds only: product of weights divides product of degrees.
bool check_cy_product(const Candidate& c);

struct LambdaScreen {
  bool passed = false;
  Rational lambda_sum;    ///< sum_j d_j / a_{j+dim}
  long limit = 0;         ///< c + alpha + dim + 1
  Rational volume_bound;  ///< (limit / c)^c / prod_{i <= dim} a_i, an upper bound for prod d / prod a
};

/// Requires alpha >= 0 and every d_j > a_{j+dim}.
LambdaScreen lambda_screen(const Candidate& c);

/// Runs every check applicable to the candidate's amplitude and dimension.
ScreenReport necessary_screen(const Candidate& c);

}  // namespace wci
