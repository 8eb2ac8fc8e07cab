#pragma once

#include <cstddef>
#include <iosfwd>
#include <limits>
#include <span>
#include <vector>

#include "wci/basket.hpp"
#include "wci/candidate.hpp"
#include "wci/numeric.hpp"
#include "wci/tuple.hpp"

namespace wci {

/// Integer power series modulo t^(M+1); coefficients c_0..c_M.
class TruncatedSeries {
 public:
  /// The zero series with bound M.
  explicit TruncatedSeries(std::size_t bound) : coeffs_(bound + 1) {}
  /// Takes c_0..c_M; throws InvalidInput if empty.
  explicit TruncatedSeries(std::vector<Integer> coeffs);

  static TruncatedSeries one(std::size_t bound);

  std::size_t bound() const noexcept { return coeffs_.size() - 1; }
  const Integer& operator[](std::size_t m) const { return coeffs_.at(m); }
  Integer& operator[](std::size_t m) { return coeffs_.at(m); }
  const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }

  /// In place: multiply by (1 - t^k).
  void multiply_cyclotomic(long k);
  /// In place: multiply by 1 / (1 - t^k) = sum_j t^{jk}.
  void divide_cyclotomic(long k);

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Integer> coeffs_;
};

TruncatedSeries mul_cyclo(TruncatedSeries s, long k);
TruncatedSeries div_cyclo(TruncatedSeries s, long k);

/// prod_j (1 - t^{d_j}) / prod_i (1 - t^{a_i}) up to t^M. Either list may be empty.
TruncatedSeries poincare_series(std::span<const long> weights, std::span<const long> degrees, std::size_t bound);

/// Hilbert-Poincare series of the candidate's coordinate ring up to t^M.
TruncatedSeries series_from_candidate(const Candidate& c, std::size_t bound);

/// Series of plurigenera (alpha = +1: 1, p_g, chi_2, chi_3, ...) or
/// anti-plurigenera (alpha = -1: 1, -chi_2, -chi_3, ...) of a formal basket.
/// Throws BasketInconsistency if some chi_m with m <= M+1 is not an integer.
TruncatedSeries series_from_formal_basket(const FormalBasket& fb, int alpha, std::size_t bound);

struct RecoveredPresentation {
  std::vector<long> weights;
  std::vector<long> degrees;
  /// The series is explained by the recovered pairs with room to spare:
  /// recovery finished within the limits and 2 * max(recovered) <= M.
  bool residual_clean = false;
  /// False when a limit stopped the recovery. Recovery up to c_m only reads
  /// c_0..c_m, so a longer truncation of the same series stops there too.
  bool within_limits = true;
};

/// Caps on the recovered presentation; exceeding one stops the recovery early.
struct TableLimits {
  std::size_t max_weights = std::numeric_limits<std::size_t>::max();
  std::size_t max_degrees = std::numeric_limits<std::size_t>::max();
};

/// Reid's table method. Repeatedly takes the lowest nonzero coefficient c_m of
/// the residual: c_m > 0 records c_m weights m and multiplies by (1 - t^m)^{c_m};
/// c_m < 0 records -c_m degrees m and divides by (1 - t^m)^{-c_m}.
/// Requires c_0 = 1.
RecoveredPresentation table_method(const TruncatedSeries& s, TableLimits limits = {});

/// prod (1 - t^i)^{nu_i} / prod (1 - t^i)^{mu_i} over i <= h, up to t^h.
/// Exact for every candidate with this tuple, whatever its larger weights and degrees.
TruncatedSeries low_degree_series(const Tuple& t, int h);

/// Truncation bound M = 2N, N = max(r_max, ceil(1680 s) + alpha),
/// s = max_{c=1..4} ((4 + c + alpha) / c)^c. Every weight and degree of a
/// threefold realizing the formal basket is at most M.
long bound_M(const FormalBasket& fb, int alpha);

/// The largest weight a_max >= 2 is at most r_max or divides some degree.
bool max_weight_constraint(long a_max, long r_max, std::span<const long> degrees);

/// "m c_m" lines, one per coefficient.
void write_series(std::ostream& out, const TruncatedSeries& s);
/// Reads "m c_m" lines (or bare c_m lines, indexed in order). Indices must run
/// 0, 1, 2, ... without gaps. Blank lines and '#' comments are skipped.
TruncatedSeries read_series(std::istream& in);

}  // namespace wci
