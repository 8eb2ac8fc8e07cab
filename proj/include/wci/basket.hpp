#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wci/numeric.hpp"

namespace wci {

/// A terminal cyclic quotient point of type 1/r (1, -1, b), written (b, r).
///
/// Valid points have 0 < b <= r/2 and gcd(b, r) = 1. The degenerate (0, 1) is
/// also accepted: it is the unit for packing, {(0,1), (b,r)} -> {(b, r+1)}.
struct Orbifold {
  long b = 0;
  long r = 1;

  bool is_unit() const noexcept { return b == 0 && r == 1; }
  bool is_valid() const noexcept;

  friend bool operator==(const Orbifold&, const Orbifold&) = default;
  /// Ordered by index r, then by b.
  friend std::strong_ordering operator<=>(const Orbifold& x, const Orbifold& y) {
    if (auto cmp = x.r <=> y.r; cmp != 0) {
      return cmp;
    }
    return x.b <=> y.b;
  }
};

/// A multiset of orbifold points, kept in canonical sorted order.
class Basket {
 public:
  Basket() = default;
  /// Throws InvalidInput if some point is not valid.
  explicit Basket(std::vector<Orbifold> points);

  const std::vector<Orbifold>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }

  long total_b() const noexcept;
  long total_r() const noexcept;
  /// Largest index; 1 for an empty basket.
  long max_index() const noexcept;
  /// Distinct points with multiplicities, in canonical order.
  std::vector<std::pair<Orbifold, long>> grouped() const;

  friend bool operator==(const Basket&, const Basket&) = default;
  friend auto operator<=>(const Basket& x, const Basket& y) { return x.points_ <=> y.points_; }

 private:
  std::vector<Orbifold> points_;
};

/// Basket text "n x (b,r); ..." e.g. "2x(1,2); 1x(2,5)". "" is the empty basket.
Basket parse_basket(std::string_view text);
std::string format_basket(const Basket& basket);

/// (B, chi, chi_2): enough data to evaluate every chi_m and K^3 by Reid's formula.
struct FormalBasket {
  Basket basket;
  long chi = 0;
  long chi2 = 0;

  friend bool operator==(const FormalBasket&, const FormalBasket&) = default;
  friend auto operator<=>(const FormalBasket&, const FormalBasket&) = default;
};

/// Euler characteristics chi = chi(O_X) and chi_m for m = 2..6.
struct ChiValues {
  long chi = 0;
  long chi2 = 0;
  long chi3 = 0;
  long chi4 = 0;
  long chi5 = 0;
  long chi6 = 0;

  friend bool operator==(const ChiValues&, const ChiValues&) = default;
};

/// Correction term sum_{j=1}^{m-1} jb(r - jb) / 2r with jb reduced mod r.
Rational l_orbifold(const Orbifold& q, long m);
Rational l_basket(const Basket& basket, long m);

/// K^3 = 2 (chi_2 + 3 chi - l(2)).
Rational k3(const FormalBasket& fb);

/// Riemann-Roch value (2m-1)m(m-1)/12 K^3 - (2m-1) chi + l(m); m >= 2.
Rational chi_m(const FormalBasket& fb, long m);

/// chi_first .. chi_last as integers. Throws BasketInconsistency if one is not
/// integral. Requires 2 <= first <= last + 1.
std::vector<Integer> integral_chis(const FormalBasket& fb, long first, long last);

/// chi_2..chi_6 if all are integers.
std::optional<ChiValues> integral_chi_values(const FormalBasket& fb);

/// Replaces points i and j by their sum. Returns nothing when the sum is not a
/// valid point (gcd or range). Throws InvalidInput on bad indices.
std::optional<Basket> pack(const Basket& basket, std::size_t i, std::size_t j);

/// |b1 r2 - b2 r1| = 1; for the unit (0,1) this reduces to b = 1.
bool is_prime_packing(const Orbifold& p, const Orbifold& q);

/// Canonical unpacking of a single point into points of type (1, q).
/// Writing r = q b + s with 0 <= s < b, (b, r) unpacks to (b-s) x (1,q) and s x (1,q+1).
Basket unpack_canonical(const Orbifold& q);

/// Union of unpack_canonical over every point.
Basket initial_basket(const Basket& basket);

/// Counts of the initial basket that are linear in chi..chi6.
struct InitialCounts {
  long n12 = 0;              ///< number of (1,2)
  long n13 = 0;              ///< number of (1,3)
  long sigma = 0;            ///< total number of points
  long n14_plus_sigma5 = 0;  ///< (1,4) count plus the number of (1,r), r >= 5
};

InitialCounts n0_from_chis(const ChiValues& chis);

/// Number of (1,2)+(1,3) prime packings in the canonical sequence.
long epsilon5(long chi, long chi3, long chi5, long chi6, long sigma5);

struct Sigma5Bounds {
  long lower = 0;
  long upper = 0;
};

/// Bounds on the number of initial points of index >= 5.
Sigma5Bounds sigma5_bounds(const ChiValues& chis);

/// Breadth-first closure of an initial basket under pack, keeping baskets whose
/// chi_3..chi_6 are integral and equal to the targets. Sorted output.
std::vector<FormalBasket> descendants(const Basket& initial, const ChiValues& targets);

/// Same filter, restricted to baskets whose initial basket is exactly `initial`.
/// Enumerates the groupings of consecutive-index points directly instead of
/// exploring the packing closure. Sorted output.
std::vector<FormalBasket> canonical_descendants(const Basket& initial, const ChiValues& targets);

/// sum (r_i - 1/r_i) <= 24 over all points.
bool fano_c2_filter(const Basket& basket);

/// (1 - p_g - P_2 - P_3 + P_5)/12 - sigma5/20, the volume quantity for amplitude +1.
Rational gt_volume_margin(long pg, long p2, long p3, long p5, long sigma5);

/// gt_volume_margin(...) > 0 and K^3 > 0.
bool gt_volume_filter(const FormalBasket& fb, long pg, long p2, long p3, long p5, long sigma5_lower);

/// plurigenera holds P_2..P_6. Checks P_m >= 0, P_{m+2} >= P_m + P_2 + p_g for
/// m = 2..4 and P_{2m} >= 2 P_m - 1 for m = 1..3.
bool pluri_growth_filter(std::span<const long> plurigenera, long pg);

}  // namespace wci
