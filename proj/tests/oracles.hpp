// Independent reference computations used only by the tests. Each one follows
// the definition directly and shares no code path with the library routine it
// checks.
#pragma once

#include <map>
#include <set>
#include <vector>

#include "wci/basket.hpp"
#include "wci/candidate.hpp"
#include "wci/numeric.hpp"

namespace oracle {

using wci::Integer;
using wci::Rational;

Integer binomial(long n, long k);

/// Number of monomials of each weighted degree 0..bound, by enumerating exponents.
std::vector<Integer> monomial_counts(const std::vector<long>& weights, long bound);

/// h^0(O_X(m)) for m <= bound from the Koszul resolution of a complete
/// intersection: sum over subsets S of degrees of (-1)^|S| #monomials(m - sum S).
std::vector<Integer> koszul_series(const std::vector<long>& weights, const std::vector<long>& degrees, long bound);

/// Every subset of weights (by position) checked literally.
bool wellformed_by_subsets(const wci::Candidate& c);
bool isolated_by_subsets(const wci::Candidate& c);
bool terminal_by_subsets(const wci::Candidate& c);

/// Riemann-Roch evaluated term by term in exact rationals.
Rational rr_l(const wci::Basket& basket, long m);
Rational rr_k3(const wci::Basket& basket, long chi, long chi2);
Rational rr_chi(const wci::Basket& basket, long chi, long chi2, long m);

/// The two points whose prime packing gives (b, r): in the Stern-Brocot tree the
/// fraction b/r is the mediant of its parents. Requires b >= 2.
std::pair<wci::Orbifold, wci::Orbifold> stern_brocot_parents(const wci::Orbifold& q);

/// Number of points of index `index` built along the way when (b, r) is assembled
/// from (1, q) points by prime packings (its Stern-Brocot subtree, leaves excluded).
long packings_of_index(const wci::Orbifold& q, long index);

/// Depth-first search from `from` using prime packings only.
bool prime_reachable(const wci::Basket& from, const wci::Basket& to);

/// The known anticanonical Calabi-Yau families as (weights, degrees) pairs.
using Family = std::pair<std::vector<long>, std::vector<long>>;
std::set<Family> cy_table();

}  // namespace oracle
