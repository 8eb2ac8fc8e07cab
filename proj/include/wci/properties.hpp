#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wci/basket.hpp"
#include "wci/candidate.hpp"

namespace wci {

/// Random candidate with weights <= max_weight, degrees <= max_degree,
/// codimension 1..3 and dimension >= 1; never a linear cone.
Candidate random_candidate(std::mt19937_64& rng, long max_weight = 10, long max_degree = 30);

/// Random basket of at most max_size points with indices in 2..max_index.
Basket random_basket(std::mt19937_64& rng, long max_index = 12, std::size_t max_size = 5);

struct PropertyOutcome {
  std::string name;
  long trials = 0;
  long failures = 0;
  std::string first_failure;

  bool passed() const noexcept { return trials > 0 && failures == 0; }
};

/// table_method(series_from_candidate(c, 2 max)) returns c's multisets, cleanly.
PropertyOutcome table_round_trip_property(std::uint64_t seed, long trials);

/// chi_m(fb, 2) = chi_2 for random formal baskets.
PropertyOutcome chi2_self_consistency_property(std::uint64_t seed, long trials);

/// n0_from_chis recovers the (1,2), (1,3) and total counts of the initial basket,
/// and sigma5_bounds brackets its number of points of index >= 5.
PropertyOutcome initial_count_property(std::uint64_t seed, long trials);

/// Every basket appears among the packing descendants of its initial basket.
PropertyOutcome reachability_property(std::uint64_t seed, long trials);

/// All of the above with one seed.
std::vector<PropertyOutcome> run_selftest(std::uint64_t seed, long trials);

}  // namespace wci
