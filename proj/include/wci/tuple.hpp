#pragma once

#include <array>
#include <compare>
#include <string>
#include <string_view>

#include "wci/candidate.hpp"

namespace wci {

/// Counts of small weights and degrees: mu[i] = #{a_j = i}, nu[i] = #{d_j = i}
/// for i <= horizon. These are the search coordinates of the classification.
struct Tuple {
  static constexpr int kMaxHorizon = 6;

  int horizon = 0;
  std::array<int, kMaxHorizon + 1> mu{};  ///< mu[1..horizon]; mu[0] unused
  std::array<int, kMaxHorizon + 1> nu{};  ///< nu[2..horizon]; nu[0], nu[1] unused

  int weight_count() const noexcept;
  int degree_count() const noexcept;
  std::string to_string() const;

  friend bool operator==(const Tuple&, const Tuple&) = default;
  friend auto operator<=>(const Tuple&, const Tuple&) = default;
};

/// Counts of the candidate's weights and degrees up to the horizon.
Tuple tuple_of(const Candidate& c, int horizon);

/// Inverse of Tuple::to_string: "(mu_1,...,mu_h;nu_2,...,nu_h)". Throws InvalidInput.
Tuple parse_tuple(std::string_view text);

}  // namespace wci
