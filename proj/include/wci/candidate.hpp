#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace wci {

/// A normalized weighted complete intersection X_{d_1..d_c} in P(a_0..a_n).
///
/// Weights and degrees are stored sorted ascending. The dimension n - c and
/// the amplitude sum(d) - sum(a) are derived. Instances are immutable and
/// can only be obtained through normalize() or parse_candidate().
class Candidate {
 public:
  /// Sorts both lists. Throws InvalidInput on empty lists, entries < 1,
  /// or n - c < 1.
  static Candidate normalize(std::vector<long> weights, std::vector<long> degrees);

  const std::vector<long>& weights() const noexcept { return weights_; }
  const std::vector<long>& degrees() const noexcept { return degrees_; }

  long codim() const noexcept { return static_cast<long>(degrees_.size()); }
  long dim() const noexcept { return static_cast<long>(weights_.size()) - 1 - codim(); }
  long amplitude() const noexcept { return amplitude_; }

  /// a_i with the mathematical indexing a_0 <= ... <= a_n.
  long a(long i) const { return weights_.at(static_cast<std::size_t>(i)); }
  /// d_j with the mathematical indexing d_1 <= ... <= d_c.
  long d(long j) const { return degrees_.at(static_cast<std::size_t>(j - 1)); }

  /// Text form "a0,a1,...,an / d1,...,dc".
  std::string to_text() const;
  /// Human label such as "X_{10} in P(1,1,1,2,5)".
  std::string label() const;

  friend bool operator==(const Candidate&, const Candidate&) = default;
  /// Codimension, then degree sum, then degrees and weights lexicographically.
  friend std::strong_ordering operator<=>(const Candidate& x, const Candidate& y);

 private:
  Candidate(std::vector<long> weights, std::vector<long> degrees, long amplitude)
      : weights_(std::move(weights)), degrees_(std::move(degrees)), amplitude_(amplitude) {}

  std::vector<long> weights_;
  std::vector<long> degrees_;
  long amplitude_ = 0;
};

/// Parses "a0,a1,...,an / d1,...,dc"; whitespace is ignored.
Candidate parse_candidate(std::string_view text);

struct DeltaVector {
  std::vector<long> deltas;  ///< delta_j = d_j - a_{j+dim}, j = 1..c
  long sum = 0;
};

DeltaVector deltas(const Candidate& c);

}  // namespace wci
