#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wci/basket.hpp"
#include "wci/candidate.hpp"
#include "wci/screen.hpp"
#include "wci/series.hpp"
#include "wci/tuple.hpp"

namespace wci {

/// A verified candidate together with the data that produced it.
struct ClassificationRecord {
  Candidate candidate;
  std::optional<FormalBasket> formal_basket;  ///< absent for Calabi-Yau records
  ScreenReport screen;
  bool series_verified = false;
  std::vector<std::string> provenance;  ///< sorted, e.g. "gt:index-cap (9,0,...;...)"
};

/// Exhaustive search for amplitude 0: weights with a_0 a_1 a_2 a_3 <= ((c+4)/c)^c,
/// larger weights bounded by delta = a_0 + ... + a_3, degrees recovered from the
/// delta identities, then the full screen. Sorted output.
std::vector<ClassificationRecord> classify_cy();

/// 5 for amplitude -1, 6 for amplitude +1.
int horizon_for(int alpha);

/// Calls visit on every admissible tuple, ordered lexicographically by
/// (mu_1, mu_2, nu_2, mu_3, nu_3, ...).
void for_each_tuple(int alpha, const std::function<void(const Tuple&)>& visit);
/// Every admissible tuple, sorted.
std::vector<Tuple> enumerate_tuples(int alpha);

/// Euler characteristics read off the low-degree series of the tuple.
/// Amplitude -1: chi = 1, chi_{m+1} = -P_{-m}. Amplitude +1: chi = 1 - p_g, chi_m = P_m.
ChiValues tuple_to_chis(const Tuple& t, int alpha);

/// Table-method caps for the amplitude: codimension <= 3 (-1) or <= 5 (+1).
TableLimits table_limits_for(int alpha);

struct BasketSearch {
  std::vector<FormalBasket> baskets;  ///< sorted, deduplicated
  std::string bound;                  ///< which bound limited the indices r_i >= 5
  std::map<std::string, long> pruned_by;
  std::optional<std::string> violation;  ///< set when no bound applies to the tuple
};

/// Formal baskets compatible with the tuple's Euler characteristics.
BasketSearch candidate_formal_baskets(const Tuple& t, int alpha);

/// Series of the formal basket up to M (bound_M unless overridden), table method,
/// then screen, re-expansion and largest-weight checks. Nothing if any step fails.
std::optional<ClassificationRecord> realize(const FormalBasket& fb, int alpha,
                                            std::optional<long> m_override = std::nullopt);

struct ClassifyConfig {
  std::optional<long> m_override = 300;  ///< ignored when full is set
  bool full = false;                     ///< use bound_M for every basket
  std::set<long> codims;                 ///< empty: all codimensions
  std::optional<Tuple> only_tuple;       ///< restrict the search to one tuple
  unsigned jobs = 1;
};

struct RunStatistics {
  long tuples = 0;
  long baskets = 0;
  long realized = 0;
  std::map<std::string, long> pruned_by;
};

struct RunReport {
  int alpha = 0;
  ClassifyConfig config;
  std::vector<ClassificationRecord> records;
  RunStatistics statistics;
  std::vector<std::string> exhaustiveness_violations;
};

/// Full driver for amplitude -1, 0 or +1. Output does not depend on config.jobs.
/// Throws PreconditionError for any other amplitude.
RunReport classify(int alpha, const ClassifyConfig& config = {});

}  // namespace wci
