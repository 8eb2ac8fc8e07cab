#include "wci/properties.hpp"

#include <algorithm>
#include <numeric>

#include "wci/screen.hpp"
#include "wci/series.hpp"

namespace wci {

namespace {

long uniform(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

FormalBasket random_formal_basket(std::mt19937_64& rng) {
  Basket basket = random_basket(rng);
  const long chi = uniform(rng, -10, 40);
  const long chi2 = uniform(rng, -10, 40);
  return FormalBasket{std::move(basket), chi, chi2};
}

std::string describe(const FormalBasket& fb) {
  return "[" + format_basket(fb.basket) + "], chi=" + std::to_string(fb.chi) + ", chi2=" + std::to_string(fb.chi2);
}

void fail(PropertyOutcome& out, const std::string& what) {
  if (out.failures++ == 0) {
    out.first_failure = what;
  }
}

}  // namespace

Candidate random_candidate(std::mt19937_64& rng, long max_weight, long max_degree) {
  while (true) {
    const long codim = uniform(rng, 1, 3);
    const long n_weights = codim + uniform(rng, 2, 5);
    std::vector<long> weights(static_cast<std::size_t>(n_weights));
    std::vector<long> degrees(static_cast<std::size_t>(codim));
    for (long& a : weights) {
      a = uniform(rng, 1, max_weight);
    }
    for (long& d : degrees) {
      d = uniform(rng, 2, max_degree);
    }
    Candidate c = Candidate::normalize(std::move(weights), std::move(degrees));
    if (!is_linear_cone(c)) {
      return c;
    }
  }
}

Basket random_basket(std::mt19937_64& rng, long max_index, std::size_t max_size) {
  const auto size = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(max_size)));
  std::vector<Orbifold> pts;
  while (pts.size() < size) {
    const long r = uniform(rng, 2, max_index);
    const long b = uniform(rng, 1, r / 2);
    if (std::gcd(b, r) == 1) {
      pts.push_back(Orbifold{b, r});
    }
  }
  return Basket(std::move(pts));
}

PropertyOutcome table_round_trip_property(std::uint64_t seed, long trials) {
  PropertyOutcome out{"table_round_trip", trials, 0, {}};
  std::mt19937_64 rng(seed);
  for (long i = 0; i < trials; ++i) {
    const Candidate c = random_candidate(rng);
    const long top = std::max(c.weights().back(), c.degrees().back());
    const RecoveredPresentation rec = table_method(series_from_candidate(c, static_cast<std::size_t>(2 * top)));
    if (!rec.residual_clean || rec.weights != c.weights() || rec.degrees != c.degrees()) {
      fail(out, c.to_text());
    }
  }
  return out;
}

PropertyOutcome chi2_self_consistency_property(std::uint64_t seed, long trials) {
  PropertyOutcome out{"chi2_self_consistency", trials, 0, {}};
  std::mt19937_64 rng(seed);
  for (long i = 0; i < trials; ++i) {
    const FormalBasket fb = random_formal_basket(rng);
    if (chi_m(fb, 2) != fb.chi2) {
      fail(out, describe(fb));
    }
  }
  return out;
}

PropertyOutcome initial_count_property(std::uint64_t seed, long trials) {
  PropertyOutcome out{"initial_counts", trials, 0, {}};
  std::mt19937_64 rng(seed);
  for (long i = 0; i < trials; ++i) {
    const FormalBasket fb = random_formal_basket(rng);
    const std::optional<ChiValues> chis = integral_chi_values(fb);
    if (!chis) {
      fail(out, "non-integral chi for " + describe(fb));
      continue;
    }
    const Basket initial = initial_basket(fb.basket);
    const auto count_if = [&](auto pred) { return static_cast<long>(std::ranges::count_if(initial.points(), pred)); };
    const long n12 = count_if([](const Orbifold& q) { return q.r == 2; });
    const long n13 = count_if([](const Orbifold& q) { return q.r == 3; });
    const long sigma5 = count_if([](const Orbifold& q) { return q.r >= 5; });
    const InitialCounts n0 = n0_from_chis(*chis);
    const Sigma5Bounds range = sigma5_bounds(*chis);
    if (n0.n12 != n12 || n0.n13 != n13 || n0.sigma != static_cast<long>(initial.size()) || range.lower > sigma5 ||
        sigma5 > range.upper) {
      fail(out, describe(fb));
    }
  }
  return out;
}

PropertyOutcome reachability_property(std::uint64_t seed, long trials) {
  PropertyOutcome out{"packing_reachability", trials, 0, {}};
  std::mt19937_64 rng(seed);
  for (long i = 0; i < trials; ++i) {
    const FormalBasket fb = random_formal_basket(rng);
    const std::optional<ChiValues> chis = integral_chi_values(fb);
    if (!chis) {
      fail(out, "non-integral chi for " + describe(fb));
      continue;
    }
    const std::vector<FormalBasket> reached = descendants(initial_basket(fb.basket), *chis);
    if (!std::ranges::binary_search(reached, fb)) {
      fail(out, describe(fb));
    }
  }
  return out;
}

std::vector<PropertyOutcome> run_selftest(std::uint64_t seed, long trials) {
  return {table_round_trip_property(seed, trials), chi2_self_consistency_property(seed, trials),
          initial_count_property(seed, trials), reachability_property(seed, trials)};
}

}  // namespace wci
