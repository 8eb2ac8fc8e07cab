#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace oracle {

Integer binomial(long n, long k) {
  if (k < 0 || n < k || n < 0) {
    return 0;
  }
  Integer out = 1;
  for (long i = 1; i <= k; ++i) {
    out = out * (n - k + i) / i;
  }
  return out;
}

std::vector<Integer> monomial_counts(const std::vector<long>& weights, long bound) {
  std::vector<Integer> counts(static_cast<std::size_t>(bound + 1), 0);
  std::function<void(std::size_t, long)> place = [&](std::size_t i, long degree) {
    if (i == weights.size()) {
      ++counts[static_cast<std::size_t>(degree)];
      return;
    }
    for (long d = degree; d <= bound; d += weights[i]) {
      place(i + 1, d);
    }
  };
  place(0, 0);
  return counts;
}

std::vector<Integer> koszul_series(const std::vector<long>& weights, const std::vector<long>& degrees, long bound) {
  const std::vector<Integer> mono = monomial_counts(weights, bound);
  std::vector<Integer> out(static_cast<std::size_t>(bound + 1), 0);
  const std::size_t subsets = std::size_t{1} << degrees.size();
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    long shift = 0;
    int sign = 1;
    for (std::size_t j = 0; j < degrees.size(); ++j) {
      if (mask & (std::size_t{1} << j)) {
        shift += degrees[j];
        sign = -sign;
      }
    }
    for (long m = shift; m <= bound; ++m) {
      out[static_cast<std::size_t>(m)] += sign * mono[static_cast<std::size_t>(m - shift)];
    }
  }
  return out;
}

namespace {

// Calls visit(subset positions, gcd) for every nonempty subset of weights.
void for_each_subset(const std::vector<long>& w, const std::function<void(const std::vector<std::size_t>&, long)>& visit) {
  const std::size_t n = w.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> pos;
    long g = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) {
        pos.push_back(i);
        g = std::gcd(g, w[i]);
      }
    }
    visit(pos, g);
  }
}

long degrees_divisible(const wci::Candidate& c, long h) {
  return std::ranges::count_if(c.degrees(), [h](long d) { return d % h == 0; });
}

}  // namespace

bool wellformed_by_subsets(const wci::Candidate& c) {
  bool ok = true;
  const std::size_t n = c.weights().size();
  for_each_subset(c.weights(), [&](const std::vector<std::size_t>& pos, long g) {
    if (pos.size() == n - 1 && g != 1) {
      ok = false;
    }
  });
  return ok;
}

bool isolated_by_subsets(const wci::Candidate& c) {
  bool ok = true;
  const auto mu_max = static_cast<std::size_t>(c.codim() + 1);
  for_each_subset(c.weights(), [&](const std::vector<std::size_t>& pos, long h) {
    if (h == 1) {
      return;
    }
    if (pos.size() > mu_max) {
      ok = false;
    } else if (degrees_divisible(c, h) < static_cast<long>(pos.size()) - 1) {
      ok = false;
    }
  });
  return ok;
}

bool terminal_by_subsets(const wci::Candidate& c) {
  if (!isolated_by_subsets(c)) {
    return false;
  }
  bool ok = true;
  const auto& w = c.weights();
  const auto mu_max = static_cast<std::size_t>(c.codim() + 1);
  for_each_subset(w, [&](const std::vector<std::size_t>& pos, long h) {
    if (h == 1 || pos.size() > mu_max) {
      return;
    }
    const auto mu = static_cast<long>(pos.size());
    const long k = degrees_divisible(c, h);
    if (k >= mu) {
      return;
    }
    bool outside = false;
    for (std::size_t m = 0; m < w.size(); ++m) {
      if (std::ranges::find(pos, m) == pos.end() && (w[m] + c.amplitude()) % h == 0) {
        outside = true;
      }
    }
    if (!(k == mu - 1 && outside)) {
      ok = false;
    }
  });
  return ok;
}

Rational rr_l(const wci::Basket& basket, long m) {
  Rational total = 0;
  for (const wci::Orbifold& q : basket.points()) {
    if (q.is_unit()) {
      continue;
    }
    for (long j = 1; j <= m - 1; ++j) {
      const long jb = (j * q.b) % q.r;
      total += Rational(jb * (q.r - jb), 2 * q.r);
    }
  }
  return total;
}

Rational rr_k3(const wci::Basket& basket, long chi, long chi2) { return 2 * (chi2 + 3 * chi - rr_l(basket, 2)); }

Rational rr_chi(const wci::Basket& basket, long chi, long chi2, long m) {
  return Rational((2 * m - 1) * m * (m - 1), 12) * rr_k3(basket, chi, chi2) - (2 * m - 1) * chi + rr_l(basket, m);
}

std::pair<wci::Orbifold, wci::Orbifold> stern_brocot_parents(const wci::Orbifold& q) {
  // Parents (b1, r1), (b - b1, r - r1) with b1 r - b r1 = 1... i.e. b1 = r^{-1} mod b.
  long b1 = 1;
  while ((b1 * q.r) % q.b != 1 % q.b) {
    ++b1;
  }
  const long r1 = (b1 * q.r - 1) / q.b;
  wci::Orbifold left{b1, r1};
  wci::Orbifold right{q.b - b1, q.r - r1};
  return {left, right};
}

long packings_of_index(const wci::Orbifold& q, long index) {
  if (q.b == 1) {
    return 0;
  }
  const auto [left, right] = stern_brocot_parents(q);
  return (q.r == index ? 1 : 0) + packings_of_index(left, index) + packings_of_index(right, index);
}

bool prime_reachable(const wci::Basket& from, const wci::Basket& to) {
  std::set<wci::Basket> seen;
  const auto& targets = to.points();
  std::function<bool(const wci::Basket&)> search = [&](const wci::Basket& current) {
    if (current == to) {
      return true;
    }
    if (current.size() <= to.size() || !seen.insert(current).second) {
      return false;
    }
    const auto& pts = current.points();
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        const wci::Orbifold& p = pts[i];
        const wci::Orbifold& q = pts[j];
        const long det = p.b * q.r - q.b * p.r;
        if (det != 1 && det != -1) {
          continue;
        }
        const wci::Orbifold merged{p.b + q.b, p.r + q.r};
        // Only points that fit inside some target point can lead anywhere.
        const bool fits = std::ranges::any_of(targets, [&](const wci::Orbifold& t) {
          return merged.b <= t.b && merged.r <= t.r;
        });
        if (!fits) {
          continue;
        }
        std::vector<wci::Orbifold> next;
        for (std::size_t k = 0; k < pts.size(); ++k) {
          if (k != i && k != j) {
            next.push_back(pts[k]);
          }
        }
        next.push_back(merged);
        if (search(wci::Basket(std::move(next)))) {
          return true;
        }
      }
    }
    return false;
  };
  return search(from);
}

std::set<Family> cy_table() {
  return {
      {{1, 1, 1, 1, 1}, {5}},
      {{1, 1, 1, 1, 2}, {6}},
      {{1, 1, 1, 1, 4}, {8}},
      {{1, 1, 1, 2, 5}, {10}},
      {{1, 1, 1, 1, 1, 1}, {2, 4}},
      {{1, 1, 1, 1, 1, 1}, {3, 3}},
      {{1, 1, 1, 1, 1, 2}, {3, 4}},
      {{1, 1, 1, 1, 1, 3}, {2, 6}},
      {{1, 1, 1, 1, 2, 2}, {4, 4}},
      {{1, 1, 1, 2, 2, 3}, {4, 6}},
      {{1, 1, 2, 2, 3, 3}, {6, 6}},
      {{1, 1, 1, 1, 1, 1, 1}, {2, 2, 3}},
      {{1, 1, 1, 1, 1, 1, 1, 1}, {2, 2, 2, 2}},
  };
}

}  // namespace oracle
