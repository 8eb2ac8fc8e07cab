#include "wci/basket.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <functional>
#include <numeric>
#include <regex>
#include <set>

namespace wci {

namespace {

long residue(long value, long modulus) {
  const long rem = value % modulus;
  return rem < 0 ? rem + modulus : rem;
}

std::optional<ChiValues> chi_values_from(const FormalBasket& fb) {
  try {
    const std::vector<Integer> chis = integral_chis(fb, 2, 6);
    return ChiValues{fb.chi,
                     static_cast<long>(chis[0]),
                     static_cast<long>(chis[1]),
                     static_cast<long>(chis[2]),
                     static_cast<long>(chis[3]),
                     static_cast<long>(chis[4])};
  } catch (const BasketInconsistency&) {
    return std::nullopt;
  }
}

void require_initial(const Basket& initial) {
  for (const Orbifold& q : initial.points()) {
    if (q.b != 1) {
      throw PreconditionError("an initial basket contains only points of type (1, r)");
    }
  }
}

// Multisets of parts (x, y), x, y >= 1, gcd(x, y) = 1, summing to (u, v).
// Parts are generated in non-increasing lexicographic order so each multiset
// appears once.
void coprime_partitions(long u, long v, std::pair<long, long> cap, std::vector<std::pair<long, long>>& parts,
                        const std::function<void()>& emit) {
  if (u == 0 && v == 0) {
    emit();
    return;
  }
  if (u == 0 || v == 0) {
    return;
  }
  for (long x = std::min(u, cap.first); x >= 1; --x) {
    const long ymax = x == cap.first ? std::min(v, cap.second) : v;
    for (long y = ymax; y >= 1; --y) {
      if (std::gcd(x, y) != 1) {
        continue;
      }
      parts.emplace_back(x, y);
      coprime_partitions(u - x, v - y, {x, y}, parts, emit);
      parts.pop_back();
    }
  }
}

}  // namespace

bool Orbifold::is_valid() const noexcept {
  if (is_unit()) {
    return true;
  }
  return b > 0 && r >= 2 && 2 * b <= r && std::gcd(b, r) == 1;
}

Basket::Basket(std::vector<Orbifold> points) : points_(std::move(points)) {
  for (const Orbifold& q : points_) {
    if (!q.is_valid()) {
      throw InvalidInput("(" + std::to_string(q.b) + "," + std::to_string(q.r) +
                         ") is not a terminal point type (need 0 < b <= r/2, gcd(b,r) = 1)");
    }
  }
  std::ranges::sort(points_);
}

long Basket::total_b() const noexcept {
  long total = 0;
  for (const Orbifold& q : points_) {
    total += q.b;
  }
  return total;
}

long Basket::total_r() const noexcept {
  long total = 0;
  for (const Orbifold& q : points_) {
    total += q.r;
  }
  return total;
}

long Basket::max_index() const noexcept { return points_.empty() ? 1 : points_.back().r; }

std::vector<std::pair<Orbifold, long>> Basket::grouped() const {
  std::vector<std::pair<Orbifold, long>> out;
  for (const Orbifold& q : points_) {
    if (!out.empty() && out.back().first == q) {
      ++out.back().second;
    } else {
      out.emplace_back(q, 1);
    }
  }
  return out;
}

Basket parse_basket(std::string_view text) {
  std::string compact;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) {
      compact += ch;
    }
  }
  std::vector<Orbifold> points;
  if (compact.empty()) {
    return Basket{};
  }
  static const std::regex entry(R"(^(?:(\d+)[xX])?\((\d+),(\d+)\)$)");
  std::size_t start = 0;
  while (start <= compact.size()) {
    std::size_t end = compact.find(';', start);
    if (end == std::string::npos) {
      end = compact.size();
    }
    const std::string field = compact.substr(start, end - start);
    if (!field.empty()) {
      std::smatch match;
      if (!std::regex_match(field, match, entry)) {
        throw InvalidInput("malformed basket entry '" + field + "'");
      }
      const long count = match[1].matched ? std::stol(match[1].str()) : 1;
      const Orbifold q{std::stol(match[2].str()), std::stol(match[3].str())};
      points.insert(points.end(), static_cast<std::size_t>(count), q);
    }
    start = end + 1;
  }
  return Basket(std::move(points));
}

std::string format_basket(const Basket& basket) {
  std::string out;
  for (const auto& [q, count] : basket.grouped()) {
    if (!out.empty()) {
      out += "; ";
    }
    out += std::to_string(count) + "x(" + std::to_string(q.b) + "," + std::to_string(q.r) + ")";
  }
  return out;
}

Rational l_orbifold(const Orbifold& q, long m) {
  if (m < 1) {
    throw PreconditionError("l(m) is defined for m >= 1");
  }
  Rational total = 0;
  for (long j = 1; j < m; ++j) {
    const long jb = residue(j * q.b, q.r);
    total += Rational(jb * (q.r - jb), 2 * q.r);
  }
  return total;
}

Rational l_basket(const Basket& basket, long m) {
  Rational total = 0;
  for (const auto& [q, count] : basket.grouped()) {
    total += count * l_orbifold(q, m);
  }
  return total;
}

Rational k3(const FormalBasket& fb) { return 2 * (Rational(fb.chi2 + 3 * fb.chi) - l_basket(fb.basket, 2)); }

Rational chi_m(const FormalBasket& fb, long m) {
  if (m < 2) {
    throw PreconditionError("chi_m is evaluated for m >= 2; chi is a separate field");
  }
  const Rational coefficient((2 * m - 1) * m * (m - 1), 12);
  return coefficient * k3(fb) - (2 * m - 1) * fb.chi + l_basket(fb.basket, m);
}

std::vector<Integer> integral_chis(const FormalBasket& fb, long first, long last) {
  if (first < 2) {
    throw PreconditionError("chi_m is evaluated for m >= 2");
  }
  std::vector<Integer> out;
  if (last < first) {
    return out;
  }
  // Work over the common denominator D = lcm(2 r_Q) so every step is integral.
  struct Term {
    long b;
    long r;
    Integer weight;  // multiplicity * D / (2r)
  };
  std::vector<Term> terms;
  Integer denom = 2;
  for (const auto& [q, count] : fb.basket.grouped()) {
    if (q.is_unit()) {
      continue;
    }
    denom = boost::multiprecision::lcm(denom, Integer(2 * q.r));
  }
  for (const auto& [q, count] : fb.basket.grouped()) {
    if (!q.is_unit()) {
      terms.push_back({q.b, q.r, count * (denom / (2 * q.r))});
    }
  }
  Integer scaled_l = 0;    // D * l(m)
  Integer scaled_l2 = 0;   // D * l(2)
  const Integer scaled_k3_base = 2 * Integer(fb.chi2 + 3 * fb.chi) * denom;
  const Integer twelve_d = 12 * denom;
  out.reserve(static_cast<std::size_t>(last - first + 1));
  for (long m = 1; m <= last; ++m) {
    if (m == 2) {
      scaled_l2 = scaled_l;
    }
    if (m >= first) {
      const Integer scaled_k3 = scaled_k3_base - 2 * scaled_l2;
      const Integer numerator = Integer((2 * m - 1) * m * (m - 1)) * scaled_k3 -
                                Integer(12 * (2 * m - 1)) * fb.chi * denom + 12 * scaled_l;
      if (numerator % twelve_d != 0) {
        throw BasketInconsistency("chi_" + std::to_string(m) + " is not an integer for basket [" +
                                  format_basket(fb.basket) + "]");
      }
      out.push_back(numerator / twelve_d);
    }
    // l(m+1) = l(m) + sum_Q f_Q(m)
    for (const Term& t : terms) {
      const long jb = residue(m * t.b, t.r);
      if (jb != 0) {
        scaled_l += t.weight * (jb * (t.r - jb));
      }
    }
  }
  return out;
}

std::optional<ChiValues> integral_chi_values(const FormalBasket& fb) { return chi_values_from(fb); }

std::optional<Basket> pack(const Basket& basket, std::size_t i, std::size_t j) {
  const auto& pts = basket.points();
  if (i == j || i >= pts.size() || j >= pts.size()) {
    throw InvalidInput("pack needs two distinct point indices");
  }
  const Orbifold merged{pts[i].b + pts[j].b, pts[i].r + pts[j].r};
  if (!merged.is_valid() || merged.is_unit()) {
    return std::nullopt;
  }
  std::vector<Orbifold> next;
  next.reserve(pts.size() - 1);
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (k != i && k != j) {
      next.push_back(pts[k]);
    }
  }
  next.push_back(merged);
  Basket out(std::move(next));
  assert(out.total_b() == basket.total_b() && out.total_r() == basket.total_r());
  return out;
}

bool is_prime_packing(const Orbifold& p, const Orbifold& q) {
  const long det = p.b * q.r - q.b * p.r;
  return det == 1 || det == -1;
}

Basket unpack_canonical(const Orbifold& q) {
  if (!q.is_valid() || q.r < 2) {
    throw PreconditionError("unpack_canonical needs a point with r >= 2");
  }
  if (q.b == 1) {
    return Basket({q});
  }
  const long quotient = q.r / q.b;
  const long rem = q.r % q.b;
  std::vector<Orbifold> pts(static_cast<std::size_t>(q.b - rem), Orbifold{1, quotient});
  pts.insert(pts.end(), static_cast<std::size_t>(rem), Orbifold{1, quotient + 1});
  return Basket(std::move(pts));
}

Basket initial_basket(const Basket& basket) {
  std::vector<Orbifold> pts;
  for (const Orbifold& q : basket.points()) {
    if (q.is_unit()) {
      pts.push_back(q);
      continue;
    }
    const Basket part = unpack_canonical(q);
    pts.insert(pts.end(), part.points().begin(), part.points().end());
  }
  return Basket(std::move(pts));
}

InitialCounts n0_from_chis(const ChiValues& x) {
  InitialCounts out;
  out.n12 = 5 * x.chi + 6 * x.chi2 - 4 * x.chi3 + x.chi4;
  out.n13 = 4 * x.chi + 2 * x.chi2 + 2 * x.chi3 - 3 * x.chi4 + x.chi5;
  out.sigma = 10 * x.chi + 5 * x.chi2 - x.chi3;
  out.n14_plus_sigma5 = x.chi - 3 * x.chi2 + x.chi3 + 2 * x.chi4 - x.chi5;
  return out;
}

long epsilon5(long chi, long chi3, long chi5, long chi6, long sigma5) {
  return 2 * chi - chi3 + 2 * chi5 - chi6 - sigma5;
}

Sigma5Bounds sigma5_bounds(const ChiValues& x) {
  Sigma5Bounds out;
  out.upper = std::min(x.chi - 3 * x.chi2 + x.chi3 + 2 * x.chi4 - x.chi5,
                       2 * x.chi - x.chi3 + 2 * x.chi5 - x.chi6);
  out.lower = std::max({0L, -3 * x.chi - 6 * x.chi2 + 3 * x.chi3 - x.chi4 + 2 * x.chi5 - x.chi6,
                        -2 * x.chi - 2 * x.chi2 - 3 * x.chi3 + 3 * x.chi4 + x.chi5 - x.chi6});
  return out;
}

std::vector<FormalBasket> descendants(const Basket& initial, const ChiValues& targets) {
  require_initial(initial);
  std::set<Basket> visited{initial};
  std::deque<Basket> frontier{initial};
  while (!frontier.empty()) {
    const Basket current = std::move(frontier.front());
    frontier.pop_front();
    const auto& pts = current.points();
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i > 0 && pts[i] == pts[i - 1]) {
        continue;  // equal points give equal packings
      }
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        if (j > i + 1 && pts[j] == pts[j - 1]) {
          continue;
        }
        if (std::optional<Basket> next = pack(current, i, j); next && visited.insert(*next).second) {
          frontier.push_back(std::move(*next));
        }
      }
    }
  }
  std::vector<FormalBasket> out;
  for (const Basket& b : visited) {
    FormalBasket fb{b, targets.chi, targets.chi2};
    if (const auto chis = chi_values_from(fb); chis && *chis == targets) {
      out.push_back(std::move(fb));
    }
  }
  return out;
}

std::vector<FormalBasket> canonical_descendants(const Basket& initial, const ChiValues& targets) {
  require_initial(initial);
  std::vector<FormalBasket> out;
  if (initial.empty()) {
    FormalBasket fb{initial, targets.chi, targets.chi2};
    if (const auto chis = chi_values_from(fb); chis && *chis == targets) {
      out.push_back(std::move(fb));
    }
    return out;
  }
  const long qmin = initial.points().front().r;
  const long qmax = initial.points().back().r;
  std::vector<long> count(static_cast<std::size_t>(qmax + 2), 0);
  for (const Orbifold& q : initial.points()) {
    ++count[static_cast<std::size_t>(q.r)];
  }

  std::vector<Orbifold> chosen;
  // Processes the adjacent pair (q, q+1); `taken` copies of (1,q) are already
  // grouped with q-1.
  std::function<void(long, long)> visit = [&](long q, long taken) {
    const long available = count[static_cast<std::size_t>(q)] - taken;
    if (q == qmax) {
      const std::size_t mark = chosen.size();
      chosen.insert(chosen.end(), static_cast<std::size_t>(available), Orbifold{1, q});
      FormalBasket fb{Basket(chosen), targets.chi, targets.chi2};
      if (const auto chis = chi_values_from(fb); chis && *chis == targets) {
        out.push_back(std::move(fb));
      }
      chosen.resize(mark);
      return;
    }
    const long next_count = count[static_cast<std::size_t>(q + 1)];
    for (long u = 0; u <= available; ++u) {
      const std::size_t mark = chosen.size();
      chosen.insert(chosen.end(), static_cast<std::size_t>(available - u), Orbifold{1, q});
      if (u == 0) {
        visit(q + 1, 0);
      } else {
        for (long v = 1; v <= next_count; ++v) {
          std::vector<std::pair<long, long>> parts;
          coprime_partitions(u, v, {u, v}, parts, [&] {
            const std::size_t inner = chosen.size();
            for (const auto& [x, y] : parts) {
              chosen.push_back(Orbifold{x + y, q * x + (q + 1) * y});
            }
            visit(q + 1, v);
            chosen.resize(inner);
          });
        }
      }
      chosen.resize(mark);
    }
  };
  visit(qmin, 0);
  std::ranges::sort(out);
  return out;
}

bool fano_c2_filter(const Basket& basket) {
  Rational total = 0;
  for (const auto& [q, count] : basket.grouped()) {
    total += count * (Rational(q.r) - Rational(1, q.r));
  }
  return total <= 24;
}

Rational gt_volume_margin(long pg, long p2, long p3, long p5, long sigma5) {
  return Rational(1 - pg - p2 - p3 + p5, 12) - Rational(sigma5, 20);
}

bool gt_volume_filter(const FormalBasket& fb, long pg, long p2, long p3, long p5, long sigma5_lower) {
  return gt_volume_margin(pg, p2, p3, p5, sigma5_lower) > 0 && k3(fb) > 0;
}

bool pluri_growth_filter(std::span<const long> plurigenera, long pg) {
  if (plurigenera.size() != 5) {
    throw PreconditionError("pluri_growth_filter needs P_2..P_6");
  }
  const auto P = [&](long m) { return plurigenera[static_cast<std::size_t>(m - 2)]; };
  if (pg < 0 || std::ranges::any_of(plurigenera, [](long p) { return p < 0; })) {
    return false;
  }
  for (long m = 2; m + 2 <= 6; ++m) {
    if (P(m + 2) < P(m) + P(2) + pg) {
      return false;
    }
  }
  const auto Pany = [&](long m) { return m == 1 ? pg : P(m); };
  for (long m = 1; 2 * m <= 6; ++m) {
    if (Pany(2 * m) < 2 * Pany(m) - 1) {
      return false;
    }
  }
  return true;
}

}  // namespace wci
