#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "wci/basket.hpp"
#include "wci/properties.hpp"

using wci::Basket;
using wci::FormalBasket;
using wci::Orbifold;
using wci::Rational;
using wci::parse_basket;

namespace {

FormalBasket random_formal(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> chi(-10, 40);
  Basket b = wci::random_basket(rng);
  const long x = chi(rng);
  const long y = chi(rng);
  return FormalBasket{std::move(b), x, y};
}

}  // namespace

TEST_CASE("orbifold validity and basket text") {
  CHECK(Orbifold{1, 2}.is_valid());
  CHECK(Orbifold{0, 1}.is_valid());
  CHECK_FALSE(Orbifold{2, 4}.is_valid());
  CHECK_FALSE(Orbifold{3, 5}.is_valid());
  CHECK_FALSE(Orbifold{0, 2}.is_valid());

  const Basket b = parse_basket(" 1x(2,5); 2X(1,2) ;(1,3)");
  CHECK(b.size() == 4);
  CHECK(wci::format_basket(b) == "2x(1,2); 1x(1,3); 1x(2,5)");
  CHECK(parse_basket(wci::format_basket(b)) == b);
  CHECK(parse_basket("").empty());
  CHECK(b.total_b() == 5);
  CHECK(b.total_r() == 12);
  CHECK(b.max_index() == 5);
  CHECK(Basket{}.max_index() == 1);
  CHECK_THROWS_AS(parse_basket("(2,4)"), wci::InvalidInput);
  CHECK_THROWS_AS(parse_basket("2x(1,2) 1x(1,3)"), wci::InvalidInput);
  CHECK_THROWS_AS(parse_basket("x(1,2)"), wci::InvalidInput);
}

TEST_CASE("correction terms") {
  CHECK(wci::l_orbifold({1, 2}, 2) == Rational(1, 4));
  CHECK(wci::l_orbifold({2, 5}, 3) == 1);
  CHECK(wci::l_orbifold({3, 7}, 1) == 0);
  CHECK(wci::l_basket(parse_basket("1x(1,2); 1x(2,5)"), 3) == oracle::rr_l(parse_basket("1x(1,2); 1x(2,5)"), 3));
}

TEST_CASE("canonical volume and Euler characteristics") {
  CHECK(wci::k3(FormalBasket{Basket{}, -7, 33}) == 24);
  CHECK(wci::k3(FormalBasket{Basket{}, 1, -5}) == -4);
  CHECK(wci::k3(FormalBasket{parse_basket("(1,2)"), 1, 0}) == Rational(11, 2));
  CHECK(wci::chi_m(FormalBasket{parse_basket("(1,2)"), 1, 0}, 3) == 9);
  CHECK(wci::chi_m(FormalBasket{parse_basket("(1,3)"), 1, 0}, 3) == 9);
  CHECK(wci::chi_m(FormalBasket{parse_basket("(1,3)"), 4, -2}, 2) == -2);
  CHECK_THROWS_AS(wci::chi_m(FormalBasket{}, 1), wci::PreconditionError);
}

TEST_CASE("property: Riemann-Roch agrees with the term-by-term oracle") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 1000; ++trial) {
    const FormalBasket fb = random_formal(rng);
    REQUIRE(wci::chi_m(fb, 2) == fb.chi2);
    REQUIRE(wci::k3(fb) == oracle::rr_k3(fb.basket, fb.chi, fb.chi2));
    const auto chis = wci::integral_chis(fb, 2, 12);
    for (long m = 2; m <= 12; ++m) {
      REQUIRE(Rational(chis[static_cast<std::size_t>(m - 2)]) == oracle::rr_chi(fb.basket, fb.chi, fb.chi2, m));
      REQUIRE(wci::chi_m(fb, m) == oracle::rr_chi(fb.basket, fb.chi, fb.chi2, m));
    }
  }
}

TEST_CASE("packing") {
  const Basket b = parse_basket("(1,2); (1,3)");
  CHECK(wci::pack(b, 0, 1) == parse_basket("(2,5)"));
  CHECK(wci::pack(parse_basket("(0,1); (1,4)"), 0, 1) == parse_basket("(1,5)"));
  CHECK_FALSE(wci::pack(parse_basket("2x(1,2)"), 0, 1).has_value());
  CHECK_THROWS_AS(wci::pack(b, 0, 0), wci::InvalidInput);
  CHECK_THROWS_AS(wci::pack(b, 0, 2), wci::InvalidInput);

  CHECK(wci::is_prime_packing({1, 2}, {1, 3}));
  CHECK(wci::is_prime_packing({1, 2}, {2, 5}));
  CHECK_FALSE(wci::is_prime_packing({1, 2}, {1, 5}));
  CHECK(wci::is_prime_packing({0, 1}, {1, 4}));
  CHECK_FALSE(wci::is_prime_packing({0, 1}, {2, 5}));
}

TEST_CASE("canonical unpacking") {
  CHECK(wci::unpack_canonical({2, 5}) == parse_basket("(1,2); (1,3)"));
  CHECK(wci::unpack_canonical({3, 7}) == parse_basket("2x(1,2); (1,3)"));
  CHECK(wci::unpack_canonical({1, 4}) == parse_basket("(1,4)"));
  CHECK(oracle::prime_reachable(parse_basket("(1,2); (1,3)"), parse_basket("(2,5)")));
  CHECK(oracle::prime_reachable(parse_basket("2x(1,2); (1,3)"), parse_basket("(3,7)")));
  CHECK(wci::initial_basket(parse_basket("(2,5); (1,2)")) == parse_basket("2x(1,2); (1,3)"));
  CHECK(wci::initial_basket(Basket{}).empty());
  CHECK(wci::initial_basket(parse_basket("(1,9)")) == parse_basket("(1,9)"));
  CHECK_THROWS_AS(wci::unpack_canonical({0, 1}), wci::PreconditionError);
}

TEST_CASE("Stern-Brocot parents give prime packings") {
  for (long r = 3; r <= 40; ++r) {
    for (long b = 2; 2 * b <= r; ++b) {
      if (std::gcd(b, r) != 1) {
        continue;
      }
      const auto [left, right] = oracle::stern_brocot_parents({b, r});
      REQUIRE(left.is_valid());
      REQUIRE(right.is_valid());
      REQUIRE(wci::is_prime_packing(left, right));
      REQUIRE(left.b + right.b == b);
      REQUIRE(left.r + right.r == r);
    }
  }
}

TEST_CASE("initial counts from Euler characteristics") {
  const auto chis = wci::integral_chi_values(FormalBasket{parse_basket("3x(1,2)"), 1, 4});
  REQUIRE(chis.has_value());
  CHECK(wci::n0_from_chis(*chis).n12 == 3);

  const auto empty = wci::integral_chi_values(FormalBasket{Basket{}, 2, 7});
  REQUIRE(empty.has_value());
  const auto n0 = wci::n0_from_chis(*empty);
  CHECK(n0.n12 == 0);
  CHECK(n0.n13 == 0);
  CHECK(n0.sigma == 0);
  CHECK(n0.n14_plus_sigma5 == 0);
  const auto range = wci::sigma5_bounds(*empty);
  CHECK(range.lower == 0);
  CHECK(range.upper >= 0);

  // Linearity in the chi vector.
  const wci::ChiValues a{1, 2, 3, 4, 5, 6};
  const wci::ChiValues b{-2, 7, 0, 1, 3, -4};
  const wci::ChiValues sum{-1, 9, 3, 5, 8, 2};
  CHECK(wci::n0_from_chis(sum).n12 == wci::n0_from_chis(a).n12 + wci::n0_from_chis(b).n12);
  CHECK(wci::n0_from_chis(sum).sigma == wci::n0_from_chis(a).sigma + wci::n0_from_chis(b).sigma);
  CHECK(wci::n0_from_chis(a).sigma ==
        wci::n0_from_chis(a).n12 + wci::n0_from_chis(a).n13 + wci::n0_from_chis(a).n14_plus_sigma5);
}

TEST_CASE("epsilon5 counts (2,5) packings") {
  const auto from = [](const char* basket) {
    const FormalBasket fb{parse_basket(basket), 1, 0};
    const auto x = *wci::integral_chi_values(fb);
    return wci::epsilon5(x.chi, x.chi3, x.chi5, x.chi6, 0);
  };
  CHECK(from("(2,5)") == 1);
  CHECK(from("(1,2); (1,3)") == 0);
  CHECK(wci::epsilon5(0, 0, 0, 0, 0) == 0);
}

TEST_CASE("property: initial counts, sigma5 bracket and epsilon5 on random baskets") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 1000; ++trial) {
    const FormalBasket fb = random_formal(rng);
    CAPTURE(wci::format_basket(fb.basket));
    const auto chis = wci::integral_chi_values(fb);
    REQUIRE(chis.has_value());
    const Basket initial = wci::initial_basket(fb.basket);
    long n12 = 0;
    long n13 = 0;
    long n14 = 0;
    long sigma5 = 0;
    for (const Orbifold& q : initial.points()) {
      n12 += q.r == 2;
      n13 += q.r == 3;
      n14 += q.r == 4;
      sigma5 += q.r >= 5;
    }
    const auto n0 = wci::n0_from_chis(*chis);
    REQUIRE(n0.n12 == n12);
    REQUIRE(n0.n13 == n13);
    REQUIRE(n0.sigma == static_cast<long>(initial.size()));
    REQUIRE(n0.n14_plus_sigma5 == n14 + sigma5);
    const auto range = wci::sigma5_bounds(*chis);
    REQUIRE(range.lower <= sigma5);
    REQUIRE(sigma5 <= range.upper);
    long expected = 0;
    for (const Orbifold& q : fb.basket.points()) {
      expected += oracle::packings_of_index(q, 5);
    }
    REQUIRE(wci::epsilon5(chis->chi, chis->chi3, chis->chi5, chis->chi6, sigma5) == expected);
  }
}

TEST_CASE("property: every basket is reachable from its initial basket by prime packings") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 1000; ++trial) {
    const Basket b = wci::random_basket(rng);
    CAPTURE(wci::format_basket(b));
    REQUIRE(oracle::prime_reachable(wci::initial_basket(b), b));
  }
}

TEST_CASE("descendants") {
  const FormalBasket target{parse_basket("(2,5)"), 1, 0};
  const auto chis = *wci::integral_chi_values(target);
  const auto found = wci::descendants(parse_basket("(1,2); (1,3)"), chis);
  REQUIRE(found.size() == 1);
  CHECK(found[0] == target);

  const auto empty = wci::descendants(Basket{}, *wci::integral_chi_values(FormalBasket{Basket{}, 1, 0}));
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].basket.empty());

  const auto single = wci::descendants(parse_basket("(1,2)"), *wci::integral_chi_values(FormalBasket{parse_basket("(1,2)"), 1, 0}));
  REQUIRE(single.size() == 1);
  CHECK(single[0].basket == parse_basket("(1,2)"));

  CHECK_THROWS_AS(wci::descendants(parse_basket("(2,5)"), chis), wci::PreconditionError);
}

TEST_CASE("property: grouping enumeration equals the packing closure with the same initial basket") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 400; ++trial) {
    const FormalBasket fb = random_formal(rng);
    const Basket initial = wci::initial_basket(fb.basket);
    const auto chis = *wci::integral_chi_values(fb);
    std::vector<FormalBasket> expected;
    for (const FormalBasket& d : wci::descendants(initial, chis)) {
      if (wci::initial_basket(d.basket) == initial) {
        expected.push_back(d);
      }
    }
    CAPTURE(wci::format_basket(fb.basket));
    const auto got = wci::canonical_descendants(initial, chis);
    REQUIRE(got == expected);
    REQUIRE(std::ranges::binary_search(got, fb));
  }
}

TEST_CASE("Fano second Chern class bound") {
  CHECK(wci::fano_c2_filter(parse_basket("16x(1,2)")));
  CHECK_FALSE(wci::fano_c2_filter(parse_basket("17x(1,2)")));
  CHECK_FALSE(wci::fano_c2_filter(parse_basket("(1,25)")));
  CHECK(wci::fano_c2_filter(Basket{}));
}

TEST_CASE("general type volume and plurigenus filters") {
  // X_{2,2,2,3} in P^7: p_g = 8 and P_m from the monomial count.
  const std::vector<wci::Integer> p = oracle::koszul_series({1, 1, 1, 1, 1, 1, 1, 1}, {2, 2, 2, 3}, 6);
  const auto P = [&](int m) { return static_cast<long>(p[static_cast<std::size_t>(m)]); };
  const FormalBasket fb{Basket{}, 1 - P(1), P(2)};
  CHECK(P(1) == 8);
  CHECK(P(2) == 33);
  CHECK(wci::gt_volume_filter(fb, P(1), P(2), P(3), P(5), 0));
  CHECK(wci::gt_volume_margin(P(1), P(2), P(3), P(5), 0) > 0);
  const std::vector<long> plurigenera{P(2), P(3), P(4), P(5), P(6)};
  CHECK(wci::pluri_growth_filter(plurigenera, P(1)));

  const FormalBasket negative{Basket{}, 1, -5};
  CHECK_FALSE(wci::gt_volume_filter(negative, 0, 0, 0, 100, 0));
  CHECK_FALSE(wci::gt_volume_filter(fb, P(1), P(2), P(3), P(5), 100000));

  CHECK_FALSE(wci::pluri_growth_filter(std::vector<long>{5, 20, 8, 40, 60}, 0));  // P_4 < 2 P_2 - 1
  CHECK(wci::pluri_growth_filter(std::vector<long>{0, 0, 0, 0, 0}, 0));
  CHECK_FALSE(wci::pluri_growth_filter(std::vector<long>{-1, 0, 0, 0, 0}, 0));
  CHECK_THROWS_AS(wci::pluri_growth_filter(std::vector<long>{0, 0}, 0), wci::PreconditionError);
}
