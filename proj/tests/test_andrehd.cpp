#include <doctest.h>

#include <numeric>
#include <set>

#include "andre/andrehd.hpp"

using namespace andre;
using namespace andre::hd;

namespace {

// total states (n+1)^(q-1), for the small grids used here
std::uint64_t state_count(std::uint32_t n, const FiniteField& f) {
  std::uint64_t total = 1;
  for (std::uint64_t i = 0; i < f.group_order(); ++i) total *= n + 1;
  return total;
}

// the position permutation i -> (a ± i p^t) mod m as a Perm
Perm position_perm(const FiniteField& f, std::uint64_t a, std::uint32_t t, bool minus) {
  const std::uint64_t m = f.group_order();
  std::uint64_t pt = 1;
  for (std::uint32_t k = 0; k < t; ++k) pt = pt * f.p() % m;
  std::vector<std::uint32_t> img(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    const std::uint64_t ti = i * pt % m;
    img[i] = static_cast<std::uint32_t>(minus ? (a + m - ti) % m : (a + ti) % m);
  }
  return Perm(img);
}

}  // namespace

TEST_CASE("apply_upsilon on the worked order-27 example") {
  const auto f3 = make_field(3);
  const Indicator ind{0, 1};  // 1 -> identity, 2 -> x^3

  // multiply the argument by 2 = w: positions swap, exponents ride along
  CHECK(apply_upsilon({1, 0, 0, false}, ind, 2, f3) == Indicator{1, 0});
  // composing with sigma lowers every exponent by one mod 3
  const auto once = apply_upsilon({0, 0, 1, false}, ind, 2, f3);
  CHECK(once == Indicator{2, 0});
  CHECK(apply_upsilon({0, 0, 1, false}, once, 2, f3) == Indicator{1, 2});
  // inversion negates exponents and flips positions
  CHECK(apply_upsilon({0, 0, 0, true}, ind, 2, f3) == Indicator{0, 2});
}

TEST_CASE("the four generators act as documented") {
  const auto f5 = make_field(5);
  const Indicator ind{0, 0, 0, 1};
  const auto gens = upsilon_generators(f5);
  REQUIRE(gens.size() == 4);
  CHECK(apply_upsilon(gens[0], ind, 2, f5) == Indicator{1, 0, 0, 0});  // rotate
  // inversion: out[-i] = -ind[i]
  CHECK(apply_upsilon(gens[1], ind, 2, f5) == Indicator{0, 2, 0, 0});
  // Frobenius collapses to the identity for prime q
  CHECK(apply_upsilon(gens[2], ind, 2, f5) == ind);
  // sigma shift decrements every exponent
  CHECK(apply_upsilon(gens[3], ind, 2, f5) == Indicator{2, 2, 2, 0});

  // Frobenius on GF(4): positions go i -> 2i mod 3
  const auto f4 = make_field(4);
  const auto g4 = upsilon_generators(f4);
  CHECK(apply_upsilon(g4[2], Indicator{0, 1, 2}, 2, f4) == Indicator{0, 2, 1});
}

TEST_CASE("generator actions are bijections of the whole state space") {
  const std::vector<std::pair<std::uint32_t, std::uint64_t>> grid = {
      {2, 3}, {2, 4}, {3, 3}, {1, 5}, {2, 5}};
  for (auto [n, q] : grid) {
    const auto f = make_field(q);
    const std::uint64_t total = state_count(n, f);
    for (auto& act : upsilon_generator_actions(n, f)) {
      std::set<std::uint64_t> image;
      for (std::uint64_t s = 0; s < total; ++s) image.insert(act(s));
      CAPTURE(n);
      CAPTURE(q);
      CHECK(image.size() == total);
      CHECK(*image.rbegin() == total - 1);
    }
  }
}

TEST_CASE("indicator encoding round trips") {
  const auto f4 = make_field(4);
  for (std::uint64_t code = 0; code < 27; ++code) {
    const auto ind = decode_indicator(code, 2, 3);
    CHECK(ind.size() == 3);
    CHECK(encode_indicator(ind, 2) == code);
  }
  CHECK(encode_indicator({2, 1}, 2) == 5);
  CHECK(decode_indicator(5, 2, 2) == Indicator{2, 1});
  (void)f4;
}

TEST_CASE("enumerate_hd on the worked order-27 example") {
  const auto res = enumerate_hd(2, make_field(3));
  CHECK(res.total_orbits == 2);  // regular spread + one proper class
  CHECK(res.regular_orbit_size == 3);
  REQUIRE(res.reps.size() == 1);
  CHECK(res.reps[0] == Indicator{1, 0});
  CHECK(res.orbit_sizes == std::vector<std::uint64_t>{6});  // 3 + 6 = 9 states
}

TEST_CASE("enumerate_hd published small cases") {
  struct Row {
    std::uint32_t n;
    std::uint64_t q;
    std::uint64_t classes;
  };
  for (auto [n, q, classes] : {Row{2, 4, 2}, Row{2, 5, 6}, Row{3, 3, 2}, Row{3, 4, 3}}) {
    const auto f = make_field(q);
    const auto res = enumerate_hd(n, f);
    CAPTURE(n);
    CAPTURE(q);
    CHECK(res.reps.size() == classes);
    CHECK(res.regular_orbit_size == std::uint64_t{n} + 1);
    // orbits partition the indicators
    std::uint64_t covered = res.regular_orbit_size;
    covered += std::accumulate(res.orbit_sizes.begin(), res.orbit_sizes.end(),
                               std::uint64_t{0});
    CHECK(covered == state_count(n, f));
  }
}

TEST_CASE("plus/minus fixed counts match brute force over apply_upsilon") {
  const std::vector<std::pair<std::uint32_t, std::uint64_t>> grid = {
      {2, 3}, {3, 3}, {4, 3}, {2, 4}, {1, 5}, {2, 5}};
  for (auto [n, q] : grid) {
    const auto f = make_field(q);
    const std::uint64_t total = state_count(n, f);
    const auto len = static_cast<std::uint32_t>(f.group_order());
    for (std::uint64_t a = 0; a < f.group_order(); ++a) {
      for (std::uint32_t t = 0; t < f.e(); ++t) {
        for (int minus = 0; minus <= 1; ++minus) {
          for (std::uint32_t s = 0; s <= n; ++s) {
            const UpsilonElement u{a, t, s, minus == 1};
            Big brute = 0;
            for (std::uint64_t code = 0; code < total; ++code) {
              const auto ind = decode_indicator(code, n, len);
              if (apply_upsilon(u, ind, n, f) == ind) ++brute;
            }
            const auto cs = cycle_structure(position_perm(f, a, t, minus == 1));
            const std::uint64_t o = (n + 1) / std::gcd<std::uint64_t>(n + 1, s);
            const Big formula = minus ? minus_fixed_count(cs, n, o)
                                      : plus_fixed_count(cs, n, o);
            CAPTURE(n);
            CAPTURE(q);
            CAPTURE(a);
            CAPTURE(t);
            CAPTURE(s);
            CAPTURE(minus);
            CHECK(formula == brute);
          }
        }
      }
    }
  }
}

TEST_CASE("fixed count branch examples") {
  CycleStructure one4;
  one4.counts = {{4, 1}};
  CHECK(plus_fixed_count(one4, 2, 1) == 3);
  CHECK(plus_fixed_count(one4, 2, 3) == 0);  // 4 not divisible by 3
  CHECK(plus_fixed_count(one4, 3, 4) == 4);
  CHECK(minus_fixed_count(one4, 2, 1) == 3);  // even cycle: n+1 choices

  CycleStructure two1;
  two1.counts = {{1, 2}};
  CHECK(minus_fixed_count(two1, 2, 1) == 1);  // n even: unique fixed exponent
  CHECK(minus_fixed_count(two1, 3, 1) == 4);  // n odd, (n+1)/1 even: 2 each
  CHECK(minus_fixed_count(two1, 3, 4) == 0);  // (n+1)/4 odd: nothing
  CHECK(plus_fixed_count(two1, 3, 2) == 0);
  CHECK_THROWS_AS(plus_fixed_count(one4, 2, 2), Error);   // o must divide n+1
  CHECK_THROWS_AS(minus_fixed_count(one4, 2, 5), Error);
}

TEST_CASE("count_hd agrees with enumeration and the serial reference") {
  const std::vector<std::pair<std::uint32_t, std::uint64_t>> grid = {
      {1, 3}, {2, 3}, {3, 3}, {4, 3}, {7, 3}, {1, 4}, {2, 4}, {3, 4},
      {1, 5}, {2, 5}, {3, 5}, {1, 7}, {2, 7}, {1, 8}, {1, 9}, {2, 9}};
  for (auto [n, q] : grid) {
    const auto f = make_field(q);
    const Big en = enumerate_hd(n, f, 1'000'000).reps.size();
    CAPTURE(n);
    CAPTURE(q);
    CHECK(count_hd(n, f) == en);
    CHECK(reference::count_hd(n, f) == en);
  }
}

TEST_CASE("count_hd published spot values") {
  CHECK(count_hd(2, make_field(3)) == 1);
  CHECK(count_hd(2, make_field(4)) == 2);
  CHECK(count_hd(2, make_field(5)) == 6);
  CHECK(count_hd(3, make_field(3)) == 2);
  CHECK(count_hd(3, make_field(4)) == 3);
  CHECK(count_hd(2, make_field(7)) == 31);
  CHECK(count_hd(2, make_field(8)) == 25);
  CHECK(count_hd(4, make_field(5)) == 23);
  CHECK(count_hd(10, make_field(3)) == 5);
  CHECK(count_hd(6, make_field(7)) == 1503);
  CHECK(count_hd(9, make_field(8)) == 24012);
}

TEST_CASE("n = 1 bridges to the union of all 2D classes") {
  // worked by hand: q = 5 has the Hall class plus two index-2 classes
  CHECK(count_hd(1, make_field(5)) == 3);
  CHECK(count_hd(1, make_field(7)) == 7);  // 1 + 3 + 3
  CHECK(count_hd(1, make_field(8)) == 4);  // 1 + 1 + 2
}

TEST_CASE("validation and caps") {
  const auto f3 = make_field(3);
  CHECK_THROWS_AS(count_hd(0, f3), IndexOutOfRange);
  CHECK_THROWS_AS(enumerate_hd(0, f3), IndexOutOfRange);
  CHECK_THROWS_AS(enumerate_hd(3, make_field(5), 100), StateSpaceTooLarge);
  CHECK_THROWS_AS(apply_upsilon({0, 0, 0, false}, Indicator{0, 1, 2}, 2, f3), Error);
  CHECK_THROWS_AS(apply_upsilon({0, 0, 0, false}, Indicator{0, 3}, 2, f3), Error);
}

TEST_CASE("thread count does not change the answer") {
  const auto f7 = make_field(7);
  const Big expected = count_hd(6, f7, 1);
  for (int t : {2, 4, 8}) CHECK(count_hd(6, f7, t) == expected);
  const auto f9 = make_field(9);
  const Big e9 = count_hd(5, f9, 1);
  for (int t : {2, 4, 8}) CHECK(count_hd(5, f9, t) == e9);
}
