#include <doctest.h>

#include <algorithm>
#include <map>
#include <vector>

#include "andre/andre2d.hpp"

using namespace andre;
using namespace andre::twod;

namespace {

// bitmask subsets as the brute-force encoding (degree <= 16 everywhere here)
std::uint32_t apply_mask(const Perm& g, std::uint32_t mask) {
  std::uint32_t out = 0;
  for (std::uint32_t i = 0; i < g.degree(); ++i)
    if (mask >> i & 1) out |= 1u << g[i];
  return out;
}

// count index-subsets fixed by g, by trying every single one
Big brute_fixed_subsets(const Perm& g, std::uint32_t index) {
  Big total = 0;
  for (std::uint32_t mask = 0; mask < (1u << g.degree()); ++mask)
    if (static_cast<std::uint32_t>(__builtin_popcount(mask)) == index &&
        apply_mask(g, mask) == mask)
      ++total;
  return total;
}

}  // namespace

TEST_CASE("xi generators are the induced maps") {
  const auto f5 = make_field(5);
  const auto g5 = xi_generators(f5);
  REQUIRE(g5.size() == 2);  // no Frobenius for prime q
  CHECK(g5[0].images() == std::vector<std::uint32_t>{1, 2, 3, 0});  // mult by w
  CHECK(g5[1].images() == std::vector<std::uint32_t>{0, 3, 2, 1});  // inversion

  const auto f9 = make_field(9);
  const auto g9 = xi_generators(f9);
  REQUIRE(g9.size() == 3);
  CHECK(g9[2].images() == std::vector<std::uint32_t>{0, 3, 6, 1, 4, 7, 2, 5});  // x -> x^3

  // over GF(3) inversion degenerates to the identity
  const auto g3 = xi_generators(make_field(3));
  CHECK(g3[1].is_identity());
}

TEST_CASE("xi group orders match a direct construction") {
  // oracle: the group is exactly { i -> c ± p^j i }, built element-wise
  for (std::uint64_t q : {3, 4, 5, 7, 8, 9, 11, 13, 16}) {
    const auto f = make_field(q);
    const auto m = static_cast<std::uint32_t>(f.group_order());
    std::set<std::vector<std::uint32_t>> direct;
    for (std::uint32_t c = 0; c < m; ++c) {
      for (std::uint32_t j = 0; j < f.e(); ++j) {
        std::uint64_t pj = 1;
        for (std::uint32_t k = 0; k < j; ++k) pj = pj * f.p() % m;
        for (int sign = 0; sign < 2; ++sign) {
          std::vector<std::uint32_t> img(m);
          for (std::uint32_t i = 0; i < m; ++i) {
            const auto t = static_cast<std::uint32_t>(pj * i % m);
            img[i] = sign ? (c + m - t) % m : (c + t) % m;
          }
          direct.insert(img);
        }
      }
    }
    CAPTURE(q);
    CHECK(xi_group(f).order() == direct.size());
  }
  CHECK(xi_group(make_field(3)).order() == 2);
  CHECK(xi_group(make_field(4)).order() == 6);
  CHECK(xi_group(make_field(5)).order() == 8);
  CHECK(xi_group(make_field(8)).order() == 42);
  CHECK(xi_group(make_field(9)).order() == 32);
}

TEST_CASE("fixed_subsets matches brute force over whole groups") {
  for (std::uint64_t q : {5, 7, 8, 9}) {
    const auto f = make_field(q);
    const auto grp = xi_group(f);
    for (auto& g : grp.elements) {
      const auto cs = cycle_structure(g);
      for (std::uint32_t i = 2; i <= f.group_order() / 2; ++i) {
        const Big brute = brute_fixed_subsets(g, i);
        CAPTURE(q);
        CAPTURE(i);
        CHECK(fixed_subsets(cs, i) == brute);
        CHECK(reference::fixed_subsets(cs, i) == brute);
      }
    }
  }
}

TEST_CASE("fixed_subsets closed-form examples") {
  CycleStructure two_fixed_one_swap;  // (.)(.)(..)
  two_fixed_one_swap.counts = {{1, 2}, {2, 1}};
  CHECK(fixed_subsets(two_fixed_one_swap, 2) == 2);

  CycleStructure identity6;
  identity6.counts = {{1, 6}};
  CHECK(fixed_subsets(identity6, 2) == 15);  // C(6,2)

  CycleStructure six_cycle;
  six_cycle.counts = {{6, 1}};
  CHECK(fixed_subsets(six_cycle, 2) == 0);
  CHECK(fixed_subsets(six_cycle, 6) == 1);

  CycleStructure three_swaps;
  three_swaps.counts = {{2, 3}};
  CHECK(fixed_subsets(three_swaps, 2) == 3);
  CHECK(fixed_subsets(three_swaps, 3) == 0);
}

TEST_CASE("enumerate_2d reproduces the order-25 classes") {
  const auto res = enumerate_2d(make_field(5), 2);
  CHECK(res.group_order == 8);
  REQUIRE(res.reps.size() == 2);
  CHECK(res.reps[0] == std::vector<std::uint32_t>{0, 1});  // {1, w} = {1, 2}
  CHECK(res.reps[1] == std::vector<std::uint32_t>{0, 2});  // {1, w^2} = {1, 4}
  CHECK(res.class_sizes == std::vector<std::uint64_t>{4, 2});
}

TEST_CASE("enumerate_2d per-index class counts match the published tables") {
  const std::map<std::uint64_t, std::vector<std::uint64_t>> rows = {
      {5, {2}}, {7, {3, 3}}, {8, {1, 2}}, {9, {3, 4, 5}}, {11, {5, 8, 16, 13}}};
  for (auto& [q, expected] : rows) {
    const auto f = make_field(q);
    std::vector<std::uint64_t> got;
    for (std::uint32_t i = 2; i <= f.group_order() / 2; ++i)
      got.push_back(enumerate_2d(f, i).reps.size());
    CAPTURE(q);
    CHECK(got == expected);
  }
}

TEST_CASE("index validation and state caps") {
  const auto f5 = make_field(5);
  CHECK_THROWS_AS(enumerate_2d(f5, 1), IndexOutOfRange);
  CHECK_THROWS_AS(enumerate_2d(f5, 3), IndexOutOfRange);
  CHECK_THROWS_AS(count_2d(f5, 1), IndexOutOfRange);
  CHECK_THROWS_AS(count_2d(make_field(4), 2), IndexOutOfRange);  // no legal index at q=4
  CHECK_THROWS_AS(enumerate_2d(make_field(17), 8, 100), StateSpaceTooLarge);
  CHECK(enumerate_2d(make_field(17), 8).reps.size() == 257);  // default cap is plenty
}

TEST_CASE("complementation commutes and pairs orbits only in the maximal case") {
  for (std::uint64_t q : {5, 9, 13}) {
    const auto f = make_field(q);
    const auto m = static_cast<std::uint32_t>(f.group_order());
    const auto grp = xi_group(f);
    const std::uint32_t full = (1u << m) - 1;
    for (auto& g : grp.elements)
      for (std::uint32_t mask = 0; mask <= full; ++mask)
        CHECK(apply_mask(g, full ^ mask) == (full ^ apply_mask(g, mask)));
  }
  // an element composed with complementation fixes a subset iff all its
  // cycles are even
  for (std::uint64_t q : {5, 9}) {
    const auto f = make_field(q);
    const auto m = static_cast<std::uint32_t>(f.group_order());
    const std::uint32_t full = (1u << m) - 1;
    for (auto& g : xi_group(f).elements) {
      bool any_fixed = false;
      for (std::uint32_t mask = 0; mask <= full && !any_fixed; ++mask)
        any_fixed = apply_mask(g, mask) == (full ^ mask);
      CAPTURE(q);
      CHECK(any_fixed == cycle_structure(g).all_even());
    }
  }
}

TEST_CASE("count_2d agrees with enumeration and the serial reference") {
  for (std::uint64_t q : {5, 7, 8, 9, 11}) {
    const auto f = make_field(q);
    for (std::uint32_t i = 2; i <= f.group_order() / 2; ++i) {
      const Big en = enumerate_2d(f, i).reps.size();
      CAPTURE(q);
      CAPTURE(i);
      CHECK(count_2d(f, i) == en);
      CHECK(reference::count_2d(f, i) == en);
    }
  }
}

TEST_CASE("count_2d published spot values") {
  CHECK(count_2d(make_field(5), 2) == 2);
  CHECK(count_2d(make_field(9), 2) == 3);
  CHECK(count_2d(make_field(9), 3) == 4);
  CHECK(count_2d(make_field(9), 4) == 5);
  CHECK(count_2d(make_field(11), 5) == 13);
  CHECK(count_2d(make_field(16), 3) == 7);
  CHECK(count_2d(make_field(17), 8) == 257);
  CHECK(count_2d(make_field(25), 12) == 14632);
  CHECK(count_2d(make_field(27), 13) == 33798);
}

TEST_CASE("indices 0 and 1 are the lone Desarguesian and Hall classes") {
  for (std::uint64_t q : {5, 7, 8, 9, 11, 13}) {
    const auto f = make_field(q);
    CAPTURE(q);
    CHECK(detail::count_2d_any_index(f, 0) == 1);
    CHECK(detail::count_2d_any_index(f, 1) == 1);
  }
}

TEST_CASE("gamma coset sum") {
  CHECK(detail::gamma_coset_fixed_sum({}) == 0);
  CycleStructure evens;
  evens.counts = {{2, 2}};
  CycleStructure with_odd;
  with_odd.counts = {{1, 1}, {2, 1}};
  CHECK(detail::gamma_coset_fixed_sum({{evens, 3}}) == 12);  // 3 * 2^2
  CHECK(detail::gamma_coset_fixed_sum({{with_odd, 5}}) == 0);
  CHECK(detail::gamma_coset_fixed_sum({{evens, 1}, {with_odd, 7}}) == 4);
}

TEST_CASE("thread count does not change the answer") {
  const auto f13 = make_field(13);
  const Big expected = count_2d(f13, 6, 1);
  CHECK(expected == 35);
  for (int t : {2, 4, 8}) CHECK(count_2d(f13, 6, t) == expected);
  const auto f16 = make_field(16);
  const Big e16 = count_2d(f16, 7, 1);
  CHECK(e16 == 66);
  for (int t : {2, 4, 8}) CHECK(count_2d(f16, 7, t) == e16);
}

TEST_CASE("exact division guards Burnside integrality") {
  CHECK(exact_div(Big(6), Big(3), "t") == 2);
  CHECK_THROWS_AS(exact_div(Big(7), Big(2), "t"), NonIntegerBurnside);
  CHECK_THROWS_AS(exact_div(Big(1), Big(0), "t"), NonIntegerBurnside);
  CHECK(binomial(12, 6) == 924);
  CHECK(binomial(5, 9) == 0);
  // Pascal-triangle oracle, exercising values far beyond 64 bits
  std::vector<std::vector<Big>> pascal{{1}};
  for (std::uint64_t n = 1; n <= 90; ++n) {
    std::vector<Big> row(n + 1, 1);
    for (std::uint64_t k = 1; k < n; ++k) row[k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
    pascal.push_back(std::move(row));
  }
  for (std::uint64_t n = 0; n <= 90; n += 9)
    for (std::uint64_t k = 0; k <= n; ++k) CHECK(binomial(n, k) == pascal[n][k]);
  CHECK(pow_big(3, 0) == 1);
  CHECK(pow_big(2, 64) == Big("18446744073709551616"));
}
