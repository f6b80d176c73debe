#pragma once
#include <cstdint>
#include <utility>
#include <vector>

#include "andre/bigint.hpp"
#include "andre/field.hpp"
#include "andre/perm.hpp"

// Translation planes of order q^2 built from index sets: subsets of F*
// picked by position in the canonical order [w^0, ..., w^{q-2}].  Two
// subsets give isomorphic planes exactly when the induced group below
// relates them, so classes = orbits and the counting path is Burnside.

namespace andre::twod {

inline constexpr std::uint64_t kDefaultStateCap = 10'000'000;

// Induced permutations of F* positions generating the relating group:
// multiplication by w (i -> i+1), inversion (i -> -i), and for extension
// fields the Frobenius (i -> p*i), all mod q-1.
std::vector<Perm> xi_generators(const FiniteField& f);
// Materialized closure of the generators.
PermGroup xi_group(const FiniteField& f, std::size_t max_size = 1'000'000);

struct Enum2d {
  std::size_t group_order = 0;
  // one representative per isomorphism class: sorted positions into F*
  std::vector<std::vector<std::uint32_t>> reps;
  // index sets in each class (complement-merged orbits add up)
  std::vector<std::uint64_t> class_sizes;
};

// Orbit enumeration for subsets of size `index`, 2 <= index <= (q-1)/2.
// In the maximal case 2*index = q-1 complementary orbits are merged, since
// complementation is one more plane isomorphism there.  Representatives
// are the encoding-minimal subsets (colex order).  Throws IndexOutOfRange
// or StateSpaceTooLarge (binomial(q-1, index) > state_cap).
Enum2d enumerate_2d(const FiniteField& f, std::uint32_t index,
                    std::uint64_t state_cap = kDefaultStateCap);

// Number of `index`-subsets of the permuted set fixed by any permutation
// with the given cycle structure: sum over partitions of `index` of
// products of binomials, one factor per distinct part.
Big fixed_subsets(const CycleStructure& cs, std::uint32_t index);

// Class count by averaging fixed subsets over the group (deduplicated by
// cycle structure, partition loop parallelized).  Maximal case adds the
// complementation coset.  threads = 0 means the OpenMP default.
Big count_2d(const FiniteField& f, std::uint32_t index, int threads = 0);

namespace detail {
// count_2d without the index >= 2 floor; index 0 and 1 are the unique
// Desarguesian / Hall classes and must both count 1 (internal cross-check).
Big count_2d_any_index(const FiniteField& f, std::uint32_t index, int threads = 0);
// Sum over (structure, frequency) of 2^cycles for all-even structures:
// the complementation-coset half of the maximal-case average.
Big gamma_coset_fixed_sum(
    const std::vector<std::pair<CycleStructure, std::uint64_t>>& structures);
}  // namespace detail

// Serial reference implementations, algorithmically independent of the
// production kernel: no structure dedup, and fixed subsets are read off a
// generating-function table built by shifted additions (no binomials).
namespace reference {
Big fixed_subsets(const CycleStructure& cs, std::uint32_t index);
Big count_2d(const FiniteField& f, std::uint32_t index);
}  // namespace reference

}  // namespace andre::twod
