#pragma once
#include <cstdint>
#include <vector>

#include "andre/bigint.hpp"
#include "andre/field.hpp"
#include "andre/perm.hpp"

// Translation planes of order q^(n+1) built from indicator functions
// F* -> Gal(K/F) for K = GF(q^(n+1)): position i of an indicator holds the
// exponent r in 0..n meaning w^i is sent to the automorphism x -> x^(q^r).
// The all-zero indicator is the regular spread (Desarguesian plane);
// classes = orbits of the group generated below.

namespace andre::hd {

inline constexpr std::uint64_t kDefaultStateCap = 10'000'000;

// exps[i] = r at position i; length q-1, entries 0..n
using Indicator = std::vector<std::uint32_t>;

// One generator-shaped map: f -> alpha * tau(f)^{±1} on positions combined
// with r -> (±r - sigma_exp) mod (n+1) on exponents.
struct UpsilonElement {
  std::uint64_t alpha_index = 0;  // alpha = w^alpha_index
  std::uint32_t tau_exp = 0;      // tau = x -> x^(p^tau_exp) on F
  std::uint32_t sigma_exp = 0;    // sigma = x -> x^(q^sigma_exp) on K
  bool minus = false;
};

// result[pos(alpha * tau(f)^{±1})] = (±ind[pos(f)] - sigma_exp) mod (n+1)
Indicator apply_upsilon(const UpsilonElement& u, const Indicator& ind, std::uint32_t n,
                        const FiniteField& f);

// The four generators, in fixed order: multiply by w, invert, Frobenius on
// F (identity when q is prime), shift by sigma.
std::vector<UpsilonElement> upsilon_generators(const FiniteField& f);

// Same four generators as bijections of the encoded state space.
std::vector<Action> upsilon_generator_actions(std::uint32_t n, const FiniteField& f);

// Base-(n+1) packing, position 0 in the lowest digit.  The all-zero
// indicator encodes to 0, so the regular spread is always state 0.
std::uint64_t encode_indicator(const Indicator& ind, std::uint32_t n);
Indicator decode_indicator(std::uint64_t code, std::uint32_t n, std::uint32_t len);

struct EnumHd {
  std::uint64_t total_orbits = 0;       // including the regular-spread orbit
  std::uint64_t regular_orbit_size = 0; // always n+1 (the constant indicators)
  std::vector<Indicator> reps;          // non-Desarguesian classes, encoding-minimal
  std::vector<std::uint64_t> orbit_sizes;
};

// Orbit enumeration over all (n+1)^(q-1) indicators.  Throws
// StateSpaceTooLarge past state_cap and IndexOutOfRange for n < 1.
EnumHd enumerate_hd(std::uint32_t n, const FiniteField& f,
                    std::uint64_t state_cap = kDefaultStateCap);

// Indicators fixed by a plus-type map whose position action has the given
// cycle structure, combined with a sigma of order o (o | n+1): every cycle
// length must be divisible by o, each cycle then contributing n+1 choices.
Big plus_fixed_count(const CycleStructure& cs, std::uint64_t n, std::uint64_t o);
// Minus-type counterpart: even cycles contribute n+1; odd cycles force a
// halving constraint -- n even gives the single self-paired choice, n odd
// gives 2 per cycle when (n+1)/o is even and nothing otherwise.
Big minus_fixed_count(const CycleStructure& cs, std::uint64_t n, std::uint64_t o);

// Non-Desarguesian class count by Burnside over the full group, organized
// as (alpha, tau) x sign x divisor-of-(n+1) with Euler-phi weights; the
// (alpha, tau) grid is the parallel loop.  n = 1 is the degenerate bridge
// case counting all 2D classes at once.
Big count_hd(std::uint32_t n, const FiniteField& f, int threads = 0);

// Serial reference: iterates every sigma exponent directly instead of
// divisor classes, and walks cycles of the raw position maps without the
// CycleStructure machinery.
namespace reference {
Big count_hd(std::uint32_t n, const FiniteField& f);
}  // namespace reference

}  // namespace andre::hd
