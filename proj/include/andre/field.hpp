#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "andre/errors.hpp"

namespace andre {

// Element of the multiplicative group F* of a finite field, stored as the
// discrete log with respect to the field's fixed primitive element w:
// index k stands for w^k, 0 <= k < q-1.  Zero is not representable; the
// plane machinery only ever works inside F*.
struct FieldElement {
  std::uint64_t index = 0;
  friend bool operator==(FieldElement, FieldElement) = default;
};

// GF(q) = GF(p^e), 3 <= q <= 2^20.  Multiplication, inversion and the
// Frobenius maps are index arithmetic mod q-1; field addition is never
// needed here, so no log/antilog tables are kept for extension fields.
//
// The primitive element w is pinned deterministically:
//   prime q        w = smallest primitive root mod q
//   q in the built-in modulus table   w = x mod (hard-coded polynomial)
//   other p^e      w = x mod (smallest primitive monic polynomial, ordered
//                  by coefficient tuple (c_{e-1},...,c_0))
class FiniteField {
 public:
  std::uint64_t q() const { return q_; }
  std::uint32_t p() const { return p_; }
  std::uint32_t e() const { return e_; }
  bool prime() const { return e_ == 1; }
  // |F*| = q - 1, the degree every induced permutation acts on.
  std::uint64_t group_order() const { return q_ - 1; }

  FieldElement one() const { return {0}; }
  FieldElement omega() const { return {1 % group_order()}; }

  FieldElement mul(FieldElement a, FieldElement b) const {
    return {(a.index + b.index) % group_order()};
  }
  FieldElement inv(FieldElement a) const {
    return {(group_order() - a.index) % group_order()};
  }
  // a^(p^j); j may exceed e (reduced mod the order of Frobenius).
  FieldElement pow_frobenius(FieldElement a, std::uint32_t j) const;
  // a^k for arbitrary integer exponent (k mod q-1 taken first).
  FieldElement pow_int(FieldElement a, std::uint64_t k) const {
    return {a.index % group_order() * (k % group_order()) % group_order()};
  }

  // F* in the canonical position order [w^0, w^1, ..., w^{q-2}].
  std::vector<FieldElement> fstar_positions() const;

  // Monic modulus coefficients c_0..c_e (ascending).  Prime fields carry
  // x - w so the accessor is total.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  // Prime fields only: the integer value of w^k in 1..q-1.
  std::uint64_t prime_value(FieldElement a) const;
  // Prime fields only: the pinned primitive root.
  std::uint64_t primitive_root() const;

  // "2" / "w^5" style rendering; w^0 -> "1", w^1 -> "w".
  std::string render(FieldElement a) const;
  // Human-readable defining relation, e.g. "w^3 = w + 1" for q = 8.
  std::string modulus_relation() const;

 private:
  friend FiniteField make_field(std::uint64_t q);
  std::uint64_t q_ = 0;
  std::uint32_t p_ = 0;
  std::uint32_t e_ = 0;
  std::uint64_t root_ = 0;  // prime fields: value of w
  std::vector<std::uint32_t> modulus_;
};

// Validates and builds GF(q).  Throws TooSmall (q < 3), TooLarge
// (q > 2^20), NotPrimePower otherwise when q is not p^e.
FiniteField make_field(std::uint64_t q);

}  // namespace andre
