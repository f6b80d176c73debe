#include "andre/field.hpp"

#include <algorithm>
#include <map>

namespace andre {
namespace {

constexpr std::uint64_t kMaxQ = 1ull << 20;

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  // operands stay < 2^20 here, so 128-bit products are overkill but cheap
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> f;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      f.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) f.push_back(n);
  return f;
}

std::uint64_t smallest_primitive_root(std::uint64_t q) {
  const auto factors = prime_factors(q - 1);
  for (std::uint64_t g = 2; g < q; ++g) {
    bool primitive = true;
    for (auto r : factors) {
      if (powmod(g, (q - 1) / r, q) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return g;
  }
  throw Error("no primitive root found (q not prime?)");
}

// Hard-coded moduli for the prime powers the published class counts use,
// ascending coefficients c_0..c_e.  Everything else falls back to a search.
const std::map<std::uint64_t, std::vector<std::uint32_t>>& modulus_table() {
  static const std::map<std::uint64_t, std::vector<std::uint32_t>> t = {
      {4, {1, 1, 1}},              // x^2 + x + 1
      {8, {1, 1, 0, 1}},           // x^3 + x + 1
      {9, {2, 2, 1}},              // x^2 + 2x + 2
      {16, {1, 1, 0, 0, 1}},       // x^4 + x + 1
      {25, {2, 4, 1}},             // x^2 + 4x + 2
      {27, {1, 2, 0, 1}},          // x^3 + 2x + 1
      {32, {1, 0, 1, 0, 0, 1}},    // x^5 + x^2 + 1
      {49, {3, 6, 1}},             // x^2 + 6x + 3
      {64, {1, 1, 0, 1, 1, 0, 1}}, // x^6 + x^4 + x^3 + x + 1
      {81, {2, 0, 0, 2, 1}},       // x^4 + 2x^3 + 2
      {121, {2, 7, 1}},            // x^2 + 7x + 2
      {125, {3, 3, 0, 1}},         // x^3 + 3x + 3
      {128, {1, 1, 0, 0, 0, 0, 0, 1}}, // x^7 + x + 1
  };
  return t;
}

// Polynomial arithmetic in GF(p)[x] mod a monic degree-e modulus, used only
// by the primitivity search below.  Coefficients ascending, length e.
using Poly = std::vector<std::uint64_t>;

Poly polymulmod(const Poly& a, const Poly& b, const std::vector<std::uint32_t>& mod,
                std::uint32_t p) {
  const std::size_t e = mod.size() - 1;
  std::vector<std::uint64_t> prod(2 * e - 1, 0);
  for (std::size_t i = 0; i < e; ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  // reduce: x^e = -(c_0 + ... + c_{e-1} x^{e-1})
  for (std::size_t d = 2 * e - 2; d >= e; --d) {
    const std::uint64_t c = prod[d];
    if (c) {
      prod[d] = 0;
      for (std::size_t j = 0; j < e; ++j)
        prod[d - e + j] = (prod[d - e + j] + c * (p - mod[j] % p)) % p;
    }
    if (d == e) break;
  }
  prod.resize(e);
  return prod;
}

bool x_is_primitive(const std::vector<std::uint32_t>& mod, std::uint32_t p) {
  const std::size_t e = mod.size() - 1;
  std::uint64_t q = 1;
  for (std::size_t i = 0; i < e; ++i) q *= p;
  if (mod[0] == 0) return false;  // x not a unit
  Poly x(e, 0);
  if (e == 1) return false;  // not used for prime fields
  x[1] = 1;
  auto polypow = [&](std::uint64_t k) {
    Poly r(e, 0), b = x;
    r[0] = 1;
    while (k) {
      if (k & 1) r = polymulmod(r, b, mod, p);
      b = polymulmod(b, b, mod, p);
      k >>= 1;
    }
    return r;
  };
  Poly one(e, 0);
  one[0] = 1;
  if (polypow(q - 1) != one) return false;
  for (auto r : prime_factors(q - 1))
    if (polypow((q - 1) / r) == one) return false;
  // order exactly q-1 forces the modulus irreducible, so no separate test
  return true;
}

std::vector<std::uint32_t> smallest_primitive_modulus(std::uint32_t p, std::uint32_t e) {
  // enumerate monic polynomials by the tuple (c_{e-1},...,c_1,c_0) ascending
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < e; ++i) total *= p;
  for (std::uint64_t t = 0; t < total; ++t) {
    std::vector<std::uint32_t> mod(e + 1, 0);
    mod[e] = 1;
    std::uint64_t v = t;
    for (std::uint32_t i = 0; i < e; ++i) {  // c_0 is the fastest-varying digit
      mod[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    if (x_is_primitive(mod, p)) return mod;
  }
  throw Error("no primitive polynomial found");  // unreachable for prime p
}

}  // namespace

FieldElement FiniteField::pow_frobenius(FieldElement a, std::uint32_t j) const {
  const std::uint64_t m = group_order();
  return {a.index * powmod(p_, j, m) % m};
}

std::vector<FieldElement> FiniteField::fstar_positions() const {
  std::vector<FieldElement> v(group_order());
  for (std::uint64_t i = 0; i < v.size(); ++i) v[i] = {i};
  return v;
}

std::uint64_t FiniteField::prime_value(FieldElement a) const {
  if (!prime()) throw Error("prime_value: extension field element");
  return powmod(root_, a.index, q_);
}

std::uint64_t FiniteField::primitive_root() const {
  if (!prime()) throw Error("primitive_root: extension field");
  return root_;
}

std::string FiniteField::render(FieldElement a) const {
  if (prime()) return std::to_string(prime_value(a));
  if (a.index == 0) return "1";
  if (a.index == 1) return "w";
  return "w^" + std::to_string(a.index);
}

std::string FiniteField::modulus_relation() const {
  if (prime()) return "w = " + std::to_string(root_);
  // x^e = -(c_{e-1} x^{e-1} + ... + c_0)
  std::string rhs;
  for (std::uint32_t d = e_; d-- > 0;) {
    const std::uint32_t c = (p_ - modulus_[d] % p_) % p_;
    if (!c) continue;
    if (!rhs.empty()) rhs += " + ";
    if (d == 0) {
      rhs += std::to_string(c);
    } else {
      if (c != 1) rhs += std::to_string(c);
      rhs += d == 1 ? "w" : "w^" + std::to_string(d);
    }
  }
  if (rhs.empty()) rhs = "0";
  return "w^" + std::to_string(e_) + " = " + rhs;
}

FiniteField make_field(std::uint64_t q) {
  if (q < 3) throw TooSmall("q must be at least 3, got " + std::to_string(q));
  if (q > kMaxQ) throw TooLarge("q capped at 2^20, got " + std::to_string(q));
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = q;  // q itself prime
  std::uint32_t e = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1)
    throw NotPrimePower("q must be a prime power, got " + std::to_string(q));

  FiniteField f;
  f.q_ = q;
  f.p_ = static_cast<std::uint32_t>(p);
  f.e_ = e;
  if (e == 1) {
    f.root_ = smallest_primitive_root(q);
    f.modulus_ = {static_cast<std::uint32_t>((p - f.root_ % p) % p), 1};  // x - w
  } else {
    auto it = modulus_table().find(q);
    f.modulus_ = it != modulus_table().end()
                     ? it->second
                     : smallest_primitive_modulus(f.p_, e);
  }
  return f;
}

}  // namespace andre
