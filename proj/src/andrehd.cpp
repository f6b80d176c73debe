#include "andre/andrehd.hpp"

#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace andre::hd {
namespace {

void check_n(std::uint32_t n) {
  if (n < 1) throw IndexOutOfRange("n must be at least 1, got " + std::to_string(n));
}

void check_indicator(const Indicator& ind, std::uint32_t n, const FiniteField& f) {
  if (ind.size() != f.group_order())
    throw Error("indicator length " + std::to_string(ind.size()) + " != q-1 = " +
                std::to_string(f.group_order()));
  for (auto r : ind)
    if (r > n) throw Error("indicator exponent " + std::to_string(r) + " exceeds n");
}

std::vector<std::uint64_t> divisors_of(std::uint64_t v) {
  std::vector<std::uint64_t> d;
  for (std::uint64_t i = 1; i * i <= v; ++i) {
    if (v % i == 0) {
      d.push_back(i);
      if (i != v / i) d.push_back(v / i);
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

Indicator apply_upsilon(const UpsilonElement& u, const Indicator& ind, std::uint32_t n,
                        const FiniteField& f) {
  check_n(n);
  check_indicator(ind, n, f);
  const std::uint64_t m = f.group_order();
  const std::uint64_t np1 = std::uint64_t{n} + 1;
  const std::uint64_t d = f.pow_frobenius(f.omega(), u.tau_exp).index;  // p^tau_exp mod m
  const std::uint64_t a = u.alpha_index % m;
  const std::uint64_t s = u.sigma_exp % np1;
  Indicator out(ind.size());
  for (std::uint64_t i = 0; i < m; ++i) {
    const std::uint64_t ti = i * d % m;  // pos of tau(w^i)
    if (!u.minus) {
      out[(a + ti) % m] = static_cast<std::uint32_t>((ind[i] + np1 - s) % np1);
    } else {
      out[(a + m - ti) % m] = static_cast<std::uint32_t>((2 * np1 - ind[i] - s) % np1);
    }
  }
  return out;
}

std::vector<UpsilonElement> upsilon_generators(const FiniteField& f) {
  // tau_exp = 1 is the Frobenius; for prime q it degenerates to the
  // identity on positions (p = q is 1 mod q-1), which is harmless
  const std::uint64_t a1 = 1 % f.group_order();
  return {
      {a1, 0, 0, false},  // f -> w f
      {0, 0, 0, true},    // f -> f^(-1)
      {0, 1, 0, false},   // f -> f^p
      {0, 0, 1, false},   // compose with sigma
  };
}

std::uint64_t encode_indicator(const Indicator& ind, std::uint32_t n) {
  std::uint64_t code = 0;
  const std::uint64_t np1 = std::uint64_t{n} + 1;
  for (std::size_t i = ind.size(); i-- > 0;) code = code * np1 + ind[i];
  return code;
}

Indicator decode_indicator(std::uint64_t code, std::uint32_t n, std::uint32_t len) {
  Indicator ind(len);
  const std::uint64_t np1 = std::uint64_t{n} + 1;
  for (std::uint32_t i = 0; i < len; ++i) {
    ind[i] = static_cast<std::uint32_t>(code % np1);
    code /= np1;
  }
  return ind;
}

std::vector<Action> upsilon_generator_actions(std::uint32_t n, const FiniteField& f) {
  check_n(n);
  const auto len = static_cast<std::uint32_t>(f.group_order());
  std::vector<Action> actions;
  for (auto& u : upsilon_generators(f))
    actions.push_back([u, n, f, len](std::uint64_t code) {
      return encode_indicator(apply_upsilon(u, decode_indicator(code, n, len), n, f), n);
    });
  return actions;
}

EnumHd enumerate_hd(std::uint32_t n, const FiniteField& f, std::uint64_t state_cap) {
  check_n(n);
  const Big n_big = pow_big(std::uint64_t{n} + 1, f.group_order());
  if (n_big > state_cap)
    throw StateSpaceTooLarge("enumerate_hd: " + n_big.str() + " indicators exceed cap " +
                             std::to_string(state_cap));
  const auto n_states = static_cast<std::uint64_t>(n_big);
  const auto len = static_cast<std::uint32_t>(f.group_order());

  const Orbits orbs = compute_orbits_dense(n_states, upsilon_generator_actions(n, f));

  EnumHd out;
  out.total_orbits = orbs.orbits.size();
  // state 0 is the all-zero indicator, so the regular-spread orbit is
  // always first; it must consist of exactly the n+1 constant indicators
  out.regular_orbit_size = orbs.orbits.front().size();
  if (orbs.orbits.front().front() != 0 || out.regular_orbit_size != std::uint64_t{n} + 1)
    throw Error("regular-spread orbit malformed: size " +
                std::to_string(out.regular_orbit_size));
  for (std::size_t k = 1; k < orbs.orbits.size(); ++k) {
    out.reps.push_back(decode_indicator(orbs.orbits[k].front(), n, len));
    out.orbit_sizes.push_back(orbs.orbits[k].size());
  }
  return out;
}

Big plus_fixed_count(const CycleStructure& cs, std::uint64_t n, std::uint64_t o) {
  if (o == 0 || (n + 1) % o != 0) throw Error("plus_fixed_count: o must divide n+1");
  Big prod = 1;
  for (auto& [len, cnt] : cs.counts) {
    if (len % o != 0) return 0;
    prod *= pow_big(n + 1, cnt);
  }
  return prod;
}

Big minus_fixed_count(const CycleStructure& cs, std::uint64_t n, std::uint64_t o) {
  if (o == 0 || (n + 1) % o != 0) throw Error("minus_fixed_count: o must divide n+1");
  Big prod = 1;
  for (auto& [len, cnt] : cs.counts) {
    if (len % 2 == 0) {
      prod *= pow_big(n + 1, cnt);
    } else if (n % 2 == 0) {
      // unique self-paired exponent per odd cycle: factor 1
    } else if ((n + 1) / o % 2 == 0) {
      prod *= pow_big(2, cnt);
    } else {
      return 0;
    }
  }
  return prod;
}

namespace {

// cycle structure of i -> (a ± i*d) mod m without building a Perm
CycleStructure affine_cycle_structure(std::uint64_t m, std::uint64_t a, std::uint64_t d,
                                      bool minus) {
  CycleStructure cs;
  std::vector<bool> seen(m, false);
  for (std::uint64_t i = 0; i < m; ++i) {
    if (seen[i]) continue;
    std::uint32_t len = 0;
    std::uint64_t j = i;
    do {
      seen[j] = true;
      const std::uint64_t td = j * d % m;
      j = minus ? (a + m - td) % m : (a + td) % m;
      ++len;
    } while (j != i);
    ++cs.counts[len];
  }
  return cs;
}

}  // namespace

Big count_hd(std::uint32_t n, const FiniteField& f, int threads) {
  check_n(n);
  const std::uint64_t m = f.group_order();
  const std::uint32_t e = f.e();
  const std::uint64_t np1 = std::uint64_t{n} + 1;

  std::vector<std::pair<std::uint64_t, std::uint64_t>> divs;  // (o, phi(o))
  for (auto o : divisors_of(np1)) divs.emplace_back(o, euler_phi(o));

  // d = p^t mod m for each tau exponent
  std::vector<std::uint64_t> dpow(e);
  for (std::uint32_t t = 0; t < e; ++t)
    dpow[t] = f.pow_frobenius(f.omega(), t).index;

  const auto n_iters = static_cast<std::int64_t>(m * e);
  auto body = [&](std::int64_t it) {
    const std::uint64_t a = static_cast<std::uint64_t>(it) / e;
    const std::uint64_t d = dpow[it % e];
    Big sub = 0;
    const auto cs_plus = affine_cycle_structure(m, a, d, false);
    const auto cs_minus = affine_cycle_structure(m, a, d, true);
    for (auto& [o, phi] : divs) {
      sub += Big(phi) * plus_fixed_count(cs_plus, n, o);
      sub += Big(phi) * minus_fixed_count(cs_minus, n, o);
    }
    return sub;
  };

  Big total = 0;
#ifdef _OPENMP
  const int T = threads > 0 ? threads : omp_get_max_threads();
  std::vector<Big> partial(T);
#pragma omp parallel num_threads(T)
  {
    Big local = 0;
#pragma omp for schedule(static) nowait
    for (std::int64_t it = 0; it < n_iters; ++it) local += body(it);
    partial[omp_get_thread_num()] = std::move(local);
  }
  for (auto& pb : partial) total += pb;
#else
  (void)threads;
  for (std::int64_t it = 0; it < n_iters; ++it) total += body(it);
#endif

  const Big denom = Big(2) * m * e * np1;
  return exact_div(total, denom, "count_hd") - 1;
}

namespace reference {

Big count_hd(std::uint32_t n, const FiniteField& f) {
  check_n(n);
  const std::uint64_t m = f.group_order();
  const std::uint64_t np1 = std::uint64_t{n} + 1;
  Big total = 0;
  for (std::uint64_t a = 0; a < m; ++a) {
    for (std::uint32_t t = 0; t < f.e(); ++t) {
      const std::uint64_t d = f.pow_frobenius(f.omega(), t).index;
      for (int minus = 0; minus <= 1; ++minus) {
        for (std::uint64_t s = 0; s < np1; ++s) {
          const std::uint64_t o = np1 / std::gcd(np1, s);  // order of sigma^s
          // walk the raw position map cycle by cycle, one factor each
          Big prod = 1;
          std::vector<bool> seen(m, false);
          for (std::uint64_t i = 0; i < m && prod != 0; ++i) {
            if (seen[i]) continue;
            std::uint64_t len = 0, j = i;
            do {
              seen[j] = true;
              const std::uint64_t td = j * d % m;
              j = minus ? (a + m - td) % m : (a + td) % m;
              ++len;
            } while (j != i);
            if (!minus) {
              if (len % o != 0)
                prod = 0;
              else
                prod *= np1;
            } else {
              if (len % 2 == 0)
                prod *= np1;
              else if (n % 2 == 0)
                ;  // factor 1
              else if (np1 / o % 2 == 0)
                prod *= 2;
              else
                prod = 0;
            }
          }
          total += prod;
        }
      }
    }
  }
  return exact_div(total, Big(2) * m * f.e() * np1, "reference count_hd") - 1;
}

}  // namespace reference
}  // namespace andre::hd
