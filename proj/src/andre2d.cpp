#include "andre/andre2d.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace andre::twod {
namespace {

// partition of n as (part, multiplicity) pairs, parts descending
using PartMults = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

// All partitions of n in lexicographic-descending order ([n] first,
// all-ones last).  Generated once per counting call and shared across
// every cycle structure.
std::vector<PartMults> partitions_of(std::uint32_t n) {
  std::vector<PartMults> out;
  std::vector<std::uint32_t> cur;
  auto rec = [&](auto&& self, std::uint32_t rem, std::uint32_t maxp) -> void {
    if (rem == 0) {
      PartMults pm;
      for (auto part : cur) {
        if (!pm.empty() && pm.back().first == part)
          ++pm.back().second;
        else
          pm.emplace_back(part, 1);
      }
      out.push_back(std::move(pm));
      return;
    }
    for (std::uint32_t part = std::min(rem, maxp); part >= 1; --part) {
      cur.push_back(part);
      self(self, rem - part, part);
      cur.pop_back();
    }
  };
  rec(rec, n, n == 0 ? 1 : n);
  return out;
}

// Lazy cache of binomial rows C(c, 0..index), keyed by c.  Prepared fully
// before any parallel region so lookups are read-only.
class BinomRows {
 public:
  explicit BinomRows(std::uint32_t index) : index_(index) {}
  void prepare(std::uint64_t c) {
    auto [it, fresh] = rows_.try_emplace(c);
    if (!fresh) return;
    auto& row = it->second;
    row.assign(index_ + 1, 0);
    row[0] = 1;
    for (std::uint32_t j = 1; j <= index_ && j <= c; ++j)
      row[j] = row[j - 1] * (c - (j - 1)) / j;
  }
  const Big& at(std::uint64_t c, std::uint32_t k) const { return rows_.at(c)[k]; }

 private:
  std::uint32_t index_;
  std::unordered_map<std::uint64_t, std::vector<Big>> rows_;
};

// cnt[len] = cycles of that length, for len <= index only (longer cycles
// cannot contribute a part)
std::vector<std::uint64_t> small_cycle_counts(const CycleStructure& cs, std::uint32_t index) {
  std::vector<std::uint64_t> cnt(index + 1, 0);
  for (auto& [len, c] : cs.counts)
    if (len <= index) cnt[len] = c;
  return cnt;
}

Big fixed_for_structure(const std::vector<std::uint64_t>& cnt, const PartMults& pm,
                        const BinomRows& rows) {
  Big prod = 1;
  for (auto& [part, mult] : pm) {
    const Big& b = rows.at(cnt[part], mult);
    if (b == 0) return 0;
    prod *= b;
  }
  return prod;
}

std::uint32_t max_index(const FiniteField& f) {
  return static_cast<std::uint32_t>(f.group_order() / 2);
}

void check_index(const FiniteField& f, std::uint32_t index, std::uint32_t lo) {
  if (index < lo || index > max_index(f))
    throw IndexOutOfRange("index " + std::to_string(index) + " outside " +
                          std::to_string(lo) + ".." + std::to_string(max_index(f)) +
                          " for q = " + std::to_string(f.q()));
}

}  // namespace

std::vector<Perm> xi_generators(const FiniteField& f) {
  const std::uint32_t m = static_cast<std::uint32_t>(f.group_order());
  std::vector<Perm> gens;
  std::vector<std::uint32_t> img(m);
  for (std::uint32_t i = 0; i < m; ++i) img[i] = (i + 1) % m;  // mult by w
  gens.emplace_back(img);
  for (std::uint32_t i = 0; i < m; ++i) img[i] = (m - i) % m;  // inversion
  gens.emplace_back(img);
  if (f.e() > 1) {  // Frobenius x -> x^p
    for (std::uint32_t i = 0; i < m; ++i)
      img[i] = static_cast<std::uint32_t>(std::uint64_t{i} * f.p() % m);
    gens.emplace_back(img);
  }
  return gens;
}

PermGroup xi_group(const FiniteField& f, std::size_t max_size) {
  return generate_group(xi_generators(f), max_size);
}

Big fixed_subsets(const CycleStructure& cs, std::uint32_t index) {
  const auto cnt = small_cycle_counts(cs, index);
  BinomRows rows(index);
  for (auto c : cnt) rows.prepare(c);
  Big total = 0;
  for (auto& pm : partitions_of(index)) total += fixed_for_structure(cnt, pm, rows);
  return total;
}

namespace detail {

Big gamma_coset_fixed_sum(
    const std::vector<std::pair<CycleStructure, std::uint64_t>>& structures) {
  // g followed by complementation fixes a subset iff every g-cycle is
  // even (alternate around each cycle); then there are 2^cycles of them
  Big sum = 0;
  for (auto& [cs, freq] : structures)
    if (cs.all_even()) sum += Big(freq) * pow_big(2, cs.total_cycles());
  return sum;
}

Big count_2d_any_index(const FiniteField& f, std::uint32_t index, int threads) {
  check_index(f, index, 0);
  const auto grp = xi_group(f);

  std::map<CycleStructure, std::uint64_t> freq;
  for (auto& g : grp.elements) ++freq[cycle_structure(g)];
  std::vector<std::pair<CycleStructure, std::uint64_t>> structures(freq.begin(), freq.end());

  std::vector<std::vector<std::uint64_t>> cnts;
  cnts.reserve(structures.size());
  BinomRows rows(index);
  for (auto& [cs, fr] : structures) {
    cnts.push_back(small_cycle_counts(cs, index));
    for (auto c : cnts.back()) rows.prepare(c);
  }

  const auto parts = partitions_of(index);
  const auto n_parts = static_cast<std::int64_t>(parts.size());

  Big total = 0;
#ifdef _OPENMP
  const int T = threads > 0 ? threads : omp_get_max_threads();
  std::vector<Big> partial(T);
#pragma omp parallel num_threads(T)
  {
    Big local = 0;
#pragma omp for schedule(static) nowait
    for (std::int64_t pi = 0; pi < n_parts; ++pi)
      for (std::size_t si = 0; si < structures.size(); ++si)
        local += Big(structures[si].second) * fixed_for_structure(cnts[si], parts[pi], rows);
    partial[omp_get_thread_num()] = std::move(local);
  }
  for (auto& p : partial) total += p;
#else
  (void)threads;
  for (std::int64_t pi = 0; pi < n_parts; ++pi)
    for (std::size_t si = 0; si < structures.size(); ++si)
      total += Big(structures[si].second) * fixed_for_structure(cnts[si], parts[pi], rows);
#endif

  if (2 * std::uint64_t{index} == f.group_order()) {
    total += gamma_coset_fixed_sum(structures);
    return exact_div(total, Big(2) * grp.order(), "count_2d maximal");
  }
  return exact_div(total, Big(grp.order()), "count_2d");
}

}  // namespace detail

Big count_2d(const FiniteField& f, std::uint32_t index, int threads) {
  check_index(f, index, 2);
  return detail::count_2d_any_index(f, index, threads);
}

Enum2d enumerate_2d(const FiniteField& f, std::uint32_t index, std::uint64_t state_cap) {
  check_index(f, index, 2);
  const std::uint32_t m = static_cast<std::uint32_t>(f.group_order());
  const Big n_big = binomial(m, index);
  if (n_big > state_cap)
    throw StateSpaceTooLarge("enumerate_2d: " + n_big.str() + " subsets exceed cap " +
                             std::to_string(state_cap));
  const auto n_states = static_cast<std::uint64_t>(n_big);

  // Subsets are encoded by colex rank (equals numeric order of the bit
  // mask); C[v][j] stays <= C(m, index) <= state_cap, so u64 is safe.
  std::vector<std::vector<std::uint64_t>> C(m + 1, std::vector<std::uint64_t>(index + 1, 0));
  for (std::uint32_t v = 0; v <= m; ++v) {
    C[v][0] = 1;
    for (std::uint32_t j = 1; j <= index && j <= v; ++j)
      C[v][j] = C[v - 1][j - 1] + (j <= v - 1 ? C[v - 1][j] : 0);
  }
  auto rank = [&](const std::vector<std::uint32_t>& pos) {
    std::uint64_t r = 0;
    for (std::uint32_t j = 0; j < index; ++j) r += C[pos[j]][j + 1];
    return r;
  };
  auto unrank = [&](std::uint64_t r) {
    std::vector<std::uint32_t> pos(index);
    for (std::uint32_t j = index; j >= 1; --j) {
      // largest v with C(v, j) <= r
      std::uint32_t lo = j - 1, hi = m - 1;
      while (lo < hi) {
        const std::uint32_t mid = (lo + hi + 1) / 2;
        if (C[mid][j] <= r)
          lo = mid;
        else
          hi = mid - 1;
      }
      pos[j - 1] = lo;
      r -= C[lo][j];
    }
    return pos;
  };

  const auto grp = xi_group(f);
  std::vector<Action> actions;
  for (auto& g : grp.generators)
    actions.push_back([&, g](std::uint64_t code) {
      auto pos = unrank(code);
      for (auto& v : pos) v = g[v];
      std::sort(pos.begin(), pos.end());
      return rank(pos);
    });

  const Orbits orbs = compute_orbits_dense(n_states, actions);

  Enum2d out;
  out.group_order = grp.order();
  const bool maximal = 2 * std::uint64_t{index} == m;
  if (!maximal) {
    for (auto& o : orbs.orbits) {
      out.reps.push_back(unrank(o.front()));
      out.class_sizes.push_back(o.size());
    }
    return out;
  }

  // Complementary index sets give the same plane here, and complementation
  // commutes with the group, so it pairs whole orbits: keep the first
  // orbit of each pair, fold the partner's size in.
  auto complement_code = [&](std::uint64_t code) {
    const auto pos = unrank(code);
    std::vector<std::uint32_t> comp;
    comp.reserve(index);
    std::size_t at = 0;
    for (std::uint32_t v = 0; v < m; ++v) {
      if (at < pos.size() && pos[at] == v)
        ++at;
      else
        comp.push_back(v);
    }
    return rank(comp);
  };
  std::vector<std::uint32_t> orbit_of(n_states);
  for (std::uint32_t k = 0; k < orbs.orbits.size(); ++k)
    for (auto s : orbs.orbits[k]) orbit_of[s] = k;
  std::vector<std::size_t> class_of(orbs.orbits.size());
  for (std::uint32_t k = 0; k < orbs.orbits.size(); ++k) {
    const std::uint32_t partner = orbit_of[complement_code(orbs.orbits[k].front())];
    if (partner < k) {
      class_of[k] = class_of[partner];
      out.class_sizes[class_of[k]] += orbs.orbits[k].size();
    } else {
      class_of[k] = out.reps.size();
      out.reps.push_back(unrank(orbs.orbits[k].front()));
      out.class_sizes.push_back(orbs.orbits[k].size());
    }
  }
  return out;
}

namespace reference {

Big fixed_subsets(const CycleStructure& cs, std::uint32_t index) {
  // coefficient of x^index in prod over cycles (1 + x^len), built by
  // repeated shifted addition -- no binomials anywhere
  std::vector<Big> poly(index + 1, 0);
  poly[0] = 1;
  for (auto& [len, c] : cs.counts) {
    if (len > index) continue;
    for (std::uint64_t r = 0; r < c; ++r)
      for (std::uint32_t d = index; d >= len; --d) poly[d] += poly[d - len];
  }
  return poly[index];
}

Big count_2d(const FiniteField& f, std::uint32_t index) {
  check_index(f, index, 2);
  const auto grp = xi_group(f);
  Big total = 0;
  for (auto& g : grp.elements) total += fixed_subsets(cycle_structure(g), index);
  if (2 * std::uint64_t{index} == f.group_order()) {
    for (auto& g : grp.elements) {
      const auto cs = cycle_structure(g);
      if (cs.all_even()) total += pow_big(2, cs.total_cycles());
    }
    return exact_div(total, Big(2) * grp.order(), "reference count_2d maximal");
  }
  return exact_div(total, Big(grp.order()), "reference count_2d");
}

}  // namespace reference
}  // namespace andre::twod
