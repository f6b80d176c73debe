#include "andre/perm.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace andre {

Perm::Perm(std::uint32_t degree) : img_(degree) {
  for (std::uint32_t i = 0; i < degree; ++i) img_[i] = i;
}

Perm::Perm(std::vector<std::uint32_t> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (auto v : img_) {
    if (v >= img_.size() || seen[v]) throw Error("permutation images are not a bijection");
    seen[v] = true;
  }
}

bool Perm::is_identity() const {
  for (std::uint32_t i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree())
    throw DegreeMismatch("compose: degrees " + std::to_string(a.degree()) + " and " +
                         std::to_string(b.degree()));
  std::vector<std::uint32_t> img(a.degree());
  for (std::uint32_t i = 0; i < a.degree(); ++i) img[i] = a[b[i]];
  return Perm(std::move(img));
}

Perm inverse(const Perm& a) {
  std::vector<std::uint32_t> img(a.degree());
  for (std::uint32_t i = 0; i < a.degree(); ++i) img[a[i]] = i;
  return Perm(std::move(img));
}

std::uint64_t CycleStructure::total_cycles() const {
  std::uint64_t t = 0;
  for (auto& [len, cnt] : counts) t += cnt;
  return t;
}

bool CycleStructure::all_even() const {
  for (auto& [len, cnt] : counts)
    if (len % 2 != 0 && cnt > 0) return false;
  return true;
}

CycleStructure cycle_structure(const Perm& p) {
  CycleStructure cs;
  std::vector<bool> seen(p.degree(), false);
  for (std::uint32_t i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    std::uint32_t len = 0, j = i;
    do {
      seen[j] = true;
      j = p[j];
      ++len;
    } while (j != i);
    ++cs.counts[len];
  }
  return cs;
}

PermGroup generate_group(std::vector<Perm> generators, std::size_t max_size) {
  if (generators.empty()) throw Error("generate_group: no generators");
  const std::uint32_t deg = generators[0].degree();
  for (auto& g : generators)
    if (g.degree() != deg) throw DegreeMismatch("generate_group: mixed degrees");

  PermGroup grp;
  grp.degree = deg;
  grp.generators = generators;
  std::set<Perm> seen;
  grp.elements.emplace_back(deg);  // identity first
  seen.insert(grp.elements[0]);
  // BFS over the Cayley graph: scan elements in discovery order, append
  // unseen products g*u.  Deterministic given the generator order.
  for (std::size_t at = 0; at < grp.elements.size(); ++at) {
    for (auto& g : grp.generators) {
      Perm next = compose(g, grp.elements[at]);
      if (seen.insert(next).second) {
        if (grp.elements.size() >= max_size)
          throw SizeExceeded("generate_group: closure exceeds " + std::to_string(max_size));
        grp.elements.push_back(std::move(next));
      }
    }
  }
  return grp;
}

std::size_t Orbits::total_states() const {
  std::size_t t = 0;
  for (auto& o : orbits) t += o.size();
  return t;
}

namespace {

void sort_result(Orbits& out) {
  for (auto& o : out.orbits) std::sort(o.begin(), o.end());
  std::sort(out.orbits.begin(), out.orbits.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

}  // namespace

Orbits compute_orbits(const std::vector<std::uint64_t>& states,
                      const std::vector<Action>& actions) {
  std::unordered_map<std::uint64_t, bool> visited;  // state -> done
  visited.reserve(states.size() * 2);
  for (auto s : states) {
    if (!visited.emplace(s, false).second) throw Error("compute_orbits: duplicate state");
  }
  Orbits out;
  for (auto s : states) {
    if (visited[s]) continue;
    std::vector<std::uint64_t> orbit, stack{s};
    visited[s] = true;
    while (!stack.empty()) {
      const std::uint64_t cur = stack.back();
      stack.pop_back();
      orbit.push_back(cur);
      for (auto& act : actions) {
        const std::uint64_t nxt = act(cur);
        auto it = visited.find(nxt);
        if (it == visited.end()) throw Error("compute_orbits: action leaves the state set");
        if (!it->second) {
          it->second = true;
          stack.push_back(nxt);
        }
      }
    }
    out.orbits.push_back(std::move(orbit));
  }
  sort_result(out);
  return out;
}

Orbits compute_orbits_dense(std::uint64_t n_states, const std::vector<Action>& actions) {
  std::vector<bool> visited(n_states, false);
  Orbits out;
  for (std::uint64_t s = 0; s < n_states; ++s) {
    if (visited[s]) continue;
    std::vector<std::uint64_t> orbit, stack{s};
    visited[s] = true;
    while (!stack.empty()) {
      const std::uint64_t cur = stack.back();
      stack.pop_back();
      orbit.push_back(cur);
      for (auto& act : actions) {
        const std::uint64_t nxt = act(cur);
        if (nxt >= n_states) throw Error("compute_orbits_dense: action leaves the state set");
        if (!visited[nxt]) {
          visited[nxt] = true;
          stack.push_back(nxt);
        }
      }
    }
    out.orbits.push_back(std::move(orbit));
  }
  sort_result(out);
  return out;
}

}  // namespace andre
