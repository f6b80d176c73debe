#pragma once
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "andre/errors.hpp"

namespace andre {

// Permutation of {0, ..., degree-1} in one-line (image array) notation.
class Perm {
 public:
  explicit Perm(std::uint32_t degree);          // identity
  explicit Perm(std::vector<std::uint32_t> images);  // must be a bijection

  std::uint32_t degree() const { return static_cast<std::uint32_t>(img_.size()); }
  std::uint32_t operator[](std::uint32_t i) const { return img_[i]; }
  const std::vector<std::uint32_t>& images() const { return img_; }
  bool is_identity() const;

  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<std::uint32_t> img_;
};

// x -> a(b(x)).  Throws DegreeMismatch on different degrees.
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& a);

// Multiset of cycle lengths, the only thing the fixed-point formulas need.
struct CycleStructure {
  std::map<std::uint32_t, std::uint64_t> counts;  // length -> cycles of that length
  std::uint64_t total_cycles() const;
  bool all_even() const;
  friend bool operator==(const CycleStructure&, const CycleStructure&) = default;
  friend auto operator<=>(const CycleStructure&, const CycleStructure&) = default;
};
CycleStructure cycle_structure(const Perm& p);

// Fully materialized finite permutation group.
struct PermGroup {
  std::uint32_t degree = 0;
  std::vector<Perm> generators;
  std::vector<Perm> elements;  // BFS discovery order; elements[0] is the identity
  std::size_t order() const { return elements.size(); }
};

// Closure of the generators under composition (BFS from the identity).
// Throws SizeExceeded once the closure would pass max_size elements.
PermGroup generate_group(std::vector<Perm> generators, std::size_t max_size = 1'000'000);

// ---- orbit engine ----------------------------------------------------
// States are opaque 64-bit encodings; every action must permute the given
// state set (an action stepping outside it is reported as an error).

using Action = std::function<std::uint64_t(std::uint64_t)>;

struct Orbits {
  // each orbit ascending; orbits ordered by their minimum member
  std::vector<std::vector<std::uint64_t>> orbits;
  std::size_t total_states() const;
};

Orbits compute_orbits(const std::vector<std::uint64_t>& states,
                      const std::vector<Action>& actions);
// Fast path when the states are exactly 0..n_states-1.
Orbits compute_orbits_dense(std::uint64_t n_states, const std::vector<Action>& actions);

}  // namespace andre
