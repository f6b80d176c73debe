#pragma once
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "andre/bigint.hpp"
#include "andre/field.hpp"

// Self-check harness behind `andre verify`: for every feasible parameter
// point it runs the independent routes to the same class count
// (enumeration, production Burnside kernel, serial reference) and demands
// agreement, plus the n = 1 bridge identity tying the two constructions
// together.  All checks are exact; there is nothing to approximate.

namespace andre {

struct VerifyCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t max_q_2d = 13;        // 2D sweeps cover prime powers 5..this
  std::uint64_t max_states_hd = 100'000;  // HD points with (n+1)^(q-1) up to this
  int threads = 0;
  // Test seam: replaces the production count_2d when set, so the suite can
  // prove a mismatch is actually reported.
  std::function<Big(const FiniteField&, std::uint32_t)> count2d_impl;
};

std::vector<VerifyCheck> run_verify(const VerifyOptions& opt);

// Prints one line per check plus a summary; returns the process exit code
// (0 all passed, 1 otherwise).
int run_verify_report(const VerifyOptions& opt, std::ostream& out);

}  // namespace andre
