#pragma once
#include <optional>
#include <string>
#include <vector>

#include "andre/bigint.hpp"

namespace andre {

// One row of CLI output: a counting or enumeration result for a single
// (q, n/index) argument.  Optional fields stay absent when the command
// has no such notion (e.g. counting never materializes representatives).
struct ClassReport {
  std::string kind;  // count2d | enum2d | counthd | enumhd
  std::uint64_t q = 0;
  std::optional<std::uint32_t> n;
  std::optional<std::uint32_t> index;
  std::optional<std::uint64_t> group_order;
  std::optional<std::uint64_t> total_orbits;     // includes the regular-spread class
  Big count = 0;                                 // isomorphism classes reported
  std::optional<std::vector<std::vector<std::string>>> representatives;
  double elapsed_ms = 0.0;
  friend bool operator==(const ClassReport&, const ClassReport&) = default;
};

enum class Format { table, json, csv };
std::optional<Format> parse_format(const std::string& s);

// Fixed-width text table.  Deliberately excludes timing so the output of a
// given build is byte-stable (the golden files depend on that).
std::string render_table(const std::vector<ClassReport>& reports);
// {"schema": 1, "reports": [...]}; counts <= 2^53-1 are JSON numbers,
// larger ones decimal strings.
std::string render_json(const std::vector<ClassReport>& reports);
std::string render_csv(const std::vector<ClassReport>& reports);

// Inverse of render_json (used for --out files and the round-trip tests).
std::vector<ClassReport> parse_json(const std::string& text);

}  // namespace andre
