#pragma once
#include <optional>

#include "andre/andre2d.hpp"
#include "andre/andrehd.hpp"
#include "andre/report.hpp"

// Subcommand drivers, separated from argv handling so tests can call them
// directly.  Omitting the index sweeps every legal one (2..(q-1)/2),
// which can be empty for q < 5.

namespace andre::cli {

std::vector<ClassReport> run_count2d(std::uint64_t q, std::optional<std::uint32_t> index,
                                     int threads = 0);
std::vector<ClassReport> run_enum2d(std::uint64_t q, std::optional<std::uint32_t> index,
                                    std::uint64_t state_cap = twod::kDefaultStateCap);
std::vector<ClassReport> run_counthd(std::uint64_t q, std::uint32_t n, int threads = 0);
std::vector<ClassReport> run_enumhd(std::uint64_t q, std::uint32_t n,
                                    std::uint64_t state_cap = hd::kDefaultStateCap);

}  // namespace andre::cli
