#include "andre/commands.hpp"

#include <chrono>

namespace andre::cli {
namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::vector<std::uint32_t> index_sweep(const FiniteField& f,
                                       std::optional<std::uint32_t> index) {
  if (index) return {*index};
  std::vector<std::uint32_t> all;
  for (std::uint32_t i = 2; i <= f.group_order() / 2; ++i) all.push_back(i);
  return all;
}

// positions -> rendered field elements
std::vector<std::string> render_2d_rep(const FiniteField& f,
                                       const std::vector<std::uint32_t>& positions) {
  std::vector<std::string> out;
  out.reserve(positions.size());
  for (auto pos : positions) out.push_back(f.render(FieldElement{pos}));
  return out;
}

// indicator -> "(f,q^r)" pairs, q^r as a plain integer
std::vector<std::string> render_hd_rep(const FiniteField& f, const hd::Indicator& ind) {
  std::vector<std::string> out;
  out.reserve(ind.size());
  for (std::size_t i = 0; i < ind.size(); ++i)
    out.push_back("(" + f.render(FieldElement{i}) + "," + pow_big(f.q(), ind[i]).str() +
                  ")");
  return out;
}

}  // namespace

std::vector<ClassReport> run_count2d(std::uint64_t q, std::optional<std::uint32_t> index,
                                     int threads) {
  const auto f = make_field(q);
  const auto group_order = twod::xi_group(f).order();
  std::vector<ClassReport> reports;
  for (auto i : index_sweep(f, index)) {
    const auto t0 = std::chrono::steady_clock::now();
    ClassReport r;
    r.kind = "count2d";
    r.q = q;
    r.index = i;
    r.group_order = group_order;
    r.count = twod::count_2d(f, i, threads);
    r.elapsed_ms = ms_since(t0);
    reports.push_back(std::move(r));
  }
  return reports;
}

std::vector<ClassReport> run_enum2d(std::uint64_t q, std::optional<std::uint32_t> index,
                                    std::uint64_t state_cap) {
  const auto f = make_field(q);
  std::vector<ClassReport> reports;
  for (auto i : index_sweep(f, index)) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto res = twod::enumerate_2d(f, i, state_cap);
    ClassReport r;
    r.kind = "enum2d";
    r.q = q;
    r.index = i;
    r.group_order = res.group_order;
    r.count = res.reps.size();
    std::vector<std::vector<std::string>> reps;
    for (auto& rep : res.reps) reps.push_back(render_2d_rep(f, rep));
    r.representatives = std::move(reps);
    r.elapsed_ms = ms_since(t0);
    reports.push_back(std::move(r));
  }
  return reports;
}

std::vector<ClassReport> run_counthd(std::uint64_t q, std::uint32_t n, int threads) {
  const auto f = make_field(q);
  const auto t0 = std::chrono::steady_clock::now();
  ClassReport r;
  r.kind = "counthd";
  r.q = q;
  r.n = n;
  r.count = hd::count_hd(n, f, threads);
  if (r.count + 1 <= UINT64_MAX)  // plus the regular spread, when it fits the field
    r.total_orbits = static_cast<std::uint64_t>(r.count + 1);
  r.elapsed_ms = ms_since(t0);
  return {std::move(r)};
}

std::vector<ClassReport> run_enumhd(std::uint64_t q, std::uint32_t n,
                                    std::uint64_t state_cap) {
  const auto f = make_field(q);
  const auto t0 = std::chrono::steady_clock::now();
  const auto res = hd::enumerate_hd(n, f, state_cap);
  ClassReport r;
  r.kind = "enumhd";
  r.q = q;
  r.n = n;
  r.total_orbits = res.total_orbits;
  r.count = res.reps.size();
  std::vector<std::vector<std::string>> reps;
  for (auto& rep : res.reps) reps.push_back(render_hd_rep(f, rep));
  r.representatives = std::move(reps);
  r.elapsed_ms = ms_since(t0);
  return {std::move(r)};
}

}  // namespace andre::cli
