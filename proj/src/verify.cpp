#include "andre/verify.hpp"

#include "andre/andre2d.hpp"
#include "andre/andrehd.hpp"

namespace andre {
namespace {

bool is_prime_power(std::uint64_t q) {
  if (q < 2) return false;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return true;
  while (q % p == 0) q /= p;
  return q == 1;
}

template <typename Fn>
VerifyCheck checked(std::string name, Fn&& fn) {
  VerifyCheck c;
  c.name = std::move(name);
  try {
    auto [pass, detail] = fn();
    c.pass = pass;
    c.detail = std::move(detail);
  } catch (const std::exception& ex) {
    c.pass = false;
    c.detail = std::string("exception: ") + ex.what();
  }
  return c;
}

}  // namespace

std::vector<VerifyCheck> run_verify(const VerifyOptions& opt) {
  std::vector<VerifyCheck> checks;
  auto count2d = opt.count2d_impl
                     ? opt.count2d_impl
                     : [&](const FiniteField& f, std::uint32_t i) {
                         return twod::count_2d(f, i, opt.threads);
                       };

  // three routes to every 2D class count
  for (std::uint64_t q = 5; q <= opt.max_q_2d; ++q) {
    if (!is_prime_power(q)) continue;
    const auto f = make_field(q);
    for (std::uint32_t i = 2; i <= f.group_order() / 2; ++i) {
      checks.push_back(checked(
          "2d q=" + std::to_string(q) + " i=" + std::to_string(i), [&]() {
            const Big en = twod::enumerate_2d(f, i).reps.size();
            const Big co = count2d(f, i);
            const Big re = twod::reference::count_2d(f, i);
            return std::pair{en == co && co == re, "enum=" + en.str() + " count=" +
                                                       co.str() + " ref=" + re.str()};
          }));
    }
  }

  // three routes to every feasible higher-dimensional count
  for (std::uint64_t q = 3; q <= 17; ++q) {
    if (!is_prime_power(q)) continue;
    const auto f = make_field(q);
    for (std::uint32_t n = 1; n <= 24; ++n) {
      if (pow_big(std::uint64_t{n} + 1, f.group_order()) > opt.max_states_hd) break;
      checks.push_back(checked(
          "hd q=" + std::to_string(q) + " n=" + std::to_string(n), [&]() {
            const Big en = hd::enumerate_hd(n, f, opt.max_states_hd).reps.size();
            const Big co = hd::count_hd(n, f, opt.threads);
            const Big re = hd::reference::count_hd(n, f);
            return std::pair{en == co && co == re, "enum=" + en.str() + " count=" +
                                                       co.str() + " ref=" + re.str()};
          }));
    }
  }

  // bridge identity: the n = 1 count collapses to Hall plus all per-index
  // 2D classes
  for (std::uint64_t q : {5, 7, 9, 11, 13}) {
    if (q > opt.max_q_2d) continue;
    checks.push_back(checked("bridge q=" + std::to_string(q), [&]() {
      const auto f = make_field(q);
      Big sum = 1;  // the Hall class (index 1)
      for (std::uint32_t i = 2; i <= f.group_order() / 2; ++i) sum += count2d(f, i);
      const Big joint = hd::count_hd(1, f, opt.threads);
      return std::pair{joint == sum,
                       "counthd=" + joint.str() + " 1+sum2d=" + sum.str()};
    }));
  }

  return checks;
}

int run_verify_report(const VerifyOptions& opt, std::ostream& out) {
  const auto checks = run_verify(opt);
  std::size_t failed = 0;
  for (auto& c : checks) {
    out << (c.pass ? "[ OK ] " : "[FAIL] ") << c.name << ": " << c.detail << "\n";
    if (!c.pass) ++failed;
  }
  out << "verify: " << checks.size() << " checks, " << failed << " failed\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace andre
