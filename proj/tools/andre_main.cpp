// andre: isomorphism classes of the translation planes built over GF(q)
// from multiplicative index sets (order q^2) and from indicator functions
// into a Galois group (order q^(n+1)).  Counting goes through Burnside
// averages of the induced permutation groups; enumeration materializes the
// orbits themselves and doubles as an independent cross-check (see the
// `verify` subcommand).
//
//   andre count2d --q 13                per-index class counts
//   andre enum2d  --q 5 --format json   class representatives
//   andre counthd --q 7 --n 6           higher-dimensional class count
//   andre enumhd  --q 3 --n 2           representatives as (f, q^r) pairs
//   andre verify                        enumeration == both counting paths
//
// exit codes: 0 ok, 1 domain error (bad q, index out of range, state cap),
// 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "andre/commands.hpp"
#include "andre/verify.hpp"

int main(int argc, char** argv) {
  CLI::App app{"translation plane class counting over GF(q)"};
  app.require_subcommand(1);

  std::string format = "table";
  std::string out_path;
  int threads = 0;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", out_path, "also write JSON reports to this file");
  app.add_option("--threads", threads, "worker threads for counting (0 = OpenMP default)");

  std::uint64_t q = 0;
  std::uint32_t index_val = 0;
  std::uint32_t n = 0;
  std::uint64_t cap_2d = andre::twod::kDefaultStateCap;
  std::uint64_t cap_hd = andre::hd::kDefaultStateCap;

  auto* c2 = app.add_subcommand("count2d", "count 2D classes per index");
  c2->fallthrough();
  c2->add_option("--q", q, "field size (prime power, 3..2^20)")->required();
  auto* c2i = c2->add_option("--index", index_val, "single index (default: sweep)");

  auto* e2 = app.add_subcommand("enum2d", "enumerate 2D classes with representatives");
  e2->fallthrough();
  e2->add_option("--q", q, "field size (prime power, 3..2^20)")->required();
  auto* e2i = e2->add_option("--index", index_val, "single index (default: sweep)");
  e2->add_option("--state-cap", cap_2d, "max subsets to enumerate")->capture_default_str();

  auto* ch = app.add_subcommand("counthd", "count classes of order q^(n+1)");
  ch->fallthrough();
  ch->add_option("--q", q, "field size (prime power, 3..2^20)")->required();
  ch->add_option("--n", n, "dimension parameter (n >= 1; n = 1 is bridge mode)")->required();

  auto* eh = app.add_subcommand("enumhd", "enumerate classes of order q^(n+1)");
  eh->fallthrough();
  eh->add_option("--q", q, "field size (prime power, 3..2^20)")->required();
  eh->add_option("--n", n, "dimension parameter (n >= 1)")->required();
  eh->add_option("--state-cap", cap_hd, "max indicators to enumerate")->capture_default_str();

  auto* vf = app.add_subcommand("verify", "cross-check enumeration against both counters");
  vf->fallthrough();
  std::uint64_t max_q_2d = 13, max_states_hd = 100'000;
  vf->add_option("--max-q-2d", max_q_2d, "largest q for the 2D sweeps")
      ->capture_default_str();
  vf->add_option("--max-states-hd", max_states_hd, "state-space bound for the HD sweeps")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // 0 is --help/--version
  }

  try {
    if (vf->parsed())
      return andre::run_verify_report({max_q_2d, max_states_hd, threads, nullptr},
                                      std::cout);

    const std::optional<std::uint32_t> index =
        (c2i->count() || e2i->count()) ? std::optional<std::uint32_t>(index_val)
                                       : std::nullopt;
    std::vector<andre::ClassReport> reports;
    if (c2->parsed()) {
      reports = andre::cli::run_count2d(q, index, threads);
    } else if (e2->parsed()) {
      reports = andre::cli::run_enum2d(q, index, cap_2d);
    } else if (ch->parsed()) {
      if (n == 1)
        std::cerr << "note: n = 1 counts the classes of every 2D index jointly "
                     "(bridge mode)\n";
      reports = andre::cli::run_counthd(q, n, threads);
    } else if (eh->parsed()) {
      reports = andre::cli::run_enumhd(q, n, cap_hd);
    }

    std::string text;
    switch (*andre::parse_format(format)) {
      case andre::Format::table: text = andre::render_table(reports); break;
      case andre::Format::json: text = andre::render_json(reports); break;
      case andre::Format::csv: text = andre::render_csv(reports); break;
    }
    std::cout << text;
    if (!out_path.empty()) {
      std::ofstream file(out_path);
      if (!file) throw andre::Error("cannot write " + out_path);
      file << andre::render_json(reports);
    }
    return 0;
  } catch (const andre::Error& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
}
