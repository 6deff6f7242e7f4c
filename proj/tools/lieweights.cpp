// Command-line front end: count, classes, verify.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "lieweights/lieweights.hpp"
#include "lieweights/report.hpp"

namespace lw = lieweights;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUnsupported = 2;
constexpr int kExitUsage = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

lw::Family family_or_throw(const std::string& text) {
  auto f = lw::parse_family(text);
  if (!f) throw UsageError("unknown family '" + text + "'");
  return *f;
}

lw::Format format_or_throw(const std::string& text) {
  auto f = lw::parse_format(text);
  if (!f) throw UsageError("unknown format '" + text + "' (json, csv, markdown)");
  return *f;
}

unsigned prime_or_throw(unsigned p) {
  if (!lw::is_prime(p)) throw UsageError(std::to_string(p) + " is not prime");
  return p;
}

lw::GroupSpec spec_or_throw(const std::string& family, unsigned rank) {
  const lw::Family f = family_or_throw(family);
  if (lw::is_classical(f) && rank < 1)
    throw UsageError("--rank >= 1 is required for " + family);
  return lw::GroupSpec(f, rank);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + out_path);
  out << text;
}

unsigned thread_cap() {
  unsigned hw = std::max(1U, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("STUBBORN_WEIGHTS_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(std::min<long>(v, hw));
    } catch (const std::exception&) {
    }
    throw UsageError("STUBBORN_WEIGHTS_THREADS must be a positive integer");
  }
  return hw;
}

struct CountArgs {
  std::string family;
  unsigned rank = 0;
  unsigned prime = 0;
  std::string format = "markdown";
  bool classes = false;
  std::string out;
};

int run_count(const CountArgs& a) {
  const lw::GroupSpec spec = spec_or_throw(a.family, a.rank);
  const unsigned ell = prime_or_throw(a.prime);
  const lw::Format format = format_or_throw(a.format);
  const lw::WeightReport report = lw::verify(spec, ell);
  emit(lw::render_report(report, format, a.classes), a.out);
  if (report.verdict == lw::Verdict::Unsupported) return kExitUnsupported;
  return report.methods_agree() ? kExitOk : kExitMismatch;
}

int run_classes(const CountArgs& a) {
  const lw::GroupSpec spec = spec_or_throw(a.family, a.rank);
  const unsigned ell = prime_or_throw(a.prime);
  const lw::Format format = format_or_throw(a.format);
  lw::WeightReport report =
      spec.classical() ? lw::verify(spec, ell) : lw::exceptional_weight_count(spec, ell);
  if (report.verdict == lw::Verdict::Unsupported) {
    emit(lw::render_report(report, format, false), a.out);
    return kExitUnsupported;
  }
  emit(lw::render_classes(report, format), a.out);
  return kExitOk;
}

struct VerifyArgs {
  std::vector<std::string> families{"U", "Sp", "SOodd", "SOeven", "G2", "F4", "E6", "E7", "E8"};
  unsigned max_rank = 8;
  std::vector<unsigned> primes{2, 3, 5, 7};
  std::string format = "csv";
  bool include_classes = false;
  bool lift_exclusions = false;
  bool timings = false;
  std::string out;
};

int run_verify(const VerifyArgs& a) {
  const lw::Format format = format_or_throw(a.format);
  if (a.max_rank < 1) throw UsageError("--max-rank must be >= 1");
  if (a.primes.empty()) throw UsageError("--primes must be nonempty");

  std::set<lw::Family> fam_set;
  for (const auto& f : a.families) fam_set.insert(family_or_throw(f));
  std::set<unsigned> prime_set;
  for (unsigned p : a.primes) prime_set.insert(prime_or_throw(p));

  lw::SweepMeta meta{{fam_set.begin(), fam_set.end()}, a.max_rank,
                     {prime_set.begin(), prime_set.end()}, a.lift_exclusions, a.timings};

  std::vector<std::pair<lw::GroupSpec, unsigned>> cells;
  for (lw::Family f : meta.families) {
    const unsigned lo = lw::is_classical(f) ? 1 : 0;
    const unsigned hi = lw::is_classical(f) ? a.max_rank : 0;
    for (unsigned n = lo; n <= hi; ++n)
      for (unsigned p : meta.primes) cells.emplace_back(lw::GroupSpec(f, n), p);
  }

  std::vector<std::optional<lw::SweepRow>> results(cells.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const lw::EnumOptions opts{a.lift_exclusions};

  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        const auto& [spec, ell] = cells[i];
        const auto start = std::chrono::steady_clock::now();
        lw::WeightReport report = lw::verify(spec, ell, opts);
        const std::chrono::duration<double, std::milli> elapsed =
            std::chrono::steady_clock::now() - start;
        results[i] = lw::SweepRow{std::move(report), lw::expected_verdict(spec, ell),
                                  elapsed.count()};
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned n_threads =
      std::min<unsigned>(thread_cap(), static_cast<unsigned>(std::max<std::size_t>(1, cells.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  std::vector<lw::SweepRow> rows;
  rows.reserve(results.size());
  for (auto& r : results) rows.push_back(std::move(*r));

  std::string text;
  switch (format) {
    case lw::Format::Json:
      text = lw::render_json(lw::sweep_to_json(meta, rows, a.include_classes));
      break;
    case lw::Format::Csv: text = lw::sweep_to_csv(meta, rows); break;
    case lw::Format::Markdown: text = lw::sweep_to_markdown(meta, rows); break;
  }
  emit(text, a.out);

  if (!lw::sweep_ok(rows)) {
    for (const auto& r : rows)
      if (!r.ok())
        std::cerr << "mismatch: " << lw::display_name(r.report.spec) << " at " << r.report.ell
                  << ": verdict " << lw::to_string(r.report.verdict) << ", expected "
                  << lw::to_string(r.expected)
                  << (r.report.methods_agree() ? "" : ", methods disagree") << '\n';
    return kExitMismatch;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weights of l-fusion systems of compact connected Lie groups"};
  app.require_subcommand(1);

  CountArgs count_args;
  auto add_cell_options = [](CLI::App* sub, CountArgs& a) {
    sub->add_option("--family", a.family, "U, Sp, SOodd, SOeven, G2, F4, E6, E7, E8")
        ->required();
    sub->add_option("--rank", a.rank, "n for U(n), Sp(n), SO(2n+1), SO(2n)");
    sub->add_option("--prime", a.prime, "the prime l")->required();
    sub->add_option("--format", a.format, "json, csv or markdown");
    sub->add_option("--out", a.out, "write to this file instead of stdout");
  };
  auto* count = app.add_subcommand("count", "count weights for one group and prime");
  add_cell_options(count, count_args);
  count->add_flag("--classes", count_args.classes, "include the per-class table");

  CountArgs classes_args;
  auto* classes = app.add_subcommand("classes", "list stubborn classes and contributions");
  add_cell_options(classes, classes_args);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "sweep groups and primes against |Irr(W)|");
  verify->add_option("--families", verify_args.families, "family tags")->delimiter(',');
  verify->add_option("--max-rank", verify_args.max_rank, "largest classical rank");
  verify->add_option("--primes", verify_args.primes, "primes to test")->delimiter(',');
  verify->add_option("--format", verify_args.format, "json, csv or markdown");
  verify->add_flag("--include-classes", verify_args.include_classes,
                   "per-class tables (json only)");
  verify->add_flag("--lift-exclusions", verify_args.lift_exclusions,
                   "keep classes removed by the f(0,()) restrictions");
  verify->add_flag("--timings", verify_args.timings, "record per-cell runtime");
  verify->add_option("--out", verify_args.out, "write to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*count) return run_count(count_args);
    if (*classes) return run_classes(classes_args);
    if (*verify) return run_verify(verify_args);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const lw::unsupported_error& e) {
    std::cerr << "unsupported: " << e.what() << '\n';
    return kExitUnsupported;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMismatch;
  }
  return kExitUsage;
}
