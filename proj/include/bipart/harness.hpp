#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bipart {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed2013;
inline constexpr std::size_t kMaxCounterexamples = 10;

struct Counterexample {
  std::string graph6;
  // Single-line weighting ("0,1 : 2; 3 : 1"), empty when not applicable.
  std::string weighting;
  std::string detail;
  friend auto operator<=>(const Counterexample&, const Counterexample&) = default;
};

struct SuiteTally {
  std::string name;
  std::size_t max_n = 0;
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  // Instances settled without individual evaluation by a monotone argument.
  std::uint64_t pruned = 0;
  // Instances outside the suite's domain (e.g. weightings that leave an edge
  // uncovered) or beyond solver limits in corpus mode.
  std::uint64_t skipped = 0;
  double seconds = 0;
  // Smallest counterexamples first, at most kMaxCounterexamples.
  std::vector<Counterexample> counterexamples;
  // Deterministic side observations, in a fixed order.
  std::vector<std::pair<std::string, std::uint64_t>> counters;

  void fail(Counterexample c);
  void count(const std::string& key, std::uint64_t by = 1);
  void merge(const SuiteTally& other);
};

struct HarnessOptions {
  // Caps every suite's own ceiling; the smaller of the two is used.
  std::optional<std::size_t> max_n;
  // graph6 file: suites run over its graphs instead of the enumeration.
  std::optional<std::string> corpus;
  std::uint64_t seed = kDefaultSeed;
  std::size_t workers = 1;
  // Random instances for the sampled parts of lemma4 and thm5.
  std::size_t samples = 10000;
};

struct HarnessReport {
  std::vector<SuiteTally> suites;
  std::uint64_t failures() const;
  bool ok() const { return failures() == 0; }
};

// prop1, thm2, thm4, lemma4, lemma5, thm5, cor6.
const std::vector<std::string>& suite_names();

// Largest order a suite enumerates by default.
std::size_t suite_ceiling(std::string_view suite);

// Throws InputError for an unknown suite name.
SuiteTally run_suite(std::string_view suite, const HarnessOptions& options);
HarnessReport run_harness(std::span<const std::string> suites,
                          const HarnessOptions& options);

// Timing goes on separate "time ..." lines; everything else is a function of
// the suites and options only.
std::string format_harness_report(const HarnessReport& report);

// BIPART_WORKERS if set to a positive integer, otherwise 1.
std::size_t workers_from_env();

}  // namespace bipart
