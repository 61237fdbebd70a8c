#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hornlr/feasibility.hpp"
#include "hornlr/partition.hpp"

namespace hornlr {

struct SweepConfig {
  /// Worker threads; values below 1 mean 1.
  int threads = 1;
  /// Only visit triples whose weights sum to the ambient weight.
  bool weight_filter = false;
  /// Refuse rectangle sweeps with more ordered triples than this.
  std::int64_t max_triples = 1'000'000;
  /// Refuse staircase sweeps with a larger side.
  int max_staircase = 5;
  /// Source of the indexing triples inside each inequality system.
  TripleSource source = TripleSource::oracle;

  friend bool operator==(const SweepConfig&, const SweepConfig&) = default;
};

/// Thrown when a sweep would exceed the configured size cap.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One triple on which the compared systems do not all agree with the
/// oracle, or on which the oracle is not permutation invariant.
struct Disagreement {
  std::vector<std::string> triple;           // partition text, 3 entries
  std::map<std::string, bool> verdicts;      // system name -> verdict
  std::int64_t oracle = 0;                   // coefficient of the triple
  std::string detail;

  friend bool operator==(const Disagreement&, const Disagreement&) = default;
};

struct SweepReport {
  std::string shape;                  // "rect 3x3", "staircase 5", "fixtures"
  std::vector<std::string> systems;
  std::int64_t total = 0;
  std::int64_t agree = 0;
  std::vector<Disagreement> disagreements;  // sorted by triple position
  std::int64_t duration_ms = 0;
  SweepConfig config;

  bool clean() const noexcept { return disagreements.empty(); }
  friend bool operator==(const SweepReport&, const SweepReport&) = default;
};

/// Compares each requested rectangle system (classical, symmetric) with
/// sym_a != 0 on every ordered triple inside n x m, and checks that sym_a
/// takes the same value on all six orderings. Throws ResourceLimit above
/// the cap and InvalidArgument for staircase-only systems.
SweepReport sweep_rectangle(int n, int m, const std::vector<HornSystem>& systems,
                            const SweepConfig& config = {});

/// Compares each requested staircase system (type-c, type-d) with
/// sym_c != 0 on every ordered strict triple inside the staircase, and
/// cross-checks sym_c != 0 against sym_d != 0, type-c against type-d, and
/// permutation invariance of sym_c and sym_d.
SweepReport sweep_staircase(int n, const std::vector<HornSystem>& systems,
                            const SweepConfig& config = {});

/// Recomputes the worked examples (three index sets and four crossed
/// statistics) and reports each mismatch as a disagreement.
SweepReport fixture_check();

}  // namespace hornlr
