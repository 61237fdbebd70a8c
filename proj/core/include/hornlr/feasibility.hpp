#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "hornlr/partition.hpp"

namespace hornlr {

using Triple = std::array<Partition, 3>;
using StrictTriple = std::array<StrictPartition, 3>;

/// How a table of feasible triples is produced.
enum class TripleSource {
  oracle,     // filter by sym_a != 0
  recursive,  // classical Horn test against smaller recursive tables
};

/// All feasible triples inside an r x s rectangle, sorted, closed under
/// permutation of each triple.
class FeasibleTripleTable {
 public:
  FeasibleTripleTable(int r, int s, TripleSource source,
                      std::vector<Triple> triples);

  int rows() const noexcept { return r_; }
  int cols() const noexcept { return s_; }
  TripleSource source() const noexcept { return source_; }
  const std::vector<Triple>& triples() const noexcept { return triples_; }
  /// The same triples as positions in partitions_in(Rectangle(r, s)).
  const std::vector<std::array<int, 3>>& positions() const noexcept {
    return positions_;
  }
  std::size_t size() const noexcept { return triples_.size(); }
  bool contains(const Triple& t) const;

 private:
  int r_;
  int s_;
  TripleSource source_;
  std::vector<Triple> triples_;
  std::vector<std::array<int, 3>> positions_;
};

/// Memoized per (r, s, source); thread-safe. The returned reference stays
/// valid for the life of the process.
const FeasibleTripleTable& feasible_triples(int r, int s, TripleSource source);

enum class ConstraintKind {
  homogeneity,  // weight sum must equal the ambient weight
  inequality,   // crossed-statistic sum must not exceed the bound
  coefficient,  // oracle coefficient is zero (oracle method only)
};

/// One violated constraint. For inequalities `triples` holds the indexing
/// triple (two of them for the symmetric system); `lhs` is the violating
/// value and `bound` the limit it exceeds (for homogeneity: the weight sum
/// and the required weight).
struct Witness {
  ConstraintKind kind = ConstraintKind::inequality;
  int r = 0;
  std::vector<Triple> triples;
  std::int64_t lhs = 0;
  std::int64_t bound = 0;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// feasible holds exactly when witnesses is empty.
struct FeasibilityVerdict {
  bool feasible = true;
  std::vector<Witness> witnesses;

  void add(Witness w) {
    feasible = false;
    witnesses.push_back(std::move(w));
  }
  friend bool operator==(const FeasibilityVerdict&,
                         const FeasibilityVerdict&) = default;
};

struct HornOptions {
  /// Stop at the first violated constraint.
  bool fail_fast = false;
  /// Where the indexing triples come from.
  TripleSource source = TripleSource::oracle;
};

FeasibilityVerdict classical_horn_feasible(const Partition& lambda,
                                           const Partition& mu,
                                           const Partition& nu, Rectangle box,
                                           HornOptions options = {});

FeasibilityVerdict symmetric_horn_feasible(const Partition& lambda,
                                           const Partition& mu,
                                           const Partition& nu, Rectangle box,
                                           HornOptions options = {});

/// Inner-corner system, 0 < r < n.
FeasibilityVerdict type_c_feasible(const StrictPartition& lambda,
                                   const StrictPartition& mu,
                                   const StrictPartition& nu, Staircase s,
                                   HornOptions options = {});

/// Outer-corner system, even r with 0 < r < n+1.
FeasibilityVerdict type_d_feasible(const StrictPartition& lambda,
                                   const StrictPartition& mu,
                                   const StrictPartition& nu, Staircase s,
                                   HornOptions options = {});

/// Verdicts straight from the oracle coefficients (a single `coefficient`
/// witness when the coefficient vanishes).
FeasibilityVerdict oracle_feasible(const Partition& lambda, const Partition& mu,
                                   const Partition& nu, Rectangle box);
FeasibilityVerdict oracle_feasible(const StrictPartition& lambda,
                                   const StrictPartition& mu,
                                   const StrictPartition& nu, Staircase s);

enum class HornSystem { classical, symmetric, type_c, type_d };

std::string to_string(HornSystem system);
/// Accepts "classical", "symmetric", "type-c", "type-d".
HornSystem parse_horn_system(const std::string& name);

using Shape = std::variant<Rectangle, Staircase>;

/// One inequality: sum of the three statistics indexed by `triples` at
/// level r is at most `bound`.
struct InequalityDescriptor {
  HornSystem system;
  int r;
  std::vector<Triple> triples;
  std::int64_t bound;
};

/// Every inequality the chosen system quantifies over for the given shape,
/// ordered by r and then by indexing triple(s). Rectangle systems need a
/// Rectangle, staircase systems a Staircase.
std::vector<InequalityDescriptor> list_inequalities(HornSystem system,
                                                    Shape shape);

}  // namespace hornlr
