#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hornlr/partition.hpp"

namespace hornlr {

/// An r-subset of {1..N}, stored increasing.
class IndexSet {
 public:
  IndexSet(int ambient, std::vector<int> elements);

  int ambient() const noexcept { return ambient_; }
  int size() const noexcept { return static_cast<int>(elements_.size()); }
  const std::vector<int>& elements() const noexcept { return elements_; }
  bool contains(int k) const noexcept;
  std::string to_string() const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  int ambient_;
  std::vector<int> elements_;
};

/// {N-r+i-alpha_i : i = 1..r}, with alpha zero-padded to r parts.
/// Rejects alpha that does not fit in r x (N-r).
IndexSet index_set(const Partition& alpha, int ambient, int r);

/// Inverse of index_set: the partition alpha in r x (N-r) with I_N(alpha) = set.
Partition partition_of(const IndexSet& set);

/// Crossing-out picture behind every statistic. Cells use matrix
/// coordinates (row 1 on top, column 1 on the left).
class CrossingDiagram {
 public:
  enum class Cell : std::uint8_t {
    outside,        // not part of the ambient shape
    vacant,         // ambient box not in lambda
    vacant_crossed, // ambient box not in lambda, lying on a crossed line
    kept,           // lambda box that survives
    crossed,        // lambda box removed by some crossing
  };

  CrossingDiagram(int rows, int cols);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  Cell at(int row, int col) const;
  void set(int row, int col, Cell c);

  /// Number of kept boxes.
  int surviving() const noexcept;

  /// Plain-ASCII rendering: 'o' kept, 'x' crossed, '.' vacant,
  /// '-' vacant on a crossed line, ' ' outside. `row_labels` (top to
  /// bottom) is prepended when non-empty.
  std::string render(const std::vector<int>& row_labels = {}) const;

 private:
  int rows_;
  int cols_;
  std::vector<Cell> cells_;
};

// Each statistic validates its preconditions and throws InvalidArgument on
// violation. The *_diagram variants return the picture whose surviving()
// count equals the statistic.

/// |lambda|_alpha: rows are numbered bottom-up, lambda sits in the upper
/// right of n x m, and rows in I_n(alpha) are crossed out. Needs 0 < r < n.
int rows_stat(const Partition& lambda, Rectangle box, const Partition& alpha,
              int r);
CrossingDiagram rows_diagram(const Partition& lambda, Rectangle box,
                             const Partition& alpha, int r);

/// |lambda|_{alpha,alpha'}: additionally crosses the columns in
/// I_m(alpha'). Needs 0 < r < min(n, m).
int rows_cols_stat(const Partition& lambda, Rectangle box,
                   const Partition& alpha, const Partition& alpha_prime,
                   int r);
CrossingDiagram rows_cols_diagram(const Partition& lambda, Rectangle box,
                                  const Partition& alpha,
                                  const Partition& alpha_prime, int r);

/// [lambda]_alpha on the staircase. Inner corner k sits at (row n+1-k,
/// column k); crossing it removes that whole row and column. Needs
/// 0 < r < n.
int inner_corner_stat(const StrictPartition& lambda, Staircase s,
                      const Partition& alpha, int r);
CrossingDiagram inner_corner_diagram(const StrictPartition& lambda,
                                     Staircase s, const Partition& alpha,
                                     int r);

/// {lambda}_alpha on the staircase. Outer corner j (1..n+1) crosses row
/// n+2-j and column j; lines that fall outside the staircase remove
/// nothing. Needs 0 < r < n+1.
int outer_corner_stat(const StrictPartition& lambda, Staircase s,
                      const Partition& alpha, int r);
CrossingDiagram outer_corner_diagram(const StrictPartition& lambda,
                                     Staircase s, const Partition& alpha,
                                     int r);

}  // namespace hornlr
