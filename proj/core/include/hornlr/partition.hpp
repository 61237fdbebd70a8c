#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hornlr {

/// Raised when a caller hands us data that violates a documented precondition
/// (malformed partition text, a shape that does not fit its ambient box, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A weakly decreasing sequence of nonnegative integers.
///
/// Trailing zeros are stripped on construction, so two partitions compare
/// equal exactly when their diagrams coincide. Ordering is lexicographic on
/// the stored parts (so the empty partition is the smallest).
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  /// Parses "8,6,5,4,3,1,0". The empty string and "0" denote the empty
  /// partition. Whitespace around parts is ignored.
  static Partition parse(std::string_view text);

  std::span<const int> parts() const noexcept { return parts_; }
  /// Number of nonzero parts.
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  int weight() const noexcept { return weight_; }
  /// The i-th part, 1-based; zero past the end.
  int operator[](int i) const noexcept {
    return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)]
                                   : 0;
  }
  int largest() const noexcept { return empty() ? 0 : parts_.front(); }

  /// The parts padded with zeros to at least `size` entries.
  std::vector<int> padded(int size) const;

  /// Comma-separated parts; the empty partition prints as "".
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a,
                                          const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// A strictly decreasing sequence of positive integers. Every strict
/// partition is also an ordinary partition; `as_partition` is lossless.
class StrictPartition {
 public:
  StrictPartition() = default;
  explicit StrictPartition(std::vector<int> parts);
  explicit StrictPartition(Partition p);
  StrictPartition(std::initializer_list<int> parts)
      : StrictPartition(std::vector<int>(parts)) {}

  static StrictPartition parse(std::string_view text);

  /// Builds the strict partition whose parts are exactly the given set
  /// (any order, all positive and distinct).
  static StrictPartition from_part_set(std::vector<int> parts);

  const Partition& as_partition() const noexcept { return base_; }
  std::span<const int> parts() const noexcept { return base_.parts(); }
  int length() const noexcept { return base_.length(); }
  bool empty() const noexcept { return base_.empty(); }
  int weight() const noexcept { return base_.weight(); }
  int operator[](int i) const noexcept { return base_[i]; }
  int largest() const noexcept { return base_.largest(); }
  std::string to_string() const { return base_.to_string(); }

  friend bool operator==(const StrictPartition&,
                         const StrictPartition&) = default;
  friend std::strong_ordering operator<=>(const StrictPartition& a,
                                          const StrictPartition& b) {
    return a.base_ <=> b.base_;
  }

 private:
  Partition base_;
};

/// The n x m rectangle: n rows, m columns.
struct Rectangle {
  int n = 1;
  int m = 1;

  Rectangle(int rows, int cols);
  int area() const noexcept { return n * m; }
  Partition full() const;

  friend bool operator==(const Rectangle&, const Rectangle&) = default;
};

/// The staircase with rows n, n-1, ..., 1.
struct Staircase {
  int n = 1;

  explicit Staircase(int side);
  int weight() const noexcept { return n * (n + 1) / 2; }
  StrictPartition full() const;

  friend bool operator==(const Staircase&, const Staircase&) = default;
};

bool contains(const Partition& lambda, Rectangle box) noexcept;
bool contains(const StrictPartition& lambda, Staircase s) noexcept;

/// Diagram containment: mu_i <= lambda_i for every i.
bool is_subdiagram(const Partition& mu, const Partition& lambda) noexcept;

Partition conjugate(const Partition& lambda);

/// Complement inside the rectangle, with lambda placed in the upper-right
/// corner: (lambda^c)_i = m - lambda_{n+1-i}.
Partition complement(const Partition& lambda, Rectangle box);

/// Complement inside the staircase: the strict partition whose part set is
/// {1..n} minus the part set of lambda.
StrictPartition complement(const StrictPartition& lambda, Staircase s);

/// Every partition inside the box, each once, in ascending lexicographic
/// order of part sequences (empty partition first). binomial(n+m, n) items.
std::vector<Partition> partitions_in(Rectangle box);

/// Every strict partition inside the staircase, ascending lexicographic
/// order. 2^n items.
std::vector<StrictPartition> strict_partitions_in(Staircase s);

/// Every partition whose diagram lies inside `outer` (including outer).
std::vector<Partition> subdiagrams(const Partition& outer);

std::int64_t binomial(int n, int k) noexcept;

}  // namespace hornlr
