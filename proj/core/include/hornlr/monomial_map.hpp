#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hornlr {

/// Exact integer arithmetic failed (a coefficient left the int64 range).
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// An internal self-check failed: inexact division in a basis peel, a
/// leading exponent that is not a valid basis index, and so on. Always a
/// bug or an undersized variable count, never bad user input.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// A symmetric polynomial in a fixed number of variables, stored in the
/// monomial symmetric basis: one entry per orbit, keyed by its weakly
/// decreasing exponent vector (always exactly `variables()` long). The
/// coefficient of an entry is the coefficient of every monomial in that
/// orbit. Zero coefficients are never stored.
class MonomialMap {
 public:
  using Exponent = std::vector<int>;
  using Terms = std::map<Exponent, std::int64_t, std::greater<>>;

  explicit MonomialMap(int variables);

  /// The constant polynomial c.
  static MonomialMap constant(int variables, std::int64_t c);

  int variables() const noexcept { return variables_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  /// Entries ordered with the lexicographically largest exponent first.
  const Terms& terms() const noexcept { return terms_; }

  /// Coefficient of x^e. `e` may be any exponent vector of the right
  /// length; it is sorted into its orbit representative.
  std::int64_t coefficient(Exponent e) const;

  /// Adds c to the orbit of e (sorted as above). Entries that cancel to
  /// zero are erased.
  void add(Exponent e, std::int64_t c);

  /// Common total degree, or nullopt for the zero polynomial. Throws
  /// InconsistencyError when the entries are not homogeneous.
  std::optional<int> degree() const;

  /// The lexicographically largest exponent with its coefficient.
  std::pair<Exponent, std::int64_t> leading() const;

  /// this += factor * other.
  void add_scaled(const MonomialMap& other, std::int64_t factor);

  /// Product of two homogeneous symmetric polynomials. The coefficient of
  /// the orbit of v in f*g is sum over compositions a <= v (componentwise)
  /// with |a| = deg f of f[sort(a)] * g[sort(v - a)]; evaluating this only
  /// at partitions v avoids ever expanding the full monomial support.
  MonomialMap operator*(const MonomialMap& other) const;

  std::string to_string() const;

  friend bool operator==(const MonomialMap&, const MonomialMap&) = default;

 private:
  int variables_;
  Terms terms_;
};

/// All weakly decreasing exponent vectors of the given length and total.
std::vector<MonomialMap::Exponent> exponent_partitions(int total, int length);

}  // namespace hornlr
