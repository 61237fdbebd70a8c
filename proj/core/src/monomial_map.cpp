#include "hornlr/monomial_map.hpp"

#include <algorithm>
#include <functional>

namespace hornlr {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("coefficient overflow in addition");
  }
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("coefficient overflow in multiplication");
  }
  return out;
}

MonomialMap::MonomialMap(int variables) : variables_(variables) {
  if (variables < 1) {
    throw std::invalid_argument("a polynomial needs at least one variable");
  }
}

MonomialMap MonomialMap::constant(int variables, std::int64_t c) {
  MonomialMap out(variables);
  out.add(Exponent(static_cast<std::size_t>(variables), 0), c);
  return out;
}

std::int64_t MonomialMap::coefficient(Exponent e) const {
  if (static_cast<int>(e.size()) != variables_) {
    throw std::invalid_argument("exponent length does not match variables");
  }
  std::sort(e.begin(), e.end(), std::greater<>());
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

void MonomialMap::add(Exponent e, std::int64_t c) {
  if (static_cast<int>(e.size()) != variables_) {
    throw std::invalid_argument("exponent length does not match variables");
  }
  if (c == 0) return;
  std::sort(e.begin(), e.end(), std::greater<>());
  auto [it, inserted] = terms_.try_emplace(std::move(e), c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<int> MonomialMap::degree() const {
  std::optional<int> deg;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int x : e) d += x;
    if (deg && *deg != d) {
      throw InconsistencyError("polynomial is not homogeneous");
    }
    deg = d;
  }
  return deg;
}

std::pair<MonomialMap::Exponent, std::int64_t> MonomialMap::leading() const {
  if (terms_.empty()) {
    throw InconsistencyError("zero polynomial has no leading term");
  }
  return *terms_.begin();
}

void MonomialMap::add_scaled(const MonomialMap& other, std::int64_t factor) {
  if (other.variables_ != variables_) {
    throw std::invalid_argument("variable counts differ");
  }
  for (const auto& [e, c] : other.terms_) add(e, checked_mul(c, factor));
}

std::vector<MonomialMap::Exponent> exponent_partitions(int total, int length) {
  std::vector<MonomialMap::Exponent> out;
  MonomialMap::Exponent current;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (static_cast<int>(current.size()) == length) {
      if (remaining == 0) out.push_back(current);
      return;
    }
    const int slots = length - static_cast<int>(current.size());
    for (int v = std::min(cap, remaining); v >= 0; --v) {
      if (v * slots < remaining) break;
      current.push_back(v);
      rec(remaining - v, v);
      current.pop_back();
    }
  };
  if (total >= 0 && length >= 1) rec(total, total);
  return out;
}

MonomialMap MonomialMap::operator*(const MonomialMap& other) const {
  if (other.variables_ != variables_) {
    throw std::invalid_argument("variable counts differ");
  }
  MonomialMap out(variables_);
  auto df = degree();
  auto dg = other.degree();
  if (!df || !dg) return out;

  const std::size_t len = static_cast<std::size_t>(variables_);
  Exponent a(len), rest(len);
  for (const auto& v : exponent_partitions(*df + *dg, variables_)) {
    std::int64_t total = 0;
    // Enumerate compositions a <= v with |a| = deg f, last coordinate forced.
    std::function<void(std::size_t, int)> rec = [&](std::size_t i,
                                                    int remaining) {
      if (i + 1 == len) {
        if (remaining > v[i]) return;
        a[i] = remaining;
        for (std::size_t k = 0; k < len; ++k) rest[k] = v[k] - a[k];
        std::int64_t cf = coefficient(a);
        if (cf == 0) return;
        std::int64_t cg = other.coefficient(rest);
        if (cg == 0) return;
        total = checked_add(total, checked_mul(cf, cg));
        return;
      }
      int tail = 0;
      for (std::size_t k = i + 1; k < len; ++k) tail += v[k];
      for (int x = std::max(0, remaining - tail);
           x <= std::min(v[i], remaining); ++x) {
        a[i] = x;
        rec(i + 1, remaining - x);
      }
    };
    rec(0, *df);
    if (total != 0) out.terms_.emplace(v, total);
  }
  return out;
}

std::string MonomialMap::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += std::to_string(c) + "*m[";
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(e[i]);
    }
    out += ']';
  }
  return out;
}

}  // namespace hornlr
