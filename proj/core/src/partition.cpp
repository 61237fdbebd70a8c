#include "hornlr/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

namespace hornlr {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) {
      throw InvalidArgument("partition parts must be nonnegative");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw InvalidArgument("partition parts must be weakly decreasing");
    }
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
      s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
      s.remove_suffix(1);
    }
    return s;
  };
  text = trim(text);
  if (text.empty()) return Partition{};
  while (true) {
    auto comma = text.find(',');
    auto token = trim(text.substr(0, comma));
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} ||
        ptr != token.data() + token.size()) {
      throw InvalidArgument("malformed partition '" + std::string(text) +
                            "': expected comma-separated nonnegative integers");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Partition(std::move(parts));
}

std::vector<int> Partition::padded(int size) const {
  std::vector<int> out(parts_);
  if (static_cast<int>(out.size()) < size) {
    out.resize(static_cast<std::size_t>(size), 0);
  }
  return out;
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

StrictPartition::StrictPartition(std::vector<int> parts)
    : StrictPartition(Partition(std::move(parts))) {}

StrictPartition::StrictPartition(Partition p) : base_(std::move(p)) {
  auto parts = base_.parts();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (parts[i] == parts[i - 1]) {
      throw InvalidArgument("strict partition '" + base_.to_string() +
                            "' has repeated parts");
    }
  }
}

StrictPartition StrictPartition::parse(std::string_view text) {
  return StrictPartition(Partition::parse(text));
}

StrictPartition StrictPartition::from_part_set(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  for (int p : parts) {
    if (p <= 0) throw InvalidArgument("strict partition parts must be positive");
  }
  return StrictPartition(std::move(parts));
}

Rectangle::Rectangle(int rows, int cols) : n(rows), m(cols) {
  if (rows < 1 || cols < 1) {
    throw InvalidArgument("rectangle dimensions must be positive");
  }
}

Partition Rectangle::full() const {
  return Partition(std::vector<int>(static_cast<std::size_t>(n), m));
}

Staircase::Staircase(int side) : n(side) {
  if (side < 1) throw InvalidArgument("staircase side must be positive");
}

StrictPartition Staircase::full() const {
  std::vector<int> parts;
  for (int k = n; k >= 1; --k) parts.push_back(k);
  return StrictPartition(std::move(parts));
}

bool contains(const Partition& lambda, Rectangle box) noexcept {
  return lambda.length() <= box.n && lambda.largest() <= box.m;
}

bool contains(const StrictPartition& lambda, Staircase s) noexcept {
  return lambda.largest() <= s.n;
}

bool is_subdiagram(const Partition& mu, const Partition& lambda) noexcept {
  if (mu.length() > lambda.length()) return false;
  for (int i = 1; i <= mu.length(); ++i) {
    if (mu[i] > lambda[i]) return false;
  }
  return true;
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> out(static_cast<std::size_t>(lambda.largest()), 0);
  for (int part : lambda.parts()) {
    for (int j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(out));
}

Partition complement(const Partition& lambda, Rectangle box) {
  if (!contains(lambda, box)) {
    throw InvalidArgument("partition " + lambda.to_string() +
                          " does not fit in the " + std::to_string(box.n) +
                          "x" + std::to_string(box.m) + " rectangle");
  }
  std::vector<int> out(static_cast<std::size_t>(box.n));
  for (int i = 1; i <= box.n; ++i) {
    out[static_cast<std::size_t>(i - 1)] = box.m - lambda[box.n + 1 - i];
  }
  return Partition(std::move(out));
}

StrictPartition complement(const StrictPartition& lambda, Staircase s) {
  if (!contains(lambda, s)) {
    throw InvalidArgument("strict partition " + lambda.to_string() +
                          " does not fit in the staircase of side " +
                          std::to_string(s.n));
  }
  std::vector<bool> used(static_cast<std::size_t>(s.n) + 1, false);
  for (int p : lambda.parts()) used[static_cast<std::size_t>(p)] = true;
  std::vector<int> parts;
  for (int k = s.n; k >= 1; --k) {
    if (!used[static_cast<std::size_t>(k)]) parts.push_back(k);
  }
  return StrictPartition(std::move(parts));
}

namespace {

// Emits, in ascending lexicographic order, every weakly decreasing sequence
// with at most `rows` nonzero entries, entries <= bound_i, and entry i not
// exceeding entry i-1. The recursion visits shorter prefixes first, which is
// exactly lexicographic order with the empty sequence smallest.
void visit_bounded(const std::vector<int>& bounds, bool strict,
                   std::vector<int>& prefix,
                   const std::function<void(const std::vector<int>&)>& emit) {
  emit(prefix);
  std::size_t i = prefix.size();
  if (i >= bounds.size()) return;
  int cap = bounds[i];
  if (!prefix.empty()) cap = std::min(cap, prefix.back() - (strict ? 1 : 0));
  for (int v = 1; v <= cap; ++v) {
    prefix.push_back(v);
    visit_bounded(bounds, strict, prefix, emit);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_in(Rectangle box) {
  std::vector<Partition> out;
  out.reserve(static_cast<std::size_t>(binomial(box.n + box.m, box.n)));
  std::vector<int> bounds(static_cast<std::size_t>(box.n), box.m);
  std::vector<int> prefix;
  visit_bounded(bounds, false, prefix,
                [&](const std::vector<int>& p) { out.emplace_back(p); });
  return out;
}

std::vector<StrictPartition> strict_partitions_in(Staircase s) {
  std::vector<StrictPartition> out;
  out.reserve(std::size_t{1} << s.n);
  std::vector<int> bounds(static_cast<std::size_t>(s.n), s.n);
  std::vector<int> prefix;
  visit_bounded(bounds, true, prefix,
                [&](const std::vector<int>& p) { out.emplace_back(p); });
  return out;
}

std::vector<Partition> subdiagrams(const Partition& outer) {
  std::vector<Partition> out;
  std::vector<int> bounds(outer.parts().begin(), outer.parts().end());
  std::vector<int> prefix;
  visit_bounded(bounds, false, prefix,
                [&](const std::vector<int>& p) { out.emplace_back(p); });
  return out;
}

std::int64_t binomial(int n, int k) noexcept {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t result = 1;
  for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

}  // namespace hornlr
