#include "hornlr/feasibility.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

#include "hornlr/horn_statistics.hpp"
#include "hornlr/oracle.hpp"

namespace hornlr {

FeasibleTripleTable::FeasibleTripleTable(int r, int s, TripleSource source,
                                         std::vector<Triple> triples)
    : r_(r), s_(s), source_(source), triples_(std::move(triples)) {
  std::sort(triples_.begin(), triples_.end());
  triples_.erase(std::unique(triples_.begin(), triples_.end()), triples_.end());
  const auto alphas = partitions_in(Rectangle(r, s));
  auto position = [&](const Partition& p) {
    auto it = std::lower_bound(alphas.begin(), alphas.end(), p);
    if (it == alphas.end() || *it != p) {
      throw InvalidArgument("triple member " + p.to_string() +
                            " does not fit in " + std::to_string(r) + "x" +
                            std::to_string(s));
    }
    return static_cast<int>(it - alphas.begin());
  };
  positions_.reserve(triples_.size());
  for (const auto& t : triples_) {
    positions_.push_back({position(t[0]), position(t[1]), position(t[2])});
  }
}

bool FeasibleTripleTable::contains(const Triple& t) const {
  return std::binary_search(triples_.begin(), triples_.end(), t);
}

namespace {

void require_fits(const Partition& p, Rectangle box) {
  if (!contains(p, box)) {
    throw InvalidArgument("partition " + p.to_string() + " does not fit in " +
                          std::to_string(box.n) + "x" + std::to_string(box.m));
  }
}

void require_fits(const StrictPartition& p, Staircase s) {
  if (!contains(p, s)) {
    throw InvalidArgument("strict partition " + p.to_string() +
                          " does not fit in the staircase of side " +
                          std::to_string(s.n));
  }
}

FeasibleTripleTable build_table(int r, int s, TripleSource source) {
  const Rectangle box(r, s);
  const auto shapes = partitions_in(box);
  std::vector<Triple> feasible;
  for (const auto& a : shapes) {
    for (const auto& b : shapes) {
      if (a.weight() + b.weight() > box.area()) continue;
      for (const auto& c : shapes) {
        if (a.weight() + b.weight() + c.weight() != box.area()) continue;
        const bool ok = source == TripleSource::oracle
                            ? sym_a(a, b, c, box) != 0
                            : classical_horn_feasible(
                                  a, b, c, box,
                                  {.fail_fast = true,
                                   .source = TripleSource::recursive})
                                  .feasible;
        if (ok) feasible.push_back({a, b, c});
      }
    }
  }
  return FeasibleTripleTable(r, s, source, std::move(feasible));
}

// Inequality level with one indexing triple: stats[k][p] is the statistic of
// the k-th member of the tested triple against the p-th alpha.
bool check_single(int r, const FeasibleTripleTable& table,
                  const std::array<std::vector<int>, 3>& stats,
                  std::int64_t bound, bool fail_fast,
                  FeasibilityVerdict& verdict) {
  const auto& positions = table.positions();
  for (std::size_t t = 0; t < positions.size(); ++t) {
    const auto& p = positions[t];
    const std::int64_t lhs = stats[0][static_cast<std::size_t>(p[0])] +
                             stats[1][static_cast<std::size_t>(p[1])] +
                             stats[2][static_cast<std::size_t>(p[2])];
    if (lhs > bound) {
      verdict.add({ConstraintKind::inequality, r, {table.triples()[t]}, lhs,
                   bound});
      if (fail_fast) return false;
    }
  }
  return true;
}

bool check_homogeneity(std::int64_t weight, std::int64_t required,
                       bool fail_fast, FeasibilityVerdict& verdict) {
  if (weight == required) return true;
  verdict.add({ConstraintKind::homogeneity, 0, {}, weight, required});
  return !fail_fast;
}

template <class Member, class Stat>
std::array<std::vector<int>, 3> member_stats(
    const std::array<const Member*, 3>& members,
    const std::vector<Partition>& alphas, Stat&& stat) {
  std::array<std::vector<int>, 3> out;
  for (std::size_t k = 0; k < 3; ++k) {
    out[k].reserve(alphas.size());
    for (const auto& alpha : alphas) out[k].push_back(stat(*members[k], alpha));
  }
  return out;
}

}  // namespace

const FeasibleTripleTable& feasible_triples(int r, int s, TripleSource source) {
  if (r < 1 || s < 1) {
    throw InvalidArgument("feasible-triple tables need r, s >= 1");
  }
  using Key = std::tuple<int, int, TripleSource>;
  static std::shared_mutex mutex;
  static std::map<Key, std::unique_ptr<const FeasibleTripleTable>> tables;
  const Key key{r, s, source};
  {
    std::shared_lock lock(mutex);
    auto it = tables.find(key);
    if (it != tables.end()) return *it->second;
  }
  // Built without holding the lock: the recursive source re-enters here for
  // smaller shapes.
  auto table =
      std::make_unique<const FeasibleTripleTable>(build_table(r, s, source));
  std::unique_lock lock(mutex);
  return *tables.try_emplace(key, std::move(table)).first->second;
}

FeasibilityVerdict classical_horn_feasible(const Partition& lambda,
                                           const Partition& mu,
                                           const Partition& nu, Rectangle box,
                                           HornOptions options) {
  require_fits(lambda, box);
  require_fits(mu, box);
  require_fits(nu, box);
  FeasibilityVerdict verdict;
  if (!check_homogeneity(lambda.weight() + mu.weight() + nu.weight(),
                         box.area(), options.fail_fast, verdict)) {
    return verdict;
  }
  const std::array<const Partition*, 3> members{&lambda, &mu, &nu};
  for (int r = 1; r < box.n; ++r) {
    const auto& table = feasible_triples(r, box.n - r, options.source);
    const auto alphas = partitions_in(Rectangle(r, box.n - r));
    auto stats = member_stats(members, alphas,
                              [&](const Partition& p, const Partition& alpha) {
                                return rows_stat(p, box, alpha, r);
                              });
    if (!check_single(r, table, stats,
                      static_cast<std::int64_t>(box.n - r) * box.m,
                      options.fail_fast, verdict)) {
      return verdict;
    }
  }
  return verdict;
}

FeasibilityVerdict symmetric_horn_feasible(const Partition& lambda,
                                           const Partition& mu,
                                           const Partition& nu, Rectangle box,
                                           HornOptions options) {
  require_fits(lambda, box);
  require_fits(mu, box);
  require_fits(nu, box);
  FeasibilityVerdict verdict;
  if (!check_homogeneity(lambda.weight() + mu.weight() + nu.weight(),
                         box.area(), options.fail_fast, verdict)) {
    return verdict;
  }
  const std::array<const Partition*, 3> members{&lambda, &mu, &nu};
  for (int r = 1; r < std::min(box.n, box.m); ++r) {
    const auto& rows_table = feasible_triples(r, box.n - r, options.source);
    const auto& cols_table = feasible_triples(r, box.m - r, options.source);
    const auto row_alphas = partitions_in(Rectangle(r, box.n - r));
    const auto col_alphas = partitions_in(Rectangle(r, box.m - r));
    const std::size_t width = col_alphas.size();
    // stats[k][a * width + b] = |member k|_{alpha_a, alpha'_b}
    std::array<std::vector<int>, 3> stats;
    for (std::size_t k = 0; k < 3; ++k) {
      stats[k].reserve(row_alphas.size() * width);
      for (const auto& alpha : row_alphas) {
        for (const auto& alpha_prime : col_alphas) {
          stats[k].push_back(
              rows_cols_stat(*members[k], box, alpha, alpha_prime, r));
        }
      }
    }
    const std::int64_t bound =
        static_cast<std::int64_t>(box.m - r) * (box.n - r);
    for (std::size_t i = 0; i < rows_table.size(); ++i) {
      const auto& rp = rows_table.positions()[i];
      for (std::size_t j = 0; j < cols_table.size(); ++j) {
        const auto& cp = cols_table.positions()[j];
        std::int64_t lhs = 0;
        for (std::size_t k = 0; k < 3; ++k) {
          lhs += stats[k][static_cast<std::size_t>(rp[k]) * width +
                          static_cast<std::size_t>(cp[k])];
        }
        if (lhs > bound) {
          verdict.add({ConstraintKind::inequality, r,
                       {rows_table.triples()[i], cols_table.triples()[j]}, lhs,
                       bound});
          if (options.fail_fast) return verdict;
        }
      }
    }
  }
  return verdict;
}

namespace {

template <class Stat>
FeasibilityVerdict staircase_system(const StrictPartition& lambda,
                                    const StrictPartition& mu,
                                    const StrictPartition& nu, Staircase s,
                                    HornOptions options, int ambient,
                                    int r_step, Stat&& stat) {
  require_fits(lambda, s);
  require_fits(mu, s);
  require_fits(nu, s);
  FeasibilityVerdict verdict;
  if (!check_homogeneity(lambda.weight() + mu.weight() + nu.weight(),
                         s.weight(), options.fail_fast, verdict)) {
    return verdict;
  }
  const std::array<const StrictPartition*, 3> members{&lambda, &mu, &nu};
  for (int r = r_step; r < ambient; r += r_step) {
    const auto& table = feasible_triples(r, ambient - r, options.source);
    const auto alphas = partitions_in(Rectangle(r, ambient - r));
    auto stats = member_stats(
        members, alphas,
        [&](const StrictPartition& p, const Partition& alpha) {
          return stat(p, alpha, r);
        });
    if (!check_single(r, table, stats, binomial(s.n + 1 - r, 2),
                      options.fail_fast, verdict)) {
      return verdict;
    }
  }
  return verdict;
}

}  // namespace

FeasibilityVerdict type_c_feasible(const StrictPartition& lambda,
                                   const StrictPartition& mu,
                                   const StrictPartition& nu, Staircase s,
                                   HornOptions options) {
  return staircase_system(
      lambda, mu, nu, s, options, s.n, 1,
      [&](const StrictPartition& p, const Partition& alpha, int r) {
        return inner_corner_stat(p, s, alpha, r);
      });
}

FeasibilityVerdict type_d_feasible(const StrictPartition& lambda,
                                   const StrictPartition& mu,
                                   const StrictPartition& nu, Staircase s,
                                   HornOptions options) {
  return staircase_system(
      lambda, mu, nu, s, options, s.n + 1, 2,
      [&](const StrictPartition& p, const Partition& alpha, int r) {
        return outer_corner_stat(p, s, alpha, r);
      });
}

FeasibilityVerdict oracle_feasible(const Partition& lambda, const Partition& mu,
                                   const Partition& nu, Rectangle box) {
  FeasibilityVerdict verdict;
  const auto value = sym_a(lambda, mu, nu, box);
  if (value == 0) verdict.add({ConstraintKind::coefficient, 0, {}, 0, 0});
  return verdict;
}

FeasibilityVerdict oracle_feasible(const StrictPartition& lambda,
                                   const StrictPartition& mu,
                                   const StrictPartition& nu, Staircase s) {
  FeasibilityVerdict verdict;
  const auto value = sym_c(lambda, mu, nu, s);
  if (value == 0) verdict.add({ConstraintKind::coefficient, 0, {}, 0, 0});
  return verdict;
}

std::string to_string(HornSystem system) {
  switch (system) {
    case HornSystem::classical: return "classical";
    case HornSystem::symmetric: return "symmetric";
    case HornSystem::type_c: return "type-c";
    case HornSystem::type_d: return "type-d";
  }
  return "unknown";
}

HornSystem parse_horn_system(const std::string& name) {
  if (name == "classical") return HornSystem::classical;
  if (name == "symmetric") return HornSystem::symmetric;
  if (name == "type-c") return HornSystem::type_c;
  if (name == "type-d") return HornSystem::type_d;
  throw InvalidArgument("unknown inequality system '" + name +
                        "' (expected classical, symmetric, type-c, type-d)");
}

std::vector<InequalityDescriptor> list_inequalities(HornSystem system,
                                                    Shape shape) {
  std::vector<InequalityDescriptor> out;
  const bool rectangular =
      system == HornSystem::classical || system == HornSystem::symmetric;
  if (rectangular != std::holds_alternative<Rectangle>(shape)) {
    throw InvalidArgument(to_string(system) + " inequalities need a " +
                          (rectangular ? "rectangle" : "staircase"));
  }
  auto single = [&](int r, int s, std::int64_t bound) {
    for (const auto& t : feasible_triples(r, s, TripleSource::oracle).triples()) {
      out.push_back({system, r, {t}, bound});
    }
  };
  switch (system) {
    case HornSystem::classical: {
      const auto box = std::get<Rectangle>(shape);
      for (int r = 1; r < box.n; ++r) {
        single(r, box.n - r, static_cast<std::int64_t>(box.n - r) * box.m);
      }
      break;
    }
    case HornSystem::symmetric: {
      const auto box = std::get<Rectangle>(shape);
      for (int r = 1; r < std::min(box.n, box.m); ++r) {
        const auto& rows = feasible_triples(r, box.n - r, TripleSource::oracle);
        const auto& cols = feasible_triples(r, box.m - r, TripleSource::oracle);
        for (const auto& a : rows.triples()) {
          for (const auto& b : cols.triples()) {
            out.push_back({system, r, {a, b},
                           static_cast<std::int64_t>(box.m - r) * (box.n - r)});
          }
        }
      }
      break;
    }
    case HornSystem::type_c: {
      const auto s = std::get<Staircase>(shape);
      for (int r = 1; r < s.n; ++r) single(r, s.n - r, binomial(s.n + 1 - r, 2));
      break;
    }
    case HornSystem::type_d: {
      const auto s = std::get<Staircase>(shape);
      for (int r = 2; r < s.n + 1; r += 2) {
        single(r, s.n + 1 - r, binomial(s.n + 1 - r, 2));
      }
      break;
    }
  }
  return out;
}

}  // namespace hornlr
