#include "hornlr/verification.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <exception>
#include <functional>
#include <thread>

#include "hornlr/horn_statistics.hpp"
#include "hornlr/oracle.hpp"

namespace hornlr {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::array<std::array<int, 3>, 6> kPermutations{{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

struct Outcome {
  bool agrees = true;
  Disagreement disagreement;
};

// Visits every selected index triple on `threads` workers. Results are
// merged by triple position, so the report does not depend on scheduling.
SweepReport run_sweep(std::size_t shape_count,
                      const std::function<bool(const std::array<int, 3>&)>& keep,
                      const std::function<Outcome(const std::array<int, 3>&)>& check,
                      int threads) {
  std::vector<std::array<int, 3>> work;
  const int k = static_cast<int>(shape_count);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      for (int c = 0; c < k; ++c) {
        std::array<int, 3> t{a, b, c};
        if (keep(t)) work.push_back(t);
      }
    }
  }

  const std::size_t workers = static_cast<std::size_t>(std::max(1, threads));
  std::vector<std::vector<std::pair<std::size_t, Disagreement>>> found(workers);
  std::vector<std::exception_ptr> errors(workers);
  auto body = [&](std::size_t w) {
    try {
      for (std::size_t i = w; i < work.size(); i += workers) {
        Outcome o = check(work[i]);
        if (!o.agrees) found[w].emplace_back(i, std::move(o.disagreement));
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    body(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(body, w);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<std::pair<std::size_t, Disagreement>> merged;
  for (auto& part : found) {
    for (auto& item : part) merged.push_back(std::move(item));
  }
  std::sort(merged.begin(), merged.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });

  SweepReport report;
  report.total = static_cast<std::int64_t>(work.size());
  for (auto& [i, d] : merged) report.disagreements.push_back(std::move(d));
  report.agree =
      report.total - static_cast<std::int64_t>(report.disagreements.size());
  return report;
}

void append_detail(std::string& detail, const std::string& what) {
  if (!detail.empty()) detail += "; ";
  detail += what;
}

template <class Shape>
std::vector<std::string> triple_text(const std::vector<Shape>& shapes,
                                     const std::array<int, 3>& t) {
  return {shapes[static_cast<std::size_t>(t[0])].to_string(),
          shapes[static_cast<std::size_t>(t[1])].to_string(),
          shapes[static_cast<std::size_t>(t[2])].to_string()};
}

// Oracle value of every ordering of the triple must match the first one.
template <class Shape, class Coefficient>
bool symmetric_under_permutations(const std::vector<Shape>& shapes,
                                  const std::array<int, 3>& t,
                                  std::int64_t value, Coefficient&& coeff) {
  for (const auto& p : kPermutations) {
    const auto& a = shapes[static_cast<std::size_t>(t[static_cast<std::size_t>(p[0])])];
    const auto& b = shapes[static_cast<std::size_t>(t[static_cast<std::size_t>(p[1])])];
    const auto& c = shapes[static_cast<std::size_t>(t[static_cast<std::size_t>(p[2])])];
    if (coeff(a, b, c) != value) return false;
  }
  return true;
}

std::vector<std::string> system_names(const std::vector<HornSystem>& systems) {
  std::vector<std::string> out;
  for (auto s : systems) out.push_back(to_string(s));
  return out;
}

std::int64_t elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               start)
      .count();
}

}  // namespace

SweepReport sweep_rectangle(int n, int m, const std::vector<HornSystem>& systems,
                            const SweepConfig& config) {
  const auto start = Clock::now();
  const Rectangle box(n, m);
  for (auto s : systems) {
    if (s != HornSystem::classical && s != HornSystem::symmetric) {
      throw InvalidArgument(to_string(s) + " is not a rectangle system");
    }
  }
  const std::int64_t side = binomial(n + m, n);
  if (side * side * side > config.max_triples) {
    throw ResourceLimit("rectangle " + std::to_string(n) + "x" +
                        std::to_string(m) + " has " +
                        std::to_string(side * side * side) +
                        " ordered triples, above the cap of " +
                        std::to_string(config.max_triples));
  }
  const auto shapes = partitions_in(box);

  // Tables are shared read-only by the workers; build them first.
  for (int r = 1; r < n; ++r) feasible_triples(r, n - r, config.source);
  for (int r = 1; r < std::min(n, m); ++r) {
    feasible_triples(r, m - r, config.source);
  }

  const HornOptions options{.fail_fast = true, .source = config.source};
  auto keep = [&](const std::array<int, 3>& t) {
    if (!config.weight_filter) return true;
    int w = 0;
    for (int i : t) w += shapes[static_cast<std::size_t>(i)].weight();
    return w == box.area();
  };
  auto check = [&](const std::array<int, 3>& t) {
    const auto& a = shapes[static_cast<std::size_t>(t[0])];
    const auto& b = shapes[static_cast<std::size_t>(t[1])];
    const auto& c = shapes[static_cast<std::size_t>(t[2])];
    Outcome o;
    auto coeff = [&](const Partition& x, const Partition& y,
                     const Partition& z) { return sym_a(x, y, z, box); };
    const std::int64_t value = coeff(a, b, c);
    const bool expected = value != 0;
    Disagreement& d = o.disagreement;
    for (auto s : systems) {
      const bool verdict =
          s == HornSystem::classical
              ? classical_horn_feasible(a, b, c, box, options).feasible
              : symmetric_horn_feasible(a, b, c, box, options).feasible;
      d.verdicts[to_string(s)] = verdict;
      if (verdict != expected) {
        append_detail(d.detail, to_string(s) + " disagrees with the oracle");
      }
    }
    if (!symmetric_under_permutations(shapes, t, value, coeff)) {
      append_detail(d.detail, "sym_a is not permutation invariant");
    }
    if (!d.detail.empty()) {
      o.agrees = false;
      d.triple = triple_text(shapes, t);
      d.oracle = value;
    }
    return o;
  };

  SweepReport report = run_sweep(shapes.size(), keep, check, config.threads);
  report.shape = "rect " + std::to_string(n) + "x" + std::to_string(m);
  report.systems = system_names(systems);
  report.config = config;
  report.duration_ms = elapsed_ms(start);
  return report;
}

SweepReport sweep_staircase(int n, const std::vector<HornSystem>& systems,
                            const SweepConfig& config) {
  const auto start = Clock::now();
  const Staircase stair(n);
  for (auto s : systems) {
    if (s != HornSystem::type_c && s != HornSystem::type_d) {
      throw InvalidArgument(to_string(s) + " is not a staircase system");
    }
  }
  if (n > config.max_staircase) {
    throw ResourceLimit("staircase side " + std::to_string(n) +
                        " exceeds the cap of " +
                        std::to_string(config.max_staircase));
  }
  const auto shapes = strict_partitions_in(stair);

  for (int r = 1; r < n; ++r) feasible_triples(r, n - r, config.source);
  for (int r = 2; r < n + 1; r += 2) {
    feasible_triples(r, n + 1 - r, config.source);
  }

  const bool both =
      std::find(systems.begin(), systems.end(), HornSystem::type_c) !=
          systems.end() &&
      std::find(systems.begin(), systems.end(), HornSystem::type_d) !=
          systems.end();
  const HornOptions options{.fail_fast = true, .source = config.source};
  auto keep = [&](const std::array<int, 3>& t) {
    if (!config.weight_filter) return true;
    int w = 0;
    for (int i : t) w += shapes[static_cast<std::size_t>(i)].weight();
    return w == stair.weight();
  };
  auto check = [&](const std::array<int, 3>& t) {
    const auto& a = shapes[static_cast<std::size_t>(t[0])];
    const auto& b = shapes[static_cast<std::size_t>(t[1])];
    const auto& c = shapes[static_cast<std::size_t>(t[2])];
    Outcome o;
    Disagreement& d = o.disagreement;
    auto c_coeff = [&](const StrictPartition& x, const StrictPartition& y,
                       const StrictPartition& z) {
      return sym_c(x, y, z, stair);
    };
    auto d_coeff = [&](const StrictPartition& x, const StrictPartition& y,
                       const StrictPartition& z) {
      return sym_d(x, y, z, stair);
    };
    const std::int64_t c_value = c_coeff(a, b, c);
    const std::int64_t d_value = d_coeff(a, b, c);
    const bool expected = c_value != 0;
    if ((d_value != 0) != expected) {
      append_detail(d.detail, "sym_c and sym_d differ in support");
    }
    for (auto s : systems) {
      const bool verdict =
          s == HornSystem::type_c
              ? type_c_feasible(a, b, c, stair, options).feasible
              : type_d_feasible(a, b, c, stair, options).feasible;
      d.verdicts[to_string(s)] = verdict;
      if (verdict != expected) {
        append_detail(d.detail, to_string(s) + " disagrees with the oracle");
      }
    }
    if (both && d.verdicts["type-c"] != d.verdicts["type-d"]) {
      append_detail(d.detail, "type-c and type-d disagree");
    }
    if (!symmetric_under_permutations(shapes, t, c_value, c_coeff)) {
      append_detail(d.detail, "sym_c is not permutation invariant");
    }
    if (!symmetric_under_permutations(shapes, t, d_value, d_coeff)) {
      append_detail(d.detail, "sym_d is not permutation invariant");
    }
    if (!d.detail.empty()) {
      o.agrees = false;
      d.triple = triple_text(shapes, t);
      d.oracle = c_value;
    }
    return o;
  };

  SweepReport report = run_sweep(shapes.size(), keep, check, config.threads);
  report.shape = "staircase " + std::to_string(n);
  report.systems = system_names(systems);
  report.config = config;
  report.duration_ms = elapsed_ms(start);
  return report;
}

SweepReport fixture_check() {
  const auto start = Clock::now();
  SweepReport report;
  report.shape = "fixtures";
  report.systems = {"index-set", "rows", "rows-cols", "inner", "outer"};

  auto record = [&](const std::string& name, const std::string& got,
                    const std::string& want) {
    ++report.total;
    if (got == want) {
      ++report.agree;
      return;
    }
    Disagreement d;
    d.triple = {name, "", ""};
    d.detail = name + ": expected " + want + ", got " + got;
    report.disagreements.push_back(std::move(d));
  };

  record("index_set(3,1,1; N=7, r=3)",
         index_set(Partition{3, 1, 1}, 7, 3).to_string(), "{2,5,6}");
  record("index_set(4,1,0; N=8, r=3)",
         index_set(Partition{4, 1, 0}, 8, 3).to_string(), "{2,6,8}");
  record("index_set(4,2,2,0; N=8, r=4)",
         index_set(Partition{4, 2, 2, 0}, 8, 4).to_string(), "{1,4,5,8}");
  record("index_set(4,2,2,0; N=9, r=4)",
         index_set(Partition{4, 2, 2, 0}, 9, 4).to_string(), "{2,5,6,9}");

  const Partition lambda{8, 6, 5, 4, 3, 1, 0};
  const Rectangle box(7, 8);
  record("rows(8,6,5,4,3,1,0; 7x8; 3,1,1)",
         std::to_string(rows_stat(lambda, box, Partition{3, 1, 1}, 3)), "15");
  record("rows-cols(8,6,5,4,3,1,0; 7x8; 3,1,1; 4,1,0)",
         std::to_string(rows_cols_stat(lambda, box, Partition{3, 1, 1},
                                       Partition{4, 1, 0}, 3)),
         "8");

  const StrictPartition strict{8, 6, 4, 3};
  const Staircase stair(8);
  record("inner(8,6,4,3; staircase 8; 4,2,2,0)",
         std::to_string(inner_corner_stat(strict, stair, Partition{4, 2, 2, 0}, 4)),
         "6");
  record("outer(8,6,4,3; staircase 8; 4,2,2,0)",
         std::to_string(outer_corner_stat(strict, stair, Partition{4, 2, 2, 0}, 4)),
         "5");

  report.duration_ms = elapsed_ms(start);
  return report;
}

}  // namespace hornlr
