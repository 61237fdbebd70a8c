// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 when
// any criterion fails. Links only the core library.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "brute_force.hpp"
#include "hornlr/hornlr.hpp"

namespace {

using namespace hornlr;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects failure messages for one criterion.
struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

// ---- 1. worked fixtures -----------------------------------------------------

void fixtures(Check& check) {
  const auto start = Clock::now();
  const auto report = fixture_check();
  for (const auto& d : report.disagreements) check.expect(false, d.detail);
  check.expect(report.total == 8, "expected 8 fixture values, got " +
                                      std::to_string(report.total));
  const double t = seconds_since(start);
  check.expect(t < 1.0, "fixtures took " + std::to_string(t) + " s");
}

// ---- 2. equivalence sweeps --------------------------------------------------

std::vector<SweepReport> g_sweeps;  // reused by criterion 3

void timed_sweep(Check& check, const std::function<SweepReport()>& run,
                 std::int64_t expected_total, double limit) {
  const auto start = Clock::now();
  SweepReport r = run();
  const double t = seconds_since(start);
  std::printf("    %-14s %-30s %6lld triples  %5zu disagreements  %.2f s\n",
              r.shape.c_str(),
              [&] {
                std::string s;
                for (const auto& x : r.systems) s += (s.empty() ? "" : ",") + x;
                return s;
              }()
                  .c_str(),
              static_cast<long long>(r.total), r.disagreements.size(), t);
  check.expect(r.total == expected_total,
               r.shape + ": " + std::to_string(r.total) + " triples, expected " +
                   std::to_string(expected_total));
  check.expect(r.clean(), r.shape + ": " + std::to_string(r.disagreements.size()) +
                              " disagreements");
  check.expect(t <= limit, r.shape + " exceeded " + std::to_string(limit) + " s");
  g_sweeps.push_back(std::move(r));
}

void sweeps(Check& check) {
  const auto cube = [](std::int64_t x) { return x * x * x; };
  for (auto [n, m] : {std::pair{2, 2}, {2, 3}, {3, 3}, {2, 4}}) {
    timed_sweep(check, [n = n, m = m] {
      return sweep_rectangle(n, m, {HornSystem::classical});
    }, cube(binomial(n + m, n)), 60.0);
  }
  for (auto [n, m] : {std::pair{2, 2}, {2, 3}, {3, 3}}) {
    timed_sweep(check, [n = n, m = m] {
      return sweep_rectangle(n, m, {HornSystem::symmetric});
    }, cube(binomial(n + m, n)), 120.0);
  }
  const auto start = Clock::now();
  for (int n = 1; n <= 5; ++n) {
    timed_sweep(check, [n] {
      return sweep_staircase(n, {HornSystem::type_c, HornSystem::type_d});
    }, cube(std::int64_t{1} << n), 600.0);
  }
  check.expect(seconds_since(start) <= 600.0, "staircase sweeps exceeded 10 min");
}

// ---- 3. oracle properties ---------------------------------------------------

void symmetry(Check& check) {
  // The sweeps above already compared every ordering of every triple; any
  // asymmetry shows up in their details.
  for (const auto& r : g_sweeps) {
    for (const auto& d : r.disagreements) {
      check.expect(d.detail.find("permutation") == std::string::npos,
                   r.shape + ": " + d.detail);
    }
  }
  // Independent spot pass on the smallest shapes.
  const Rectangle box(2, 2);
  const auto shapes = partitions_in(box);
  for (const auto& a : shapes)
    for (const auto& b : shapes)
      for (const auto& c : shapes) {
        const auto v = sym_a(a, b, c, box);
        check.expect(v == sym_a(b, a, c, box) && v == sym_a(c, b, a, box) &&
                         v == sym_a(a, c, b, box) && v == sym_a(b, c, a, box) &&
                         v == sym_a(c, a, b, box),
                     "sym_a asymmetric at " + a.to_string() + "|" + b.to_string() +
                         "|" + c.to_string());
      }
  const Staircase s(3);
  const auto strict = strict_partitions_in(s);
  for (const auto& a : strict)
    for (const auto& b : strict)
      for (const auto& c : strict) {
        const auto vc = sym_c(a, b, c, s);
        const auto vd = sym_d(a, b, c, s);
        check.expect(vc == sym_c(b, a, c, s) && vc == sym_c(c, b, a, s) &&
                         vd == sym_d(b, a, c, s) && vd == sym_d(a, c, b, s),
                     "sym_c/sym_d asymmetric at " + a.to_string() + "|" +
                         b.to_string() + "|" + c.to_string());
      }
}

std::vector<StrictPartition> strict_of_weight_at_most(int w) {
  std::vector<StrictPartition> out;
  for (const auto& p : strict_partitions_in(Staircase(w))) {
    if (p.weight() <= w) out.push_back(p);
  }
  return out;
}

void proportionality_and_homogeneity(Check& check) {
  const auto strict = strict_of_weight_at_most(8);
  for (const auto& lambda : strict) {
    for (const auto& mu : strict) {
      for (const auto& nu : strict) {
        if (mu.weight() + nu.weight() > 8) continue;
        const auto c = lr_c(lambda, mu, nu);
        const auto d = lr_d_direct(lambda, mu, nu);
        const std::string where =
            lambda.to_string() + "|" + mu.to_string() + "|" + nu.to_string();
        check.expect((d << (mu.length() + nu.length())) == (c << lambda.length()),
                     "proportionality fails at " + where);
        if (c != 0 || d != 0) {
          check.expect(lambda.weight() == mu.weight() + nu.weight(),
                       "nonzero inhomogeneous P/Q coefficient at " + where);
        }
      }
    }
  }
  // Ordinary coefficients: nonzero only when |lambda| = |mu| + |nu|.
  const auto shapes = partitions_in(Rectangle(3, 3));
  for (const auto& lambda : shapes) {
    for (const auto& mu : shapes) {
      for (const auto& nu : shapes) {
        if (mu.weight() + nu.weight() > 9) continue;
        if (lr_a(lambda, mu, nu) != 0) {
          check.expect(lambda.weight() == mu.weight() + nu.weight(),
                       "nonzero inhomogeneous coefficient at " + lambda.to_string());
        }
      }
    }
  }
  // Symmetrized coefficients: nonzero only with full ambient weight.
  for (int n = 1; n <= 4; ++n) {
    const Staircase s(n);
    const auto all = strict_partitions_in(s);
    for (const auto& a : all)
      for (const auto& b : all)
        for (const auto& c : all) {
          if (sym_c(a, b, c, s) != 0) {
            check.expect(a.weight() + b.weight() + c.weight() == s.weight(),
                         "sym_c nonzero off the homogeneity hyperplane");
          }
        }
  }
}

void variable_stability(Check& check) {
  std::mt19937 rng(8);
  int sampled = 0;
  while (sampled < 100) {
    const auto lambda = testing::random_partition(rng, 4, 4);
    const auto mu = testing::random_partition(rng, 3, 3);
    const auto nu = testing::random_partition(rng, 3, 3);
    const auto sl = testing::random_strict(rng, 5);
    const auto sm = testing::random_strict(rng, 4);
    const auto sn = testing::random_strict(rng, 4);
    if (lambda.weight() > 8 || mu.weight() + nu.weight() > 8) continue;
    if (sl.weight() > 8 || sm.weight() + sn.weight() > 8) continue;
    ++sampled;
    const int N = std::max(lambda.length(), 1);
    const auto a = lr_a(lambda, mu, nu);
    check.expect(a == lr_a(lambda, mu, nu, N + 1) && a == lr_a(lambda, mu, nu, N + 2),
                 "lr_a depends on the variable count at " + lambda.to_string());
    const int M = std::max(sl.length(), 1);
    const auto c = lr_c(sl, sm, sn);
    check.expect(c == lr_c(sl, sm, sn, M + 1) && c == lr_c(sl, sm, sn, M + 2),
                 "lr_c depends on the variable count at " + sl.to_string());
  }
}

void involutions(Check& check) {
  for (int n = 1; n <= 5; ++n) {
    for (int m = 1; m <= 5; ++m) {
      const Rectangle box(n, m);
      for (const auto& p : partitions_in(box)) {
        const auto c = complement(p, box);
        check.expect(complement(c, box) == p && p.weight() + c.weight() == n * m,
                     "rectangle complement at " + p.to_string());
      }
    }
    const Staircase s(n);
    for (const auto& p : strict_partitions_in(s)) {
      const auto c = complement(p, s);
      check.expect(complement(c, s) == p && p.weight() + c.weight() == s.weight(),
                   "staircase complement at " + p.to_string());
    }
  }
}

void oracle_properties(Check& check) {
  symmetry(check);
  proportionality_and_homogeneity(check);
  variable_stability(check);
  involutions(check);
}

// ---- 4. recursive tables ----------------------------------------------------

void recursive_consistency(Check& check) {
  for (int r = 1; r <= 6; ++r) {
    for (int s = 1; r + s <= 7; ++s) {
      const auto& a = feasible_triples(r, s, TripleSource::oracle);
      const auto& b = feasible_triples(r, s, TripleSource::recursive);
      check.expect(a.triples() == b.triples(),
                   std::to_string(r) + "x" + std::to_string(s) +
                       ": oracle and recursive tables differ");
    }
  }
}

// ---- 5. hand values ---------------------------------------------------------

void spot_checks(Check& check) {
  check.expect(lr_a({2}, {1}, {1}) == 1, "lr_a((2),(1),(1)) != 1");
  check.expect(lr_a({1, 1}, {1}, {1}) == 1, "lr_a((1,1),(1),(1)) != 1");
  check.expect(lr_c({2}, {1}, {1}) == 2, "lr_c((2),(1),(1)) != 2");
  check.expect(lr_d({2}, {1}, {1}) == 1, "lr_d((2),(1),(1)) != 1");
  const Rectangle box(2, 2);
  check.expect(sym_a({2}, {1, 1}, {}, box) == 0, "sym_a((2),(1,1),(); 2x2) != 0");
  const auto v = classical_horn_feasible({2}, {1, 1}, {}, box);
  bool found = false;
  for (const auto& w : v.witnesses) {
    found = found || (w.kind == ConstraintKind::inequality && w.r == 1 &&
                      w.lhs == 3 && w.bound == 2);
  }
  check.expect(!v.feasible && found, "classical witness 3 > 2 missing");
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    void (*run)(Check&);
  };
  const Criterion criteria[] = {
      {"1 worked fixtures", fixtures},
      {"2 equivalence sweeps", sweeps},
      {"3 oracle properties", oracle_properties},
      {"4 recursive table consistency", recursive_consistency},
      {"5 hand-derived spot checks", spot_checks},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Check check;
    const auto start = Clock::now();
    try {
      c.run(check);
    } catch (const std::exception& e) {
      check.failures.push_back(std::string("exception: ") + e.what());
    }
    const double t = seconds_since(start);
    const bool ok = check.failures.empty();
    failed += ok ? 0 : 1;
    std::printf("%s  %-32s (%.2f s)\n", ok ? "PASS" : "FAIL", c.name, t);
    for (std::size_t i = 0; i < check.failures.size() && i < 10; ++i) {
      std::printf("    %s\n", check.failures[i].c_str());
    }
    std::fflush(stdout);
  }
  std::printf("%d of 5 criteria passed\n", 5 - failed);
  return failed == 0 ? 0 : 1;
}
