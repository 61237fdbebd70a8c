#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hornlr/feasibility.hpp"
#include "hornlr/verification.hpp"

namespace hornlr {

/// What a verdict was computed for; echoed under "input".
struct VerdictInput {
  std::string shape;   // "rect 2x2" or "staircase 3"
  std::string method;  // oracle, horn, symmetric, type-c, type-d
  std::string lambda;
  std::string mu;
  std::string nu;

  friend bool operator==(const VerdictInput&, const VerdictInput&) = default;
};

struct VerdictDocument {
  FeasibilityVerdict verdict;
  VerdictInput input;

  friend bool operator==(const VerdictDocument&,
                         const VerdictDocument&) = default;
};

// JSON layouts (keys always in this order, two-space indent):
//   verdict: {"feasible", "witnesses": [{"kind", "r", "triples", "lhs",
//             "bound"}], "input": {"shape", "method", "lambda", "mu", "nu"}}
//   report:  {"shape", "systems", "total", "agree", "disagreements":
//             [{"triple", "verdicts", "oracle", "detail"}], "duration_ms",
//             "config": {"threads", "weight_filter", "max_triples",
//             "max_staircase", "source"}}
// Partitions are written in the comma-separated text syntax, so a triple is
// an array of three strings. Parsing and re-serializing is byte-identical.

std::string to_json(const VerdictDocument& doc);
VerdictDocument verdict_from_json(std::string_view text);

std::string to_json(const SweepReport& report);
SweepReport report_from_json(std::string_view text);

std::string to_json(const std::vector<InequalityDescriptor>& inequalities);

/// One header line, then one line per disagreement:
/// lambda,mu,nu,oracle,verdicts,detail (fields quoted).
std::string disagreements_csv(const SweepReport& report);

std::string to_string(ConstraintKind kind);
ConstraintKind parse_constraint_kind(std::string_view name);
std::string to_string(TripleSource source);
TripleSource parse_triple_source(std::string_view name);

}  // namespace hornlr
