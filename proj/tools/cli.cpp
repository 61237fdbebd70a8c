#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "hornlr/hornlr.hpp"

namespace hornlr::cli {

namespace {

enum class Format { human, json, csv };

struct CliConfig {
  std::string kind;  // the subcommand's positional selector
  std::string lambda, mu, nu, alpha, alpha_prime;
  int n = 0;
  int m = 0;
  int r = 0;
  std::optional<int> variables;
  std::string method;  // empty: horn for rect, type-c for staircase
  std::string source = "oracle";
  std::vector<std::string> systems;
  Format format = Format::human;
  bool fail_fast = false;
  bool fail_on_infeasible = false;
  bool weight_filter = false;
  int threads = 1;
  std::int64_t max_triples = SweepConfig{}.max_triples;
  int max_staircase = SweepConfig{}.max_staircase;
  std::string out_file;
  std::string csv_file;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int default_threads() {
  if (const char* env = std::getenv("HORNLR_THREADS")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (const std::exception&) {
      throw UsageError("HORNLR_THREADS must be a positive integer");
    }
  }
  return 1;
}

std::string show(const Partition& p) {
  return p.empty() ? "()" : p.to_string();
}

std::string show(const Triple& t) {
  return "(" + show(t[0]) + " | " + show(t[1]) + " | " + show(t[2]) + ")";
}

Rectangle rectangle_from(const CliConfig& c) {
  if (c.n < 1 || c.m < 1) throw UsageError("--n and --m must be positive");
  return Rectangle(c.n, c.m);
}

Staircase staircase_from(const CliConfig& c) {
  if (c.n < 1) throw UsageError("--n must be positive");
  return Staircase(c.n);
}

// Writes to --out when given, otherwise to the standard stream.
void emit(const CliConfig& c, std::ostream& out, const std::string& text) {
  if (c.out_file.empty()) {
    out << text;
    return;
  }
  std::ofstream file(c.out_file);
  if (!file) throw UsageError("cannot open " + c.out_file + " for writing");
  file << text;
}

int run_coeff(const CliConfig& c, std::ostream& out) {
  std::int64_t value = 0;
  std::string shape;
  if (c.kind == "a") {
    const auto lambda = Partition::parse(c.lambda);
    value = c.variables ? lr_a(lambda, Partition::parse(c.mu),
                               Partition::parse(c.nu), *c.variables)
                        : lr_a(lambda, Partition::parse(c.mu),
                               Partition::parse(c.nu));
  } else if (c.kind == "c" || c.kind == "d") {
    const auto lambda = StrictPartition::parse(c.lambda);
    const auto mu = StrictPartition::parse(c.mu);
    const auto nu = StrictPartition::parse(c.nu);
    if (c.kind == "c") {
      value = c.variables ? lr_c(lambda, mu, nu, *c.variables)
                          : lr_c(lambda, mu, nu);
    } else {
      value = lr_d(lambda, mu, nu);
    }
  } else if (c.kind == "sym-a") {
    const auto box = rectangle_from(c);
    shape = "rect " + std::to_string(box.n) + "x" + std::to_string(box.m);
    value = sym_a(Partition::parse(c.lambda), Partition::parse(c.mu),
                  Partition::parse(c.nu), box);
  } else {
    const auto s = staircase_from(c);
    shape = "staircase " + std::to_string(s.n);
    const auto lambda = StrictPartition::parse(c.lambda);
    const auto mu = StrictPartition::parse(c.mu);
    const auto nu = StrictPartition::parse(c.nu);
    value = c.kind == "sym-c" ? sym_c(lambda, mu, nu, s) : sym_d(lambda, mu, nu, s);
  }
  if (c.format == Format::json) {
    std::ostringstream os;
    os << "{\n  \"coefficient\": \"" << c.kind << "\",\n  \"value\": " << value
       << ",\n  \"input\": {\n    \"shape\": \"" << shape
       << "\",\n    \"lambda\": \"" << Partition::parse(c.lambda).to_string()
       << "\",\n    \"mu\": \"" << Partition::parse(c.mu).to_string()
       << "\",\n    \"nu\": \"" << Partition::parse(c.nu).to_string()
       << "\"\n  }\n}\n";
    emit(c, out, os.str());
  } else {
    emit(c, out, std::to_string(value) + "\n");
  }
  return kOk;
}

int run_stat(const CliConfig& c, std::ostream& out) {
  const auto alpha = Partition::parse(c.alpha);
  CrossingDiagram diagram(1, 1);
  std::vector<int> labels;
  std::string crossed;
  if (c.kind == "rows" || c.kind == "rows-cols") {
    const auto box = rectangle_from(c);
    const auto lambda = Partition::parse(c.lambda);
    crossed = "rows " + index_set(alpha, box.n, c.r).to_string();
    if (c.kind == "rows") {
      diagram = rows_diagram(lambda, box, alpha, c.r);
    } else {
      const auto alpha_prime = Partition::parse(c.alpha_prime);
      diagram = rows_cols_diagram(lambda, box, alpha, alpha_prime, c.r);
      crossed += ", columns " + index_set(alpha_prime, box.m, c.r).to_string();
    }
    for (int row = box.n; row >= 1; --row) labels.push_back(row);
  } else {
    const auto s = staircase_from(c);
    const auto lambda = StrictPartition::parse(c.lambda);
    if (c.kind == "inner") {
      diagram = inner_corner_diagram(lambda, s, alpha, c.r);
      crossed = "inner corners " + index_set(alpha, s.n, c.r).to_string();
    } else {
      diagram = outer_corner_diagram(lambda, s, alpha, c.r);
      crossed = "outer corners " + index_set(alpha, s.n + 1, c.r).to_string();
    }
  }
  const int value = diagram.surviving();
  if (c.format == Format::json) {
    std::ostringstream os;
    os << "{\n  \"statistic\": \"" << c.kind << "\",\n  \"value\": " << value
       << ",\n  \"crossed\": \"" << crossed << "\"\n}\n";
    emit(c, out, os.str());
  } else {
    emit(c, out,
         std::to_string(value) + "\n" + "crossed " + crossed + "\n" +
             diagram.render(labels));
  }
  return kOk;
}

int run_feasible(CliConfig c, std::ostream& out) {
  if (c.method.empty()) c.method = c.kind == "rect" ? "horn" : "type-c";
  const HornOptions options{.fail_fast = c.fail_fast,
                            .source = parse_triple_source(c.source)};
  VerdictDocument doc;
  doc.input.method = c.method;
  if (c.kind == "rect") {
    const auto box = rectangle_from(c);
    const auto lambda = Partition::parse(c.lambda);
    const auto mu = Partition::parse(c.mu);
    const auto nu = Partition::parse(c.nu);
    doc.input.shape = "rect " + std::to_string(box.n) + "x" + std::to_string(box.m);
    doc.input.lambda = lambda.to_string();
    doc.input.mu = mu.to_string();
    doc.input.nu = nu.to_string();
    if (c.method == "oracle") {
      doc.verdict = oracle_feasible(lambda, mu, nu, box);
    } else if (c.method == "horn") {
      doc.verdict = classical_horn_feasible(lambda, mu, nu, box, options);
    } else if (c.method == "symmetric") {
      doc.verdict = symmetric_horn_feasible(lambda, mu, nu, box, options);
    } else {
      throw UsageError("method " + c.method + " needs a staircase");
    }
  } else {
    const auto s = staircase_from(c);
    const auto lambda = StrictPartition::parse(c.lambda);
    const auto mu = StrictPartition::parse(c.mu);
    const auto nu = StrictPartition::parse(c.nu);
    doc.input.shape = "staircase " + std::to_string(s.n);
    doc.input.lambda = lambda.to_string();
    doc.input.mu = mu.to_string();
    doc.input.nu = nu.to_string();
    if (c.method == "oracle") {
      doc.verdict = oracle_feasible(lambda, mu, nu, s);
    } else if (c.method == "type-c") {
      doc.verdict = type_c_feasible(lambda, mu, nu, s, options);
    } else if (c.method == "type-d") {
      doc.verdict = type_d_feasible(lambda, mu, nu, s, options);
    } else {
      throw UsageError("method " + c.method + " needs a rectangle");
    }
  }

  if (c.format == Format::json) {
    emit(c, out, to_json(doc) + "\n");
  } else {
    std::ostringstream os;
    os << (doc.verdict.feasible ? "feasible" : "infeasible") << "\n";
    for (const auto& w : doc.verdict.witnesses) {
      os << "  " << to_string(w.kind);
      switch (w.kind) {
        case ConstraintKind::homogeneity:
          os << ": weight " << w.lhs << " != " << w.bound;
          break;
        case ConstraintKind::coefficient:
          os << ": coefficient is " << w.lhs;
          break;
        case ConstraintKind::inequality:
          os << " r=" << w.r;
          for (const auto& t : w.triples) os << " " << show(t);
          os << ": " << w.lhs << " > " << w.bound;
          break;
      }
      os << "\n";
    }
    emit(c, out, os.str());
  }
  return !doc.verdict.feasible && c.fail_on_infeasible ? kInfeasible : kOk;
}

int run_inequalities(const CliConfig& c, std::ostream& out) {
  const HornSystem system = parse_horn_system(c.kind);
  const bool rectangular =
      system == HornSystem::classical || system == HornSystem::symmetric;
  const Shape shape = rectangular ? Shape(rectangle_from(c))
                                  : Shape(staircase_from(c));
  const auto inequalities = list_inequalities(system, shape);
  if (c.format == Format::json) {
    emit(c, out, to_json(inequalities) + "\n");
    return kOk;
  }
  std::ostringstream os;
  if (c.format == Format::csv) {
    os << "system,r,triples,bound\n";
    for (const auto& q : inequalities) {
      os << to_string(q.system) << ',' << q.r << ",\"";
      for (std::size_t i = 0; i < q.triples.size(); ++i) {
        os << (i ? " " : "") << show(q.triples[i]);
      }
      os << "\"," << q.bound << "\n";
    }
  } else {
    os << inequalities.size() << " inequalities\n";
    for (const auto& q : inequalities) {
      os << "  r=" << q.r;
      for (const auto& t : q.triples) os << " " << show(t);
      os << "  <= " << q.bound << "\n";
    }
  }
  emit(c, out, os.str());
  return kOk;
}

int run_verify(const CliConfig& c, std::ostream& out) {
  SweepConfig config;
  config.threads = c.threads;
  config.weight_filter = c.weight_filter;
  config.max_triples = c.max_triples;
  config.max_staircase = c.max_staircase;
  config.source = parse_triple_source(c.source);

  SweepReport report;
  if (c.kind == "fixtures") {
    report = fixture_check();
  } else {
    std::vector<HornSystem> systems;
    for (const auto& name : c.systems) systems.push_back(parse_horn_system(name));
    if (c.kind == "rect") {
      if (systems.empty()) systems = {HornSystem::classical, HornSystem::symmetric};
      const auto box = rectangle_from(c);
      report = sweep_rectangle(box.n, box.m, systems, config);
    } else {
      if (systems.empty()) systems = {HornSystem::type_c, HornSystem::type_d};
      const auto s = staircase_from(c);
      report = sweep_staircase(s.n, systems, config);
    }
  }

  if (!c.csv_file.empty()) {
    std::ofstream file(c.csv_file);
    if (!file) throw UsageError("cannot open " + c.csv_file + " for writing");
    file << disagreements_csv(report);
  }
  if (c.format == Format::json) {
    emit(c, out, to_json(report) + "\n");
  } else if (c.format == Format::csv) {
    emit(c, out, disagreements_csv(report));
  } else {
    std::ostringstream os;
    os << report.shape << " [";
    for (std::size_t i = 0; i < report.systems.size(); ++i) {
      os << (i ? "," : "") << report.systems[i];
    }
    os << "]: " << report.total << " checked, " << report.agree << " agree, "
       << report.disagreements.size() << " disagreements ("
       << report.duration_ms << " ms)\n";
    for (const auto& d : report.disagreements) {
      os << "  " << d.detail << " at (" << d.triple[0] << " | " << d.triple[1]
         << " | " << d.triple[2] << "), oracle " << d.oracle << "\n";
    }
    emit(c, out, os.str());
  }
  return report.clean() ? kOk : kInconsistent;
}

void add_triple_flags(CLI::App* sub, CliConfig& c) {
  sub->add_option("--lambda", c.lambda, "first partition, e.g. 3,1");
  sub->add_option("--mu", c.mu, "second partition");
  sub->add_option("--nu", c.nu, "third partition");
}

void add_format_flag(CLI::App* sub, CliConfig& c, bool allow_csv) {
  std::map<std::string, Format> formats{{"human", Format::human},
                                        {"json", Format::json}};
  if (allow_csv) formats.emplace("csv", Format::csv);
  sub->add_option("--format", c.format, "output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  sub->add_option("--out", c.out_file, "write the output to this file");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CliConfig c;
  CLI::App app{"Horn-type feasibility tests for Littlewood-Richardson numbers",
               "hornlr"};
  app.require_subcommand(1);

  auto* coeff = app.add_subcommand("coeff", "structure constants from the oracle");
  coeff->add_option("kind", c.kind, "a | c | d | sym-a | sym-c | sym-d")
      ->required()
      ->check(CLI::IsMember({"a", "c", "d", "sym-a", "sym-c", "sym-d"}));
  add_triple_flags(coeff, c);
  coeff->add_option("--n", c.n, "rectangle rows or staircase side");
  coeff->add_option("--m", c.m, "rectangle columns");
  coeff->add_option("--variables", c.variables,
                    "variable count for a and c (default: length of lambda)");
  add_format_flag(coeff, c, false);

  auto* stat = app.add_subcommand("stat", "crossed-out box counts");
  stat->add_option("kind", c.kind, "rows | rows-cols | inner | outer")
      ->required()
      ->check(CLI::IsMember({"rows", "rows-cols", "inner", "outer"}));
  stat->add_option("--lambda", c.lambda, "the shape to cross out");
  stat->add_option("--alpha", c.alpha, "partition selecting rows or corners");
  stat->add_option("--alpha-prime", c.alpha_prime,
                   "partition selecting columns (rows-cols)");
  stat->add_option("--n", c.n, "rectangle rows or staircase side")->required();
  stat->add_option("--m", c.m, "rectangle columns");
  stat->add_option("--r", c.r, "number of crossed lines")->required();
  add_format_flag(stat, c, false);

  auto* feasible = app.add_subcommand("feasible", "decide feasibility of a triple");
  feasible->add_option("shape", c.kind, "rect | staircase")
      ->required()
      ->check(CLI::IsMember({"rect", "staircase"}));
  add_triple_flags(feasible, c);
  feasible->add_option("--n", c.n, "rectangle rows or staircase side")->required();
  feasible->add_option("--m", c.m, "rectangle columns");
  feasible->add_option("--method", c.method,
                       "oracle | horn | symmetric | type-c | type-d "
                       "(default: horn for rect, type-c for staircase)")
      ->check(CLI::IsMember({"oracle", "horn", "symmetric", "type-c", "type-d"}));
  feasible->add_option("--source", c.source,
                       "where indexing triples come from: oracle | recursive")
      ->check(CLI::IsMember({"oracle", "recursive"}));
  feasible->add_flag("--fail-fast", c.fail_fast, "stop at the first witness");
  feasible->add_flag("--fail-on-infeasible", c.fail_on_infeasible,
                     "exit with status 1 when the triple is infeasible");
  add_format_flag(feasible, c, false);

  auto* ineq = app.add_subcommand("inequalities", "list an inequality system");
  ineq->add_option("system", c.kind, "classical | symmetric | type-c | type-d")
      ->required()
      ->check(CLI::IsMember({"classical", "symmetric", "type-c", "type-d"}));
  ineq->add_option("--n", c.n, "rectangle rows or staircase side")->required();
  ineq->add_option("--m", c.m, "rectangle columns");
  add_format_flag(ineq, c, true);

  c.threads = 0;
  auto* verify = app.add_subcommand("verify", "exhaustive agreement sweeps");
  verify->add_option("target", c.kind, "rect | staircase | fixtures")
      ->required()
      ->check(CLI::IsMember({"rect", "staircase", "fixtures"}));
  verify->add_option("--n", c.n, "rectangle rows or staircase side");
  verify->add_option("--m", c.m, "rectangle columns");
  verify->add_option("--systems", c.systems,
                     "systems to compare (default: all for the shape)")
      ->delimiter(',');
  verify->add_option("--threads", c.threads,
                     "worker threads (default: $HORNLR_THREADS or 1)");
  verify->add_flag("--weight-filter", c.weight_filter,
                   "only visit triples meeting the weight condition");
  verify->add_option("--max-triples", c.max_triples,
                     "largest rectangle sweep allowed");
  verify->add_option("--max-staircase", c.max_staircase,
                     "largest staircase side allowed");
  verify->add_option("--source", c.source, "oracle | recursive")
      ->check(CLI::IsMember({"oracle", "recursive"}));
  verify->add_option("--csv", c.csv_file, "also write disagreements as CSV");
  add_format_flag(verify, c, true);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (c.threads < 1) c.threads = default_threads();
    if (coeff->parsed()) return run_coeff(c, out);
    if (stat->parsed()) return run_stat(c, out);
    if (feasible->parsed()) return run_feasible(c, out);
    if (ineq->parsed()) return run_inequalities(c, out);
    return run_verify(c, out);
  } catch (const InconsistencyError& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return kInconsistent;
  } catch (const OverflowError& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return kInconsistent;
  } catch (const ResourceLimit& e) {
    err << "error: " << e.what()
        << " (raise --max-triples / --max-staircase to allow it)\n";
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace hornlr::cli
