#include "hornlr/serialization.hpp"

#include <json.hpp>

namespace hornlr {

using Json = nlohmann::ordered_json;

std::string to_string(ConstraintKind kind) {
  switch (kind) {
    case ConstraintKind::homogeneity: return "homogeneity";
    case ConstraintKind::inequality: return "inequality";
    case ConstraintKind::coefficient: return "coefficient";
  }
  return "unknown";
}

ConstraintKind parse_constraint_kind(std::string_view name) {
  if (name == "homogeneity") return ConstraintKind::homogeneity;
  if (name == "inequality") return ConstraintKind::inequality;
  if (name == "coefficient") return ConstraintKind::coefficient;
  throw InvalidArgument("unknown constraint kind '" + std::string(name) + "'");
}

std::string to_string(TripleSource source) {
  return source == TripleSource::oracle ? "oracle" : "recursive";
}

TripleSource parse_triple_source(std::string_view name) {
  if (name == "oracle") return TripleSource::oracle;
  if (name == "recursive") return TripleSource::recursive;
  throw InvalidArgument("unknown triple source '" + std::string(name) + "'");
}

namespace {

Json triple_json(const Triple& t) {
  return Json::array({t[0].to_string(), t[1].to_string(), t[2].to_string()});
}

Triple triple_from(const Json& j) {
  if (!j.is_array() || j.size() != 3) {
    throw InvalidArgument("a triple must be an array of three partitions");
  }
  return {Partition::parse(j[0].get<std::string>()),
          Partition::parse(j[1].get<std::string>()),
          Partition::parse(j[2].get<std::string>())};
}

Json parse_document(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidArgument(std::string("malformed JSON: ") + e.what());
  }
}

template <class F>
auto with_schema_errors(F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("JSON does not match the schema: ") +
                          e.what());
  }
}

}  // namespace

std::string to_json(const VerdictDocument& doc) {
  Json witnesses = Json::array();
  for (const auto& w : doc.verdict.witnesses) {
    Json triples = Json::array();
    for (const auto& t : w.triples) triples.push_back(triple_json(t));
    witnesses.push_back(Json{{"kind", to_string(w.kind)},
                             {"r", w.r},
                             {"triples", triples},
                             {"lhs", w.lhs},
                             {"bound", w.bound}});
  }
  Json j{{"feasible", doc.verdict.feasible},
         {"witnesses", witnesses},
         {"input", Json{{"shape", doc.input.shape},
                        {"method", doc.input.method},
                        {"lambda", doc.input.lambda},
                        {"mu", doc.input.mu},
                        {"nu", doc.input.nu}}}};
  return j.dump(2);
}

VerdictDocument verdict_from_json(std::string_view text) {
  const Json j = parse_document(text);
  return with_schema_errors([&] {
    VerdictDocument doc;
    doc.verdict.feasible = j.at("feasible").get<bool>();
    for (const auto& w : j.at("witnesses")) {
      Witness witness;
      witness.kind = parse_constraint_kind(w.at("kind").get<std::string>());
      witness.r = w.at("r").get<int>();
      for (const auto& t : w.at("triples")) {
        witness.triples.push_back(triple_from(t));
      }
      witness.lhs = w.at("lhs").get<std::int64_t>();
      witness.bound = w.at("bound").get<std::int64_t>();
      doc.verdict.witnesses.push_back(std::move(witness));
    }
    if (doc.verdict.feasible != doc.verdict.witnesses.empty()) {
      throw InvalidArgument("verdict is feasible exactly when it has no witnesses");
    }
    const Json& in = j.at("input");
    doc.input = {in.at("shape").get<std::string>(),
                 in.at("method").get<std::string>(),
                 in.at("lambda").get<std::string>(),
                 in.at("mu").get<std::string>(),
                 in.at("nu").get<std::string>()};
    return doc;
  });
}

std::string to_json(const SweepReport& report) {
  Json disagreements = Json::array();
  for (const auto& d : report.disagreements) {
    Json verdicts = Json::object();
    for (const auto& [name, v] : d.verdicts) verdicts[name] = v;
    disagreements.push_back(Json{{"triple", d.triple},
                                 {"verdicts", verdicts},
                                 {"oracle", d.oracle},
                                 {"detail", d.detail}});
  }
  const SweepConfig& c = report.config;
  Json j{{"shape", report.shape},
         {"systems", report.systems},
         {"total", report.total},
         {"agree", report.agree},
         {"disagreements", disagreements},
         {"duration_ms", report.duration_ms},
         {"config", Json{{"threads", c.threads},
                         {"weight_filter", c.weight_filter},
                         {"max_triples", c.max_triples},
                         {"max_staircase", c.max_staircase},
                         {"source", to_string(c.source)}}}};
  return j.dump(2);
}

SweepReport report_from_json(std::string_view text) {
  const Json j = parse_document(text);
  return with_schema_errors([&] {
    SweepReport report;
    report.shape = j.at("shape").get<std::string>();
    report.systems = j.at("systems").get<std::vector<std::string>>();
    report.total = j.at("total").get<std::int64_t>();
    report.agree = j.at("agree").get<std::int64_t>();
    for (const auto& d : j.at("disagreements")) {
      Disagreement item;
      item.triple = d.at("triple").get<std::vector<std::string>>();
      for (const auto& [name, v] : d.at("verdicts").items()) {
        item.verdicts[name] = v.get<bool>();
      }
      item.oracle = d.at("oracle").get<std::int64_t>();
      item.detail = d.at("detail").get<std::string>();
      report.disagreements.push_back(std::move(item));
    }
    report.duration_ms = j.at("duration_ms").get<std::int64_t>();
    const Json& c = j.at("config");
    report.config.threads = c.at("threads").get<int>();
    report.config.weight_filter = c.at("weight_filter").get<bool>();
    report.config.max_triples = c.at("max_triples").get<std::int64_t>();
    report.config.max_staircase = c.at("max_staircase").get<int>();
    report.config.source = parse_triple_source(c.at("source").get<std::string>());
    return report;
  });
}

std::string to_json(const std::vector<InequalityDescriptor>& inequalities) {
  Json out = Json::array();
  for (const auto& q : inequalities) {
    Json triples = Json::array();
    for (const auto& t : q.triples) triples.push_back(triple_json(t));
    out.push_back(Json{{"system", to_string(q.system)},
                       {"r", q.r},
                       {"triples", triples},
                       {"bound", q.bound}});
  }
  return out.dump(2);
}

std::string disagreements_csv(const SweepReport& report) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
      if (ch == '"') out += '"';
      out += ch;
    }
    return out + "\"";
  };
  std::string out = "lambda,mu,nu,oracle,verdicts,detail\n";
  for (const auto& d : report.disagreements) {
    std::string verdicts;
    for (const auto& [name, v] : d.verdicts) {
      if (!verdicts.empty()) verdicts += ' ';
      verdicts += name + '=' + (v ? "feasible" : "infeasible");
    }
    for (std::size_t i = 0; i < 3; ++i) {
      out += quote(i < d.triple.size() ? d.triple[i] : "") + ',';
    }
    out += std::to_string(d.oracle) + ',' + quote(verdicts) + ',' +
           quote(d.detail) + '\n';
  }
  return out;
}

}  // namespace hornlr
