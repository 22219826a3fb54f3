#include "neutro/batch.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <unordered_set>
#include <utility>

#include "neutro/version.hpp"

namespace neutro {

namespace {

using nlohmann::ordered_json;

std::string_view trim(std::string_view s) {
  const auto from = s.find_first_not_of(" \t\r");
  if (from == std::string_view::npos) return {};
  const auto to = s.find_last_not_of(" \t\r");
  return s.substr(from, to - from + 1);
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(trim(line.substr(start)));
      return fields;
    }
    fields.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
}

double parse_number(std::string_view field, std::size_t line, std::string_view column) {
  double value = 0.0;
  const char* first = field.data();
  const char* last = first + field.size();
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc{} || res.ptr != last || field.empty()) {
    throw ParseError(line, "column " + std::string(column) + ": cannot parse \"" +
                               std::string(field) + "\" as a number");
  }
  return value;
}

NeutrosophicTriple checked_triple(double t, double i, double f, std::size_t line) {
  try {
    return make_triple(t, i, f);
  } catch (const OutOfRange& e) {
    throw ParseError(line, e.what());
  }
}

RecordBatch read_csv(std::istream& in) {
  RecordBatch batch;
  std::unordered_set<std::string> seen_ids;
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  bool with_id = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    const auto fields = split_fields(line);
    if (!have_header) {
      std::vector<std::string> head;
      head.reserve(fields.size());
      for (auto f : fields) head.push_back(lower(f));
      if (head == std::vector<std::string>{"t", "i", "f"}) {
        with_id = false;
      } else if (head == std::vector<std::string>{"id", "t", "i", "f"}) {
        with_id = true;
      } else {
        throw ParseError(lineno, "expected header \"T,I,F\" or \"id,T,I,F\"");
      }
      have_header = true;
      continue;
    }
    const std::size_t expected = with_id ? 4 : 3;
    if (fields.size() != expected) {
      throw ParseError(lineno, "expected " + std::to_string(expected) +
                                   " fields, got " + std::to_string(fields.size()));
    }
    Record rec;
    std::size_t base = 0;
    if (with_id) {
      if (!fields[0].empty()) {
        rec.id = std::string(fields[0]);
        if (!seen_ids.insert(*rec.id).second) throw DuplicateId(lineno, *rec.id);
      }
      base = 1;
    }
    const double t = parse_number(fields[base], lineno, "T");
    const double i = parse_number(fields[base + 1], lineno, "I");
    const double f = parse_number(fields[base + 2], lineno, "F");
    rec.triple = checked_triple(t, i, f, lineno);
    batch.records.push_back(std::move(rec));
  }
  if (!have_header) throw ParseError(lineno == 0 ? 1 : lineno, "missing header row");
  return batch;
}

double json_number(const nlohmann::json& obj, const char* key, std::size_t line) {
  const auto it = obj.find(key);
  if (it == obj.end() || !it->is_number()) {
    throw ParseError(line, std::string("missing numeric field \"") + key + "\"");
  }
  return it->get<double>();
}

RecordBatch read_jsonl(std::istream& in) {
  RecordBatch batch;
  std::unordered_set<std::string> seen_ids;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(lineno, std::string("invalid JSON: ") + e.what());
    }
    if (!obj.is_object()) throw ParseError(lineno, "expected a JSON object");
    Record rec;
    if (const auto it = obj.find("id"); it != obj.end()) {
      if (!it->is_string()) throw ParseError(lineno, "field \"id\" must be a string");
      rec.id = it->get<std::string>();
      if (!seen_ids.insert(*rec.id).second) throw DuplicateId(lineno, *rec.id);
    }
    const double t = json_number(obj, "t", lineno);
    const double i = json_number(obj, "i", lineno);
    const double f = json_number(obj, "f", lineno);
    rec.triple = checked_triple(t, i, f, lineno);
    batch.records.push_back(std::move(rec));
  }
  return batch;
}

double r12(double v) { return round_significant(v, 12); }

ordered_json triple_json(const NeutrosophicTriple& q) {
  return {{"t", r12(q.t)}, {"i", r12(q.i)}, {"f", r12(q.f)}};
}

ordered_json vector_json(const TetraVector& v) {
  return {{"truth", r12(v.truth)},
          {"neutrality", r12(v.neutrality)},
          {"ignorance", r12(v.ignorance)},
          {"falsity", r12(v.falsity)},
          {"indeterminacy", r12(indeterminacy4(v))}};
}

ordered_json vector_json(const PentaSatVector& v) {
  return {{"truth", r12(v.truth)},
          {"neutrality", r12(v.neutrality)},
          {"saturation", r12(v.saturation)},
          {"ignorance", r12(v.ignorance)},
          {"falsity", r12(v.falsity)},
          {"indeterminacy", r12(indeterminacy5s(v))}};
}

ordered_json vector_json(const PentaDefVector& v) {
  return {{"truth", r12(v.truth)},
          {"neutrality", r12(v.neutrality)},
          {"falsity", r12(v.falsity)},
          {"over_defined", r12(v.over_defined)},
          {"under_defined", r12(v.under_defined)},
          {"indeterminacy", r12(indeterminacy5d(v))}};
}

template <typename Vector, typename Negate, typename Union, typename Intersect>
ordered_json logic_json(const LogicRequest& request, Negate negate, Union unite,
                        Intersect intersect, Vector lhs,
                        const std::optional<Vector>& rhs) {
  ordered_json out;
  out["scheme"] = std::string(request.scheme == LogicRequest::Scheme::Tetra ? "tetra"
                              : request.scheme == LogicRequest::Scheme::PentaSat
                                  ? "penta-sat"
                                  : "penta-def");
  out["tnorm"] = request.family.name();
  out["op"] = request.op == LogicRequest::Op::Union          ? "union"
              : request.op == LogicRequest::Op::Intersection ? "intersection"
                                                             : "negation";
  out["lhs"] = vector_json(lhs);
  Vector result;
  switch (request.op) {
    case LogicRequest::Op::Negation:
      result = negate(lhs);
      break;
    case LogicRequest::Op::Union:
      result = unite(lhs, *rhs, request.family);
      break;
    case LogicRequest::Op::Intersection:
      result = intersect(lhs, *rhs, request.family);
      break;
  }
  if (rhs) out["rhs"] = vector_json(*rhs);
  out["result"] = vector_json(result);
  out["partition_sum"] = r12(result.sum());
  return out;
}

}  // namespace

InputFormat parse_format(std::string_view text) {
  const std::string name = lower(trim(text));
  if (name == "csv") return InputFormat::Csv;
  if (name == "jsonl") return InputFormat::Jsonl;
  throw InvalidParameter("unknown input format \"" + std::string(text) +
                         "\"; expected csv or jsonl");
}

RecordBatch read_batch(std::istream& in, InputFormat format) {
  return format == InputFormat::Csv ? read_csv(in) : read_jsonl(in);
}

NeutrosophicTriple parse_triple_text(std::string_view text) {
  const auto fields = split_fields(text);
  if (fields.size() != 3) {
    throw InvalidParameter("operand must be three comma-separated values \"T,I,F\"");
  }
  double v[3];
  for (int k = 0; k < 3; ++k) {
    const char* first = fields[k].data();
    const char* last = first + fields[k].size();
    const auto res = std::from_chars(first, last, v[k]);
    if (res.ec != std::errc{} || res.ptr != last || fields[k].empty()) {
      throw InvalidParameter("cannot parse \"" + std::string(fields[k]) +
                             "\" as a number");
    }
  }
  return make_triple(v[0], v[1], v[2]);
}

FeatureReport analyze(const RecordBatch& batch, DefinednessProfile profile,
                      const TNormFamily& family) {
  FeatureReport report;
  report.profile = profile;
  report.tnorm = family.name();
  report.entries.reserve(batch.records.size());
  for (const Record& rec : batch.records) {
    FeatureEntry entry;
    entry.id = rec.id;
    entry.triple = rec.triple;
    entry.scalars = scalar_report(rec.triple, profile);
    entry.tetra = decompose4(rec.triple);
    entry.penta_sat = decompose5s(rec.triple);
    entry.penta_def = decompose5d(rec.triple, profile);
    report.entries.push_back(std::move(entry));
  }
  return report;
}

std::vector<RankEntry> rank_by_score(const RecordBatch& batch,
                                     DefinednessProfile profile) {
  std::vector<RankEntry> entries;
  entries.reserve(batch.records.size());
  for (std::size_t k = 0; k < batch.records.size(); ++k) {
    entries.push_back({k, batch.records[k].id, score(batch.records[k].triple, profile)});
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const RankEntry& a, const RankEntry& b) { return a.score > b.score; });
  // Restore input order inside each run of near-equal scores. A tolerance
  // comparator is not a strict weak ordering, so ties are merged after the
  // exact sort instead of inside it.
  auto run_begin = entries.begin();
  while (run_begin != entries.end()) {
    auto run_end = run_begin + 1;
    while (run_end != entries.end() &&
           std::fabs(run_end->score - (run_end - 1)->score) <= kExactTol) {
      ++run_end;
    }
    std::sort(run_begin, run_end,
              [](const RankEntry& a, const RankEntry& b) { return a.index < b.index; });
    run_begin = run_end;
  }
  return entries;
}

LogicRequest::Op parse_logic_op(std::string_view text) {
  const std::string name = lower(trim(text));
  if (name == "union") return LogicRequest::Op::Union;
  if (name == "intersection") return LogicRequest::Op::Intersection;
  if (name == "negation") return LogicRequest::Op::Negation;
  throw InvalidParameter("unknown op \"" + std::string(text) +
                         "\"; expected union, intersection or negation");
}

LogicRequest::Scheme parse_scheme(std::string_view text) {
  const std::string name = lower(trim(text));
  if (name == "tetra") return LogicRequest::Scheme::Tetra;
  if (name == "penta-sat") return LogicRequest::Scheme::PentaSat;
  if (name == "penta-def") return LogicRequest::Scheme::PentaDef;
  throw InvalidParameter("unknown scheme \"" + std::string(text) +
                         "\"; expected tetra, penta-sat or penta-def");
}

nlohmann::ordered_json run_logic(const LogicRequest& request) {
  if (request.op != LogicRequest::Op::Negation && !request.rhs) {
    throw MissingOperand("binary op needs two operands; pass --rhs T,I,F");
  }
  switch (request.scheme) {
    case LogicRequest::Scheme::Tetra: {
      std::optional<TetraVector> rhs;
      if (request.rhs) rhs = decompose4(*request.rhs);
      return logic_json(request, negate4, union4, intersect4, decompose4(request.lhs),
                        rhs);
    }
    case LogicRequest::Scheme::PentaSat: {
      std::optional<PentaSatVector> rhs;
      if (request.rhs) rhs = decompose5s(*request.rhs);
      return logic_json(request, negate5s, union5s, intersect5s,
                        decompose5s(request.lhs), rhs);
    }
    case LogicRequest::Scheme::PentaDef: {
      std::optional<PentaDefVector> rhs;
      if (request.rhs) rhs = decompose5d(*request.rhs, request.profile);
      return logic_json(request, negate5d, union5d, intersect5d,
                        decompose5d(request.lhs, request.profile), rhs);
    }
  }
  throw InvalidParameter("unknown scheme");
}

nlohmann::ordered_json to_json(const FeatureReport& report) {
  ordered_json out;
  out["tool"] = std::string(kToolName);
  out["version"] = std::string(kVersion);
  out["profile"] = std::string(profile_name(report.profile));
  out["tnorm"] = report.tnorm;
  ordered_json records = ordered_json::array();
  for (const FeatureEntry& e : report.entries) {
    ordered_json rec;
    if (e.id) rec["id"] = *e.id;
    rec["triple"] = triple_json(e.triple);
    rec["net_truth"] = r12(e.scalars.net_truth);
    rec["mean"] = r12(e.scalars.mean);
    rec["definedness"] = r12(e.scalars.definedness);
    rec["score"] = r12(e.scalars.score);
    rec["entropy_czekanowski"] = r12(e.scalars.entropy_czekanowski);
    rec["entropy_ruzicka"] = r12(e.scalars.entropy_ruzicka);
    rec["tetra"] = vector_json(e.tetra);
    rec["penta_sat"] = vector_json(e.penta_sat);
    rec["penta_def"] = vector_json(e.penta_def);
    records.push_back(std::move(rec));
  }
  out["records"] = std::move(records);
  return out;
}

nlohmann::ordered_json rank_json(const std::vector<RankEntry>& entries,
                                 DefinednessProfile profile) {
  ordered_json out;
  out["tool"] = std::string(kToolName);
  out["version"] = std::string(kVersion);
  out["profile"] = std::string(profile_name(profile));
  ordered_json ranking = ordered_json::array();
  for (const RankEntry& e : entries) {
    ordered_json item;
    item["rank"] = ranking.size() + 1;
    item["index"] = e.index;
    if (e.id) item["id"] = *e.id;
    item["score"] = r12(e.score);
    ranking.push_back(std::move(item));
  }
  out["ranking"] = std::move(ranking);
  return out;
}

double round_significant(double value, int digits) {
  if (!std::isfinite(value) || value == 0.0) return value == 0.0 ? 0.0 : value;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return std::strtod(buf, nullptr);
}

}  // namespace neutro
