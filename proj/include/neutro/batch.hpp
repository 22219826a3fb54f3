#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "neutro/core.hpp"
#include "neutro/measures.hpp"
#include "neutro/norms.hpp"
#include "neutro/penta_def.hpp"
#include "neutro/penta_sat.hpp"
#include "neutro/tetra.hpp"

namespace neutro {

/// Input error tied to a 1-based line of the source stream.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& reason)
      : std::runtime_error("line " + std::to_string(line) + ": " + reason),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class DuplicateId : public ParseError {
 public:
  DuplicateId(std::size_t line, const std::string& id)
      : ParseError(line, "duplicate id \"" + id + "\"") {}
};

/// Binary logic operator invoked with a single operand.
class MissingOperand : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class InputFormat { Csv, Jsonl };

InputFormat parse_format(std::string_view text);

struct Record {
  std::optional<std::string> id;
  NeutrosophicTriple triple;
};

/// Ordered batch of records. Ids, where present, are unique.
struct RecordBatch {
  std::vector<Record> records;
};

RecordBatch read_batch(std::istream& in, InputFormat format);

/// Parses "T,I,F" as used for inline CLI operands.
NeutrosophicTriple parse_triple_text(std::string_view text);

struct FeatureEntry {
  std::optional<std::string> id;
  NeutrosophicTriple triple;
  ScalarReport scalars;
  TetraVector tetra;
  PentaSatVector penta_sat;
  PentaDefVector penta_def;
};

struct FeatureReport {
  DefinednessProfile profile = kDefaultProfile;
  std::string tnorm;
  std::vector<FeatureEntry> entries;
};

FeatureReport analyze(const RecordBatch& batch, DefinednessProfile profile,
                      const TNormFamily& family);

struct RankEntry {
  std::size_t index;  // position in the input batch
  std::optional<std::string> id;
  double score;
};

/// Sorts by score descending. Entries whose scores are within 1e-12 of an
/// adjacent entry form a tie group and keep their input order.
std::vector<RankEntry> rank_by_score(const RecordBatch& batch,
                                     DefinednessProfile profile);

struct LogicRequest {
  enum class Op { Union, Intersection, Negation };
  enum class Scheme { Tetra, PentaSat, PentaDef };

  Op op = Op::Union;
  Scheme scheme = Scheme::Tetra;
  TNormFamily family = TNormFamily::product();
  DefinednessProfile profile = kDefaultProfile;
  NeutrosophicTriple lhs;
  std::optional<NeutrosophicTriple> rhs;
};

LogicRequest::Op parse_logic_op(std::string_view text);
LogicRequest::Scheme parse_scheme(std::string_view text);

/// Decomposes the operands under the requested scheme and applies the
/// operator. Throws MissingOperand when a binary op lacks its rhs.
nlohmann::ordered_json run_logic(const LogicRequest& request);

nlohmann::ordered_json to_json(const FeatureReport& report);
nlohmann::ordered_json rank_json(const std::vector<RankEntry>& entries,
                                 DefinednessProfile profile);

/// Rounds to `digits` significant decimal digits so serialized output is
/// byte-stable across runs and platforms.
double round_significant(double value, int digits = 12);

}  // namespace neutro
