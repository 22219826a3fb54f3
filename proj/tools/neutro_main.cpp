#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

#include "neutro/batch.hpp"
#include "neutro/selfcheck.hpp"
#include "neutro/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;  // validation and parse errors
constexpr int kExitIo = 2;
constexpr int kExitSelfcheck = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

neutro::RecordBatch load_batch(const std::string& path, const std::string& format_name) {
  const neutro::InputFormat format = neutro::parse_format(format_name);
  if (path == "-") return neutro::read_batch(std::cin, format);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open input file: " + path);
  return neutro::read_batch(in, format);
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open output file: " + path);
  out << text;
  out.flush();
  if (!out) throw IoError("cannot write output file: " + path);
}

std::string render(const nlohmann::ordered_json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-valued representations of neutrosophic (T, I, F) triples"};
  app.set_version_flag("--version", std::string(neutro::kVersion));
  app.require_subcommand(1);

  struct {
    std::string input = "-";
    std::string format = "csv";
    std::string profile = "rational";
    std::string tnorm = "product";
    std::string out;
  } analyze_opt;
  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "Emit the full feature report for a batch of triples");
  analyze_cmd->add_option("--input", analyze_opt.input, "Input path, or - for stdin");
  analyze_cmd->add_option("--format", analyze_opt.format, "Input format: csv or jsonl");
  analyze_cmd->add_option("--profile", analyze_opt.profile,
                          "Definedness profile: rational | sine | quadratic | piecewise | sqrt");
  analyze_cmd->add_option("--tnorm", analyze_opt.tnorm,
                          "T-norm family: godel | product | lukasiewicz | frank:<s>");
  analyze_cmd->add_option("--out", analyze_opt.out, "Output path, defaults to stdout");

  struct {
    std::string input = "-";
    std::string format = "csv";
    std::string profile = "rational";
    std::string out;
  } rank_opt;
  CLI::App* rank_cmd =
      app.add_subcommand("rank", "Order a batch by neutrosophic score, descending");
  rank_cmd->add_option("--input", rank_opt.input, "Input path, or - for stdin");
  rank_cmd->add_option("--format", rank_opt.format, "Input format: csv or jsonl");
  rank_cmd->add_option("--profile", rank_opt.profile,
                       "Definedness profile: rational | sine | quadratic | piecewise | sqrt");
  rank_cmd->add_option("--out", rank_opt.out, "Output path, defaults to stdout");

  struct {
    std::string op;
    std::string scheme = "tetra";
    std::string tnorm = "product";
    std::string profile = "rational";
    std::string lhs;
    std::string rhs;
    std::string out;
  } logic_opt;
  CLI::App* logic_cmd =
      app.add_subcommand("logic", "Apply union, intersection or negation to triples");
  logic_cmd->add_option("--op", logic_opt.op, "union | intersection | negation")->required();
  logic_cmd->add_option("--scheme", logic_opt.scheme, "tetra | penta-sat | penta-def");
  logic_cmd->add_option("--tnorm", logic_opt.tnorm,
                        "T-norm family: godel | product | lukasiewicz | frank:<s>");
  logic_cmd->add_option("--profile", logic_opt.profile,
                        "Definedness profile used by the penta-def scheme");
  logic_cmd->add_option("--lhs", logic_opt.lhs, "Left operand as T,I,F")->required();
  logic_cmd->add_option("--rhs", logic_opt.rhs, "Right operand as T,I,F");
  logic_cmd->add_option("--out", logic_opt.out, "Output path, defaults to stdout");

  struct {
    std::size_t samples = 1000;
    std::uint64_t seed = 42;
    double tol = neutro::kPartitionTol;
    std::string out;
  } selfcheck_opt;
  CLI::App* selfcheck_cmd =
      app.add_subcommand("selfcheck", "Run the randomized invariant suites");
  selfcheck_cmd->add_option("--samples", selfcheck_opt.samples, "Samples per property")
      ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max())
                  .description("INT >= 1"));
  selfcheck_cmd->add_option("--seed", selfcheck_opt.seed, "Master RNG seed");
  selfcheck_cmd->add_option("--tol", selfcheck_opt.tol, "Partition-sum tolerance")
      ->check(CLI::PositiveNumber);
  selfcheck_cmd->add_option("--out", selfcheck_opt.out, "Output path, defaults to stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help or the error message
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze_cmd) {
      const neutro::RecordBatch batch = load_batch(analyze_opt.input, analyze_opt.format);
      const neutro::FeatureReport report =
          neutro::analyze(batch, neutro::parse_profile(analyze_opt.profile),
                          neutro::TNormFamily::parse(analyze_opt.tnorm));
      write_output(analyze_opt.out, render(neutro::to_json(report)));
    } else if (*rank_cmd) {
      const neutro::RecordBatch batch = load_batch(rank_opt.input, rank_opt.format);
      const neutro::DefinednessProfile profile = neutro::parse_profile(rank_opt.profile);
      write_output(rank_opt.out,
                   render(neutro::rank_json(neutro::rank_by_score(batch, profile), profile)));
    } else if (*logic_cmd) {
      neutro::LogicRequest request;
      request.op = neutro::parse_logic_op(logic_opt.op);
      request.scheme = neutro::parse_scheme(logic_opt.scheme);
      request.family = neutro::TNormFamily::parse(logic_opt.tnorm);
      request.profile = neutro::parse_profile(logic_opt.profile);
      request.lhs = neutro::parse_triple_text(logic_opt.lhs);
      if (!logic_opt.rhs.empty()) request.rhs = neutro::parse_triple_text(logic_opt.rhs);
      write_output(logic_opt.out, render(neutro::run_logic(request)));
    } else if (*selfcheck_cmd) {
      const neutro::SelfcheckOptions options{selfcheck_opt.samples, selfcheck_opt.seed,
                                             selfcheck_opt.tol};
      const neutro::SelfcheckSummary summary = neutro::run_selfcheck(options);
      std::ostringstream text;
      neutro::write_summary(text, summary, options);
      write_output(selfcheck_opt.out, text.str());
      if (!summary.all_passed()) return kExitSelfcheck;
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
