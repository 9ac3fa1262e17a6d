// tropmo: nondominated sets of discrete multicriteria problems via monomial tropical cones.
//
//   tropmo solve  problem.json [--format json|tsv] [--max-iter N] [--queue fifo|lifo|random:<seed>]
//                              [--no-translate] [--report]
//   tropmo verify problem.json [--expected result.json] [--queue ...] [--no-translate]
//   tropmo dual   ideal.json
//   tropmo bound  n d
//
// Exit codes: 0 success, 1 verification failure, 2 input error, 3 iteration cap.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "tropmo/bounds.hpp"
#include "tropmo/monomial_cone.hpp"
#include "tropmo/pareto_enum.hpp"
#include "tropmo/problem_io.hpp"
#include "tropmo/verify_oracle.hpp"

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

tropmo::SolveOptions parse_queue(const std::string& text, std::size_t max_iter) {
  tropmo::SolveOptions opts;
  if (text == "fifo") {
    opts.queue = tropmo::QueueDiscipline::kFifo;
  } else if (text == "lifo") {
    opts.queue = tropmo::QueueDiscipline::kLifo;
  } else if (text.rfind("random:", 0) == 0) {
    opts.queue = tropmo::QueueDiscipline::kRandom;
    try {
      std::size_t used = 0;
      opts.seed = std::stoull(text.substr(7), &used);
      if (used != text.size() - 7) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw InputError("bad --queue seed in '" + text + "'");
    }
  } else {
    throw InputError("--queue must be fifo, lifo or random:<seed>");
  }
  if (max_iter > 0) opts.max_iterations = max_iter;
  return opts;
}

tropmo::ProblemDocument load_solvable(const std::string& path) {
  auto doc = tropmo::load_problem(path);
  if (doc.kind == tropmo::ProblemKind::kIdeal) throw InputError("an ideal file needs the 'dual' subcommand");
  return doc;
}

bool parse_count(const std::string& text, std::int64_t& out) {
  if (text.empty()) return false;
  std::size_t used = 0;
  try {
    out = std::stoll(text, &used);
  } catch (const std::exception&) {
    return false;
  }
  return used == text.size() && out >= 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nondominated sets of discrete multicriteria problems via monomial tropical cones"};
  app.require_subcommand(1);

  std::string problem_path;
  std::string format = "json";
  std::string queue = "fifo";
  std::size_t max_iter = 0;
  bool no_translate = false;
  bool report = false;
  std::string expected_path;
  std::string bound_n;
  std::string bound_d;

  auto* solve_cmd = app.add_subcommand("solve", "Compute the nondominated set and the local upper bounds");
  solve_cmd->add_option("problem", problem_path, "Problem file (explicit or knapsack01)")->required();
  solve_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
  solve_cmd->add_option("--max-iter", max_iter, "Iteration cap (default derived from the outcome count)");
  solve_cmd->add_option("--queue", queue, "Pending-apex discipline: fifo, lifo or random:<seed>");
  solve_cmd->add_flag("--no-translate", no_translate, "Ignore the translation vector of a knapsack file");
  solve_cmd->add_flag("--report", report, "Print a run summary to stderr");

  auto* verify_cmd = app.add_subcommand("verify", "Cross-check the solver against brute-force enumeration");
  verify_cmd->add_option("problem", problem_path, "Problem file (explicit or knapsack01)")->required();
  verify_cmd->add_option("--expected", expected_path, "Result document the solver output must match");
  verify_cmd->add_option("--max-iter", max_iter, "Iteration cap");
  verify_cmd->add_option("--queue", queue, "Pending-apex discipline: fifo, lifo or random:<seed>");
  verify_cmd->add_flag("--no-translate", no_translate, "Ignore the translation vector of a knapsack file");

  auto* dual_cmd = app.add_subcommand("dual", "Irreducible components of a monomial ideal");
  dual_cmd->add_option("problem", problem_path, "Ideal file")->required();

  auto* bound_cmd = app.add_subcommand("bound", "Print U(n+d, d)");
  bound_cmd->add_option("n", bound_n, "Number of nondominated points")->required();
  bound_cmd->add_option("d", bound_d, "Number of objectives")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*bound_cmd) {
      std::int64_t n = 0;
      std::int64_t d = 0;
      if (!parse_count(bound_n, n) || !parse_count(bound_d, d)) {
        throw InputError("bound: n and d must be nonnegative integers");
      }
      std::cout << tropmo::upper_bound(n + d, d) << '\n';
      return 0;
    }

    if (*dual_cmd) {
      const auto doc = tropmo::load_problem(problem_path);
      if (doc.kind != tropmo::ProblemKind::kIdeal) throw InputError("dual needs a file of kind \"ideal\"");
      if (doc.generators.empty()) throw InputError("zero ideal has no irreducible decomposition here");
      std::cout << tropmo::apices_to_json(tropmo::irreducible_components(doc.generators)).dump() << '\n';
      return 0;
    }

    const auto opts = parse_queue(queue, max_iter);
    const auto doc = load_solvable(problem_path);
    const bool translate = !no_translate;

    if (*solve_cmd) {
      const auto oracle = tropmo::make_oracle(doc, translate);
      const auto result = tropmo::solve(*oracle, opts);
      if (format == "tsv") {
        std::cout << tropmo::result_to_tsv(result);
      } else {
        std::cout << tropmo::result_to_json(result, tropmo::applied_translation(doc, translate)).dump() << '\n';
      }
      if (report) {
        std::cerr << tropmo::run_report(result.stats, doc.d);
        if (result.stats.n > 0) std::cerr << tropmo::check_run(result.stats, doc.d).to_string() << '\n';
      }
      return 0;
    }

    // verify
    const tropmo::OutcomeCloud cloud(doc.d, tropmo::materialize_outcomes(doc, translate));
    const auto verdict = tropmo::cross_check(cloud, opts);
    std::cout << verdict.to_string();
    bool pass = verdict.pass;
    if (!expected_path.empty()) {
      std::ifstream in(expected_path);
      if (!in) throw InputError("cannot open " + expected_path);
      nlohmann::json expected_json;
      try {
        expected_json = nlohmann::json::parse(in);
      } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("invalid expected-output JSON: ") + e.what());
      }
      const auto expected = tropmo::result_from_json(expected_json);
      const auto actual = tropmo::to_document(verdict.result);
      if (expected == actual) {
        std::cout << "expected output: match\n";
      } else {
        pass = false;
        std::cout << "expected output: MISMATCH\n"
                  << "  expected: " << expected_json.dump() << '\n'
                  << "  actual:   "
                  << tropmo::result_to_json(verdict.result, tropmo::applied_translation(doc, translate)).dump() << '\n';
      }
    }
    return pass ? 0 : kExitVerifyFailed;
  } catch (const tropmo::IterationCapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const tropmo::ParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  }
}
