// charp: exact prime-characteristic commutative algebra checks from a small
// session DSL. See README.md for the grammar and the report schema.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "charp/errors.hpp"
#include "charp/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"charp - Frobenius and tight-closure checks in exact arithmetic"};

  std::string input_file;
  std::string json_out;
  std::string order = "grevlex";
  unsigned emax = 4;
  unsigned window = 2;
  unsigned probe_degree = 4;
  std::uint64_t seed = 0;
  bool parallel = false;
  bool run_paper_examples = false;
  bool quiet = false;

  app.add_option("--input", input_file, "session file to run");
  app.add_option("--emax", emax, "largest Frobenius exponent explored")
      ->capture_default_str();
  app.add_option("--window", window,
                 "stability window for closure chains")
      ->capture_default_str();
  app.add_option("--order", order, "monomial order for declared rings")
      ->check(CLI::IsMember({"grevlex", "lex"}))
      ->capture_default_str();
  app.add_option("--json-out", json_out, "write the JSON report to a file");
  app.add_option("--seed", seed, "seed echoed into the report")
      ->capture_default_str();
  app.add_option("--probe-degree", probe_degree,
                 "degree bound for closure probes")
      ->capture_default_str();
  app.add_flag("--parallel", parallel, "run independent checks concurrently");
  app.add_flag("--paper-examples", run_paper_examples,
               "run the built-in example scenarios");
  app.add_flag("--quiet", quiet, "suppress the per-check summary");

  CLI11_PARSE(app, argc, argv);

  charp::RunConfig config;
  config.emax = emax;
  config.window = window;
  config.order = order;
  config.seed = seed;
  config.probe_degree = probe_degree;
  config.parallel = parallel;

  try {
    config.budget = charp::ResourceBudget::from_env();
  } catch (const charp::Error& e) {
    std::cerr << "error: CHARP_RESOURCE_BUDGET: " << e.what() << "\n";
    return 2;
  }

  try {
    charp::Report report;
    if (run_paper_examples) {
      if (!input_file.empty()) {
        std::cerr << "error: --paper-examples and --input are exclusive\n";
        return 2;
      }
      report = charp::paper_examples(config);
    } else if (!input_file.empty()) {
      std::ifstream in(input_file);
      if (!in) {
        std::cerr << "error: cannot read " << input_file << "\n";
        return 2;
      }
      std::string text((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
      report = charp::run_session_text(text, config);
    } else {
      std::cerr << "error: pass --input FILE or --paper-examples\n";
      return 2;
    }

    if (!json_out.empty()) {
      std::ofstream out(json_out, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot write " << json_out << "\n";
        return 2;
      }
      out << report.to_json().dump(2) << "\n";
    }
    if (!quiet) std::cout << report.summary_text();
    return report.exit_code();
  } catch (const charp::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const charp::ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const charp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
