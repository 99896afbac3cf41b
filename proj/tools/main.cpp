// Command-line front end: classify and verify invariant contact pair
// structures described in JSON files, run the built-in examples, emit
// human-readable or machine-readable reports.
//
// Exit codes: 0 = all verdicts pass/as expected, 1 = a check evaluated
// cleanly to false, 2 = error (bad input, unknown name, ...).

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "liecp/runner.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw liecp::error("cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of invariant contact pair structures on Lie algebras"};

  std::string input, task, format = "text", fixture;
  bool run_all = false;
  app.add_option("--input", input, "input document (JSON)");
  app.add_option("--task", task, "override the task name from the document");
  app.add_option("--format", format, "output format: text|machine")
      ->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--fixture", fixture, "run the golden expectations of one built-in fixture");
  app.add_flag("--run-all", run_all, "run the golden expectations of every built-in fixture");

  CLI11_PARSE(app, argc, argv);

  const auto started = std::chrono::steady_clock::now();
  liecp::RunOutcome outcome;
  try {
    if (run_all) {
      outcome = liecp::run_all_fixtures();
    } else if (!fixture.empty()) {
      outcome = liecp::run_fixture_task(fixture);
    } else if (!input.empty()) {
      liecp::InputDocument doc = liecp::parse_document(read_file(input));
      if (!task.empty()) doc.task.name = task;
      outcome = liecp::run_task(doc);
    } else if (!task.empty() && task == "fixtures") {
      outcome = liecp::list_fixtures_outcome();
    } else {
      std::cerr << app.help() << std::endl;
      return 2;
    }
  } catch (const nlohmann::json::parse_error& e) {
    std::cerr << "syntax error: " << e.what() << std::endl;
    return 2;
  } catch (const liecp::error& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  }

  if (format == "machine") {
    std::cout << outcome.machine.dump(2) << "\n";
  } else {
    std::cout << outcome.text;
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started);
    std::cout << "elapsed_ms: " << elapsed.count() << "\n";
  }
  return outcome.exit_code;
}
