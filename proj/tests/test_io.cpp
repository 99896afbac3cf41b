#include <doctest.h>

#include <fstream>
#include <sstream>

#include "liecp/runner.hpp"

using namespace liecp;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string reference_path(const std::string& name) {
  return std::string(LIECP_REFERENCE_DIR) + "/" + name + ".json";
}

}  // namespace

TEST_CASE("reference files parse back to the built-in fixtures") {
  for (const auto& name : fixture_names()) {
    const InputDocument doc = parse_document(slurp(reference_path(name)));
    const Fixture f = load_fixture(name);
    CHECK(doc.main.algebra == f.algebra);
    for (const auto& [fname, form] : f.one_forms) CHECK(doc.main.one_forms.at(fname) == form);
    for (const auto& [fname, form] : f.two_forms) CHECK(doc.main.two_forms.at(fname) == form);
    for (const auto& [ename, endo] : f.endos) CHECK(doc.main.endos.at(ename) == endo);
  }
}

TEST_CASE("document round-trip through json") {
  const InputDocument doc = fixture_document(load_fixture("solvable6"));
  const InputDocument back = parse_document(document_to_json(doc).dump());
  CHECK(back.main.algebra == doc.main.algebra);
  CHECK(back.main.one_forms == doc.main.one_forms);
  CHECK(back.main.endos == doc.main.endos);
  CHECK(back.task.name == doc.task.name);
  CHECK(back.task.args == doc.task.args);
}

TEST_CASE("syntax errors carry position information") {
  CHECK_THROWS_AS(parse_document("{ not json"), json::parse_error);
}

TEST_CASE("semantic validation") {
  // zero denominator
  CHECK_THROWS_WITH_AS(
      parse_document(R"({"dim":3,"structure":[{"target":3,"terms":[{"i":1,"j":2,"c":"1/0"}]}],
                         "task":{"name":"classify"}})"),
      doctest::Contains("zero denominator"), error);

  // antisymmetry convention: i < j required
  CHECK_THROWS_WITH_AS(
      parse_document(R"({"dim":3,"structure":[{"target":3,"terms":[{"i":2,"j":1,"c":"1"}]}],
                         "task":{"name":"classify"}})"),
      doctest::Contains("i < j"), error);

  // index out of range
  CHECK_THROWS_WITH_AS(
      parse_document(R"({"dim":3,"structure":[{"target":9,"terms":[{"i":1,"j":2,"c":"1"}]}],
                         "task":{"name":"classify"}})"),
      doctest::Contains("out of range"), error);

  // Jacobi violation: [e1,e2] = e1, [e1,e3] = e2
  CHECK_THROWS_WITH_AS(
      parse_document(R"({"dim":3,
        "structure":[{"target":1,"terms":[{"i":1,"j":2,"c":"-1"}]},
                     {"target":2,"terms":[{"i":1,"j":3,"c":"-1"}]}],
        "task":{"name":"classify"}})"),
      doctest::Contains("Jacobi"), error);

  // missing task
  CHECK_THROWS_WITH_AS(parse_document(R"({"dim":2})"), doctest::Contains("task"), error);
}

TEST_CASE("run_task: normality on the solvable reference") {
  const InputDocument doc = parse_document(slurp(reference_path("solvable6")));
  const RunOutcome out = run_task(doc);
  CHECK(out.exit_code == 1);  // verified-false: the pair is not normal
  CHECK(out.machine.at("verdicts").at("pair_normal") == false);
  CHECK(out.machine.at("verdicts").at("eq9") == true);
  CHECK(out.machine.at("verdicts").at("eq10") == true);
  CHECK(out.machine.at("verdicts").at("eq11") == false);
  CHECK(out.machine.at("verdicts").at("type") == "(1,1)");
  CHECK(out.machine.at("witnesses").contains("eq11"));
  CHECK(out.machine.at("results").at("Z1") == json::array({"0", "1", "0", "0", "0", "0"}));
}

TEST_CASE("run_task: almost-contact normality on the Heisenberg reference") {
  const RunOutcome out = run_task(parse_document(slurp(reference_path("heisenberg3"))));
  CHECK(out.exit_code == 0);
  CHECK(out.machine.at("verdicts").at("normal") == true);
}

TEST_CASE("run_task: extend emits a document that re-runs cleanly") {
  const RunOutcome out = run_task(parse_document(slurp(reference_path("flat3"))));
  CHECK(out.exit_code == 0);
  CHECK(out.machine.at("verdicts").at("extension_type") == "(1,0)");
  REQUIRE(out.machine.contains("document"));

  // closure: the emitted document parses and verifies without modification
  const InputDocument next = parse_document(out.machine.at("document").dump());
  const RunOutcome second = run_task(next);
  CHECK(second.exit_code == 0);
  CHECK(second.machine.at("verdicts").at("pair_normal") == true);
  CHECK(second.machine.at("verdicts").at("type") == "(1,0)");
}

TEST_CASE("run_task: product of two factor blocks") {
  json doc;
  doc["dim"] = 3;
  doc["structure"] = json::array(
      {{{"target", 3}, {"terms", json::array({{{"i", 1}, {"j", 2}, {"c", "-1"}}})}}});
  doc["one_forms"] = {{"alpha", {{"3", "1"}}}};
  doc["endomorphisms"] = {{"phi", json::array({json::array({"0", "1", "0"}),
                                               json::array({"-1", "0", "0"}),
                                               json::array({"0", "0", "0"})})}};
  json right = doc;
  right.erase("task");
  doc["right"] = right;
  doc["task"] = {{"name", "product"},
                 {"alpha1", "alpha"}, {"phi1", "phi"},
                 {"alpha2", "alpha"}, {"phi2", "phi"}};
  const RunOutcome out = run_task(parse_document(doc.dump()));
  CHECK(out.exit_code == 0);
  CHECK(out.machine.at("verdicts").at("type") == "(1,1)");
  CHECK(out.machine.at("verdicts").at("pair_normal") == true);

  const InputDocument emitted = parse_document(out.machine.at("document").dump());
  CHECK(run_task(emitted).exit_code == 0);
}

TEST_CASE("run_task: classify failure is verified-false, not an error") {
  json doc;
  doc["dim"] = 4;
  doc["one_forms"] = {{"alpha1", {{"1", "1"}}}, {"alpha2", {{"2", "1"}}}};
  doc["task"] = {{"name", "classify"}, {"kind", "contact-pair"}};
  const RunOutcome out = run_task(parse_document(doc.dump()));
  CHECK(out.exit_code == 1);
  CHECK(out.machine.at("verdicts").at("classified") == false);
}

TEST_CASE("run_task: unknown names are errors") {
  json doc;
  doc["dim"] = 2;
  doc["task"] = {{"name", "classify"}, {"alpha1", "nope"}, {"alpha2", "nope"}};
  const RunOutcome out = run_task(parse_document(doc.dump()));
  CHECK(out.exit_code == 2);
  CHECK(out.machine.contains("error"));
}

TEST_CASE("machine reports are byte-identical across repeated runs in process") {
  for (const auto& name : fixture_names()) {
    const std::string text = slurp(reference_path(name));
    const std::string a = run_task(parse_document(text)).machine.dump(2);
    const std::string b = run_task(parse_document(text)).machine.dump(2);
    CHECK(a == b);
  }
}

TEST_CASE("fixture tasks") {
  CHECK(run_all_fixtures().exit_code == 0);
  CHECK(run_fixture_task("solvable6").exit_code == 0);
  CHECK(run_fixture_task("nope").exit_code == 2);
  const RunOutcome listing = list_fixtures_outcome();
  CHECK(listing.exit_code == 0);
  CHECK(listing.machine.at("verdicts").at("available").size() == 6);
}
