#pragma once

#include <json.hpp>

#include <map>
#include <optional>
#include <string>

#include "liecp/fixtures.hpp"

namespace liecp {

/// One algebra with its named forms and endomorphisms, as read from a file.
struct AlgebraBlock {
  LieAlgebra algebra{1};
  std::map<std::string, AltForm> one_forms;
  std::map<std::string, AltForm> two_forms;
  std::map<std::string, Endo> endos;
};

struct TaskSpec {
  std::string name;
  std::map<std::string, std::string> args;

  std::string arg_or(const std::string& key, const std::string& fallback) const {
    auto it = args.find(key);
    return it == args.end() ? fallback : it->second;
  }
};

/// Parsed input file: a main algebra block, an optional second block (for
/// products), and the task to run. Indices are 1-based in files and 0-based
/// in memory; all scalars are exact fraction strings.
struct InputDocument {
  AlgebraBlock main;
  std::optional<AlgebraBlock> right;
  TaskSpec task;
};

/// Parses and validates a document. Syntax errors surface as
/// nlohmann::json::parse_error (with byte position); semantic errors (bad
/// fraction, index out of range, antisymmetry or Jacobi failure) as
/// liecp::error naming the violated invariant.
InputDocument parse_document(const std::string& text);

nlohmann::json document_to_json(const InputDocument& doc);
nlohmann::json block_to_json(const AlgebraBlock& block);

nlohmann::json vec_to_json(const Vec& v);
nlohmann::json violation_to_json(const Violation& v);

/// A fixture rendered as a runnable document (role-appropriate default task).
InputDocument fixture_document(const Fixture& F);

}  // namespace liecp
