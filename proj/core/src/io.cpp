#include "liecp/io.hpp"

#include <sstream>

namespace liecp {

using nlohmann::json;

namespace {

int parse_index(const json& j, int dim, const char* what) {
  if (!j.is_number_integer()) throw error(std::string("expected integer ") + what);
  const int v = j.get<int>();
  if (v < 1 || v > dim)
    throw error(std::string(what) + " " + std::to_string(v) + " out of range 1.." +
                std::to_string(dim));
  return v - 1;
}

Rational parse_fraction(const json& j, const char* where) {
  if (!j.is_string()) throw error(std::string("expected fraction string in ") + where);
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const error& e) {
    throw error(std::string(where) + ": " + e.what());
  }
}

AltForm parse_one_form(const json& j, int dim, const std::string& name) {
  AltForm f(dim, 1);
  if (!j.is_object()) throw error("one_forms." + name + ": expected index->fraction object");
  for (const auto& [key, val] : j.items()) {
    int idx;
    try {
      idx = std::stoi(key);
    } catch (...) {
      throw error("one_forms." + name + ": bad index '" + key + "'");
    }
    if (idx < 1 || idx > dim) throw error("one_forms." + name + ": index out of range");
    f.add_term({idx - 1}, parse_fraction(val, ("one_forms." + name).c_str()));
  }
  return f;
}

AltForm parse_two_form(const json& j, int dim, const std::string& name) {
  AltForm f(dim, 2);
  if (!j.is_object()) throw error("two_forms." + name + ": expected \"i,j\"->fraction object");
  for (const auto& [key, val] : j.items()) {
    const auto comma = key.find(',');
    if (comma == std::string::npos)
      throw error("two_forms." + name + ": key '" + key + "' is not \"i,j\"");
    int i, jj;
    try {
      i = std::stoi(key.substr(0, comma));
      jj = std::stoi(key.substr(comma + 1));
    } catch (...) {
      throw error("two_forms." + name + ": bad pair '" + key + "'");
    }
    if (i < 1 || i > dim || jj < 1 || jj > dim || i >= jj)
      throw error("two_forms." + name + ": pair '" + key + "' must satisfy 1 <= i < j <= dim");
    f.add_term({i - 1, jj - 1}, parse_fraction(val, ("two_forms." + name).c_str()));
  }
  return f;
}

Endo parse_endo(const json& j, int dim, const std::string& name) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw error("endomorphisms." + name + ": expected " + std::to_string(dim) + " rows");
  Endo m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    const json& row = j[r];
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      throw error("endomorphisms." + name + ": row " + std::to_string(r + 1) + " has wrong size");
    for (int c = 0; c < dim; ++c)
      m.at(r, c) = parse_fraction(row[c], ("endomorphisms." + name).c_str());
  }
  return m;
}

AlgebraBlock parse_block(const json& j) {
  AlgebraBlock block;
  if (!j.contains("dim")) throw error("missing 'dim'");
  if (!j.at("dim").is_number_integer() || j.at("dim").get<int>() < 1)
    throw error("'dim' must be a positive integer");
  const int dim = j.at("dim").get<int>();

  std::vector<StructureEq> eqs;
  if (j.contains("structure")) {
    if (!j.at("structure").is_array()) throw error("'structure' must be an array");
    for (const json& entry : j.at("structure")) {
      StructureEq eq;
      eq.target = parse_index(entry.at("target"), dim, "structure target");
      for (const json& term : entry.at("terms")) {
        StructureTerm t;
        t.i = parse_index(term.at("i"), dim, "structure term index i");
        t.j = parse_index(term.at("j"), dim, "structure term index j");
        if (t.i >= t.j)
          throw error("structure term: indices must satisfy i < j (antisymmetry convention)");
        t.coeff = parse_fraction(term.at("c"), "structure term");
        eq.terms.push_back(std::move(t));
      }
      eqs.push_back(std::move(eq));
    }
  }
  block.algebra = LieAlgebra::from_structure_equations(dim, eqs);

  const VerificationReport jac = jacobi_check(block.algebra);
  if (!jac) throw error("structure equations violate the Jacobi identity: " + jac.summary());

  // Round-trip: the equations must be reproduced by the exterior derivative
  // of the basis covectors.
  for (const auto& eq : eqs) {
    AltForm stated(dim, 2);
    for (const auto& t : eq.terms) stated.add_term({t.i, t.j}, t.coeff);
    if (!(exterior_derivative(block.algebra, AltForm::covector(dim, eq.target)) - stated).is_zero())
      throw error("structure equations do not round-trip (duplicate or conflicting terms?)");
  }

  if (j.contains("one_forms"))
    for (const auto& [name, val] : j.at("one_forms").items())
      block.one_forms.emplace(name, parse_one_form(val, dim, name));
  if (j.contains("two_forms"))
    for (const auto& [name, val] : j.at("two_forms").items())
      block.two_forms.emplace(name, parse_two_form(val, dim, name));
  if (j.contains("endomorphisms"))
    for (const auto& [name, val] : j.at("endomorphisms").items())
      block.endos.emplace(name, parse_endo(val, dim, name));
  return block;
}

json block_to_json_impl(const AlgebraBlock& block) {
  json j;
  const int dim = block.algebra.dim();
  j["dim"] = dim;
  json structure = json::array();
  for (const auto& eq : block.algebra.structure_equations()) {
    json entry;
    entry["target"] = eq.target + 1;
    json terms = json::array();
    for (const auto& t : eq.terms)
      terms.push_back({{"i", t.i + 1}, {"j", t.j + 1}, {"c", t.coeff.str()}});
    entry["terms"] = std::move(terms);
    structure.push_back(std::move(entry));
  }
  j["structure"] = std::move(structure);

  if (!block.one_forms.empty()) {
    json forms;
    for (const auto& [name, f] : block.one_forms) {
      json terms;
      for (const auto& [idx, c] : f.terms()) terms[std::to_string(idx[0] + 1)] = c.str();
      forms[name] = std::move(terms);
    }
    j["one_forms"] = std::move(forms);
  }
  if (!block.two_forms.empty()) {
    json forms;
    for (const auto& [name, f] : block.two_forms) {
      json terms;
      for (const auto& [idx, c] : f.terms())
        terms[std::to_string(idx[0] + 1) + "," + std::to_string(idx[1] + 1)] = c.str();
      forms[name] = std::move(terms);
    }
    j["two_forms"] = std::move(forms);
  }
  if (!block.endos.empty()) {
    json endos;
    for (const auto& [name, m] : block.endos) {
      json rows = json::array();
      for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
        rows.push_back(std::move(row));
      }
      endos[name] = std::move(rows);
    }
    j["endomorphisms"] = std::move(endos);
  }
  return j;
}

}  // namespace

InputDocument parse_document(const std::string& text) {
  const json j = json::parse(text);  // may throw json::parse_error with position
  if (!j.is_object()) throw error("document: top level must be an object");

  InputDocument doc;
  doc.main = parse_block(j);
  if (j.contains("right")) doc.right = parse_block(j.at("right"));

  if (!j.contains("task")) throw error("document: missing 'task' block");
  const json& t = j.at("task");
  if (!t.contains("name") || !t.at("name").is_string())
    throw error("task: missing string 'name'");
  doc.task.name = t.at("name").get<std::string>();
  for (const auto& [key, val] : t.items()) {
    if (key == "name") continue;
    if (!val.is_string()) throw error("task." + key + ": arguments must be strings");
    doc.task.args[key] = val.get<std::string>();
  }
  return doc;
}

nlohmann::json block_to_json(const AlgebraBlock& block) { return block_to_json_impl(block); }

nlohmann::json document_to_json(const InputDocument& doc) {
  json j = block_to_json_impl(doc.main);
  if (doc.right) j["right"] = block_to_json_impl(*doc.right);
  json task;
  task["name"] = doc.task.name;
  for (const auto& [k, v] : doc.task.args) task[k] = v;
  j["task"] = std::move(task);
  return j;
}

nlohmann::json vec_to_json(const Vec& v) {
  json a = json::array();
  for (const auto& c : v) a.push_back(c.str());
  return a;
}

nlohmann::json violation_to_json(const Violation& v) {
  json j;
  j["identity"] = v.identity;
  j["basis"] = v.basis;
  j["residual"] = vec_to_json(v.residual);
  return j;
}

InputDocument fixture_document(const Fixture& F) {
  InputDocument doc;
  doc.main.algebra = F.algebra;
  doc.main.one_forms = F.one_forms;
  doc.main.two_forms = F.two_forms;
  doc.main.endos = F.endos;

  if (F.one_forms.count("alpha1")) {
    doc.task.name = "normality";
    doc.task.args = {{"kind", "contact-pair"},
                     {"alpha1", "alpha1"},
                     {"alpha2", "alpha2"},
                     {"phi", "phi"}};
  } else if (F.one_forms.count("beta")) {
    doc.task.name = "extend";
    doc.task.args = {{"beta", "beta"}, {"eta", "eta"}, {"psi", "psi"}};
  } else {
    doc.task.name = "normality";
    doc.task.args = {{"kind", "almost-contact"}, {"alpha", "alpha"}, {"phi", "phi"}};
  }
  return doc;
}

}  // namespace liecp
