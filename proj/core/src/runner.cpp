#include "liecp/runner.hpp"

#include <sstream>

namespace liecp {

using nlohmann::json;

namespace {

const AltForm& need_one_form(const AlgebraBlock& b, const std::string& name) {
  auto it = b.one_forms.find(name);
  if (it == b.one_forms.end()) throw error("unknown 1-form '" + name + "'");
  return it->second;
}

const AltForm& need_two_form(const AlgebraBlock& b, const std::string& name) {
  auto it = b.two_forms.find(name);
  if (it == b.two_forms.end()) throw error("unknown 2-form '" + name + "'");
  return it->second;
}

const Endo& need_endo(const AlgebraBlock& b, const std::string& name) {
  auto it = b.endos.find(name);
  if (it == b.endos.end()) throw error("unknown endomorphism '" + name + "'");
  return it->second;
}

struct TaskResult {
  json verdicts = json::object();
  json witnesses = json::object();
  json results = json::object();
  std::optional<InputDocument> out_doc;
  bool pass = true;
};

std::string type_str(int h, int k) {
  return "(" + std::to_string(h) + "," + std::to_string(k) + ")";
}

void add_witnesses(TaskResult& r, const std::map<std::string, Violation>& ws) {
  for (const auto& [flag, v] : ws) r.witnesses[flag] = violation_to_json(v);
}

void add_report(TaskResult& r, const std::string& key, const VerificationReport& rep) {
  r.verdicts[key] = rep.passed();
  if (!rep.passed()) r.witnesses[key] = violation_to_json(rep.violations.front());
}

ContactPairStructure structure_from(const AlgebraBlock& b, const TaskSpec& t) {
  const AltForm& a1 = need_one_form(b, t.arg_or("alpha1", "alpha1"));
  const AltForm& a2 = need_one_form(b, t.arg_or("alpha2", "alpha2"));
  const Endo& phi = need_endo(b, t.arg_or("phi", "phi"));
  return make_cps(make_contact_pair(b.algebra, a1, a2), phi);
}

TaskResult do_classify(const InputDocument& doc) {
  TaskResult r;
  const AlgebraBlock& b = doc.main;
  const TaskSpec& t = doc.task;
  const std::string kind = t.arg_or("kind", "contact-pair");
  if (kind == "contact-pair") {
    const AltForm& a1 = need_one_form(b, t.arg_or("alpha1", "alpha1"));
    const AltForm& a2 = need_one_form(b, t.arg_or("alpha2", "alpha2"));
    const PairClass c = classify_contact_pair(b.algebra, a1, a2);
    r.verdicts["classified"] = c.ok;
    if (c.ok) {
      r.verdicts["type"] = type_str(c.h, c.k);
      const ContactPair P = make_contact_pair(b.algebra, a1, a2);
      r.results["Z1"] = vec_to_json(P.Z1);
      r.results["Z2"] = vec_to_json(P.Z2);
    } else {
      r.verdicts["reason"] = c.reason;
      r.pass = false;
    }
  } else if (kind == "symplectic-pair") {
    const PairClass c = classify_symplectic_pair(b.algebra,
                                                 need_two_form(b, t.arg_or("omega1", "omega1")),
                                                 need_two_form(b, t.arg_or("omega2", "omega2")));
    r.verdicts["classified"] = c.ok;
    if (c.ok)
      r.verdicts["type"] = type_str(c.h, c.k);
    else {
      r.verdicts["reason"] = c.reason;
      r.pass = false;
    }
  } else if (kind == "contact-symplectic") {
    const CspResult c = classify_contact_symplectic(b.algebra,
                                                    need_one_form(b, t.arg_or("beta", "beta")),
                                                    need_two_form(b, t.arg_or("eta", "eta")));
    r.verdicts["classified"] = c.ok;
    if (c.ok) {
      r.verdicts["type"] = type_str(c.value->h, c.value->k);
      r.results["W"] = vec_to_json(c.value->W);
    } else {
      r.verdicts["reason"] = c.reason;
      r.pass = false;
    }
  } else {
    throw error("classify: unknown kind '" + kind + "'");
  }
  return r;
}

TaskResult do_reeb(const InputDocument& doc) {
  TaskResult r;
  const AlgebraBlock& b = doc.main;
  const TaskSpec& t = doc.task;
  const std::string kind = t.arg_or("kind", "contact-pair");
  if (kind == "contact-pair") {
    const AltForm& a1 = need_one_form(b, t.arg_or("alpha1", "alpha1"));
    const AltForm& a2 = need_one_form(b, t.arg_or("alpha2", "alpha2"));
    const PairClass c = classify_contact_pair(b.algebra, a1, a2);
    r.verdicts["classified"] = c.ok;
    if (!c.ok) {
      r.verdicts["reason"] = c.reason;
      r.pass = false;
      return r;
    }
    const auto [z1, z2] = reeb_pair(b.algebra, a1, a2);
    r.results["Z1"] = vec_to_json(z1);
    r.results["Z2"] = vec_to_json(z2);
  } else if (kind == "contact-symplectic") {
    const CspResult c = classify_contact_symplectic(b.algebra,
                                                    need_one_form(b, t.arg_or("beta", "beta")),
                                                    need_two_form(b, t.arg_or("eta", "eta")));
    r.verdicts["classified"] = c.ok;
    if (!c.ok) {
      r.verdicts["reason"] = c.reason;
      r.pass = false;
      return r;
    }
    r.results["W"] = vec_to_json(c.value->W);
  } else {
    throw error("reeb: unknown kind '" + kind + "'");
  }
  return r;
}

TaskResult do_verify_structure(const InputDocument& doc) {
  TaskResult r;
  const AlgebraBlock& b = doc.main;
  const TaskSpec& t = doc.task;
  const std::string kind = t.arg_or("kind", "contact-pair-structure");
  if (kind == "contact-pair-structure") {
    const AltForm& a1 = need_one_form(b, t.arg_or("alpha1", "alpha1"));
    const AltForm& a2 = need_one_form(b, t.arg_or("alpha2", "alpha2"));
    const PairClass c = classify_contact_pair(b.algebra, a1, a2);
    r.verdicts["classified"] = c.ok;
    if (!c.ok) {
      r.verdicts["reason"] = c.reason;
      r.pass = false;
      return r;
    }
    const ContactPair P = make_contact_pair(b.algebra, a1, a2);
    const VerificationReport rep = verify_cps(P, need_endo(b, t.arg_or("phi", "phi")));
    add_report(r, "structure_valid", rep);
    r.pass = rep.passed();
  } else if (kind == "almost-contact") {
    const AltForm& alpha = need_one_form(b, t.arg_or("alpha", "alpha"));
    const Vec Z = solve_contact_reeb(b.algebra, alpha);
    r.results["Z"] = vec_to_json(Z);
    const AlmostContactFactor f{b.algebra, alpha, Z, need_endo(b, t.arg_or("phi", "phi"))};
    const VerificationReport rep = verify_almost_contact(f);
    add_report(r, "structure_valid", rep);
    r.pass = rep.passed();
  } else if (kind == "acss") {
    const CspResult c = classify_contact_symplectic(b.algebra,
                                                    need_one_form(b, t.arg_or("beta", "beta")),
                                                    need_two_form(b, t.arg_or("eta", "eta")));
    r.verdicts["classified"] = c.ok;
    if (!c.ok) {
      r.verdicts["reason"] = c.reason;
      r.pass = false;
      return r;
    }
    const Endo& psi = need_endo(b, t.arg_or("psi", "psi"));
    const VerificationReport rep = verify_acss(*c.value, psi);
    add_report(r, "structure_valid", rep);
    add_report(r, "psi_decomposable", psi_decomposable(*c.value, psi));
    r.pass = rep.passed();
  } else {
    throw error("verify-structure: unknown kind '" + kind + "'");
  }
  return r;
}

TaskResult do_decomposable(const InputDocument& doc) {
  TaskResult r;
  const ContactPairStructure S = structure_from(doc.main, doc.task);
  const SplittingBases B = splitting_bases(S.pair);
  const VerificationReport rep = is_decomposable(S.pair, S.phi, B);
  add_report(r, "decomposable", rep);
  r.verdicts["type"] = type_str(S.pair.h, S.pair.k);
  r.pass = rep.passed();
  return r;
}

TaskResult do_normality(const InputDocument& doc) {
  TaskResult r;
  const AlgebraBlock& b = doc.main;
  const TaskSpec& t = doc.task;
  const std::string kind = t.arg_or("kind", "contact-pair");
  if (kind == "contact-pair") {
    const ContactPairStructure S = structure_from(b, t);
    const NormalityReport n = normality_report(S);
    r.verdicts["type"] = type_str(S.pair.h, S.pair.k);
    r.verdicts["pair_normal"] = n.pair_normal;
    r.verdicts["J_integrable"] = n.J_integrable;
    r.verdicts["T_integrable"] = n.T_integrable;
    r.verdicts["LZ1_phi_zero"] = n.LZ1_phi_zero;
    r.verdicts["LZ2_phi_zero"] = n.LZ2_phi_zero;
    r.verdicts["decomposable"] = n.decomposable;
    if (n.eq9) r.verdicts["eq9"] = *n.eq9;
    if (n.eq10) r.verdicts["eq10"] = *n.eq10;
    if (n.eq11) r.verdicts["eq11"] = *n.eq11;
    if (n.induced1_normal) r.verdicts["induced1_normal"] = *n.induced1_normal;
    if (n.induced2_normal) r.verdicts["induced2_normal"] = *n.induced2_normal;
    add_witnesses(r, n.witnesses);
    r.results["Z1"] = vec_to_json(S.pair.Z1);
    r.results["Z2"] = vec_to_json(S.pair.Z2);
    r.pass = n.pair_normal;
  } else if (kind == "almost-contact") {
    const AltForm& alpha = need_one_form(b, t.arg_or("alpha", "alpha"));
    const Vec Z = solve_contact_reeb(b.algebra, alpha);
    const VerificationReport rep =
        almost_contact_normality(b.algebra, alpha, Z, need_endo(b, t.arg_or("phi", "phi")));
    add_report(r, "normal", rep);
    r.results["Z"] = vec_to_json(Z);
    r.pass = rep.passed();
  } else if (kind == "acss") {
    const ContactSymplecticPair csp = make_contact_symplectic(
        b.algebra, need_one_form(b, t.arg_or("beta", "beta")),
        need_two_form(b, t.arg_or("eta", "eta")));
    const Endo& psi = need_endo(b, t.arg_or("psi", "psi"));
    const AlmostContactSymplecticStructure A = make_acss(csp, psi);
    const VerificationReport rep =
        almost_contact_normality(A.csp.L, A.csp.beta, A.csp.W, A.psi);
    add_report(r, "normal", rep);
    add_report(r, "eta_invariant", eta_invariance(A));
    r.results["W"] = vec_to_json(A.csp.W);
    r.pass = rep.passed();
  } else {
    throw error("normality: unknown kind '" + kind + "'");
  }
  return r;
}

TaskResult do_induced(const InputDocument& doc) {
  TaskResult r;
  const ContactPairStructure S = structure_from(doc.main, doc.task);
  const SplittingBases B = splitting_bases(S.pair);
  const VerificationReport i1 = induced_normality(S, B, 1);
  const VerificationReport i2 = induced_normality(S, B, 2);
  add_report(r, "induced1_normal", i1);
  add_report(r, "induced2_normal", i2);
  r.pass = i1.passed() && i2.passed();
  return r;
}

TaskResult do_extend(const InputDocument& doc) {
  TaskResult r;
  const AlgebraBlock& b = doc.main;
  const TaskSpec& t = doc.task;
  const CspResult c = classify_contact_symplectic(b.algebra,
                                                  need_one_form(b, t.arg_or("beta", "beta")),
                                                  need_two_form(b, t.arg_or("eta", "eta")));
  r.verdicts["base_classified"] = c.ok;
  if (!c.ok) {
    r.verdicts["reason"] = c.reason;
    r.pass = false;
    return r;
  }
  r.verdicts["base_type"] = type_str(c.value->h, c.value->k);
  const AlmostContactSymplecticStructure A = make_acss(*c.value, need_endo(b, t.arg_or("psi", "psi")));
  const BoothbyWangExtension E = boothby_wang_extend(A);
  r.verdicts["extension_type"] = type_str(E.cls.h, E.cls.k);
  r.verdicts["extension_valid"] = true;
  r.verdicts["extension_normal"] = normality_report(*E.structure).pair_normal;

  InputDocument out;
  out.main.algebra = E.algebra;
  out.main.one_forms = {{"alpha1", E.alpha1}, {"alpha2", E.alpha2}};
  out.main.endos = {{"phi", E.phi}};
  out.task.name = "normality";
  out.task.args = {{"kind", "contact-pair"},
                   {"alpha1", "alpha1"},
                   {"alpha2", "alpha2"},
                   {"phi", "phi"}};
  r.out_doc = std::move(out);
  return r;
}

TaskResult do_product(const InputDocument& doc) {
  TaskResult r;
  if (!doc.right) throw error("product: document needs a 'right' block");
  const AlgebraBlock& left = doc.main;
  const AlgebraBlock& right = *doc.right;
  const TaskSpec& t = doc.task;

  auto factor = [&](const AlgebraBlock& blk, const std::string& alpha_key,
                    const std::string& phi_key, const char* alpha_def, const char* phi_def) {
    const AltForm& alpha = need_one_form(blk, t.arg_or(alpha_key, alpha_def));
    const Vec Z = solve_contact_reeb(blk.algebra, alpha);
    return AlmostContactFactor{blk.algebra, alpha, Z, need_endo(blk, t.arg_or(phi_key, phi_def))};
  };
  const ProductSpec spec{factor(left, "alpha1", "phi1", "alpha", "phi"),
                         factor(right, "alpha2", "phi2", "alpha", "phi")};
  const ContactPairStructure S = direct_sum(spec);
  r.verdicts["type"] = type_str(S.pair.h, S.pair.k);
  r.verdicts["product_valid"] = true;
  r.verdicts["pair_normal"] = normality_report(S).pair_normal;

  InputDocument out;
  out.main.algebra = S.pair.L;
  out.main.one_forms = {{"alpha1", S.pair.alpha1}, {"alpha2", S.pair.alpha2}};
  out.main.endos = {{"phi", S.phi}};
  out.task.name = "normality";
  out.task.args = {{"kind", "contact-pair"},
                   {"alpha1", "alpha1"},
                   {"alpha2", "alpha2"},
                   {"phi", "phi"}};
  r.out_doc = std::move(out);
  return r;
}

std::string render_text(const json& machine, bool pass, int exit_code) {
  std::ostringstream os;
  os << "task: " << machine.at("task").at("name").get<std::string>();
  for (const auto& [k, v] : machine.at("task").items())
    if (k != "name") os << " " << k << "=" << v.get<std::string>();
  os << "\n";
  if (machine.contains("error")) {
    os << "error: " << machine.at("error").get<std::string>() << "\n";
  } else {
    for (const auto& [k, v] : machine.at("verdicts").items())
      os << "  " << k << ": " << v.dump() << "\n";
    if (machine.contains("witnesses"))
      for (const auto& [k, v] : machine.at("witnesses").items())
        os << "  witness " << k << ": basis " << v.at("basis").dump() << ", residual "
           << v.at("residual").dump() << "\n";
    if (machine.contains("results"))
      for (const auto& [k, v] : machine.at("results").items())
        os << "  " << k << " = " << v.dump() << "\n";
    if (machine.contains("document")) os << "  (new document emitted)\n";
  }
  os << "status: " << (exit_code == 2 ? "ERROR" : pass ? "PASS" : "VERIFIED-FALSE") << "\n";
  return os.str();
}

RunOutcome finish(json task_echo, TaskResult r) {
  RunOutcome out;
  out.machine["task"] = std::move(task_echo);
  out.machine["verdicts"] = std::move(r.verdicts);
  if (!r.witnesses.empty()) out.machine["witnesses"] = std::move(r.witnesses);
  if (!r.results.empty()) out.machine["results"] = std::move(r.results);
  if (r.out_doc) out.machine["document"] = document_to_json(*r.out_doc);
  out.exit_code = r.pass ? 0 : 1;
  out.text = render_text(out.machine, r.pass, out.exit_code);
  return out;
}

json task_json(const TaskSpec& t) {
  json j;
  j["name"] = t.name;
  for (const auto& [k, v] : t.args) j[k] = v;
  return j;
}

}  // namespace

Vec solve_contact_reeb(const LieAlgebra& L, const AltForm& alpha) {
  const int n = L.dim();
  if (alpha.degree() != 1 || alpha.dim() != n) throw error("solve_contact_reeb: bad form");
  const AltForm da = exterior_derivative(L, alpha);
  Matrix sys(1 + n, n);
  Vec rhs(1 + n);
  for (int i = 0; i < n; ++i) sys.at(0, i) = alpha.eval_basis({i});
  rhs[0] = Rational(1);
  const Matrix rows = two_form_rows(da);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) sys.at(1 + j, i) = rows.at(j, i);
  std::string reason;
  auto z = try_solve_unique(sys, rhs, &reason);
  if (!z) throw error("solve_contact_reeb: " + reason);
  return *z;
}

RunOutcome run_task(const InputDocument& doc) {
  const json echo = task_json(doc.task);
  try {
    TaskResult r;
    if (doc.task.name == "classify")
      r = do_classify(doc);
    else if (doc.task.name == "reeb")
      r = do_reeb(doc);
    else if (doc.task.name == "verify-structure")
      r = do_verify_structure(doc);
    else if (doc.task.name == "decomposable")
      r = do_decomposable(doc);
    else if (doc.task.name == "normality")
      r = do_normality(doc);
    else if (doc.task.name == "induced")
      r = do_induced(doc);
    else if (doc.task.name == "extend")
      r = do_extend(doc);
    else if (doc.task.name == "product")
      r = do_product(doc);
    else if (doc.task.name == "fixtures")
      return run_all_fixtures();
    else
      throw error("unknown task '" + doc.task.name + "'");
    return finish(echo, std::move(r));
  } catch (const error& e) {
    RunOutcome out;
    out.exit_code = 2;
    out.machine["task"] = echo;
    out.machine["error"] = e.what();
    out.text = render_text(out.machine, false, 2);
    return out;
  }
}

RunOutcome run_fixture_task(const std::string& name) {
  json echo;
  echo["name"] = "fixtures";
  echo["fixture"] = name;
  try {
    const Fixture f = load_fixture(name);
    const VerificationReport rep = run_expectations(f);
    TaskResult r;
    r.verdicts["fixture"] = name;
    r.verdicts["expectations_pass"] = rep.passed();
    if (!rep.passed()) {
      json fails = json::array();
      for (const auto& v : rep.violations) fails.push_back(v.identity);
      r.verdicts["failures"] = std::move(fails);
    }
    r.pass = rep.passed();
    return finish(echo, std::move(r));
  } catch (const error& e) {
    RunOutcome out;
    out.exit_code = 2;
    out.machine["task"] = echo;
    out.machine["error"] = e.what();
    out.text = render_text(out.machine, false, 2);
    return out;
  }
}

RunOutcome run_all_fixtures() {
  json echo;
  echo["name"] = "fixtures";
  echo["run_all"] = "true";
  TaskResult r;
  for (const std::string& name : fixture_names()) {
    const VerificationReport rep = run_expectations(load_fixture(name));
    r.verdicts[name] = rep.passed();
    if (!rep.passed()) {
      r.pass = false;
      r.witnesses[name] = violation_to_json(rep.violations.front());
    }
  }
  return finish(echo, std::move(r));
}

RunOutcome list_fixtures_outcome() {
  json echo;
  echo["name"] = "fixtures";
  TaskResult r;
  json names = json::array();
  for (const std::string& name : fixture_names()) names.push_back(name);
  r.verdicts["available"] = std::move(names);
  return finish(echo, std::move(r));
}

}  // namespace liecp
