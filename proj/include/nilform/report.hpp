#ifndef NILFORM_REPORT_HPP
#define NILFORM_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "nilform/certificates.hpp"
#include "nilform/decompose.hpp"
#include "nilform/document.hpp"
#include "nilform/euclidean.hpp"
#include "nilform/levi.hpp"
#include "nilform/metric.hpp"
#include "nilform/stabilizer.hpp"
#include "nilform/verify.hpp"

namespace nilform {

inline json to_json(const Signature& s) {
  return json{{"plus", s.n_plus}, {"minus", s.n_minus}, {"zero", s.n_zero}};
}

inline json to_json(const Subspace& s) {
  return json{{"ambient_dim", s.ambient_dim()},
              {"dim", s.dim()},
              {"basis", AlgebraDocument::matrix_to_json(s.basis())}};
}

inline json to_json(const Clause& c) {
  json j{{"name", c.name}, {"verdict", to_string(c.verdict)}};
  if (!c.detail.empty()) j["witness"] = c.detail;
  return j;
}

inline json to_json(const Certificate& c) {
  json clauses = json::array();
  for (const auto& cl : c.clauses) clauses.push_back(to_json(cl));
  json j{{"name", c.name},
         {"applicable", c.applicable},
         {"passed", c.passed()},
         {"clauses", std::move(clauses)}};
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

inline json to_json(const SubalgebraHandle& h) {
  json j = to_json(h.space);
  j["is_subalgebra"] = h.is_subalgebra;
  j["is_ideal"] = h.is_ideal;
  j["is_abelian"] = h.is_abelian;
  return j;
}

inline json to_json(const LeviDecomposition& d) {
  json ideals = json::array();
  for (std::size_t i = 0; i < d.simple_ideals.size(); ++i)
    ideals.push_back(json{{"dim", d.simple_ideals[i].space.dim()},
                          {"killing_signature", to_json(d.simple_signatures[i])}});
  return json{{"radical", to_json(d.radical_part)},
              {"levi", to_json(d.levi)},
              {"compact_part", to_json(d.compact_part)},
              {"noncompact_part", to_json(d.noncompact_part)},
              {"gs", to_json(d.gs)},
              {"radical_abelian", d.radical_abelian},
              {"simple_ideals", std::move(ideals)}};
}

inline json to_json(const FormAnalysis& a) {
  json j{{"kernel", to_json(a.kernel)},
         {"signature", to_json(a.sig)},
         {"relative_index", a.relative_index},
         {"invariant", a.invariance.invariant},
         {"nil_invariant", to_string(a.nil.verdict)},
         {"effective", a.effective}};
  if (a.invariance.witness) {
    const auto& w = *a.invariance.witness;
    j["invariance_witness"] = json{{"a", w.a}, {"b", w.b}, {"value", w.value.str()}};
  }
  if (a.nil.witness) {
    const auto& w = *a.nil.witness;
    j["nil_witness"] =
        json{{"generator", w.generator_origin}, {"i", w.i}, {"j", w.j}, {"value", w.value.str()}};
  }
  return j;
}

inline json to_json(const FactorFingerprint& fp) {
  return json{{"dim", fp.dim},
              {"killing_signature", to_json(fp.killing)},
              {"simple_ideal_dims", fp.simple_dims}};
}

inline json to_json(const DecompositionReport& r) {
  json certs = json::array();
  for (const auto& c : r.certificates) certs.push_back(to_json(c));
  json j{{"ok", r.ok}};
  if (!r.ok) {
    j["violated"] = r.violated;
    return j;
  }
  j["A"] = to_json(r.A);
  j["B"] = to_json(r.B);
  j["C"] = to_json(r.C);
  j["S0"] = to_json(r.S0.space);
  j["S1"] = to_json(r.S1.space);
  j["G1"] = to_json(r.G1);
  j["G2"] = to_json(r.G2);
  j["G3"] = to_json(r.G3);
  j["G1_fingerprint"] = to_json(r.fp1);
  j["G2_fingerprint"] = to_json(r.fp2);
  j["G3_fingerprint"] = to_json(r.fp3);
  j["certificates"] = std::move(certs);
  return j;
}

inline json to_json(const EuclideanTypeReport& r) {
  json j{{"ok", r.ok},
         {"K0", to_json(r.K0.space)},
         {"V", to_json(r.V)},
         {"kernel_containment", r.kernel_containment}};
  if (!r.violated.empty()) j["violated"] = r.violated;
  return j;
}

inline json to_json(const StabilizerAudit& a) {
  return json{{"h", to_json(a.h)},
              {"h_cap_k", to_json(a.h_cap_k)},
              {"radical_projection", to_json(a.radical_projection)},
              {"phi", AlgebraDocument::matrix_to_json(a.phi)},
              {"flags",
               json{{"commutator_in_k", a.commutator_in_k},
                    {"projects_onto_radical", a.projects_onto_radical},
                    {"is_graph_split", a.is_graph_split},
                    {"phi_is_homomorphism", a.phi_is_homomorphism},
                    {"phi_injective_on_center_part", a.phi_injective_on_center_part},
                    {"phi_nontrivial", a.phi_nontrivial}}},
              {"all_flags", a.all_flags()}};
}

inline json to_json(const EuclideanVerifyResult& r) {
  json j{{"n", r.n},
         {"dim", r.dim},
         {"unknowns", r.unknowns},
         {"solution_dim", r.solution_dim},
         {"translations_in_kernel_of_every_solution", r.rn_in_kernel_all},
         {"nondegenerate_invariant_solution", r.exception_witness},
         {"contradiction", r.contradiction},
         {"verdict", r.rn_in_kernel_all
                         ? "R^n contained in the kernel of every nil-invariant form"
                         : "exception: nondegenerate invariant solution exists"}};
  if (r.witness_gram) j["witness_gram"] = AlgebraDocument::matrix_to_json(*r.witness_gram);
  return j;
}

inline json to_json(const SkewPairingResult& r) {
  json j{{"l", r.l},
         {"module_dim", r.module_dim},
         {"solution_dim", r.solution_dim}};
  if (r.l == 1) j["killing_line"] = r.killing_line;
  return j;
}

/// Top-level report wrapper: command echo, input digest, results, summary.
struct Report {
  std::string command;
  std::string input_name;
  std::size_t input_dim = 0;
  std::string digest;
  json results;
  std::string summary;

  json to_json() const {
    return json{{"command", command},
                {"input", json{{"name", input_name}, {"dim", input_dim}, {"digest", digest}}},
                {"results", results},
                {"summary", summary}};
  }
};

} // namespace nilform

#endif
