// nilform: exact analysis of nil-invariant symmetric bilinear forms on
// finite-dimensional rational Lie algebras.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nilform/certificates.hpp"
#include "nilform/decompose.hpp"
#include "nilform/document.hpp"
#include "nilform/errors.hpp"
#include "nilform/euclidean.hpp"
#include "nilform/gallery.hpp"
#include "nilform/levi.hpp"
#include "nilform/metric.hpp"
#include "nilform/report.hpp"
#include "nilform/stabilizer.hpp"
#include "nilform/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 1;
constexpr int kExitHypothesis = 2;
constexpr int kExitContradiction = 3;

struct Options {
  std::string input;
  std::string output = "json";
  std::uint64_t seed = 0;
};

void emit(const nilform::Report& report, const Options& opt) {
  if (opt.output == "json")
    std::cout << report.to_json().dump(2) << "\n";
  else
    std::cout << report.summary << "\n";
}

nilform::Report base_report(const std::string& command, const nilform::AlgebraDocument& doc) {
  nilform::Report r;
  r.command = command;
  r.input_name = doc.name;
  r.input_dim = doc.algebra.dim();
  r.digest = nilform::document_digest(doc);
  return r;
}

int run_analyze(const Options& opt) {
  using namespace nilform;
  AlgebraDocument doc = load_document(opt.input);
  if (!doc.form) {
    std::cerr << "hypothesis violation: document carries no form\n";
    return kExitHypothesis;
  }
  LeviDecomposition levi = levi_decompose(doc.algebra, opt.seed);
  FormAnalysis fa = analyze(doc.algebra, *doc.form, levi);
  Report rep = base_report("analyze", doc);
  rep.results["analysis"] = to_json(fa);
  rep.results["levi"] = to_json(levi);
  json certs = json::array();
  bool theorem_contradiction = false;
  if (fa.nil.verdict != NilVerdict::fails) {
    std::vector<Certificate> cs;
    cs.push_back(levi_orthogonality_certificate(doc.algebra, *doc.form, levi));
    cs.push_back(gs_invariance_certificate(doc.algebra, *doc.form, levi));
    cs.push_back(kernel_location_certificate(doc.algebra, *doc.form, levi, fa));
    cs.push_back(kernel_centralizes_gs_certificate(doc.algebra, *doc.form, levi, fa));
    cs.push_back(low_index_structure_certificate(doc.algebra, *doc.form, levi, fa));
    for (const auto& c : cs) {
      certs.push_back(to_json(c));
      if (c.applicable && !c.passed()) theorem_contradiction = true;
    }
  }
  rep.results["certificates"] = std::move(certs);
  std::ostringstream os;
  os << doc.name << ": signature " << fa.sig.str() << ", kernel dim " << fa.kernel.dim()
     << ", relative index " << fa.relative_index << ", invariant "
     << (fa.invariance.invariant ? "yes" : "no") << ", nil-invariant "
     << to_string(fa.nil.verdict) << ", effective " << (fa.effective ? "yes" : "no");
  rep.summary = os.str();
  emit(rep, opt);
  if (theorem_contradiction) {
    std::cerr << "counterexample to a certified statement; this indicates a bug\n";
    return kExitContradiction;
  }
  return kExitOk;
}

int run_decompose(const Options& opt) {
  using namespace nilform;
  AlgebraDocument doc = load_document(opt.input);
  if (!doc.form) {
    std::cerr << "hypothesis violation: document carries no form\n";
    return kExitHypothesis;
  }
  LeviDecomposition levi = levi_decompose(doc.algebra, opt.seed);
  FormAnalysis fa = analyze(doc.algebra, *doc.form, levi);
  DecompositionReport dr = abelian_radical_decompose(doc.algebra, *doc.form, levi, fa, opt.seed);
  Report rep = base_report("decompose", doc);
  rep.results["decomposition"] = to_json(dr);
  if (!dr.ok) {
    rep.summary = doc.name + ": hypothesis violation: " + dr.violated;
    emit(rep, opt);
    std::cerr << "hypothesis violation: " << dr.violated << "\n";
    return kExitHypothesis;
  }
  std::ostringstream os;
  os << doc.name << ": G1 dim " << dr.G1.space.dim() << ", G2 dim " << dr.G2.space.dim()
     << ", G3 dim " << dr.G3.space.dim() << "; all certificates passed";
  rep.summary = os.str();
  emit(rep, opt);
  return kExitOk;
}

int run_audit(const Options& opt) {
  using namespace nilform;
  AlgebraDocument doc = load_document(opt.input);
  if (!doc.stabilizer_h) {
    std::cerr << "hypothesis violation: document carries no stabilizer_h annotation\n";
    return kExitHypothesis;
  }
  LeviDecomposition levi = levi_decompose(doc.algebra, opt.seed);
  Subspace h = Subspace::span_rows(doc.algebra.dim(), *doc.stabilizer_h);
  Subspace a = doc.center_part_a
                   ? Subspace::span_rows(doc.algebra.dim(), *doc.center_part_a)
                   : Subspace::zero(doc.algebra.dim());
  StabilizerAudit audit = stabilizer_audit(doc.algebra, h, levi, a);
  Report rep = base_report("audit-stabilizer", doc);
  rep.results["audit"] = to_json(audit);
  std::ostringstream os;
  os << doc.name << ": stabilizer audit "
     << (audit.all_flags() ? "all flags true"
                           : std::string("flags: commutator_in_k=") +
                                 (audit.commutator_in_k ? "1" : "0") +
                                 " projects_onto_radical=" + (audit.projects_onto_radical ? "1" : "0") +
                                 " is_graph_split=" + (audit.is_graph_split ? "1" : "0") +
                                 " phi_is_homomorphism=" + (audit.phi_is_homomorphism ? "1" : "0") +
                                 " phi_injective_on_center_part=" +
                                 (audit.phi_injective_on_center_part ? "1" : "0") +
                                 " phi_nontrivial=" + (audit.phi_nontrivial ? "1" : "0"));
  rep.summary = os.str();
  emit(rep, opt);
  return kExitOk;
}

int run_verify_euclidean(const Options& opt, const std::vector<long>& ns) {
  using namespace nilform;
  Report rep;
  rep.command = "verify euclidean";
  rep.input_name = "euclidean sweep";
  json results = json::array();
  bool contradiction = false;
  std::ostringstream os;
  for (long n : ns) {
    EuclideanVerifyResult r = verify_euclidean(n);
    results.push_back(to_json(r));
    contradiction = contradiction || r.contradiction;
    os << "n=" << n << ": solution space dim " << r.solution_dim << ", "
       << (r.rn_in_kernel_all ? "R^n contained in every kernel"
                              : "exception: nondegenerate invariant solution exists")
       << "\n";
  }
  rep.results["euclidean"] = std::move(results);
  rep.summary = os.str();
  emit(rep, opt);
  if (contradiction) {
    std::cerr << "counterexample to the obstruction statement; this indicates a bug\n";
    return kExitContradiction;
  }
  return kExitOk;
}

int run_verify_skew(const Options& opt, const std::vector<long>& ls) {
  using namespace nilform;
  Report rep;
  rep.command = "verify skew-pairing";
  rep.input_name = "skew-pairing sweep";
  json results = json::array();
  std::ostringstream os;
  bool contradiction = false;
  for (long l : ls) {
    SkewPairingResult r = verify_skew_pairing(l);
    results.push_back(to_json(r));
    os << "l=" << l << ": module dim " << r.module_dim << ", solution space dim "
       << r.solution_dim;
    if (l == 1) {
      os << (r.killing_line ? " (spanned by the Killing pairing)" : " (NOT the Killing line)");
      if (!r.killing_line || r.solution_dim != 1) contradiction = true;
    }
    if (l >= 2 && r.solution_dim != 0) contradiction = true;
    os << "\n";
  }
  rep.results["skew_pairing"] = std::move(results);
  rep.summary = os.str();
  emit(rep, opt);
  if (contradiction) {
    std::cerr << "counterexample to the skew-pairing statement; this indicates a bug\n";
    return kExitContradiction;
  }
  return kExitOk;
}

int run_gallery(const Options& opt, const std::string& name) {
  using namespace nilform;
  if (name == "list") {
    json listing = json::array();
    std::ostringstream os;
    for (const auto& e : gallery_entries()) {
      listing.push_back(json{{"name", e.name},
                             {"dim", e.algebra.dim()},
                             {"has_form", bool(e.form)},
                             {"description", e.description}});
      os << e.name << " (dim " << e.algebra.dim() << "): " << e.description << "\n";
    }
    if (opt.output == "json")
      std::cout << listing.dump(2) << "\n";
    else
      std::cout << os.str();
    return kExitOk;
  }
  AlgebraDocument doc = AlgebraDocument::from_gallery(gallery_get(name));
  std::cout << doc.to_json().dump(2) << "\n";
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for nil-invariant symmetric bilinear forms on Lie algebras"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--output", opt.output, "output format: json or text")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", opt.seed, "seed for randomized probe selection");

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("source", opt.input, "input document: FILE or gallery://NAME");
    cmd->add_option("--input", opt.input, "input document: FILE or gallery://NAME")
        ->excludes("source");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "analyze a form on an algebra");
  add_input(analyze);
  CLI::App* decompose = app.add_subcommand("decompose", "orthogonal three-factor decomposition");
  add_input(decompose);
  CLI::App* audit = app.add_subcommand("audit-stabilizer", "audit a stabilizer subalgebra");
  add_input(audit);

  CLI::App* verify = app.add_subcommand("verify", "exhaustive verification sweeps");
  verify->require_subcommand(1);
  std::vector<long> ns;
  CLI::App* veuclid = verify->add_subcommand("euclidean", "nil-invariant forms on E_n");
  veuclid->add_option("--n", ns, "dimensions n (1..8)")->required()->delimiter(',');
  std::vector<long> ls;
  CLI::App* vskew = verify->add_subcommand("skew-pairing", "skew pairings of so3 modules");
  vskew->add_option("--l", ls, "module labels l (0..6)")->required()->delimiter(',');

  CLI::App* gallery = app.add_subcommand("gallery", "emit a gallery document or list entries");
  std::string gallery_name;
  gallery->add_option("name", gallery_name, "entry name or 'list'")->required();

  for (CLI::App* cmd : {analyze, decompose, audit, verify, veuclid, vskew, gallery})
    cmd->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) return run_analyze(opt);
    if (*decompose) return run_decompose(opt);
    if (*audit) return run_audit(opt);
    if (*verify) {
      if (*veuclid) return run_verify_euclidean(opt, ns);
      if (*vskew) return run_verify_skew(opt, ls);
    }
    if (*gallery) return run_gallery(opt, gallery_name);
  } catch (const nilform::validation_error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const nilform::hypothesis_error& e) {
    std::cerr << "hypothesis violation: " << e.what() << "\n";
    return kExitHypothesis;
  } catch (const nilform::error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitContradiction;
  }
  return kExitOk;
}
