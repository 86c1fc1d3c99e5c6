#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lpm/dk/syntax.hpp"
#include "lpm/embed/prelude.hpp"
#include "lpm/kernel/signature.hpp"
#include "lpm/llproof/ext.hpp"
#include "lpm/llproof/proof.hpp"
#include "lpm/tff/syntax.hpp"

namespace lpm::llproof {

struct CertificateOptions {
  embed::Mode mode = embed::Mode::Shallow;
  // Rewrite Pred/Fun into Subst chains first. When off they are compiled to
  // the R_Pred_n / R_Fun_n lemmas, defined in the certificate module.
  bool eliminate_pred_fun = true;
  kernel::Limits limits;
};

// A compiled node: its term proves prf False in `context`.
struct CompiledNode {
  Path path;
  Rule rule;
  kernel::RuleContext context;
  kernel::Term term;
};

struct Certificate {
  // Module cert: the lemmas in use, then
  //   def goal : prf (not φ) -> prf False := h0 : prf (not φ) => ...
  std::vector<dk::Entry> entries;
  kernel::Term type;
  kernel::Term body;
  // Pre-order, paths relative to the compiled tree.
  std::vector<CompiledNode> nodes;
};

// Translates a proof of `goal` in `thy`. Throws ProofError for structural
// problems: wrong parameters, missing hypotheses, non-fresh names,
// unregistered extensions. The tree is compiled as given; Pred/Fun nodes use
// the lemmas.
Certificate compile_certificate(const tff::Theory& thy, const tff::Formula& goal, const Node& root,
                                const ExtRegistry& registry = ExtRegistry::builtin());

// Lemma entries R_Pred_n / R_Fun_n for module cert.
std::vector<dk::Entry> pred_lemma_entries(std::size_t n);
std::vector<dk::Entry> fun_lemma_entries(std::size_t n);

struct Verdict {
  bool accepted = false;
  // Kebab-case error kind: a kernel error kind or a proof error kind.
  std::string kind;
  // "root.i.j" for a node of the submitted tree, "goal" for the goal itself.
  std::string path;
  // Tag of the node at `path`, if any.
  std::string rule;
  std::string message;

  std::string describe() const;
};

// logic + rules + the theory module, for repeated checks against one theory.
kernel::Signature theory_signature(const tff::Theory& thy, embed::Mode mode, const kernel::Limits& limits = {},
                                   const ExtRegistry& registry = ExtRegistry::builtin());

// Compiles and type checks the certificate. On failure the verdict names the
// deepest node whose own term fails to check.
Verdict check_certificate(const tff::Theory& thy, const tff::Formula& goal, const Node& root,
                          const CertificateOptions& options = {},
                          const ExtRegistry& registry = ExtRegistry::builtin());
// As above with a signature from theory_signature in options.mode.
Verdict check_certificate(const kernel::Signature& base, const tff::Theory& thy, const tff::Formula& goal,
                          const Node& root, const CertificateOptions& options = {},
                          const ExtRegistry& registry = ExtRegistry::builtin());

// One emitted .dk file.
struct DkFile {
  std::string module;
  std::vector<dk::Entry> entries;
  std::string text() const { return dk::print_file(entries); }
};

// logic, rules, the theory and, given a proof, cert.
std::vector<DkFile> emit_bundle(const tff::Theory& thy, const CertificateOptions& options,
                                const std::optional<std::pair<tff::Formula, Node>>& proof = std::nullopt,
                                const ExtRegistry& registry = ExtRegistry::builtin());

// Parses every file's printed text and loads them in order from the empty
// signature. Throws dk::SyntaxError or dk::LoadError.
kernel::Signature load_bundle(const std::vector<DkFile>& files, const kernel::Limits& limits = {});

}  // namespace lpm::llproof
