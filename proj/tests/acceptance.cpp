// Prints one PASS/FAIL line per acceptance criterion and exits non-zero if
// any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "lpm/dk/quote.hpp"
#include "lpm/embed/translate.hpp"
#include "lpm/kernel/reduce.hpp"
#include "lpm/kernel/typing.hpp"
#include "lpm/llproof/certificate.hpp"
#include "lpm/llproof/rules_prelude.hpp"
#include "lpm/tff/format.hpp"
#include "lpm/tff/sexpr.hpp"
#include "support/bool_oracle.hpp"
#include "support/corpus.hpp"
#include "support/expected.hpp"
#include "support/generators.hpp"
#include "support/mutations.hpp"
#include "support/translation_checks.hpp"

using namespace lpm;

namespace {

using Clock = std::chrono::steady_clock;

struct Result {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& name, double budget_ms, const std::function<void(Result&)>& body) {
  Result r;
  auto start = Clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.require(false, std::string("exception: ") + e.what());
  }
  double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  if (budget_ms > 0) r.require(ms < budget_ms, "over budget of " + std::to_string(int(budget_ms)) + " ms");
  if (!r.ok) ++failures;
  std::printf("%s %d %s (%.1f ms)%s%s\n", r.ok ? "PASS" : "FAIL", id, name.c_str(), ms, r.ok ? "" : ": ",
              r.detail.c_str());
  std::fflush(stdout);
}

llproof::Verdict check(const tff::Theory& thy, const tff::Formula& goal, const llproof::Node& root, embed::Mode mode,
                       bool eliminate = true) {
  llproof::CertificateOptions opts;
  opts.mode = mode;
  opts.eliminate_pred_fun = eliminate;
  return llproof::check_certificate(thy, goal, root, opts);
}

constexpr embed::Mode kModes[] = {embed::Mode::Deep, embed::Mode::Shallow};

std::string mode_str(embed::Mode m) { return std::string(embed::mode_name(m)); }

bool localized(const test::Mutation& m, const llproof::Verdict& v) {
  auto p = llproof::parse_path(v.path);
  if (!p || !llproof::node_at(m.root, *p)) return false;
  return p->size() >= m.path.size() && std::equal(m.path.begin(), m.path.end(), p->begin());
}

}  // namespace

int main() {
  criterion(1, "prelude and shallow rules load from the empty signature", 1000, [](Result& r) {
    for (embed::Mode mode : kModes) {
      std::vector<llproof::DkFile> files{{"logic", embed::prelude(mode)},
                                         {"rules", llproof::rules_prelude(mode)}};
      kernel::Signature sig = llproof::load_bundle(files);
      r.require(sig.contains(kernel::Name("rules.R_Ax")), mode_str(mode) + ": rules.R_Ax missing");
    }
  });

  criterion(2, "commutativity of conjunction", 1000, [](Result& r) {
    llproof::ProofFile pf = test::proof("bool_commute.llpx");
    const tff::Theory& thy = test::theory("booleans");
    for (embed::Mode mode : kModes) {
      llproof::Verdict v = check(thy, pf.goal, pf.root, mode);
      r.require(v.accepted, mode_str(mode) + ": " + v.describe());
    }
    llproof::Certificate cert = llproof::compile_certificate(thy, pf.goal, pf.root);
    kernel::Signature sig = llproof::theory_signature(thy, embed::Mode::Shallow);
    r.require(kernel::alpha_eq(cert.body, test::term(sig, "cert", test::kAndCommCertificate)),
              "certificate differs from the expected term");
  });

  criterion(3, "s minus s is empty", 1000, [](Result& r) {
    using llproof::Rule;
    llproof::ProofFile pf = test::proof("set_diff.llpx");
    const tff::Theory& thy = test::theory("bset");
    for (embed::Mode mode : kModes) {
      llproof::Verdict v = check(thy, pf.goal, pf.root, mode);
      r.require(v.accepted, mode_str(mode) + ": " + v.describe());
    }
    const std::vector<Rule> tree{Rule::NotForallType, Rule::NotForall, Rule::NotForall, Rule::NotIff,
                                 Rule::Bot,           Rule::And,       Rule::Ax};
    r.require(llproof::preorder(pf.root) == tree, "proof tree shape");
    const std::vector<llproof::Path> paths{{}, {0}, {0, 0}, {0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 1, 0}};
    llproof::Certificate cert = llproof::compile_certificate(thy, pf.goal, pf.root);
    r.require(cert.nodes.size() == tree.size(), "compiled node count");
    for (std::size_t i = 0; r.ok && i < tree.size(); ++i)
      r.require(cert.nodes[i].rule == tree[i] && cert.nodes[i].path == paths[i], "compiled node " + std::to_string(i));
  });

  criterion(4, "fst and snd compute to the same term", 100, [](Result& r) {
    llproof::ProofFile pf = test::proof("pair_fst_snd.llpx");
    const tff::Theory& thy = test::theory("pair");
    kernel::Signature sig = llproof::theory_signature(thy, embed::Mode::Shallow);
    tff::Formula refl = tff::read_formula(thy, tff::parse_sexprs("(= tau a a)").at(0), {});
    kernel::Fuel fuel;
    r.require(kernel::convertible(sig, embed::translate_formula(thy, pf.goal), embed::translate_formula(thy, refl), fuel),
              "goal is not convertible with a = a");
    r.require(llproof::node_count(pf.root) == 1, "proof has more than one node");
    for (embed::Mode mode : kModes) {
      llproof::Verdict v = check(thy, pf.goal, pf.root, mode);
      r.require(v.accepted, mode_str(mode) + ": " + v.describe());
    }
  });

  criterion(5, "Pred and Fun with and without elimination", 0, [](Result& r) {
    llproof::ProofFile pf = test::proof("pred_decomp.llpx");
    const tff::Theory& thy = test::theory("rel");
    for (embed::Mode mode : kModes)
      for (bool eliminate : {false, true}) {
        llproof::Verdict v = check(thy, pf.goal, pf.root, mode, eliminate);
        r.require(v.accepted, mode_str(mode) + (eliminate ? " eliminated: " : " native: ") + v.describe());
      }
    std::vector<bool> seen(10, false);
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      test::PredFunInstance inst = test::random_pred_fun(seed);
      int arity = inst.label[inst.label.find('/') + 1] - '0';
      seen[(inst.label.rfind("fun", 0) == 0 ? 5 : 0) + arity] = true;
      for (embed::Mode mode : kModes) {
        llproof::Verdict native = check(inst.theory, inst.goal, inst.proof, mode, false);
        llproof::Verdict elim = check(inst.theory, inst.goal, inst.proof, mode, true);
        r.require(native.accepted == inst.sound && elim.accepted == inst.sound && native.path == elim.path,
                  "seed " + std::to_string(seed) + " " + inst.label);
      }
    }
    r.require(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }), "some kind or arity never drawn");
  });

  criterion(6, "translation on bool, set and 200 random theories", 30000, [](Result& r) {
    std::vector<tff::Theory> theories{test::theory("booleans"), test::theory("bset")};
    for (std::uint64_t seed = 1; seed <= 200; ++seed) theories.push_back(test::random_theory(seed));
    for (std::size_t i = 0; i < theories.size(); ++i) {
      test::TranslationReport rep = test::check_translation(theories[i], i + 1, 10);
      r.require(rep.failures.empty(), theories[i].name + ": " + (rep.failures.empty() ? "" : rep.failures.front()));
      r.require(rep.types == 10 && rep.formulas == 10, theories[i].name + ": too few samples");
    }
  });

  criterion(7, "normalize on all boolean terms up to size 12", 0, [](Result& r) {
    test::BoolReport rep = test::check_bool_normalization(12);
    r.require(rep.terms == 3168504, "term count " + std::to_string(rep.terms));
    r.require(rep.mismatches == 0, std::to_string(rep.mismatches) + " mismatches, first " + rep.first_failure);
  });

  criterion(8, "single-node mutations are rejected where they happen", 0, [](Result& r) {
    std::size_t count = 0;
    for (const char* file : {"bool_commute.llpx", "set_diff.llpx"}) {
      llproof::ProofFile pf = test::proof(file);
      const tff::Theory& thy = test::theory(pf.theory);
      for (const test::Mutation& m : test::mutations(thy, pf)) {
        ++count;
        for (embed::Mode mode : kModes) {
          llproof::Verdict v = check(thy, pf.goal, m.root, mode);
          r.require(!v.accepted && localized(m, v), std::string(file) + " " + m.category + " " + m.description +
                                                        " at " + llproof::path_string(m.path) + ": " + v.describe());
        }
      }
    }
    r.require(count >= 50, "only " + std::to_string(count) + " mutations");
  });

  criterion(9, "emitted files parse back and print to a fixed point", 0, [](Result& r) {
    auto round_trip = [&r](const llproof::DkFile& f, const std::string& what) {
      std::string text = f.text();
      std::vector<dk::Entry> parsed = dk::parse_file(text);
      r.require(dk::same(parsed, f.entries), what + " " + f.module + ": parse of print differs");
      r.require(dk::print_file(parsed) == text, what + " " + f.module + ": print is not a fixed point");
    };
    std::vector<tff::Theory> theories;
    for (const char* name : {"booleans", "bset", "pair", "rel"}) theories.push_back(test::theory(name));
    for (std::uint64_t seed = 1; seed <= 50; ++seed) theories.push_back(test::random_theory(seed));
    for (const tff::Theory& thy : theories)
      for (embed::Mode mode : kModes) {
        llproof::CertificateOptions opts;
        opts.mode = mode;
        for (const llproof::DkFile& f : llproof::emit_bundle(thy, opts)) round_trip(f, thy.name);
      }
    for (const std::string& file : test::proof_files()) {
      llproof::ProofFile pf = test::proof(file);
      for (embed::Mode mode : kModes) {
        llproof::CertificateOptions opts;
        opts.mode = mode;
        for (const llproof::DkFile& f :
             llproof::emit_bundle(test::theory(pf.theory), opts, std::make_pair(pf.goal, pf.root)))
          round_trip(f, file);
      }
    }
  });

  return failures == 0 ? 0 : 1;
}
