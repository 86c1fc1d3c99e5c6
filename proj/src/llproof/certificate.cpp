#include "lpm/llproof/certificate.hpp"

#include <map>
#include <set>

#include "lpm/dk/loader.hpp"
#include "lpm/dk/quote.hpp"
#include "lpm/embed/translate.hpp"
#include "lpm/kernel/error.hpp"
#include "lpm/kernel/typing.hpp"
#include "lpm/llproof/rules_prelude.hpp"
#include "lpm/llproof/shape.hpp"
#include "lpm/tff/check.hpp"
#include "lpm/tff/format.hpp"

namespace lpm::llproof {

using embed::Scope;
using kernel::Name;
using kernel::Term;

namespace {

const std::string kCert(kCertModule);

// ---- lemma text -----------------------------------------------------------

std::string idx(const char* base, std::size_t i) { return base + std::to_string(i); }

std::string apply_text(const std::string& head, const std::vector<std::string>& args) {
  if (args.empty()) return head;
  std::string out = "(" + head;
  for (const std::string& a : args) out += " " + a;
  return out + ")";
}

std::string join(const std::vector<std::string>& xs, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? std::string(sep) : "") + xs[i];
  return out;
}

// The i-th mixed argument list u_1..u_{i-1} x t_{i+1}..t_n (1-based i).
std::vector<std::string> mixed(std::size_t n, std::size_t i, const std::string& x) {
  std::vector<std::string> out;
  for (std::size_t j = 1; j <= n; ++j) out.push_back(j < i ? idx("u", j) : j == i ? x : idx("t", j));
  return out;
}

// u_1..u_i t_{i+1}..t_n.
std::vector<std::string> rewritten(std::size_t n, std::size_t i) {
  std::vector<std::string> out;
  for (std::size_t j = 1; j <= n; ++j) out.push_back(idx(j <= i ? "u" : "t", j));
  return out;
}

std::vector<std::string> all(const char* base, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t j = 1; j <= n; ++j) out.push_back(idx(base, j));
  return out;
}

// Shared binders a_i, f/P, t_i, u_i, k_i of both lemma families.
std::vector<std::string> lemma_binders(std::size_t n, bool fun) {
  std::vector<std::string> b;
  for (std::size_t i = 1; i <= n; ++i) b.push_back(idx("a", i) + " : logic.type");
  std::vector<std::string> doms;
  for (std::size_t i = 1; i <= n; ++i) doms.push_back("logic.term " + idx("a", i));
  if (fun) {
    b.push_back("b : logic.type");
    doms.push_back("logic.term b");
    b.push_back("f : (" + join(doms, " -> ") + ")");
  } else {
    doms.push_back("logic.Prop");
    b.push_back("P : (" + join(doms, " -> ") + ")");
  }
  for (const char* v : {"t", "u"}) {
    for (std::size_t i = 1; i <= n; ++i) b.push_back(idx(v, i) + " : logic.term " + idx("a", i));
  }
  for (std::size_t i = 1; i <= n; ++i) {
    b.push_back(idx("k", i) + " : (logic.prf (logic.not (logic.eq " + idx("a", i) + " " + idx("t", i) + " " +
                idx("u", i) + ")) -> logic.prf logic.False)");
  }
  return b;
}

// R_Subst chain rewriting t_i to u_i inside `shape`, starting from hypothesis
// `g` and closed by `close(g_n)`.
std::string subst_chain(std::size_t n, const std::function<std::string(const std::vector<std::string>&)>& shape,
                        const std::function<std::string(const std::string&)>& close) {
  std::function<std::string(std::size_t, const std::string&)> step = [&](std::size_t i, const std::string& g) {
    if (i > n) return close(g);
    const std::string a = idx("a", i);
    const std::string gi = idx("g", i);
    return "rules.R_Subst " + a + " (z : logic.term " + a + " => " + shape(mixed(n, i, "z")) + ") " + idx("t", i) +
           " " + idx("u", i) + " " + idx("k", i) + " (" + gi + " : logic.prf " + shape(rewritten(n, i)) +
           " => " + step(i + 1, gi) + ") " + g;
  };
  return step(1, "h1");
}

std::string lemma_text(const std::string& name, std::vector<std::string> binders, const std::string& proof) {
  std::string type = join(binders, " -> ") + " -> logic.prf logic.False";
  std::string body;
  for (const std::string& b : binders) body += b + " => ";
  return "def " + name + " : " + type + " := " + body + proof + ".\n";
}

}  // namespace

std::vector<dk::Entry> pred_lemma_entries(std::size_t n) {
  std::vector<std::string> b = lemma_binders(n, false);
  auto atom = [](const std::vector<std::string>& args) { return apply_text("P", args); };
  b.push_back("h1 : logic.prf " + atom(all("t", n)));
  b.push_back("h2 : logic.prf (logic.not " + atom(all("u", n)) + ")");
  std::string proof =
      subst_chain(n, atom, [&](const std::string& g) { return "rules.R_Ax " + atom(all("u", n)) + " " + g + " h2"; });
  return dk::parse_file(lemma_text(pred_lemma(n), b, proof));
}

std::vector<dk::Entry> fun_lemma_entries(std::size_t n) {
  std::vector<std::string> b = lemma_binders(n, true);
  const std::string target = apply_text("f", all("u", n));
  auto diseq = [&](const std::vector<std::string>& args) {
    return "(logic.not (logic.eq b " + apply_text("f", args) + " " + target + "))";
  };
  b.push_back("h1 : logic.prf " + diseq(all("t", n)));
  std::string proof = subst_chain(n, diseq, [&](const std::string& g) { return "rules.R_neq b " + target + " " + g; });
  return dk::parse_file(lemma_text(fun_lemma(n), b, proof));
}

namespace {

// ---- compilation ----------------------------------------------------------

struct Hypothesis {
  tff::Formula formula;
  // Position in the scope for bound hypotheses; unset for theory axioms.
  std::optional<std::size_t> position;
  Term constant;
};

struct Compiler {
  const tff::Theory& thy;
  const ExtRegistry& registry;
  embed::Translator tr;
  Scope scope;
  std::vector<Hypothesis> hyps;
  std::set<std::size_t> pred_arities;
  std::set<std::size_t> fun_arities;
  std::vector<CompiledNode> nodes;
  Path path;

  Compiler(const tff::Theory& t, const ExtRegistry& r) : thy(t), registry(r), tr(t.name) {
    for (const tff::Item& item : thy.items) {
      if (const auto* ax = std::get_if<tff::Axiom>(&item)) {
        hyps.push_back({ax->body, std::nullopt, tr.symbol(ax->name)});
      }
    }
  }

  [[noreturn]] void fail(const std::string& kind, const std::string& msg) const {
    throw ProofError(kind, path_string(path), msg);
  }

  template <class F>
  auto translating(F&& f) -> decltype(f()) {
    try {
      return f();
    } catch (const embed::TranslateError& e) {
      fail("ill-formed", e.what());
    }
  }

  Term kernel_arg(const KernelArg& a) {
    if (const auto* s = std::get_if<Symbol>(&a)) {
      Term out = tr.symbol(s->name);
      for (const tff::Type& t : s->type_args) out = kernel::mk_app(out, tr.type(t, scope));
      return out;
    }
    const Arg& arg = std::get<Arg>(a);
    switch (kind_of(arg)) {
      case ArgKind::Type: return tr.type(std::get<tff::Type>(arg), scope);
      case ArgKind::Term: return tr.term(std::get<tff::Term>(arg), scope);
      case ArgKind::Formula: return tr.formula(std::get<tff::Formula>(arg), scope);
      case ArgKind::Abstraction: {
        const auto& p = std::get<Abstraction>(arg);
        return tr.abstraction(p.var, p.type, p.body, scope);
      }
      case ArgKind::TypeAbstraction: {
        const auto& p = std::get<TypeAbstraction>(arg);
        return tr.type_abstraction(p.var, p.body, scope);
      }
    }
    fail("ill-formed", "bad parameter");
  }

  Term lookup(const tff::Formula& f) {
    for (std::size_t i = hyps.size(); i-- > 0;) {
      if (!tff::alpha_equal(hyps[i].formula, f)) continue;
      if (hyps[i].position) return kernel::mk_var(static_cast<std::uint32_t>(scope.size() - 1 - *hyps[i].position));
      return hyps[i].constant;
    }
    fail("missing-hypothesis", "no hypothesis " + tff::to_string(f));
  }

  void check_fresh(const std::string& name) {
    if (!dk::is_identifier(name) || dk::is_keyword(name) || tff::is_reserved(name)) {
      fail("ill-formed", "'" + name + "' is not a valid name");
    }
    if (thy.declares(name)) fail("freshness-violation", "'" + name + "' is declared by theory " + thy.name);
    if (scope.binds(Scope::Kind::FreshConst, name) || scope.binds(Scope::Kind::FreshType, name)) {
      fail("freshness-violation", "'" + name + "' already occurs in the branch");
    }
  }

  std::string hyp_name() {
    std::vector<std::string> taken = scope.names();
    std::set<std::string> used(taken.begin(), taken.end());
    for (std::size_t k = 0;; ++k) {
      std::string h = "h" + std::to_string(k);
      if (!used.count(h) && !thy.declares(h)) return h;
    }
  }

  // Binds the premise's fresh name and hypotheses, compiles the subproof and
  // returns its continuation λ.
  Term premise(const Node& n, const Premise& p, const std::vector<tff::Formula>& hs, const Node& sub) {
    struct Bound {
      Name name;
      Term type;
    };
    std::vector<Bound> bound;
    const std::size_t hyps_before = hyps.size();
    auto unwind = [&] {
      for (std::size_t i = 0; i < bound.size(); ++i) scope.pop();
      hyps.resize(hyps_before);
    };
    try {
      if (p.fresh != Premise::Fresh::None) {
        const bool type = p.fresh == Premise::Fresh::Type;
        Term dom = type ? embed::Logic::get().type : translating([&] { return tr.term_type(p.fresh_type, scope); });
        scope.push(type ? Scope::Kind::FreshType : Scope::Kind::FreshConst, n.fresh, dom);
        bound.push_back({Name(n.fresh), dom});
      }
      for (const tff::Formula& h : hs) {
        Term dom = translating([&] { return tr.proof_type(h, scope); });
        std::string name = hyp_name();
        hyps.push_back({h, scope.size(), {}});
        scope.push(Scope::Kind::Hypothesis, name, dom);
        bound.push_back({Name(name), dom});
      }
      Term body = compile(sub);
      for (std::size_t i = bound.size(); i-- > 0;) body = kernel::mk_lam(bound[i].name, bound[i].type, body);
      unwind();
      return body;
    } catch (...) {
      unwind();
      throw;
    }
  }

  Term compile(const Node& n) {
    const std::size_t index = nodes.size();
    nodes.push_back({path, n.rule, scope.context(), {}});
    Shape shape = shape_of(thy, n, registry, path);
    if (n.rule == Rule::Pred) pred_arities.insert(n.pairs.size());
    if (n.rule == Rule::Fun) fun_arities.insert(n.pairs.size());
    const std::string tag(rule_tag(n.rule));
    if (n.premises.size() != shape.premises.size()) {
      fail("ill-formed", tag + " needs " + std::to_string(shape.premises.size()) + " premise(s), got " +
                             std::to_string(n.premises.size()));
    }
    const std::vector<tff::Formula>& conclusions = n.conclusions ? *n.conclusions : shape.conclusions;
    if (conclusions.size() != shape.conclusions.size()) {
      fail("ill-formed", tag + " has " + std::to_string(shape.conclusions.size()) + " principal hypothesis(es), got " +
                             std::to_string(conclusions.size()));
    }
    if (n.hypotheses) {
      if (n.hypotheses->size() != shape.premises.size()) fail("ill-formed", tag + ": hypotheses for each premise");
      for (std::size_t i = 0; i < shape.premises.size(); ++i) {
        if ((*n.hypotheses)[i].size() != shape.premises[i].hypotheses.size()) {
          fail("ill-formed", tag + ": premise " + std::to_string(i) + " adds " +
                                 std::to_string(shape.premises[i].hypotheses.size()) + " hypothesis(es)");
        }
      }
    }
    Term out = kernel::mk_const(Name(shape.constant));
    for (const KernelArg& a : shape.args) {
      out = kernel::mk_app(out, translating([&] { return kernel_arg(a); }));
    }
    for (std::size_t i = 0; i < shape.premises.size(); ++i) {
      const auto& hs = n.hypotheses ? (*n.hypotheses)[i] : shape.premises[i].hypotheses;
      if (shape.premises[i].fresh != Premise::Fresh::None) check_fresh(n.fresh);
      path.push_back(static_cast<int>(i));
      Term k = premise(n, shape.premises[i], hs, n.premises[i]);
      path.pop_back();
      out = kernel::mk_app(out, k);
    }
    for (const tff::Formula& c : conclusions) out = kernel::mk_app(out, lookup(c));
    nodes[index].term = out;
    return out;
  }
};

std::string kernel_kind(kernel::ErrorKind k) { return std::string(kernel::to_string(k)); }

Verdict reject(std::string kind, std::string path, const Node& root, std::string message) {
  Verdict v;
  v.kind = std::move(kind);
  v.path = std::move(path);
  if (auto p = parse_path(v.path)) {
    if (const Node* n = node_at(root, *p)) v.rule = std::string(rule_tag(n->rule));
  }
  v.message = std::move(message);
  return v;
}

// Deepest compiled node whose own term fails against prf False.
struct Localizer {
  const kernel::Signature& sig;
  const kernel::Limits& limits;
  const std::vector<CompiledNode>& nodes;
  std::map<Path, std::size_t> by_path;

  Localizer(const kernel::Signature& s, const kernel::Limits& l, const std::vector<CompiledNode>& ns)
      : sig(s), limits(l), nodes(ns) {
    for (std::size_t i = 0; i < nodes.size(); ++i) by_path[nodes[i].path] = i;
  }

  std::optional<kernel::KernelError> check(std::size_t i) const {
    const CompiledNode& n = nodes[i];
    if (!n.term) return std::nullopt;
    kernel::Context ctx;
    for (const auto& [name, type] : n.context) ctx.push(name, type);
    kernel::Fuel fuel(limits);
    try {
      kernel::check(sig, ctx, n.term, kernel::mk_app(embed::Logic::get().prf, embed::Logic::get().False), fuel);
    } catch (const kernel::KernelError& e) {
      return e;
    }
    return std::nullopt;
  }

  // Walks down from the root through failing children.
  std::optional<std::pair<std::size_t, kernel::KernelError>> find() const {
    auto root = check(0);
    if (!root) return std::nullopt;
    std::size_t at = 0;
    kernel::KernelError err = *root;
    for (;;) {
      bool descended = false;
      for (int k = 0;; ++k) {
        Path child = nodes[at].path;
        child.push_back(k);
        auto it = by_path.find(child);
        if (it == by_path.end()) break;
        if (auto e = check(it->second)) {
          at = it->second;
          err = *e;
          descended = true;
          break;
        }
      }
      if (!descended) return std::make_pair(at, err);
    }
  }
};

}  // namespace

Certificate compile_certificate(const tff::Theory& thy, const tff::Formula& goal, const Node& root,
                                const ExtRegistry& registry) {
  Compiler c(thy, registry);
  Term negated;
  try {
    negated = c.tr.proof_type(tff::neg(goal), c.scope);
  } catch (const embed::TranslateError& e) {
    throw ProofError("ill-formed", "goal", e.what());
  }
  const std::string h0 = c.hyp_name();
  c.hyps.push_back({tff::neg(goal), 0, {}});
  c.scope.push(Scope::Kind::Hypothesis, h0, negated);
  Term proof = c.compile(root);

  Certificate cert;
  const embed::Logic& L = embed::Logic::get();
  cert.type = kernel::mk_pi(Name(), negated, kernel::mk_app(L.prf, L.False));
  cert.body = kernel::mk_lam(Name(h0), negated, proof);
  for (std::size_t n : c.pred_arities) {
    auto e = pred_lemma_entries(n);
    cert.entries.insert(cert.entries.end(), e.begin(), e.end());
  }
  for (std::size_t n : c.fun_arities) {
    auto e = fun_lemma_entries(n);
    cert.entries.insert(cert.entries.end(), e.begin(), e.end());
  }
  cert.entries.push_back(dk::quote_def("goal", cert.type, cert.body, kCert));
  cert.nodes = std::move(c.nodes);
  return cert;
}

std::string Verdict::describe() const {
  if (accepted) return "accepted";
  std::string out = "rejected";
  if (!path.empty()) out += " at " + path;
  if (!rule.empty()) out += " (" + rule + ")";
  return out + ": " + kind + ": " + message;
}

kernel::Signature theory_signature(const tff::Theory& thy, embed::Mode mode, const kernel::Limits& limits,
                                   const ExtRegistry& registry) {
  kernel::Signature sig = base_signature(mode, limits);
  dk::load_entries(sig, thy.name, embed::theory_entries(thy, registry.hook()), limits);
  return sig;
}

Verdict check_certificate(const tff::Theory& thy, const tff::Formula& goal, const Node& root,
                          const CertificateOptions& options, const ExtRegistry& registry) {
  kernel::Signature base;
  try {
    base = theory_signature(thy, options.mode, options.limits, registry);
  } catch (const dk::LoadError& e) {
    return reject(kernel_kind(e.kind()), "theory", root, e.detail());
  } catch (const embed::TranslateError& e) {
    return reject("ill-formed", "theory", root, e.what());
  }
  return check_certificate(base, thy, goal, root, options, registry);
}

Verdict check_certificate(const kernel::Signature& base, const tff::Theory& thy, const tff::Formula& goal,
                          const Node& root, const CertificateOptions& options, const ExtRegistry& registry) {
  try {
    tff::wf_formula(thy, {}, goal);
  } catch (const tff::TffError& e) {
    return reject(std::string(tff::to_string(e.kind())), "goal", root, e.detail());
  }

  std::map<Path, Path> origin;
  const bool eliminate = options.eliminate_pred_fun && contains_pred_fun(root);
  auto source_path = [&](const std::string& p) {
    if (!eliminate) return p;
    auto parsed = parse_path(p);
    if (!parsed) return p;
    auto it = origin.find(*parsed);
    return it == origin.end() ? p : path_string(it->second);
  };

  Certificate cert;
  try {
    Node tree = eliminate ? eliminate_pred_fun(root, &origin) : root;
    cert = compile_certificate(thy, goal, tree, registry);
  } catch (const ProofError& e) {
    return reject(e.kind(), source_path(e.path()), root, e.detail());
  }

  kernel::Signature sig = base;
  std::vector<dk::Entry> lemmas(cert.entries.begin(), cert.entries.end() - 1);
  try {
    dk::load_entries(sig, kCert, lemmas, options.limits);
  } catch (const dk::LoadError& e) {
    return reject(kernel_kind(e.kind()), "lemmas", root, e.detail());
  }
  try {
    kernel::Signature with_goal = sig;
    dk::load_entries(with_goal, kCert, {cert.entries.back()}, options.limits);
  } catch (const dk::LoadError& e) {
    Localizer loc(sig, options.limits, cert.nodes);
    if (auto found = loc.find()) {
      const auto& [i, err] = *found;
      return reject(kernel_kind(err.kind()), source_path(path_string(cert.nodes[i].path)), root, err.detail());
    }
    return reject(kernel_kind(e.kind()), "goal", root, e.detail());
  }
  Verdict v;
  v.accepted = true;
  return v;
}

std::vector<DkFile> emit_bundle(const tff::Theory& thy, const CertificateOptions& options,
                                const std::optional<std::pair<tff::Formula, Node>>& proof,
                                const ExtRegistry& registry) {
  std::vector<DkFile> out;
  out.push_back({std::string(embed::kLogicModule), embed::prelude(options.mode)});
  out.push_back({std::string(kRulesModule), rules_prelude(options.mode)});
  out.push_back({thy.name, embed::theory_entries(thy, registry.hook())});
  if (proof) {
    Node tree = options.eliminate_pred_fun ? eliminate_pred_fun(proof->second) : proof->second;
    out.push_back({kCert, compile_certificate(thy, proof->first, tree, registry).entries});
  }
  return out;
}

kernel::Signature load_bundle(const std::vector<DkFile>& files, const kernel::Limits& limits) {
  kernel::Signature sig;
  for (const DkFile& f : files) dk::load_entries(sig, f.module, dk::parse_file(f.text()), limits);
  return sig;
}

}  // namespace lpm::llproof
