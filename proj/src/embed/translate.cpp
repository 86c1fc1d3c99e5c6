#include "lpm/embed/translate.hpp"

#include "lpm/dk/loader.hpp"
#include "lpm/dk/quote.hpp"

namespace lpm::embed {

using kernel::Name;
using kernel::Term;

void Scope::push(Kind kind, std::string name, Term type) { entries_.push_back({kind, std::move(name), std::move(type)}); }

void Scope::pop() { entries_.pop_back(); }

std::optional<std::uint32_t> Scope::find(Kind kind, const std::string& name) const {
  for (std::size_t i = entries_.size(); i-- > 0;) {
    if (entries_[i].kind == kind && entries_[i].name == name) {
      return static_cast<std::uint32_t>(entries_.size() - 1 - i);
    }
  }
  return std::nullopt;
}

std::vector<std::string> Scope::names() const {
  std::vector<std::string> out;
  for (const Binder& b : entries_) out.push_back(b.name);
  return out;
}

kernel::RuleContext Scope::context() const {
  kernel::RuleContext out;
  for (const Binder& b : entries_) out.emplace_back(Name(b.name), b.type);
  return out;
}

const Logic& Logic::get() {
  static const Logic logic = [] {
    auto c = [](std::string_view n) { return kernel::mk_const(std::string(kLogicModule) + "." + std::string(n)); };
    return Logic{c("Prop"), c("prf"),  c("type"),   c("term"),   c("True"),       c("False"),
                 c("not"),  c("and"),  c("or"),     c("imp"),    c("eqv"),        c("forall"),
                 c("foralltype"), c("exists"), c("existstype"), c("eq")};
  }();
  return logic;
}

Term Translator::symbol(const std::string& name) const { return kernel::mk_const(module_ + "." + name); }

Term Translator::type(const tff::Type& t, Scope& scope) const {
  if (t.kind == tff::Type::Kind::Var) {
    if (auto i = scope.find(Scope::Kind::TypeVar, t.name)) return kernel::mk_var(*i);
    throw TranslateError("unbound type variable " + t.name);
  }
  if (t.args.empty()) {
    if (auto i = scope.find(Scope::Kind::FreshType, t.name)) return kernel::mk_var(*i);
  }
  Term out = symbol(t.name);
  for (const tff::Type& a : t.args) out = kernel::mk_app(out, type(a, scope));
  return out;
}

Term Translator::term(const tff::Term& e, Scope& scope) const {
  if (e.kind == tff::Term::Kind::Var) {
    if (auto i = scope.find(Scope::Kind::TermVar, e.name)) return kernel::mk_var(*i);
    throw TranslateError("unbound variable " + e.name);
  }
  if (e.type_args.empty() && e.args.empty()) {
    if (auto i = scope.find(Scope::Kind::FreshConst, e.name)) return kernel::mk_var(*i);
  }
  Term out = symbol(e.name);
  for (const tff::Type& a : e.type_args) out = kernel::mk_app(out, type(a, scope));
  for (const tff::Term& a : e.args) out = kernel::mk_app(out, term(a, scope));
  return out;
}

Term Translator::term_type(const tff::Type& t, Scope& scope) const {
  return kernel::mk_app(Logic::get().term, type(t, scope));
}

Term Translator::proof_type(const tff::Formula& f, Scope& scope) const {
  return kernel::mk_app(Logic::get().prf, formula(f, scope));
}

Term Translator::abstraction(const std::string& x, const tff::Type& t, const tff::Formula& body, Scope& scope) const {
  Term dom = term_type(t, scope);
  scope.push(Scope::Kind::TermVar, x, dom);
  Term b;
  try {
    b = formula(body, scope);
  } catch (...) {
    scope.pop();
    throw;
  }
  scope.pop();
  return kernel::mk_lam(Name(x), dom, b);
}

Term Translator::type_abstraction(const std::string& a, const tff::Formula& body, Scope& scope) const {
  const Logic& L = Logic::get();
  scope.push(Scope::Kind::TypeVar, a, L.type);
  Term b;
  try {
    b = formula(body, scope);
  } catch (...) {
    scope.pop();
    throw;
  }
  scope.pop();
  return kernel::mk_lam(Name(a), L.type, b);
}

Term Translator::formula(const tff::Formula& f, Scope& scope) const {
  using K = tff::Formula::Kind;
  const Logic& L = Logic::get();
  auto app = [](Term fn, std::initializer_list<Term> args) {
    for (const Term& a : args) fn = kernel::mk_app(fn, a);
    return fn;
  };
  switch (f.kind) {
    case K::Top: return L.True;
    case K::Bottom: return L.False;
    case K::Not: return app(L.not_, {formula(f.sub[0], scope)});
    case K::And: return app(L.and_, {formula(f.sub[0], scope), formula(f.sub[1], scope)});
    case K::Or: return app(L.or_, {formula(f.sub[0], scope), formula(f.sub[1], scope)});
    case K::Implies: return app(L.imp, {formula(f.sub[0], scope), formula(f.sub[1], scope)});
    case K::Iff: return app(L.eqv, {formula(f.sub[0], scope), formula(f.sub[1], scope)});
    case K::Eq: return app(L.eq, {type(f.type, scope), term(f.args[0], scope), term(f.args[1], scope)});
    case K::Pred: {
      Term out = symbol(f.name);
      for (const tff::Type& a : f.type_args) out = kernel::mk_app(out, type(a, scope));
      for (const tff::Term& a : f.args) out = kernel::mk_app(out, term(a, scope));
      return out;
    }
    case K::Forall:
    case K::Exists:
      return app(f.kind == K::Forall ? L.forall : L.exists,
                 {type(f.type, scope), abstraction(f.name, f.type, f.sub[0], scope)});
    case K::ForallType:
    case K::ExistsType:
      return app(f.kind == K::ForallType ? L.foralltype : L.existstype, {type_abstraction(f.name, f.sub[0], scope)});
  }
  throw TranslateError("malformed formula");
}

void Translator::bind_context(const tff::Context& ctx, Scope& scope) const {
  for (const std::string& a : ctx.tvars) scope.push(Scope::Kind::TypeVar, a, Logic::get().type);
  for (const auto& [x, t] : ctx.vars) scope.push(Scope::Kind::TermVar, x, term_type(t, scope));
}

Term translate_type(const tff::Theory& thy, const tff::Type& t, const tff::Context& ctx) {
  Translator tr(thy.name);
  Scope scope;
  tr.bind_context(ctx, scope);
  return tr.type(t, scope);
}

Term translate_term(const tff::Theory& thy, const tff::Term& e, const tff::Context& ctx) {
  Translator tr(thy.name);
  Scope scope;
  tr.bind_context(ctx, scope);
  return tr.term(e, scope);
}

Term translate_formula(const tff::Theory& thy, const tff::Formula& f, const tff::Context& ctx) {
  Translator tr(thy.name);
  Scope scope;
  tr.bind_context(ctx, scope);
  return tr.formula(f, scope);
}

kernel::RuleContext translate_context(const tff::Theory& thy, const tff::Context& ctx) {
  Translator tr(thy.name);
  Scope scope;
  tr.bind_context(ctx, scope);
  return scope.context();
}

bool reserved_module(const std::string& name) { return name == "logic" || name == "rules" || name == "cert"; }

namespace {

// Πα1..αm : type. term τ1 -> ... -> term τn -> result, where result is
// term τ for functions and Prop for predicates.
Term scheme(const Translator& tr, const std::vector<std::string>& tvars, const std::vector<tff::Type>& params,
            const std::optional<tff::Type>& result) {
  const Logic& L = Logic::get();
  Scope scope;
  for (const std::string& a : tvars) scope.push(Scope::Kind::TypeVar, a, L.type);
  std::vector<Term> doms;
  for (const tff::Type& p : params) {
    doms.push_back(tr.term_type(p, scope));
    scope.push(Scope::Kind::Hypothesis, "", doms.back());
  }
  Term body = result ? tr.term_type(*result, scope) : L.Prop;
  for (std::size_t i = doms.size(); i-- > 0;) body = kernel::mk_pi(Name(), doms[i], body);
  for (std::size_t i = tvars.size(); i-- > 0;) body = kernel::mk_pi(Name(tvars[i]), L.type, body);
  return body;
}

struct ItemTranslator {
  const tff::Theory& thy;
  const Translator& tr;
  const ExtensionHook& extensions;
  std::vector<dk::Entry>& out;

  void operator()(const tff::TypeDecl& d) {
    const Logic& L = Logic::get();
    Term t = L.type;
    for (int i = 0; i < d.arity; ++i) t = kernel::mk_pi(Name(), L.type, t);
    out.push_back(dk::quote_decl(d.name, t, tr.module()));
  }
  void operator()(const tff::FunDecl& d) {
    out.push_back(dk::quote_decl(d.name, scheme(tr, d.tvars, d.params, d.result), tr.module()));
  }
  void operator()(const tff::PredDecl& d) {
    out.push_back(dk::quote_decl(d.name, scheme(tr, d.tvars, d.params, std::nullopt), tr.module()));
  }
  void operator()(const tff::Axiom& a) {
    Scope scope;
    out.push_back(dk::quote_decl(a.name, tr.proof_type(a.body, scope), tr.module()));
  }
  void operator()(const tff::TermRule& r) {
    Scope scope;
    tr.bind_context(r.ctx, scope);
    out.push_back(dk::quote_rule(scope.context(), tr.term(r.lhs, scope), tr.term(r.rhs, scope), tr.module()));
  }
  void operator()(const tff::PropRule& r) {
    Scope scope;
    tr.bind_context(r.ctx, scope);
    out.push_back(dk::quote_rule(scope.context(), tr.formula(r.lhs, scope), tr.formula(r.rhs, scope), tr.module()));
  }
  void operator()(const tff::Extension& e) {
    std::optional<std::vector<dk::Entry>> entries;
    if (extensions) entries = extensions(thy, e.name);
    if (!entries) throw TranslateError("unregistered extension " + e.name);
    out.insert(out.end(), entries->begin(), entries->end());
  }
};

}  // namespace

std::vector<dk::Entry> theory_entries(const tff::Theory& thy, const ExtensionHook& extensions) {
  if (reserved_module(thy.name)) throw TranslateError("'" + thy.name + "' is reserved and cannot name a theory");
  Translator tr(thy.name);
  std::vector<dk::Entry> out;
  ItemTranslator it{thy, tr, extensions, out};
  for (const tff::Item& item : thy.items) std::visit(it, item);
  return out;
}

kernel::Signature translate_theory(const tff::Theory& thy, Mode mode, const kernel::Limits& limits,
                                   const ExtensionHook& extensions) {
  kernel::Signature sig = prelude_signature(mode, limits);
  dk::load_entries(sig, thy.name, theory_entries(thy, extensions), limits);
  return sig;
}

}  // namespace lpm::embed
