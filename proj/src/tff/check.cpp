#include "lpm/tff/check.hpp"

#include <algorithm>
#include <map>

#include "lpm/dk/syntax.hpp"

namespace lpm::tff {

using E = TffErrorKind;

std::string_view to_string(TffErrorKind kind) {
  switch (kind) {
    case E::UnknownConstructor: return "unknown-constructor";
    case E::UnknownSymbol: return "unknown-symbol";
    case E::UnboundTypeVariable: return "unbound-type-variable";
    case E::UnboundVariable: return "unbound-variable";
    case E::ArityMismatch: return "arity-mismatch";
    case E::ArgTypeMismatch: return "arg-type-mismatch";
    case E::EqTypeMismatch: return "eq-type-mismatch";
    case E::NonAtomicLhs: return "non-atomic-lhs";
    case E::FvViolation: return "fv-violation";
    case E::RuleTypeMismatch: return "rule-type-mismatch";
    case E::DuplicateName: return "duplicate-name";
    case E::DuplicateVariable: return "duplicate-variable";
    case E::InvalidName: return "invalid-name";
  }
  return "?";
}

static std::string render(TffErrorKind kind, const std::string& message, int item) {
  std::string out;
  if (item >= 0) out = "item " + std::to_string(item) + ": ";
  return out + std::string(to_string(kind)) + ": " + message;
}

TffError::TffError(TffErrorKind kind, const std::string& message, int item)
    : std::runtime_error(render(kind, message, item)), kind_(kind), detail_(message), item_(item) {}

bool valid_name(const std::string& name) { return dk::is_identifier(name); }

static void require_name(const std::string& name) {
  if (!valid_name(name)) throw TffError(E::InvalidName, "'" + name + "' is not an identifier");
}

namespace {

// Simultaneous replacement of type variables.
Type instantiate(const Type& t, const std::vector<std::string>& vars, const std::vector<Type>& values) {
  if (t.kind == Type::Kind::Var) {
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (vars[i] == t.name) return values[i];
    }
    return t;
  }
  Type r = t;
  for (Type& a : r.args) a = instantiate(a, vars, values);
  return r;
}

std::set<std::string> tvar_set(const Context& ctx) { return {ctx.tvars.begin(), ctx.tvars.end()}; }

void check_type_args(const Theory& thy, const Context& ctx, const std::string& symbol,
                     const std::vector<std::string>& scheme, const std::vector<Type>& given) {
  if (scheme.size() != given.size()) {
    throw TffError(E::ArityMismatch, symbol + " expects " + std::to_string(scheme.size()) + " type argument(s), got " +
                                         std::to_string(given.size()));
  }
  std::set<std::string> tvars = tvar_set(ctx);
  for (const Type& t : given) wf_type(thy, tvars, t);
}

void check_args(const Theory& thy, const Context& ctx, const std::string& symbol, const std::vector<std::string>& tvars,
                const std::vector<Type>& params, const std::vector<Type>& type_args, const std::vector<Term>& args) {
  if (params.size() != args.size()) {
    throw TffError(E::ArityMismatch, symbol + " expects " + std::to_string(params.size()) + " argument(s), got " +
                                         std::to_string(args.size()));
  }
  for (std::size_t i = 0; i < args.size(); ++i) {
    Type expected = instantiate(params[i], tvars, type_args);
    Type actual = infer_term(thy, ctx, args[i]);
    if (!(expected == actual)) {
      throw TffError(E::ArgTypeMismatch, "argument " + std::to_string(i + 1) + " of " + symbol + " has type " +
                                             to_string(actual) + ", expected " + to_string(expected));
    }
  }
}

void check_scheme(const Theory& thy, const std::vector<std::string>& tvars, const std::vector<Type>& types) {
  std::set<std::string> seen;
  for (const std::string& a : tvars) {
    require_name(a);
    if (!seen.insert(a).second) throw TffError(E::DuplicateVariable, "type variable " + a + " bound twice");
  }
  for (const Type& t : types) wf_type(thy, seen, t);
}

void check_fv(const std::set<std::string>& inner, const std::set<std::string>& outer, const std::string& what) {
  for (const std::string& x : inner) {
    if (!outer.count(x)) throw TffError(E::FvViolation, x + " occurs free in the " + what);
  }
}

struct ItemChecker {
  const Theory& prefix;

  void declare(const std::string& name) const {
    require_name(name);
    if (prefix.declares(name)) throw TffError(E::DuplicateName, name + " is already declared");
  }

  void operator()(const TypeDecl& d) const {
    declare(d.name);
    if (d.arity < 0) throw TffError(E::ArityMismatch, "negative arity for " + d.name);
  }
  void operator()(const FunDecl& d) const {
    declare(d.name);
    std::vector<Type> all = d.params;
    all.push_back(d.result);
    check_scheme(prefix, d.tvars, all);
  }
  void operator()(const PredDecl& d) const {
    declare(d.name);
    check_scheme(prefix, d.tvars, d.params);
  }
  void operator()(const Axiom& a) const {
    declare(a.name);
    wf_formula(prefix, Context{}, a.body);
  }
  void operator()(const TermRule& r) const {
    wf_context(prefix, r.ctx);
    if (r.lhs.kind != Term::Kind::Fun) throw TffError(E::NonAtomicLhs, "left-hand side is a variable");
    Type tl = infer_term(prefix, r.ctx, r.lhs);
    Type tr = infer_term(prefix, r.ctx, r.rhs);
    if (!(tl == tr)) {
      throw TffError(E::RuleTypeMismatch, "sides have types " + to_string(tl) + " and " + to_string(tr));
    }
    check_bounds(free_vars(r.lhs), free_vars(r.rhs), free_type_vars(r.lhs), free_type_vars(r.rhs), r.ctx);
  }
  void operator()(const PropRule& r) const {
    wf_context(prefix, r.ctx);
    if (!is_atomic(r.lhs)) throw TffError(E::NonAtomicLhs, "left-hand side " + to_string(r.lhs) + " is not atomic");
    wf_formula(prefix, r.ctx, r.lhs);
    wf_formula(prefix, r.ctx, r.rhs);
    check_bounds(free_vars(r.lhs), free_vars(r.rhs), free_type_vars(r.lhs), free_type_vars(r.rhs), r.ctx);
  }
  void operator()(const Extension& e) const { require_name(e.name); }

  static void check_bounds(const std::set<std::string>& lv, const std::set<std::string>& rv,
                           const std::set<std::string>& ltv, const std::set<std::string>& rtv, const Context& ctx) {
    std::set<std::string> delta;
    for (const auto& [x, t] : ctx.vars) delta.insert(x);
    check_fv(rv, lv, "right-hand side but not the left");
    check_fv(lv, delta, "left-hand side but is not a rule variable");
    check_fv(rtv, ltv, "right-hand side but not the left");
  }
};

}  // namespace

void wf_type(const Theory& thy, const std::set<std::string>& tvars, const Type& t) {
  if (t.kind == Type::Kind::Var) {
    if (!tvars.count(t.name)) throw TffError(E::UnboundTypeVariable, t.name);
    return;
  }
  const TypeDecl* d = thy.find_type(t.name);
  if (!d) throw TffError(E::UnknownConstructor, t.name);
  if (static_cast<std::size_t>(d->arity) != t.args.size()) {
    throw TffError(E::ArityMismatch, t.name + "/" + std::to_string(d->arity) + " applied to " +
                                         std::to_string(t.args.size()) + " argument(s)");
  }
  for (const Type& a : t.args) wf_type(thy, tvars, a);
}

Type infer_term(const Theory& thy, const Context& ctx, const Term& e) {
  if (e.kind == Term::Kind::Var) {
    for (auto it = ctx.vars.rbegin(); it != ctx.vars.rend(); ++it) {
      if (it->first == e.name) return it->second;
    }
    throw TffError(E::UnboundVariable, e.name);
  }
  const FunDecl* d = thy.find_fun(e.name);
  if (!d) throw TffError(E::UnknownSymbol, e.name);
  check_type_args(thy, ctx, e.name, d->tvars, e.type_args);
  check_args(thy, ctx, e.name, d->tvars, d->params, e.type_args, e.args);
  return instantiate(d->result, d->tvars, e.type_args);
}

void wf_formula(const Theory& thy, const Context& ctx, const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind) {
    case K::Top:
    case K::Bottom:
      return;
    case K::Eq: {
      wf_type(thy, tvar_set(ctx), f.type);
      for (const Term& side : f.args) {
        Type t = infer_term(thy, ctx, side);
        if (!(t == f.type)) {
          throw TffError(E::EqTypeMismatch,
                         to_string(side) + " has type " + to_string(t) + ", equality is at " + to_string(f.type));
        }
      }
      return;
    }
    case K::Pred: {
      const PredDecl* d = thy.find_pred(f.name);
      if (!d) throw TffError(E::UnknownSymbol, f.name);
      check_type_args(thy, ctx, f.name, d->tvars, f.type_args);
      check_args(thy, ctx, f.name, d->tvars, d->params, f.type_args, f.args);
      return;
    }
    case K::Forall:
    case K::Exists: {
      require_name(f.name);
      wf_type(thy, tvar_set(ctx), f.type);
      Context inner = ctx;
      inner.vars.emplace_back(f.name, f.type);
      wf_formula(thy, inner, f.sub[0]);
      return;
    }
    case K::ForallType:
    case K::ExistsType: {
      require_name(f.name);
      Context inner = ctx;
      inner.tvars.push_back(f.name);
      wf_formula(thy, inner, f.sub[0]);
      return;
    }
    default:
      for (const Formula& s : f.sub) wf_formula(thy, ctx, s);
  }
}

void wf_context(const Theory& thy, const Context& ctx) {
  std::set<std::string> tvars;
  for (const std::string& a : ctx.tvars) {
    require_name(a);
    if (!tvars.insert(a).second) throw TffError(E::DuplicateVariable, "type variable " + a + " bound twice");
  }
  std::set<std::string> seen;
  for (const auto& [x, t] : ctx.vars) {
    require_name(x);
    if (tvars.count(x) || !seen.insert(x).second) throw TffError(E::DuplicateVariable, x + " bound twice");
    wf_type(thy, tvars, t);
  }
}

void wf_theory(const Theory& thy) {
  require_name(thy.name);
  Theory prefix{thy.name, {}};
  prefix.items.reserve(thy.items.size());
  for (std::size_t i = 0; i < thy.items.size(); ++i) {
    try {
      std::visit(ItemChecker{prefix}, thy.items[i]);
    } catch (const TffError& e) {
      throw e.at_item(static_cast<int>(i));
    }
    prefix.items.push_back(thy.items[i]);
  }
}

}  // namespace lpm::tff
