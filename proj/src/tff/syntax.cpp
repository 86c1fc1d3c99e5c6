#include "lpm/tff/syntax.hpp"

#include <algorithm>

namespace lpm::tff {

using K = Formula::Kind;

static Formula make(K kind) {
  Formula f;
  f.kind = kind;
  return f;
}

Formula top() { return make(K::Top); }
Formula bottom() { return make(K::Bottom); }

Formula neg(Formula f) {
  Formula r = make(K::Not);
  r.sub.push_back(std::move(f));
  return r;
}

static Formula binary(K kind, Formula a, Formula b) {
  Formula r = make(kind);
  r.sub.push_back(std::move(a));
  r.sub.push_back(std::move(b));
  return r;
}

Formula conj(Formula a, Formula b) { return binary(K::And, std::move(a), std::move(b)); }
Formula disj(Formula a, Formula b) { return binary(K::Or, std::move(a), std::move(b)); }
Formula implies(Formula a, Formula b) { return binary(K::Implies, std::move(a), std::move(b)); }
Formula iff(Formula a, Formula b) { return binary(K::Iff, std::move(a), std::move(b)); }

Formula eq(Type t, Term a, Term b) {
  Formula r = make(K::Eq);
  r.type = std::move(t);
  r.args.push_back(std::move(a));
  r.args.push_back(std::move(b));
  return r;
}

Formula pred(std::string p, std::vector<Type> type_args, std::vector<Term> args) {
  Formula r = make(K::Pred);
  r.name = std::move(p);
  r.type_args = std::move(type_args);
  r.args = std::move(args);
  return r;
}

static Formula quant(K kind, std::string x, Type t, Formula body) {
  Formula r = make(kind);
  r.name = std::move(x);
  r.type = std::move(t);
  r.sub.push_back(std::move(body));
  return r;
}

Formula forall(std::string x, Type t, Formula body) { return quant(K::Forall, std::move(x), std::move(t), std::move(body)); }
Formula exists(std::string x, Type t, Formula body) { return quant(K::Exists, std::move(x), std::move(t), std::move(body)); }
Formula forall_type(std::string a, Formula body) { return quant(K::ForallType, std::move(a), Type{}, std::move(body)); }
Formula exists_type(std::string a, Formula body) { return quant(K::ExistsType, std::move(a), Type{}, std::move(body)); }

bool is_atomic(const Formula& f) { return f.kind == K::Pred || f.kind == K::Eq; }

bool is_binary(K k) { return k == K::And || k == K::Or || k == K::Implies || k == K::Iff; }

// ---------------------------------------------------------------------------
// Theory lookups

template <class T>
static const T* find_item(const std::vector<Item>& items, const std::string& name) {
  for (const Item& it : items) {
    if (const T* d = std::get_if<T>(&it); d && d->name == name) return d;
  }
  return nullptr;
}

const TypeDecl* Theory::find_type(const std::string& n) const { return find_item<TypeDecl>(items, n); }
const FunDecl* Theory::find_fun(const std::string& n) const { return find_item<FunDecl>(items, n); }
const PredDecl* Theory::find_pred(const std::string& n) const { return find_item<PredDecl>(items, n); }
const Axiom* Theory::find_axiom(const std::string& n) const { return find_item<Axiom>(items, n); }

bool Theory::declares(const std::string& n) const {
  return find_type(n) || find_fun(n) || find_pred(n) || find_axiom(n);
}

std::vector<std::string> Theory::extensions() const {
  std::vector<std::string> out;
  for (const Item& it : items) {
    if (const auto* e = std::get_if<Extension>(&it)) out.push_back(e->name);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Free variables

static void fv(const Term& t, std::set<std::string>& out) {
  if (t.kind == Term::Kind::Var) {
    out.insert(t.name);
    return;
  }
  for (const Term& a : t.args) fv(a, out);
}

static void fv(const Formula& f, std::set<std::string>& out) {
  for (const Term& a : f.args) fv(a, out);
  if (f.kind == K::Forall || f.kind == K::Exists) {
    std::set<std::string> inner;
    fv(f.sub[0], inner);
    inner.erase(f.name);
    out.insert(inner.begin(), inner.end());
    return;
  }
  for (const Formula& s : f.sub) fv(s, out);
}

static void ftv(const Type& t, std::set<std::string>& out) {
  if (t.kind == Type::Kind::Var) {
    out.insert(t.name);
    return;
  }
  for (const Type& a : t.args) ftv(a, out);
}

static void ftv(const Term& t, std::set<std::string>& out) {
  for (const Type& ty : t.type_args) ftv(ty, out);
  for (const Term& a : t.args) ftv(a, out);
}

static void ftv(const Formula& f, std::set<std::string>& out) {
  switch (f.kind) {
    case K::Eq:
    case K::Forall:
    case K::Exists:
      ftv(f.type, out);
      break;
    default:
      break;
  }
  for (const Type& ty : f.type_args) ftv(ty, out);
  for (const Term& a : f.args) ftv(a, out);
  if (f.kind == K::ForallType || f.kind == K::ExistsType) {
    std::set<std::string> inner;
    ftv(f.sub[0], inner);
    inner.erase(f.name);
    out.insert(inner.begin(), inner.end());
    return;
  }
  for (const Formula& s : f.sub) ftv(s, out);
}

std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> out;
  fv(t, out);
  return out;
}
std::set<std::string> free_vars(const Formula& f) {
  std::set<std::string> out;
  fv(f, out);
  return out;
}
std::set<std::string> free_type_vars(const Type& t) {
  std::set<std::string> out;
  ftv(t, out);
  return out;
}
std::set<std::string> free_type_vars(const Term& t) {
  std::set<std::string> out;
  ftv(t, out);
  return out;
}
std::set<std::string> free_type_vars(const Formula& f) {
  std::set<std::string> out;
  ftv(f, out);
  return out;
}

// ---------------------------------------------------------------------------
// α-equality

namespace {

using Env = std::vector<std::pair<std::string, std::string>>;

// Same binder position on both sides, or both free with the same name.
bool var_eq(const Env& env, const std::string& a, const std::string& b) {
  for (std::size_t i = env.size(); i-- > 0;) {
    bool la = env[i].first == a;
    bool rb = env[i].second == b;
    if (la || rb) return la && rb;
  }
  return a == b;
}

bool type_eq(const Type& a, const Type& b, const Env& tenv) {
  if (a.kind != b.kind) return false;
  if (a.kind == Type::Kind::Var) return var_eq(tenv, a.name, b.name);
  if (a.name != b.name || a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!type_eq(a.args[i], b.args[i], tenv)) return false;
  }
  return true;
}

bool types_eq(const std::vector<Type>& a, const std::vector<Type>& b, const Env& tenv) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!type_eq(a[i], b[i], tenv)) return false;
  }
  return true;
}

bool term_eq(const Term& a, const Term& b, const Env& env, const Env& tenv) {
  if (a.kind != b.kind) return false;
  if (a.kind == Term::Kind::Var) return var_eq(env, a.name, b.name);
  if (a.name != b.name || a.args.size() != b.args.size()) return false;
  if (!types_eq(a.type_args, b.type_args, tenv)) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!term_eq(a.args[i], b.args[i], env, tenv)) return false;
  }
  return true;
}

bool formula_eq(const Formula& a, const Formula& b, Env& env, Env& tenv) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case K::Top:
    case K::Bottom:
      return true;
    case K::Eq:
      return type_eq(a.type, b.type, tenv) && term_eq(a.args[0], b.args[0], env, tenv) &&
             term_eq(a.args[1], b.args[1], env, tenv);
    case K::Pred: {
      if (a.name != b.name || a.args.size() != b.args.size()) return false;
      if (!types_eq(a.type_args, b.type_args, tenv)) return false;
      for (std::size_t i = 0; i < a.args.size(); ++i) {
        if (!term_eq(a.args[i], b.args[i], env, tenv)) return false;
      }
      return true;
    }
    case K::Forall:
    case K::Exists: {
      if (!type_eq(a.type, b.type, tenv)) return false;
      env.emplace_back(a.name, b.name);
      bool r = formula_eq(a.sub[0], b.sub[0], env, tenv);
      env.pop_back();
      return r;
    }
    case K::ForallType:
    case K::ExistsType: {
      tenv.emplace_back(a.name, b.name);
      bool r = formula_eq(a.sub[0], b.sub[0], env, tenv);
      tenv.pop_back();
      return r;
    }
    default:
      for (std::size_t i = 0; i < a.sub.size(); ++i) {
        if (!formula_eq(a.sub[i], b.sub[i], env, tenv)) return false;
      }
      return true;
  }
}

}  // namespace

bool alpha_equal(const Formula& a, const Formula& b) {
  Env env;
  Env tenv;
  return formula_eq(a, b, env, tenv);
}

// ---------------------------------------------------------------------------
// Substitution

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  if (!avoid.count(base)) return base;
  for (int k = 1;; ++k) {
    std::string n = base + "_" + std::to_string(k);
    if (!avoid.count(n)) return n;
  }
}

Term subst(const Term& t, const std::string& x, const Term& value) {
  if (t.kind == Term::Kind::Var) return t.name == x ? value : t;
  Term r = t;
  for (Term& a : r.args) a = subst(a, x, value);
  return r;
}

Type subst_type(const Type& t, const std::string& a, const Type& value) {
  if (t.kind == Type::Kind::Var) return t.name == a ? value : t;
  Type r = t;
  for (Type& arg : r.args) arg = subst_type(arg, a, value);
  return r;
}

Term subst_type(const Term& t, const std::string& a, const Type& value) {
  Term r = t;
  for (Type& ty : r.type_args) ty = subst_type(ty, a, value);
  for (Term& arg : r.args) arg = subst_type(arg, a, value);
  return r;
}

Formula subst(const Formula& f, const std::string& x, const Term& value) {
  Formula r = f;
  for (Term& a : r.args) a = subst(a, x, value);
  switch (f.kind) {
    case K::Forall:
    case K::Exists: {
      if (f.name == x) return r;
      std::set<std::string> vfv = free_vars(value);
      if (vfv.count(f.name) && free_vars(f.sub[0]).count(x)) {
        std::set<std::string> avoid = vfv;
        std::set<std::string> body = free_vars(f.sub[0]);
        avoid.insert(body.begin(), body.end());
        avoid.insert(x);
        std::string y = fresh_name(f.name, avoid);
        r.sub[0] = subst(f.sub[0], f.name, Term::var(y));
        r.name = y;
      }
      r.sub[0] = subst(r.sub[0], x, value);
      return r;
    }
    case K::ForallType:
    case K::ExistsType: {
      std::set<std::string> vftv = free_type_vars(value);
      if (vftv.count(f.name) && free_vars(f.sub[0]).count(x)) {
        std::set<std::string> avoid = vftv;
        std::set<std::string> body = free_type_vars(f.sub[0]);
        avoid.insert(body.begin(), body.end());
        std::string b = fresh_name(f.name, avoid);
        r.sub[0] = subst_type(f.sub[0], f.name, Type::var(b));
        r.name = b;
      }
      r.sub[0] = subst(r.sub[0], x, value);
      return r;
    }
    default:
      for (Formula& s : r.sub) s = subst(s, x, value);
      return r;
  }
}

Formula subst_type(const Formula& f, const std::string& a, const Type& value) {
  Formula r = f;
  if (f.kind == K::Eq || f.kind == K::Forall || f.kind == K::Exists) r.type = subst_type(f.type, a, value);
  for (Type& ty : r.type_args) ty = subst_type(ty, a, value);
  for (Term& t : r.args) t = subst_type(t, a, value);
  if (f.kind == K::ForallType || f.kind == K::ExistsType) {
    if (f.name == a) return r;
    std::set<std::string> vftv = free_type_vars(value);
    if (vftv.count(f.name) && free_type_vars(f.sub[0]).count(a)) {
      std::set<std::string> avoid = vftv;
      std::set<std::string> body = free_type_vars(f.sub[0]);
      avoid.insert(body.begin(), body.end());
      avoid.insert(a);
      std::string b = fresh_name(f.name, avoid);
      r.sub[0] = subst_type(f.sub[0], f.name, Type::var(b));
      r.name = b;
    }
    r.sub[0] = subst_type(r.sub[0], a, value);
    return r;
  }
  for (Formula& s : r.sub) s = subst_type(s, a, value);
  return r;
}

// ---------------------------------------------------------------------------
// Printing

std::string to_string(const Type& t) {
  if (t.args.empty()) return t.name;
  std::string out = "(" + t.name;
  for (const Type& a : t.args) out += " " + to_string(a);
  return out + ")";
}

std::string to_string(const Term& t) {
  if (t.kind == Term::Kind::Var || (t.type_args.empty() && t.args.empty())) return t.name;
  std::string out = "(" + t.name;
  for (const Type& a : t.type_args) out += " " + to_string(a);
  for (const Term& a : t.args) out += " " + to_string(a);
  return out + ")";
}

static std::string_view connective(K k) {
  switch (k) {
    case K::Not: return "not";
    case K::And: return "and";
    case K::Or: return "or";
    case K::Implies: return "imp";
    case K::Iff: return "iff";
    case K::Forall: return "forall";
    case K::Exists: return "exists";
    case K::ForallType: return "forall-type";
    case K::ExistsType: return "exists-type";
    default: return "";
  }
}

std::string to_string(const Formula& f) {
  switch (f.kind) {
    case K::Top: return "top";
    case K::Bottom: return "bot";
    case K::Eq: return "(= " + to_string(f.type) + " " + to_string(f.args[0]) + " " + to_string(f.args[1]) + ")";
    case K::Pred: {
      if (f.type_args.empty() && f.args.empty()) return f.name;
      std::string out = "(" + f.name;
      for (const Type& a : f.type_args) out += " " + to_string(a);
      for (const Term& a : f.args) out += " " + to_string(a);
      return out + ")";
    }
    case K::Forall:
    case K::Exists:
      return "(" + std::string(connective(f.kind)) + " " + f.name + " " + to_string(f.type) + " " +
             to_string(f.sub[0]) + ")";
    case K::ForallType:
    case K::ExistsType:
      return "(" + std::string(connective(f.kind)) + " " + f.name + " " + to_string(f.sub[0]) + ")";
    default: {
      std::string out = "(" + std::string(connective(f.kind));
      for (const Formula& s : f.sub) out += " " + to_string(s);
      return out + ")";
    }
  }
}

}  // namespace lpm::tff
