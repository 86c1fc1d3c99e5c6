#include "support/generators.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace lpm::test {

namespace {

using tff::Formula;
using tff::Term;
using tff::Type;

using TypeMap = std::map<std::string, Type>;

bool in(const std::vector<std::string>& xs, const std::string& x) {
  for (const std::string& y : xs)
    if (y == x) return true;
  return false;
}

// One-way matching of a declared type (variables from `tvars`) against `t`.
bool match(const std::vector<std::string>& tvars, const Type& p, const Type& t, TypeMap& m) {
  if (p.kind == Type::Kind::Var && in(tvars, p.name)) {
    auto [it, fresh] = m.emplace(p.name, t);
    return fresh || it->second == t;
  }
  if (p.kind != t.kind || p.name != t.name || p.args.size() != t.args.size()) return false;
  for (std::size_t i = 0; i < p.args.size(); ++i)
    if (!match(tvars, p.args[i], t.args[i], m)) return false;
  return true;
}

Type instantiate_type(const TypeMap& m, const Type& t) {
  if (t.kind == Type::Kind::Var) {
    auto it = m.find(t.name);
    return it == m.end() ? t : it->second;
  }
  Type out = t;
  for (Type& a : out.args) a = instantiate_type(m, a);
  return out;
}

std::vector<const tff::TypeDecl*> type_decls(const tff::Theory& thy) {
  std::vector<const tff::TypeDecl*> out;
  for (const tff::Item& item : thy.items)
    if (const auto* d = std::get_if<tff::TypeDecl>(&item)) out.push_back(d);
  return out;
}

template <typename D>
std::vector<const D*> decls(const tff::Theory& thy, const std::function<bool(const std::string&)>& allow) {
  std::vector<const D*> out;
  for (const tff::Item& item : thy.items)
    if (const auto* d = std::get_if<D>(&item); d && allow(d->name)) out.push_back(d);
  return out;
}

}  // namespace

Type TffGen::type(const std::vector<std::string>& tvars, int depth) {
  std::vector<const tff::TypeDecl*> ts = type_decls(thy_);
  std::vector<const tff::TypeDecl*> leaves;
  for (const auto* d : ts)
    if (d->arity == 0) leaves.push_back(d);
  int options = int(tvars.size() + (depth > 0 ? ts.size() : leaves.size()));
  if (options == 0) throw std::logic_error("no type without type variables");
  int pick = uniform(0, options - 1);
  if (pick < int(tvars.size())) return Type::var(tvars[pick]);
  const tff::TypeDecl* d = (depth > 0 ? ts : leaves)[pick - tvars.size()];
  Type out = Type::cons(d->name);
  for (int i = 0; i < d->arity; ++i) out.args.push_back(type(tvars, depth - 1));
  return out;
}

std::optional<Term> TffGen::term(const tff::Context& ctx, const Type& t, int depth) {
  std::vector<Term> leaves;
  for (const auto& [x, ty] : ctx.vars)
    if (ty == t) leaves.push_back(Term::var(x));
  struct Candidate {
    const tff::FunDecl* f;
    TypeMap m;
  };
  std::vector<Candidate> nodes;
  for (const tff::FunDecl* f : decls<tff::FunDecl>(thy_, allow)) {
    TypeMap m;
    if (!match(f->tvars, f->result, t, m)) continue;
    if (f->params.empty() && m.size() == f->tvars.size()) {
      Term c = Term::fun(f->name);
      for (const std::string& a : f->tvars) c.type_args.push_back(m.at(a));
      leaves.push_back(c);
    } else if (depth > 0) {
      nodes.push_back({f, m});
    }
  }
  // Prefer leaves at the bottom and half of the time otherwise.
  for (int attempt = 0; attempt < 4; ++attempt) {
    bool leaf = nodes.empty() || (!leaves.empty() && (depth == 0 || chance(0.5)));
    if (leaf) {
      if (leaves.empty()) return std::nullopt;
      return leaves[uniform(0, int(leaves.size()) - 1)];
    }
    Candidate c = nodes[uniform(0, int(nodes.size()) - 1)];
    for (const std::string& a : c.f->tvars)
      if (!c.m.count(a)) c.m.emplace(a, type(ctx.tvars, 1));
    Term out = Term::fun(c.f->name);
    for (const std::string& a : c.f->tvars) out.type_args.push_back(c.m.at(a));
    bool ok = true;
    for (const Type& p : c.f->params) {
      std::optional<Term> arg = term(ctx, instantiate_type(c.m, p), depth - 1);
      if (!arg) {
        ok = false;
        break;
      }
      out.args.push_back(std::move(*arg));
    }
    if (ok) return out;
  }
  return leaves.empty() ? std::nullopt : std::optional<Term>(leaves.front());
}

Formula TffGen::formula(const tff::Context& ctx, int depth) {
  for (;;) {
    int pick = uniform(0, depth > 0 ? 12 : 3);
    switch (pick) {
      case 0: return chance(0.5) ? tff::top() : tff::bottom();
      case 1:
      case 2: {
        Type t = type(ctx.tvars, 1);
        std::optional<Term> a = term(ctx, t, 2), b = term(ctx, t, 2);
        if (a && b) return tff::eq(t, *a, *b);
        break;
      }
      case 3: {
        std::vector<const tff::PredDecl*> ps = decls<tff::PredDecl>(thy_, allow);
        if (ps.empty()) break;
        const tff::PredDecl* p = ps[uniform(0, int(ps.size()) - 1)];
        TypeMap m;
        Formula out = tff::pred(p->name);
        for (const std::string& a : p->tvars) {
          m.emplace(a, type(ctx.tvars, 1));
          out.type_args.push_back(m.at(a));
        }
        bool ok = true;
        for (const Type& param : p->params) {
          std::optional<Term> arg = term(ctx, instantiate_type(m, param), 2);
          if (!arg) {
            ok = false;
            break;
          }
          out.args.push_back(std::move(*arg));
        }
        if (ok) return out;
        break;
      }
      case 4: return tff::neg(formula(ctx, depth - 1));
      case 5: return tff::conj(formula(ctx, depth - 1), formula(ctx, depth - 1));
      case 6: return tff::disj(formula(ctx, depth - 1), formula(ctx, depth - 1));
      case 7: return tff::implies(formula(ctx, depth - 1), formula(ctx, depth - 1));
      case 8: return tff::iff(formula(ctx, depth - 1), formula(ctx, depth - 1));
      case 9:
      case 10: {
        tff::Context inner = ctx;
        std::string x = fresh("y");
        Type t = type(ctx.tvars, 1);
        inner.vars.emplace_back(x, t);
        Formula body = formula(inner, depth - 1);
        return pick == 9 ? tff::forall(x, t, body) : tff::exists(x, t, body);
      }
      default: {
        tff::Context inner = ctx;
        std::string a = fresh("b");
        std::string x = fresh("y");
        inner.tvars.push_back(a);
        inner.vars.emplace_back(x, Type::var(a));
        Formula body = tff::forall(x, Type::var(a), formula(inner, depth - 1));
        return pick == 11 ? tff::forall_type(a, body) : tff::exists_type(a, body);
      }
    }
  }
}

tff::Context TffGen::context(int tvars, int vars) {
  tff::Context ctx;
  // Without a nullary constructor there are no closed types.
  bool closed = false;
  for (const auto* d : type_decls(thy_)) closed = closed || d->arity == 0;
  if (!closed) tvars = std::max(tvars, 1);
  for (int i = 0; i < tvars; ++i) {
    ctx.tvars.push_back(fresh("b"));
    ctx.vars.emplace_back(fresh("z"), Type::var(ctx.tvars.back()));
  }
  for (int i = 0; i < vars; ++i) ctx.vars.emplace_back(fresh("z"), type(ctx.tvars, 1));
  return ctx;
}

tff::Theory random_theory(std::uint64_t seed) {
  Rng rng(seed);
  tff::Theory thy;
  thy.name = "rnd" + std::to_string(seed);
  TffGen g(thy, rng);

  int ntypes = g.uniform(1, 3);
  for (int i = 0; i < ntypes; ++i) thy.items.push_back(tff::TypeDecl{"t" + std::to_string(i), i == 0 ? 0 : g.uniform(0, 2)});
  for (int i = 0; i < ntypes; ++i) {
    const auto& d = std::get<tff::TypeDecl>(thy.items[i]);
    tff::FunDecl k{"k" + std::to_string(i), {}, {}, Type::cons(d.name)};
    for (int j = 0; j < d.arity; ++j) {
      k.tvars.push_back("a" + std::to_string(j));
      k.result.args.push_back(Type::var(k.tvars.back()));
    }
    thy.items.push_back(k);
  }
  int nfuns = g.uniform(1, 4);
  std::vector<tff::FunDecl> funs;
  for (int i = 0; i < nfuns; ++i) {
    tff::FunDecl f{"f" + std::to_string(i), {}, {}, {}};
    if (g.chance(0.4)) f.tvars.push_back("a");
    int arity = g.uniform(0, 3);
    for (int j = 0; j < arity; ++j) f.params.push_back(g.type(f.tvars, 1));
    f.result = g.type(f.tvars, 1);
    thy.items.push_back(f);
    funs.push_back(f);
  }
  int npreds = g.uniform(1, 3);
  std::vector<tff::PredDecl> preds;
  for (int i = 0; i < npreds; ++i) {
    tff::PredDecl p{"p" + std::to_string(i), {}, {}};
    if (g.chance(0.4)) p.tvars.push_back("a");
    int arity = g.uniform(0, 3);
    for (int j = 0; j < arity; ++j) p.params.push_back(g.type(p.tvars, 1));
    thy.items.push_back(p);
    preds.push_back(p);
  }
  int naxioms = g.uniform(0, 3);
  for (int i = 0; i < naxioms; ++i) thy.items.push_back(tff::Axiom{"ax" + std::to_string(i), g.formula({}, 3)});

  // Rules for f_i may only mention f_j for j < i, the inhabitants, and the
  // predicates before p_i.
  auto index_of = [](const std::string& name) { return std::stoi(name.substr(1)); };
  for (const tff::FunDecl& f : funs) {
    if (f.params.empty() || !g.chance(0.6)) continue;
    tff::TermRule r;
    r.ctx.tvars = f.tvars;
    r.lhs = Term::fun(f.name);
    for (const std::string& a : f.tvars) r.lhs.type_args.push_back(Type::var(a));
    for (std::size_t j = 0; j < f.params.size(); ++j) {
      std::string x = "x" + std::to_string(j);
      r.ctx.vars.emplace_back(x, f.params[j]);
      r.lhs.args.push_back(Term::var(x));
    }
    int fi = index_of(f.name);
    g.allow = [&](const std::string& s) { return s[0] == 'k' || (s[0] == 'f' && index_of(s) < fi); };
    std::optional<Term> rhs = g.term(r.ctx, f.result, 2);
    g.allow = [](const std::string&) { return true; };
    if (!rhs) continue;
    r.rhs = *rhs;
    thy.items.push_back(r);
  }
  for (const tff::PredDecl& p : preds) {
    if (!g.chance(0.5)) continue;
    tff::PropRule r;
    r.ctx.tvars = p.tvars;
    r.lhs = tff::pred(p.name);
    for (const std::string& a : p.tvars) r.lhs.type_args.push_back(Type::var(a));
    for (std::size_t j = 0; j < p.params.size(); ++j) {
      std::string x = "x" + std::to_string(j);
      r.ctx.vars.emplace_back(x, p.params[j]);
      r.lhs.args.push_back(Term::var(x));
    }
    int pi = index_of(p.name);
    g.allow = [&](const std::string& s) { return s[0] != 'p' || index_of(s) < pi; };
    r.rhs = g.formula(r.ctx, 2);
    g.allow = [](const std::string&) { return true; };
    thy.items.push_back(r);
  }
  return thy;
}

PredFunInstance random_pred_fun(std::uint64_t seed) {
  Rng rng(seed);
  PredFunInstance out;
  tff::Theory& thy = out.theory;
  thy.name = "pf";
  const Type s0 = Type::cons("s0"), s1 = Type::cons("s1");
  thy.items.push_back(tff::TypeDecl{"s0", 0});
  thy.items.push_back(tff::TypeDecl{"s1", 0});
  thy.items.push_back(tff::TypeDecl{"box", 1});
  const Type boxed = Type::cons("box", {s0});
  for (const char* c : {"c0", "c1"}) thy.items.push_back(tff::FunDecl{c, {}, {}, s0});
  for (const char* d : {"d0", "d1"}) thy.items.push_back(tff::FunDecl{d, {}, {}, s1});
  thy.items.push_back(tff::FunDecl{"wrap", {}, {s0}, boxed});
  thy.items.push_back(tff::FunDecl{"id0", {}, {s0}, s0});
  thy.items.push_back(tff::FunDecl{"id1", {}, {s1}, s1});
  thy.items.push_back(tff::FunDecl{"pid", {"a"}, {Type::var("a")}, Type::var("a")});
  thy.items.push_back(tff::TermRule{{{}, {{"x", s0}}}, Term::fun("id0", {}, {Term::var("x")}), Term::var("x")});
  thy.items.push_back(tff::TermRule{{{}, {{"x", s1}}}, Term::fun("id1", {}, {Term::var("x")}), Term::var("x")});
  thy.items.push_back(tff::TermRule{{{"a"}, {{"x", Type::var("a")}}},
                                    Term::fun("pid", {Type::var("a")}, {Term::var("x")}), Term::var("x")});

  TffGen g(thy, rng);
  const std::size_t n = std::size_t(g.uniform(0, 4));
  const bool is_pred = g.chance(0.5);
  const bool poly = g.chance(0.4);
  std::vector<std::string> tvars;
  if (poly) tvars.push_back("a");
  const Type inst = g.chance(0.5) ? s0 : s1;

  // Parameter types as declared and at the instance.
  std::vector<Type> params, at;
  const std::vector<Type> pool = {s0, s1, boxed};
  for (std::size_t i = 0; i < n; ++i) {
    bool use_var = poly && g.chance(0.4);
    params.push_back(use_var ? Type::var("a") : pool[g.uniform(0, 2)]);
    at.push_back(use_var ? inst : params.back());
  }
  std::vector<Type> type_args;
  if (poly) type_args.push_back(inst);
  Type result = is_pred ? Type{} : pool[g.uniform(0, 2)];
  if (is_pred) thy.items.push_back(tff::PredDecl{"P", tvars, params});
  else thy.items.push_back(tff::FunDecl{"f", tvars, params, result});

  auto constant = [&](const Type& t, int which) -> Term {
    if (t == s0) return Term::fun(which ? "c1" : "c0");
    if (t == s1) return Term::fun(which ? "d1" : "d0");
    return Term::fun("wrap", {}, {Term::fun(which ? "c1" : "c0")});
  };
  auto computed = [&](const Type& t, const Term& e) -> Term {
    if (g.chance(0.5)) return Term::fun("pid", {t}, {e});
    if (t == s0) return Term::fun("id0", {}, {e});
    if (t == s1) return Term::fun("id1", {}, {e});
    return Term::fun("wrap", {}, {Term::fun("id0", {}, {e.args[0]})});
  };

  std::vector<Term> ts, us;
  llproof::Node step;
  step.rule = is_pred ? llproof::Rule::Pred : llproof::Rule::Fun;
  step.symbol = is_pred ? "P" : "f";
  step.type_args = type_args;
  if (!is_pred) step.result = result;
  out.label = std::string(is_pred ? "pred" : "fun") + "/" + std::to_string(n) + (poly ? " poly" : "");
  for (std::size_t i = 0; i < n; ++i) {
    Term t = constant(at[i], g.uniform(0, 1));
    Term u = t;
    int kind = g.uniform(0, 9);
    if (kind >= 4 && kind < 9) u = computed(at[i], t);
    if (kind == 9) {
      u = constant(at[i], t == constant(at[i], 0) ? 1 : 0);
      out.sound = false;
    }
    ts.push_back(t);
    us.push_back(u);
    step.pairs.push_back({at[i], t, u});
    llproof::Node leaf;
    leaf.rule = llproof::Rule::Neq;
    leaf.args = {at[i], t};
    if (!(t == u)) leaf.conclusions = std::vector<Formula>{tff::neg(tff::eq(at[i], t, u))};
    step.premises.push_back(std::move(leaf));
  }

  if (is_pred) {
    Formula pt = tff::pred("P", type_args, ts), pu = tff::pred("P", type_args, us);
    out.goal = tff::implies(pt, pu);
    llproof::Node root;
    root.rule = llproof::Rule::NotImp;
    root.args = {pt, pu};
    root.premises.push_back(std::move(step));
    out.proof = std::move(root);
  } else {
    out.goal = tff::eq(result, Term::fun("f", type_args, ts), Term::fun("f", type_args, us));
    out.proof = std::move(step);
  }
  return out;
}

}  // namespace lpm::test
