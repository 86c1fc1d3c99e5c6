#include "lpm/llproof/shape.hpp"

#include <algorithm>

#include "lpm/llproof/ext.hpp"

namespace lpm::llproof {

std::string pred_lemma(std::size_t n) { return "R_Pred_" + std::to_string(n); }
std::string fun_lemma(std::size_t n) { return "R_Fun_" + std::to_string(n); }

namespace {

using tff::Formula;
using P = Premise;

P hyps(std::vector<Formula> fs) { return P{P::Fresh::None, {}, std::move(fs)}; }

std::string rules(std::string_view r) { return "rules." + std::string(r); }

void check_kinds(const std::vector<Arg>& args, const std::vector<ArgKind>& kinds, std::string_view what,
                 const Path& path) {
  if (args.size() != kinds.size()) {
    throw ProofError("ill-formed", path_string(path),
                     std::string(what) + " takes " + std::to_string(kinds.size()) + " parameter(s), got " +
                         std::to_string(args.size()));
  }
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (kind_of(args[i]) != kinds[i]) {
      throw ProofError("ill-formed", path_string(path),
                       std::string(what) + " parameter " + std::to_string(i + 1) + " must be a " +
                           std::string(arg_kind_name(kinds[i])));
    }
  }
}

Shape pred_fun(const Node& n) {
  Shape s;
  const bool pred = n.rule == Rule::Pred;
  const std::size_t k = n.pairs.size();
  s.constant = std::string(kCertModule) + "." + (pred ? pred_lemma(k) : fun_lemma(k));
  std::vector<tff::Term> ts, us;
  for (const EqPair& e : n.pairs) {
    s.args.emplace_back(Arg(e.type));
    ts.push_back(e.lhs);
    us.push_back(e.rhs);
    s.premises.push_back(hyps({tff::neg(tff::eq(e.type, e.lhs, e.rhs))}));
  }
  if (!pred) s.args.emplace_back(Arg(n.result));
  s.args.emplace_back(Symbol{n.symbol, n.type_args});
  for (const tff::Term& t : ts) s.args.emplace_back(Arg(t));
  for (const tff::Term& u : us) s.args.emplace_back(Arg(u));
  if (pred) {
    s.conclusions = {tff::pred(n.symbol, n.type_args, ts), tff::neg(tff::pred(n.symbol, n.type_args, us))};
  } else {
    s.conclusions = {tff::neg(tff::eq(n.result, tff::Term::fun(n.symbol, n.type_args, ts),
                                      tff::Term::fun(n.symbol, n.type_args, us)))};
  }
  return s;
}

Shape core(const Node& n) {
  using tff::neg;
  const auto& a = n.args;
  auto F = [&](std::size_t i) { return std::get<Formula>(a[i]); };
  auto T = [&](std::size_t i) { return std::get<tff::Term>(a[i]); };
  auto Ty = [&](std::size_t i) { return std::get<tff::Type>(a[i]); };
  Shape s;
  switch (n.rule) {
    case Rule::Bot:
      s.constant = rules("R_bot");
      s.conclusions = {tff::bottom()};
      break;
    case Rule::NotTop:
      s.constant = rules("R_nottop");
      s.conclusions = {neg(tff::top())};
      break;
    case Rule::Ax:
      s.constant = rules("R_Ax");
      s.args = {a[0]};
      s.conclusions = {F(0), neg(F(0))};
      break;
    case Rule::Cut:
      s.constant = rules("R_Cut");
      s.args = {a[0]};
      s.premises = {hyps({F(0)}), hyps({neg(F(0))})};
      break;
    case Rule::Neq:
      s.constant = rules("R_neq");
      s.args = {a[0], a[1]};
      s.conclusions = {neg(tff::eq(Ty(0), T(1), T(1)))};
      break;
    case Rule::Sym:
      s.constant = rules("R_Sym");
      s.args = {a[0], a[1], a[2]};
      s.conclusions = {tff::eq(Ty(0), T(1), T(2)), neg(tff::eq(Ty(0), T(2), T(1)))};
      break;
    case Rule::NotNot:
      s.constant = rules("R_notnot");
      s.args = {a[0]};
      s.premises = {hyps({F(0)})};
      s.conclusions = {neg(neg(F(0)))};
      break;
    case Rule::And:
      s.constant = rules("R_and");
      s.args = {a[0], a[1]};
      s.premises = {hyps({F(0), F(1)})};
      s.conclusions = {tff::conj(F(0), F(1))};
      break;
    case Rule::Or:
      s.constant = rules("R_or");
      s.args = {a[0], a[1]};
      s.premises = {hyps({F(0)}), hyps({F(1)})};
      s.conclusions = {tff::disj(F(0), F(1))};
      break;
    case Rule::Imp:
      s.constant = rules("R_imp");
      s.args = {a[0], a[1]};
      s.premises = {hyps({neg(F(0))}), hyps({F(1)})};
      s.conclusions = {tff::implies(F(0), F(1))};
      break;
    case Rule::Iff:
      s.constant = rules("R_eqv");
      s.args = {a[0], a[1]};
      s.premises = {hyps({neg(F(0)), neg(F(1))}), hyps({F(0), F(1)})};
      s.conclusions = {tff::iff(F(0), F(1))};
      break;
    case Rule::NotAnd:
      s.constant = rules("R_notand");
      s.args = {a[0], a[1]};
      s.premises = {hyps({neg(F(0))}), hyps({neg(F(1))})};
      s.conclusions = {neg(tff::conj(F(0), F(1)))};
      break;
    case Rule::NotOr:
      s.constant = rules("R_notor");
      s.args = {a[0], a[1]};
      s.premises = {hyps({neg(F(0)), neg(F(1))})};
      s.conclusions = {neg(tff::disj(F(0), F(1)))};
      break;
    case Rule::NotImp:
      s.constant = rules("R_notimp");
      s.args = {a[0], a[1]};
      s.premises = {hyps({F(0), neg(F(1))})};
      s.conclusions = {neg(tff::implies(F(0), F(1)))};
      break;
    case Rule::NotIff:
      s.constant = rules("R_noteqv");
      s.args = {a[0], a[1]};
      s.premises = {hyps({neg(F(0)), F(1)}), hyps({F(0), neg(F(1))})};
      s.conclusions = {neg(tff::iff(F(0), F(1)))};
      break;
    case Rule::Exists:
    case Rule::NotForall: {
      const bool ex = n.rule == Rule::Exists;
      const Abstraction& p = std::get<Abstraction>(a[0]);
      s.constant = rules(ex ? "R_exists" : "R_notforall");
      s.args = {Arg(p.type), a[0]};
      Formula inst = apply(p, tff::Term::fun(n.fresh));
      s.premises = {P{P::Fresh::Constant, p.type, {ex ? inst : neg(inst)}}};
      s.conclusions = {ex ? tff::exists(p.var, p.type, p.body) : neg(tff::forall(p.var, p.type, p.body))};
      break;
    }
    case Rule::Forall:
    case Rule::NotExists: {
      const bool all = n.rule == Rule::Forall;
      const Abstraction& p = std::get<Abstraction>(a[0]);
      s.constant = rules(all ? "R_forall" : "R_notexists");
      s.args = {Arg(p.type), a[0], a[1]};
      Formula inst = apply(p, T(1));
      s.premises = {hyps({all ? inst : neg(inst)})};
      s.conclusions = {all ? tff::forall(p.var, p.type, p.body) : neg(tff::exists(p.var, p.type, p.body))};
      break;
    }
    case Rule::ExistsType:
    case Rule::NotForallType: {
      const bool ex = n.rule == Rule::ExistsType;
      const TypeAbstraction& p = std::get<TypeAbstraction>(a[0]);
      s.constant = rules(ex ? "R_existstype" : "R_notforalltype");
      s.args = {a[0]};
      Formula inst = apply(p, tff::Type::cons(n.fresh));
      s.premises = {P{P::Fresh::Type, {}, {ex ? inst : neg(inst)}}};
      s.conclusions = {ex ? tff::exists_type(p.var, p.body) : neg(tff::forall_type(p.var, p.body))};
      break;
    }
    case Rule::ForallType:
    case Rule::NotExistsType: {
      const bool all = n.rule == Rule::ForallType;
      const TypeAbstraction& p = std::get<TypeAbstraction>(a[0]);
      s.constant = rules(all ? "R_foralltype" : "R_notexiststype");
      s.args = {a[0], a[1]};
      Formula inst = apply(p, Ty(1));
      s.premises = {hyps({all ? inst : neg(inst)})};
      s.conclusions = {all ? tff::forall_type(p.var, p.body) : neg(tff::exists_type(p.var, p.body))};
      break;
    }
    case Rule::Subst: {
      const Abstraction& p = std::get<Abstraction>(a[0]);
      s.constant = rules("R_Subst");
      s.args = {Arg(p.type), a[0], a[1], a[2]};
      s.premises = {hyps({neg(tff::eq(p.type, T(1), T(2)))}), hyps({apply(p, T(2))})};
      s.conclusions = {apply(p, T(1))};
      break;
    }
    case Rule::Pred:
    case Rule::Fun:
    case Rule::Ext:
      break;
  }
  return s;
}

}  // namespace

Shape shape_of(const tff::Theory& thy, const Node& n, const ExtRegistry& registry, const Path& path) {
  const bool fresh = introduces_constant(n.rule) || introduces_type(n.rule);
  if (fresh && n.fresh.empty()) {
    throw ProofError("ill-formed", path_string(path), std::string(rule_tag(n.rule)) + " needs a fresh name");
  }
  if (!fresh && !n.fresh.empty()) {
    throw ProofError("ill-formed", path_string(path), std::string(rule_tag(n.rule)) + " takes no fresh name");
  }
  if (n.rule == Rule::Pred || n.rule == Rule::Fun) {
    if (!n.args.empty()) throw ProofError("ill-formed", path_string(path), "pred/fun take no parameters");
    return pred_fun(n);
  }
  if (n.rule == Rule::Ext) {
    const ExtRule* r = registry.find(n.symbol);
    const std::vector<std::string> requested = thy.extensions();
    if (!r) throw ProofError("unregistered-extension", path_string(path), "no extension rule '" + n.symbol + "'");
    if (std::find(requested.begin(), requested.end(), n.symbol) == requested.end()) {
      throw ProofError("unregistered-extension", path_string(path),
                       "theory " + thy.name + " does not request extension '" + n.symbol + "'");
    }
    check_kinds(n.args, r->arg_kinds, "ext " + n.symbol, path);
    Shape s = r->shape(thy, n.args);
    s.constant = thy.name + "." + ExtRegistry::constant_name(n.symbol);
    return s;
  }
  check_kinds(n.args, rule_arg_kinds(n.rule), rule_tag(n.rule), path);
  return core(n);
}

}  // namespace lpm::llproof
