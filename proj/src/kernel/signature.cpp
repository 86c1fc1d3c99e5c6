#include "lpm/kernel/signature.hpp"

#include <set>

#include "lpm/kernel/error.hpp"
#include "lpm/kernel/reduce.hpp"
#include "lpm/kernel/typing.hpp"

namespace lpm::kernel {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnboundIdentifier: return "unbound-identifier";
    case ErrorKind::NotAFunction: return "not-a-function";
    case ErrorKind::SortError: return "sort-error";
    case ErrorKind::UntypableKind: return "untypable-Kind";
    case ErrorKind::TypeMismatch: return "type-mismatch";
    case ErrorKind::FuelExhausted: return "fuel-exhausted";
    case ErrorKind::DuplicateName: return "duplicate-name";
    case ErrorKind::NotASort: return "not-a-sort";
    case ErrorKind::IllTypedSide: return "ill-typed-side";
    case ErrorKind::FvViolation: return "fv-violation";
    case ErrorKind::NonPatternLhs: return "non-pattern-lhs";
  }
  return "unknown";
}

void Fuel::step() {
  if (steps_left_ == 0) throw KernelError(ErrorKind::FuelExhausted, "rewrite step budget exhausted");
  --steps_left_;
}

Fuel::Depth::Depth(Fuel& f) : fuel_(f) {
  if (fuel_.depth_ >= fuel_.depth_limit_) {
    throw KernelError(ErrorKind::FuelExhausted, "conversion depth limit reached");
  }
  ++fuel_.depth_;
}

const Term* Signature::type_of(const Name& name) const {
  auto it = decls_.find(name);
  if (it == decls_.end()) return nullptr;
  return &std::get<Declaration>(items_[it->second]).type;
}

const std::vector<Rule>& Signature::rules_for(const Name& name) const {
  static const std::vector<Rule> none;
  auto it = rules_.find(name);
  return it == rules_.end() ? none : it->second;
}

std::size_t Signature::rule_count() const {
  std::size_t n = 0;
  for (const auto& [_, rs] : rules_) n += rs.size();
  return n;
}

void Signature::declare(const Name& name, const Term& type, Fuel& fuel) {
  if (contains(name)) throw KernelError(ErrorKind::DuplicateName, name.str());
  Context ctx;
  ensure_sort(*this, ctx, type, fuel);
  decls_.emplace(name, items_.size());
  items_.push_back(Declaration{name, type});
}

namespace {

// Collects pattern variables of a lhs argument; rejects anything outside the
// pattern fragment.
void scan_pattern(const Term& p, std::size_t arity, std::set<std::uint32_t>& vars) {
  switch (p->tag()) {
    case Tag::Var:
      if (p->index() >= arity) {
        throw KernelError(ErrorKind::FvViolation, "left-hand side mentions a variable outside the rule context");
      }
      vars.insert(p->index());
      return;
    case Tag::Const:
    case Tag::Sort:
      return;
    case Tag::App: {
      const Term& h = head_of(p);
      if (h->tag() != Tag::Const) {
        throw KernelError(ErrorKind::NonPatternLhs, "applied subpattern must be headed by a constant");
      }
      for (const Node* cur = p.get(); cur->tag() == Tag::App; cur = cur->fn().get()) {
        scan_pattern(cur->arg(), arity, vars);
      }
      return;
    }
    default:
      throw KernelError(ErrorKind::NonPatternLhs, "binders are not allowed in patterns");
  }
}

void free_vars(const Term& t, std::uint32_t depth, std::set<std::uint32_t>& out) {
  if (t->loose() <= depth) return;
  switch (t->tag()) {
    case Tag::Var:
      out.insert(t->index() - depth);
      return;
    case Tag::App:
      free_vars(t->fn(), depth, out);
      free_vars(t->arg(), depth, out);
      return;
    case Tag::Lam:
    case Tag::Pi:
      free_vars(t->domain(), depth, out);
      free_vars(t->body(), depth + 1, out);
      return;
    default:
      return;
  }
}

}  // namespace

void Signature::add_rewrite(const RuleContext& delta, const Term& lhs, const Term& rhs, Fuel& fuel) {
  const std::size_t n = delta.size();
  Spine sp = unspine(lhs);
  if (sp.head->tag() != Tag::Const) {
    throw KernelError(ErrorKind::NonPatternLhs, "left-hand side " + show(lhs) + " is not headed by a constant");
  }
  std::set<std::uint32_t> lhs_vars;
  for (const Term& a : sp.args) scan_pattern(a, n, lhs_vars);
  std::set<std::uint32_t> rhs_vars;
  free_vars(rhs, 0, rhs_vars);
  for (std::uint32_t v : rhs_vars) {
    if (v >= n || lhs_vars.count(v) == 0) {
      std::string name = v < n ? delta[n - 1 - v].first.str() : "#" + std::to_string(v - n);
      throw KernelError(ErrorKind::FvViolation, "right-hand side variable " + name + " does not occur in the left-hand side");
    }
  }

  Context ctx;
  Term type;
  try {
    for (const auto& [name, ty] : delta) {
      ensure_sort(*this, ctx, ty, fuel);
      ctx.push(name, ty);
    }
    type = infer(*this, ctx, lhs, fuel);
    check(*this, ctx, rhs, type, fuel);
  } catch (const KernelError& e) {
    if (e.kind() == ErrorKind::FuelExhausted) throw;
    throw KernelError(ErrorKind::IllTypedSide, "rule " + show(lhs, ctx.names()) + ": " + e.what());
  }

  Rule r{sp.head->name(), delta, lhs, rhs, type, std::move(sp.args)};
  rules_[r.head].push_back(r);
  items_.push_back(std::move(r));
}

void Signature::define(const Name& name, const Term& type, const Term& body, Fuel& fuel) {
  if (contains(name)) throw KernelError(ErrorKind::DuplicateName, name.str());
  Context ctx;
  ensure_sort(*this, ctx, type, fuel);
  check(*this, ctx, body, type, fuel);
  Signature next = *this;
  next.declare(name, type, fuel);
  next.add_rewrite({}, mk_const(name), body, fuel);
  *this = std::move(next);
}

Signature declare(const Signature& sig, const Name& name, const Term& type, Fuel& fuel) {
  Signature out = sig;
  out.declare(name, type, fuel);
  return out;
}

Signature add_rewrite(const Signature& sig, const RuleContext& ctx, const Term& lhs, const Term& rhs, Fuel& fuel) {
  Signature out = sig;
  out.add_rewrite(ctx, lhs, rhs, fuel);
  return out;
}

Signature replay(const Signature& sig, const Limits& limits) {
  Signature out;
  out.set_eta(sig.eta());
  for (const Signature::Item& item : sig.items()) {
    Fuel fuel(limits);
    if (const auto* d = std::get_if<Declaration>(&item)) {
      out.declare(d->name, d->type, fuel);
    } else {
      const Rule& r = std::get<Rule>(item);
      out.add_rewrite(r.ctx, r.lhs, r.rhs, fuel);
    }
  }
  return out;
}

bool same_items(const Signature& a, const Signature& b) {
  if (a.items().size() != b.items().size()) return false;
  for (std::size_t i = 0; i < a.items().size(); ++i) {
    const auto& x = a.items()[i];
    const auto& y = b.items()[i];
    if (x.index() != y.index()) return false;
    if (const auto* d = std::get_if<Declaration>(&x)) {
      const auto& e = std::get<Declaration>(y);
      if (!(d->name == e.name) || !alpha_eq(d->type, e.type)) return false;
    } else {
      const auto& r = std::get<Rule>(x);
      const auto& s = std::get<Rule>(y);
      if (r.ctx.size() != s.ctx.size() || !alpha_eq(r.lhs, s.lhs) || !alpha_eq(r.rhs, s.rhs) ||
          !alpha_eq(r.type, s.type)) {
        return false;
      }
      for (std::size_t k = 0; k < r.ctx.size(); ++k) {
        if (!alpha_eq(r.ctx[k].second, s.ctx[k].second)) return false;
      }
    }
  }
  return true;
}

}  // namespace lpm::kernel
