#include "lpm/kernel/reduce.hpp"

#include "lpm/kernel/error.hpp"

namespace lpm::kernel {

void Substitution::bind(std::size_t index, Term value) {
  if (index >= slots_.size()) slots_.resize(index + 1);
  slots_[index] = std::move(value);
}

static Term subst_rec(const Term& t, const Substitution& s, std::uint32_t depth) {
  if (t->loose() <= depth) return t;
  switch (t->tag()) {
    case Tag::Var: {
      std::uint32_t k = t->index() - depth;
      if (s.bound(k)) return shift(s.at(k), depth);
      return t;
    }
    case Tag::App:
      return mk_app(subst_rec(t->fn(), s, depth), subst_rec(t->arg(), s, depth));
    case Tag::Lam:
      return mk_lam(t->name(), subst_rec(t->domain(), s, depth), subst_rec(t->body(), s, depth + 1));
    case Tag::Pi:
      return mk_pi(t->name(), subst_rec(t->domain(), s, depth), subst_rec(t->body(), s, depth + 1));
    default:
      return t;
  }
}

Term substitute(const Term& t, const Substitution& s) { return subst_rec(t, s, 0); }

// ---------------------------------------------------------------------------
// Matching

static bool match_syntactic(const Term& pat, const Term& subj, Substitution& s) {
  switch (pat->tag()) {
    case Tag::Var:
      if (s.bound(pat->index())) return alpha_eq(s.at(pat->index()), subj);
      s.bind(pat->index(), subj);
      return true;
    case Tag::Const:
      return subj->tag() == Tag::Const && subj->name() == pat->name();
    case Tag::Sort:
      return subj->tag() == Tag::Sort && subj->sort() == pat->sort();
    case Tag::App:
      return subj->tag() == Tag::App && match_syntactic(pat->fn(), subj->fn(), s) &&
             match_syntactic(pat->arg(), subj->arg(), s);
    default:
      return false;
  }
}

std::optional<Substitution> match_pattern(const Term& lhs, std::size_t arity, const Term& subject) {
  Substitution s(arity);
  if (!match_syntactic(lhs, subject, s)) return std::nullopt;
  return s;
}

namespace {

std::size_t spine_length(const Term& t) {
  std::size_t n = 0;
  for (const Node* cur = t.get(); cur->tag() == Tag::App; cur = cur->fn().get()) ++n;
  return n;
}

struct Reducer {
  const Signature& sig;
  Fuel& fuel;

  // Matching that puts subject positions in weak-head normal form when the
  // pattern needs to see their head. `subj` is replaced by its whnf so the
  // caller can keep the reduced argument.
  bool match(const Term& pat, Term& subj, Substitution& s) {
    switch (pat->tag()) {
      case Tag::Var:
        if (s.bound(pat->index())) return alpha_eq(s.at(pat->index()), subj);
        s.bind(pat->index(), subj);
        return true;
      case Tag::Sort:
        subj = whnf(subj);
        return subj->tag() == Tag::Sort && subj->sort() == pat->sort();
      case Tag::Const:
      case Tag::App: {
        const Term& phead = head_of(pat);
        std::size_t n = spine_length(pat);
        const Term& shead = head_of(subj);
        if (!(shead->tag() == Tag::Const && shead->name() == phead->name() && spine_length(subj) == n)) {
          subj = whnf(subj);
          const Term& h = head_of(subj);
          if (!(h->tag() == Tag::Const && h->name() == phead->name() && spine_length(subj) == n)) return false;
        }
        if (n == 0) return true;
        Spine ps = unspine(pat);
        Spine ss = unspine(subj);
        for (std::size_t i = 0; i < n; ++i) {
          if (!match(ps.args[i], ss.args[i], s)) return false;
        }
        return true;
      }
      default:
        return false;
    }
  }

  Term whnf(Term t) {
    for (;;) {
      const Term& head = head_of(t);
      if (head->tag() == Tag::Lam) {
        if (t->tag() != Tag::App) return t;
        Spine sp = unspine(t);
        fuel.step();
        Term r = instantiate(sp.head->body(), sp.args[0]);
        t = mk_app(r, std::span<const Term>(sp.args).subspan(1));
        continue;
      }
      if (head->tag() != Tag::Const) return t;
      const std::vector<Rule>& rules = sig.rules_for(head->name());
      if (rules.empty()) return t;
      Spine sp = unspine(t);
      bool fired = false;
      bool changed = false;
      for (const Rule& r : rules) {
        std::size_t k = r.pattern_args.size();
        if (k > sp.args.size()) continue;
        Substitution s(r.ctx.size());
        bool ok = true;
        for (std::size_t i = 0; i < k && ok; ++i) {
          Term before = sp.args[i];
          ok = match(r.pattern_args[i], sp.args[i], s);
          if (sp.args[i] != before) changed = true;
        }
        if (!ok) continue;
        fuel.step();
        Term rhs = substitute(r.rhs, s);
        t = mk_app(rhs, std::span<const Term>(sp.args).subspan(k));
        fired = true;
        break;
      }
      if (!fired) return changed ? mk_app(sp.head, sp.args) : t;
    }
  }

  Term normalize(const Term& input) {
    Term t = whnf(input);
    switch (t->tag()) {
      case Tag::Lam:
        return mk_lam(t->name(), normalize(t->domain()), normalize(t->body()));
      case Tag::Pi:
        return mk_pi(t->name(), normalize(t->domain()), normalize(t->body()));
      case Tag::App: {
        Spine sp = unspine(t);
        for (Term& a : sp.args) a = normalize(a);
        Term rebuilt = mk_app(sp.head, sp.args);
        if (sp.head->tag() == Tag::Const && sig.has_rules(sp.head->name())) {
          Term again = whnf(rebuilt);
          if (!alpha_eq(again, rebuilt)) return normalize(again);
        }
        return rebuilt;
      }
      default:
        return t;
    }
  }

  bool defined_head(const Term& t) const {
    const Term& h = head_of(t);
    return h->tag() == Tag::Const && sig.has_rules(h->name());
  }

  bool structural(const Term& a, const Term& b) {
    if (a->tag() == Tag::Lam && b->tag() == Tag::Lam) {
      return convertible(a->domain(), b->domain()) && convertible(a->body(), b->body());
    }
    if (a->tag() == Tag::Pi && b->tag() == Tag::Pi) {
      return convertible(a->domain(), b->domain()) && convertible(a->body(), b->body());
    }
    if (sig.eta()) {
      if (a->tag() == Tag::Lam && b->tag() != Tag::Lam) {
        return convertible(a->body(), mk_app(shift(b, 1), mk_var(0)));
      }
      if (b->tag() == Tag::Lam && a->tag() != Tag::Lam) {
        return convertible(mk_app(shift(a, 1), mk_var(0)), b->body());
      }
    }
    if (a->tag() == Tag::Sort || b->tag() == Tag::Sort) {
      return a->tag() == b->tag() && a->sort() == b->sort();
    }
    const Term& ha = head_of(a);
    const Term& hb = head_of(b);
    if (ha->tag() != hb->tag()) return false;
    if (ha->tag() == Tag::Var && ha->index() != hb->index()) return false;
    if (ha->tag() == Tag::Const && ha->name() != hb->name()) return false;
    if (ha->tag() != Tag::Var && ha->tag() != Tag::Const) return false;
    if (spine_length(a) != spine_length(b)) return false;
    const Node* x = a.get();
    const Node* y = b.get();
    while (x->tag() == Tag::App) {
      if (!convertible(x->arg(), y->arg())) return false;
      x = x->fn().get();
      y = y->fn().get();
    }
    return true;
  }

  bool convertible(const Term& a, const Term& b) {
    if (alpha_eq(a, b)) return true;
    Fuel::Depth guard(fuel);
    Term wa = whnf(a);
    Term wb = whnf(b);
    if (alpha_eq(wa, wb)) return true;
    if (structural(wa, wb)) return true;
    if (defined_head(wa) || defined_head(wb)) return alpha_eq(normalize(wa), normalize(wb));
    return false;
  }
};

bool head_redex(const Signature& sig, const Term& t, Term& out) {
  const Term& head = head_of(t);
  if (head->tag() == Tag::Lam && t->tag() == Tag::App) {
    Spine sp = unspine(t);
    out = mk_app(instantiate(sp.head->body(), sp.args[0]), std::span<const Term>(sp.args).subspan(1));
    return true;
  }
  if (head->tag() != Tag::Const) return false;
  Spine sp = unspine(t);
  for (const Rule& r : sig.rules_for(head->name())) {
    std::size_t k = r.pattern_args.size();
    if (k > sp.args.size()) continue;
    Substitution s(r.ctx.size());
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) ok = match_syntactic(r.pattern_args[i], sp.args[i], s);
    if (!ok) continue;
    out = mk_app(substitute(r.rhs, s), std::span<const Term>(sp.args).subspan(k));
    return true;
  }
  return false;
}

}  // namespace

Term whnf(const Signature& sig, const Term& t, Fuel& fuel) { return Reducer{sig, fuel}.whnf(t); }

Term normalize(const Signature& sig, const Term& t, Fuel& fuel) { return Reducer{sig, fuel}.normalize(t); }

bool convertible(const Signature& sig, const Term& a, const Term& b, Fuel& fuel) {
  return Reducer{sig, fuel}.convertible(a, b);
}

std::optional<Term> step_once(const Signature& sig, const Term& t) {
  Term out;
  if (head_redex(sig, t, out)) return out;
  switch (t->tag()) {
    case Tag::App:
      if (auto f = step_once(sig, t->fn())) return mk_app(*f, t->arg());
      if (auto a = step_once(sig, t->arg())) return mk_app(t->fn(), *a);
      return std::nullopt;
    case Tag::Lam:
    case Tag::Pi: {
      auto make = t->tag() == Tag::Lam ? mk_lam : mk_pi;
      if (auto d = step_once(sig, t->domain())) return make(t->name(), *d, t->body());
      if (auto b = step_once(sig, t->body())) return make(t->name(), t->domain(), *b);
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

}  // namespace lpm::kernel
