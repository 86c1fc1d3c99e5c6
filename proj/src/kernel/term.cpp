#include "lpm/kernel/term.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_set>

namespace lpm::kernel {

namespace {

struct Pool {
  std::mutex mu;
  std::unordered_set<std::string> names;
};

Pool& pool() {
  static Pool* p = new Pool();
  return *p;
}

const std::string* intern(std::string_view text) {
  Pool& p = pool();
  std::lock_guard lock(p.mu);
  return &*p.names.emplace(text).first;
}

const std::string* empty_name() {
  static const std::string* e = intern("");
  return e;
}

}  // namespace

Name::Name() : text_(empty_name()) {}
Name::Name(std::string_view text) : text_(intern(text)) {}

Term mk_var(std::uint32_t index) {
  return std::make_shared<const Node>(Tag::Var, Sort::Type, index, index + 1, Name(), nullptr, nullptr);
}

Term mk_const(Name name) {
  return std::make_shared<const Node>(Tag::Const, Sort::Type, 0, 0, name, nullptr, nullptr);
}

Term mk_app(Term fn, Term arg) {
  std::uint32_t loose = std::max(fn->loose(), arg->loose());
  return std::make_shared<const Node>(Tag::App, Sort::Type, 0, loose, Name(), std::move(fn), std::move(arg));
}

Term mk_app(Term fn, std::span<const Term> args) {
  for (const Term& a : args) fn = mk_app(std::move(fn), a);
  return fn;
}

static Term mk_binder(Tag tag, Name binder, Term domain, Term body) {
  std::uint32_t inner = body->loose() > 0 ? body->loose() - 1 : 0;
  std::uint32_t loose = std::max(domain->loose(), inner);
  return std::make_shared<const Node>(tag, Sort::Type, 0, loose, binder, std::move(domain), std::move(body));
}

Term mk_lam(Name binder, Term domain, Term body) {
  return mk_binder(Tag::Lam, binder, std::move(domain), std::move(body));
}

Term mk_pi(Name binder, Term domain, Term body) {
  return mk_binder(Tag::Pi, binder, std::move(domain), std::move(body));
}

Term mk_arrow(Term domain, Term codomain) {
  return mk_pi(Name(), std::move(domain), shift(codomain, 1));
}

Term mk_sort(Sort s) {
  return std::make_shared<const Node>(Tag::Sort, s, 0, 0, Name(), nullptr, nullptr);
}

Term mk_type() {
  static const Term t = mk_sort(Sort::Type);
  return t;
}

Term mk_kind() {
  static const Term k = mk_sort(Sort::Kind);
  return k;
}

Spine unspine(const Term& t) {
  Spine s;
  const Term* cur = &t;
  while ((*cur)->tag() == Tag::App) {
    s.args.push_back((*cur)->arg());
    cur = &(*cur)->fn();
  }
  s.head = *cur;
  std::reverse(s.args.begin(), s.args.end());
  return s;
}

const Term& head_of(const Term& t) {
  const Term* cur = &t;
  while ((*cur)->tag() == Tag::App) cur = &(*cur)->fn();
  return *cur;
}

bool alpha_eq(const Term& a, const Term& b) {
  if (a == b) return true;
  if (a->tag() != b->tag() || a->loose() != b->loose()) return false;
  switch (a->tag()) {
    case Tag::Var:
      return a->index() == b->index();
    case Tag::Const:
      return a->name() == b->name();
    case Tag::Sort:
      return a->sort() == b->sort();
    case Tag::App:
    case Tag::Lam:
    case Tag::Pi:
      return alpha_eq(a->fn(), b->fn()) && alpha_eq(a->arg(), b->arg());
  }
  return false;
}

Term shift(const Term& t, std::int64_t by, std::uint32_t cutoff) {
  if (by == 0 || t->loose() <= cutoff) return t;
  switch (t->tag()) {
    case Tag::Var:
      return mk_var(static_cast<std::uint32_t>(t->index() + by));
    case Tag::App:
      return mk_app(shift(t->fn(), by, cutoff), shift(t->arg(), by, cutoff));
    case Tag::Lam:
      return mk_lam(t->name(), shift(t->domain(), by, cutoff), shift(t->body(), by, cutoff + 1));
    case Tag::Pi:
      return mk_pi(t->name(), shift(t->domain(), by, cutoff), shift(t->body(), by, cutoff + 1));
    default:
      return t;
  }
}

static Term subst_at(const Term& t, std::uint32_t depth, const Term& value) {
  if (t->loose() <= depth) return t;
  switch (t->tag()) {
    case Tag::Var:
      if (t->index() == depth) return shift(value, depth);
      return mk_var(t->index() - 1);
    case Tag::App:
      return mk_app(subst_at(t->fn(), depth, value), subst_at(t->arg(), depth, value));
    case Tag::Lam:
      return mk_lam(t->name(), subst_at(t->domain(), depth, value), subst_at(t->body(), depth + 1, value));
    case Tag::Pi:
      return mk_pi(t->name(), subst_at(t->domain(), depth, value), subst_at(t->body(), depth + 1, value));
    default:
      return t;
  }
}

Term instantiate(const Term& body, const Term& value) { return subst_at(body, 0, value); }

bool occurs(const Term& t, std::uint32_t index) {
  if (t->loose() <= index) return false;
  switch (t->tag()) {
    case Tag::Var:
      return t->index() == index;
    case Tag::App:
      return occurs(t->fn(), index) || occurs(t->arg(), index);
    case Tag::Lam:
    case Tag::Pi:
      return occurs(t->domain(), index) || occurs(t->body(), index + 1);
    default:
      return false;
  }
}

std::size_t term_size(const Term& t) {
  switch (t->tag()) {
    case Tag::App:
    case Tag::Lam:
    case Tag::Pi:
      return 1 + term_size(t->fn()) + term_size(t->arg());
    default:
      return 1;
  }
}

namespace {

class Printer {
 public:
  explicit Printer(std::vector<Name> ctx) {
    for (const Name& n : ctx) names_.push_back(n.str());
  }

  void term(const Term& t, std::string& out) {
    switch (t->tag()) {
      case Tag::Lam:
      case Tag::Pi: {
        bool dependent = t->tag() == Tag::Lam || occurs(t->body(), 0);
        if (!dependent) {
          app_level(t->domain(), out);
          out += " -> ";
          names_.push_back("_");
          term(t->body(), out);
          names_.pop_back();
          return;
        }
        std::string n = fresh(t->name().empty() ? "x" : t->name().str());
        out += n;
        out += " : ";
        app_level(t->domain(), out);
        out += t->tag() == Tag::Lam ? " => " : " -> ";
        names_.push_back(n);
        term(t->body(), out);
        names_.pop_back();
        return;
      }
      default:
        app(t, out);
    }
  }

 private:
  std::vector<std::string> names_;

  std::string fresh(const std::string& base) {
    std::string n = base;
    int k = 0;
    while (std::find(names_.begin(), names_.end(), n) != names_.end()) n = base + std::to_string(++k);
    return n;
  }

  void app_level(const Term& t, std::string& out) {
    if (t->tag() == Tag::Lam || t->tag() == Tag::Pi) {
      out += '(';
      term(t, out);
      out += ')';
    } else {
      app(t, out);
    }
  }

  void app(const Term& t, std::string& out) {
    if (t->tag() == Tag::App) {
      app(t->fn(), out);
      out += ' ';
      atom(t->arg(), out);
    } else {
      atom(t, out);
    }
  }

  void atom(const Term& t, std::string& out) {
    switch (t->tag()) {
      case Tag::Var:
        if (t->index() < names_.size()) {
          out += names_[names_.size() - 1 - t->index()];
        } else {
          out += '#';
          out += std::to_string(t->index() - names_.size());
        }
        return;
      case Tag::Const:
        out += t->name().str();
        return;
      case Tag::Sort:
        out += t->sort() == Sort::Type ? "Type" : "Kind";
        return;
      default:
        out += '(';
        term(t, out);
        out += ')';
    }
  }
};

}  // namespace

std::string show(const Term& t, const std::vector<Name>& ctx) {
  std::string out;
  Printer(ctx).term(t, out);
  return out;
}

}  // namespace lpm::kernel
