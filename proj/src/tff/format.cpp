#include "lpm/tff/format.hpp"

#include <array>
#include <charconv>

namespace lpm::tff {

using K = Formula::Kind;

bool is_reserved(std::string_view name) {
  static constexpr std::array<std::string_view, 13> kWords = {
      "top", "bot", "not", "and", "or", "imp", "iff", "=", "forall", "exists", "forall-type", "exists-type", "type"};
  for (std::string_view w : kWords) {
    if (w == name) return true;
  }
  return false;
}

static const std::string& atom(const Sexpr& s, std::string_view what) {
  if (!s.is_atom) throw FormatError(s, "expected " + std::string(what) + ", found a list");
  return s.atom;
}

static const std::vector<Sexpr>& list(const Sexpr& s, std::string_view what) {
  if (s.is_atom) throw FormatError(s, "expected " + std::string(what) + ", found '" + s.atom + "'");
  return s.items;
}

static void expect_size(const Sexpr& s, std::size_t n, std::string_view form) {
  if (s.items.size() != n) {
    throw FormatError(s, "'" + std::string(form) + "' takes " + std::to_string(n - 1) + " operand(s)");
  }
}

Type read_type(const Sexpr& s, const std::vector<std::string>& tvars) {
  if (s.is_atom) {
    for (const std::string& a : tvars) {
      if (a == s.atom) return Type::var(s.atom);
    }
    return Type::cons(s.atom);
  }
  if (s.items.empty()) throw FormatError(s, "empty type");
  std::vector<Type> args;
  for (std::size_t i = 1; i < s.items.size(); ++i) args.push_back(read_type(s.items[i], tvars));
  return Type::cons(atom(s.items[0], "a type constructor"), std::move(args));
}

static bool bound(const Context& ctx, const std::string& x) {
  for (const auto& [y, t] : ctx.vars) {
    if (y == x) return true;
  }
  return false;
}

// Splits the operands of (sym ...) into m type arguments and the rest.
static void split_args(const Theory& thy, const Sexpr& s, std::size_t m, const Context& ctx,
                       std::vector<Type>& types, std::vector<Term>& terms) {
  if (s.items.size() < 1 + m) {
    throw FormatError(s, "'" + s.items[0].atom + "' needs " + std::to_string(m) + " type argument(s)");
  }
  for (std::size_t i = 1; i <= m; ++i) types.push_back(read_type(s.items[i], ctx.tvars));
  for (std::size_t i = 1 + m; i < s.items.size(); ++i) terms.push_back(read_term(thy, s.items[i], ctx));
}

Term read_term(const Theory& thy, const Sexpr& s, const Context& ctx) {
  if (s.is_atom) {
    if (bound(ctx, s.atom)) return Term::var(s.atom);
    return Term::fun(s.atom);
  }
  if (s.items.empty()) throw FormatError(s, "empty term");
  const std::string& f = atom(s.items[0], "a function symbol");
  const FunDecl* d = thy.find_fun(f);
  if (!d) throw FormatError(s.items[0], "unknown function '" + f + "'");
  Term t = Term::fun(f);
  split_args(thy, s, d->tvars.size(), ctx, t.type_args, t.args);
  return t;
}

Formula read_formula(const Theory& thy, const Sexpr& s, const Context& ctx) {
  if (s.is_atom) {
    if (s.atom == "top") return top();
    if (s.atom == "bot") return bottom();
    return pred(s.atom);
  }
  if (s.items.empty()) throw FormatError(s, "empty formula");
  const std::string& head = atom(s.items[0], "a connective or predicate");
  auto sub = [&](std::size_t i, const Context& c) { return read_formula(thy, s.items[i], c); };
  if (head == "not") {
    expect_size(s, 2, head);
    return neg(sub(1, ctx));
  }
  if (head == "and" || head == "or" || head == "imp" || head == "iff") {
    expect_size(s, 3, head);
    Formula a = sub(1, ctx);
    Formula b = sub(2, ctx);
    if (head == "and") return conj(std::move(a), std::move(b));
    if (head == "or") return disj(std::move(a), std::move(b));
    if (head == "imp") return implies(std::move(a), std::move(b));
    return iff(std::move(a), std::move(b));
  }
  if (head == "=") {
    expect_size(s, 4, head);
    return eq(read_type(s.items[1], ctx.tvars), read_term(thy, s.items[2], ctx), read_term(thy, s.items[3], ctx));
  }
  if (head == "forall" || head == "exists") {
    expect_size(s, 4, head);
    const std::string& x = atom(s.items[1], "a variable");
    Type t = read_type(s.items[2], ctx.tvars);
    Context inner = ctx;
    inner.vars.emplace_back(x, t);
    Formula body = sub(3, inner);
    return head == "forall" ? forall(x, std::move(t), std::move(body)) : exists(x, std::move(t), std::move(body));
  }
  if (head == "forall-type" || head == "exists-type") {
    expect_size(s, 3, head);
    const std::string& a = atom(s.items[1], "a type variable");
    Context inner = ctx;
    inner.tvars.push_back(a);
    Formula body = sub(2, inner);
    return head == "forall-type" ? forall_type(a, std::move(body)) : exists_type(a, std::move(body));
  }
  const PredDecl* d = thy.find_pred(head);
  if (!d) throw FormatError(s.items[0], "unknown predicate '" + head + "'");
  Formula f = pred(head);
  split_args(thy, s, d->tvars.size(), ctx, f.type_args, f.args);
  return f;
}

Context read_context(const Sexpr& s) {
  Context ctx;
  for (const Sexpr& b : list(s, "a rule context")) {
    const std::vector<Sexpr>& pair = list(b, "a binding");
    if (pair.size() != 2) throw FormatError(b, "a binding is (type A) or (x T)");
    const std::string& first = atom(pair[0], "a name");
    if (first == "type") {
      ctx.tvars.push_back(atom(pair[1], "a type variable"));
    } else {
      ctx.vars.emplace_back(first, read_type(pair[1], ctx.tvars));
    }
  }
  return ctx;
}

namespace {

std::vector<std::string> read_names(const Sexpr& s) {
  std::vector<std::string> out;
  for (const Sexpr& a : list(s, "a list of type variables")) out.push_back(atom(a, "a type variable"));
  return out;
}

std::vector<Type> read_types(const Sexpr& s, const std::vector<std::string>& tvars) {
  std::vector<Type> out;
  for (const Sexpr& t : list(s, "a list of types")) out.push_back(read_type(t, tvars));
  return out;
}

std::string declared_name(const Sexpr& s) {
  const std::string& name = atom(s, "a name");
  if (is_reserved(name)) throw FormatError(s, "'" + name + "' is reserved");
  return name;
}

Item read_item(const Theory& thy, const Sexpr& s) {
  if (s.is_atom || s.items.empty() || !s.items[0].is_atom) throw FormatError(s, "expected a theory item");
  const std::string& head = s.items[0].atom;
  if (head == "type") {
    expect_size(s, 3, head);
    const std::string& n = atom(s.items[2], "an arity");
    int arity = 0;
    auto [end, ec] = std::from_chars(n.data(), n.data() + n.size(), arity);
    if (ec != std::errc() || end != n.data() + n.size()) throw FormatError(s.items[2], "bad arity '" + n + "'");
    return TypeDecl{declared_name(s.items[1]), arity};
  }
  if (head == "fun") {
    expect_size(s, 5, head);
    FunDecl d{declared_name(s.items[1]), read_names(s.items[2]), {}, {}};
    d.params = read_types(s.items[3], d.tvars);
    d.result = read_type(s.items[4], d.tvars);
    return d;
  }
  if (head == "pred") {
    expect_size(s, 4, head);
    PredDecl d{declared_name(s.items[1]), read_names(s.items[2]), {}};
    d.params = read_types(s.items[3], d.tvars);
    return d;
  }
  if (head == "axiom") {
    expect_size(s, 3, head);
    return Axiom{declared_name(s.items[1]), read_formula(thy, s.items[2], Context{})};
  }
  if (head == "rewrite") {
    expect_size(s, 4, head);
    Context ctx = read_context(s.items[1]);
    return TermRule{ctx, read_term(thy, s.items[2], ctx), read_term(thy, s.items[3], ctx)};
  }
  if (head == "rewrite-prop") {
    expect_size(s, 4, head);
    Context ctx = read_context(s.items[1]);
    return PropRule{ctx, read_formula(thy, s.items[2], ctx), read_formula(thy, s.items[3], ctx)};
  }
  if (head == "extension") {
    expect_size(s, 2, head);
    return Extension{atom(s.items[1], "an extension name")};
  }
  throw FormatError(s, "unknown theory item '" + head + "'");
}

std::string names(const std::vector<std::string>& xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? " " : "") + xs[i];
  return out + ")";
}

std::string types(const std::vector<Type>& ts) {
  std::string out = "(";
  for (std::size_t i = 0; i < ts.size(); ++i) out += (i ? " " : "") + to_string(ts[i]);
  return out + ")";
}

std::string context(const Context& ctx) {
  std::string out = "(";
  bool first = true;
  auto sep = [&] {
    if (!first) out += ' ';
    first = false;
  };
  for (const std::string& a : ctx.tvars) {
    sep();
    out += "(type " + a + ")";
  }
  for (const auto& [x, t] : ctx.vars) {
    sep();
    out += "(" + x + " " + to_string(t) + ")";
  }
  return out + ")";
}

struct ItemWriter {
  std::string operator()(const TypeDecl& d) const { return "(type " + d.name + " " + std::to_string(d.arity) + ")"; }
  std::string operator()(const FunDecl& d) const {
    return "(fun " + d.name + " " + names(d.tvars) + " " + types(d.params) + " " + to_string(d.result) + ")";
  }
  std::string operator()(const PredDecl& d) const {
    return "(pred " + d.name + " " + names(d.tvars) + " " + types(d.params) + ")";
  }
  std::string operator()(const Axiom& a) const { return "(axiom " + a.name + " " + to_string(a.body) + ")"; }
  std::string operator()(const TermRule& r) const {
    return "(rewrite " + context(r.ctx) + " " + to_string(r.lhs) + " " + to_string(r.rhs) + ")";
  }
  std::string operator()(const PropRule& r) const {
    return "(rewrite-prop " + context(r.ctx) + " " + to_string(r.lhs) + " " + to_string(r.rhs) + ")";
  }
  std::string operator()(const Extension& e) const { return "(extension " + e.name + ")"; }
};

}  // namespace

TheoryFile read_tffx(std::string_view text) {
  std::vector<Sexpr> top = parse_sexprs(text);
  if (top.size() != 1) {
    throw FormatError(top.empty() ? 1 : top[1].line, top.empty() ? 1 : top[1].column,
                      "expected exactly one (theory NAME ITEM...) form");
  }
  const Sexpr& s = top[0];
  if (!s.headed("theory") || s.items.size() < 2) throw FormatError(s, "expected (theory NAME ITEM...)");
  TheoryFile out;
  out.theory.name = atom(s.items[1], "a theory name");
  for (std::size_t i = 2; i < s.items.size(); ++i) {
    out.theory.items.push_back(read_item(out.theory, s.items[i]));
    out.item_lines.push_back(s.items[i].line);
  }
  return out;
}

std::string write_tffx(const Theory& thy) {
  std::string out = "(theory " + thy.name;
  for (const Item& it : thy.items) out += "\n  " + std::visit(ItemWriter{}, it);
  return out + ")\n";
}

}  // namespace lpm::tff
