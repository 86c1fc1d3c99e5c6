#include "lpm/dk/loader.hpp"

#include "lpm/kernel/reduce.hpp"
#include "lpm/kernel/typing.hpp"

namespace lpm::dk {

using kernel::ErrorKind;
using kernel::Name;
using kernel::Term;

static std::string where(Span s) { return std::to_string(s.begin.line) + ":" + std::to_string(s.begin.column); }

LoadError::LoadError(ErrorKind kind, Span span, const std::string& message)
    : std::runtime_error(where(span) + ": " + std::string(kernel::to_string(kind)) + ": " + message),
      kind_(kind),
      span_(span),
      detail_(message) {}

Term Elaborator::term(const Expr& e, std::vector<std::string>& scope) const {
  switch (e.kind) {
    case Expr::Kind::Type:
      return kernel::mk_type();
    case Expr::Kind::Ident: {
      if (e.name.find('.') == std::string::npos) {
        for (std::size_t i = scope.size(); i-- > 0;) {
          if (scope[i] == e.name) return kernel::mk_var(static_cast<std::uint32_t>(scope.size() - 1 - i));
        }
        Name q(qualify(e.name));
        if (sig_.contains(q)) return kernel::mk_const(q);
      } else {
        Name q(e.name);
        if (sig_.contains(q)) return kernel::mk_const(q);
      }
      throw LoadError(ErrorKind::UnboundIdentifier, e.span, e.name);
    }
    case Expr::Kind::App:
      return kernel::mk_app(term(*e.left, scope), term(*e.right, scope));
    case Expr::Kind::Lam:
    case Expr::Kind::Pi: {
      Term dom = term(*e.left, scope);
      scope.push_back(e.name);
      Term body;
      try {
        body = term(*e.right, scope);
      } catch (...) {
        scope.pop_back();
        throw;
      }
      scope.pop_back();
      Name binder(e.name);
      return e.kind == Expr::Kind::Lam ? kernel::mk_lam(binder, dom, body) : kernel::mk_pi(binder, dom, body);
    }
  }
  throw LoadError(ErrorKind::UnboundIdentifier, e.span, "malformed expression");
}

namespace {

struct Installer {
  kernel::Signature& sig;
  std::string module;
  kernel::Limits limits;
  Span span;

  Name declared_name(const std::string& name) const {
    if (!is_identifier(name)) throw LoadError(ErrorKind::UnboundIdentifier, span, "invalid name " + name);
    return Name(module + "." + name);
  }

  void operator()(const Decl& d) {
    Elaborator el(sig, module);
    Term ty = el.term(*d.type);
    kernel::Fuel fuel(limits);
    sig.declare(declared_name(d.name), ty, fuel);
  }

  void operator()(const Def& d) {
    Elaborator el(sig, module);
    Term ty = el.term(*d.type);
    Term body = el.term(*d.body);
    kernel::Fuel fuel(limits);
    sig.define(declared_name(d.name), ty, body, fuel);
  }

  void operator()(const RuleEntry& r) {
    Elaborator el(sig, module);
    std::vector<std::string> scope;
    kernel::RuleContext ctx;
    for (const Binding& b : r.ctx) {
      ctx.emplace_back(Name(b.name), el.term(*b.type, scope));
      scope.push_back(b.name);
    }
    Term lhs = el.term(*r.lhs, scope);
    Term rhs;
    try {
      rhs = el.term(*r.rhs, scope);
    } catch (const LoadError& e) {
      if (e.kind() != ErrorKind::UnboundIdentifier) throw;
      throw LoadError(ErrorKind::FvViolation, e.span(), e.detail() + " is neither a pattern variable nor declared");
    }
    kernel::Fuel fuel(limits);
    sig.add_rewrite(ctx, lhs, rhs, fuel);
  }

  void operator()(const Assert& a) {
    Elaborator el(sig, module);
    Term t = el.term(*a.term);
    Term ty = el.term(*a.type);
    kernel::Fuel fuel(limits);
    kernel::Context ctx;
    kernel::ensure_sort(sig, ctx, ty, fuel);
    kernel::check(sig, ctx, t, ty, fuel);
  }

  void operator()(const Comment&) {}
};

}  // namespace

void load_entries(kernel::Signature& sig, std::string_view module, const std::vector<Entry>& entries,
                  const kernel::Limits& limits) {
  for (const Entry& e : entries) {
    Installer inst{sig, std::string(module), limits, e.span};
    try {
      std::visit(inst, e.item);
    } catch (const kernel::KernelError& err) {
      throw LoadError(err.kind(), e.span, err.detail());
    }
  }
}

}  // namespace lpm::dk
