#include "lpm/dk/quote.hpp"

#include <algorithm>

namespace lpm::dk {

using kernel::Tag;
using kernel::Term;

std::string fresh_binder(std::string_view base, const std::vector<std::string>& taken) {
  std::string root(base);
  if (!is_identifier(root)) root = "x";
  std::string n = root;
  for (int k = 1; std::find(taken.begin(), taken.end(), n) != taken.end(); ++k) n = root + "_" + std::to_string(k);
  return n;
}

static std::string constant_text(const std::string& qualified, const std::vector<std::string>& scope,
                                 std::string_view module) {
  std::size_t dot = qualified.find('.');
  if (dot == std::string::npos || std::string_view(qualified).substr(0, dot) != module) return qualified;
  std::string local = qualified.substr(dot + 1);
  if (std::find(scope.begin(), scope.end(), local) != scope.end()) return qualified;
  return local;
}

ExprPtr quote(const Term& t, std::vector<std::string>& scope, std::string_view module) {
  switch (t->tag()) {
    case Tag::Var: {
      if (t->index() >= scope.size()) throw std::logic_error("quote: variable #" + std::to_string(t->index()) + " out of scope");
      return ident(scope[scope.size() - 1 - t->index()]);
    }
    case Tag::Const:
      return ident(constant_text(t->name().str(), scope, module));
    case Tag::Sort:
      if (kernel::is_kind(t)) throw std::logic_error("quote: Kind has no surface syntax");
      return type_sort();
    case Tag::App:
      return app(quote(t->fn(), scope, module), quote(t->arg(), scope, module));
    case Tag::Lam:
    case Tag::Pi: {
      ExprPtr dom = quote(t->domain(), scope, module);
      bool arrow = t->tag() == Tag::Pi && !kernel::occurs(t->body(), 0);
      std::string n = arrow ? std::string("_") : fresh_binder(t->name().str(), scope);
      scope.push_back(n);
      ExprPtr body;
      try {
        body = quote(t->body(), scope, module);
      } catch (...) {
        scope.pop_back();
        throw;
      }
      scope.pop_back();
      if (arrow) return dk::arrow(dom, body);
      return t->tag() == Tag::Lam ? lam(n, dom, body) : pi(n, dom, body);
    }
  }
  throw std::logic_error("quote: unknown term");
}

Entry quote_decl(const std::string& name, const Term& type, std::string_view module) {
  return Entry{Decl{name, quote(type, module)}, {}};
}

Entry quote_def(const std::string& name, const Term& type, const Term& body, std::string_view module) {
  return Entry{Def{name, quote(type, module), quote(body, module)}, {}};
}

Entry quote_rule(const kernel::RuleContext& ctx, const Term& lhs, const Term& rhs, std::string_view module) {
  RuleEntry r;
  std::vector<std::string> scope;
  for (const auto& [name, type] : ctx) {
    ExprPtr ty = quote(type, scope, module);
    std::string n = fresh_binder(name.str(), scope);
    r.ctx.push_back(Binding{n, ty});
    scope.push_back(n);
  }
  r.lhs = quote(lhs, scope, module);
  r.rhs = quote(rhs, scope, module);
  return Entry{std::move(r), {}};
}

}  // namespace lpm::dk
