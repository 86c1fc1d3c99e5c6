#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lpm/dk/syntax.hpp"
#include "lpm/kernel/signature.hpp"
#include "lpm/kernel/term.hpp"

namespace lpm::dk {

// Turns kernel terms back into surface syntax that elaborates to the same
// term. `scope` names the loose variables, innermost last. Binders reuse
// their display names unless that would shadow an enclosing binder, and
// constants of `module` are written unqualified when no binder hides them.
ExprPtr quote(const kernel::Term& t, std::vector<std::string>& scope, std::string_view module);
inline ExprPtr quote(const kernel::Term& t, std::string_view module) {
  std::vector<std::string> scope;
  return quote(t, scope, module);
}

// A name based on `base` that is a legal binder and not in `taken`.
std::string fresh_binder(std::string_view base, const std::vector<std::string>& taken);

Entry quote_decl(const std::string& name, const kernel::Term& type, std::string_view module);
Entry quote_def(const std::string& name, const kernel::Term& type, const kernel::Term& body,
                std::string_view module);
// Rule binder names are taken from `ctx` and made distinct.
Entry quote_rule(const kernel::RuleContext& ctx, const kernel::Term& lhs, const kernel::Term& rhs,
                 std::string_view module);

}  // namespace lpm::dk
