#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lpm/dk/syntax.hpp"
#include "lpm/embed/prelude.hpp"
#include "lpm/kernel/signature.hpp"
#include "lpm/kernel/term.hpp"
#include "lpm/tff/syntax.hpp"

namespace lpm::embed {

class TranslateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Kernel binders in scope while translating. Besides the variables bound by
// TFF quantifiers and rule contexts, proofs bind fresh constants, fresh types
// and hypotheses, all of which become λ-bound variables.
class Scope {
 public:
  enum class Kind { TypeVar, TermVar, FreshType, FreshConst, Hypothesis };

  void push(Kind kind, std::string name, kernel::Term type);
  void pop();
  std::size_t size() const { return entries_.size(); }

  // De Bruijn index of the innermost binder of this kind and name.
  std::optional<std::uint32_t> find(Kind kind, const std::string& name) const;
  bool binds(Kind kind, const std::string& name) const { return find(kind, name).has_value(); }

  // Display names, outermost first.
  std::vector<std::string> names() const;
  // The kernel context, outermost first.
  kernel::RuleContext context() const;

 private:
  struct Binder {
    Kind kind;
    std::string name;
    kernel::Term type;
  };
  std::vector<Binder> entries_;
};

// The symbols of the logic module, pre-interned.
struct Logic {
  kernel::Term Prop, prf, type, term, True, False, not_, and_, or_, imp, eqv, forall, foralltype, exists,
      existstype, eq;
  static const Logic& get();
};

// Translation of TFF syntax into kernel terms. Theory symbols live in the
// module named after the theory.
class Translator {
 public:
  explicit Translator(std::string module) : module_(std::move(module)) {}

  const std::string& module() const { return module_; }
  kernel::Term symbol(const std::string& name) const;

  kernel::Term type(const tff::Type& t, Scope& scope) const;
  kernel::Term term(const tff::Term& e, Scope& scope) const;
  kernel::Term formula(const tff::Formula& f, Scope& scope) const;
  // term ⟦τ⟧ and prf ⟦φ⟧.
  kernel::Term term_type(const tff::Type& t, Scope& scope) const;
  kernel::Term proof_type(const tff::Formula& f, Scope& scope) const;
  // λx : term ⟦τ⟧. ⟦φ⟧ and λα : type. ⟦φ⟧.
  kernel::Term abstraction(const std::string& x, const tff::Type& t, const tff::Formula& body, Scope& scope) const;
  kernel::Term type_abstraction(const std::string& a, const tff::Formula& body, Scope& scope) const;
  // Pushes the bindings of Δ onto `scope`: type variables first, as
  // α : type, then x : term ⟦τ⟧.
  void bind_context(const tff::Context& ctx, Scope& scope) const;

 private:
  std::string module_;
};

// Closed-term conveniences matching the pointwise translation functions.
kernel::Term translate_type(const tff::Theory& thy, const tff::Type& t, const tff::Context& ctx = {});
kernel::Term translate_term(const tff::Theory& thy, const tff::Term& e, const tff::Context& ctx = {});
kernel::Term translate_formula(const tff::Theory& thy, const tff::Formula& f, const tff::Context& ctx = {});
kernel::RuleContext translate_context(const tff::Theory& thy, const tff::Context& ctx);

// Supplies the entries declaring an extension rule in the theory module, or
// nullopt if the name is not registered.
using ExtensionHook =
    std::function<std::optional<std::vector<dk::Entry>>(const tff::Theory& thy, const std::string& name)>;

// Reserved module names a theory may not take.
bool reserved_module(const std::string& name);

// The theory module: one entry per theory item, in order.
std::vector<dk::Entry> theory_entries(const tff::Theory& thy, const ExtensionHook& extensions = {});

// prelude(mode) followed by the theory module.
kernel::Signature translate_theory(const tff::Theory& thy, Mode mode = Mode::Shallow, const kernel::Limits& limits = {},
                                   const ExtensionHook& extensions = {});

}  // namespace lpm::embed
