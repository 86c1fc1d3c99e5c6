#pragma once

#include <vector>

#include "lpm/kernel/signature.hpp"
#include "lpm/kernel/term.hpp"

namespace lpm::kernel {

// Local typing context; the innermost binding is de Bruijn index 0.
class Context {
 public:
  void push(const Name& name, const Term& type) {
    names_.push_back(name);
    types_.push_back(type);
  }
  void pop() {
    names_.pop_back();
    types_.pop_back();
  }
  std::size_t size() const { return types_.size(); }
  // Type of index i, shifted into the current context.
  Term type_of(std::uint32_t index) const;
  const std::vector<Name>& names() const { return names_; }

 private:
  std::vector<Name> names_;
  std::vector<Term> types_;
};

Term infer(const Signature& sig, Context& ctx, const Term& t, Fuel& fuel);
void check(const Signature& sig, Context& ctx, const Term& t, const Term& expected, Fuel& fuel);

// Closed-context shorthands.
Term infer(const Signature& sig, const Term& t, Fuel& fuel);
void check(const Signature& sig, const Term& t, const Term& expected, Fuel& fuel);

// Infers the type of `ty` and requires it to reduce to a sort; returns it.
Term ensure_sort(const Signature& sig, Context& ctx, const Term& ty, Fuel& fuel);

}  // namespace lpm::kernel
