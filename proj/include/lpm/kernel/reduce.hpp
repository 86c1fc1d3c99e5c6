#pragma once

#include <optional>
#include <vector>

#include "lpm/kernel/signature.hpp"
#include "lpm/kernel/term.hpp"

namespace lpm::kernel {

// Partial map from loose de Bruijn indices to terms living in the same
// context as the term being substituted into.
class Substitution {
 public:
  explicit Substitution(std::size_t size = 0) : slots_(size) {}

  std::size_t size() const { return slots_.size(); }
  bool bound(std::size_t index) const { return index < slots_.size() && slots_[index].has_value(); }
  const Term& at(std::size_t index) const { return *slots_[index]; }
  void bind(std::size_t index, Term value);

 private:
  std::vector<std::optional<Term>> slots_;
};

// Simultaneous replacement; indices outside the domain are unchanged.
Term substitute(const Term& t, const Substitution& s);

// Syntactic first-order matching of a rule lhs with `arity` pattern
// variables against a subject.
std::optional<Substitution> match_pattern(const Term& lhs, std::size_t arity, const Term& subject);

Term whnf(const Signature& sig, const Term& t, Fuel& fuel);
Term normalize(const Signature& sig, const Term& t, Fuel& fuel);
bool convertible(const Signature& sig, const Term& a, const Term& b, Fuel& fuel);

// Single rewrite or β step at the leftmost-outermost redex; nullopt on
// normal forms. Used by tests to walk reduction sequences.
std::optional<Term> step_once(const Signature& sig, const Term& t);

}  // namespace lpm::kernel
