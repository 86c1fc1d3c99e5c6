#pragma once

#include <set>
#include <stdexcept>
#include <string>

#include "lpm/tff/syntax.hpp"

namespace lpm::tff {

enum class TffErrorKind {
  UnknownConstructor,
  UnknownSymbol,
  UnboundTypeVariable,
  UnboundVariable,
  ArityMismatch,
  ArgTypeMismatch,
  EqTypeMismatch,
  NonAtomicLhs,
  FvViolation,
  RuleTypeMismatch,
  DuplicateName,
  DuplicateVariable,
  InvalidName,
};

std::string_view to_string(TffErrorKind kind);

class TffError : public std::runtime_error {
 public:
  // `item` is the index of the offending theory item, or -1.
  TffError(TffErrorKind kind, const std::string& message, int item = -1);

  TffErrorKind kind() const { return kind_; }
  int item() const { return item_; }
  const std::string& detail() const { return detail_; }
  TffError at_item(int item) const { return TffError(kind_, detail_, item); }

 private:
  TffErrorKind kind_;
  std::string detail_;
  int item_;
};

// Type variables in scope plus typed term variables.
void wf_type(const Theory& thy, const std::set<std::string>& tvars, const Type& t);
Type infer_term(const Theory& thy, const Context& ctx, const Term& e);
void wf_formula(const Theory& thy, const Context& ctx, const Formula& f);
// Checks the context itself: declared types, no repeated variable.
void wf_context(const Theory& thy, const Context& ctx);
// Checks items in order against the prefix before each one.
void wf_theory(const Theory& thy);

// Identifier rule shared with the .dk syntax, keywords included.
bool valid_name(const std::string& name);

}  // namespace lpm::tff
