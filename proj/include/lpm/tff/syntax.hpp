#pragma once

#include <set>
#include <string>
#include <variant>
#include <vector>

namespace lpm::tff {

struct Type {
  enum class Kind { Var, Cons };

  Kind kind = Kind::Var;
  std::string name;
  std::vector<Type> args;

  static Type var(std::string name) { return Type{Kind::Var, std::move(name), {}}; }
  static Type cons(std::string name, std::vector<Type> args = {}) { return Type{Kind::Cons, std::move(name), std::move(args)}; }

  bool operator==(const Type&) const = default;
};

struct Term {
  enum class Kind { Var, Fun };

  Kind kind = Kind::Var;
  std::string name;
  std::vector<Type> type_args;
  std::vector<Term> args;

  static Term var(std::string name) { return Term{Kind::Var, std::move(name), {}, {}}; }
  static Term fun(std::string name, std::vector<Type> type_args = {}, std::vector<Term> args = {}) {
    return Term{Kind::Fun, std::move(name), std::move(type_args), std::move(args)};
  }

  bool operator==(const Term&) const = default;
};

struct Formula {
  enum class Kind { Top, Bottom, Not, And, Or, Implies, Iff, Eq, Pred, Forall, Exists, ForallType, ExistsType };

  Kind kind = Kind::Top;
  // Pred: the predicate symbol. Quantifiers: the bound variable.
  std::string name;
  // Eq: the carrier type. Forall/Exists: the type of the bound variable.
  Type type;
  // Pred: explicit type arguments.
  std::vector<Type> type_args;
  // Eq: the two sides. Pred: term arguments.
  std::vector<Term> args;
  // Not: one operand; binary connectives: two; quantifiers: the body.
  std::vector<Formula> sub;

  // Syntactic equality; bound names matter. See alpha_equal.
  bool operator==(const Formula&) const = default;
};

Formula top();
Formula bottom();
Formula neg(Formula f);
Formula conj(Formula a, Formula b);
Formula disj(Formula a, Formula b);
Formula implies(Formula a, Formula b);
Formula iff(Formula a, Formula b);
Formula eq(Type t, Term a, Term b);
Formula pred(std::string p, std::vector<Type> type_args = {}, std::vector<Term> args = {});
Formula forall(std::string x, Type t, Formula body);
Formula exists(std::string x, Type t, Formula body);
Formula forall_type(std::string a, Formula body);
Formula exists_type(std::string a, Formula body);

bool is_atomic(const Formula& f);
bool is_binary(Formula::Kind k);

// Typed variables in scope plus type variables, in binding order.
struct Context {
  std::vector<std::string> tvars;
  std::vector<std::pair<std::string, Type>> vars;
};

struct TypeDecl {
  std::string name;
  int arity = 0;
};

struct FunDecl {
  std::string name;
  std::vector<std::string> tvars;
  std::vector<Type> params;
  Type result;
};

struct PredDecl {
  std::string name;
  std::vector<std::string> tvars;
  std::vector<Type> params;
};

struct Axiom {
  std::string name;
  Formula body;
};

struct TermRule {
  Context ctx;
  Term lhs;
  Term rhs;
};

struct PropRule {
  Context ctx;
  Formula lhs;
  Formula rhs;
};

// Request for a registered extension rule, e.g. bool_case_nf.
struct Extension {
  std::string name;
};

using Item = std::variant<TypeDecl, FunDecl, PredDecl, Axiom, TermRule, PropRule, Extension>;

struct Theory {
  std::string name;
  std::vector<Item> items;

  const TypeDecl* find_type(const std::string& name) const;
  const FunDecl* find_fun(const std::string& name) const;
  const PredDecl* find_pred(const std::string& name) const;
  const Axiom* find_axiom(const std::string& name) const;
  // Any declared name: type constructor, function, predicate or axiom.
  bool declares(const std::string& name) const;
  std::vector<std::string> extensions() const;
};

// Free variables and type variables.
std::set<std::string> free_vars(const Term& t);
std::set<std::string> free_vars(const Formula& f);
std::set<std::string> free_type_vars(const Type& t);
std::set<std::string> free_type_vars(const Term& t);
std::set<std::string> free_type_vars(const Formula& f);

// Equality up to renaming of bound term and type variables.
bool alpha_equal(const Formula& a, const Formula& b);

// Capture-avoiding substitution of a term for a term variable and of a type
// for a type variable. Bound variables are renamed when they would capture.
Term subst(const Term& t, const std::string& x, const Term& value);
Formula subst(const Formula& f, const std::string& x, const Term& value);
Type subst_type(const Type& t, const std::string& a, const Type& value);
Term subst_type(const Term& t, const std::string& a, const Type& value);
Formula subst_type(const Formula& f, const std::string& a, const Type& value);

// `base` or base_1, base_2, ... whichever is first not in `avoid`.
std::string fresh_name(const std::string& base, const std::set<std::string>& avoid);

// S-expression rendering in the .tffx syntax.
std::string to_string(const Type& t);
std::string to_string(const Term& t);
std::string to_string(const Formula& f);

}  // namespace lpm::tff
