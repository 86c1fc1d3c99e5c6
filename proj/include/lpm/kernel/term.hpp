#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lpm::kernel {

// Interned identifier. Two names are equal iff they point at the same pool
// entry, so comparison and hashing are O(1). The pool is process-wide and
// thread-safe; entries are never freed.
class Name {
 public:
  Name();
  explicit Name(std::string_view text);

  const std::string& str() const { return *text_; }
  bool empty() const { return text_->empty(); }

  bool operator==(const Name& other) const { return text_ == other.text_; }
  bool operator<(const Name& other) const { return *text_ < *other.text_; }

  std::size_t hash() const { return std::hash<const void*>{}(text_); }

 private:
  const std::string* text_;
};

struct NameHash {
  std::size_t operator()(const Name& n) const { return n.hash(); }
};

enum class Tag : std::uint8_t { Var, Const, App, Lam, Pi, Sort };
enum class Sort : std::uint8_t { Type, Kind };

class Node;
using Term = std::shared_ptr<const Node>;

// Immutable term node. Bound variables are de Bruijn indices; binder names
// are kept only for printing and never take part in equality.
class Node {
 public:
  Tag tag() const { return tag_; }

  // Var
  std::uint32_t index() const { return index_; }
  // Const: the qualified constant name. Lam/Pi: the display name of the binder.
  const Name& name() const { return name_; }
  // Sort
  Sort sort() const { return sort_; }
  // App: function and argument. Lam/Pi: domain and body.
  const Term& fn() const { return a_; }
  const Term& arg() const { return b_; }
  const Term& domain() const { return a_; }
  const Term& body() const { return b_; }

  // One more than the largest loose de Bruijn index, 0 for closed terms.
  std::uint32_t loose() const { return loose_; }

  Node(Tag tag, Sort sort, std::uint32_t index, std::uint32_t loose, Name name, Term a, Term b)
      : tag_(tag), sort_(sort), index_(index), loose_(loose), name_(name), a_(std::move(a)), b_(std::move(b)) {}

 private:
  Tag tag_;
  Sort sort_;
  std::uint32_t index_;
  std::uint32_t loose_;
  Name name_;
  Term a_;
  Term b_;
};

Term mk_var(std::uint32_t index);
Term mk_const(Name name);
inline Term mk_const(std::string_view name) { return mk_const(Name(name)); }
Term mk_app(Term fn, Term arg);
Term mk_app(Term fn, std::span<const Term> args);
Term mk_lam(Name binder, Term domain, Term body);
Term mk_pi(Name binder, Term domain, Term body);
// Non-dependent arrow A -> B; B is given in the outer context and shifted.
Term mk_arrow(Term domain, Term codomain);
Term mk_sort(Sort s);
Term mk_type();
Term mk_kind();

inline bool is_type(const Term& t) { return t->tag() == Tag::Sort && t->sort() == Sort::Type; }
inline bool is_kind(const Term& t) { return t->tag() == Tag::Sort && t->sort() == Sort::Kind; }

// Head and arguments of an application spine: f a1 ... an.
struct Spine {
  Term head;
  std::vector<Term> args;
};
Spine unspine(const Term& t);
const Term& head_of(const Term& t);

// α-equality; since binders are nameless this is structural equality.
bool alpha_eq(const Term& a, const Term& b);

// Adds `by` to every loose index >= cutoff.
Term shift(const Term& t, std::int64_t by, std::uint32_t cutoff = 0);

// body[0 := value]: the β-reduct of (λ. body) value.
Term instantiate(const Term& body, const Term& value);

// True if de Bruijn index `index` occurs free in t.
bool occurs(const Term& t, std::uint32_t index);

// Number of nodes.
std::size_t term_size(const Term& t);

// Printer in the surface syntax. Loose variables are named from `ctx`
// (innermost last); anything past it prints as #k.
std::string show(const Term& t, const std::vector<Name>& ctx = {});

}  // namespace lpm::kernel
