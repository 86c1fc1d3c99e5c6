#pragma once

#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "lpm/kernel/term.hpp"

namespace lpm::kernel {

// Reduction budget for one top-level operation.
struct Limits {
  std::uint64_t max_steps = 100000;
  std::uint32_t max_conv_depth = 10000;
};

class Fuel {
 public:
  Fuel() : Fuel(Limits{}) {}
  explicit Fuel(const Limits& limits) : steps_left_(limits.max_steps), depth_limit_(limits.max_conv_depth) {}

  // Consumes one rewrite or β step; throws fuel-exhausted when none is left.
  void step();
  std::uint64_t steps_left() const { return steps_left_; }

  // Scoped conversion-depth counter.
  class Depth {
   public:
    explicit Depth(Fuel& f);
    ~Depth() { --fuel_.depth_; }
    Depth(const Depth&) = delete;
    Depth& operator=(const Depth&) = delete;

   private:
    Fuel& fuel_;
  };

 private:
  std::uint64_t steps_left_;
  std::uint32_t depth_limit_;
  std::uint32_t depth_ = 0;
};

// Typed pattern variables of a rule, outermost first. Each type lives in the
// context of the variables before it.
using RuleContext = std::vector<std::pair<Name, Term>>;

// l ↪Δ r. Pattern variable Δ[i] is de Bruijn index |Δ|-1-i in lhs and rhs.
struct Rule {
  Name head;
  RuleContext ctx;
  Term lhs;
  Term rhs;
  Term type;
  std::vector<Term> pattern_args;
};

struct Declaration {
  Name name;
  Term type;
};

class Signature {
 public:
  using Item = std::variant<Declaration, Rule>;

  bool contains(const Name& name) const { return decls_.count(name) != 0; }
  const Term* type_of(const Name& name) const;
  const std::vector<Rule>& rules_for(const Name& name) const;
  bool has_rules(const Name& name) const { return rules_.count(name) != 0; }
  const std::vector<Item>& items() const { return items_; }
  std::size_t rule_count() const;

  // η-conversion in the conversion check; off unless requested.
  bool eta() const { return eta_; }
  void set_eta(bool on) { eta_ = on; }

  // The mutators check the judgment first and leave the signature untouched
  // when they throw.
  void declare(const Name& name, const Term& type, Fuel& fuel);
  void add_rewrite(const RuleContext& ctx, const Term& lhs, const Term& rhs, Fuel& fuel);
  // c : A := t, installed as the declaration c : A and the rule [] c ↪ t.
  // The body is checked before c is declared, so it cannot mention c.
  void define(const Name& name, const Term& type, const Term& body, Fuel& fuel);

 private:
  std::vector<Item> items_;
  std::unordered_map<Name, std::size_t, NameHash> decls_;
  std::unordered_map<Name, std::vector<Rule>, NameHash> rules_;
  bool eta_ = false;
};

// Persistent variants: the argument is left unchanged.
Signature declare(const Signature& sig, const Name& name, const Term& type, Fuel& fuel);
Signature add_rewrite(const Signature& sig, const RuleContext& ctx, const Term& lhs, const Term& rhs, Fuel& fuel);

// Re-derives every declaration and rule from the empty signature, in order.
Signature replay(const Signature& sig, const Limits& limits = {});

// Same items in the same order, up to α-equality.
bool same_items(const Signature& a, const Signature& b);

}  // namespace lpm::kernel
