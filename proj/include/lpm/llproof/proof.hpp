#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lpm/tff/syntax.hpp"

namespace lpm::llproof {

enum class Rule {
  Bot,
  NotTop,
  Ax,
  Cut,
  Neq,
  Sym,
  NotNot,
  And,
  Or,
  Imp,
  Iff,
  NotAnd,
  NotOr,
  NotImp,
  NotIff,
  Exists,
  Forall,
  NotExists,
  NotForall,
  ExistsType,
  ForallType,
  NotExistsType,
  NotForallType,
  Pred,
  Fun,
  Subst,
  Ext,
};

// Tag as written in .llpx files, e.g. "notforall".
std::string_view rule_tag(Rule r);
std::optional<Rule> rule_from_tag(std::string_view tag);

// λx:τ. φ
struct Abstraction {
  std::string var;
  tff::Type type;
  tff::Formula body;
  bool operator==(const Abstraction&) const = default;
};

// λα:type. φ
struct TypeAbstraction {
  std::string var;
  tff::Formula body;
  bool operator==(const TypeAbstraction&) const = default;
};

using Arg = std::variant<tff::Type, tff::Term, tff::Formula, Abstraction, TypeAbstraction>;
enum class ArgKind { Type, Term, Formula, Abstraction, TypeAbstraction };
ArgKind kind_of(const Arg& a);
std::string_view arg_kind_name(ArgKind k);

Abstraction abstraction_of(const Arg& a);
tff::Formula apply(const Abstraction& p, const tff::Term& t);
tff::Formula apply(const TypeAbstraction& p, const tff::Type& t);

// One premise t_i ≠ u_i of Pred/Fun, at type τ'_i.
struct EqPair {
  tff::Type type;
  tff::Term lhs;
  tff::Term rhs;
  bool operator==(const EqPair&) const = default;
};

struct Node {
  Rule rule = Rule::Bot;
  // Explicit parameters, in the order of rule_arg_kinds (or the extension's).
  std::vector<Arg> args;
  // Exists/NotForall: the fresh constant. ExistsType/NotForallType: the
  // fresh type.
  std::string fresh;
  // Pred: the predicate. Fun: the function. Ext: the extension name.
  std::string symbol;
  // Pred/Fun: type arguments of the symbol and one pair per argument.
  std::vector<tff::Type> type_args;
  std::vector<EqPair> pairs;
  // Fun: the result type τ of f.
  tff::Type result;
  // Principal hypotheses as they occur in the sequent, when they differ from
  // the ones computed from the parameters (congruent modulo rewriting).
  std::optional<std::vector<tff::Formula>> conclusions;
  // Hypotheses added by each premise, when they differ from the computed ones.
  std::optional<std::vector<std::vector<tff::Formula>>> hypotheses;
  std::vector<Node> premises;

  bool operator==(const Node&) const = default;
};

// Parameters expected by the core rules; Pred, Fun and Ext are structured
// differently and return an empty list.
std::vector<ArgKind> rule_arg_kinds(Rule r);
// Rules that introduce a fresh constant or fresh type.
bool introduces_constant(Rule r);
bool introduces_type(Rule r);

class ProofError : public std::runtime_error {
 public:
  ProofError(std::string kind, std::string path, const std::string& message);

  const std::string& kind() const { return kind_; }
  const std::string& path() const { return path_; }
  const std::string& detail() const { return detail_; }

 private:
  std::string kind_;
  std::string path_;
  std::string detail_;
};

// Position of a node: premise indices from the root.
using Path = std::vector<int>;
std::string path_string(const Path& p);
// Inverse of path_string; nullopt for anything else.
std::optional<Path> parse_path(std::string_view s);
const Node* node_at(const Node& root, const Path& p);

// Number of nodes and a pre-order list of rule tags.
std::size_t node_count(const Node& n);
std::vector<Rule> preorder(const Node& n);
bool contains_pred_fun(const Node& n);

// Rewrites every Pred and Fun node into a chain of Subst nodes closed by Ax
// (Pred) or Neq (Fun). Other nodes are kept. When `origin` is given it maps
// each position of the result to the source node it came from.
Node eliminate_pred_fun(const Node& n, std::map<Path, Path>* origin = nullptr);

}  // namespace lpm::llproof
