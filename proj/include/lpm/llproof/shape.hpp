#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lpm/llproof/proof.hpp"
#include "lpm/tff/syntax.hpp"

namespace lpm::llproof {

// A theory symbol applied to its type arguments only, e.g. the predicate P
// of a Pred node viewed as a function of its term arguments.
struct Symbol {
  std::string name;
  std::vector<tff::Type> type_args;
};

using KernelArg = std::variant<Arg, Symbol>;

struct Premise {
  enum class Fresh { None, Constant, Type };
  Fresh fresh = Fresh::None;
  // Fresh::Constant: the type of the new constant.
  tff::Type fresh_type;
  // Hypotheses added to the sequent, in binding order.
  std::vector<tff::Formula> hypotheses;
};

// How a node compiles: the rule constant applied to its parameters, one
// continuation per premise and the principal hypotheses.
struct Shape {
  // Qualified constant name, e.g. rules.R_or.
  std::string constant;
  std::vector<KernelArg> args;
  std::vector<Premise> premises;
  std::vector<tff::Formula> conclusions;
};

class ExtRegistry;

// Module holding the certificate and the Pred/Fun lemmas.
inline constexpr std::string_view kCertModule = "cert";

// Lemma names for native Pred/Fun steps of arity n.
std::string pred_lemma(std::size_t n);
std::string fun_lemma(std::size_t n);

// The shape of a node of `thy`. Checks parameter kinds, fresh names being
// present exactly where required, and extension registration; `path` is
// used in errors. Pred and Fun map to the lemmas above.
Shape shape_of(const tff::Theory& thy, const Node& n, const ExtRegistry& registry, const Path& path);

}  // namespace lpm::llproof
