#pragma once

#include <string_view>
#include <vector>

#include "lpm/dk/syntax.hpp"
#include "lpm/kernel/signature.hpp"

namespace lpm::embed {

// Deep leaves the logical symbols abstract; shallow adds the rewrite rules
// that unfold prf into framework products.
enum class Mode { Deep, Shallow };

inline constexpr std::string_view kLogicModule = "logic";

std::string_view mode_name(Mode m);

// Module `logic`: Prop, prf, type, term and the twelve connective, quantifier
// and equality constants, followed in shallow mode by the rules for prf.
std::vector<dk::Entry> prelude(Mode mode = Mode::Shallow);

// prelude(mode) checked into a fresh signature.
kernel::Signature prelude_signature(Mode mode = Mode::Shallow, const kernel::Limits& limits = {});

}  // namespace lpm::embed
