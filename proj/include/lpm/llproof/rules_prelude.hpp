#pragma once

#include <string_view>
#include <vector>

#include "lpm/dk/syntax.hpp"
#include "lpm/embed/prelude.hpp"
#include "lpm/kernel/signature.hpp"

namespace lpm::llproof {

inline constexpr std::string_view kRulesModule = "rules";

// Module `rules`: one constant per inference rule. Deep mode declares them
// abstractly. Shallow mode declares excluded middle as the only axiom, defines
// NNPP and Contr, and gives every rule constant a defining rewrite rule.
std::vector<dk::Entry> rules_prelude(embed::Mode mode);

// logic + rules, checked from the empty signature.
kernel::Signature base_signature(embed::Mode mode, const kernel::Limits& limits = {});

}  // namespace lpm::llproof
