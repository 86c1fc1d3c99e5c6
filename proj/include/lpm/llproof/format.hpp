#pragma once

#include <string>
#include <string_view>

#include "lpm/llproof/ext.hpp"
#include "lpm/llproof/proof.hpp"
#include "lpm/tff/sexpr.hpp"
#include "lpm/tff/syntax.hpp"

namespace lpm::llproof {

// Reader and writer for .llpx proof files; see docs/format-llpx.md.
struct ProofFile {
  std::string theory;
  tff::Formula goal;
  Node root;
};

// Name of the theory a proof file refers to, without reading the rest.
std::string llpx_theory(std::string_view text);

// Symbols resolve against `thy`, whose name must match the file. Premise
// counts are checked against each rule's shape. Throws tff::FormatError.
ProofFile read_llpx(std::string_view text, const tff::Theory& thy,
                    const ExtRegistry& registry = ExtRegistry::builtin());
std::string write_llpx(const ProofFile& proof);

}  // namespace lpm::llproof
