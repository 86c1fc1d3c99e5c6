#pragma once

#include <string>
#include <vector>

#include "lpm/llproof/format.hpp"
#include "lpm/llproof/proof.hpp"
#include "lpm/tff/syntax.hpp"

namespace lpm::test {

// A proof tree differing from a correct one at exactly one node.
struct Mutation {
  // swap-premises, swap-conclusions, swap-hypotheses, wrong-witness or
  // non-fresh.
  std::string category;
  std::string description;
  llproof::Path path;
  llproof::Node root;
};

// Every single-node mutation of the given categories that the generator
// knows for `proof`.
std::vector<Mutation> mutations(const tff::Theory& thy, const llproof::ProofFile& proof);

}  // namespace lpm::test
