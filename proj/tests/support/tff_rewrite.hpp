#pragma once

#include <vector>

#include "lpm/tff/syntax.hpp"

namespace lpm::test {

// Every result of applying one term or proposition rule of `thy` once, at
// any position, including under binders.
std::vector<tff::Term> rewrite_once(const tff::Theory& thy, const tff::Term& t);
std::vector<tff::Formula> rewrite_once(const tff::Theory& thy, const tff::Formula& f);

}  // namespace lpm::test
