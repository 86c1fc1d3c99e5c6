#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lpm/tff/sexpr.hpp"
#include "lpm/tff/syntax.hpp"

namespace lpm::tff {

// Reader and writer for .tffx theory files. The grammar is documented in
// docs/format-tffx.md. Reading is syntactic plus name resolution; well-
// formedness is left to wf_theory.
struct TheoryFile {
  Theory theory;
  // Source line of each item, parallel to theory.items.
  std::vector<int> item_lines;
};

TheoryFile read_tffx(std::string_view text);
std::string write_tffx(const Theory& thy);

// Pieces shared with the proof reader. An atom is a variable when bound in
// `ctx`, otherwise a nullary symbol of `thy`.
Type read_type(const Sexpr& s, const std::vector<std::string>& tvars);
Term read_term(const Theory& thy, const Sexpr& s, const Context& ctx);
Formula read_formula(const Theory& thy, const Sexpr& s, const Context& ctx);
Context read_context(const Sexpr& s);

// Atoms with a fixed meaning in formulas; declarations may not use them.
bool is_reserved(std::string_view name);

}  // namespace lpm::tff
