#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lpm/dk/syntax.hpp"
#include "lpm/embed/translate.hpp"
#include "lpm/llproof/shape.hpp"
#include "lpm/tff/syntax.hpp"

namespace lpm::llproof {

// An extension rule: its parameters, how a node using it compiles, and the
// declaration of its constant R_<name> in the theory module.
struct ExtRule {
  std::string name;
  std::vector<ArgKind> arg_kinds;
  // Shape for well-kinded arguments. The constant field is filled in by the
  // registry.
  std::function<Shape(const tff::Theory&, const std::vector<Arg>&)> shape;
  // Declaration entries in the surface syntax, with `module` the theory.
  std::function<std::vector<dk::Entry>(const std::string& module)> declare;
};

class ExtRegistry {
 public:
  void add(ExtRule rule);
  const ExtRule* find(const std::string& name) const;
  std::vector<std::string> names() const;

  static std::string constant_name(const std::string& ext) { return "R_" + ext; }

  // Declares requested extensions while translating a theory.
  embed::ExtensionHook hook() const;

  // bool_case_nf and bool_case_ex.
  static const ExtRegistry& builtin();

 private:
  std::map<std::string, ExtRule> rules_;
};

}  // namespace lpm::llproof
