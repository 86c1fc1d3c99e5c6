#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lpm/dk/syntax.hpp"
#include "lpm/kernel/error.hpp"
#include "lpm/kernel/signature.hpp"

namespace lpm::dk {

// A kernel failure attributed to a surface entry.
class LoadError : public std::runtime_error {
 public:
  LoadError(kernel::ErrorKind kind, Span span, const std::string& message);

  kernel::ErrorKind kind() const { return kind_; }
  Span span() const { return span_; }
  const std::string& detail() const { return detail_; }

 private:
  kernel::ErrorKind kind_;
  Span span_;
  std::string detail_;
};

// Resolves surface names against a signature. An unqualified name is a local
// binder if one is in scope, else `module.name`; a qualified name must be
// declared as written.
class Elaborator {
 public:
  Elaborator(const kernel::Signature& sig, std::string module) : sig_(sig), module_(std::move(module)) {}

  // `scope` lists enclosing binder names, innermost last.
  kernel::Term term(const Expr& e, std::vector<std::string>& scope) const;
  kernel::Term term(const Expr& e) const {
    std::vector<std::string> scope;
    return term(e, scope);
  }

  std::string qualify(std::string_view name) const { return module_ + "." + std::string(name); }

 private:
  const kernel::Signature& sig_;
  std::string module_;
};

// Checks and installs entries in order. On error the signature keeps the
// entries before the failing one.
void load_entries(kernel::Signature& sig, std::string_view module, const std::vector<Entry>& entries,
                  const kernel::Limits& limits = {});

}  // namespace lpm::dk
