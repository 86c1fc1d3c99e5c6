#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lpm/dk/syntax.hpp"
#include "lpm/kernel/signature.hpp"
#include "lpm/kernel/term.hpp"
#include "lpm/llproof/certificate.hpp"

namespace lpm::parallel {

// Batch entry points. Each has an OpenMP version and a serial reference with
// identical results; the signature is shared read-only between threads.

int thread_count();

// Normal form of each term, or nullopt when its fuel runs out.
using Normalized = std::optional<kernel::Term>;
std::vector<Normalized> normalize_all(const kernel::Signature& sig, const std::vector<kernel::Term>& terms,
                                      const kernel::Limits& limits = {});
std::vector<Normalized> normalize_all_serial(const kernel::Signature& sig, const std::vector<kernel::Term>& terms,
                                             const kernel::Limits& limits = {});

struct CheckJob {
  tff::Formula goal;
  llproof::Node proof;
};

// `base` comes from llproof::theory_signature(thy, options.mode).
std::vector<llproof::Verdict> check_all(const kernel::Signature& base, const tff::Theory& thy,
                                        const std::vector<CheckJob>& jobs, const llproof::CertificateOptions& options);
std::vector<llproof::Verdict> check_all_serial(const kernel::Signature& base, const tff::Theory& thy,
                                               const std::vector<CheckJob>& jobs,
                                               const llproof::CertificateOptions& options);

// Parsed entries or the syntax error of each file.
using Parsed = std::variant<std::vector<dk::Entry>, dk::SyntaxError>;
std::vector<Parsed> parse_all(const std::vector<std::string>& texts);
std::vector<Parsed> parse_all_serial(const std::vector<std::string>& texts);

}  // namespace lpm::parallel
