#include "lpm/parallel/batch.hpp"

#include <omp.h>

#include "lpm/kernel/error.hpp"
#include "lpm/kernel/reduce.hpp"

namespace lpm::parallel {

int thread_count() { return omp_get_max_threads(); }

namespace {

Normalized normalize_one(const kernel::Signature& sig, const kernel::Term& t, const kernel::Limits& limits) {
  kernel::Fuel fuel(limits);
  try {
    return kernel::normalize(sig, t, fuel);
  } catch (const kernel::KernelError&) {
    return std::nullopt;
  }
}

llproof::Verdict check_one(const kernel::Signature& base, const tff::Theory& thy, const CheckJob& job,
                           const llproof::CertificateOptions& options) {
  try {
    return llproof::check_certificate(base, thy, job.goal, job.proof, options);
  } catch (const std::exception& e) {
    llproof::Verdict v;
    v.kind = "internal";
    v.message = e.what();
    return v;
  }
}

Parsed parse_one(const std::string& text) {
  try {
    return dk::parse_file(text);
  } catch (const dk::SyntaxError& e) {
    return e;
  }
}

// Runs f(i) for every index, writing into a pre-sized vector so the output
// order never depends on scheduling.
template <class R, class F>
std::vector<R> run(std::size_t n, F&& f, bool threaded) {
  std::vector<std::optional<R>> slots(n);
  const auto count = static_cast<std::int64_t>(n);
  if (threaded) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) slots[static_cast<std::size_t>(i)].emplace(f(static_cast<std::size_t>(i)));
  } else {
    for (std::int64_t i = 0; i < count; ++i) slots[static_cast<std::size_t>(i)].emplace(f(static_cast<std::size_t>(i)));
  }
  std::vector<R> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace

std::vector<Normalized> normalize_all(const kernel::Signature& sig, const std::vector<kernel::Term>& terms,
                                      const kernel::Limits& limits) {
  return run<Normalized>(terms.size(), [&](std::size_t i) { return normalize_one(sig, terms[i], limits); }, true);
}

std::vector<Normalized> normalize_all_serial(const kernel::Signature& sig, const std::vector<kernel::Term>& terms,
                                             const kernel::Limits& limits) {
  return run<Normalized>(terms.size(), [&](std::size_t i) { return normalize_one(sig, terms[i], limits); }, false);
}

std::vector<llproof::Verdict> check_all(const kernel::Signature& base, const tff::Theory& thy,
                                        const std::vector<CheckJob>& jobs, const llproof::CertificateOptions& options) {
  return run<llproof::Verdict>(jobs.size(), [&](std::size_t i) { return check_one(base, thy, jobs[i], options); }, true);
}

std::vector<llproof::Verdict> check_all_serial(const kernel::Signature& base, const tff::Theory& thy,
                                               const std::vector<CheckJob>& jobs,
                                               const llproof::CertificateOptions& options) {
  return run<llproof::Verdict>(jobs.size(), [&](std::size_t i) { return check_one(base, thy, jobs[i], options); },
                               false);
}

std::vector<Parsed> parse_all(const std::vector<std::string>& texts) {
  return run<Parsed>(texts.size(), [&](std::size_t i) { return parse_one(texts[i]); }, true);
}

std::vector<Parsed> parse_all_serial(const std::vector<std::string>& texts) {
  return run<Parsed>(texts.size(), [&](std::size_t i) { return parse_one(texts[i]); }, false);
}

}  // namespace lpm::parallel
