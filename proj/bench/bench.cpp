// Wall time of the OpenMP batch entry points against their serial
// references. Usage: lpm_bench [max_bool_size], default 10.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "lpm/parallel/batch.hpp"
#include "support/bool_oracle.hpp"
#include "support/corpus.hpp"
#include "support/mutations.hpp"

using namespace lpm;

namespace {

template <class F>
double time_ms(F&& f) {
  auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

void row(const char* what, std::size_t n, double par, double ser) {
  std::printf("%-24s %9zu %12.1f %12.1f %8.2fx\n", what, n, par, ser, par > 0 ? ser / par : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t max_size = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 10;
  std::printf("threads: %d\n", parallel::thread_count());
  std::printf("%-24s %9s %12s %12s %9s\n", "batch", "items", "parallel ms", "serial ms", "speedup");

  kernel::Signature sig = llproof::theory_signature(test::theory("booleans"), embed::Mode::Shallow);
  test::BoolTerms bt;
  std::vector<kernel::Term> terms;
  for (std::size_t n = 1; n <= max_size; ++n)
    for (auto t : bt.of_size(n)) terms.push_back(bt.to_kernel(t));
  double par = time_ms([&] { parallel::normalize_all(sig, terms); });
  double ser = time_ms([&] { parallel::normalize_all_serial(sig, terms); });
  row("normalize bool terms", terms.size(), par, ser);

  for (const char* file : {"bool_commute.llpx", "set_diff.llpx"}) {
    llproof::ProofFile pf = test::proof(file);
    const tff::Theory& thy = test::theory(pf.theory);
    std::vector<parallel::CheckJob> jobs;
    // Repeat the batch so that it is long enough to time.
    for (int rep = 0; rep < 20; ++rep) {
      jobs.push_back({pf.goal, pf.root});
      for (const test::Mutation& m : test::mutations(thy, pf)) jobs.push_back({pf.goal, m.root});
    }
    llproof::CertificateOptions opts;
    kernel::Signature base = llproof::theory_signature(thy, opts.mode);
    par = time_ms([&] { parallel::check_all(base, thy, jobs, opts); });
    ser = time_ms([&] { parallel::check_all_serial(base, thy, jobs, opts); });
    row(file, jobs.size(), par, ser);
  }

  std::vector<std::string> texts;
  for (const std::string& file : test::proof_files()) {
    llproof::ProofFile pf = test::proof(file);
    for (int rep = 0; rep < 50; ++rep)
      for (const llproof::DkFile& f :
           llproof::emit_bundle(test::theory(pf.theory), {}, std::make_pair(pf.goal, pf.root)))
        texts.push_back(f.text());
  }
  par = time_ms([&] { parallel::parse_all(texts); });
  ser = time_ms([&] { parallel::parse_all_serial(texts); });
  row("parse emitted files", texts.size(), par, ser);
}
