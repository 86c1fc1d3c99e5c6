#include "doctest.h"
#include "lpm/parallel/batch.hpp"
#include "support/bool_oracle.hpp"
#include "support/corpus.hpp"
#include "support/mutations.hpp"

using namespace lpm;

namespace {

bool same(const llproof::Verdict& a, const llproof::Verdict& b) {
  return a.accepted == b.accepted && a.kind == b.kind && a.path == b.path && a.rule == b.rule && a.message == b.message;
}

}  // namespace

TEST_CASE("thread count") { CHECK(parallel::thread_count() >= 1); }

TEST_CASE("normalize_all matches the serial reference") {
  kernel::Signature sig = llproof::theory_signature(test::theory("booleans"), embed::Mode::Shallow);
  test::BoolTerms bt;
  std::vector<kernel::Term> terms;
  for (std::size_t n = 1; n <= 8; ++n)
    for (auto t : bt.of_size(n)) terms.push_back(bt.to_kernel(t));
  auto par = parallel::normalize_all(sig, terms);
  auto ser = parallel::normalize_all_serial(sig, terms);
  REQUIRE(par.size() == ser.size());
  for (std::size_t i = 0; i < par.size(); ++i) {
    REQUIRE(par[i].has_value() == ser[i].has_value());
    if (par[i]) CHECK(kernel::alpha_eq(*par[i], *ser[i]));
  }
}

TEST_CASE("normalize_all reports fuel exhaustion per term") {
  kernel::Signature sig = llproof::theory_signature(test::theory("booleans"), embed::Mode::Shallow);
  test::BoolTerms bt;
  std::vector<kernel::Term> terms;
  for (auto t : bt.of_size(9)) terms.push_back(bt.to_kernel(t));
  kernel::Limits tight;
  tight.max_steps = 3;
  auto par = parallel::normalize_all(sig, terms, tight);
  auto ser = parallel::normalize_all_serial(sig, terms, tight);
  std::size_t out_of_fuel = 0;
  for (std::size_t i = 0; i < par.size(); ++i) {
    CHECK(par[i].has_value() == ser[i].has_value());
    out_of_fuel += !par[i];
  }
  CHECK(out_of_fuel > 0);
  CHECK(out_of_fuel < par.size());
}

TEST_CASE("check_all matches the serial reference") {
  for (const char* file : {"bool_commute.llpx", "set_diff.llpx"}) {
    llproof::ProofFile pf = test::proof(file);
    const tff::Theory& thy = test::theory(pf.theory);
    std::vector<parallel::CheckJob> jobs{{pf.goal, pf.root}};
    for (const test::Mutation& m : test::mutations(thy, pf)) jobs.push_back({pf.goal, m.root});
    for (embed::Mode mode : {embed::Mode::Deep, embed::Mode::Shallow}) {
      llproof::CertificateOptions opts;
      opts.mode = mode;
      kernel::Signature base = llproof::theory_signature(thy, mode);
      auto par = parallel::check_all(base, thy, jobs, opts);
      auto ser = parallel::check_all_serial(base, thy, jobs, opts);
      REQUIRE(par.size() == jobs.size());
      REQUIRE(ser.size() == jobs.size());
      CHECK(par[0].accepted);
      for (std::size_t i = 0; i < jobs.size(); ++i) CHECK(same(par[i], ser[i]));
    }
  }
}

TEST_CASE("parse_all matches the serial reference") {
  std::vector<std::string> texts;
  for (const std::string& file : test::proof_files()) {
    llproof::ProofFile pf = test::proof(file);
    for (const llproof::DkFile& f :
         llproof::emit_bundle(test::theory(pf.theory), {}, std::make_pair(pf.goal, pf.root)))
      texts.push_back(f.text());
  }
  texts.push_back("x : .");
  texts.push_back("[x] y --> .");
  auto par = parallel::parse_all(texts);
  auto ser = parallel::parse_all_serial(texts);
  REQUIRE(par.size() == texts.size());
  for (std::size_t i = 0; i < texts.size(); ++i) {
    REQUIRE(par[i].index() == ser[i].index());
    if (const auto* e = std::get_if<std::vector<dk::Entry>>(&par[i])) {
      CHECK(dk::same(*e, std::get<std::vector<dk::Entry>>(ser[i])));
    } else {
      const auto& a = std::get<dk::SyntaxError>(par[i]);
      const auto& b = std::get<dk::SyntaxError>(ser[i]);
      CHECK(a.where().line == b.where().line);
      CHECK(a.where().column == b.where().column);
    }
  }
  CHECK(par.back().index() == 1);
}
