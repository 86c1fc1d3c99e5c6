#include <map>

#include "doctest.h"
#include "lpm/llproof/certificate.hpp"
#include "lpm/tff/check.hpp"
#include "lpm/tff/format.hpp"
#include "support/generators.hpp"
#include "support/translation_checks.hpp"

using namespace lpm;

TEST_CASE("translation correctness on random theories") {
  int types = 0, terms = 0, formulas = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    tff::Theory thy = test::random_theory(seed);
    test::TranslationReport r = test::check_translation(thy, seed, 10);
    CHECK_MESSAGE(r.failures.empty(), (r.failures.empty() ? "" : r.failures.front()));
    types += r.types;
    terms += r.terms;
    formulas += r.formulas;
  }
  CHECK(types == 2000);
  CHECK(formulas == 2000);
  CHECK(terms > 1000);
}

TEST_CASE("random theories are deterministic in the seed") {
  for (std::uint64_t seed : {3u, 77u, 199u}) {
    tff::Theory a = test::random_theory(seed);
    tff::Theory b = test::random_theory(seed);
    CHECK(a.items.size() == b.items.size());
    CHECK(tff::write_tffx(a) == tff::write_tffx(b));
  }
}

TEST_CASE("Pred and Fun with and without elimination agree") {
  std::map<std::string, int> labels;
  int wrong = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    test::PredFunInstance inst = test::random_pred_fun(seed);
    ++labels[inst.label.substr(0, inst.label.find(' '))];
    if (!inst.sound) ++wrong;
    llproof::Verdict by_mode[2][2];
    for (int mode = 0; mode < 2; ++mode) {
      for (int eliminate = 0; eliminate < 2; ++eliminate) {
        llproof::CertificateOptions opts;
        opts.mode = mode ? embed::Mode::Shallow : embed::Mode::Deep;
        opts.eliminate_pred_fun = eliminate;
        by_mode[mode][eliminate] = llproof::check_certificate(inst.theory, inst.goal, inst.proof, opts);
      }
    }
    INFO("seed ", seed, " ", inst.label, ": ", by_mode[1][1].describe(), " / ", by_mode[1][0].describe());
    for (int mode = 0; mode < 2; ++mode) {
      CHECK(by_mode[mode][0].accepted == inst.sound);
      CHECK(by_mode[mode][1].accepted == inst.sound);
      // A wrong pair is blamed on its premise either way.
      CHECK(by_mode[mode][0].path == by_mode[mode][1].path);
    }
  }
  // Both kinds and every arity occur.
  for (const char* kind : {"pred", "fun"})
    for (int n = 0; n <= 4; ++n) CHECK_MESSAGE(labels[std::string(kind) + "/" + std::to_string(n)] > 0, kind, n);
  CHECK(wrong > 0);
  CHECK(wrong < 50);
}
