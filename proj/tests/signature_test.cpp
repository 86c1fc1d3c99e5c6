#include "doctest.h"
#include "lpm/dk/loader.hpp"
#include "lpm/embed/prelude.hpp"
#include "lpm/kernel/error.hpp"
#include "lpm/kernel/reduce.hpp"
#include "lpm/llproof/certificate.hpp"
#include "lpm/llproof/rules_prelude.hpp"
#include "support/corpus.hpp"

using namespace lpm;
using kernel::Name;
using kernel::Term;

namespace {

kernel::ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const kernel::KernelError& e) {
    return e.kind();
  }
  FAIL("no kernel error");
  return kernel::ErrorKind::TypeMismatch;
}

const kernel::Signature& pairs() {
  static const kernel::Signature sig = llproof::theory_signature(test::theory("pair"), embed::Mode::Shallow);
  return sig;
}

Term P(std::string_view text, std::vector<std::string> scope = {}) {
  return test::term(pairs(), "pair", text, std::move(scope));
}

kernel::RuleContext tau_x() { return {{Name("x"), P("logic.term tau")}}; }

}  // namespace

TEST_CASE("declare a type constant on the prelude") {
  kernel::Signature base = embed::prelude_signature();
  kernel::Fuel fuel;
  std::size_t before = base.items().size();
  kernel::Signature ext = kernel::declare(base, Name("t.bool"), kernel::mk_const("logic.type"), fuel);
  CHECK(ext.contains(Name("t.bool")));
  CHECK_FALSE(base.contains(Name("t.bool")));
  CHECK(base.items().size() == before);
  CHECK(ext.items().size() == before + 1);
}

TEST_CASE("declare errors") {
  kernel::Signature sig = pairs();
  kernel::Fuel fuel;
  std::size_t before = sig.items().size();
  CHECK(kind_of([&] { sig.declare(Name("pair.x"), P("a"), fuel); }) == kernel::ErrorKind::NotASort);
  CHECK(kind_of([&] { sig.declare(Name("logic.prf"), P("logic.Prop -> Type"), fuel); }) ==
        kernel::ErrorKind::DuplicateName);
  CHECK(sig.items().size() == before);
}

TEST_CASE("add_rewrite installs a typed rule") {
  const tff::Theory& thy = test::theory("booleans");
  kernel::Signature sig = llproof::theory_signature(thy, embed::Mode::Shallow);
  kernel::Fuel fuel;
  std::size_t before = sig.rule_count();
  kernel::RuleContext ctx = {{Name("a"), test::term(sig, "booleans", "logic.term bool")}};
  kernel::Signature ext = kernel::add_rewrite(sig, ctx, test::term(sig, "booleans", "andb true a", {"a"}),
                                              kernel::mk_var(0), fuel);
  CHECK(ext.rule_count() == before + 1);
  CHECK(sig.rule_count() == before);
  const kernel::Rule& r = ext.rules_for(Name("booleans.andb")).back();
  CHECK(r.ctx.size() == 1);
  CHECK(kernel::alpha_eq(r.type, test::term(sig, "booleans", "logic.term bool")));
}

TEST_CASE("add_rewrite errors") {
  kernel::Signature sig = pairs();
  kernel::Fuel fuel;
  std::size_t before = sig.items().size();
  CHECK(kind_of([&] { sig.add_rewrite(tau_x(), kernel::mk_var(0), P("fst (pair x x)", {"x"}), fuel); }) ==
        kernel::ErrorKind::NonPatternLhs);
  CHECK(kind_of([&] { sig.add_rewrite(tau_x(), P("fst (pair x x)", {"x"}), kernel::mk_var(1), fuel); }) ==
        kernel::ErrorKind::FvViolation);
  CHECK(kind_of([&] { sig.add_rewrite(tau_x(), P("fst (pair x x)", {"x"}), P("pair x x", {"x"}), fuel); }) ==
        kernel::ErrorKind::IllTypedSide);
  // A variable of Δ that the left-hand side does not bind.
  kernel::RuleContext two = {{Name("x"), P("logic.term tau")}, {Name("y"), P("logic.term tau")}};
  CHECK(kind_of([&] { sig.add_rewrite(two, P("fst (pair x x)", {"x", "y"}), kernel::mk_var(0), fuel); }) ==
        kernel::ErrorKind::FvViolation);
  CHECK(sig.items().size() == before);
}

TEST_CASE("rules are tried in declaration order") {
  kernel::Signature sig = pairs();
  dk::load_entries(sig, "order", dk::parse_file("c : logic.term pair.tau.\n[] c --> pair.a.\n[] c --> pair.fst (pair.pair pair.a pair.a).\n"));
  kernel::Fuel fuel;
  Term r = kernel::whnf(sig, kernel::mk_const("order.c"), fuel);
  CHECK(kernel::alpha_eq(r, kernel::mk_const("pair.a")));
}

TEST_CASE("define installs a declaration and a rule") {
  kernel::Signature sig = pairs();
  kernel::Fuel fuel;
  sig.define(Name("pair.twice"), P("logic.term prod"), P("pair a a"), fuel);
  CHECK(sig.contains(Name("pair.twice")));
  CHECK(sig.rules_for(Name("pair.twice")).size() == 1);
  CHECK(kernel::alpha_eq(kernel::normalize(sig, test::term(sig, "pair", "fst twice"), fuel), P("a")));
  CHECK(kind_of([&] { sig.define(Name("pair.bad"), P("logic.term tau"), P("pair a a"), fuel); }) ==
        kernel::ErrorKind::TypeMismatch);
  CHECK_FALSE(sig.contains(Name("pair.bad")));
}

TEST_CASE("replay reproduces every signature") {
  for (embed::Mode mode : {embed::Mode::Deep, embed::Mode::Shallow}) {
    for (const char* name : {"booleans", "bset", "pair", "rel"}) {
      kernel::Signature sig = llproof::theory_signature(test::theory(name), mode);
      kernel::Signature again = kernel::replay(sig);
      CHECK(kernel::same_items(sig, again));
      CHECK(again.rule_count() == sig.rule_count());
    }
  }
}

TEST_CASE("load errors carry the entry span") {
  kernel::Signature sig = pairs();
  try {
    dk::load_entries(sig, "pair2", dk::parse_file("ok : logic.term pair.tau.\n\nbad : pair.a.\n"));
    FAIL("accepted");
  } catch (const dk::LoadError& e) {
    CHECK(e.kind() == kernel::ErrorKind::NotASort);
    CHECK(e.span().begin.line == 3);
  }
  // The entry before the failing one stays.
  CHECK(sig.contains(Name("pair2.ok")));
}
