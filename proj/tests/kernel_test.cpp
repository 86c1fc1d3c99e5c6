#include <random>

#include "doctest.h"
#include "lpm/dk/loader.hpp"
#include "lpm/dk/quote.hpp"
#include "lpm/kernel/error.hpp"
#include "lpm/kernel/reduce.hpp"
#include "lpm/kernel/typing.hpp"
#include "lpm/llproof/certificate.hpp"
#include "support/corpus.hpp"

using namespace lpm;
using kernel::Term;

namespace {

const kernel::Signature& bools() {
  static const kernel::Signature sig = llproof::theory_signature(test::theory("booleans"), embed::Mode::Shallow);
  return sig;
}

const kernel::Signature& pairs() {
  static const kernel::Signature sig = llproof::theory_signature(test::theory("pair"), embed::Mode::Shallow);
  return sig;
}

Term B(std::string_view text, std::vector<std::string> scope = {}) {
  return test::term(bools(), "booleans", text, std::move(scope));
}

Term P(std::string_view text, std::vector<std::string> scope = {}) {
  return test::term(pairs(), "pair", text, std::move(scope));
}

kernel::ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const kernel::KernelError& e) {
    return e.kind();
  }
  FAIL("no kernel error");
  return kernel::ErrorKind::TypeMismatch;
}

// Random boolean-valued terms over `vars` variables of type term bool, with
// β-redexes mixed in.
struct BoolGen {
  std::mt19937_64 rng;
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

  Term gen(int depth, int vars) {
    int choice = pick(depth == 0 ? 3 : 7);
    if (choice == 2 && vars == 0) choice = 0;
    switch (choice) {
      case 0: return B("true");
      case 1: return B("false");
      case 3: return kernel::mk_app(B("notb"), gen(depth - 1, vars));
      case 4: return kernel::mk_app(kernel::mk_app(B("andb"), gen(depth - 1, vars)), gen(depth - 1, vars));
      case 5: return kernel::mk_app(kernel::mk_app(B("orb"), gen(depth - 1, vars)), gen(depth - 1, vars));
      case 6: {
        Term body = gen(depth - 1, vars + 1);
        return kernel::mk_app(kernel::mk_lam(kernel::Name("x"), B("logic.term bool"), body), gen(depth - 1, vars));
      }
      default: return kernel::mk_var(std::uint32_t(pick(vars)));
    }
  }
};

// Same term with every binder renamed.
Term rename_binders(const Term& t, const std::string& suffix) {
  switch (t->tag()) {
    case kernel::Tag::App: return kernel::mk_app(rename_binders(t->fn(), suffix), rename_binders(t->arg(), suffix));
    case kernel::Tag::Lam:
    case kernel::Tag::Pi: {
      kernel::Name n(t->name().str() + suffix);
      Term d = rename_binders(t->domain(), suffix), b = rename_binders(t->body(), suffix);
      return t->tag() == kernel::Tag::Lam ? kernel::mk_lam(n, d, b) : kernel::mk_pi(n, d, b);
    }
    default: return t;
  }
}

}  // namespace

TEST_CASE("substitute replaces a single variable") {
  kernel::Substitution s(1);
  s.bind(0, kernel::mk_const("c"));
  CHECK(kernel::alpha_eq(kernel::substitute(kernel::mk_var(0), s), kernel::mk_const("c")));
}

TEST_CASE("substitute does not capture") {
  // Outer context [x, y]: y is #0 and x is #1. The term λx:A. x y binds its
  // own x; substituting the outer x for y must not refer to the binder.
  Term A = kernel::mk_const("A");
  Term t = kernel::mk_lam(kernel::Name("x"), A, kernel::mk_app(kernel::mk_var(0), kernel::mk_var(1)));
  kernel::Substitution s(1);
  s.bind(0, kernel::mk_var(1));
  Term r = kernel::substitute(t, s);
  Term expected = kernel::mk_lam(kernel::Name("x"), A, kernel::mk_app(kernel::mk_var(0), kernel::mk_var(2)));
  CHECK(kernel::alpha_eq(r, expected));
  std::vector<std::string> scope = {"x", "y"};
  CHECK(dk::print_expr(*dk::quote(r, scope, "")) == "x_1 : A => x_1 x");
}

TEST_CASE("substitute then beta on a predicate abstraction") {
  // Context [P, t]: t is #0 and P is #1.
  Term app = kernel::mk_app(kernel::mk_var(1), kernel::mk_var(0));
  kernel::Substitution s(2);
  s.bind(1, B("y : logic.term bool => logic.eq bool y y"));
  s.bind(0, B("true"));
  kernel::Fuel fuel;
  Term r = kernel::whnf(bools(), kernel::substitute(app, s), fuel);
  CHECK(kernel::alpha_eq(r, B("logic.eq bool true true")));
}

TEST_CASE("match_pattern examples") {
  SUBCASE("projection pattern") {
    Term lhs = P("fst (pair x y)", {"x", "y"});
    auto m = kernel::match_pattern(lhs, 2, P("fst (pair a a)"));
    REQUIRE(m);
    CHECK(kernel::alpha_eq(m->at(1), P("a")));
    CHECK(kernel::alpha_eq(m->at(0), P("a")));
  }
  SUBCASE("unit rule") {
    Term lhs = B("andb true a", {"a"});
    Term subject = B("andb true (orb false c)", {"c"});
    auto m = kernel::match_pattern(lhs, 1, subject);
    REQUIRE(m);
    CHECK(kernel::alpha_eq(m->at(0), B("orb false c", {"c"})));
  }
  SUBCASE("nonlinear pattern needs equal subterms") {
    CHECK_FALSE(kernel::match_pattern(B("andb a a", {"a"}), 1, B("andb true false")));
    CHECK(kernel::match_pattern(B("andb a a", {"a"}), 1, B("andb false false")));
  }
}

TEST_CASE("whnf examples") {
  kernel::Fuel fuel;
  CHECK(kernel::alpha_eq(kernel::whnf(bools(), B("(x : logic.term bool => x) true"), fuel), B("true")));
  Term conj = kernel::whnf(bools(), B("logic.prf (logic.and A B)", {"A", "B"}), fuel);
  CHECK(kernel::alpha_eq(
      conj, B("Z : logic.Prop -> (logic.prf A -> logic.prf B -> logic.prf Z) -> logic.prf Z", {"A", "B"})));
  CHECK(kernel::alpha_eq(kernel::whnf(bools(), B("notb (notb true)"), fuel), B("true")));
}

TEST_CASE("normalize examples") {
  kernel::Fuel fuel;
  CHECK(kernel::alpha_eq(kernel::normalize(pairs(), P("logic.eq tau (fst (pair a a)) (snd (pair a a))"), fuel),
                         P("logic.eq tau a a")));
  CHECK(kernel::alpha_eq(kernel::normalize(bools(), kernel::mk_var(0), fuel), kernel::mk_var(0)));
  CHECK(kernel::alpha_eq(kernel::normalize(bools(), B("andb a (andb b c)", {"a", "b", "c"}), fuel),
                         B("andb (andb a b) c", {"a", "b", "c"})));
}

TEST_CASE("convertible examples") {
  kernel::Fuel fuel;
  Term t = B("andb true x", {"x"});
  CHECK(kernel::convertible(bools(), t, t, fuel));
  CHECK(kernel::convertible(pairs(), P("logic.eq tau (fst (pair a a)) (snd (pair a a))"), P("logic.eq tau a a"), fuel));
  Term eta = B("x : logic.term bool => f x", {"f"});
  Term f = kernel::mk_var(0);
  CHECK_FALSE(kernel::convertible(bools(), eta, f, fuel));
  kernel::Signature with_eta = bools();
  with_eta.set_eta(true);
  CHECK(kernel::convertible(with_eta, eta, f, fuel));
  CHECK_FALSE(kernel::convertible(bools(), B("true"), B("false"), fuel));
}

TEST_CASE("infer examples") {
  kernel::Fuel fuel;
  CHECK(kernel::is_kind(kernel::infer(bools(), kernel::mk_type(), fuel)));
  CHECK(kernel::alpha_eq(kernel::infer(bools(), B("logic.prf"), fuel), B("logic.Prop -> Type")));
  kernel::Context ctx;
  ctx.push(kernel::Name("x"), B("logic.term bool"));
  CHECK(kernel::alpha_eq(kernel::infer(bools(), ctx, kernel::mk_var(0), fuel), B("logic.term bool")));
}

TEST_CASE("check examples") {
  kernel::Fuel fuel;
  CHECK_NOTHROW(kernel::check(bools(), B("Z : logic.Prop => h : logic.prf Z => h"), B("logic.prf logic.True"), fuel));
  CHECK_NOTHROW(kernel::check(bools(), B("true"), B("logic.term bool"), fuel));
  CHECK(kind_of([&] { kernel::check(bools(), B("true"), B("logic.Prop"), fuel); }) ==
        kernel::ErrorKind::TypeMismatch);
}

TEST_CASE("typing errors") {
  kernel::Fuel fuel;
  CHECK(kind_of([&] { kernel::infer(bools(), kernel::mk_const("booleans.nope"), fuel); }) ==
        kernel::ErrorKind::UnboundIdentifier);
  CHECK(kind_of([&] { kernel::infer(bools(), B("true true"), fuel); }) == kernel::ErrorKind::NotAFunction);
  CHECK(kind_of([&] { kernel::infer(bools(), B("x : logic.term bool -> x"), fuel); }) == kernel::ErrorKind::SortError);
  CHECK(kind_of([&] { kernel::infer(bools(), kernel::mk_kind(), fuel); }) == kernel::ErrorKind::UntypableKind);
  kernel::Context ctx;
  CHECK_THROWS(kernel::infer(bools(), ctx, kernel::mk_var(3), fuel));
}

TEST_CASE("fuel exhaustion is an error") {
  kernel::Signature sig = bools();
  dk::load_entries(sig, "loop", dk::parse_file("spin : logic.term booleans.bool.\n[] spin --> booleans.notb (booleans.notb spin).\n"));
  kernel::Fuel fuel(kernel::Limits{1000, 100});
  CHECK(kind_of([&] { kernel::normalize(sig, kernel::mk_const("loop.spin"), fuel); }) ==
        kernel::ErrorKind::FuelExhausted);
  kernel::Fuel fuel2(kernel::Limits{1000, 100});
  CHECK(kind_of([&] {
          kernel::convertible(sig, kernel::mk_const("loop.spin"), test::term(sig, "booleans", "true"), fuel2);
        }) == kernel::ErrorKind::FuelExhausted);
}

TEST_CASE("matching is sound") {
  BoolGen g{std::mt19937_64(7)};
  int matched = 0;
  for (int i = 0; i < 500; ++i) {
    // A pattern: an operator over pattern variables and constants.
    const int arity = 1 + g.pick(3);
    std::function<Term(int)> pat = [&](int depth) -> Term {
      int c = depth == 0 ? g.pick(3) : g.pick(6);
      if (c == 0) return B(g.pick(2) ? "true" : "false");
      if (c <= 2) return kernel::mk_var(std::uint32_t(g.pick(arity)));
      if (c == 3) return kernel::mk_app(B("notb"), pat(depth - 1));
      return kernel::mk_app(kernel::mk_app(B(c == 4 ? "andb" : "orb"), pat(depth - 1)), pat(depth - 1));
    };
    Term lhs = kernel::mk_app(kernel::mk_app(B(g.pick(2) ? "andb" : "orb"), pat(2)), pat(2));
    Term subject;
    if (g.pick(2)) {
      kernel::Substitution s(arity);
      for (int k = 0; k < arity; ++k) s.bind(k, g.gen(2, 0));
      subject = kernel::substitute(lhs, s);
    } else {
      subject = g.gen(4, 0);
    }
    auto m = kernel::match_pattern(lhs, arity, subject);
    if (!m) continue;
    ++matched;
    CHECK(kernel::alpha_eq(kernel::substitute(lhs, *m), subject));
  }
  CHECK(matched > 100);
}

TEST_CASE("normalize is idempotent") {
  BoolGen g{std::mt19937_64(11)};
  for (int i = 0; i < 300; ++i) {
    Term t = g.gen(5, 3);
    kernel::Fuel fuel;
    Term n = kernel::normalize(bools(), t, fuel);
    kernel::Fuel fuel2;
    CHECK(kernel::alpha_eq(kernel::normalize(bools(), n, fuel2), n));
    kernel::Fuel fuel3;
    CHECK_FALSE(kernel::step_once(bools(), n));
    CHECK(kernel::convertible(bools(), t, n, fuel3));
  }
}

TEST_CASE("subject reduction on generated terms") {
  BoolGen g{std::mt19937_64(13)};
  int steps = 0;
  for (int i = 0; i < 300; ++i) {
    kernel::Context ctx;
    for (const char* x : {"p", "q"}) ctx.push(kernel::Name(x), B("logic.term bool"));
    Term t = g.gen(5, 2);
    if (g.pick(2)) t = kernel::mk_app(kernel::mk_app(kernel::mk_app(B("logic.eq"), B("bool")), t), g.gen(3, 2));
    kernel::Fuel fuel;
    Term A = kernel::infer(bools(), ctx, t, fuel);
    for (int k = 0; k < 6; ++k) {
      auto next = kernel::step_once(bools(), t);
      if (!next) break;
      ++steps;
      kernel::Fuel f2;
      CHECK_NOTHROW(kernel::check(bools(), ctx, *next, A, f2));
      t = *next;
    }
  }
  CHECK(steps > 300);
}

TEST_CASE("convertibility is an equivalence") {
  BoolGen g{std::mt19937_64(17)};
  std::vector<Term> pool;
  for (int i = 0; i < 40; ++i) pool.push_back(g.gen(3, 1));
  const std::size_t n = pool.size();
  std::vector<std::vector<char>> conv(n, std::vector<char>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      kernel::Fuel fuel;
      conv[i][j] = kernel::convertible(bools(), pool[i], pool[j], fuel);
    }
  int related = 0;
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(conv[i][i]);
    for (std::size_t j = 0; j < n; ++j) {
      CHECK(conv[i][j] == conv[j][i]);
      if (i != j && conv[i][j]) ++related;
      for (std::size_t k = 0; k < n; ++k)
        if (conv[i][j] && conv[j][k]) CHECK(conv[i][k]);
    }
  }
  CHECK(related > 0);
}

TEST_CASE("binder names are irrelevant") {
  BoolGen g{std::mt19937_64(19)};
  for (int i = 0; i < 200; ++i) {
    Term t = g.gen(5, 0);
    Term r = rename_binders(t, "_renamed");
    CHECK(kernel::alpha_eq(t, r));
    kernel::Fuel f1, f2, f3, f4;
    CHECK(kernel::alpha_eq(kernel::normalize(bools(), t, f1), kernel::normalize(bools(), r, f2)));
    CHECK(kernel::alpha_eq(kernel::infer(bools(), t, f3), kernel::infer(bools(), r, f4)));
  }
  Term a = B("Z : logic.Prop => h : logic.prf Z => h");
  Term b = B("W : logic.Prop => k : logic.prf W => k");
  CHECK(kernel::alpha_eq(a, b));
  kernel::Fuel fuel;
  CHECK(kernel::alpha_eq(kernel::infer(bools(), a, fuel), kernel::infer(bools(), b, fuel)));
}

TEST_CASE("shift and instantiate") {
  Term t = kernel::mk_app(kernel::mk_var(0), kernel::mk_var(2));
  CHECK(kernel::alpha_eq(kernel::shift(t, 1, 1), kernel::mk_app(kernel::mk_var(0), kernel::mk_var(3))));
  Term body = kernel::mk_lam(kernel::Name("y"), kernel::mk_type(), kernel::mk_app(kernel::mk_var(1), kernel::mk_var(0)));
  Term r = kernel::instantiate(body, kernel::mk_var(4));
  CHECK(kernel::alpha_eq(r, kernel::mk_lam(kernel::Name("y"), kernel::mk_type(),
                                           kernel::mk_app(kernel::mk_var(5), kernel::mk_var(0)))));
  CHECK(kernel::occurs(t, 2));
  CHECK_FALSE(kernel::occurs(t, 1));
  CHECK(kernel::term_size(t) == 3);
}
