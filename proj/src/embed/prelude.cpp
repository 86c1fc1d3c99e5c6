#include "lpm/embed/prelude.hpp"

#include "lpm/dk/loader.hpp"

namespace lpm::embed {

namespace {

constexpr std::string_view kDeclarations = R"(Prop : Type.
prf : Prop -> Type.
type : Type.
term : type -> Type.
True : Prop.
False : Prop.
not : Prop -> Prop.
and : Prop -> Prop -> Prop.
or : Prop -> Prop -> Prop.
imp : Prop -> Prop -> Prop.
eqv : Prop -> Prop -> Prop.
forall : a : type -> (term a -> Prop) -> Prop.
foralltype : (type -> Prop) -> Prop.
exists : a : type -> (term a -> Prop) -> Prop.
existstype : (type -> Prop) -> Prop.
eq : a : type -> term a -> term a -> Prop.
)";

// The inner quantified proposition is called Z so that it never shadows a
// pattern variable.
constexpr std::string_view kRules = R"([] prf True --> Z : Prop -> prf Z -> prf Z.
[] prf False --> Z : Prop -> prf Z.
[A : Prop] prf (not A) --> prf A -> prf False.
[A : Prop, B : Prop] prf (and A B) --> Z : Prop -> (prf A -> prf B -> prf Z) -> prf Z.
[A : Prop, B : Prop] prf (or A B) --> Z : Prop -> (prf A -> prf Z) -> (prf B -> prf Z) -> prf Z.
[A : Prop, B : Prop] prf (imp A B) --> prf A -> prf B.
[A : Prop, B : Prop] prf (eqv A B) --> prf (and (imp A B) (imp B A)).
[a : type, P : term a -> Prop] prf (forall a P) --> x : term a -> prf (P x).
[P : type -> Prop] prf (foralltype P) --> a : type -> prf (P a).
[a : type, P : term a -> Prop] prf (exists a P) --> Z : Prop -> (x : term a -> prf (P x) -> prf Z) -> prf Z.
[P : type -> Prop] prf (existstype P) --> Z : Prop -> (a : type -> prf (P a) -> prf Z) -> prf Z.
[a : type, x : term a, y : term a] prf (eq a x y) --> Z : (term a -> Prop) -> prf (Z x) -> prf (Z y).
)";

}  // namespace

std::string_view mode_name(Mode m) { return m == Mode::Deep ? "deep" : "shallow"; }

std::vector<dk::Entry> prelude(Mode mode) {
  std::vector<dk::Entry> out = dk::parse_file(kDeclarations);
  if (mode == Mode::Shallow) {
    std::vector<dk::Entry> rules = dk::parse_file(kRules);
    out.insert(out.end(), rules.begin(), rules.end());
  }
  return out;
}

kernel::Signature prelude_signature(Mode mode, const kernel::Limits& limits) {
  kernel::Signature sig;
  dk::load_entries(sig, kLogicModule, prelude(mode), limits);
  return sig;
}

}  // namespace lpm::embed
