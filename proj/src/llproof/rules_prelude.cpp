#include "lpm/llproof/rules_prelude.hpp"

#include "lpm/dk/loader.hpp"

namespace lpm::llproof {

namespace {

// One declaration per inference rule, in the order rule constants are listed
// in the certificate format. Every rule concludes prf False.
constexpr std::string_view kDeclarations = R"(R_bot : logic.prf logic.False -> logic.prf logic.False.
R_nottop : logic.prf (logic.not logic.True) -> logic.prf logic.False.
R_Ax : P : logic.Prop -> logic.prf P -> logic.prf (logic.not P) -> logic.prf logic.False.
R_Cut : P : logic.Prop -> (logic.prf P -> logic.prf logic.False) -> (logic.prf (logic.not P) -> logic.prf logic.False) -> logic.prf logic.False.
R_neq : a : logic.type -> t : logic.term a -> logic.prf (logic.not (logic.eq a t t)) -> logic.prf logic.False.
R_Sym : a : logic.type -> t : logic.term a -> u : logic.term a -> logic.prf (logic.eq a t u) -> logic.prf (logic.not (logic.eq a u t)) -> logic.prf logic.False.
R_notnot : P : logic.Prop -> (logic.prf P -> logic.prf logic.False) -> logic.prf (logic.not (logic.not P)) -> logic.prf logic.False.
R_and : P : logic.Prop -> Q : logic.Prop -> (logic.prf P -> logic.prf Q -> logic.prf logic.False) -> logic.prf (logic.and P Q) -> logic.prf logic.False.
R_or : P : logic.Prop -> Q : logic.Prop -> (logic.prf P -> logic.prf logic.False) -> (logic.prf Q -> logic.prf logic.False) -> logic.prf (logic.or P Q) -> logic.prf logic.False.
R_imp : P : logic.Prop -> Q : logic.Prop -> (logic.prf (logic.not P) -> logic.prf logic.False) -> (logic.prf Q -> logic.prf logic.False) -> logic.prf (logic.imp P Q) -> logic.prf logic.False.
R_eqv : P : logic.Prop -> Q : logic.Prop -> (logic.prf (logic.not P) -> logic.prf (logic.not Q) -> logic.prf logic.False) -> (logic.prf P -> logic.prf Q -> logic.prf logic.False) -> logic.prf (logic.eqv P Q) -> logic.prf logic.False.
R_notand : P : logic.Prop -> Q : logic.Prop -> (logic.prf (logic.not P) -> logic.prf logic.False) -> (logic.prf (logic.not Q) -> logic.prf logic.False) -> logic.prf (logic.not (logic.and P Q)) -> logic.prf logic.False.
R_notor : P : logic.Prop -> Q : logic.Prop -> (logic.prf (logic.not P) -> logic.prf (logic.not Q) -> logic.prf logic.False) -> logic.prf (logic.not (logic.or P Q)) -> logic.prf logic.False.
R_notimp : P : logic.Prop -> Q : logic.Prop -> (logic.prf P -> logic.prf (logic.not Q) -> logic.prf logic.False) -> logic.prf (logic.not (logic.imp P Q)) -> logic.prf logic.False.
R_noteqv : P : logic.Prop -> Q : logic.Prop -> (logic.prf (logic.not P) -> logic.prf Q -> logic.prf logic.False) -> (logic.prf P -> logic.prf (logic.not Q) -> logic.prf logic.False) -> logic.prf (logic.not (logic.eqv P Q)) -> logic.prf logic.False.
R_exists : a : logic.type -> P : (logic.term a -> logic.Prop) -> (t : logic.term a -> logic.prf (P t) -> logic.prf logic.False) -> logic.prf (logic.exists a P) -> logic.prf logic.False.
R_forall : a : logic.type -> P : (logic.term a -> logic.Prop) -> t : logic.term a -> (logic.prf (P t) -> logic.prf logic.False) -> logic.prf (logic.forall a P) -> logic.prf logic.False.
R_notexists : a : logic.type -> P : (logic.term a -> logic.Prop) -> t : logic.term a -> (logic.prf (logic.not (P t)) -> logic.prf logic.False) -> logic.prf (logic.not (logic.exists a P)) -> logic.prf logic.False.
R_notforall : a : logic.type -> P : (logic.term a -> logic.Prop) -> (t : logic.term a -> logic.prf (logic.not (P t)) -> logic.prf logic.False) -> logic.prf (logic.not (logic.forall a P)) -> logic.prf logic.False.
R_existstype : P : (logic.type -> logic.Prop) -> (a : logic.type -> logic.prf (P a) -> logic.prf logic.False) -> logic.prf (logic.existstype P) -> logic.prf logic.False.
R_foralltype : P : (logic.type -> logic.Prop) -> a : logic.type -> (logic.prf (P a) -> logic.prf logic.False) -> logic.prf (logic.foralltype P) -> logic.prf logic.False.
R_notexiststype : P : (logic.type -> logic.Prop) -> a : logic.type -> (logic.prf (logic.not (P a)) -> logic.prf logic.False) -> logic.prf (logic.not (logic.existstype P)) -> logic.prf logic.False.
R_notforalltype : P : (logic.type -> logic.Prop) -> (a : logic.type -> logic.prf (logic.not (P a)) -> logic.prf logic.False) -> logic.prf (logic.not (logic.foralltype P)) -> logic.prf logic.False.
R_Subst : a : logic.type -> P : (logic.term a -> logic.Prop) -> t : logic.term a -> u : logic.term a -> (logic.prf (logic.not (logic.eq a t u)) -> logic.prf logic.False) -> (logic.prf (P u) -> logic.prf logic.False) -> logic.prf (P t) -> logic.prf logic.False.
)";

constexpr std::string_view kLemmas = R"(ExMid : P : logic.Prop -> Z : logic.Prop -> (logic.prf P -> logic.prf Z) -> (logic.prf (logic.not P) -> logic.prf Z) -> logic.prf Z.
def NNPP : P : logic.Prop -> logic.prf (logic.not (logic.not P)) -> logic.prf P := P : logic.Prop => H1 : logic.prf (logic.not (logic.not P)) => ExMid P P (H2 : logic.prf P => H2) (H3 : logic.prf (logic.not P) => H1 H3 P).
def Contr : P : logic.Prop -> Q : logic.Prop -> logic.prf (logic.imp P Q) -> logic.prf (logic.imp (logic.not Q) (logic.not P)) := P : logic.Prop => Q : logic.Prop => H1 : logic.prf (logic.imp P Q) => H2 : logic.prf (logic.not Q) => H3 : logic.prf P => H2 (H1 H3).
)";

// Proof of each rule, keyed by position in kDeclarations.
constexpr std::string_view kProofs = R"([] R_bot --> H : logic.prf logic.False => H.
[] R_nottop --> H1 : logic.prf (logic.not logic.True) => H1 (Z : logic.Prop => H2 : logic.prf Z => H2).
[P : logic.Prop] R_Ax P --> H1 : logic.prf P => H2 : logic.prf (logic.not P) => H2 H1.
[P : logic.Prop] R_Cut P --> H1 : (logic.prf P -> logic.prf logic.False) => H2 : (logic.prf (logic.not P) -> logic.prf logic.False) => H2 H1.
[a : logic.type, t : logic.term a] R_neq a t --> H1 : logic.prf (logic.not (logic.eq a t t)) => H1 (z : (logic.term a -> logic.Prop) => H2 : logic.prf (z t) => H2).
[a : logic.type, t : logic.term a, u : logic.term a] R_Sym a t u --> H1 : logic.prf (logic.eq a t u) => H2 : logic.prf (logic.not (logic.eq a u t)) => H2 (z : (logic.term a -> logic.Prop) => H3 : logic.prf (z u) => H1 (x : logic.term a => logic.imp (z x) (z t)) (H4 : logic.prf (z t) => H4) H3).
[P : logic.Prop] R_notnot P --> H1 : (logic.prf P -> logic.prf logic.False) => H2 : logic.prf (logic.not (logic.not P)) => H2 H1.
[P : logic.Prop, Q : logic.Prop] R_and P Q --> H1 : (logic.prf P -> logic.prf Q -> logic.prf logic.False) => H2 : logic.prf (logic.and P Q) => H2 logic.False H1.
[P : logic.Prop, Q : logic.Prop] R_or P Q --> H1 : (logic.prf P -> logic.prf logic.False) => H2 : (logic.prf Q -> logic.prf logic.False) => H3 : logic.prf (logic.or P Q) => H3 logic.False H1 H2.
[P : logic.Prop, Q : logic.Prop] R_imp P Q --> H1 : (logic.prf (logic.not P) -> logic.prf logic.False) => H2 : (logic.prf Q -> logic.prf logic.False) => H3 : logic.prf (logic.imp P Q) => H1 (Contr P Q H3 H2).
[P : logic.Prop, Q : logic.Prop] R_eqv P Q --> H1 : (logic.prf (logic.not P) -> logic.prf (logic.not Q) -> logic.prf logic.False) => H2 : (logic.prf P -> logic.prf Q -> logic.prf logic.False) => H3 : logic.prf (logic.eqv P Q) => H3 logic.False (H4 : (logic.prf P -> logic.prf Q) => H5 : (logic.prf Q -> logic.prf P) => H1 (Contr P Q H4 (H6 : logic.prf Q => H2 (H5 H6) H6)) (H7 : logic.prf Q => H2 (H5 H7) H7)).
[P : logic.Prop, Q : logic.Prop] R_notand P Q --> H1 : (logic.prf (logic.not P) -> logic.prf logic.False) => H2 : (logic.prf (logic.not Q) -> logic.prf logic.False) => H3 : logic.prf (logic.not (logic.and P Q)) => H1 (H5 : logic.prf P => H2 (H6 : logic.prf Q => H3 (Z : logic.Prop => H4 : (logic.prf P -> logic.prf Q -> logic.prf Z) => H4 H5 H6))).
[P : logic.Prop, Q : logic.Prop] R_notor P Q --> H1 : (logic.prf (logic.not P) -> logic.prf (logic.not Q) -> logic.prf logic.False) => H2 : logic.prf (logic.not (logic.or P Q)) => H1 (Contr P (logic.or P Q) (H3 : logic.prf P => Z : logic.Prop => H4 : (logic.prf P -> logic.prf Z) => H5 : (logic.prf Q -> logic.prf Z) => H4 H3) H2) (Contr Q (logic.or P Q) (H6 : logic.prf Q => Z : logic.Prop => H7 : (logic.prf P -> logic.prf Z) => H8 : (logic.prf Q -> logic.prf Z) => H8 H6) H2).
[P : logic.Prop, Q : logic.Prop] R_notimp P Q --> H1 : (logic.prf P -> logic.prf (logic.not Q) -> logic.prf logic.False) => H2 : logic.prf (logic.not (logic.imp P Q)) => H2 (H3 : logic.prf P => H1 H3 (H4 : logic.prf Q => H2 (H5 : logic.prf P => H4)) Q).
[P : logic.Prop, Q : logic.Prop] R_noteqv P Q --> H1 : (logic.prf (logic.not P) -> logic.prf (logic.not Q)) => H2 : (logic.prf P -> logic.prf (logic.not (logic.not Q))) => H3 : logic.prf (logic.not (logic.eqv P Q)) => (H4 : logic.prf (logic.not P) => H3 (Z : logic.Prop => H5 : (logic.prf (logic.imp P Q) -> logic.prf (logic.imp Q P) -> logic.prf Z) => H5 (H6 : logic.prf P => H4 H6 Q) (H7 : logic.prf Q => H1 H4 H7 P))) (H8 : logic.prf P => H2 H8 (H9 : logic.prf Q => H3 (Z : logic.Prop => H10 : (logic.prf (logic.imp P Q) -> logic.prf (logic.imp Q P) -> logic.prf Z) => H10 (H11 : logic.prf P => H9) (H12 : logic.prf Q => H8)))).
[a : logic.type, P : logic.term a -> logic.Prop] R_exists a P --> H1 : (t : logic.term a -> logic.prf (P t) -> logic.prf logic.False) => H2 : logic.prf (logic.exists a P) => H2 logic.False H1.
[a : logic.type, P : logic.term a -> logic.Prop, t : logic.term a] R_forall a P t --> H1 : (logic.prf (P t) -> logic.prf logic.False) => H2 : logic.prf (logic.forall a P) => H1 (H2 t).
[a : logic.type, P : logic.term a -> logic.Prop, t : logic.term a] R_notexists a P t --> H1 : (logic.prf (logic.not (P t)) -> logic.prf logic.False) => H2 : logic.prf (logic.not (logic.exists a P)) => H1 (H4 : logic.prf (P t) => H2 (Z : logic.Prop => H3 : (x : logic.term a -> logic.prf (P x) -> logic.prf Z) => H3 t H4)).
[a : logic.type, P : logic.term a -> logic.Prop] R_notforall a P --> H1 : (t : logic.term a -> logic.prf (logic.not (P t)) -> logic.prf logic.False) => H2 : logic.prf (logic.not (logic.forall a P)) => H2 (t : logic.term a => NNPP (P t) (H1 t)).
[P : logic.type -> logic.Prop] R_existstype P --> H1 : (a : logic.type -> logic.prf (P a) -> logic.prf logic.False) => H2 : logic.prf (logic.existstype P) => H2 logic.False H1.
[P : logic.type -> logic.Prop, a : logic.type] R_foralltype P a --> H1 : (logic.prf (P a) -> logic.prf logic.False) => H2 : logic.prf (logic.foralltype P) => H1 (H2 a).
[P : logic.type -> logic.Prop, a : logic.type] R_notexiststype P a --> H1 : (logic.prf (logic.not (P a)) -> logic.prf logic.False) => H2 : logic.prf (logic.not (logic.existstype P)) => H1 (H4 : logic.prf (P a) => H2 (Z : logic.Prop => H3 : (b : logic.type -> logic.prf (P b) -> logic.prf Z) => H3 a H4)).
[P : logic.type -> logic.Prop] R_notforalltype P --> H1 : (a : logic.type -> logic.prf (logic.not (P a)) -> logic.prf logic.False) => H2 : logic.prf (logic.not (logic.foralltype P)) => H2 (a : logic.type => NNPP (P a) (H1 a)).
[a : logic.type, P : logic.term a -> logic.Prop, t1 : logic.term a, t2 : logic.term a] R_Subst a P t1 t2 --> H1 : (logic.prf (logic.not (logic.eq a t1 t2)) -> logic.prf logic.False) => H2 : (logic.prf (P t2) -> logic.prf logic.False) => H3 : logic.prf (P t1) => H1 (H4 : logic.prf (logic.eq a t1 t2) => H2 (H4 P H3)).
)";

}  // namespace

std::vector<dk::Entry> rules_prelude(embed::Mode mode) {
  std::vector<dk::Entry> decls = dk::parse_file(kDeclarations);
  if (mode == embed::Mode::Deep) return decls;
  std::vector<dk::Entry> out = dk::parse_file(kLemmas);
  std::vector<dk::Entry> proofs = dk::parse_file(kProofs);
  for (std::size_t i = 0; i < decls.size(); ++i) {
    out.push_back(decls[i]);
    out.push_back(proofs[i]);
  }
  return out;
}

kernel::Signature base_signature(embed::Mode mode, const kernel::Limits& limits) {
  kernel::Signature sig = embed::prelude_signature(mode, limits);
  dk::load_entries(sig, kRulesModule, rules_prelude(mode), limits);
  return sig;
}

}  // namespace lpm::llproof
