#include "lpm/llproof/ext.hpp"

namespace lpm::llproof {

namespace {

// Case analysis on bool for a hypothesis ¬∀x:bool. P(x) (or ∃x:bool. P(x)):
// one branch for x = true and one for x = false. Symbols without a module
// prefix resolve in the theory module, which must declare bool, true, false.
constexpr std::string_view kBoolCaseNf =
    "R_bool_case_nf : P : (logic.term bool -> logic.Prop) -> "
    "(logic.prf (logic.not (P true)) -> logic.prf logic.False) -> "
    "(logic.prf (logic.not (P false)) -> logic.prf logic.False) -> "
    "logic.prf (logic.not (logic.forall bool P)) -> logic.prf logic.False.\n";

constexpr std::string_view kBoolCaseEx =
    "R_bool_case_ex : P : (logic.term bool -> logic.Prop) -> "
    "(logic.prf (P true) -> logic.prf logic.False) -> "
    "(logic.prf (P false) -> logic.prf logic.False) -> "
    "logic.prf (logic.exists bool P) -> logic.prf logic.False.\n";

ExtRule bool_case(std::string name, std::string_view decl, bool negated) {
  ExtRule r;
  r.name = std::move(name);
  r.arg_kinds = {ArgKind::Abstraction};
  r.shape = [negated](const tff::Theory&, const std::vector<Arg>& args) {
    const Abstraction& p = std::get<Abstraction>(args.at(0));
    auto hyp = [&](const char* c) {
      tff::Formula f = apply(p, tff::Term::fun(c, {}, {}));
      return negated ? tff::neg(f) : f;
    };
    Shape s;
    s.args = {args[0]};
    s.premises = {Premise{Premise::Fresh::None, {}, {hyp("true")}}, Premise{Premise::Fresh::None, {}, {hyp("false")}}};
    tff::Formula q = negated ? tff::forall(p.var, p.type, p.body) : tff::exists(p.var, p.type, p.body);
    s.conclusions = {negated ? tff::neg(q) : q};
    return s;
  };
  r.declare = [decl](const std::string&) { return dk::parse_file(decl); };
  return r;
}

}  // namespace

void ExtRegistry::add(ExtRule rule) {
  std::string key = rule.name;
  rules_.insert_or_assign(std::move(key), std::move(rule));
}

const ExtRule* ExtRegistry::find(const std::string& name) const {
  auto it = rules_.find(name);
  return it == rules_.end() ? nullptr : &it->second;
}

std::vector<std::string> ExtRegistry::names() const {
  std::vector<std::string> out;
  for (const auto& [name, rule] : rules_) out.push_back(name);
  return out;
}

embed::ExtensionHook ExtRegistry::hook() const {
  return [this](const tff::Theory& thy, const std::string& name) -> std::optional<std::vector<dk::Entry>> {
    const ExtRule* r = find(name);
    if (!r) return std::nullopt;
    return r->declare(thy.name);
  };
}

const ExtRegistry& ExtRegistry::builtin() {
  static const ExtRegistry registry = [] {
    ExtRegistry reg;
    reg.add(bool_case("bool_case_nf", kBoolCaseNf, true));
    reg.add(bool_case("bool_case_ex", kBoolCaseEx, false));
    return reg;
  }();
  return registry;
}

}  // namespace lpm::llproof
