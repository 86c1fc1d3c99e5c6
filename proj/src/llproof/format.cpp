#include "lpm/llproof/format.hpp"

#include "lpm/llproof/shape.hpp"
#include "lpm/tff/format.hpp"

namespace lpm::llproof {

using tff::FormatError;
using tff::Sexpr;

namespace {

Sexpr single(std::string_view text) {
  std::vector<Sexpr> all = tff::parse_sexprs(text);
  if (all.size() != 1) throw FormatError(1, 1, "expected a single (proof ...) form");
  return std::move(all[0]);
}

const std::string& atom(const Sexpr& s, std::string_view what) {
  if (!s.is_atom) throw FormatError(s, "expected " + std::string(what));
  return s.atom;
}

const Sexpr& field(const Sexpr& proof, std::size_t i, std::string_view head) {
  if (proof.items.size() <= i || !proof.items[i].headed(head) || proof.items[i].items.size() != 2) {
    throw FormatError(proof, "expected (" + std::string(head) + " ...) as item " + std::to_string(i));
  }
  return proof.items[i].items[1];
}

struct Reader {
  const tff::Theory& thy;
  const ExtRegistry& registry;
  tff::Context closed;

  tff::Formula formula(const Sexpr& s, const tff::Context& ctx) const { return tff::read_formula(thy, s, ctx); }

  Arg arg(const Sexpr& s, ArgKind k) const {
    switch (k) {
      case ArgKind::Type: return tff::read_type(s, {});
      case ArgKind::Term: return tff::read_term(thy, s, closed);
      case ArgKind::Formula: return formula(s, closed);
      case ArgKind::Abstraction: {
        if (!s.headed("lambda") || s.items.size() != 4) throw FormatError(s, "expected (lambda x T F)");
        Abstraction p{atom(s.items[1], "a variable"), tff::read_type(s.items[2], {}), {}};
        tff::Context ctx;
        ctx.vars.emplace_back(p.var, p.type);
        p.body = formula(s.items[3], ctx);
        return p;
      }
      case ArgKind::TypeAbstraction: {
        if (!s.headed("lambda-type") || s.items.size() != 3) throw FormatError(s, "expected (lambda-type a F)");
        TypeAbstraction p{atom(s.items[1], "a type variable"), {}};
        tff::Context ctx;
        ctx.tvars.push_back(p.var);
        p.body = formula(s.items[2], ctx);
        return p;
      }
    }
    throw FormatError(s, "bad parameter");
  }

  std::vector<tff::Formula> formulas(const Sexpr& s, std::size_t from) const {
    std::vector<tff::Formula> out;
    for (std::size_t i = from; i < s.items.size(); ++i) out.push_back(formula(s.items[i], closed));
    return out;
  }

  Node node(const Sexpr& s, Path& path) const {
    if (s.is_atom || s.items.empty()) throw FormatError(s, "expected a proof node");
    const std::string& tag = atom(s.items[0], "a rule tag");
    std::optional<Rule> rule = rule_from_tag(tag);
    if (!rule) throw FormatError(s.items[0], "unknown rule '" + tag + "'");
    Node n;
    n.rule = *rule;
    std::size_t i = 1;
    auto next = [&](std::string_view what) -> const Sexpr& {
      if (i >= s.items.size()) throw FormatError(s, tag + " is missing " + std::string(what));
      return s.items[i++];
    };
    if (n.rule == Rule::Pred || n.rule == Rule::Fun) {
      n.symbol = atom(next("a symbol"), "a symbol");
      const Sexpr& tys = next("type arguments");
      if (tys.is_atom) throw FormatError(tys, "expected a list of type arguments");
      for (const Sexpr& t : tys.items) n.type_args.push_back(tff::read_type(t, {}));
      if (n.rule == Rule::Fun) n.result = tff::read_type(next("a result type"), {});
      const Sexpr& pairs = next("argument pairs");
      if (pairs.is_atom) throw FormatError(pairs, "expected a list of (T t u) pairs");
      for (const Sexpr& p : pairs.items) {
        if (p.is_atom || p.items.size() != 3) throw FormatError(p, "expected (T t u)");
        n.pairs.push_back({tff::read_type(p.items[0], {}), tff::read_term(thy, p.items[1], closed),
                           tff::read_term(thy, p.items[2], closed)});
      }
    } else {
      std::vector<ArgKind> kinds = rule_arg_kinds(n.rule);
      if (n.rule == Rule::Ext) {
        n.symbol = atom(next("an extension name"), "an extension name");
        const ExtRule* r = registry.find(n.symbol);
        if (!r) throw FormatError(s.items[1], "unregistered extension '" + n.symbol + "'");
        kinds = r->arg_kinds;
      }
      for (ArgKind k : kinds) n.args.push_back(arg(next(arg_kind_name(k)), k));
      if (introduces_constant(n.rule) || introduces_type(n.rule)) n.fresh = atom(next("a fresh name"), "a fresh name");
    }
    if (i < s.items.size() && s.items[i].headed("conc")) n.conclusions = formulas(s.items[i++], 1);
    if (i < s.items.size() && s.items[i].headed("hyps")) {
      std::vector<std::vector<tff::Formula>> hs;
      const Sexpr& h = s.items[i++];
      for (std::size_t j = 1; j < h.items.size(); ++j) {
        if (h.items[j].is_atom) throw FormatError(h.items[j], "expected a list of hypotheses");
        hs.push_back(formulas(h.items[j], 0));
      }
      n.hypotheses = std::move(hs);
    }
    Shape shape;
    try {
      shape = shape_of(thy, n, registry, path);
    } catch (const ProofError& e) {
      throw FormatError(s, e.detail());
    }
    const std::size_t premises = s.items.size() - i;
    if (premises != shape.premises.size()) {
      throw FormatError(s, tag + " needs " + std::to_string(shape.premises.size()) + " premise(s), got " +
                               std::to_string(premises));
    }
    for (int k = 0; i < s.items.size(); ++i, ++k) {
      path.push_back(k);
      n.premises.push_back(node(s.items[i], path));
      path.pop_back();
    }
    return n;
  }
};

std::string list(const std::vector<std::string>& xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? " " : "") + xs[i];
  return out + ")";
}

struct ArgWriter {
  std::string operator()(const tff::Type& t) const { return tff::to_string(t); }
  std::string operator()(const tff::Term& t) const { return tff::to_string(t); }
  std::string operator()(const tff::Formula& f) const { return tff::to_string(f); }
  std::string operator()(const Abstraction& p) const {
    return "(lambda " + p.var + " " + tff::to_string(p.type) + " " + tff::to_string(p.body) + ")";
  }
  std::string operator()(const TypeAbstraction& p) const {
    return "(lambda-type " + p.var + " " + tff::to_string(p.body) + ")";
  }
};

void write_node(const Node& n, int depth, std::string& out) {
  out += std::string(2 * static_cast<std::size_t>(depth), ' ') + "(" + std::string(rule_tag(n.rule));
  if (n.rule == Rule::Pred || n.rule == Rule::Fun) {
    std::vector<std::string> tys, pairs;
    for (const tff::Type& t : n.type_args) tys.push_back(tff::to_string(t));
    for (const EqPair& e : n.pairs) {
      pairs.push_back("(" + tff::to_string(e.type) + " " + tff::to_string(e.lhs) + " " + tff::to_string(e.rhs) + ")");
    }
    out += " " + n.symbol + " " + list(tys);
    if (n.rule == Rule::Fun) out += " " + tff::to_string(n.result);
    out += " " + list(pairs);
  } else {
    if (n.rule == Rule::Ext) out += " " + n.symbol;
    for (const Arg& a : n.args) out += " " + std::visit(ArgWriter{}, a);
    if (!n.fresh.empty()) out += " " + n.fresh;
  }
  if (n.conclusions) {
    out += " (conc";
    for (const tff::Formula& f : *n.conclusions) out += " " + tff::to_string(f);
    out += ")";
  }
  if (n.hypotheses) {
    out += " (hyps";
    for (const auto& hs : *n.hypotheses) {
      std::vector<std::string> xs;
      for (const tff::Formula& f : hs) xs.push_back(tff::to_string(f));
      out += " " + list(xs);
    }
    out += ")";
  }
  for (const Node& p : n.premises) {
    out += "\n";
    write_node(p, depth + 1, out);
  }
  out += ")";
}

}  // namespace

std::string llpx_theory(std::string_view text) {
  const Sexpr s = single(text);
  if (!s.headed("proof")) throw FormatError(s, "expected (proof ...)");
  return atom(field(s, 1, "theory"), "a theory name");
}

ProofFile read_llpx(std::string_view text, const tff::Theory& thy, const ExtRegistry& registry) {
  const Sexpr s = single(text);
  if (!s.headed("proof") || s.items.size() != 4) throw FormatError(s, "expected (proof (theory N) (goal F) NODE)");
  ProofFile out;
  out.theory = atom(field(s, 1, "theory"), "a theory name");
  if (out.theory != thy.name) throw FormatError(s.items[1], "proof is for theory " + out.theory + ", not " + thy.name);
  Reader r{thy, registry, {}};
  out.goal = r.formula(field(s, 2, "goal"), {});
  Path path;
  out.root = r.node(s.items[3], path);
  return out;
}

std::string write_llpx(const ProofFile& proof) {
  std::string out = "(proof (theory " + proof.theory + ")\n  (goal " + tff::to_string(proof.goal) + ")\n";
  write_node(proof.root, 1, out);
  return out + ")\n";
}

}  // namespace lpm::llproof
