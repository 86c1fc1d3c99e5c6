#include "lpm/llproof/proof.hpp"

#include <array>
#include <functional>
#include <map>
#include <set>

namespace lpm::llproof {

namespace {

struct TagEntry {
  Rule rule;
  std::string_view tag;
};

constexpr std::array<TagEntry, 27> kTags = {{
    {Rule::Bot, "bot"},
    {Rule::NotTop, "nottop"},
    {Rule::Ax, "ax"},
    {Rule::Cut, "cut"},
    {Rule::Neq, "neq"},
    {Rule::Sym, "sym"},
    {Rule::NotNot, "notnot"},
    {Rule::And, "and"},
    {Rule::Or, "or"},
    {Rule::Imp, "imp"},
    {Rule::Iff, "iff"},
    {Rule::NotAnd, "notand"},
    {Rule::NotOr, "notor"},
    {Rule::NotImp, "notimp"},
    {Rule::NotIff, "notiff"},
    {Rule::Exists, "exists"},
    {Rule::Forall, "forall"},
    {Rule::NotExists, "notexists"},
    {Rule::NotForall, "notforall"},
    {Rule::ExistsType, "existstype"},
    {Rule::ForallType, "foralltype"},
    {Rule::NotExistsType, "notexiststype"},
    {Rule::NotForallType, "notforalltype"},
    {Rule::Pred, "pred"},
    {Rule::Fun, "fun"},
    {Rule::Subst, "subst"},
    {Rule::Ext, "ext"},
}};

}  // namespace

std::string_view rule_tag(Rule r) {
  for (const TagEntry& e : kTags) {
    if (e.rule == r) return e.tag;
  }
  return "?";
}

std::optional<Rule> rule_from_tag(std::string_view tag) {
  for (const TagEntry& e : kTags) {
    if (e.tag == tag) return e.rule;
  }
  return std::nullopt;
}

ArgKind kind_of(const Arg& a) { return static_cast<ArgKind>(a.index()); }

std::string_view arg_kind_name(ArgKind k) {
  switch (k) {
    case ArgKind::Type: return "type";
    case ArgKind::Term: return "term";
    case ArgKind::Formula: return "formula";
    case ArgKind::Abstraction: return "abstraction";
    case ArgKind::TypeAbstraction: return "type abstraction";
  }
  return "?";
}

Abstraction abstraction_of(const Arg& a) { return std::get<Abstraction>(a); }

tff::Formula apply(const Abstraction& p, const tff::Term& t) { return tff::subst(p.body, p.var, t); }

tff::Formula apply(const TypeAbstraction& p, const tff::Type& t) { return tff::subst_type(p.body, p.var, t); }

std::vector<ArgKind> rule_arg_kinds(Rule r) {
  using A = ArgKind;
  switch (r) {
    case Rule::Bot:
    case Rule::NotTop:
      return {};
    case Rule::Ax:
    case Rule::Cut:
    case Rule::NotNot:
      return {A::Formula};
    case Rule::Neq:
      return {A::Type, A::Term};
    case Rule::Sym:
      return {A::Type, A::Term, A::Term};
    case Rule::And:
    case Rule::Or:
    case Rule::Imp:
    case Rule::Iff:
    case Rule::NotAnd:
    case Rule::NotOr:
    case Rule::NotImp:
    case Rule::NotIff:
      return {A::Formula, A::Formula};
    case Rule::Exists:
    case Rule::NotForall:
      return {A::Abstraction};
    case Rule::Forall:
    case Rule::NotExists:
      return {A::Abstraction, A::Term};
    case Rule::ExistsType:
    case Rule::NotForallType:
      return {A::TypeAbstraction};
    case Rule::ForallType:
    case Rule::NotExistsType:
      return {A::TypeAbstraction, A::Type};
    case Rule::Subst:
      return {A::Abstraction, A::Term, A::Term};
    case Rule::Pred:
    case Rule::Fun:
    case Rule::Ext:
      return {};
  }
  return {};
}

bool introduces_constant(Rule r) { return r == Rule::Exists || r == Rule::NotForall; }
bool introduces_type(Rule r) { return r == Rule::ExistsType || r == Rule::NotForallType; }

static std::string render(const std::string& kind, const std::string& path, const std::string& message) {
  return "at " + path + ": " + kind + ": " + message;
}

ProofError::ProofError(std::string kind, std::string path, const std::string& message)
    : std::runtime_error(render(kind, path, message)), kind_(std::move(kind)), path_(std::move(path)), detail_(message) {}

std::string path_string(const Path& p) {
  std::string out = "root";
  for (int i : p) out += "." + std::to_string(i);
  return out;
}

std::optional<Path> parse_path(std::string_view s) {
  constexpr std::string_view root = "root";
  if (s.substr(0, root.size()) != root) return std::nullopt;
  s.remove_prefix(root.size());
  Path out;
  while (!s.empty()) {
    if (s[0] != '.' || s.size() < 2) return std::nullopt;
    s.remove_prefix(1);
    int v = 0;
    std::size_t i = 0;
    for (; i < s.size() && s[i] >= '0' && s[i] <= '9'; ++i) v = v * 10 + (s[i] - '0');
    if (i == 0) return std::nullopt;
    out.push_back(v);
    s.remove_prefix(i);
  }
  return out;
}

const Node* node_at(const Node& root, const Path& p) {
  const Node* n = &root;
  for (int i : p) {
    if (i < 0 || static_cast<std::size_t>(i) >= n->premises.size()) return nullptr;
    n = &n->premises[static_cast<std::size_t>(i)];
  }
  return n;
}

std::size_t node_count(const Node& n) {
  std::size_t c = 1;
  for (const Node& p : n.premises) c += node_count(p);
  return c;
}

static void collect(const Node& n, std::vector<Rule>& out) {
  out.push_back(n.rule);
  for (const Node& p : n.premises) collect(p, out);
}

std::vector<Rule> preorder(const Node& n) {
  std::vector<Rule> out;
  collect(n, out);
  return out;
}

bool contains_pred_fun(const Node& n) {
  if (n.rule == Rule::Pred || n.rule == Rule::Fun) return true;
  for (const Node& p : n.premises) {
    if (contains_pred_fun(p)) return true;
  }
  return false;
}

namespace {

std::set<std::string> vars_of(const Node& n) {
  std::set<std::string> out;
  for (const EqPair& e : n.pairs) {
    for (const tff::Term* t : {&e.lhs, &e.rhs}) {
      std::set<std::string> v = tff::free_vars(*t);
      out.insert(v.begin(), v.end());
    }
  }
  return out;
}

Node make(Rule r, std::vector<Arg> args, std::vector<Node> premises) {
  Node n;
  n.rule = r;
  n.args = std::move(args);
  n.premises = std::move(premises);
  return n;
}

// Terms u_1..u_{i-1}, z, t_{i+1}..t_n.
std::vector<tff::Term> mixed(const std::vector<EqPair>& pairs, std::size_t i, const tff::Term& z) {
  std::vector<tff::Term> out;
  for (std::size_t j = 0; j < pairs.size(); ++j) {
    if (j < i) out.push_back(pairs[j].rhs);
    else if (j == i) out.push_back(z);
    else out.push_back(pairs[j].lhs);
  }
  return out;
}

std::vector<tff::Term> rhs_terms(const std::vector<EqPair>& pairs) {
  std::vector<tff::Term> out;
  for (const EqPair& e : pairs) out.push_back(e.rhs);
  return out;
}

// `in` is the position in the source tree, `out` the position in the result.
struct Eliminator {
  std::map<Path, Path>* origin;

  Node at(const Node& n, Path in, Path out) {
    if (origin) (*origin)[out] = in;
    if (n.rule != Rule::Pred && n.rule != Rule::Fun) {
      Node result = n;
      for (std::size_t i = 0; i < result.premises.size(); ++i) {
        result.premises[i] = at(n.premises[i], extend(in, i), extend(out, i));
      }
      return result;
    }
    if (n.premises.size() != n.pairs.size()) {
      throw ProofError("ill-formed", path_string(in),
                       std::string(rule_tag(n.rule)) + " has " + std::to_string(n.pairs.size()) +
                           " argument pair(s) but " + std::to_string(n.premises.size()) + " premise(s)");
    }
    const std::string z = tff::fresh_name("z", vars_of(n));
    if (n.rule == Rule::Pred) {
      auto atom = [&](std::vector<tff::Term> args) { return tff::pred(n.symbol, n.type_args, std::move(args)); };
      Node ax = make(Rule::Ax, {atom(rhs_terms(n.pairs))}, {});
      if (n.conclusions && n.pairs.empty()) ax.conclusions = n.conclusions;
      if (n.conclusions && !n.pairs.empty() && n.conclusions->size() == 2) {
        ax.conclusions = std::vector{atom(rhs_terms(n.pairs)), (*n.conclusions)[1]};
      }
      Node result = chain(n, in, out, z, atom, std::move(ax));
      if (n.conclusions && !n.pairs.empty() && !n.conclusions->empty()) {
        result.conclusions = std::vector{(*n.conclusions)[0]};
      }
      return result;
    }
    tff::Term target = tff::Term::fun(n.symbol, n.type_args, rhs_terms(n.pairs));
    auto diseq = [&](std::vector<tff::Term> args) {
      return tff::neg(tff::eq(n.result, tff::Term::fun(n.symbol, n.type_args, std::move(args)), target));
    };
    Node neq = make(Rule::Neq, {n.result, target}, {});
    if (n.pairs.empty() && n.conclusions) neq.conclusions = n.conclusions;
    Node result = chain(n, in, out, z, diseq, std::move(neq));
    if (n.conclusions && !n.pairs.empty()) result.conclusions = n.conclusions;
    return result;
  }

  static Path extend(Path p, std::size_t i) {
    p.push_back(static_cast<int>(i));
    return p;
  }

  // Subst_i over P_i(z), each the second premise of the previous one, closed
  // by `last`. Premise i of the source node proves the sequent extended with
  // t_i ≠ u_i and becomes the first premise of Subst_i.
  Node chain(const Node& n, const Path& in, const Path& out, const std::string& z,
             const std::function<tff::Formula(std::vector<tff::Term>)>& shape, Node last) {
    const std::size_t count = n.pairs.size();
    std::vector<Path> spots{out};
    for (std::size_t i = 0; i < count; ++i) spots.push_back(extend(spots.back(), 1));
    if (origin) (*origin)[spots[count]] = in;
    Node tail = std::move(last);
    for (std::size_t i = count; i-- > 0;) {
      const EqPair& e = n.pairs[i];
      Abstraction p{z, e.type, shape(mixed(n.pairs, i, tff::Term::var(z)))};
      if (origin) (*origin)[spots[i]] = in;
      tail = make(Rule::Subst, {p, e.lhs, e.rhs},
                  {at(n.premises[i], extend(in, i), extend(spots[i], 0)), std::move(tail)});
      if (n.hypotheses) tail.hypotheses = std::vector{n.hypotheses->at(i), std::vector{apply(p, e.rhs)}};
    }
    return tail;
  }
};

}  // namespace

Node eliminate_pred_fun(const Node& n, std::map<Path, Path>* origin) {
  return Eliminator{origin}.at(n, {}, {});
}

}  // namespace lpm::llproof
