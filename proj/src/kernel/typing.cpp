#include "lpm/kernel/typing.hpp"

#include "lpm/kernel/error.hpp"
#include "lpm/kernel/reduce.hpp"

namespace lpm::kernel {

Term Context::type_of(std::uint32_t index) const {
  return shift(types_[types_.size() - 1 - index], index + 1);
}

namespace {

struct Popper {
  Context& ctx;
  ~Popper() { ctx.pop(); }
};

std::string nf_text(const Signature& sig, const Context& ctx, const Term& t) {
  // Error messages show normal forms when they can be computed cheaply.
  try {
    Fuel local(Limits{10000, 1000});
    return show(normalize(sig, t, local), ctx.names());
  } catch (const KernelError&) {
    return show(t, ctx.names());
  }
}

void ensure_type(const Signature& sig, Context& ctx, const Term& domain, Fuel& fuel) {
  Term s = whnf(sig, infer(sig, ctx, domain, fuel), fuel);
  if (!is_type(s)) {
    throw KernelError(ErrorKind::SortError,
                      "binder domain " + show(domain, ctx.names()) + " has type " + show(s, ctx.names()) +
                          ", expected Type");
  }
}

}  // namespace

Term infer(const Signature& sig, Context& ctx, const Term& t, Fuel& fuel) {
  switch (t->tag()) {
    case Tag::Sort:
      if (t->sort() == Sort::Type) return mk_kind();
      throw KernelError(ErrorKind::UntypableKind, "Kind has no type");
    case Tag::Var:
      if (t->index() >= ctx.size()) {
        throw KernelError(ErrorKind::UnboundIdentifier, "variable #" + std::to_string(t->index()) + " is not in scope");
      }
      return ctx.type_of(t->index());
    case Tag::Const: {
      const Term* ty = sig.type_of(t->name());
      if (ty == nullptr) throw KernelError(ErrorKind::UnboundIdentifier, t->name().str());
      return *ty;
    }
    case Tag::App: {
      Term fty = whnf(sig, infer(sig, ctx, t->fn(), fuel), fuel);
      if (fty->tag() != Tag::Pi) {
        throw KernelError(ErrorKind::NotAFunction, show(t->fn(), ctx.names()) + " has type " +
                                                       show(fty, ctx.names()) + ", which is not a product");
      }
      check(sig, ctx, t->arg(), fty->domain(), fuel);
      return instantiate(fty->body(), t->arg());
    }
    case Tag::Lam: {
      ensure_type(sig, ctx, t->domain(), fuel);
      ctx.push(t->name(), t->domain());
      Term body_ty;
      {
        Popper p{ctx};
        body_ty = infer(sig, ctx, t->body(), fuel);
        if (is_kind(body_ty)) {
          throw KernelError(ErrorKind::SortError, "body of abstraction " + show(t->body(), ctx.names()) + " has type Kind");
        }
      }
      return mk_pi(t->name(), t->domain(), body_ty);
    }
    case Tag::Pi: {
      ensure_type(sig, ctx, t->domain(), fuel);
      ctx.push(t->name(), t->domain());
      Popper p{ctx};
      Term s = whnf(sig, infer(sig, ctx, t->body(), fuel), fuel);
      if (s->tag() != Tag::Sort) {
        throw KernelError(ErrorKind::SortError, "product codomain " + show(t->body(), ctx.names()) + " has type " +
                                                    show(s, ctx.names()) + ", which is not a sort");
      }
      return s;
    }
  }
  throw KernelError(ErrorKind::UnboundIdentifier, "malformed term");
}

void check(const Signature& sig, Context& ctx, const Term& t, const Term& expected, Fuel& fuel) {
  if (t->tag() == Tag::Lam) {
    Term e = whnf(sig, expected, fuel);
    if (e->tag() == Tag::Pi) {
      ensure_type(sig, ctx, t->domain(), fuel);
      if (!convertible(sig, t->domain(), e->domain(), fuel)) {
        throw KernelError(ErrorKind::TypeMismatch,
                          "binder " + t->name().str() + " has domain " + nf_text(sig, ctx, t->domain()) +
                              " but " + nf_text(sig, ctx, e->domain()) + " was expected");
      }
      ctx.push(t->name(), t->domain());
      Popper p{ctx};
      check(sig, ctx, t->body(), e->body(), fuel);
      return;
    }
  }
  Term actual = infer(sig, ctx, t, fuel);
  if (!convertible(sig, actual, expected, fuel)) {
    throw KernelError(ErrorKind::TypeMismatch, show(t, ctx.names()) + " has type " +
                                                   nf_text(sig, ctx, actual) + " but " +
                                                   nf_text(sig, ctx, expected) + " was expected");
  }
}

Term infer(const Signature& sig, const Term& t, Fuel& fuel) {
  Context ctx;
  return infer(sig, ctx, t, fuel);
}

void check(const Signature& sig, const Term& t, const Term& expected, Fuel& fuel) {
  Context ctx;
  check(sig, ctx, t, expected, fuel);
}

Term ensure_sort(const Signature& sig, Context& ctx, const Term& ty, Fuel& fuel) {
  Term s = whnf(sig, infer(sig, ctx, ty, fuel), fuel);
  if (s->tag() != Tag::Sort) {
    throw KernelError(ErrorKind::NotASort,
                      show(ty, ctx.names()) + " has type " + show(s, ctx.names()) + ", which is not a sort");
  }
  return s;
}

}  // namespace lpm::kernel
