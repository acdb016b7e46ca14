#include <wcurv/expr.hpp>

namespace wcurv::expr {

namespace {

using E = Expression;

E zero() { return E::constant(0.0); }
E one() { return E::constant(1.0); }

E d(const E& e, std::string_view x);

E d_call(const Call& c, std::string_view x) {
  const E& u = c.argument;
  E du = d(u, x);
  switch (c.function) {
    case Function::Sin:
      return E::product({E::call(Function::Cos, u), du});
    case Function::Cos:
      return E::negate(E::product({E::call(Function::Sin, u), du}));
    case Function::Tan:
      return E::quotient(du, E::power(E::call(Function::Cos, u), E::constant(2.0)));
    case Function::Sinh:
      return E::product({E::call(Function::Cosh, u), du});
    case Function::Cosh:
      return E::product({E::call(Function::Sinh, u), du});
    case Function::Tanh:
      return E::quotient(du, E::power(E::call(Function::Cosh, u), E::constant(2.0)));
    case Function::Exp:
      return E::product({E::call(Function::Exp, u), du});
    case Function::Ln:
      return E::quotient(du, u);
    case Function::Sqrt:
      return E::quotient(du, E::product({E::constant(2.0), E::call(Function::Sqrt, u)}));
  }
  return zero();
}

E d(const E& e, std::string_view x) {
  if (e.as<Constant>()) return zero();
  if (const auto* s = e.as<Symbol>()) return s->name == x ? one() : zero();
  if (!depends_on(e, x)) return zero();

  if (const auto* s = e.as<Sum>()) {
    std::vector<E> terms;
    terms.reserve(s->terms.size());
    for (const auto& t : s->terms) terms.push_back(d(t, x));
    return E::sum(std::move(terms));
  }
  if (const auto* p = e.as<Product>()) {
    std::vector<E> terms;
    for (std::size_t i = 0; i < p->factors.size(); ++i) {
      if (!depends_on(p->factors[i], x)) continue;
      std::vector<E> factors = p->factors;
      factors[i] = d(p->factors[i], x);
      terms.push_back(E::product(std::move(factors)));
    }
    return terms.size() == 1 ? terms.front() : E::sum(std::move(terms));
  }
  if (const auto* q = e.as<Quotient>()) {
    const E& f = q->numerator;
    const E& g = q->denominator;
    if (!depends_on(g, x)) return E::quotient(d(f, x), g);
    E num = E::sum({E::product({d(f, x), g}), E::negate(E::product({f, d(g, x)}))});
    return E::quotient(num, E::power(g, E::constant(2.0)));
  }
  if (const auto* p = e.as<Power>()) {
    const E& b = p->base;
    const E& k = p->exponent;
    // Power rule when the exponent is constant in x; avoids ln(base).
    if (!depends_on(k, x)) {
      return E::product({k, E::power(b, E::sum({k, E::constant(-1.0)})), d(b, x)});
    }
    if (!depends_on(b, x)) {
      return E::product({e, E::call(Function::Ln, b), d(k, x)});
    }
    E inner = E::sum({E::product({d(k, x), E::call(Function::Ln, b)}),
                      E::quotient(E::product({k, d(b, x)}), b)});
    return E::product({e, inner});
  }
  if (const auto* n = e.as<Negate>()) return E::negate(d(n->child, x));
  if (const auto* c = e.as<Call>()) return d_call(*c, x);
  return zero();
}

}  // namespace

Expression differentiate(const Expression& e, std::string_view wrt) { return d(e, wrt); }

}  // namespace wcurv::expr
