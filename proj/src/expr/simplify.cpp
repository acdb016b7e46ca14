#include <wcurv/expr.hpp>

#include <cmath>

namespace wcurv::expr {

namespace {

using E = Expression;

// Folded constants must stay finite; otherwise the node is left alone so that
// evaluation raises the DomainError at run time.
std::optional<E> fold(double v) {
  if (!std::isfinite(v)) return std::nullopt;
  return E::constant(v == 0.0 ? 0.0 : v);
}

E simp(const E& e);

E simp_negate(const Negate& n) {
  E c = simp(n.child);
  if (auto v = c.constant_value()) return E::constant(*v == 0.0 ? 0.0 : -*v);
  if (const auto* inner = c.as<Negate>()) return inner->child;
  return E::negate(c);
}

E simp_sum(const Sum& s) {
  std::vector<E> terms;
  double constant = 0.0;
  bool have_constant = false;
  std::size_t constant_slot = 0;
  auto absorb = [&](const E& t) {
    if (auto v = t.constant_value()) {
      if (!have_constant) constant_slot = terms.size();
      constant = have_constant ? constant + *v : *v;
      have_constant = true;
    } else {
      terms.push_back(t);
    }
  };
  for (const auto& raw : s.terms) {
    E t = simp(raw);
    if (const auto* inner = t.as<Sum>()) {
      for (const auto& u : inner->terms) absorb(u);
    } else {
      absorb(t);
    }
  }
  if (have_constant && constant != 0.0) {
    if (auto c = fold(constant)) terms.insert(terms.begin() + static_cast<std::ptrdiff_t>(constant_slot), *c);
  }
  if (terms.empty()) return E::constant(0.0);
  if (terms.size() == 1) return terms.front();
  return E::sum(std::move(terms));
}

E simp_product(const Product& p) {
  std::vector<E> factors;
  double constant = 1.0;
  bool have_constant = false;
  std::size_t constant_slot = 0;
  auto absorb = [&](const E& f) {
    if (auto v = f.constant_value()) {
      if (!have_constant) constant_slot = factors.size();
      constant = have_constant ? constant * *v : *v;
      have_constant = true;
    } else {
      factors.push_back(f);
    }
  };
  for (const auto& raw : p.factors) {
    E f = simp(raw);
    if (const auto* inner = f.as<Product>()) {
      for (const auto& u : inner->factors) absorb(u);
    } else {
      absorb(f);
    }
  }
  if (constant == 0.0) return E::constant(0.0);
  if (factors.empty()) {
    if (auto c = fold(constant)) return *c;
    return E::product(p.factors);
  }
  E rest = factors.size() == 1 ? factors.front() : E::product(factors);
  if (constant == 1.0) return rest;
  if (constant == -1.0) {
    if (const auto* n = rest.as<Negate>()) return n->child;
    return E::negate(rest);
  }
  factors.insert(factors.begin() + static_cast<std::ptrdiff_t>(constant_slot), E::constant(constant));
  return E::product(std::move(factors));
}

E simp_quotient(const Quotient& q) {
  E num = simp(q.numerator);
  E den = simp(q.denominator);
  auto nv = num.constant_value();
  auto dv = den.constant_value();
  if (dv && *dv == 1.0) return num;
  if (dv && *dv == -1.0) return simp_negate(Negate{num});
  if (nv && *nv == 0.0 && !(dv && *dv == 0.0)) return E::constant(0.0);
  if (nv && dv && *dv != 0.0) {
    if (auto c = fold(*nv / *dv)) return *c;
  }
  return E::quotient(num, den);
}

E simp_power(const Power& p) {
  E base = simp(p.base);
  E ex = simp(p.exponent);
  auto bv = base.constant_value();
  auto xv = ex.constant_value();
  if (xv && *xv == 0.0) return E::constant(1.0);
  if (xv && *xv == 1.0) return base;
  if (bv && *bv == 1.0) return E::constant(1.0);
  if (bv && xv) {
    bool valid = !(*bv == 0.0 && *xv < 0.0) && !(*bv < 0.0 && std::trunc(*xv) != *xv);
    if (valid) {
      if (auto c = fold(std::pow(*bv, *xv))) return *c;
    }
  }
  return E::power(base, ex);
}

E simp_call(const Call& c) {
  E arg = simp(c.argument);
  if (auto v = arg.constant_value()) {
    double x = *v;
    std::optional<double> r;
    switch (c.function) {
      case Function::Sin: r = std::sin(x); break;
      case Function::Cos: r = std::cos(x); break;
      case Function::Tan: r = std::tan(x); break;
      case Function::Sinh: r = std::sinh(x); break;
      case Function::Cosh: r = std::cosh(x); break;
      case Function::Tanh: r = std::tanh(x); break;
      case Function::Exp: r = std::exp(x); break;
      case Function::Ln:
        if (x > 0.0) r = std::log(x);
        break;
      case Function::Sqrt:
        if (x >= 0.0) r = std::sqrt(x);
        break;
    }
    if (r) {
      if (auto folded = fold(*r)) return *folded;
    }
  }
  return E::call(c.function, arg);
}

E simp(const E& e) {
  if (e.as<Constant>() || e.as<Symbol>()) return e;
  if (const auto* n = e.as<Negate>()) return simp_negate(*n);
  if (const auto* s = e.as<Sum>()) return simp_sum(*s);
  if (const auto* p = e.as<Product>()) return simp_product(*p);
  if (const auto* q = e.as<Quotient>()) return simp_quotient(*q);
  if (const auto* p = e.as<Power>()) return simp_power(*p);
  if (const auto* c = e.as<Call>()) return simp_call(*c);
  return e;
}

}  // namespace

Expression simplify(const Expression& e) { return simp(e); }

}  // namespace wcurv::expr
