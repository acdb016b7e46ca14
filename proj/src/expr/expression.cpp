#include <wcurv/error.hpp>
#include <wcurv/expr.hpp>

#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace wcurv::expr {

namespace {

constexpr std::array<std::pair<Function, std::string_view>, 9> kFunctionNames{{
    {Function::Sin, "sin"},
    {Function::Cos, "cos"},
    {Function::Tan, "tan"},
    {Function::Sinh, "sinh"},
    {Function::Cosh, "cosh"},
    {Function::Tanh, "tanh"},
    {Function::Exp, "exp"},
    {Function::Ln, "ln"},
    {Function::Sqrt, "sqrt"},
}};

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

std::string_view function_name(Function f) {
  for (const auto& [fn, name] : kFunctionNames) {
    if (fn == f) return name;
  }
  return "?";
}

std::optional<Function> function_from_name(std::string_view name) {
  for (const auto& [fn, n] : kFunctionNames) {
    if (n == name) return fn;
  }
  return std::nullopt;
}

bool is_identifier(std::string_view name) {
  if (name.empty()) return false;
  auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(name.front())) return false;
  for (char c : name) {
    if (!alpha(c) && !digit(c)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Construction

Expression::Expression() : Expression(std::make_shared<const Node>(Node{Constant{0.0}})) {}

Expression Expression::constant(double value) {
  return Expression(std::make_shared<const Node>(Node{Constant{value}}));
}

Expression Expression::symbol(std::string name) {
  if (!is_identifier(name)) throw std::invalid_argument("invalid symbol name '" + name + "'");
  return Expression(std::make_shared<const Node>(Node{Symbol{std::move(name)}}));
}

Expression Expression::sum(std::vector<Expression> terms) {
  if (terms.empty()) throw std::invalid_argument("empty Sum");
  return Expression(std::make_shared<const Node>(Node{Sum{std::move(terms)}}));
}

Expression Expression::product(std::vector<Expression> factors) {
  if (factors.empty()) throw std::invalid_argument("empty Product");
  return Expression(std::make_shared<const Node>(Node{Product{std::move(factors)}}));
}

Expression Expression::power(Expression base, Expression exponent) {
  return Expression(
      std::make_shared<const Node>(Node{Power{std::move(base), std::move(exponent)}}));
}

Expression Expression::negate(Expression child) {
  return Expression(std::make_shared<const Node>(Node{Negate{std::move(child)}}));
}

Expression Expression::quotient(Expression numerator, Expression denominator) {
  return Expression(
      std::make_shared<const Node>(Node{Quotient{std::move(numerator), std::move(denominator)}}));
}

Expression Expression::call(Function f, Expression argument) {
  return Expression(std::make_shared<const Node>(Node{Call{f, std::move(argument)}}));
}

bool Expression::is_constant() const { return as<Constant>() != nullptr; }

bool Expression::is_constant(double v) const {
  const auto* c = as<Constant>();
  return c != nullptr && c->value == v;
}

std::optional<double> Expression::constant_value() const {
  if (const auto* c = as<Constant>()) return c->value;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

std::string format_number(double v) {
  if (v == 0.0) return "0";
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc()) throw std::runtime_error("number formatting failed");
  return std::string(buf.data(), ptr);
}

bool is_negative_constant(const Expression& e) {
  const auto* c = e.as<Constant>();
  return c != nullptr && std::signbit(c->value) && c->value != 0.0;
}

// Leaves that never need parentheses in any operand position.
bool is_tight(const Expression& e) {
  if (is_negative_constant(e)) return false;
  return e.as<Constant>() || e.as<Symbol>() || e.as<Call>();
}

std::string print(const Expression& e);

std::string paren(const std::string& s) { return "(" + s + ")"; }

std::string print_operand(const Expression& e, bool allow_power) {
  if (is_tight(e) || (allow_power && e.as<Power>())) return print(e);
  return paren(print(e));
}

std::string print(const Expression& e) {
  return std::visit(
      Overloaded{
          [](const Constant& c) { return format_number(c.value); },
          [](const Symbol& s) { return s.name; },
          [](const Sum& s) {
            std::string out;
            for (std::size_t i = 0; i < s.terms.size(); ++i) {
              const Expression& t = s.terms[i];
              if (i == 0) {
                out += t.as<Sum>() ? paren(print(t)) : print(t);
                continue;
              }
              if (const auto* n = t.as<Negate>()) {
                out += " - ";
                out += n->child.as<Sum>() ? paren(print(n->child)) : print(n->child);
              } else if (is_negative_constant(t)) {
                out += " - " + format_number(-t.as<Constant>()->value);
              } else {
                out += " + ";
                out += t.as<Sum>() ? paren(print(t)) : print(t);
              }
            }
            return out;
          },
          [](const Product& p) {
            std::string out;
            for (std::size_t i = 0; i < p.factors.size(); ++i) {
              if (i > 0) out += "*";
              out += print_operand(p.factors[i], true);
            }
            return out;
          },
          [](const Power& p) {
            return print_operand(p.base, false) + "^" + print_operand(p.exponent, true);
          },
          [](const Negate& n) { return "-" + print_operand(n.child, true); },
          [](const Quotient& q) {
            std::string num = q.numerator.as<Sum>() ? paren(print(q.numerator)) : print(q.numerator);
            return num + "/" + print_operand(q.denominator, true);
          },
          [](const Call& c) {
            return std::string(function_name(c.function)) + "(" + print(c.argument) + ")";
          },
      },
      e.node().data);
}

}  // namespace

std::string to_string(const Expression& e) { return print(e); }

// ---------------------------------------------------------------------------
// Evaluation

namespace {

double checked(double v, const Expression& e, const char* what) {
  if (!std::isfinite(v)) throw DomainError(to_string(e), what);
  return v;
}

double eval(const Expression& e, const Bindings& b) {
  return std::visit(
      Overloaded{
          [](const Constant& c) { return c.value; },
          [&](const Symbol& s) {
            auto it = b.find(s.name);
            if (it == b.end()) throw UnboundSymbol(s.name);
            return it->second;
          },
          [&](const Sum& s) {
            double acc = 0.0;
            bool first = true;
            for (const auto& t : s.terms) {
              double v = eval(t, b);
              acc = first ? v : acc + v;
              first = false;
            }
            return checked(acc, e, "non-finite sum");
          },
          [&](const Product& p) {
            double acc = 1.0;
            bool first = true;
            for (const auto& f : p.factors) {
              double v = eval(f, b);
              acc = first ? v : acc * v;
              first = false;
            }
            return checked(acc, e, "non-finite product");
          },
          [&](const Power& p) {
            double base = eval(p.base, b);
            double ex = eval(p.exponent, b);
            if (base == 0.0 && ex < 0.0) throw DomainError(to_string(e), "division by zero");
            if (base < 0.0 && std::trunc(ex) != ex) {
              throw DomainError(to_string(e), "negative base with non-integer exponent");
            }
            return checked(std::pow(base, ex), e, "non-finite power");
          },
          [&](const Negate& n) { return -eval(n.child, b); },
          [&](const Quotient& q) {
            double num = eval(q.numerator, b);
            double den = eval(q.denominator, b);
            if (den == 0.0) throw DomainError(to_string(e), "division by zero");
            return checked(num / den, e, "non-finite quotient");
          },
          [&](const Call& c) {
            double x = eval(c.argument, b);
            double r = 0.0;
            switch (c.function) {
              case Function::Sin: r = std::sin(x); break;
              case Function::Cos: r = std::cos(x); break;
              case Function::Tan: r = std::tan(x); break;
              case Function::Sinh: r = std::sinh(x); break;
              case Function::Cosh: r = std::cosh(x); break;
              case Function::Tanh: r = std::tanh(x); break;
              case Function::Exp: r = std::exp(x); break;
              case Function::Ln:
                if (x <= 0.0) throw DomainError(to_string(e), "ln of non-positive value");
                r = std::log(x);
                break;
              case Function::Sqrt:
                if (x < 0.0) throw DomainError(to_string(e), "sqrt of negative value");
                r = std::sqrt(x);
                break;
            }
            return checked(r, e, "non-finite function value");
          },
      },
      e.node().data);
}

}  // namespace

double evaluate(const Expression& e, const Bindings& bindings) { return eval(e, bindings); }

// ---------------------------------------------------------------------------
// Structure queries

bool structurally_equal(const Expression& a, const Expression& b) {
  if (a.id() == b.id()) return true;
  const auto& da = a.node().data;
  const auto& db = b.node().data;
  if (da.index() != db.index()) return false;
  auto lists_equal = [](const std::vector<Expression>& x, const std::vector<Expression>& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (!structurally_equal(x[i], y[i])) return false;
    }
    return true;
  };
  return std::visit(
      Overloaded{
          [&](const Constant& c) { return c.value == std::get<Constant>(db).value; },
          [&](const Symbol& s) { return s.name == std::get<Symbol>(db).name; },
          [&](const Sum& s) { return lists_equal(s.terms, std::get<Sum>(db).terms); },
          [&](const Product& p) { return lists_equal(p.factors, std::get<Product>(db).factors); },
          [&](const Power& p) {
            const auto& o = std::get<Power>(db);
            return structurally_equal(p.base, o.base) && structurally_equal(p.exponent, o.exponent);
          },
          [&](const Negate& n) { return structurally_equal(n.child, std::get<Negate>(db).child); },
          [&](const Quotient& q) {
            const auto& o = std::get<Quotient>(db);
            return structurally_equal(q.numerator, o.numerator) &&
                   structurally_equal(q.denominator, o.denominator);
          },
          [&](const Call& c) {
            const auto& o = std::get<Call>(db);
            return c.function == o.function && structurally_equal(c.argument, o.argument);
          },
      },
      da);
}

namespace {

template <typename F>
void for_each_child(const Expression& e, F&& f) {
  std::visit(Overloaded{
                 [](const Constant&) {},
                 [](const Symbol&) {},
                 [&](const Sum& s) {
                   for (const auto& t : s.terms) f(t);
                 },
                 [&](const Product& p) {
                   for (const auto& t : p.factors) f(t);
                 },
                 [&](const Power& p) {
                   f(p.base);
                   f(p.exponent);
                 },
                 [&](const Negate& n) { f(n.child); },
                 [&](const Quotient& q) {
                   f(q.numerator);
                   f(q.denominator);
                 },
                 [&](const Call& c) { f(c.argument); },
             },
             e.node().data);
}

void collect(const Expression& e, std::set<std::string>& out) {
  if (const auto* s = e.as<Symbol>()) {
    out.insert(s->name);
    return;
  }
  for_each_child(e, [&](const Expression& c) { collect(c, out); });
}

}  // namespace

std::set<std::string> free_symbols(const Expression& e) {
  std::set<std::string> out;
  collect(e, out);
  return out;
}

bool depends_on(const Expression& e, std::string_view name) {
  if (const auto* s = e.as<Symbol>()) return s->name == name;
  bool found = false;
  for_each_child(e, [&](const Expression& c) {
    if (!found && depends_on(c, name)) found = true;
  });
  return found;
}

std::size_t node_count(const Expression& e) {
  std::size_t n = 1;
  for_each_child(e, [&](const Expression& c) { n += node_count(c); });
  return n;
}

}  // namespace wcurv::expr
