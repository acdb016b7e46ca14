#pragma once

// Immutable expression trees over coordinates and parameters: parsing,
// printing, exact differentiation, conservative simplification and
// double-precision evaluation.

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace wcurv::expr {

enum class Function { Sin, Cos, Tan, Sinh, Cosh, Tanh, Exp, Ln, Sqrt };

std::string_view function_name(Function f);
std::optional<Function> function_from_name(std::string_view name);

bool is_identifier(std::string_view name);

struct Node;

// Shared handle to an immutable node. Copies are cheap and alias the same tree.
class Expression {
 public:
  Expression();  // Constant 0

  static Expression constant(double value);
  static Expression symbol(std::string name);
  static Expression sum(std::vector<Expression> terms);
  static Expression product(std::vector<Expression> factors);
  static Expression power(Expression base, Expression exponent);
  static Expression negate(Expression child);
  static Expression quotient(Expression numerator, Expression denominator);
  static Expression call(Function f, Expression argument);

  const Node& node() const { return *node_; }

  template <typename T>
  const T* as() const;

  bool is_constant() const;
  // True when this is exactly Constant(v).
  bool is_constant(double v) const;
  std::optional<double> constant_value() const;

  // Identity of the underlying node, for caches keyed on a specific tree.
  const void* id() const { return node_.get(); }

 private:
  explicit Expression(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Constant {
  double value;
};
struct Symbol {
  std::string name;
};
struct Sum {
  std::vector<Expression> terms;
};
struct Product {
  std::vector<Expression> factors;
};
struct Power {
  Expression base;
  Expression exponent;
};
struct Negate {
  Expression child;
};
struct Quotient {
  Expression numerator;
  Expression denominator;
};
struct Call {
  Function function;
  Expression argument;
};

struct Node {
  std::variant<Constant, Symbol, Sum, Product, Power, Negate, Quotient, Call> data;
};

template <typename T>
const T* Expression::as() const {
  return std::get_if<T>(&node_->data);
}

using Bindings = std::unordered_map<std::string, double>;

// Grammar (lowest to highest precedence):
//   expr  := term (("+"|"-") term)*
//   term  := unary (("*"|"/") unary)*
//   unary := "-" unary | power
//   power := atom ("^" unary)?
//   atom  := NUMBER | IDENT | IDENT "(" expr ")" | "(" expr ")"
// Throws SyntaxError.
Expression parse(std::string_view text);

// Prints in the grammar above; parse(to_string(e)) is structurally equal to e
// for every tree parse can produce.
std::string to_string(const Expression& e);

// Exact derivative. Symbols other than `wrt` are constants. Not simplified.
Expression differentiate(const Expression& e, std::string_view wrt);

// Constant folding, 0/1 identities, double negation, Sum/Product flattening.
// Never cancels ln/exp or other domain-changing rewrites.
Expression simplify(const Expression& e);

// Throws UnboundSymbol or DomainError (ln of non-positive, sqrt of negative,
// division by zero, or any non-finite intermediate).
double evaluate(const Expression& e, const Bindings& bindings);

bool structurally_equal(const Expression& a, const Expression& b);
inline bool operator==(const Expression& a, const Expression& b) { return structurally_equal(a, b); }

std::set<std::string> free_symbols(const Expression& e);
bool depends_on(const Expression& e, std::string_view name);

// Number of nodes in the tree.
std::size_t node_count(const Expression& e);

}  // namespace wcurv::expr
