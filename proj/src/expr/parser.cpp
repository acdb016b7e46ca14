#include <wcurv/error.hpp>
#include <wcurv/expr.hpp>

#include <cctype>
#include <charconv>

namespace wcurv::expr {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expression parse_all() {
    skip_ws();
    if (pos_ == text_.size()) throw SyntaxError(pos_, "empty expression");
    Expression e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) {
      if (text_[pos_] == ')') throw SyntaxError(pos_, "unbalanced ')'");
      throw SyntaxError(pos_, std::string("unexpected trailing '") + text_[pos_] + "'");
    }
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  Expression parse_expr() {
    std::vector<Expression> terms{parse_term()};
    while (true) {
      if (peek('+')) {
        ++pos_;
        terms.push_back(parse_term());
      } else if (peek('-')) {
        ++pos_;
        terms.push_back(Expression::negate(parse_term()));
      } else {
        break;
      }
    }
    if (terms.size() == 1) return terms.front();
    return Expression::sum(std::move(terms));
  }

  Expression parse_term() {
    Expression acc = parse_unary();
    // Factors collected by a run of '*' in this term; a '/' closes the run.
    std::vector<Expression> chain;
    bool in_chain = false;
    auto close_chain = [&] {
      if (in_chain) {
        acc = Expression::product(std::move(chain));
        chain.clear();
        in_chain = false;
      }
    };
    while (true) {
      if (peek('*')) {
        ++pos_;
        Expression rhs = parse_unary();
        if (!in_chain) {
          chain.push_back(acc);
          in_chain = true;
        }
        chain.push_back(std::move(rhs));
      } else if (peek('/')) {
        ++pos_;
        Expression rhs = parse_unary();
        close_chain();
        acc = Expression::quotient(acc, std::move(rhs));
      } else {
        break;
      }
    }
    close_chain();
    return acc;
  }

  Expression parse_unary() {
    if (peek('-')) {
      ++pos_;
      return Expression::negate(parse_unary());
    }
    return parse_power();
  }

  Expression parse_power() {
    Expression base = parse_atom();
    if (peek('^')) {
      ++pos_;
      return Expression::power(std::move(base), parse_unary());
    }
    return base;
  }

  Expression parse_atom() {
    skip_ws();
    if (pos_ == text_.size()) throw SyntaxError(pos_, "unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      std::size_t open = pos_;
      ++pos_;
      Expression inner = parse_expr();
      if (!peek(')')) {
        if (pos_ == text_.size()) throw SyntaxError(open, "unbalanced '('");
        throw SyntaxError(pos_, std::string("expected ')' but found '") + text_[pos_] + "'");
      }
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_identifier();
    if (c == ')') throw SyntaxError(pos_, "unbalanced ')'");
    throw SyntaxError(pos_, std::string("unexpected character '") + c + "'");
  }

  Expression parse_number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      std::size_t n = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
        ++n;
      }
      return n;
    };
    std::size_t int_digits = digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      std::size_t frac_digits = digits();
      if (int_digits + frac_digits == 0 || frac_digits == 0) {
        throw SyntaxError(start, "malformed number '" + std::string(text_.substr(start, pos_ - start)) + "'");
      }
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (digits() == 0) {
        throw SyntaxError(start, "malformed exponent in '" + std::string(text_.substr(start, pos_ - start)) + "'");
      }
    }
    if (pos_ < text_.size() && (text_[pos_] == '.' || std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      throw SyntaxError(start, "malformed number near '" + std::string(text_.substr(start, pos_ - start + 1)) + "'");
    }
    double value = 0.0;
    const char* first = text_.data() + start;
    const char* last = text_.data() + pos_;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
      throw SyntaxError(start, "malformed number '" + std::string(first, last) + "'");
    }
    return Expression::constant(value);
  }

  Expression parse_identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    std::string name(text_.substr(start, pos_ - start));
    if (peek('(')) {
      auto fn = function_from_name(name);
      if (!fn) throw SyntaxError(start, "unknown function '" + name + "'");
      ++pos_;
      std::size_t open = pos_ - 1;
      Expression arg = parse_expr();
      if (!peek(')')) {
        if (pos_ == text_.size()) throw SyntaxError(open, "unbalanced '('");
        throw SyntaxError(pos_, std::string("expected ')' but found '") + text_[pos_] + "'");
      }
      ++pos_;
      return Expression::call(*fn, std::move(arg));
    }
    if (function_from_name(name)) {
      throw SyntaxError(start, "function '" + name + "' requires a parenthesized argument");
    }
    return Expression::symbol(std::move(name));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expression parse(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace wcurv::expr
