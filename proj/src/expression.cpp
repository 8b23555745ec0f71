#include "rbchar/expression.hpp"

#include <cctype>
#include <sstream>

namespace rbchar {

ParseError::ParseError(const std::string& message, std::string input, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)),
      reason_(message),
      input_(std::move(input)),
      position_(position) {}

std::string ParseError::diagnostic() const {
  std::ostringstream os;
  os << what() << "\n  " << input_ << "\n  " << std::string(position_, ' ') << '^';
  return os.str();
}

namespace {

class Parser {
 public:
  Parser(const AlgebraCtx& ctx, std::string_view text) : ctx_(ctx), text_(text) {}

  RBElement parse() {
    RBElement result = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, std::string(text_), pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool at_digit() const {
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  std::string digits() {
    std::size_t start = pos_;
    while (at_digit()) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t index() {
    std::string d = digits();
    if (d.size() > 9) fail("index too large");
    return static_cast<std::size_t>(std::stoul(d));
  }

  RBElement expr() {
    skip_ws();
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    RBElement acc = product();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+')) acc += product();
      else if (accept('-')) acc -= product();
      else return acc;
    }
  }

  RBElement product() {
    RBElement acc = unary();
    while (accept('*')) acc = diamond(acc, unary());
    return acc;
  }

  RBElement unary() {
    if (accept('-')) return -unary();
    return power();
  }

  RBElement power() {
    RBElement base = primary();
    if (!accept('^')) return base;
    skip_ws();
    std::size_t e = index();
    RBElement acc = RBElement::basis(ctx_, 0);
    for (std::size_t i = 0; i < e; ++i) acc = diamond(acc, base);
    return acc;
  }

  RBElement primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RBElement inner = expr();
      expect(')');
      return inner;
    }
    if (c == 'P') {
      ++pos_;
      expect('(');
      RBElement inner = expr();
      expect(')');
      return operator_p(inner);
    }
    if (c == 'a') {
      ++pos_;
      if (!at_digit()) fail("expected an index after 'a'");
      return RBElement::basis(ctx_, index());
    }
    if (at_digit()) {
      std::size_t start = pos_;
      std::string literal = digits();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        literal += "/" + digits();
      }
      Coeff coeff;
      try {
        coeff = ctx_.ring.parse_coeff(literal);
      } catch (const std::exception& e) {
        throw ParseError(e.what(), std::string(text_), start);
      }
      skip_ws();
      std::size_t degree = 0;
      if (pos_ < text_.size() && text_[pos_] == 'a') {
        ++pos_;
        if (!at_digit()) fail("expected an index after 'a'");
        degree = index();
      }
      return RBElement::monomial(ctx_, degree, coeff);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  const AlgebraCtx& ctx_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RBElement parse_expression(const AlgebraCtx& ctx, std::string_view text) {
  return Parser(ctx, text).parse();
}

std::vector<RBElement> parse_element_list(const AlgebraCtx& ctx, std::string_view text) {
  std::vector<RBElement> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view piece = text.substr(start, end - start);
    if (piece.find_first_not_of(" \t") != std::string_view::npos) {
      try {
        out.push_back(parse_expression(ctx, piece));
      } catch (const ParseError& e) {
        throw ParseError(e.reason(), std::string(text), start + e.position());
      }
    }
    start = end + 1;
  }
  return out;
}

}  // namespace rbchar
