#include <cctype>
#include <limits>

#include "dgmf/errors.hpp"
#include "dgmf/poly.hpp"

namespace dgmf {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : s_(text), ring_(ring) {}

  Poly parse() {
    skip();
    if (pos_ >= s_.size()) throw SyntaxError("empty expression", pos_);
    Poly p = expr();
    skip();
    if (pos_ < s_.size()) throw SyntaxError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    bool negate = accept('-');
    Poly acc = factor();
    for (;;) {
      if (accept('*')) {
        acc *= factor();
      } else if (accept('/')) {
        skip();
        std::size_t at = pos_;
        std::string digits = nat();
        Coeff d = ring_->field().from_decimal(digits);
        if (ring_->field().is_zero(d))
          throw DivisionInCoefficient("literal " + digits + " is not invertible in the field (position " +
                                      std::to_string(at) + ")");
        acc = acc.scaled(ring_->field().inv(d));
      } else {
        break;
      }
    }
    return negate ? -acc : acc;
  }

  Poly factor() {
    Poly b = base();
    if (accept('^')) {
      skip();
      std::size_t at = pos_;
      std::string digits = nat();
      if (digits.size() > 5 || std::stoul(digits) > std::numeric_limits<std::uint16_t>::max())
        throw SyntaxError("exponent too large", at);
      b = b.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return b;
  }

  Poly base() {
    skip();
    if (pos_ >= s_.size()) throw SyntaxError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) throw SyntaxError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Poly::constant(ring_, ring_->field().from_decimal(nat()));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      auto idx = ring_->index_of(name);
      if (!idx) throw UnknownVariable(name, start);
      return Poly::variable(ring_, *idx);
    }
    throw SyntaxError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string nat() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw SyntaxError("expected a number", pos_);
    return std::string(s_.substr(start, pos_ - start));
  }

  std::string_view s_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const RingPtr& ring) { return Parser(text, ring).parse(); }

}  // namespace dgmf
