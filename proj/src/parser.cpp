#include "qdga/parser.hpp"

#include "qdga/differential.hpp"

#include <cctype>
#include <optional>

namespace qdga {

namespace {

enum class Tok {
  End,
  Plus,
  Minus,
  Star,
  Tensor,  // "(*)" or "⊗"
  LParen,
  RParen,
  Rational,
  Q,
  QInt,
  Gen,
  Letter,
  DOp,
};

struct Token {
  Tok kind = Tok::End;
  std::size_t pos = 0;
  mpq_class rational;
  unsigned long number = 0;  // generator/letter index (one-based) or q-integer
  int grade = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  Token next() {
    skip_ws();
    Token t;
    t.pos = pos_;
    if (pos_ >= s_.size()) return t;
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num(digits());
      mpz_class den(1);
      if (peek() == '/') {
        ++pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek())))
          throw ParseError(pos_, "expected denominator digits after '/'");
        den = mpz_class(digits());
        if (den == 0) throw ParseError(t.pos, "zero denominator");
      }
      t.kind = Tok::Rational;
      t.rational = mpq_class(num, den);
      t.rational.canonicalize();
      return t;
    }
    switch (c) {
      case '+':
        ++pos_;
        t.kind = Tok::Plus;
        return t;
      case '-':
        ++pos_;
        t.kind = Tok::Minus;
        return t;
      case '*':
        ++pos_;
        t.kind = Tok::Star;
        return t;
      case ')':
        ++pos_;
        t.kind = Tok::RParen;
        return t;
      case '(':
        if (s_.substr(pos_, 3) == "(*)") {
          pos_ += 3;
          t.kind = Tok::Tensor;
        } else {
          ++pos_;
          t.kind = Tok::LParen;
        }
        return t;
      case 'q':
        ++pos_;
        t.kind = Tok::Q;
        return t;
      case '[': {
        ++pos_;
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
          throw ParseError(pos_, "expected an integer inside '[n]_q'");
        t.number = std::stoul(digits());
        skip_ws();
        if (s_.substr(pos_, 3) != "]_q") throw ParseError(pos_, "expected ']_q'");
        pos_ += 3;
        t.kind = Tok::QInt;
        return t;
      }
      case 'x':
        ++pos_;
        t.kind = Tok::Gen;
        t.number = index("generator index after 'x'");
        return t;
      case 'd':
        return lex_d(t);
      default:
        break;
    }
    if (s_.substr(pos_, 3) == "\xE2\x8A\x97") {  // U+2297
      pos_ += 3;
      t.kind = Tok::Tensor;
      return t;
    }
    throw ParseError(pos_, std::string("unexpected character '") + c + "'");
  }

 private:
  Token lex_d(Token t) {
    ++pos_;  // 'd'
    if (peek() == 'x') {
      ++pos_;
      t.kind = Tok::Letter;
      t.grade = 1;
      t.number = index("generator index after 'dx'");
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const unsigned long order = std::stoul(digits());
      if (peek() != 'x') throw ParseError(pos_, "expected 'x' after 'd" + std::to_string(order) + "'");
      ++pos_;
      if (order == 1 || order == 2) {
        t.kind = Tok::Letter;
        t.grade = static_cast<int>(order);
        t.number = index("generator index");
        return t;
      }
      if (order == 0) throw ParseError(t.pos, "d0x is not a differential letter");
      throw ParseError(t.pos, "d^3 x^i = 0: letters of grade " + std::to_string(order) +
                                  " do not exist");
    }
    skip_ws();
    if (peek() == '(') {
      t.kind = Tok::DOp;
      return t;
    }
    throw ParseError(pos_, "expected 'x', '2x' or '(' after 'd'");
  }

  unsigned long index(const char* what) {
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError(pos_, std::string("expected ") + what);
    return std::stoul(digits());
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  // calc == nullptr: polynomial-only mode (no letters, no d, plain products).
  Parser(std::string_view src, const Calculus* calc, std::size_t n)
      : lexer_(src), calc_(calc), n_(n) {
    advance();
  }

  Tensor parse() {
    Tensor t = expr();
    if (cur_.kind != Tok::End) throw ParseError(cur_.pos, "expected '+', '-', '*' or end of input");
    return t;
  }

 private:
  void advance() { cur_ = lexer_.next(); }

  bool starts_factor(Tok k) const {
    switch (k) {
      case Tok::Rational:
      case Tok::Q:
      case Tok::QInt:
      case Tok::Gen:
      case Tok::Letter:
      case Tok::DOp:
      case Tok::LParen:
        return true;
      default:
        return false;
    }
  }

  Tensor mul(const Tensor& a, const Tensor& b) const {
    if (calc_) return multiply(calc_->xi(), a, b);
    Poly pa = a.is_zero() ? Poly() : a.terms().begin()->second;
    Poly pb = b.is_zero() ? Poly() : b.terms().begin()->second;
    return Tensor(pa * pb);
  }

  Tensor expr() {
    Tensor acc;
    if (cur_.kind == Tok::Minus) {
      advance();
      acc = -term();
    } else {
      if (cur_.kind == Tok::Plus) advance();
      acc = term();
    }
    while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
      const bool minus = cur_.kind == Tok::Minus;
      advance();
      Tensor t = term();
      if (minus) {
        acc -= t;
      } else {
        acc += t;
      }
    }
    return acc;
  }

  Tensor term() {
    Tensor acc = factor();
    for (;;) {
      if (cur_.kind == Tok::Star || cur_.kind == Tok::Tensor) {
        advance();
        acc = mul(acc, factor());
      } else if (starts_factor(cur_.kind)) {
        acc = mul(acc, factor());
      } else {
        return acc;
      }
    }
  }

  Gen checked_index(const Token& t) const {
    if (t.number < 1 || t.number > n_)
      throw ParseError(t.pos, "unknown generator index " + std::to_string(t.number) +
                                  " (expected 1.." + std::to_string(n_) + ")");
    return static_cast<Gen>(t.number - 1);
  }

  Tensor factor() {
    const Token t = cur_;
    switch (t.kind) {
      case Tok::Minus:
        advance();
        return -factor();
      case Tok::Rational:
        advance();
        return Tensor(Poly(Cyc(t.rational)));
      case Tok::Q:
        advance();
        return Tensor(Poly(Cyc::q()));
      case Tok::QInt:
        advance();
        return Tensor(Poly(q_integer(t.number)));
      case Tok::Gen:
        advance();
        return Tensor(Poly::generator(checked_index(t)));
      case Tok::Letter:
        if (!calc_) throw ParseError(t.pos, "differential letters are not allowed here");
        advance();
        return Tensor::letter(t.grade, checked_index(t));
      case Tok::DOp: {
        if (!calc_) throw ParseError(t.pos, "d(...) is not allowed here");
        advance();
        expect(Tok::LParen, "'('");
        Tensor inner = expr();
        expect(Tok::RParen, "')'");
        if (inner.max_grade() != 0)
          throw ParseError(t.pos, "d(...) applies only to algebra elements; enter forms with letters");
        return diff(*calc_, inner);
      }
      case Tok::LParen: {
        advance();
        Tensor inner = expr();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::End:
        throw ParseError(t.pos, "unexpected end of input; expected a scalar, generator, letter, d(...) or '('");
      default:
        throw ParseError(t.pos, "expected a scalar, generator, letter, d(...) or '('");
    }
  }

  void expect(Tok k, const char* what) {
    if (cur_.kind != k) throw ParseError(cur_.pos, std::string("expected ") + what);
    advance();
  }

  Lexer lexer_;
  const Calculus* calc_;
  std::size_t n_;
  Token cur_;
};

}  // namespace

Tensor parse_expression(std::string_view src, const Calculus& calc) {
  return Parser(src, &calc, calc.rank()).parse();
}

Poly parse_algebra_element(std::string_view src, const Calculus& calc) {
  Tensor t = parse_expression(src, calc);
  if (t.max_grade() != 0) throw ParseError(0, "expected an algebra element (grade 0)");
  return t.is_zero() ? Poly() : t.terms().begin()->second;
}

Poly parse_polynomial(std::string_view src, std::size_t n) {
  Tensor t = Parser(src, nullptr, n).parse();
  return t.is_zero() ? Poly() : t.terms().begin()->second;
}

}  // namespace qdga
