#include "qdga/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace qdga {

Cyc& Cyc::operator*=(const Cyc& o) {
  // (a + bq)(c + dq) = ac + (ad + bc)q + bd q^2, with q^2 = -1 - q.
  mpq_class bd = b_ * o.b_;
  mpq_class a = a_ * o.a_ - bd;
  mpq_class b = a_ * o.b_ + b_ * o.a_ - bd;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

mpq_class Cyc::norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }

Cyc Cyc::conjugate() const { return Cyc(a_ - b_, -b_); }

Cyc Cyc::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in Q(q)");
  mpq_class n = norm();
  Cyc c = conjugate();
  return Cyc(c.a_ / n, c.b_ / n);
}

std::string Cyc::to_string() const {
  if (is_zero()) return "0";
  if (sgn(b_) == 0) return a_.get_str();
  std::string qs;
  if (b_ == 1) {
    qs = "q";
  } else if (b_ == -1) {
    qs = "-q";
  } else {
    qs = b_.get_str() + "*q";
  }
  if (sgn(a_) == 0) return qs;
  if (qs.front() == '-') return a_.get_str() + " - " + qs.substr(1);
  return a_.get_str() + " + " + qs;
}

namespace {

class ScalarLexer {
 public:
  explicit ScalarLexer(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool peek_digit() {
    skip_ws();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }
  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("scalar parse error at offset " + std::to_string(pos_) +
                                ": " + what + " in \"" + std::string(s_) + "\"");
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

mpq_class parse_rational(ScalarLexer& lx) {
  mpq_class r(lx.digits());
  if (lx.accept('/')) {
    mpz_class den(lx.digits());
    if (den == 0) lx.fail("zero denominator");
    r = mpq_class(r.get_num(), den);
    r.canonicalize();
  }
  return r;
}

// One signed summand: rational, rational*q, q, or [n]_q.
Cyc parse_summand(ScalarLexer& lx, bool negate) {
  Cyc v;
  if (lx.accept('[')) {
    unsigned long n = std::stoul(lx.digits());
    if (!lx.accept(']') || !lx.accept('_') || !lx.accept('q')) lx.fail("expected ']_q'");
    v = q_integer(n);
  } else if (lx.accept('q')) {
    v = Cyc::q();
  } else if (lx.peek_digit()) {
    mpq_class r = parse_rational(lx);
    if (lx.accept('*')) {
      if (!lx.accept('q')) lx.fail("expected 'q' after '*'");
      v = Cyc(0, r);
    } else {
      v = Cyc(r);
    }
  } else {
    lx.fail("expected a rational, 'q' or '[n]_q'");
  }
  return negate ? -v : v;
}

}  // namespace

Cyc Cyc::parse(std::string_view text) {
  ScalarLexer lx(text);
  if (lx.done()) lx.fail("empty scalar");
  Cyc total = parse_summand(lx, lx.accept('-'));
  while (!lx.done()) {
    if (lx.accept('+')) {
      total += parse_summand(lx, false);
    } else if (lx.accept('-')) {
      total += parse_summand(lx, true);
    } else {
      lx.fail("expected '+' or '-'");
    }
  }
  return total;
}

Cyc q_power(long k) {
  switch (((k % 3) + 3) % 3) {
    case 0:
      return Cyc(1);
    case 1:
      return Cyc::q();
    default:
      return Cyc(-1, -1);
  }
}

Cyc q_integer(unsigned long n) {
  // The partial sums cycle with period 3: 0, 1, 1 + q, 0, ...
  switch (n % 3) {
    case 0:
      return Cyc(0);
    case 1:
      return Cyc(1);
    default:
      return Cyc(1, 1);
  }
}

}  // namespace qdga
