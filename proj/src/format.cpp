#include "qdga/format.hpp"

#include <stdexcept>
#include <tuple>
#include <vector>

namespace qdga {

OutputFormat parse_format(const std::string& name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "latex") return OutputFormat::Latex;
  if (name == "json") return OutputFormat::Json;
  throw std::invalid_argument("unknown output format '" + name + "' (text|latex|json)");
}

namespace {

// Flattened monomial: scalar · d-word · word.
struct Mono {
  const DWord* dword;
  const Word* word;
  const Cyc* coeff;
};

std::vector<Mono> flatten(const Tensor& t) {
  std::vector<Mono> out;
  for (const auto& [w, c] : t.terms())
    for (const auto& [x, s] : c.terms()) out.push_back({&w, &x, &s});
  return out;
}

bool is_negative(const Cyc& c) {
  int sa = sgn(c.rational_part());
  return sa < 0 || (sa == 0 && sgn(c.q_part()) < 0);
}

bool is_compound(const Cyc& c) { return sgn(c.rational_part()) != 0 && sgn(c.q_part()) != 0; }

template <class BodyFn, class ScalarFn>
std::string join_monomials(const std::vector<Mono>& monos, BodyFn body_of, ScalarFn scalar_of,
                           const char* times, const char* open, const char* close) {
  if (monos.empty()) return "0";
  std::string out;
  bool first = true;
  for (const Mono& m : monos) {
    Cyc c = *m.coeff;
    const bool neg = is_negative(c);
    if (neg) c = -c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    const std::string body = body_of(m);
    if (body.empty()) {
      out += is_compound(c) && (monos.size() > 1 || neg) ? open + scalar_of(c) + close : scalar_of(c);
    } else if (c.is_one()) {
      out += body;
    } else if (is_compound(c)) {
      out += open + scalar_of(c) + close + times + body;
    } else {
      out += scalar_of(c) + times + body;
    }
  }
  return out;
}

std::string text_letter(const DLetter& l) {
  return (l.grade == 2 ? "d2x" : "dx") + std::to_string(l.index + 1);
}

std::string latex_word(const Word& w) {
  std::string s;
  for (Gen g : w) s += "x^{" + std::to_string(g + 1) + "}";
  return s;
}

std::string latex_dword(const DWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += "\\otimes ";
    s += (w[i].grade == 2 ? "d^{2}x^{" : "dx^{") + std::to_string(w[i].index + 1) + "}";
  }
  return s;
}

std::string latex_rational(const mpq_class& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  std::string sign = sgn(r) < 0 ? "-" : "";
  mpz_class num = abs(r.get_num());
  return sign + "\\frac{" + num.get_str() + "}{" + r.get_den().get_str() + "}";
}

}  // namespace

std::string to_text(const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += "*";
    s += "x" + std::to_string(w[i] + 1);
  }
  return s;
}

std::string to_text(const DWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += " (*) ";
    s += text_letter(w[i]);
  }
  return s;
}

std::string to_text(const Tensor& t) {
  auto body = [](const Mono& m) {
    std::string d = to_text(*m.dword);
    std::string x = to_text(*m.word);
    if (d.empty()) return x;
    if (x.empty()) return d;
    return d + " * " + x;
  };
  return join_monomials(flatten(t), body, [](const Cyc& c) { return c.to_string(); }, "*",
                        "(", ")");
}

std::string to_text(const Poly& u) { return to_text(Tensor(u)); }

std::string to_latex(const Cyc& c) {
  if (c.is_zero()) return "0";
  const mpq_class& a = c.rational_part();
  const mpq_class& b = c.q_part();
  if (sgn(b) == 0) return latex_rational(a);
  std::string qs;
  if (b == 1) {
    qs = "q";
  } else if (b == -1) {
    qs = "-q";
  } else {
    qs = latex_rational(b) + "q";
  }
  if (sgn(a) == 0) return qs;
  if (qs.front() == '-') return latex_rational(a) + " - " + qs.substr(1);
  return latex_rational(a) + " + " + qs;
}

std::string to_latex(const Tensor& t) {
  auto body = [](const Mono& m) {
    std::string d = latex_dword(*m.dword);
    std::string x = latex_word(*m.word);
    if (d.empty()) return x;
    if (x.empty()) return d;
    return d + "\\," + x;
  };
  return join_monomials(flatten(t), body, [](const Cyc& c) { return to_latex(c); }, "\\,",
                        "(", ")");
}

std::string to_latex(const Poly& u) { return to_latex(Tensor(u)); }

nlohmann::json to_json(const Tensor& t) {
  nlohmann::json terms = nlohmann::json::array();
  for (const Mono& m : flatten(t))
    terms.push_back({{"dword", to_text(*m.dword)},
                     {"word", to_text(*m.word)},
                     {"coeff", m.coeff->to_string()}});
  return {{"text", to_text(t)}, {"terms", terms}};
}

nlohmann::json to_json(const WitnessTerm& term) {
  auto mono = [](const DWord& d, const Word& w) {
    return to_text(Tensor::monomial(d, Poly::monomial(w)));
  };
  nlohmann::json j{{"left", mono(term.left_dword, term.left_word)},
                   {"family", family_name(term.generator.family)},
                   {"i", term.generator.i + 1},
                   {"j", term.generator.j + 1},
                   {"right", mono(term.right_dword, term.right_word)},
                   {"coefficient", term.coefficient.to_string()}};
  if (term.generator.family == Family::Rel3) j["k"] = term.generator.k + 1;
  return j;
}

nlohmann::json to_json(const Witness& w) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& t : w.terms) arr.push_back(to_json(t));
  return arr;
}

nlohmann::json to_json(const MembershipVerdict& v) {
  nlohmann::json j{{"status", status_name(v.status)},
                   {"grade_bound", v.bounds.grade_bound},
                   {"word_bound", v.bounds.word_bound},
                   {"spanning_size", v.spanning_size}};
  if (v.witness) j["witness"] = to_json(*v.witness);
  return j;
}

std::string render(const Tensor& t, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::Text:
      return to_text(t);
    case OutputFormat::Latex:
      return to_latex(t);
    case OutputFormat::Json:
      return to_json(t).dump(2);
  }
  return to_text(t);
}

}  // namespace qdga
