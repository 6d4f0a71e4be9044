#include "qdga/verify.hpp"

#include "qdga/differential.hpp"
#include "qdga/format.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace qdga {

const char* tier_name(Tier t) { return t == Tier::Raw ? "raw" : "mod-ideal"; }

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Pass:
      return "pass";
    case Outcome::Fail:
      return "fail";
    case Outcome::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

std::size_t VerificationReport::count(Outcome o) const {
  std::size_t c = 0;
  for (const auto& inst : instances) c += inst.outcome == o;
  return c;
}

namespace {

CheckInstance raw_instance(std::string label, Tensor residual) {
  CheckInstance inst;
  inst.label = std::move(label);
  inst.tier = Tier::Raw;
  inst.residual = std::move(residual);
  inst.outcome = inst.residual.is_zero() ? Outcome::Pass : Outcome::Fail;
  if (inst.outcome == Outcome::Fail) inst.note = "nonzero residual";
  return inst;
}

Tensor dx(Gen k) { return Tensor::letter(1, k); }
Tensor d2x(Gen k) { return Tensor::letter(2, k); }

std::string gen_text(Gen i) { return std::to_string(i + 1); }

}  // namespace

CheckInstance judge(const Ideal& ideal, std::string label, Tensor residual, Tier tier,
                    const Bounds& bounds) {
  if (tier == Tier::Raw || residual.is_zero()) {
    CheckInstance inst = raw_instance(std::move(label), std::move(residual));
    inst.tier = tier;
    return inst;
  }
  CheckInstance inst;
  inst.label = std::move(label);
  inst.tier = tier;
  inst.residual = std::move(residual);
  MembershipVerdict v = membership(ideal, inst.residual, bounds);
  switch (v.status) {
    case MembershipStatus::Member:
      if (v.witness && expand(ideal, *v.witness) == inst.residual) {
        inst.outcome = Outcome::Pass;
      } else {
        inst.outcome = Outcome::Fail;
        inst.note = "witness does not reproduce the residual";
      }
      break;
    case MembershipStatus::NotMemberAtBound:
      inst.outcome = Outcome::Fail;
      inst.note = "not a member at the given bounds";
      break;
    case MembershipStatus::BoundExceeded:
      inst.outcome = Outcome::Inconclusive;
      inst.note = "spanning set exceeds the size cap";
      break;
  }
  inst.verdict = std::move(v);
  return inst;
}

CheckInstance check_q_leibniz(const Ideal& ideal, const Tensor& omega, const Tensor& theta,
                              const Bounds& bounds) {
  const Calculus& calc = ideal.calculus();
  const XiHomomorphism& xi = ideal.xi();
  int n = 0;
  if (!omega.is_zero()) {
    auto g = omega.homogeneous_grade();
    if (!g) throw std::invalid_argument("check_q_leibniz: omega must be homogeneous");
    n = *g;
  }
  Tensor residual = diff(calc, multiply(xi, omega, theta)) - multiply(xi, diff(calc, omega), theta) -
                    q_power(n) * multiply(xi, omega, diff(calc, theta));
  bool constant_coeffs = true;
  for (const auto& [w, c] : omega.terms()) constant_coeffs = constant_coeffs && c.is_constant();
  const Tier tier = (theta.max_grade() == 0 || constant_coeffs) ? Tier::Raw : Tier::ModIdeal;
  return judge(ideal, "leibniz(" + to_text(omega) + ", " + to_text(theta) + ")", std::move(residual),
               tier, bounds);
}

CheckInstance check_d3(const Ideal& ideal, const Tensor& w, const Bounds& bounds) {
  return judge(ideal, "d3(" + to_text(w) + ")", diff_n(ideal.calculus(), w, 3), Tier::ModIdeal,
               bounds);
}

std::vector<CheckInstance> check_proposition(const Ideal& ideal, const Poly& v, Gen j,
                                             const Bounds& bounds) {
  const Calculus& calc = ideal.calculus();
  const XiHomomorphism& xi = ideal.xi();
  const std::size_t n = ideal.rank();
  const XiMatrix m = xi.apply(v);
  const Tensor tv(v);
  const Tensor dv = diff(calc, tv);
  const Tensor d2v = diff_n(calc, tv, 2);

  Tensor sum_d2x_dxi, sum_dx_dxi, sum_dx_d2xi, sum_d2x_d2xi;
  for (Gen k = 0; k < n; ++k) {
    const Tensor e(m.at(k, j));
    const Tensor de = diff(calc, e);
    const Tensor d2e = diff_n(calc, e, 2);
    sum_dx_dxi += multiply(xi, dx(k), de);
    sum_d2x_dxi += multiply(xi, d2x(k), de);
    sum_dx_d2xi += multiply(xi, dx(k), d2e);
    sum_d2x_d2xi += multiply(xi, d2x(k), d2e);
  }
  const Cyc q = Cyc::q();
  const std::string tag = to_text(v) + ", j=" + gen_text(j);

  std::vector<CheckInstance> out;
  out.push_back(judge(ideal, "prop-rel1(" + tag + ")",
                      multiply(xi, dv, dx(j)) - q * sum_dx_dxi, Tier::ModIdeal, bounds));
  out.push_back(judge(ideal, "prop-rel-2-2(" + tag + ")",
                      multiply(xi, dv, d2x(j)) - q * q * sum_d2x_dxi, Tier::ModIdeal, bounds));
  out.push_back(judge(ideal, "prop-rel2(" + tag + ")",
                      multiply(xi, d2v, dx(j)) - (q - Cyc(1)) * sum_d2x_dxi - q * q * sum_dx_d2xi,
                      Tier::ModIdeal, bounds));
  for (Gen k = 0; k < n; ++k)
    out.push_back(judge(ideal, "prop-rel3(" + tag + ", k=" + gen_text(k) + ")",
                        diff_n(calc, Tensor(m.at(k, j)), 3), Tier::ModIdeal, bounds));
  out.push_back(judge(ideal, "prop-rel4(" + tag + ")",
                      multiply(xi, d2v, d2x(j)) - q * sum_d2x_d2xi, Tier::ModIdeal, bounds));
  return out;
}

CheckInstance check_d2_binomial(const Ideal& ideal, const Poly& u, const Poly& v,
                                const Bounds& bounds) {
  const Calculus& calc = ideal.calculus();
  const XiHomomorphism& xi = ideal.xi();
  const Tensor tu(u), tv(v);
  Tensor residual = diff_n(calc, Tensor(u * v), 2) - diff_n(calc, tu, 2) * v -
                    q_integer(2) * multiply(xi, diff(calc, tu), diff(calc, tv)) -
                    left_multiply(xi, u, diff_n(calc, tv, 2));
  return judge(ideal, "binomial(" + to_text(u) + ", " + to_text(v) + ")", std::move(residual),
               Tier::ModIdeal, bounds);
}

std::vector<CheckInstance> check_generator_diff(const Ideal& ideal, Gen i, Gen j,
                                                const Bounds& bounds) {
  const Calculus& calc = ideal.calculus();
  const XiHomomorphism& xi = ideal.xi();
  const std::size_t n = ideal.rank();
  const std::string tag = gen_text(i) + "," + gen_text(j);
  std::vector<CheckInstance> out;

  for (Gen k = 0; k < n; ++k) {
    Tensor rhs;
    for (Gen l = 0; l < n; ++l)
      rhs += multiply(xi, dx(l), d3_expansion(calc, calc.partial(l, xi.entry(i, k, j))));
    const Tensor lhs = diff(calc, ideal.generator({Family::Rel3, i, j, k}));
    out.push_back(raw_instance("d(rel3)=dx^l d3(D_l xi)(" + tag + ", k=" + gen_text(k) + ")",
                               lhs - rhs));
  }
  {
    Tensor rhs;
    for (Gen k = 0; k < n; ++k) rhs -= multiply(xi, d2x(k), d3_expansion(calc, xi.entry(i, k, j)));
    const Tensor lhs = diff(calc, ideal.generator({Family::Rel4, i, j, 0}));
    out.push_back(raw_instance("d(rel4)=-d2x^k d3 xi(" + tag + ")", lhs - rhs));
  }
  for (const auto& [id, g] : ideal.ideal_generators(i, j))
    out.push_back(judge(ideal, "d(" + to_string(id) + ") in I", diff(calc, g), Tier::ModIdeal, bounds));
  return out;
}

std::vector<CheckInstance> check_iterates(const Calculus& calc, const Poly& u) {
  const XiHomomorphism& xi = calc.xi();
  const std::size_t n = calc.rank();
  const Tensor tu(u);
  Tensor d2 = calc.d2_tilde(u);
  for (Gen i = 0; i < n; ++i)
    for (Gen j = 0; j < n; ++j)
      d2 += Cyc::q() * multiply(xi, dx(i), dx(j), Tensor(calc.partial_chain({i, j}, u)));
  std::vector<CheckInstance> out;
  out.push_back(raw_instance("d2(" + to_text(u) + ")", diff_n(calc, tu, 2) - d2));
  out.push_back(raw_instance("d3(" + to_text(u) + ")", diff_n(calc, tu, 3) - d3_expansion(calc, u)));
  return out;
}

std::vector<CheckInstance> check_scalar_identities() {
  const Cyc q = Cyc::q();
  std::vector<CheckInstance> out;
  out.push_back(raw_instance("[3]_q = 0", Tensor(Poly(q_integer(3)))));
  out.push_back(raw_instance("q^3 = 1", Tensor(Poly(q * q * q - Cyc(1)))));
  out.push_back(raw_instance("q*q = -1 - q", Tensor(Poly(q * q - (Cyc(-1) - q)))));
  return out;
}

// --- samplers ----------------------------------------------------------------

Poly random_poly(std::mt19937_64& rng, std::size_t n, std::size_t max_degree, std::size_t max_terms) {
  std::uniform_int_distribution<std::size_t> terms(1, std::max<std::size_t>(1, max_terms));
  std::uniform_int_distribution<std::size_t> len(0, max_degree);
  std::uniform_int_distribution<int> letter(0, static_cast<int>(n) - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  Poly p;
  const std::size_t t = terms(rng);
  for (std::size_t s = 0; s < t; ++s) {
    Word w(len(rng));
    for (auto& g : w) g = static_cast<Gen>(letter(rng));
    const long a = coef(rng);
    const long b = coef(rng);
    p.add_term(w, Cyc(a, b));
  }
  return p;
}

Tensor random_form(std::mt19937_64& rng, std::size_t n, int max_grade, std::size_t coeff_degree) {
  std::uniform_int_distribution<int> grade(1, std::max(1, max_grade));
  std::uniform_int_distribution<int> letter(0, static_cast<int>(n) - 1);
  std::uniform_int_distribution<int> two(1, 2);
  Tensor out;
  const int first = grade(rng);
  int second = grade(rng);
  for (int g : {first, second}) {
    if (g == 0) continue;
    DWord w;
    int left = g;
    while (left > 0) {
      const int a = left == 1 ? 1 : two(rng);
      w.push_back(DLetter{static_cast<std::uint8_t>(a), static_cast<Gen>(letter(rng))});
      left -= a;
    }
    Poly c = random_poly(rng, n, coeff_degree, 1);
    if (c.is_zero()) c = Poly::one();
    out.add_term(w, c);
    if (second == first) break;
  }
  return out;
}

// --- suites ------------------------------------------------------------------

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"scalar",      "iterates", "generator-diff", "d3",
                                              "leibniz",     "proposition", "binomial"};
  return names;
}

namespace {

using Task = std::function<std::vector<CheckInstance>()>;

std::vector<CheckInstance> run_tasks(const std::vector<Task>& tasks, unsigned jobs) {
  std::vector<std::vector<CheckInstance>> results(tasks.size());
  if (jobs <= 1 || tasks.size() <= 1) {
    for (std::size_t t = 0; t < tasks.size(); ++t) results[t] = tasks[t]();
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(tasks.size());
    auto worker = [&] {
      for (std::size_t t; (t = next.fetch_add(1)) < tasks.size();) {
        try {
          results[t] = tasks[t]();
        } catch (...) {
          errors[t] = std::current_exception();
        }
      }
    };
    std::vector<std::thread> pool;
    const unsigned count = std::min<std::size_t>(jobs, tasks.size());
    for (unsigned w = 0; w < count; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  std::vector<CheckInstance> out;
  for (auto& r : results)
    for (auto& inst : r) out.push_back(std::move(inst));
  return out;
}

template <class F>
Task single(F f) {
  return [f] { return std::vector<CheckInstance>{f()}; };
}

std::vector<Poly> words_as_polys(std::size_t n, std::size_t max_len) {
  std::vector<Poly> out;
  for (const Word& w : FreeAlgebra(n).words_up_to(max_len)) out.push_back(Poly::monomial(w));
  return out;
}

}  // namespace

VerificationReport run_suite(const Session& session, const std::string& suite,
                             const SuiteOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const Ideal& ideal = *session.ideal;
  const Calculus& calc = *session.calculus;
  const std::size_t n = ideal.rank();
  const Bounds& bounds = options.bounds;
  std::mt19937_64 rng(options.seed);

  VerificationReport report;
  report.check = suite;
  report.preset = session.preset_label();
  report.seed = options.seed;
  std::vector<Task> tasks;
  std::ostringstream inputs;

  if (suite == "scalar") {
    inputs << "fixed identities";
    tasks.push_back([] { return check_scalar_identities(); });
  } else if (suite == "iterates") {
    inputs << options.random_elements << " seeded elements of word degree <= "
           << options.random_element_degree;
    for (std::size_t s = 0; s < options.random_elements; ++s) {
      Poly u = random_poly(rng, n, options.random_element_degree, 4);
      tasks.push_back([&calc, u] { return check_iterates(calc, u); });
    }
  } else if (suite == "generator-diff") {
    inputs << "all index pairs";
    for (Gen i = 0; i < n; ++i)
      for (Gen j = 0; j < n; ++j)
        tasks.push_back([&ideal, i, j, bounds] { return check_generator_diff(ideal, i, j, bounds); });
  } else if (suite == "d3") {
    inputs << "words of length <= " << options.word_length
           << ", single-letter forms with coefficient degree <= 1, " << options.random_forms
           << " seeded forms of grade <= 3";
    std::vector<Tensor> ws;
    for (const Poly& u : words_as_polys(n, options.word_length)) ws.emplace_back(u);
    for (int a : {1, 2})
      for (Gen i = 0; i < n; ++i)
        for (const Poly& u : words_as_polys(n, 1)) ws.push_back(Tensor::letter(a, i, u));
    for (std::size_t s = 0; s < options.random_forms; ++s) ws.push_back(random_form(rng, n, 3, 1));
    for (const Tensor& w : ws) tasks.push_back(single([&ideal, w, bounds] { return check_d3(ideal, w, bounds); }));
  } else if (suite == "leibniz") {
    inputs << "omega in {x^i, dx^i, d2x^i, dx^i dx^j}, theta in {x^j, dx^j x^k, d2x^j}";
    std::vector<Tensor> omegas, thetas;
    for (Gen i = 0; i < n; ++i) omegas.emplace_back(Poly::generator(i));
    for (Gen i = 0; i < n; ++i) omegas.push_back(dx(i));
    for (Gen i = 0; i < n; ++i) omegas.push_back(d2x(i));
    for (Gen i = 0; i < n; ++i)
      for (Gen j = 0; j < n; ++j) omegas.push_back(multiply(calc.xi(), dx(i), dx(j)));
    for (Gen j = 0; j < n; ++j) thetas.emplace_back(Poly::generator(j));
    for (Gen j = 0; j < n; ++j)
      for (Gen k = 0; k < n; ++k) thetas.push_back(Tensor::letter(1, j, Poly::generator(k)));
    for (Gen j = 0; j < n; ++j) thetas.push_back(d2x(j));
    for (const Tensor& w : omegas)
      for (const Tensor& t : thetas)
        tasks.push_back(single([&ideal, w, t, bounds] { return check_q_leibniz(ideal, w, t, bounds); }));
  } else if (suite == "proposition") {
    inputs << "v = words of length <= " << options.word_length << ", all j";
    for (const Poly& v : words_as_polys(n, options.word_length))
      for (Gen j = 0; j < n; ++j)
        tasks.push_back([&ideal, v, j, bounds] { return check_proposition(ideal, v, j, bounds); });
  } else if (suite == "binomial") {
    inputs << "u, v = words of length <= " << options.word_length;
    const auto ws = words_as_polys(n, options.word_length);
    for (const Poly& u : ws)
      for (const Poly& v : ws)
        tasks.push_back(single([&ideal, u, v, bounds] { return check_d2_binomial(ideal, u, v, bounds); }));
  } else {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }

  report.inputs = inputs.str();
  report.instances = run_tasks(tasks, options.jobs);
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<VerificationReport> run_suites(const Session& session, const std::string& suite,
                                           const SuiteOptions& options) {
  std::vector<VerificationReport> out;
  if (suite == "all") {
    for (const auto& name : suite_names()) out.push_back(run_suite(session, name, options));
  } else {
    out.push_back(run_suite(session, suite, options));
  }
  return out;
}

// --- serialization -------------------------------------------------------------

nlohmann::json to_json(const CheckInstance& inst) {
  nlohmann::json j{{"label", inst.label},
                   {"tier", tier_name(inst.tier)},
                   {"outcome", outcome_name(inst.outcome)},
                   {"raw_zero", inst.raw_zero()}};
  if (!inst.raw_zero()) j["residual"] = to_json(inst.residual);
  if (inst.verdict) j["verdict"] = to_json(*inst.verdict);
  if (!inst.note.empty()) j["note"] = inst.note;
  return j;
}

nlohmann::json to_json(const VerificationReport& report, bool include_timing) {
  nlohmann::json instances = nlohmann::json::array();
  for (const auto& inst : report.instances) instances.push_back(to_json(inst));
  nlohmann::json j{{"check", report.check},
                   {"preset", report.preset},
                   {"seed", report.seed},
                   {"inputs", report.inputs},
                   {"summary",
                    {{"total", report.instances.size()},
                     {"pass", report.count(Outcome::Pass)},
                     {"fail", report.count(Outcome::Fail)},
                     {"inconclusive", report.count(Outcome::Inconclusive)}}},
                   {"instances", std::move(instances)}};
  if (include_timing) j["seconds"] = report.seconds;
  return j;
}

std::string to_text(const VerificationReport& report, bool include_timing) {
  std::ostringstream os;
  os << "check " << report.check << "  preset " << report.preset << "  seed " << report.seed << "\n";
  os << "inputs: " << report.inputs << "\n";
  for (const auto& inst : report.instances) {
    os << "  " << outcome_name(inst.outcome) << "  [" << tier_name(inst.tier) << "] " << inst.label;
    if (inst.verdict && inst.verdict->witness)
      os << "  (witness: " << inst.verdict->witness->terms.size() << " terms)";
    os << "\n";
    if (inst.outcome != Outcome::Pass) {
      if (!inst.note.empty()) os << "      " << inst.note << "\n";
      os << "      residual: " << to_text(inst.residual) << "\n";
    }
  }
  os << "summary: " << report.count(Outcome::Pass) << " pass, " << report.count(Outcome::Fail)
     << " fail, " << report.count(Outcome::Inconclusive) << " inconclusive";
  if (include_timing) os << ", " << report.seconds << " s";
  os << "\n";
  return os.str();
}

}  // namespace qdga
