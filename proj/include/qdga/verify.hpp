#pragma once

#include "qdga/config.hpp"
#include "qdga/ideal.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace qdga {

/// Raw checks need an exact zero residual in the tensor algebra; mod-ideal
/// checks need the residual certified as a member of I_q.
enum class Tier { Raw, ModIdeal };
enum class Outcome { Pass, Fail, Inconclusive };

const char* tier_name(Tier t);
const char* outcome_name(Outcome o);

struct CheckInstance {
  std::string label;
  Tier tier = Tier::ModIdeal;
  Outcome outcome = Outcome::Fail;
  Tensor residual;
  std::optional<MembershipVerdict> verdict;
  std::string note;

  bool raw_zero() const { return residual.is_zero(); }
};

struct VerificationReport {
  std::string check;
  std::string preset;
  std::uint64_t seed = 0;
  std::string inputs;
  std::vector<CheckInstance> instances;
  double seconds = 0.0;

  std::size_t count(Outcome o) const;
  bool has_failure() const { return count(Outcome::Fail) > 0; }
  bool all_passed() const { return count(Outcome::Pass) == instances.size(); }
};

/// Turns a residual into a verdict: raw tier demands zero; mod-ideal tier
/// asks the membership oracle and audits the returned witness.
CheckInstance judge(const Ideal& ideal, std::string label, Tensor residual, Tier tier,
                    const Bounds& bounds);

// --- single checks --------------------------------------------------------

/// d(ωθ) - d(ω)θ - q^n ω d(θ) for homogeneous ω of grade n. The residual must
/// vanish exactly when θ is an algebra element or ω has constant right
/// coefficients; otherwise it must lie in I_q.
CheckInstance check_q_leibniz(const Ideal& ideal, const Tensor& omega, const Tensor& theta,
                              const Bounds& bounds = {});

/// d^3(w) ∈ I_q.
CheckInstance check_d3(const Ideal& ideal, const Tensor& w, const Bounds& bounds = {});

/// The five congruences for v and output index j (the fourth one per k):
///   dv dx^j        ≡ q dx^k dξ(v)^j_k
///   dv d^2x^j      ≡ q^2 d^2x^k dξ(v)^j_k
///   d^2v dx^j      ≡ (q-1) d^2x^k dξ(v)^j_k + q^2 dx^k d^2ξ(v)^j_k
///   d^3ξ(v)^j_k    ≡ 0
///   d^2v d^2x^j    ≡ q d^2x^k d^2ξ(v)^j_k
std::vector<CheckInstance> check_proposition(const Ideal& ideal, const Poly& v, Gen j,
                                             const Bounds& bounds = {});

/// d^2(uv) - d^2(u)v - [2]_q du dv - u d^2(v) ∈ I_q.
CheckInstance check_d2_binomial(const Ideal& ideal, const Poly& u, const Poly& v,
                                const Bounds& bounds = {});

/// Raw identities d(rel3) = dx^l d^3(D_l ξ_k^{ij}) and
/// d(rel4) = -d^2x^k d^3ξ_k^{ij}, plus membership of d(g) for every generator
/// g attached to (i, j).
std::vector<CheckInstance> check_generator_diff(const Ideal& ideal, Gen i, Gen j,
                                                const Bounds& bounds = {});

/// d^2 u and d^3 u against their closed-form expansions, exactly.
std::vector<CheckInstance> check_iterates(const Calculus& calc, const Poly& u);

/// [3]_q = 0, q^3 = 1, q·q = -1 - q.
std::vector<CheckInstance> check_scalar_identities();

// --- suites ---------------------------------------------------------------

struct SuiteOptions {
  Bounds bounds;
  std::uint64_t seed = 20061;
  /// Exhaustive word length for algebra-element inputs.
  std::size_t word_length = 2;
  /// Seeded random algebra elements for the iterate identities.
  std::size_t random_elements = 20;
  std::size_t random_element_degree = 3;
  /// Seeded random mixed-grade forms (grade <= 3) for the d^3 suite.
  std::size_t random_forms = 4;
  unsigned jobs = 1;
};

const std::vector<std::string>& suite_names();

/// Runs one named suite ("scalar", "iterates", "generator-diff", "compat",
/// "d3", "leibniz", "proposition", "binomial"). Throws std::invalid_argument
/// on unknown names.
VerificationReport run_suite(const Session& session, const std::string& suite,
                             const SuiteOptions& options);

/// "all" expands to every suite in order.
std::vector<VerificationReport> run_suites(const Session& session, const std::string& suite,
                                           const SuiteOptions& options);

nlohmann::json to_json(const CheckInstance& inst);
nlohmann::json to_json(const VerificationReport& report, bool include_timing = false);
std::string to_text(const VerificationReport& report, bool include_timing = false);

// --- seeded samplers --------------------------------------------------------

Poly random_poly(std::mt19937_64& rng, std::size_t n, std::size_t max_degree,
                 std::size_t max_terms);
/// Sum of one or two monomials of distinct grades in 1..max_grade with right
/// coefficients of word degree <= coeff_degree.
Tensor random_form(std::mt19937_64& rng, std::size_t n, int max_grade, std::size_t coeff_degree);

}  // namespace qdga
