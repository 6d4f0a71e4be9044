#pragma once

#include "qdga/calculus.hpp"
#include "qdga/tensor.hpp"

namespace qdga {

/// The grade-one operator d on canonical elements. On a monomial
/// d^{a_1}x^{i_1} ... d^{a_m}x^{i_m} r it raises each letter in turn with
/// weight q^(a_1 + ... + a_{j-1}), dropping letters already at grade 2, and
/// appends q^(a_1 + ... + a_m) (...) dx^s D_s(r).
Tensor diff(const Calculus& calc, const Tensor& w);

/// d applied `times` >= 1 times.
Tensor diff_n(const Calculus& calc, const Tensor& w, int times);

// Closed-form expansions of d, d^2, d^3 on an algebra element written
// directly in terms of the partial derivatives. They do not go through diff
// and serve as the second route for cross-checks.

/// dx^l D_l(u)
Tensor d_expansion(const Calculus& calc, const Poly& u);
/// d^2x^l D_l(u) + q dx^l dx^m D_m D_l(u)
Tensor d2_expansion(const Calculus& calc, const Poly& u);
/// q[2]_q d^2x^l dx^m D_m D_l(u) + q^2 dx^l d^2x^m D_m D_l(u)
///   + dx^l dx^m dx^p D_p D_m D_l(u)
Tensor d3_expansion(const Calculus& calc, const Poly& u);

Tensor d_xi(const Calculus& calc, Gen i, Gen j, Gen k);
Tensor d2_xi(const Calculus& calc, Gen i, Gen j, Gen k);
Tensor d3_xi(const Calculus& calc, Gen i, Gen j, Gen k);

}  // namespace qdga
