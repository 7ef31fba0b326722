#pragma once

// Named polynomial classes built from the Chern roots alpha, beta:
//
//   b_k = (-1)^k h_k(alpha, beta)        degree 2k
//   d_k = (-1)^k h_k(alpha^2, beta^2)    degree 4k
//
// where h_k is the complete homogeneous symmetric polynomial, together with
// the integers a_{g,mu} of the expansion
//
//   (1 + x)^g = 1 + x^g + sum_{mu=1}^{[g/2]} a_{g,mu} x^mu (1 + x)^(g - 2 mu).

#include "chowkit/arith.hpp"

namespace chowkit {

/// Closed form in c1, c2. Zero for k < 0 (empty root sum).
GradedPoly b_class(int k);
/// Closed form in c1, c2. Zero for k < 0.
GradedPoly d_class(int k);

/// The same classes computed from their root sums through sym_to_c.
GradedPoly b_class_from_roots(int k);
GradedPoly d_class_from_roots(int k);

/// Sign-normalised ("barred") variants (-1)^k b_k and (-1)^k d_k, i.e. the
/// plain complete symmetric sums. They are never substituted for b_k, d_k.
GradedPoly b_bar(int k);
GradedPoly d_bar(int k);

/// a_{g,mu} for g >= 1 and -1 <= mu <= floor(g/2): -1 at mu = 0, 0 at
/// mu = -1. Throws std::invalid_argument outside that range.
Int expansion_coefficient(int g, int mu);

/// (1 + x)^n - (1 + x^n).
UniPoly binomial_defect(int n);

/// sum_{mu=0}^h (-1)^mu c2^(h - mu) b_{2 mu} == d_h, exactly in Z[c1, c2].
bool check_alternating_b_sum(int h);

/// (1 + x)^g == 1 + x^g + sum a_{g,mu} x^mu (1 + x)^(g - 2 mu), coefficientwise.
bool check_binomial_expansion(int g);

}  // namespace chowkit
