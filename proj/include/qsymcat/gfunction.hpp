// The recursive generator family G indexed by generalized compositions.
#pragma once

#include "qsymcat/composition.hpp"
#include "qsymcat/polynomial.hpp"

namespace qsymcat {

/// G indexed by alpha in window n.  Base case: alpha standard after
/// stripping gives F_alpha (empty gives 1).  Otherwise, factorizing the
/// stripped form as gamma.0.a.beta with k = length(gamma)+1:
///   G_alpha = G_{gamma.a.beta} - x_k * G_{gamma.(a-1).beta}.
/// Requires length(stripped alpha) <= n so the leading monomial X^alpha
/// is faithful in the window.  Memoized.
Polynomial gfun(const GenComposition& alpha, int window);

/// Same recursion with no length precondition: the window-n image of the
/// infinite-variable G, which may drop terms (even to zero) and carries no
/// leading-monomial guarantee once length(stripped alpha) > n.
Polynomial gfun_truncated(const GenComposition& alpha, int window);

/// True iff leading_term(gfun(alpha, n)) == (X^alpha, 1).
bool check_lm(const GenComposition& alpha, int window);

/// True iff gfun(0.rho, n+1) == shift_variables(gfun(rho, n)).
bool check_shift_relation(const GenComposition& rho, int window);

/// For alpha = b.rho with first part b > 0:
///   m_remainder(alpha, n) = gfun(alpha, n) - x1 * gfun((b-1).rho, n).
/// The result never involves x1.
Polynomial m_remainder(const GenComposition& alpha, int window);

/// Drop all memoized G data (test isolation / memory control).
void clear_gfun_cache();

}  // namespace qsymcat
