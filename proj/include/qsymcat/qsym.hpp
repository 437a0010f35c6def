// Monomial and fundamental quasi-symmetric polynomials in a window.
#pragma once

#include "qsymcat/composition.hpp"
#include "qsymcat/polynomial.hpp"

#include <utility>
#include <vector>

namespace qsymcat {

/// M_alpha(x1..xn) = sum over i1 < ... < ik of x_{i1}^{a1} ... x_{ik}^{ak}.
/// M of the empty composition is 1; zero when length(alpha) > n.
Polynomial monomial_qsym(const Composition& alpha, int window);

/// F_alpha = sum of M_beta over all refinements beta of alpha (memoized).
Polynomial fundamental_qsym(const Composition& alpha, int window);

/// Independent construction of F_alpha: sum x_{j1}...x_{jd} over weakly
/// increasing index chains j1 <= ... <= jd with a strict rise at every
/// descent of alpha.  Used as a cross-check against fundamental_qsym.
Polynomial fundamental_qsym_by_chains(const Composition& alpha, int window);

/// Exact window-n check of the defining recurrence of F:
///   a1 > 1:  F_a = x1*F_{(a1-1,a2,...)} + F_a(x2..xn)
///   a1 = 1:  F_a = x1*F_{(a2,...)}(x2..xn) + F_a(x2..xn)
bool check_f_recurrence(const Composition& alpha, int window);

/// The F-to-M change-of-basis row: coefficient 1 on each refinement.
std::vector<std::pair<Composition, int>> expand_in_M(const Composition& alpha);

}  // namespace qsymcat
