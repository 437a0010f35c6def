// Graded slices of the quasi-symmetric ideal at each level, Hilbert
// functions of the quotient, normal forms, and the apolar pairing.
#pragma once

#include "qsymcat/composition.hpp"
#include "qsymcat/polynomial.hpp"
#include "qsymcat/rational.hpp"

#include <utility>
#include <vector>

namespace qsymcat {

/// Reduced echelon basis of one homogeneous degree of the ideal.
struct GradedSliceBasis {
    int window = 0;
    int level = 0;
    int degree = 0;
    std::vector<Polynomial> rows;   // monic, distinct pivots, echelon-reduced
    std::vector<Monomial> pivots;   // leading monomial of each row
    int rank() const { return static_cast<int>(rows.size()); }
};

/// All F_alpha in the window with 1 <= degree(alpha) <= d_max,
/// length(alpha) <= n, and alpha reaching the given level.  Ordered by
/// degree, then descending lexicographically on parts.
std::vector<std::pair<Composition, Polynomial>> level_generators(int e, int d_max, int n);

/// Echelon basis of span{ X^delta * F_alpha } in homogeneous degree d.
/// Cached; the returned reference stays valid for the process lifetime.
const GradedSliceBasis& ideal_slice(int n, int e, int d);

/// Reduce a homogeneous polynomial of the slice's degree against its rows.
Polynomial reduce_against(const GradedSliceBasis& basis, Polynomial p);

struct HilbertTable {
    int window = 0;
    int level = 0;
    std::vector<int> dims;  // quotient dimension per degree 0..d_max
    Int total() const;
};

/// Quotient dimensions: (# degree-d monomials) - rank(ideal_slice(n,e,d)).
HilbertTable hilbert_function(int n, int e, int d_max);

/// True iff every homogeneous component of P reduces to zero against the
/// ideal slice of its degree.
bool contains(const Polynomial& p, int n, int e);

/// Repeatedly cancels the cmp_lex-largest level-reaching monomial of P with
/// the matching G generator; the result is supported on e-Catalan monomials.
Polynomial normal_form(const Polynomial& p, int n, int e);

/// Apolar pairing <P,Q> = (P(d/dx) Q)(0); monomials are orthogonal with
/// <X^a, X^a> = prod a_i!.
Rat apolar_pair(const Polynomial& p, const Polynomial& q);

/// Dimension of the orthogonal complement of the degree-d ideal slice under
/// the apolar pairing, inside the space of degree-d forms.
int superharmonic_dim(int n, int e, int d);

/// Drop all cached slices (test isolation / memory control).
void clear_slice_cache();

}  // namespace qsymcat
