// S-polynomials, syzygy identities and division against the G family.
#pragma once

#include "qsymcat/composition.hpp"
#include "qsymcat/polynomial.hpp"

namespace qsymcat {

/// S(P,Q) = LC(Q)*M1*P - LC(P)*M2*Q with
/// lcm(LM(P),LM(Q)) = M1*LM(P) = M2*LM(Q).  Leading terms cancel.
Polynomial s_polynomial(const Polynomial& p, const Polynomial& q);

/// For a standard tail nu, checks
///   S(G_{gamma.a.nu}, G_{gamma.(a-1).nu}) == G_{gamma.0.a.nu}
/// exactly in window n (k = length(gamma)+1).  The right-hand index may be
/// one position longer than the window; it is then read as the truncated G.
bool check_syzygy_base(const GenComposition& gamma, int a, const Composition& nu, int window);

/// Outcome of one four-term syzygy resolution instance.  The
/// leading-monomial law LM(lhs) == x_l * LM(s_c) is asserted only when the
/// two branch leading terms cannot collide, i.e. when LM(s_b) is strictly
/// smaller than x_l * LM(s_c); `lm_asserted` records whether that side
/// condition held.  When the branch tops coincide they cancel (both pairs
/// are monic differences) and the law does not apply.
struct SyzygyRecursionReport {
    bool identity = false;     // the four-term resolution holds exactly
    bool lm_asserted = false;  // side condition held, so the LM law was checked
    bool lm_holds = false;     // LM law outcome when asserted
    bool passed() const { return identity && (!lm_asserted || lm_holds); }
};

/// For b > 0 and a standard tail mu, analyzes the four-term resolution
///   S(G_{gamma.a.pi.0.b.mu}, G_{gamma.(a-1).pi.0.b.mu})
///     == S(G_{gamma.a.pi.b.mu}, G_{gamma.(a-1).pi.b.mu})
///      - x_l * S(G_{gamma.a.pi.(b-1).mu}, G_{gamma.(a-1).pi.(b-1).mu})
/// with l = length(gamma.a.pi)+1 counted on the written parts, together
/// with the leading-monomial law LM(lhs) == x_l * LM(third S-polynomial).
SyzygyRecursionReport analyze_syzygy_recursion(const GenComposition& gamma, int a,
                                               const GenComposition& pi, int b,
                                               const Composition& mu, int window);

/// True iff the four-term resolution holds and, whenever its side condition
/// applies, the leading-monomial law holds as well.
bool check_syzygy_recursion(const GenComposition& gamma, int a, const GenComposition& pi,
                            int b, const Composition& mu, int window);

/// One instance of the lattice implication: if alpha reaches level e and
/// alpha <= rho componentwise (zero-padded), then rho reaches level e.
bool check_lattice(const GenComposition& alpha, const GenComposition& rho, int e);

/// The telescoping resolution through the componentwise-max index:
///   S(G_alpha, G_pi) == S(G_alpha, G_rho) + S(G_rho, G_pi)
/// where X^rho = lcm(X^alpha, X^pi).
bool check_buchberger_chain(const GenComposition& alpha, const GenComposition& pi, int window);

/// Leading-term division of P by {G_alpha : alpha reaches level e}: while
/// the leading monomial of the working polynomial reaches level e, cancel it
/// with the matching G; otherwise move it to the remainder.  Agrees with
/// normal_form but is coded independently.
Polynomial reduce_by_gbasis(const Polynomial& p, int n, int e);

}  // namespace qsymcat
