"""Quasi-symmetric quotient calculator: compositions, e-Catalan paths,
generator polynomials, ideal slices and verification sweeps."""

from ._qsymcat import (  # noqa: F401
    ParseError,
    Polynomial,
    PreconditionError,
    apolar_pair,
    check_f_recurrence,
    check_lattice,
    check_lm,
    check_shift_relation,
    composition_from_subset,
    contains,
    count_e_catalan,
    descent_set,
    enumerate_e_catalan,
    expand_in_m,
    factorize_for_recursion,
    fundamental_qsym,
    gfun,
    hilbert_function,
    is_e_catalan,
    m_remainder,
    monomial_qsym,
    normal_form,
    normal_form_monomial,
    parse_polynomial,
    reaches_level,
    reduce_by_gbasis,
    refinements,
    refines,
    render_path,
    s_polynomial,
    slice_rank,
    superharmonic_dim,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
