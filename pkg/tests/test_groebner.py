import itertools

import pytest

from gincomplex.corpus import golden_monomial_ideal, scroll
from gincomplex.errors import GincomplexError, ZeroPolynomialError
from gincomplex.groebner import (
    GroebnerBasis,
    MonomialIdeal,
    buchberger,
    hilbert_function_macaulay,
    hilbert_function_monomial,
    ideal_quotient,
    ideals_equal,
    is_groebner_basis,
    normal_form,
    s_polynomial,
    saturate_irrelevant,
)
from gincomplex.poly import GLEX, GREVLEX, Ideal, Polynomial, table_for
from gincomplex.rng import SplitMix64

P = 32003


def poly(terms, nvars=5, p=P, order=GLEX):
    return Polynomial.from_terms(terms, nvars, p, order)


def mono(e, nvars=None, p=P):
    return Polynomial.monomial(e, len(e) if nvars is None else nvars, p, GLEX)


# -- normal form ---------------------------------------------------------------

def test_normal_form_self_reduction():
    g = poly([((2, 0, 0, 0, 0), 1), ((0, 0, 1, 0, 1), -1)])
    assert normal_form(g, [g]).is_zero


def test_normal_form_one_step():
    f = poly([((2, 1, 0, 0, 0), 1)])
    g = poly([((2, 0, 0, 0, 0), 1), ((0, 0, 1, 0, 1), -1)])
    assert normal_form(f, [g]) == poly([((0, 1, 1, 0, 1), 1)])


def test_normal_form_no_division():
    f = mono((0, 0, 0, 1, 0))
    reducers = [mono((0, 1, 0, 0, 0)), mono((0, 0, 1, 0, 0))]
    assert normal_form(f, reducers) == f


# -- buchberger ------------------------------------------------------------------

def test_principal_ideal_basis():
    f = poly([((2, 0, 0, 0, 0), 3), ((0, 0, 1, 0, 1), 5)])
    gb = buchberger([f], GLEX)
    assert len(gb.elements) == 1
    assert gb.elements[0] == f.monic()


def test_linear_ideal_reduced_basis():
    f = poly([((0, 1, 0, 0, 0), 1), ((0, 0, 1, 0, 0), -1)])
    g = poly([((0, 0, 1, 0, 0), 1), ((0, 0, 0, 1, 0), -1)])
    gb = buchberger([f, g], GLEX)
    want = {
        (((0, 1, 0, 0, 0), 1), ((0, 0, 0, 1, 0), P - 1)),
        (((0, 0, 1, 0, 0), 1), ((0, 0, 0, 1, 0), P - 1)),
    }
    got = {tuple(e.terms()) for e in gb.elements}
    assert got == want
    assert gb.initial_ideal() == MonomialIdeal(
        [(0, 1, 0, 0, 0), (0, 0, 1, 0, 0)], 5)


def test_scroll_original_coordinates_initial_ideal():
    gb = buchberger(scroll(), GLEX)
    ini = gb.initial_ideal()
    for e in [(1, 0, 0, 1, 0), (1, 1, 0, 0, 0), (2, 0, 0, 0, 0)]:
        assert ini.contains_monomial(e)


def test_empty_generators_rejected():
    with pytest.raises(ZeroPolynomialError):
        buchberger([], GLEX)
    with pytest.raises(ZeroPolynomialError):
        buchberger([Polynomial.zero(5, P)], GLEX)


def _random_small_ideal(rng, nvars=3, ngens=3, maxdeg=3):
    tabs = {d: table_for(nvars, d, GLEX) for d in range(1, maxdeg + 1)}
    gens = []
    for _ in range(ngens):
        d = 1 + rng.below(maxdeg)
        tab = tabs[d]
        rows = {rng.below(len(tab)) for _ in range(1 + rng.below(3))}
        gens.append(Polynomial.from_terms(
            [(tuple(tab.exps[r]), rng.field_nonzero(P)) for r in rows],
            nvars, P, GLEX))
    return gens


def test_reduced_basis_invariants():
    rng = SplitMix64(77)
    for _ in range(50):
        gens = _random_small_ideal(rng)
        gb = buchberger(gens, GLEX)
        leads = [g.leading_monomial() for g in gb.elements]
        for g in gb.elements:
            assert g.leading_coeff() == 1
        for a, b in itertools.permutations(leads, 2):
            assert not all(x <= y for x, y in zip(a, b))
        for g in gb.elements:
            for e, _ in g.terms()[1:]:
                assert not any(all(x <= y for x, y in zip(lm, e))
                               for lm in leads)


def test_reduced_basis_unique_under_permutation():
    rng = SplitMix64(123)
    for _ in range(100):
        gens = _random_small_ideal(rng)
        gb1 = buchberger(gens, GLEX)
        perm = list(gens)
        for i in range(len(perm) - 1, 0, -1):
            j = rng.below(i + 1)
            perm[i], perm[j] = perm[j], perm[i]
        gb2 = buchberger(perm, GLEX)
        assert [tuple(e.terms()) for e in gb1.elements] == \
               [tuple(e.terms()) for e in gb2.elements]


def test_buchberger_criterion_self_check():
    gb = buchberger(scroll(), GLEX)
    assert is_groebner_basis(gb)
    rng = SplitMix64(11)
    for _ in range(20):
        gb = buchberger(_random_small_ideal(rng), GREVLEX)
        assert is_groebner_basis(gb)


def test_spolynomial_reduces_to_zero_in_basis():
    gb = buchberger(scroll(), GLEX)
    for f, g in itertools.combinations(gb.elements, 2):
        assert normal_form(s_polynomial(f, g), list(gb.elements)).is_zero


def test_normal_form_difference_lies_in_ideal():
    # f minus its remainder is a combination of the reducers
    rng = SplitMix64(314)
    for _ in range(25):
        gens = _random_small_ideal(rng)
        gb = buchberger(gens, GLEX)
        tab = table_for(3, 4, GLEX)
        rows = {rng.below(len(tab)) for _ in range(4)}
        f = Polynomial.from_terms(
            [(tuple(tab.exps[r]), rng.field_nonzero(P)) for r in rows],
            3, P, GLEX)
        remainder = normal_form(f, gens)
        difference = f - remainder
        if not difference.is_zero:
            assert gb.normal_form(difference).is_zero
        # no term of the remainder is divisible by a reducer lead
        leads = [g.leading_monomial() for g in gens]
        for e, _ in remainder.terms():
            assert not any(all(x <= y for x, y in zip(lm, e))
                           for lm in leads)


# -- initial ideals and Borel queries ---------------------------------------------

def test_initial_ideal_requires_reduced():
    f = poly([((2, 0, 0, 0, 0), 1)])
    fake = GroebnerBasis([f], GLEX, 5, P, reduced=False)
    with pytest.raises(GincomplexError):
        fake.initial_ideal()


def test_borel_fixed_examples():
    scroll_gin = MonomialIdeal(
        [(2, 0, 0, 0, 0), (1, 1, 0, 0, 0), (1, 0, 1, 0, 0),
         (0, 3, 0, 0, 0)], 5)
    assert scroll_gin.is_borel_fixed()
    assert not MonomialIdeal([(0, 1)], 2).is_borel_fixed()
    assert MonomialIdeal([(1, 0)], 2).is_borel_fixed()


def test_borel_regularity():
    scroll_gin = MonomialIdeal(
        [(2, 0, 0, 0, 0), (1, 1, 0, 0, 0), (1, 0, 1, 0, 0),
         (0, 3, 0, 0, 0)], 5)
    assert scroll_gin.regularity() == 3
    assert MonomialIdeal([(1, 0)], 2).regularity() == 1
    assert golden_monomial_ideal("ci23").regularity() == 8
    with pytest.raises(GincomplexError):
        MonomialIdeal([(0, 1)], 2).regularity()


def _brute_force_standard_count(gens, nvars, m):
    count = 0
    for e in itertools.product(range(m + 1), repeat=nvars):
        if sum(e) != m:
            continue
        if not any(all(g[i] <= e[i] for i in range(nvars)) for g in gens):
            count += 1
    return count


def test_hilbert_function_monomial():
    zero = MonomialIdeal([], 5)
    assert zero.hilbert_function(2) == 15
    scroll_gin = MonomialIdeal(
        [(2, 0, 0, 0, 0), (1, 1, 0, 0, 0), (1, 0, 1, 0, 0),
         (0, 3, 0, 0, 0)], 5)
    assert scroll_gin.hilbert_function(1) == 5
    for m in range(9):
        assert scroll_gin.hilbert_function(m) == _brute_force_standard_count(
            scroll_gin.gens, 5, m)


def test_hilbert_function_macaulay():
    q = poly([((2, 0, 0, 0, 0), 1), ((0, 1, 1, 0, 0), 3)])
    assert hilbert_function_macaulay(Ideal([q]), 2) == 14
    assert hilbert_function_macaulay(scroll(), 2) == 12
    for m in range(2):
        assert hilbert_function_macaulay(scroll(), m) == \
            len(table_for(5, m, GLEX))
    assert hilbert_function_macaulay(Ideal([], 4, P), 3) == 20


def test_macaulay_equals_monomial_count_on_scroll():
    gb = buchberger(scroll(), GLEX)
    ini = gb.initial_ideal()
    for m in range(9):
        assert hilbert_function_macaulay(scroll(), m) == \
            ini.hilbert_function(m)


def test_macaulay_equals_monomial_count_random_monomial_ideals():
    # on a monomial ideal the matrix-rank route and the standard-monomial
    # count must coincide degree by degree
    rng = SplitMix64(2718)
    for _ in range(50):
        nvars = 3 + rng.below(2)
        gens = {tuple(tab_row)
                for tab_row in (_random_exponent(rng, nvars, 1 + rng.below(4))
                                for _ in range(1 + rng.below(4)))}
        mono_ideal = MonomialIdeal(gens, nvars)
        as_polys = Ideal([mono(g, p=P) for g in gens], nvars, P)
        for m in range(7):
            assert hilbert_function_macaulay(as_polys, m) == \
                mono_ideal.hilbert_function(m)


def _random_exponent(rng, nvars, degree):
    e = [0] * nvars
    for _ in range(degree):
        e[rng.below(nvars)] += 1
    return tuple(e)


# -- colon and saturation -----------------------------------------------------------

def test_colon_monomial():
    ideal = Ideal([mono((1, 1, 0, 0))], 4, P)
    out = ideal_quotient(ideal, mono((1, 0, 0, 0)))
    assert ideals_equal(out, Ideal([mono((0, 1, 0, 0))], 4, P))


def test_colon_by_unit_is_identity():
    ideal = Ideal([mono((1, 1, 0, 0))], 4, P)
    assert ideal_quotient(ideal, Polynomial.constant(1, 4, P)) is ideal


def test_colon_contains_original():
    rng = SplitMix64(8)
    gens = _random_small_ideal(rng, nvars=3, ngens=2, maxdeg=2)
    ideal = Ideal(gens, 3, P)
    out = ideal_quotient(ideal, mono((1, 0, 0)))
    gb = buchberger(out, GREVLEX)
    for g in ideal.generators:
        assert gb.normal_form(g).is_zero


def test_saturate_variable_times_maximal_ideal():
    gens = [mono(e, p=P) for e in
            [(2, 0, 0, 0), (1, 1, 0, 0), (1, 0, 1, 0), (1, 0, 0, 1)]]
    sat = saturate_irrelevant(Ideal(gens, 4, P))
    assert ideals_equal(sat, Ideal([mono((1, 0, 0, 0))], 4, P))


def test_saturation_idempotent():
    gens = [mono(e, p=P) for e in
            [(2, 0, 0, 0), (1, 1, 0, 0), (1, 0, 1, 0), (1, 0, 0, 1)]]
    once = saturate_irrelevant(Ideal(gens, 4, P))
    twice = saturate_irrelevant(once)
    assert ideals_equal(once, twice)
