from math import comb

import pytest

from twosquares.ntcore import is_sum_of_two_squares, verify_rep
from twosquares.pell import (
    GEN3_SEED,
    MalformedSource,
    PellKind,
    PellSolution,
    ap_certificate,
    ap_x_values,
    gen_pell_solutions,
    iter_ap_certificates,
    iter_quint_certificates,
    neg_pell_solutions,
    quint_certificate,
    quint_x_values,
)


def surd_power(a, b, d, e):
    """(a + b*sqrt(d))**e by the binomial theorem, as (rational, surd) parts."""
    rat = sum(comb(e, j) * a ** (e - j) * b**j * d ** (j // 2) for j in range(0, e + 1, 2))
    sur = sum(comb(e, j) * a ** (e - j) * b**j * d ** (j // 2) for j in range(1, e + 1, 2))
    return rat, sur


def test_neg_pell_first_solutions():
    sols = neg_pell_solutions(3)
    assert [(s.alpha, s.beta, s.index) for s in sols] == [(1, 1, 1), (5, 7, 2), (29, 41, 3)]
    assert all(s.kind is PellKind.NEG2 for s in sols)


def test_neg_pell_against_binomial_expansion():
    for s in neg_pell_solutions(30):
        beta, alpha = surd_power(1, 1, 2, 2 * s.index - 1)
        assert (s.alpha, s.beta) == (alpha, beta)


def test_gen_pell_first_solutions():
    assert GEN3_SEED == (3, 3)
    assert 3**2 - 3 * 3**2 == -18
    sols = gen_pell_solutions(2)
    assert [(s.alpha, s.beta) for s in sols] == [(9, 15), (33, 57)]
    assert 57**2 - 3 * 33**2 == -18


def test_gen_pell_against_binomial_expansion():
    for s in gen_pell_solutions(30):
        rat, sur = surd_power(2, 1, 3, s.index)
        beta = 3 * rat + 9 * sur
        alpha = 3 * rat + 3 * sur
        assert (s.alpha, s.beta) == (alpha, beta)


def test_pell_equations_hold():
    assert all(s.beta**2 - 2 * s.alpha**2 == -1 for s in neg_pell_solutions(60))
    assert all(s.beta**2 - 3 * s.alpha**2 == -18 for s in gen_pell_solutions(60))


def test_solution_type_rejects_non_solution():
    with pytest.raises(MalformedSource):
        PellSolution(2, 3, 1, PellKind.NEG2)


def test_step_identities():
    neg = neg_pell_solutions(23)
    for m in range(20):
        assert neg[m + 3].alpha == 99 * neg[m].alpha + 70 * neg[m].beta
    gen = gen_pell_solutions(38)
    for m in range(20):
        assert gen[m + 18].alpha == 9863382151 * gen[m].alpha + 5694626340 * gen[m].beta
    assert 9863382151 % 37 == 36 and 5694626340 % 37 == 0


def test_quint_x_values():
    got = quint_x_values(6)
    assert [x for x, _ in got] == [0, 420, 14280, 16479540, 559819260, 646030941360]
    assert [s.alpha for _, s in got] == [1, 29, 169, 5741, 33461, 1136689]
    assert [s.beta for _, s in got[2:]] == [239, 8119, 47321, 1607521]
    assert all(x % 5 == 0 for x, _ in quint_x_values(40))


def test_neg2_filter_indices():
    passing = [s.index for s in neg_pell_solutions(60) if s.alpha**2 % 5 == 1]
    assert passing == [i for i in range(1, 61) if i % 3 in (0, 1)]


def test_gen3_filter_indices_observed():
    # Indices 1 (mod 18) are the proven class; 16 (mod 18) passes as well.
    passing = [s.index for s in gen_pell_solutions(60) if s.alpha**2 % 37 == 7]
    assert passing == [1, 16, 19, 34, 37, 52, 55]


def test_ap_x_values():
    xs = [x for x, _ in ap_x_values(3, only_1_mod_18=True)]
    assert xs == [37, 15171049214426911911337, 5903741433259753755776680512005460787523437]
    every = ap_x_values(5)
    assert [s.index for _, s in every] == [1, 16, 19, 34, 37]
    assert every[1][0] == 5614748812888429537
    assert all(x % 37 == 0 for x, _ in ap_x_values(7))
    assert [x for x, _ in every] == sorted(x for x, _ in every)


def test_quint_certificate_420():
    x, src = quint_x_values(2)[1]
    cert = quint_certificate(x, src)
    assert cert.n == 176400
    assert [t.rep.as_tuple() for t in cert.terms] == [
        (252, 336), (1, 420), (29, 419), (2, 420), (41, 418)]
    assert cert.all_nonzero
    assert all(is_sum_of_two_squares(v) for v in cert.values)


def test_quint_certificate_rejects_bad_input():
    x0, s0 = quint_x_values(1)[0]
    with pytest.raises(MalformedSource):
        quint_certificate(x0, s0)
    x, src = quint_x_values(2)[1]
    with pytest.raises(MalformedSource):
        quint_certificate(x + 5, src)
    with pytest.raises(MalformedSource):
        quint_certificate(x, neg_pell_solutions(1)[0])


def test_ap_certificate_37():
    x, src = ap_x_values(1)[0]
    cert = ap_certificate(x, src)
    assert [(t.value, t.rep.as_tuple()) for t in cert.terms] == [
        (1369, (12, 35)), (1373, (2, 37)), (1377, (9, 36)), (1381, (15, 34)), (1385, (4, 37))]
    assert all(is_sum_of_two_squares(v) for v in cert.values)


def test_ap_certificate_rejects_bad_input():
    x, src = ap_x_values(1)[0]
    with pytest.raises(MalformedSource):
        ap_certificate(x + 37, src)
    qx, qsrc = quint_x_values(2)[1]
    with pytest.raises(MalformedSource):
        ap_certificate(qx, qsrc)


def test_generated_certificates_sound():
    quints = [c for _, c in zip(range(12), iter_quint_certificates())]
    aps = [c for _, c in zip(range(8), iter_ap_certificates())]
    for cert in quints + aps:
        assert cert.verify() and cert.all_nonzero
        assert all(verify_rep(t.rep) for t in cert.terms)
    assert [c.n for c in quints] == sorted(c.n for c in quints)
    assert [c.n for c in aps] == sorted(c.n for c in aps)
    small = [c for c in quints + aps if c.params["x"] <= 10**4]
    assert small
    for cert in small:
        assert all(is_sum_of_two_squares(v) for v in cert.values)


def test_count_validation():
    with pytest.raises(ValueError):
        neg_pell_solutions(0)
    with pytest.raises(ValueError):
        ap_x_values(0)
