import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from goppabch.criterion import (MPolyRejected, SupportRejected, bch_locators, check_support,
                                derivative_construction, m_poly_check, quotient_residue,
                                ratios, weighted_construction)
from goppabch.field import build_field
from goppabch.goppa import build_code, goppa_spec, membership_congruence
from goppabch.linalg import null_space
from goppabch.poly import Poly, prime_poly

L1 = [1, 1, 1, 0, 0, 0, 0, 1, 1]
L2 = [1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 1, 1]


def supported_codeword_exists(code, positions):
    """Independent check: a codeword with support exactly ``positions``."""
    sub = code.parity[:, list(positions)]
    N = null_space(code.field, sub)
    for coeffs in itertools.product(range(code.q), repeat=N.shape[0]):
        v = np.zeros(len(positions), dtype=np.int64)
        for c, row in zip(coeffs, N):
            v = code.field.vadd(v, code.field.vmul(row, c))
        if np.count_nonzero(v) == len(positions):
            return True
    return False


def test_ratio_formula_by_hand(F9):
    G = Poly(F9, [F9.exp(2), 0, 1])
    elems = [1, 3, 4]
    R = ratios(G, elems)
    a = elems
    d = lambda j: F9.mul(*[F9.sub(a[j], a[k]) for k in range(3) if k != j])
    for j in range(2):
        assert R[j] == F9.mul(F9.div(G(a[j]), G(a[2])), F9.div(d(2), d(j)))


@given(st.data())
def test_criterion_matches_linear_algebra(data):
    ctx = build_field(3, 1, 2)
    G = Poly(ctx, [ctx.exp(data.draw(st.integers(0, 7))), data.draw(st.integers(0, 8)), 1])
    spec = goppa_spec(ctx, G)
    code = build_code(spec)
    pos = data.draw(st.lists(st.integers(0, spec.n - 1), min_size=3, max_size=3, unique=True))
    elems = [spec.support[i] for i in pos]
    try:
        w = check_support(G, elems, support=spec.support)
        accepted = True
        assert code.contains(w.codeword)
        assert membership_congruence(spec, w.codeword)
        assert w.weight == 3 and np.count_nonzero(w.codeword) == 3
        assert w.codeword[w.positions[-1]] == 1
    except SupportRejected as exc:
        accepted = False
        assert 1 <= exc.index <= 2
    assert accepted == supported_codeword_exists(code, pos)


def test_rejection_reports_first_failing_index(F9):
    G = Poly(F9, [F9.exp(2), 0, 1])
    with pytest.raises(SupportRejected) as info:
        check_support(G, [1, F9.prim, F9.exp(2)])
    assert info.value.index == 1


def test_input_validation(F9):
    G = Poly(F9, [1, 0, 1])
    with pytest.raises(ValueError):
        check_support(G, [3, 4])
    with pytest.raises(ValueError):
        ratios(G, [3, 3, 4])
    with pytest.raises(ValueError):
        check_support(G, [3, 4, 5], support=[3, 4])


@pytest.mark.parametrize("q,m,t", [(3, 2, 3), (5, 2, 3), (4, 2, 2), (7, 2, 5)])
def test_derivative_construction_all_ratios_one(q, m, t):
    p, s = {3: (3, 1), 4: (2, 2), 5: (5, 1), 7: (7, 1)}[q]
    ctx = build_field(p, s, m)
    lam = ctx.pow(ctx.prim, t + 1)
    F = Poly(ctx, [0, 1]) ** (t + 1) - (Poly(ctx, [1, 1]) ** (t + 1)).scale(lam)
    G, roots = derivative_construction(F)
    assert G.degree == t
    assert ratios(G, roots) == [1] * t
    spec = goppa_spec(ctx, G)
    w = check_support(G, roots, support=spec.support)
    assert build_code(spec).contains(w.codeword)


def test_derivative_construction_requires_split_and_coprime_degree(F9):
    with pytest.raises(ValueError):
        derivative_construction(Poly.from_roots(F9, [1, 2, 3]))  # degree 3 = p
    with pytest.raises(ValueError):
        derivative_construction(Poly(F9, [1, 0, 1]) * Poly(F9, [1, 1]))


def test_weighted_construction_ratios(F9):
    roots = [1, 3, 4, 7]
    F = Poly.from_roots(F9, roots)
    weights = [1, 2, 2, 1]
    G, rts = weighted_construction(F, weights)
    assert rts == sorted(roots)
    R = ratios(G, rts)
    # R_j = w_j / w_last
    assert R == [F9.div(w, weights[-1]) for w in weights[:-1]]
    with pytest.raises(ValueError):
        weighted_construction(F, [1, 2, F9.prim, 1])


@pytest.mark.parametrize("p,s,m,t", [(3, 1, 3, 2), (2, 2, 2, 3), (5, 1, 2, 4)])
def test_locator_identity_exhaustive_small(p, s, m, t):
    ctx = build_field(p, s, m)
    pool = [x for x in range(ctx.order) if x not in (0, 1)]
    for xs in itertools.islice(itertools.combinations(pool, t), 300):
        S, ok = bch_locators(ctx, xs)
        assert ok


def test_locators_reject_bad_input(F9):
    with pytest.raises(ValueError):
        bch_locators(F9, [1, 3])
    with pytest.raises(ValueError):
        bch_locators(F9, [3, 3])


def test_m_poly_binary_certificates():
    for L, m in ((L1, 8), (L2, 14)):
        ctx = build_field(2, 1, m)
        cert = m_poly_check(prime_poly(ctx, L), ctx)
        assert cert.w == 1
        assert cert.recurrence_path is True
        assert len(cert.roots) == len(L) - 1
        assert quotient_residue(prime_poly(ctx, L)) == Poly(ctx, [1])


@pytest.mark.parametrize("p", [3, 5])
def test_m_poly_pary_certificate(p):
    ctx = build_field(p, 1, p)
    L = prime_poly(ctx, [-1, -1] + [1] * (2 * p))
    cert = m_poly_check(L, ctx)
    assert cert.b == p - 2 and cert.w == p - 2
    assert cert.recurrence_path is True


def test_m_poly_clauses():
    F = build_field(2, 1, 4)
    with pytest.raises(MPolyRejected) as info:
        m_poly_check(prime_poly(F, L1), F)  # L1 does not split in F_16
    assert info.value.clause == "i"
    F9 = build_field(3, 1, 2)
    M = Poly.from_roots(F9, [F9.prim, F9.exp(3)])
    with pytest.raises(MPolyRejected) as info:
        m_poly_check(M, F9)
    assert info.value.clause == "ii"
    with pytest.raises(ValueError):
        m_poly_check(Poly(F9, [0, 1]), F9)


def test_m_poly_clause_three():
    # linear M over F_9 with root 5: clause (ii) holds but M(1) is outside F_3
    F = build_field(3, 1, 2)
    M = Poly.from_roots(F, [5])
    with pytest.raises(MPolyRejected) as info:
        m_poly_check(M, F)
    assert info.value.clause == "iii"
    assert not F.is_in_base_field(M(1))
