"""Weight-(t+1) codewords of Goppa codes from t+1 support elements.

For distinct a_1..a_{t+1} with F = prod (x - a_l), a codeword supported on
exactly these positions exists iff every ratio

    R_j = G(a_j)/G(a_{t+1}) * F'(a_{t+1})/F'(a_j),   j = 1..t,

lies in F_q^*; the codeword is then c_{a_j} = R_j, c_{a_{t+1}} = 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .poly import Poly, QuotientRing, roots_in_field


class SupportRejected(ValueError):
    """Some ratio R_j is outside F_q^*; ``index`` is the 1-based j."""

    def __init__(self, index: int, value: int):
        super().__init__(f"ratio R_{index} is not in F_q^*")
        self.index = index
        self.value = value


class MPolyRejected(ValueError):
    def __init__(self, clause: str, detail: str):
        super().__init__(f"clause {clause}: {detail}")
        self.clause = clause
        self.detail = detail


@dataclass(eq=False)
class CriterionWitness:
    support_elems: tuple
    ratios: tuple
    F: Poly
    G: Poly
    positions: tuple | None = None
    codeword: np.ndarray | None = field(default=None, repr=False)

    @property
    def t(self) -> int:
        return len(self.ratios)

    @property
    def weight(self) -> int:
        return len(self.support_elems)


def _derivative_values(ctx, elems) -> list[int]:
    """F'(a_j) = prod_{k != j} (a_j - a_k)."""
    out = []
    for j, a in enumerate(elems):
        acc = 1
        for k, b in enumerate(elems):
            if k != j:
                acc = ctx.mul(acc, ctx.sub(a, b))
        out.append(acc)
    return out


def ratios(G: Poly, elems) -> list[int]:
    """R_1..R_t for the ordered elements (the last one is the reference)."""
    ctx = G.field
    elems = [int(a) for a in elems]
    if len(elems) < 2:
        raise ValueError("need at least two elements")
    if len(set(elems)) != len(elems):
        raise ValueError("elements must be pairwise distinct")
    gvals = [G(a) for a in elems]
    if not all(gvals):
        raise ValueError("G vanishes at one of the elements")
    dvals = _derivative_values(ctx, elems)
    g_last, d_last = gvals[-1], dvals[-1]
    return [
        ctx.mul(ctx.div(g, g_last), ctx.div(d_last, d))
        for g, d in zip(gvals[:-1], dvals[:-1])
    ]


def check_support(G: Poly, elems, support=None) -> CriterionWitness:
    """Build the weight-(t+1) witness or raise :class:`SupportRejected`.

    ``len(elems)`` must be deg G + 1.  When ``support`` (the ordered code
    locators) is given the full-length codeword is filled in, in base-field
    codes, with the last element's coordinate normalized to 1.
    """
    ctx = G.field
    elems = tuple(int(a) for a in elems)
    if len(elems) != G.degree + 1:
        raise ValueError(f"need exactly deg G + 1 = {G.degree + 1} elements")
    R = ratios(G, elems)
    for j, r in enumerate(R, start=1):
        if not ctx.is_in_base_field_star(r):
            raise SupportRejected(j, r)
    witness = CriterionWitness(elems, tuple(R), Poly.from_roots(ctx, elems), G)
    if support is not None:
        index = {a: i for i, a in enumerate(support)}
        try:
            positions = tuple(index[a] for a in elems)
        except KeyError:
            raise ValueError("an element is missing from the support") from None
        c = np.zeros(len(support), dtype=np.int64)
        c[list(positions[:-1])] = ctx.to_base(np.array(R, dtype=np.int64))
        c[positions[-1]] = 1
        witness.positions = positions
        witness.codeword = c
    return witness


def _split_roots(F: Poly) -> list[int]:
    roots = roots_in_field(F)
    if len(roots) != F.degree:
        raise ValueError(
            f"polynomial of degree {F.degree} has {len(roots)} distinct roots in the field")
    return roots


def derivative_construction(F: Poly) -> tuple[Poly, list[int]]:
    """G = (t+1)^-1 F' for F split with t+1 distinct roots."""
    ctx = F.field
    t1 = F.degree
    if t1 % ctx.p == 0:
        raise ValueError(f"characteristic {ctx.p} divides t + 1 = {t1}")
    roots = _split_roots(F)
    G = F.derivative().scale(ctx.inv(ctx.from_int(t1)))
    return G, roots


def weighted_construction(F: Poly, weights) -> tuple[Poly, list[int]]:
    """G = sum_l w_l F/(x - a_l), weights in F_q^* (tower encoding), roots sorted."""
    ctx = F.field
    roots = _split_roots(F)
    weights = [int(w) for w in weights]
    if len(weights) != len(roots):
        raise ValueError(f"need {len(roots)} weights, got {len(weights)}")
    if not all(ctx.is_in_base_field_star(w) for w in weights):
        raise ValueError("weights must be nonzero elements of F_q")
    G = Poly(ctx)
    for w, a in zip(weights, roots):
        G = G + (F // Poly(ctx, [ctx.neg(a), 1])).scale(w)
    return G, roots


def bch_locators(ctx, xs) -> tuple[list[int], bool]:
    """Locators S_j and whether R_j = -S_j for G = x^t, a_j = 1/x_j, a_{t+1} = 1."""
    xs = [int(x) for x in xs]
    if len(set(xs)) != len(xs) or 0 in xs or 1 in xs:
        raise ValueError("locators must be distinct and outside {0, 1}")
    S = []
    for j, xj in enumerate(xs):
        num, den = 1, xj
        for k, xk in enumerate(xs):
            if k != j:
                num = ctx.mul(num, ctx.sub(1, xk))
                den = ctx.mul(den, ctx.sub(xj, xk))
        S.append(ctx.div(num, den))
    G = Poly.monomial(ctx, len(xs))
    R = ratios(G, [ctx.inv(x) for x in xs] + [1])
    return S, all(r == ctx.neg(s) for r, s in zip(R, S))


@dataclass(frozen=True)
class MPolyCertificate:
    b: int
    w: int
    roots: tuple
    recurrence_path: bool | None  # None when M is not over F_q


def m_poly_check(M: Poly, ctx=None) -> MPolyCertificate:
    """Sufficient condition for a weight-(deg M + 1) BCH codeword.

    Checks (i) M has deg M distinct nonzero roots in ``ctx``,
    (ii) x(x-1)M'(x) = w mod M with w in F_q^*, (iii) M(1) in F_q^*.
    Clause (ii) is verified by quotient-ring reduction and, when every
    coefficient is in F_q, also by the coefficient recurrences
    (t-k+1)a_{k-1} + (k+b)a_k = 0, t a_0 + (b+1) a_1 = 0, w = -b a_0.
    """
    ctx = ctx if ctx is not None else M.field
    t = M.degree
    if t < 1 or M.lead != 1:
        raise ValueError("M must be monic of positive degree")
    if M[0] == 0:
        raise ValueError("M must have a nonzero constant term")
    M = Poly(ctx, M.coeffs)
    roots = [r for r in roots_in_field(M, ctx) if r]
    if len(roots) != t:
        raise MPolyRejected("i", f"{len(roots)} distinct nonzero roots, need {t}")

    x = Poly.x(ctx)
    lhs = x * (x - 1) * M.derivative()
    quo, rem = divmod(lhs, M)
    ring_ok = rem.degree <= 0 and ctx.is_in_base_field_star(rem[0])
    w, b = rem[0], quo[0]

    recurrence_ok = None
    if all(ctx.is_in_base_field(a) for a in M.coeffs):
        recurrence_ok, w_recurrence = _coefficient_recurrences(M, ctx)
        if recurrence_ok != ring_ok or (ring_ok and w_recurrence != w):
            raise AssertionError("quotient-ring and recurrence paths disagree")
    if not ring_ok:
        raise MPolyRejected("ii", f"x(x-1)M' mod M = {rem!r} is not in F_q^*")
    if not ctx.is_in_base_field_star(M(1)):
        raise MPolyRejected("iii", "M(1) is not in F_q^*")
    return MPolyCertificate(b, w, tuple(roots), recurrence_ok)


def _coefficient_recurrences(M: Poly, ctx) -> tuple[bool, int]:
    t = M.degree
    a = lambda k: M[k]
    n = ctx.from_int
    b = ctx.sub(ctx.neg(a(t - 1)), n(t))
    ok = True
    for k in range(2, t + 1):
        term = ctx.add(ctx.mul(n(t - k + 1), a(k - 1)), ctx.mul(ctx.add(n(k), b), a(k)))
        ok &= term == 0
    ok &= ctx.add(ctx.mul(n(t), a(0)), ctx.mul(ctx.add(b, 1), a(1))) == 0
    w = ctx.neg(ctx.mul(b, a(0)))
    ok &= ctx.is_in_base_field_star(w)
    return ok, w


def quotient_residue(M: Poly, ctx=None) -> Poly:
    """x(x-1)M'(x) reduced mod M."""
    ctx = ctx if ctx is not None else M.field
    M = Poly(ctx, M.coeffs)
    x = Poly.x(ctx)
    return QuotientRing(M).reduce(x * (x - 1) * M.derivative())
