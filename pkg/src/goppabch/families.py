"""Code families whose minimum distance equals the designed distance.

Each constructor checks the hypotheses of its family, builds the code, and
produces an explicit codeword of the designed weight via the ratio
criterion.  Together with the designed lower bound the codeword pins the
minimum distance exactly; enumeration is only a cross-check.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .bch import BCHSpec, build_bch, goppa_bch_map
from .criterion import CriterionWitness, check_support, derivative_construction, m_poly_check
from .field import FieldTower, build_field
from .goppa import GoppaSpec, build_code, full_support, membership_congruence
from .linalg import DistanceResult, LinearCode, min_distance
from .poly import Poly, is_irreducible, is_irreducible_over_prime, norm_poly_expand, prime_poly, roots_in_field

FAMILY_TAGS = ("wild", "xt_plus_A", "fractional", "binary_9_15", "pary_2p2",
               "norm_bch", "qt_plus_1")

L1 = (1, 1, 1, 0, 0, 0, 0, 1, 1)                          # x^8+x^7+x^2+x+1
L2 = (1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 1, 1)        # x^14+x^13+x^6+x^5+1
MAX_PARY_PRIME = 5


class HypothesisError(ValueError):
    def __init__(self, family: str, log):
        failed = [name for name, ok in log if not ok]
        super().__init__(f"{family}: failed hypotheses: {', '.join(failed)}")
        self.family = family
        self.log = log


class _Log(list):
    def check(self, name: str, ok) -> bool:
        self.append((name, bool(ok)))
        return bool(ok)

    def require(self, family: str) -> None:
        if not all(ok for _, ok in self):
            raise HypothesisError(family, list(self))


@dataclass(eq=False)
class FamilyReport:
    """A built code together with the witness certifying d = claimed_d.

    ``codeword`` is in the coordinates of ``code``; for the BCH families it
    is the image of ``witness.codeword`` under the Goppa-to-BCH permutation.
    ``goppa`` is the Goppa spec the witness was built against.
    """

    family_tag: str
    params: dict
    code: LinearCode
    witness: CriterionWitness
    codeword: np.ndarray
    claimed_d: int
    goppa: GoppaSpec
    hypothesis_log: list = field(default_factory=list)
    extras: dict = field(default_factory=dict)

    @property
    def ctx(self) -> FieldTower:
        return self.goppa.ctx

    def membership(self) -> dict[str, bool]:
        """Both membership routes: the Goppa congruence and the parity syndrome."""
        return {
            "congruence": membership_congruence(self.goppa, self.witness.codeword),
            "syndrome": self.code.contains(self.codeword),
        }

    def distance(self, mode: str = "witness", budget: int | None = None) -> DistanceResult:
        """``witness``: certified interval from the witness; ``exhaustive``: enumerate."""
        if mode == "exhaustive":
            return min_distance(self.code, budget=budget, witness=self.codeword)
        if mode != "witness":
            raise ValueError(f"unknown verification mode {mode!r}")
        return min_distance(self.code, budget=0, witness=self.codeword)


# -- shared helpers --------------------------------------------------------

def smallest_nonzero(ctx, pred=lambda x: True) -> int:
    """First nonzero element in coordinate-lexicographic order satisfying pred."""
    for x in ctx.lex_elements():
        if x and pred(x):
            return x
    raise ValueError("no element satisfies the requested condition")


def default_rootless(ctx, r: int) -> Poly:
    """Smallest monic irreducible of degree r over the top field (lex on coefficients)."""
    order = list(ctx.lex_elements())
    for low in itertools.product(order, repeat=r):
        if low[0] == 0:
            continue
        g = Poly(ctx, list(low) + [1])
        if is_irreducible(g):
            return g
    raise ValueError(f"no irreducible polynomial of degree {r}")


def _monomial_support(ctx) -> list[int]:
    return [ctx.exp(i) for i in range(ctx.order - 1)]


def _bch_report(tag, params, ctx, delta, elems, log, extras=None) -> FamilyReport:
    """Witness on Gamma((1, a, ...), x^t), mapped into C(q, q^m-1, t+1, 1)."""
    t = delta - 1
    G = Poly.monomial(ctx, t)
    spec = GoppaSpec(ctx, tuple(_monomial_support(ctx)), G, provenance="bch-goppa")
    witness = check_support(G, elems, support=spec.support)
    code = build_bch(BCHSpec(ctx, delta))
    word = goppa_bch_map(witness.codeword, spec)
    return FamilyReport(tag, params, code, witness, word, delta, spec, log, extras or {})


def _goppa_report(tag, params, spec, elems, log, extras=None) -> FamilyReport:
    code = build_code(spec)
    witness = check_support(spec.G, elems, support=spec.support)
    return FamilyReport(tag, params, code, witness, witness.codeword,
                        spec.designed_distance, spec, log, extras or {})


# -- Goppa families --------------------------------------------------------

def wild_family(ctx: FieldTower, g: Poly | None = None, r: int | None = None,
                gamma: int | None = None) -> FamilyReport:
    """Gamma(F_{q^m}, N(g)) with deg g = r > 1, r | q-1: d = r(q^m-1)/(q-1) + 1."""
    if g is None:
        if r is None:
            raise ValueError("give g or its degree r")
        g = default_rootless(ctx, r)
    r = g.degree
    q = ctx.q
    log = _Log()
    log.check("m >= 2", ctx.m >= 2)
    log.check("r > 1", r > 1)
    log.check("r | q - 1", r >= 1 and (q - 1) % r == 0)
    log.check("g has no roots in F_{q^m}", not roots_in_field(g, ctx))
    log.require("wild")
    t = r * ctx.norm_exponent
    G = norm_poly_expand(g, ctx)
    support = full_support(ctx, G)
    log.check("support is the whole field", len(support) == ctx.order)
    gamma = smallest_nonzero(ctx) if gamma is None else gamma
    shift = Poly(ctx, [gamma, 1])
    Fg = shift ** (t + 1) - shift
    roots = roots_in_field(Fg)
    log.check("F_gamma has exactly t+1 distinct roots", len(roots) == t + 1)
    dF = Fg.derivative()
    log.check("F_gamma' in F_q^* at every root",
              all(ctx.is_in_base_field_star(dF(a)) for a in roots))
    log.require("wild")
    spec = GoppaSpec(ctx, tuple(support), G, designed_distance=t + 1, provenance="wild")
    params = {"q": q, "m": ctx.m, "r": r, "g": list(g.coeffs), "gamma": gamma}
    return _goppa_report("wild", params, spec, roots, log)


def xt_plus_A_family(ctx: FieldTower, t: int, A: int | None = None) -> FamilyReport:
    """G = x^t + A, q odd, t | q^m - 1, A a t-th power: d = t + 1."""
    N = ctx.order - 1
    A = ctx.pow(ctx.prim, t) if A is None else A
    log = _Log()
    log.check("q odd", ctx.q % 2 == 1)
    log.check("t | q^m - 1", N % t == 0)
    log.check("A is a nonzero t-th power", A != 0 and ctx.kth_power_test(A, t))
    log.require("xt_plus_A")
    G = Poly.monomial(ctx, t) + Poly(ctx, [A])
    x = Poly.x(ctx)
    F = x * (Poly.monomial(ctx, t) - Poly(ctx, [A]))
    roots = [a for a in roots_in_field(F) if a]
    log.check("x^t = A has t solutions", len(roots) == t)
    log.require("xt_plus_A")
    elems = roots + [0]
    spec = GoppaSpec(ctx, tuple(full_support(ctx, G)), G, provenance="xt_plus_A")
    report = _goppa_report("xt_plus_A", {"q": ctx.q, "m": ctx.m, "t": t, "A": A},
                           spec, elems, log)
    expected = ctx.neg(ctx.div(ctx.from_int(2), ctx.from_int(t)))
    log.check("every ratio equals -2/t", all(r == expected for r in report.witness.ratios))
    log.require("xt_plus_A")
    return report


def default_lambda(ctx: FieldTower, t: int) -> int:
    lam = ctx.pow(ctx.prim, t + 1)
    return lam if lam != 1 else ctx.pow(ctx.prim, 2 * (t + 1))


def fractional_family(ctx: FieldTower, t: int, u: int = 0, v: int = 1,
                      lam: int | None = None) -> FamilyReport:
    """G = (x+u)^t - lam (x+v)^t via G = (t+1)^-1 F', F = (x+u)^(t+1) - lam (x+v)^(t+1)."""
    N = ctx.order - 1
    lam = default_lambda(ctx, t) if lam is None else lam
    log = _Log()
    log.check("t + 1 | q^m - 1", N % (t + 1) == 0)
    log.check("p does not divide t + 1", (t + 1) % ctx.p != 0)
    log.check("u != v", u != v)
    log.check("lambda not in {0, 1}", lam not in (0, 1))
    log.check("lambda is a (t+1)-th power", lam != 0 and ctx.kth_power_test(lam, t + 1))
    log.require("fractional")
    xu, xv = Poly(ctx, [u, 1]), Poly(ctx, [v, 1])
    F = xu ** (t + 1) - (xv ** (t + 1)).scale(lam)
    G, roots = derivative_construction(F)
    log.check("F has t+1 distinct roots", len(roots) == t + 1)
    log.check("G = (x+u)^t - lambda (x+v)^t", G == xu**t - (xv**t).scale(lam))
    log.require("fractional")
    spec = GoppaSpec(ctx, tuple(full_support(ctx, G)), G, provenance="fractional")
    params = {"q": ctx.q, "m": ctx.m, "t": t, "u": u, "v": v, "lambda": lam}
    report = _goppa_report("fractional", params, spec, roots, log)
    log.check("every ratio equals 1", all(r == 1 for r in report.witness.ratios))
    log.require("fractional")
    return report


# -- BCH families ----------------------------------------------------------

def _locator_elems(ctx, roots) -> list[int]:
    return [ctx.inv(x) for x in roots] + [1]


def binary_9_15_family(m: int, delta: int | None = None) -> FamilyReport:
    """C(2, 2^m - 1, delta, 1) with delta = 9 (8 | m) or 15 (14 | m)."""
    if delta is None:
        delta = 9 if m % 8 == 0 else 15
    log = _Log()
    log.check("m >= 8", m >= 8)
    log.check("delta in {9, 15}", delta in (9, 15))
    log.check("8 | m for delta 9, 14 | m for delta 15",
              (delta == 9 and m % 8 == 0) or (delta == 15 and m % 14 == 0))
    log.require("binary_9_15")
    ctx = build_field(2, 1, m)
    M = prime_poly(ctx, L1 if delta == 9 else L2)
    log.check("L irreducible over F_2", is_irreducible_over_prime(M))
    cert = m_poly_check(M, ctx)
    log.check("x(x-1)L' = 1 mod L", cert.w == 1)
    log.require("binary_9_15")
    elems = _locator_elems(ctx, cert.roots)
    return _bch_report("binary_9_15", {"m": m, "delta": delta}, ctx, delta, elems, log,
                       {"certificate": cert, "M": M})


def pary_polynomial(ctx, p: int) -> Poly:
    """x^(2p+1) + x^(2p) + ... + x^2 - x - 1."""
    return prime_poly(ctx, [-1, -1] + [1] * (2 * p))


def pary_2p2_family(p: int) -> FamilyReport:
    """C(p, p^p - 1, 2p + 2, 1) for an odd prime p (p <= 5 at desk scale)."""
    log = _Log()
    log.check("p odd prime", p % 2 == 1 and p > 2 and all(p % d for d in range(2, p)))
    log.check(f"p <= {MAX_PARY_PRIME}", p <= MAX_PARY_PRIME)
    log.require("pary_2p2")
    ctx = build_field(p, 1, p)
    x = Poly.x(ctx)
    L = pary_polynomial(ctx, p)
    My = prime_poly(ctx, [-1] + [1] * p)
    M_x2 = Poly(ctx, [c if k % 2 == 0 else 0 for k, c in
                      enumerate(c for a in My.coeffs for c in (a, 0))])
    log.check("L = (x + 1) M(x^2)", L == (x + 1) * M_x2)
    log.check("M(y) = y^p + ... + y - 1 irreducible", is_irreducible_over_prime(My))
    log.check("x^p + x^(p-1) - 1 irreducible",
              is_irreducible_over_prime(prime_poly(ctx, [-1] + [0] * (p - 2) + [1, 1])))
    log.check("x^p - x - 1 irreducible",
              is_irreducible_over_prime(prime_poly(ctx, [-1, -1] + [0] * (p - 2) + [1])))
    roots = [r for r in roots_in_field(L) if r]
    log.check("L splits with 2p+1 distinct nonzero roots", len(roots) == 2 * p + 1)
    log.check("L(1) = -2", L(1) == ctx.from_int(-2))
    log.require("pary_2p2")
    cert = m_poly_check(L, ctx)
    log.check("b = -2 and w = -2",
              cert.b == ctx.from_int(-2) and cert.w == ctx.from_int(-2))
    log.check("recurrence path agrees", cert.recurrence_path is True)
    log.require("pary_2p2")
    report = _bch_report("pary_2p2", {"p": p}, ctx, 2 * p + 2,
                         _locator_elems(ctx, cert.roots), log, {"certificate": cert, "L": L})
    log.check("k = p^p - 1 - 2p^2 + p", report.code.k == p**p - 1 - 2 * p * p + p)
    log.require("pary_2p2")
    return report


def norm_bch_family(ctx: FieldTower, r: int, gamma: int | None = None) -> FamilyReport:
    """C(q, q^m - 1, t + 1, 1), t = r (q^m-1)/(q-1), 1 <= r < q-1, r | q-1."""
    q = ctx.q
    log = _Log()
    log.check("1 <= r < q - 1", 1 <= r < q - 1)
    log.check("r | q - 1", r >= 1 and (q - 1) % r == 0)
    log.require("norm_bch")
    t = r * ctx.norm_exponent
    if gamma is None:
        gamma = smallest_nonzero(ctx, lambda g: ctx.pow(g, t) != 1)
    log.check("gamma^t != 1", gamma != 0 and ctx.pow(gamma, t) != 1)
    shift = Poly(ctx, [gamma, 1])
    Fg = shift ** (t + 1) - shift
    roots = roots_in_field(Fg)
    log.check("F_gamma has t+1 distinct nonzero roots", len(roots) == t + 1 and 0 not in roots)
    log.require("norm_bch")
    report = _bch_report("norm_bch", {"q": q, "m": ctx.m, "r": r, "gamma": gamma},
                         ctx, t + 1, roots, log)
    log.check("k = (q - r)^m - 1", report.code.k == (q - r) ** ctx.m - 1)
    log.require("norm_bch")
    return report


def qt_plus_1_family(ctx: FieldTower, t: int, b: int | None = None) -> FamilyReport:
    """C(q, q^m - 1, q^t + 1, 1) for t | m, t < m."""
    q, m = ctx.q, ctx.m
    log = _Log()
    log.check("t | m", t >= 1 and m % t == 0)
    log.check("t < m", t < m)
    log.require("qt_plus_1")
    Q = q**t
    if b is None:
        b = smallest_nonzero(ctx, lambda y: ctx.pow(y, Q) != y)
    log.check("b not in F_{q^t}", ctx.pow(b, Q) != b)
    log.require("qt_plus_1")
    bq, bqq = ctx.pow(b, Q), ctx.pow(b, Q * Q)
    lam = ctx.div(ctx.sub(b, bq), ctx.sub(bq, bqq))
    F = Poly.monomial(ctx, Q + 1) + Poly.monomial(ctx, Q, ctx.add(1, lam)) + Poly(ctx, [lam])
    log.check("F' = x^(q^t)", F.derivative() == Poly.monomial(ctx, Q))
    G, roots = derivative_construction(F)
    log.check("F has q^t + 1 distinct nonzero roots", len(roots) == Q + 1 and 0 not in roots)
    log.check("G = x^(q^t)", G == Poly.monomial(ctx, Q))
    minus_one = ctx.neg(1)
    images = {ctx.div(ctx.add(ctx.mul(bq, x), b), ctx.add(x, 1)) for x in roots if x != minus_one}
    log.check("roots other than -1 map onto F_{q^t}",
              minus_one in roots and len(images) == Q
              and all(ctx.is_in_subfield(u, ctx.s * t) for u in images))
    log.require("qt_plus_1")
    extras = {"b": b, "lambda": lam, "F": F}
    return _bch_report("qt_plus_1", {"q": q, "m": m, "t": t, "b": b}, ctx, Q + 1, roots,
                       log, extras)


def run_family(tag: str, **params) -> FamilyReport:
    """Dispatch by family tag; field parameters are q (via p, s) and m."""
    if tag == "binary_9_15":
        return binary_9_15_family(params["m"], params.get("delta"))
    if tag == "pary_2p2":
        return pary_2p2_family(params["p"])
    ctx = params.pop("ctx", None) or tower_for(params.pop("q"), params.pop("m"))
    if tag == "wild":
        return wild_family(ctx, r=params["r"], g=params.get("g"), gamma=params.get("gamma"))
    if tag == "xt_plus_A":
        return xt_plus_A_family(ctx, params["t"], params.get("A"))
    if tag == "fractional":
        return fractional_family(ctx, params["t"], params.get("u", 0), params.get("v", 1),
                                 params.get("lam"))
    if tag == "norm_bch":
        return norm_bch_family(ctx, params["r"], params.get("gamma"))
    if tag == "qt_plus_1":
        return qt_plus_1_family(ctx, params["t"], params.get("b"))
    raise ValueError(f"unknown family {tag!r}")


_TOWERS: dict[tuple[int, int], FieldTower] = {}


def tower_for(q: int, m: int) -> FieldTower:
    """Cached tower F_q < F_{q^m} with default modulus."""
    from .field import factorize

    if (q, m) not in _TOWERS:
        f = factorize(q)
        if len(f) != 1:
            raise ValueError(f"{q} is not a prime power")
        (p, s), = f.items()
        _TOWERS[q, m] = build_field(p, s, m)
    return _TOWERS[q, m]
