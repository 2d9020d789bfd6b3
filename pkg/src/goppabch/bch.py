"""Narrow-sense primitive BCH codes C(q, q^m - 1, delta, 1).

The code has zeros a, a^2, ..., a^(delta-1) for the tower's primitive
element a.  The Goppa code with G = x^(delta-1) on the support
1, a, ..., a^(n-1) is the same code after the coordinate permutation
i -> -i mod n (:func:`goppa_bch_map`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linalg import LinearCode, row_basis, subfield_expand
from .poly import Poly, powmod


def multiplicative_order(q: int, n: int) -> int:
    if math.gcd(q, n) != 1:
        raise ValueError("q and n must be coprime")
    k, acc = 1, q % n
    while acc != 1 % n:
        acc = acc * q % n
        k += 1
    return k


def cyclotomic_cosets(q: int, n: int) -> list[list[int]]:
    """Orbits of i -> q*i mod n, each sorted, listed by smallest member."""
    if math.gcd(q, n) != 1:
        raise ValueError("q and n must be coprime")
    seen = bytearray(n)
    cosets = []
    for i in range(n):
        if seen[i]:
            continue
        orbit, j = [], i
        while not seen[j]:
            seen[j] = 1
            orbit.append(j)
            j = j * q % n
        cosets.append(sorted(orbit))
    return cosets


def defining_set(q: int, n: int, delta: int) -> list[int]:
    """Union of the cosets meeting {1, ..., delta-1}."""
    out: set[int] = set()
    seen = bytearray(n)
    for i in range(1, delta):
        j = i % n
        while not seen[j]:
            seen[j] = 1
            out.add(j)
            j = j * q % n
    return sorted(out)


@dataclass(frozen=True, eq=False)
class BCHSpec:
    ctx: object
    delta: int
    offset: int = 1

    def __post_init__(self):
        if self.offset != 1:
            raise ValueError("only narrow-sense codes (offset 1) are supported")
        if not 2 <= self.delta <= self.n:
            raise ValueError(f"designed distance must lie in [2, {self.n}]")

    @property
    def n(self) -> int:
        return self.ctx.order - 1

    @property
    def q(self) -> int:
        return self.ctx.q


def generator_polynomial(spec: BCHSpec) -> Poly:
    """prod of (x - a^i) over the defining set; coefficients checked to be in F_q."""
    ctx = spec.ctx
    g = Poly.from_roots(ctx, [ctx.exp(i) for i in defining_set(spec.q, spec.n, spec.delta)])
    if not all(ctx.is_in_base_field(c) for c in g.coeffs):
        raise AssertionError("generator polynomial has coefficients outside F_q")
    return g


def bch_parity_extension(spec: BCHSpec) -> np.ndarray:
    """Rows (a^(i j))_i for one representative j of every coset in the defining set."""
    ctx = spec.ctx
    n = spec.n
    leaders = []
    covered: set[int] = set()
    for j in defining_set(spec.q, n, spec.delta):
        if j not in covered:
            leaders.append(j)
            k = j
            while k not in covered:
                covered.add(k)
                k = k * spec.q % n
    i = np.arange(n, dtype=np.int64)
    return np.stack([ctx._exp_arr[(i * j) % n] for j in leaders])


def build_bch(spec: BCHSpec) -> LinearCode:
    """C(q, n, delta, 1); k from the parity rank is cross-checked against deg g."""
    ctx = spec.ctx
    H = row_basis(ctx.base, subfield_expand(ctx, bch_parity_extension(spec)))
    g = generator_polynomial(spec)
    n = spec.n
    if H.shape[0] != g.degree:
        raise AssertionError("parity rank disagrees with the generator polynomial degree")
    x = Poly.x(ctx)
    if powmod(x, n, g) != Poly(ctx, [1]):
        raise AssertionError("generator polynomial does not divide x^n - 1")
    return LinearCode(ctx.base, H, n, spec.delta, "bch",
                      {"bch": spec, "generator_polynomial": g})


def generator_matrix_from_poly(ctx, g: Poly, n: int) -> np.ndarray:
    """Cyclic shifts of g (k x n), in base-field codes."""
    coeffs = ctx.to_base(np.array(g.coeffs, dtype=np.int64))
    k = n - g.degree
    G = np.zeros((k, n), dtype=np.int64)
    for i in range(k):
        G[i, i:i + len(coeffs)] = coeffs
    return G


def dim_formula_general(q: int, n: int, m: int, delta: int) -> int:
    """k = n - m * ceil((delta-1)(1 - 1/q)), inside its range of validity only."""
    if multiplicative_order(q, n) != m:
        raise ValueError(f"m = {m} is not the order of q modulo n")
    half = q ** math.ceil(m / 2)
    if not half < n <= q**m - 1:
        raise ValueError("length outside q^ceil(m/2) < n <= q^m - 1")
    cap = min(n * half // (q**m - 1), n)
    if not 2 <= delta <= cap:
        raise ValueError(f"designed distance {delta} outside [2, {cap}]")
    return n - m * (-(-(delta - 1) * (q - 1) // q))


def dim_formula_norm(q: int, m: int, r: int) -> int:
    """k = (q - r)^m - 1 for delta = r (q^m - 1)/(q - 1) + 1."""
    if not (1 <= r < q - 1 and (q - 1) % r == 0):
        raise ValueError("need 1 <= r < q - 1 with r | q - 1")
    return (q - r) ** m - 1


def bose_distance(spec: BCHSpec) -> int:
    """Largest d' with {1, ..., d'-1} inside the defining set."""
    D = set(defining_set(spec.q, spec.n, spec.delta))
    d = spec.delta
    while d <= spec.n and d % spec.n in D:
        d += 1
    return d


def goppa_bch_positions(indices, n: int) -> list[int]:
    """Goppa coordinate i (locator a^i) -> BCH coordinate -i mod n."""
    return [(-int(i)) % n for i in indices]


def goppa_bch_map(word, spec=None) -> np.ndarray:
    """Permute a word of Gamma(L, x^t), L = (1, a, ..., a^(n-1)), into BCH coordinates.

    If the Goppa spec is passed it is checked to have that provenance.
    """
    word = np.asarray(word)
    n = len(word)
    if spec is not None:
        ctx = spec.ctx
        G = spec.G
        is_monomial = G.coeffs[-1] == 1 and not any(G.coeffs[:-1])
        in_order = list(spec.support) == [ctx.exp(i) for i in range(ctx.order - 1)]
        if not (is_monomial and in_order and n == spec.n):
            raise ValueError("word does not come from Gamma((1, a, ..., a^(n-1)), x^t)")
    out = np.empty_like(word)
    out[(-np.arange(n)) % n] = word
    return out
