"""Goppa codes Gamma_q(L, G) over F_q with locators in F_{q^m}."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import LinearCode, row_basis, same_row_space, subfield_expand
from .poly import Poly, QuotientRing, norm_poly_expand, roots_in_field


@dataclass(frozen=True, eq=False)
class GoppaSpec:
    """Support L (ordered, distinct, G nonzero on it) and Goppa polynomial G.

    ``designed_distance`` defaults to deg G + 1; families with a better
    proven bound pass it explicitly.
    """

    ctx: object
    support: tuple
    G: Poly
    designed_distance: int | None = None
    provenance: str = "goppa"

    def __post_init__(self):
        support = tuple(int(a) for a in self.support)
        object.__setattr__(self, "support", support)
        if self.G.degree < 1:
            raise ValueError("Goppa polynomial must have degree >= 1")
        if len(set(support)) != len(support):
            raise ValueError("support elements must be distinct")
        if support and (self.G.eval_many(np.array(support)) == 0).any():
            raise ValueError("Goppa polynomial vanishes on the support")
        if self.designed_distance is None:
            object.__setattr__(self, "designed_distance", self.G.degree + 1)

    @property
    def t(self) -> int:
        return self.G.degree

    @property
    def n(self) -> int:
        return len(self.support)

    def position(self, alpha: int) -> int:
        return self.support.index(alpha)


def full_support(ctx, G: Poly) -> list[int]:
    """Every element where G is nonzero: 1, a, a^2, ... then 0 last."""
    if not G:
        raise ValueError("zero Goppa polynomial")
    powers = ctx._exp_arr[: ctx.order - 1]
    keep = powers[G.eval_many(powers) != 0].tolist()
    if G(0) != 0:
        keep.append(0)
    if not keep:
        raise ValueError("Goppa polynomial vanishes on the whole field")
    return keep


def goppa_spec(ctx, G: Poly, support=None, **kw) -> GoppaSpec:
    if support is None:
        support = full_support(ctx, G)
    return GoppaSpec(ctx, tuple(support), G, **kw)


def parity_check_extension(spec: GoppaSpec) -> np.ndarray:
    """The t x n matrix with entry (r, i) = alpha_i^r / G(alpha_i), r = 0..t-1."""
    F = spec.ctx
    L = np.array(spec.support, dtype=np.int64)
    ginv = F.vinv(spec.G.eval_many(L))
    rows = [ginv]
    for _ in range(1, spec.t):
        rows.append(F.vmul(rows[-1], L))
    return np.stack(rows)


def build_code(spec: GoppaSpec) -> LinearCode:
    """Gamma_q(L, G) as an F_q code via subfield expansion of the parity matrix."""
    ctx = spec.ctx
    H = subfield_expand(ctx, parity_check_extension(spec))
    code = LinearCode(ctx.base, row_basis(ctx.base, H), spec.n,
                      spec.designed_distance, spec.provenance, {"goppa": spec})
    if code.k < spec.n - ctx.m * spec.t:
        raise AssertionError("dimension below the n - mt floor")
    return code


def membership_congruence(spec: GoppaSpec, c) -> bool:
    """sum c_i / (x - alpha_i) == 0 in F_{q^m}[x]/(G), c given in base-field codes."""
    c = np.asarray(c, dtype=np.int64)
    if c.shape != (spec.n,):
        raise ValueError(f"expected a vector of length {spec.n}")
    ctx = spec.ctx
    ring = QuotientRing(spec.G)
    acc = Poly(ctx)
    for i in np.flatnonzero(c):
        coef = ctx.from_base(int(c[i]))
        acc = acc + ring.inverse_linear(spec.support[i]).scale(coef)
    return not ring.reduce(acc)


def wild_equivalence_check(ctx, g: Poly, support=None) -> bool:
    """Gamma(L, N(g)) == Gamma(L, N(g)/g), compared as generator row spaces."""
    if g.degree < 1:
        raise ValueError("g must have positive degree")
    if roots_in_field(g, ctx):
        raise ValueError("g has a root in the field")
    e = ctx.norm_exponent
    big = norm_poly_expand(g, ctx)
    small = norm_poly_expand(g, ctx, exponent=e - 1)
    if support is None:
        support = full_support(ctx, big)
    codes = [build_code(GoppaSpec(ctx, tuple(support), G)) for G in (big, small)]
    return same_row_space(ctx.base, codes[0].generator, codes[1].generator)
