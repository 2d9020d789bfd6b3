"""Dense univariate polynomials over a :class:`~goppabch.field.GF`.

Coefficients are stored constant term first with trailing zeros stripped,
so ``Poly(F, [])`` is the zero polynomial and has degree -1.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

import numpy as np


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs: Iterable[int] = ()):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.field = field
        self.coeffs = tuple(c)

    # -- constructors ------------------------------------------------------

    @classmethod
    def x(cls, field) -> "Poly":
        return cls(field, [0, 1])

    @classmethod
    def const(cls, field, c: int) -> "Poly":
        return cls(field, [c])

    @classmethod
    def monomial(cls, field, k: int, c: int = 1) -> "Poly":
        return cls(field, [0] * k + [c])

    @classmethod
    def from_roots(cls, field, roots: Iterable[int]) -> "Poly":
        """The monic polynomial prod (x - r)."""
        F = field
        c = [1]
        for r in roots:
            nr = F.neg(r)
            nxt = [0] * (len(c) + 1)
            for i, a in enumerate(c):
                nxt[i + 1] = F.add(nxt[i + 1], a)
                nxt[i] = F.add(nxt[i], F.mul(nr, a))
            c = nxt
        return cls(field, c)

    # -- basic properties ----------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Poly(self.field, [other])
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)})"

    def __str__(self) -> str:
        return format_poly(self)

    # -- ring operations -------------------------------------------------------

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        return Poly(self.field, [self.field.from_int(other)])

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly(F, [F.add(u, b[i]) if i < len(b) else u for i, u in enumerate(a)])

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(self.field, [self.field.neg(a) for a in self.coeffs])

    def __sub__(self, other) -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Poly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Poly":
        other = self._coerce(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(F)
        out = [0] * (len(a) + len(b) - 1)
        for i, u in enumerate(a):
            if u:
                for j, v in enumerate(b):
                    if v:
                        out[i + j] = F.add(out[i + j], F.mul(u, v))
        return Poly(F, out)

    __rmul__ = __mul__

    def scale(self, c: int) -> "Poly":
        return Poly(self.field, [self.field.mul(c, a) for a in self.coeffs])

    def __divmod__(self, other) -> tuple["Poly", "Poly"]:
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        rem = list(self.coeffs)
        db = other.degree
        inv_lead = F.inv(other.lead)
        if len(rem) <= db:
            return Poly(F), Poly(F, rem)
        quo = [0] * (len(rem) - db)
        b = other.coeffs
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if not c:
                continue
            c = F.mul(c, inv_lead)
            quo[k - db] = c
            nc = F.neg(c)
            for j, v in enumerate(b):
                if v:
                    rem[k - db + j] = F.add(rem[k - db + j], F.mul(nc, v))
        return Poly(F, quo), Poly(F, rem[:db])

    def __floordiv__(self, other) -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "Poly":
        return divmod(self, other)[1]

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative exponent")
        result = Poly(self.field, [1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def monic(self) -> "Poly":
        if not self:
            return self
        return self.scale(self.field.inv(self.lead))

    # -- evaluation and calculus ---------------------------------------------

    def __call__(self, x: int) -> int:
        F = self.field
        acc = 0
        for a in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), a)
        return acc

    def eval_many(self, xs) -> np.ndarray:
        """Horner evaluation at every entry of an int array."""
        F = self.field
        xs = np.asarray(xs, dtype=np.int64)
        acc = np.zeros_like(xs)
        for a in reversed(self.coeffs):
            acc = F.vadd(F.vmul(acc, xs), a)
        return acc

    def derivative(self) -> "Poly":
        F = self.field
        return Poly(F, [F.mul(F.from_int(k), a) for k, a in enumerate(self.coeffs) if k])

    def compose_shift(self, c: int) -> "Poly":
        """f(x + c)."""
        out = Poly(self.field)
        lin = Poly(self.field, [c, 1])
        for a in reversed(self.coeffs):
            out = out * lin + Poly(self.field, [a])
        return out


def gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd (zero if both inputs are zero)."""
    while g:
        f, g = g, f % g
    return f.monic()


def xgcd(f: Poly, g: Poly) -> tuple[Poly, Poly, Poly]:
    """Return (d, u, v) with u*f + v*g = d and d monic."""
    F = f.field
    r0, r1 = f, g
    s0, s1 = Poly(F, [1]), Poly(F)
    t0, t1 = Poly(F), Poly(F, [1])
    while r1:
        quo, rem = divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quo * s1
        t0, t1 = t1, t0 - quo * t1
    if not r0:
        return r0, s0, t0
    c = F.inv(r0.lead)
    return r0.scale(c), s0.scale(c), t0.scale(c)


def powmod(f: Poly, e: int, mod: Poly) -> Poly:
    result = Poly(f.field, [1]) % mod
    base = f % mod
    while e:
        if e & 1:
            result = (result * base) % mod
        base = (base * base) % mod
        e >>= 1
    return result


def roots_in_field(f: Poly, field=None) -> list[int]:
    """All roots of f in the field, by exhaustive evaluation, sorted by encoding."""
    if not f:
        raise ValueError("every element is a root of the zero polynomial")
    field = field if field is not None else f.field
    values = f.eval_many(np.arange(field.order))
    return [int(x) for x in np.flatnonzero(values == 0)]


def is_squarefree(f: Poly) -> bool:
    """gcd(f, f') = 1; a nonconstant f with f' = 0 counts as not squarefree."""
    if not f:
        raise ValueError("zero polynomial")
    if f.degree < 1:
        return True
    df = f.derivative()
    if not df:
        return False
    return gcd(f, df).degree == 0


def is_irreducible_over_prime(f: Poly) -> bool:
    """Rabin-style test: gcd(f, x^(p^i) - x) = 1 for i <= deg/2.

    ``f`` must have coefficients in the prime field.  Squarefreeness is
    implied when every such gcd is trivial and f has no linear factor.
    """
    F = f.field
    p = F.p
    if any(c >= p for c in f.coeffs):
        raise ValueError("coefficients must lie in the prime field")
    d = f.degree
    if d < 1:
        raise ValueError("degree must be at least 1")
    if d == 1:
        return True
    f = f.monic()
    x = Poly.x(F)
    h = x % f
    for _ in range(d // 2):
        h = powmod(h, p, f)
        if gcd(f, h - x).degree != 0:
            return False
    return True


def is_irreducible_bruteforce(f: Poly) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2 over F_p."""
    import itertools

    F = f.field
    p = F.p
    d = f.degree
    for k in range(1, d // 2 + 1):
        for low in itertools.product(range(p), repeat=k):
            if not (f % Poly(F, list(low) + [1])):
                return False
    return True


class QuotientRing:
    """Arithmetic in K[x]/(G) with canonical representatives of degree < deg G."""

    def __init__(self, G: Poly):
        if G.degree < 1:
            raise ValueError("modulus must have positive degree")
        self.G = G
        self.field = G.field

    def reduce(self, f: Poly) -> Poly:
        return f % self.G

    def mul(self, f: Poly, g: Poly) -> Poly:
        return (f * g) % self.G

    def inverse(self, f: Poly) -> Poly:
        d, u, _ = xgcd(f % self.G, self.G)
        if d.degree != 0:
            raise ValueError("polynomial shares a factor with the modulus")
        return u % self.G

    def inverse_linear(self, alpha: int) -> Poly:
        """(x - alpha)^-1 mod G, via -(G(x) - G(alpha)) / ((x - alpha) G(alpha))."""
        F = self.field
        g_alpha = self.G(alpha)
        if not g_alpha:
            raise ValueError("x - alpha shares a factor with the modulus")
        quo = (self.G - Poly(F, [g_alpha])) // Poly(F, [F.neg(alpha), 1])
        return quo.scale(F.neg(F.inv(g_alpha)))


def norm_poly_eval(g: Poly, x: int, ctx) -> int:
    """g(x)^((q^m-1)/(q-1)) without expanding the norm polynomial."""
    return ctx.pow(g(x), ctx.norm_exponent)


NORM_EXPANSION_CAP = 512


def norm_poly_expand(g: Poly, ctx, exponent: int | None = None) -> Poly:
    """The polynomial g^e for e = (q^m-1)/(q-1) (or a given exponent)."""
    e = ctx.norm_exponent if exponent is None else exponent
    if g.degree * e > NORM_EXPANSION_CAP:
        raise ValueError(f"expansion degree {g.degree * e} exceeds {NORM_EXPANSION_CAP}")
    return g**e


# -- text formats -----------------------------------------------------------

def format_poly(f: Poly, var: str = "x") -> str:
    """Readable form; coefficients outside F_p are written as powers ``a^K``."""
    if not f:
        return "0"
    F = f.field
    terms = []
    for k in range(f.degree, -1, -1):
        c = f.coeffs[k]
        if not c:
            continue
        coef = str(c) if c < F.p else f"a^{F.log(c)}"
        if k == 0:
            terms.append(coef)
            continue
        mono = var if k == 1 else f"{var}^{k}"
        if c == 1:
            terms.append(mono)
        elif c < F.p:
            terms.append(f"{coef}{mono}")
        else:
            terms.append(f"{coef}*{mono}")
    return " + ".join(terms)


_TERM_RE = re.compile(
    r"^(?P<coef>\d+|a\^\d+|a|\([\d:,]+\))?\*?(?P<x>x(?:\^(?P<exp>\d+))?)?$"
)


def parse_poly(field, text: str) -> Poly:
    """Parse ``"x^8+x^7+x^2+x+1"``-style text or a coefficient list.

    A coefficient list is ``"c0;c1;...;cd"`` (constant first).  In the
    shorthand, coefficients may be integers (prime field), ``a^K`` for a
    power of the primitive element, or ``(d0:d1:...)`` digit tuples.
    """
    from .field import parse_element

    text = text.replace(" ", "")
    if not text:
        raise ValueError("empty polynomial")
    if ";" in text:
        return Poly(field, [parse_element(field, c) for c in text.split(";")])
    out = Poly(field)
    for sign, body in re.findall(r"([+-]?)([^+-]+)", text):
        match = _TERM_RE.match(body)
        if not match or not (match["coef"] or match["x"]):
            raise ValueError(f"cannot parse term {body!r}")
        coef_text = match["coef"]
        if coef_text is None:
            coef = 1
        elif coef_text.startswith("("):
            coef = parse_element(field, coef_text[1:-1].replace(",", ":"))
        elif coef_text.startswith("a"):
            coef = parse_element(field, coef_text)
        else:
            coef = field.from_int(int(coef_text))
        if sign == "-":
            coef = field.neg(coef)
        k = 0 if not match["x"] else int(match["exp"] or 1)
        out = out + Poly.monomial(field, k, coef)
    return out


def prime_poly(field, coeffs: Sequence[int]) -> Poly:
    """Polynomial with integer coefficients reduced into F_p."""
    return Poly(field, [c % field.p for c in coeffs])


def is_irreducible(f: Poly, order: int | None = None) -> bool:
    """Rabin-style test over F_Q (Q = ``order``, default the coefficient field).

    Trivial gcd(f, x^(Q^i) - x) for every i <= deg/2 rules out factors of
    every degree up to deg/2.
    """
    F = f.field
    Q = F.order if order is None else order
    d = f.degree
    if d < 1:
        raise ValueError("degree must be at least 1")
    if d == 1:
        return True
    f = f.monic()
    x = Poly.x(F)
    h = x % f
    for _ in range(d // 2):
        h = powmod(h, Q, f)
        if gcd(f, h - x).degree != 0:
            return False
    return True
