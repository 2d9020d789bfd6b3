"""Finite field arithmetic for the tower F_p < F_q < F_{q^m}.

Elements are plain Python ints.  An element of F_{p^D} with coordinates
``(c_0, ..., c_{D-1})`` in the polynomial basis of the modulus is encoded as
``c_0 + c_1 p + ... + c_{D-1} p^{D-1}``, so the prime subfield F_p is the set
of ints ``0 .. p-1`` in every field of characteristic p.

Multiplication goes through exp/log tables and addition through a Zech
logarithm table (XOR when p = 2).  Each field also offers numpy versions of
the operations (``vadd``, ``vmul`` ...) used by the matrix code.
"""

from __future__ import annotations

import itertools
import math
import re
from functools import cached_property

import numpy as np

MAX_TABLE_ORDER = 1 << 24
_FULL_TABLE_ORDER = 256


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _solve_mod_p(A: np.ndarray, p: int) -> np.ndarray:
    """Inverse of a square matrix over F_p (Gauss-Jordan)."""
    n = A.shape[0]
    M = np.concatenate([A % p, np.eye(n, dtype=np.int64)], axis=1)
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r, col]), None)
        if piv is None:
            raise ValueError("matrix is singular over F_%d" % p)
        M[[col, piv]] = M[[piv, col]]
        M[col] = (M[col] * pow(int(M[col, col]), -1, p)) % p
        for r in range(n):
            if r != col and M[r, col]:
                M[r] = (M[r] - M[r, col] * M[col]) % p
    return M[:, n:]


class GF:
    """The field F_p[x]/(modulus) with a fixed primitive element.

    ``modulus`` is a monic coefficient list, constant term first.  Its
    irreducibility is the caller's responsibility; a reducible modulus is
    detected indirectly because no element of order ``p^D - 1`` exists.
    When ``prim`` is omitted the smallest element in coordinate-lexicographic
    order (constant coordinate most significant) of full order is used.
    """

    def __init__(self, p: int, modulus, prim: int | None = None):
        modulus = [int(c) % p for c in modulus]
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if len(modulus) < 2 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree >= 1")
        self.p = p
        self.modulus = tuple(modulus)
        self.degree = len(modulus) - 1
        self.order = p**self.degree
        if self.order > MAX_TABLE_ORDER:
            raise ValueError("field too large for table arithmetic")
        self._pw = p ** np.arange(self.degree, dtype=np.int64)
        self._xpow = self._reduction_table()
        if prim is None:
            prim = self._find_primitive()
        elif not self._has_full_order(self.digits(prim)):
            raise ValueError("supplied element is not primitive")
        self.prim = int(prim)
        self._build_tables()

    # -- bootstrap arithmetic on digit vectors -------------------------------

    def _reduction_table(self) -> np.ndarray:
        D, p = self.degree, self.p
        rows = np.zeros((max(2 * D - 1, 1), D), dtype=np.int64)
        cur = np.zeros(D, dtype=np.int64)
        cur[0] = 1
        low = np.array(self.modulus[:-1], dtype=np.int64)
        for k in range(rows.shape[0]):
            rows[k] = cur
            top = cur[-1]
            cur = np.roll(cur, 1)
            cur[0] = 0
            cur = (cur - top * low) % p
        return rows

    def _mul_digits(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return (np.convolve(a, b) @ self._xpow) % self.p

    def _pow_digits(self, a: np.ndarray, e: int) -> np.ndarray:
        result = np.zeros(self.degree, dtype=np.int64)
        result[0] = 1
        while e:
            if e & 1:
                result = self._mul_digits(result, a)
            a = self._mul_digits(a, a)
            e >>= 1
        return result

    def _has_full_order(self, d: np.ndarray) -> bool:
        n = self.order - 1
        one = np.zeros(self.degree, dtype=np.int64)
        one[0] = 1
        if not np.array_equal(self._pow_digits(d, n), one):
            return False
        return all(
            not np.array_equal(self._pow_digits(d, n // ell), one)
            for ell in factorize(n)
        )

    def _find_primitive(self) -> int:
        for coords in itertools.product(range(self.p), repeat=self.degree):
            if not any(coords):
                continue
            d = np.array(coords, dtype=np.int64)
            if self._has_full_order(d):
                return int(d @ self._pw)
        raise ValueError("no primitive element: modulus is reducible")

    def _mul_matrix(self, d: np.ndarray) -> np.ndarray:
        """Matrix of y -> d*y acting on digit column vectors."""
        eye = np.eye(self.degree, dtype=np.int64)
        return np.stack([self._mul_digits(d, e) for e in eye], axis=1)

    def _build_tables(self) -> None:
        N, D, p = self.order, self.degree, self.p
        n = N - 1
        block = min(n, 256)
        powers = np.zeros((n, D), dtype=np.int64)
        cur = np.zeros(D, dtype=np.int64)
        cur[0] = 1
        step = self._mul_matrix(self.digits(self.prim))
        for k in range(block):
            powers[k] = cur
            cur = (step @ cur) % p
        if block < n:
            jump = self._mul_matrix(cur).T
            for start in range(block, n, block):
                stop = min(start + block, n)
                powers[start:stop] = (powers[start - block:stop - block] @ jump) % p
        exp = powers @ self._pw
        log = np.full(N, -1, dtype=np.int64)
        log[exp] = np.arange(n)
        if (log[1:] < 0).any():
            raise ValueError("primitive element does not generate the field")
        one_plus = exp + 1 - p * ((exp % p) == p - 1)
        zech = log[one_plus]
        self._exp_arr = np.concatenate([exp, exp])
        self._log_arr = log
        self._zech_arr = zech
        self._exp = self._exp_arr.tolist()
        self._log = log.tolist()
        self._zech = zech.tolist()
        half = 0 if p == 2 else n // 2
        neg = np.zeros(N, dtype=np.int64)
        neg[1:] = exp[(log[1:] + half) % n]
        inv = np.zeros(N, dtype=np.int64)
        inv[1:] = exp[(-log[1:]) % n]
        self._neg_arr, self._inv_arr = neg, inv
        self._neg, self._inv = neg.tolist(), inv.tolist()
        self._add_table = self._mul_table = None
        if D > 1 and N <= _FULL_TABLE_ORDER:
            grid_a, grid_b = np.meshgrid(np.arange(N), np.arange(N), indexing="ij")
            self._add_table = self._vadd_log(grid_a, grid_b)
            self._mul_table = self._vmul_log(grid_a, grid_b)

    # -- representation ------------------------------------------------------

    def digits(self, a: int) -> np.ndarray:
        return (int(a) // self._pw) % self.p

    def coords(self, a: int) -> list[int]:
        return [int(c) for c in self.digits(a)]

    def element(self, coords) -> int:
        coords = list(coords)
        coords = coords + [0] * (self.degree - len(coords))
        if len(coords) != self.degree:
            raise ValueError("too many coordinates")
        return int(np.array([c % self.p for c in coords], dtype=np.int64) @ self._pw)

    @cached_property
    def all_digits(self) -> np.ndarray:
        """Digit vectors of every element, shape (order, degree)."""
        return (np.arange(self.order, dtype=np.int64)[:, None] // self._pw) % self.p

    def lex_elements(self):
        """All elements in coordinate-lexicographic order."""
        for coords in itertools.product(range(self.p), repeat=self.degree):
            yield int(np.array(coords, dtype=np.int64) @ self._pw)

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.degree})"

    # -- scalar arithmetic -----------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if not a:
            return b
        if not b:
            return a
        la = self._log[a]
        z = self._zech[(self._log[b] - la) % (self.order - 1)]
        return 0 if z < 0 else self._exp[la + z]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self._neg[b])

    def mul(self, a: int, b: int) -> int:
        if not a or not b:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return self._inv[a]

    def div(self, a: int, b: int) -> int:
        if not b:
            raise ZeroDivisionError("division by zero")
        if not a:
            return 0
        return self._exp[(self._log[a] - self._log[b]) % (self.order - 1)]

    def pow(self, a: int, e: int) -> int:
        if not a:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.order - 1)]

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    def log(self, a: int) -> int:
        if not a:
            raise ValueError("log of zero")
        return self._log[a]

    def exp(self, k: int) -> int:
        return self._exp[k % (self.order - 1)]

    def from_int(self, c: int) -> int:
        """Image of the integer c in the prime subfield."""
        return c % self.p

    def order_of(self, a: int) -> int:
        """Multiplicative order, using the factorization of p^D - 1."""
        if not a:
            raise ValueError("zero has no multiplicative order")
        n = self.order - 1
        k = n
        for ell, e in factorize(n).items():
            for _ in range(e):
                if self.pow(a, k // ell) == 1:
                    k //= ell
                else:
                    break
        return k

    # -- vectorized arithmetic ---------------------------------------------

    def _vadd_log(self, a, b):
        a, b = np.broadcast_arrays(np.asarray(a), np.asarray(b))
        if self.p == 2:
            return a ^ b
        n = self.order - 1
        la, lb = self._log_arr[a], self._log_arr[b]
        z = self._zech_arr[(lb - la) % n]
        res = np.where(z < 0, 0, self._exp_arr[(la + np.maximum(z, 0)) % n])
        return np.where(a == 0, b, np.where(b == 0, a, res))

    def _vmul_log(self, a, b):
        a, b = np.broadcast_arrays(np.asarray(a), np.asarray(b))
        n = self.order - 1
        res = self._exp_arr[(self._log_arr[a] + self._log_arr[b]) % n]
        return np.where((a == 0) | (b == 0), 0, res)

    def vadd(self, a, b):
        if self.degree == 1:
            return (np.asarray(a) + np.asarray(b)) % self.p
        if self._add_table is not None:
            return self._add_table[a, b]
        return self._vadd_log(a, b)

    def vmul(self, a, b):
        if self.degree == 1:
            return (np.asarray(a) * np.asarray(b)) % self.p
        if self._mul_table is not None:
            return self._mul_table[a, b]
        return self._vmul_log(a, b)

    def vneg(self, a):
        return self._neg_arr[np.asarray(a)]

    def vsub(self, a, b):
        return self.vadd(a, self.vneg(b))

    def vinv(self, a):
        a = np.asarray(a)
        if (a == 0).any():
            raise ZeroDivisionError("inverse of zero")
        return self._inv_arr[a]

    def vsum(self, a, axis: int = -1):
        """Field sum along an axis (coordinates add digit-wise mod p)."""
        a = np.asarray(a)
        if self.degree == 1:
            return a.sum(axis=axis) % self.p
        if self.p == 2:
            return np.bitwise_xor.reduce(a, axis=axis)
        digits = (a[..., None] // self._pw) % self.p
        ax = axis if axis >= 0 else axis - 1
        return (digits.sum(axis=ax) % self.p) @ self._pw

    def vpow(self, a, e: int):
        a = np.asarray(a)
        res = self._exp_arr[(self._log_arr[a] * e) % (self.order - 1)]
        if e == 0:
            return np.ones_like(a)
        return np.where(a == 0, 0, res)


def smallest_irreducible(p: int, degree: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of the given degree.

    Coefficient tuples ``(c_0, ..., c_{degree-1})`` are compared with the
    constant term most significant.
    """
    from .poly import Poly, is_irreducible_over_prime

    prime = prime_field(p)
    for low in itertools.product(range(p), repeat=degree):
        if degree > 1 and low[0] == 0:
            continue
        f = Poly(prime, list(low) + [1])
        if is_irreducible_over_prime(f):
            return tuple(low) + (1,)
    raise AssertionError("unreachable: irreducibles exist in every degree")


_PRIME_FIELDS: dict[int, GF] = {}


def prime_field(p: int) -> GF:
    if p not in _PRIME_FIELDS:
        _PRIME_FIELDS[p] = GF(p, (0, 1))
    return _PRIME_FIELDS[p]


class FieldTower(GF):
    """F_{q^m} with q = p^s, together with its subfield F_q.

    ``base`` is F_q as a standalone :class:`GF` whose int encoding is the
    F_p-coordinate vector in the basis 1, g, ..., g^(s-1), where
    g = prim^((q^m - 1)/(q - 1)) generates F_q^*.  ``to_base`` and
    ``from_base`` translate between the two encodings.
    """

    def __init__(self, p: int, s: int, m: int, modulus=None):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if s < 1 or m < 1:
            raise ValueError("extension degrees must be positive")
        from .poly import Poly, is_irreducible_over_prime

        if modulus is None:
            modulus = smallest_irreducible(p, s * m)
        else:
            modulus = [int(c) % p for c in modulus]
            if len(modulus) != s * m + 1 or modulus[-1] != 1:
                raise ValueError(f"modulus must be monic of degree {s * m}")
            if not is_irreducible_over_prime(Poly(prime_field(p), modulus)):
                raise ValueError("modulus is reducible over F_%d" % p)
        super().__init__(p, modulus)
        self.s, self.m = s, m
        self.q = p**s
        self.norm_exponent = (self.order - 1) // (self.q - 1)
        self.base_gen = self.pow(self.prim, self.norm_exponent)
        self._build_base()

    def _build_base(self) -> None:
        p, s = self.p, self.s
        gens = [self.pow(self.base_gen, p**i) for i in range(s)]
        minpoly = [1]
        for c in gens:
            # multiply by (x - c)
            shifted = [0] + minpoly
            scaled = [self.mul(self.neg(c), a) for a in minpoly] + [0]
            minpoly = [self.add(u, v) for u, v in zip(shifted, scaled)]
        if any(c >= p for c in minpoly):
            raise AssertionError("minimal polynomial of the F_q generator is not over F_p")
        gpow = [self.pow(self.base_gen, a) for a in range(s)]
        from_base = []
        for code in range(self.q):
            acc = 0
            for a, c in enumerate((code // p**i) % p for i in range(s)):
                acc = self.add(acc, self.mul(c, gpow[a]))
            from_base.append(acc)
        base_prim = p if s > 1 else self.base_gen
        self.base = GF(p, minpoly, prim=base_prim)
        self._from_base = np.array(from_base, dtype=np.int64)
        to_base = np.full(self.order, -1, dtype=np.int64)
        to_base[self._from_base] = np.arange(self.q)
        self._to_base = to_base
        self._gpow = gpow

    def __repr__(self) -> str:
        return f"FieldTower(p={self.p}, q={self.q}, m={self.m})"

    # -- subfield ------------------------------------------------------------

    def is_in_base_field(self, x: int) -> bool:
        return self.pow(x, self.q) == x

    def is_in_base_field_star(self, x: int) -> bool:
        return x != 0 and self.pow(x, self.q) == x

    def is_in_subfield(self, x: int, degree: int) -> bool:
        """True iff x lies in F_{p^degree} (requires degree | s*m)."""
        return self.pow(x, self.p**degree) == x

    def to_base(self, x):
        """Tower elements of F_q to base-field codes; raises for non-members."""
        out = self._to_base[np.asarray(x)]
        if (out < 0).any():
            raise ValueError("element not in the base field F_%d" % self.q)
        return out if out.ndim else int(out)

    def from_base(self, c):
        out = self._from_base[np.asarray(c)]
        return out if out.ndim else int(out)

    def base_elements(self) -> list[int]:
        return self._from_base.tolist()

    def norm(self, x: int) -> int:
        """N(x) = x^((q^m-1)/(q-1)), landing in F_q."""
        return self.pow(x, self.norm_exponent)

    def kth_power_test(self, a: int, t: int) -> bool:
        if not a:
            raise ValueError("zero is excluded from the t-th power test")
        if t < 1:
            raise ValueError("t must be positive")
        n = self.order - 1
        return self.pow(a, n // math.gcd(t, n)) == 1

    def kth_root(self, a: int, t: int) -> int | None:
        """Some x with x^t = a, by exhaustive search; None if none exists."""
        for x in range(1, self.order):
            if self.pow(x, t) == a:
                return x
        return None

    # -- F_q coordinates -------------------------------------------------------

    @cached_property
    def _basis_inverse(self) -> np.ndarray:
        rows = []
        for b in range(self.m):
            beta_b = self.pow(self.prim, b)
            for a in range(self.s):
                rows.append(self.digits(self.mul(self._gpow[a], beta_b)))
        return _solve_mod_p(np.array(rows, dtype=np.int64), self.p)

    @cached_property
    def fq_coordinates(self) -> np.ndarray:
        """Base-field codes of each element in the basis 1, prim, ..., prim^(m-1).

        Shape ``(order, m)``; row x holds the F_q coordinates of element x.
        """
        c = (self.all_digits @ self._basis_inverse) % self.p
        c = c.reshape(self.order, self.m, self.s)
        return c @ (self.p ** np.arange(self.s, dtype=np.int64))

    def from_fq_coordinates(self, coords) -> int:
        acc = 0
        for b, code in enumerate(coords):
            acc = self.add(acc, self.mul(self.from_base(int(code)), self.pow(self.prim, b)))
        return acc


def build_field(p: int, s: int = 1, m: int = 1, modulus=None) -> FieldTower:
    """Construct the tower F_p < F_{p^s} < F_{p^(s*m)}."""
    return FieldTower(p, s, m, modulus)


_SPEC_RE = re.compile(r"^\s*(\d+)(?:\^(\d+))?:(\d+)(?::modulus=([\d,\s]+))?\s*$")


def parse_field_spec(text: str) -> FieldTower:
    """Parse ``"p^s:m[:modulus=c0,c1,...]"`` (``"p:m"`` means s = 1)."""
    match = _SPEC_RE.match(text)
    if not match:
        raise ValueError(f"malformed field spec {text!r}")
    p, s, m = int(match[1]), int(match[2] or 1), int(match[3])
    modulus = None
    if match[4]:
        modulus = [int(c) for c in match[4].split(",") if c.strip()]
    return build_field(p, s, m, modulus)


def field_spec(ctx: FieldTower) -> str:
    mod = ",".join(str(c) for c in ctx.modulus)
    return f"{ctx.p}^{ctx.s}:{ctx.m}:modulus={mod}"


def format_element(ctx: GF, x: int) -> str:
    """Comma-separated F_p digits, constant term first."""
    return ",".join(str(c) for c in ctx.coords(x))


def parse_element(ctx: GF, text: str) -> int:
    """Accepts ``a^K`` (power of the primitive element), an int, or
    colon- or comma-separated digits with the constant term first."""
    text = text.strip()
    if text.startswith("a^"):
        return ctx.exp(int(text[2:]))
    if text == "a":
        return ctx.prim
    sep = ":" if ":" in text else ","
    if sep in text:
        return ctx.element(int(c) for c in text.split(sep))
    value = int(text)
    if not 0 <= value < ctx.p:
        raise ValueError(f"integer element {value} outside the prime field")
    return value
