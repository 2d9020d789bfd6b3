"""Exact linear algebra over a finite field and linear codes.

Matrices are 2-D numpy int64 arrays whose entries are element encodings of
some :class:`~goppabch.field.GF`; every function takes that field
explicitly.  Codes live over F_q, using the base-field encoding of the
tower (see :class:`~goppabch.field.FieldTower`).
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field as dc_field
from functools import cached_property

import numpy as np

DEFAULT_BUDGET = 1 << 22


def rref(F, M) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns.

    Pivoting takes the leftmost column with a nonzero entry at or below the
    current row, and the topmost such entry.
    """
    R = np.array(M, dtype=np.int64, copy=True)
    if R.ndim != 2:
        raise ValueError("expected a 2-D matrix")
    rows, cols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        lead = int(R[r, c])
        if lead != 1:
            R[r, c:] = F.vmul(R[r, c:], F.inv(lead))
        others = np.flatnonzero(R[:, c])
        others = others[others != r]
        if others.size:
            factors = R[others, c][:, None]
            R[others, c:] = F.vsub(R[others, c:], F.vmul(factors, R[r, c:][None, :]))
        pivots.append(c)
        r += 1
    return R, pivots


def rref_rank(F, M) -> tuple[np.ndarray, int]:
    R, pivots = rref(F, M)
    return R, len(pivots)


def rank(F, M) -> int:
    return len(rref(F, M)[1])


def row_basis(F, M) -> np.ndarray:
    """Nonzero rows of the RREF (a canonical basis of the row space)."""
    R, pivots = rref(F, M)
    return R[: len(pivots)]


def null_space(F, M) -> np.ndarray:
    """Rows spanning {x : M x^T = 0}, one per free column."""
    M = np.asarray(M, dtype=np.int64)
    cols = M.shape[1]
    R, pivots = rref(F, M)
    free = [c for c in range(cols) if c not in set(pivots)]
    N = np.zeros((len(free), cols), dtype=np.int64)
    if not free:
        return N
    N[np.arange(len(free)), free] = 1
    if pivots:
        N[:, pivots] = F.vneg(R[: len(pivots)][:, free]).T
    return N


def matmul(F, A, B) -> np.ndarray:
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    if F.degree == 1:
        return (A @ B) % F.p
    return F.vsum(F.vmul(A[:, :, None], B[None, :, :]), axis=1)


def matvec(F, A, x) -> np.ndarray:
    A = np.asarray(A, dtype=np.int64)
    x = np.asarray(x, dtype=np.int64)
    if F.degree == 1:
        return (A @ x) % F.p
    return F.vsum(F.vmul(A, x[None, :]), axis=1)


def same_row_space(F, A, B) -> bool:
    a, b = row_basis(F, A), row_basis(F, B)
    return a.shape == b.shape and bool(np.array_equal(a, b))


def subfield_expand(ctx, M) -> np.ndarray:
    """Replace each row over F_{q^m} by its m rows of F_q coordinates.

    The result uses base-field encodings and has shape (rows * m, cols);
    c over F_q satisfies M c^T = 0 iff it does for the expansion.
    """
    M = np.asarray(M, dtype=np.int64)
    coords = ctx.fq_coordinates[M]  # (rows, cols, m)
    rows, cols = M.shape
    return coords.transpose(0, 2, 1).reshape(rows * ctx.m, cols)


def weight(c) -> int:
    return int(np.count_nonzero(c))


@dataclass(eq=False)
class LinearCode:
    """A linear [n, k] code over F_q given by a full-rank parity-check matrix."""

    field: object
    parity: np.ndarray
    n: int
    designed_distance: int
    provenance: str = ""
    meta: dict = dc_field(default_factory=dict)

    @classmethod
    def from_parity(cls, F, H, designed_distance: int, provenance: str = "", **meta):
        H = np.asarray(H, dtype=np.int64)
        return cls(F, row_basis(F, H), H.shape[1], designed_distance, provenance, meta)

    @property
    def k(self) -> int:
        return self.n - self.parity.shape[0]

    @property
    def q(self) -> int:
        return self.field.order

    @cached_property
    def generator(self) -> np.ndarray:
        return null_space(self.field, self.parity)

    def syndrome(self, c) -> np.ndarray:
        return matvec(self.field, self.parity, c)

    def contains(self, c) -> bool:
        c = np.asarray(c, dtype=np.int64)
        if c.shape != (self.n,):
            raise ValueError(f"expected a vector of length {self.n}")
        return not self.syndrome(c).any()

    def params(self) -> tuple[int, int]:
        return self.n, self.k

    def __repr__(self) -> str:
        return (f"LinearCode([{self.n}, {self.k}]_{self.q}, "
                f"designed={self.designed_distance}, {self.provenance!r})")


@dataclass(frozen=True)
class DistanceResult:
    """Minimum distance as a certified interval; exact when lower == upper."""

    lower: int
    upper: int
    method: str
    codeword: np.ndarray | None = None

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    @property
    def value(self) -> int:
        if not self.exact:
            raise ValueError(f"distance only known to lie in [{self.lower}, {self.upper}]")
        return self.lower

    def as_dict(self) -> dict:
        out = {"lower": self.lower, "upper": self.upper, "exact": self.exact,
               "method": self.method}
        if self.exact:
            out["d"] = self.lower
        return out


def budget_from_env(budget: int | None = None) -> int:
    if budget is not None:
        return budget
    return int(os.environ.get("GOPPA_BUDGET", DEFAULT_BUDGET))


def prime_expansion(F, G) -> np.ndarray:
    """F_p-generator of an F_q-linear code: rows g * y^a (a < s) in F_p digits.

    Each codeword symbol becomes s digits, so a row has n*s entries.
    """
    G = np.asarray(G, dtype=np.int64)
    s, p = F.degree, F.p
    pw = p ** np.arange(s, dtype=np.int64)
    rows = [F.vmul(G, int(pw[a])) for a in range(s)]
    stacked = np.concatenate(rows, axis=0)  # (k*s, n)
    digits = (stacked[..., None] // pw) % p
    return digits.reshape(stacked.shape[0], -1)


def _weights(msgs: np.ndarray, Gp: np.ndarray, p: int, n: int, s: int) -> np.ndarray:
    cw = np.rint(msgs @ Gp).astype(np.int64) % p
    return np.count_nonzero(cw.reshape(len(msgs), n, s), axis=2).sum(axis=1), cw


def enumerate_min_weight(code: LinearCode, stop_at: int | None = None,
                         chunk: int = 1 << 15, reverse: bool = False):
    """Smallest nonzero codeword weight by visiting every message.

    Messages are F_p digit vectors taken in base-p counting order (or the
    reverse), split into partitions by leading digit.  Returns
    ``(weight, codeword)``; stops early once ``stop_at`` is reached.
    """
    F = code.field
    p, s, n = F.p, F.degree, code.n
    G = code.generator
    if G.shape[0] == 0:
        return None, None
    Gp = prime_expansion(F, G).astype(np.float64)
    K = Gp.shape[0]
    total = p**K
    pw = p ** np.arange(K - 1, -1, -1, dtype=np.int64)
    best, best_word = n + 1, None
    part = total // p
    partitions = range(p - 1, -1, -1) if reverse else range(p)
    for lead in partitions:
        lo, hi = lead * part, (lead + 1) * part
        starts = range(hi - chunk, lo - chunk, -chunk) if reverse else range(lo, hi, chunk)
        for start in starts:
            a, b = max(start, lo), min(start + chunk, hi)
            idx = np.arange(a, b, dtype=np.int64)
            idx = idx[idx != 0]
            if not idx.size:
                continue
            msgs = ((idx[:, None] // pw) % p).astype(np.float64)
            w, cw = _weights(msgs, Gp, p, n, s)
            j = int(np.argmin(w))
            if w[j] < best:
                best = int(w[j])
                digits = cw[j].reshape(n, s)
                best_word = digits @ (p ** np.arange(s, dtype=np.int64))
            if stop_at is not None and best <= stop_at:
                return best, best_word
    return best, best_word


def min_distance(code: LinearCode, budget: int | None = None, witness=None) -> DistanceResult:
    """Exact distance by enumeration when q^k fits the budget, else an interval.

    The lower end is the designed distance (a proven bound for every
    construction in this package).  The upper end is the weight of
    ``witness`` when one is supplied, otherwise the Singleton bound.
    """
    budget = budget_from_env(budget)
    if code.k == 0:
        return DistanceResult(code.n + 1, code.n + 1, "trivial")
    if code.q**code.k <= budget:
        d, word = enumerate_min_weight(code, stop_at=code.designed_distance)
        if d < code.designed_distance:
            raise AssertionError(
                f"codeword of weight {d} below the designed distance {code.designed_distance}")
        return DistanceResult(d, d, "enumeration", word)
    lower = code.designed_distance
    if witness is not None:
        witness = np.asarray(witness, dtype=np.int64)
        if not code.contains(witness) or not witness.any():
            raise ValueError("witness is not a nonzero codeword")
        return DistanceResult(lower, weight(witness), "witness", witness)
    return DistanceResult(lower, code.n - code.k + 1, "bounds")


def format_matrix(ctx, M) -> str:
    """One row per line, entries as comma-separated digit strings."""
    from .field import format_element

    return "\n".join(" ".join(format_element(ctx, int(v)) for v in row) for row in np.asarray(M))


def weight_distribution(code: LinearCode, budget: int | None = None) -> dict[int, int]:
    """Number of codewords of each weight, by visiting all q^k codewords."""
    budget = budget_from_env(budget)
    if code.q**code.k > budget:
        raise ValueError(f"q^k = {code.q}^{code.k} exceeds the budget {budget}")
    F = code.field
    p, s, n = F.p, F.degree, code.n
    counts = np.zeros(n + 1, dtype=np.int64)
    if code.k == 0:
        return {0: 1}
    Gp = prime_expansion(F, code.generator).astype(np.float64)
    K = Gp.shape[0]
    pw = p ** np.arange(K - 1, -1, -1, dtype=np.int64)
    total = p**K
    for start in range(0, total, 1 << 15):
        idx = np.arange(start, min(start + (1 << 15), total), dtype=np.int64)
        msgs = ((idx[:, None] // pw) % p).astype(np.float64)
        w, _ = _weights(msgs, Gp, p, n, s)
        counts += np.bincount(w, minlength=n + 1)
    return {int(i): int(c) for i, c in enumerate(counts) if c}
