import itertools

import numpy as np
import pytest
from hypothesis import settings
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_add, gf_irreducible_p, gf_mul, gf_pow_mod, gf_rem

from goppabch.field import build_field

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


class OracleField:
    """F_p[x]/(mod) through sympy's dense F_p polynomial routines.

    Element ints use the same digit encoding as the package (constant digit
    least significant) so results can be compared directly.
    """

    def __init__(self, p, modulus):
        self.p = p
        self.D = len(modulus) - 1
        self.order = p**self.D
        self.mod = list(modulus)[::-1]

    def _sym(self, x):
        c = [(x // self.p**i) % self.p for i in range(self.D)][::-1]
        while c and c[0] == 0:
            c = c[1:]
        return c

    def _num(self, f):
        return sum(c * self.p**i for i, c in enumerate(f[::-1]))

    def add(self, a, b):
        return self._num(gf_add(self._sym(a), self._sym(b), self.p, ZZ))

    def mul(self, a, b):
        return self._num(gf_rem(gf_mul(self._sym(a), self._sym(b), self.p, ZZ),
                                self.mod, self.p, ZZ))

    def pow(self, a, e):
        return self._num(gf_pow_mod(self._sym(a), e, self.mod, self.p, ZZ))


def oracle_irreducible(p, coeffs):
    """Constant-first coefficients, via sympy."""
    return bool(gf_irreducible_p([c % p for c in coeffs][::-1], p, ZZ))


def brute_weight_distribution(p, H):
    """Weights of every c in F_p^n with H c = 0 (H over F_p)."""
    H = np.asarray(H)
    n = H.shape[1]
    words = np.array(list(itertools.product(range(p), repeat=n)), dtype=np.int64)
    ok = ((words @ H.T) % p == 0).all(axis=1)
    w, c = np.unique(np.count_nonzero(words[ok], axis=1), return_counts=True)
    return {int(a): int(b) for a, b in zip(w, c)}


@pytest.fixture(scope="session")
def F9():
    return build_field(3, 1, 2)


@pytest.fixture(scope="session")
def F16():
    return build_field(2, 2, 2)


@pytest.fixture(scope="session")
def F25():
    return build_field(5, 1, 2)


@pytest.fixture(scope="session")
def F27():
    return build_field(3, 1, 3)


# -- acceptance summary -------------------------------------------------------

ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[num]
        terminalreporter.write_line(f"criterion {num}: {'PASS' if ok else 'FAIL'}  {detail}")
