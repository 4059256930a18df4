"""Cyclic codes over GF(q) as q-closed subsets of Z/nZ.

A code is pinned down by its generating set I (the exponents where the
generator polynomial does not vanish); the defining set J is the
complement.  Sets are held as n-bit masks so duals, star products and
BCH runs are word-parallel bit operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

import numpy as np

from . import linalg
from .gf import (
    FieldError,
    field_for_root_of_unity,
    minimal_polynomial,
    poly_divmod,
    poly_mul,
    poly_trim,
    x_pow_n_minus_1,
)

MAX_LENGTH = 1023


class CodeSpecError(ValueError):
    """Malformed textual code spec; carries the offending position."""

    def __init__(self, message: str, pos: int = 0):
        super().__init__(message)
        self.pos = pos


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _check_nq(n: int, q: int):
    if not 1 <= n <= MAX_LENGTH:
        raise ValueError(f"length n={n} out of supported range 1..{MAX_LENGTH}")
    if not _is_prime(q):
        raise ValueError(f"base field size q={q} must be prime")
    if gcd(n, q) != 1:
        raise ValueError(f"gcd(n, q) must be 1, got n={n}, q={q}")


def cyclotomic_coset(s: int, n: int, q: int) -> tuple[int, ...]:
    """Orbit of s under multiplication by q modulo n, sorted."""
    _check_nq(n, q)
    s %= n
    out = {s}
    x = (s * q) % n
    while x != s:
        out.add(x)
        x = (x * q) % n
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def coset_representatives(n: int, q: int) -> tuple[int, ...]:
    """Minimal representatives of all q-cyclotomic cosets mod n, ascending."""
    _check_nq(n, q)
    seen = 0
    reps = []
    for s in range(n):
        if (seen >> s) & 1:
            continue
        reps.append(s)
        for x in cyclotomic_coset(s, n, q):
            seen |= 1 << x
    return tuple(reps)


def coset_mask(s: int, n: int, q: int) -> int:
    m = 0
    for x in cyclotomic_coset(s, n, q):
        m |= 1 << x
    return m


def _mask_bits(mask: int):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def _cyclic_shift(mask: int, i: int, n: int) -> int:
    i %= n
    full = (1 << n) - 1
    return ((mask << i) | (mask >> (n - i))) & full if i else mask


def _negate_mask(mask: int, n: int) -> int:
    out = 0
    for i in _mask_bits(mask):
        out |= 1 << ((n - i) % n)
    return out


@dataclass(frozen=True)
class CyclicCode:
    """A cyclic code (q, n, generating set) with the set as an n-bit mask."""

    q: int
    n: int
    mask: int

    def __post_init__(self):
        _check_nq(self.n, self.q)
        if not 0 <= self.mask < (1 << self.n):
            raise ValueError("generating-set mask out of range")
        rotated = 0
        for i in _mask_bits(self.mask):
            rotated |= 1 << ((i * self.q) % self.n)
        if rotated != self.mask:
            raise ValueError("generating set is not closed under multiplication by q")

    # -- basic views --------------------------------------------------------

    @property
    def dim(self) -> int:
        return self.mask.bit_count()

    @property
    def defining_mask(self) -> int:
        return ((1 << self.n) - 1) ^ self.mask

    def generating_set(self) -> tuple[int, ...]:
        return tuple(_mask_bits(self.mask))

    def defining_set(self) -> tuple[int, ...]:
        return tuple(_mask_bits(self.defining_mask))

    def coset_reps(self) -> tuple[int, ...]:
        """Canonical (minimal) representatives of the cosets inside I."""
        return tuple(
            r for r in coset_representatives(self.n, self.q) if (self.mask >> r) & 1
        )

    def spec_string(self) -> str:
        reps = ",".join(str(r) for r in self.coset_reps())
        return f"q={self.q} n={self.n} cosets={reps}"

    def params(self) -> tuple[int, int]:
        return (self.n, self.dim)

    def __repr__(self):
        return f"CyclicCode[{self.n},{self.dim}]q{self.q}(U{{{','.join(map(str, self.coset_reps()))}}})"

    # -- algebra -------------------------------------------------------------

    def dual(self) -> "CyclicCode":
        """Code with generating set Z/nZ minus the negation of I."""
        full = (1 << self.n) - 1
        return CyclicCode(self.q, self.n, full ^ _negate_mask(self.mask, self.n))

    def star(self, other: "CyclicCode") -> "CyclicCode":
        """Componentwise-product code; generating sets add (Minkowski sum)."""
        if (self.n, self.q) != (other.n, other.q):
            raise ValueError("star product requires matching (n, q)")
        a, b = self.mask, other.mask
        if a.bit_count() > b.bit_count():
            a, b = b, a
        out = 0
        for i in _mask_bits(a):
            out |= _cyclic_shift(b, i, self.n)
        return CyclicCode(self.q, self.n, out)

    def bch_bound(self) -> int:
        """Longest cyclic run of consecutive residues in J, plus one."""
        J = self.defining_mask
        if J == 0:
            return 1
        full = (1 << self.n) - 1
        if J == full:
            return self.n + 1
        doubled = J | (J << self.n)
        run = 0
        m = doubled
        while m:
            m &= m >> 1
            run += 1
        return min(run, self.n) + 1

    # -- polynomial / matrix realizations ------------------------------------

    def generator_polynomial(self, field=None) -> list[int]:
        """Product of the minimal polynomials of the cosets in J."""
        if field is None:
            field = field_for_root_of_unity(self.n, self.q)
        if field.p != self.q or field.group_order % self.n != 0:
            raise FieldError("field does not contain the n-th roots of unity over GF(q)")
        g = [1]
        for r in coset_representatives(self.n, self.q):
            if (self.defining_mask >> r) & 1:
                g = poly_mul(g, minimal_polynomial(cyclotomic_coset(r, self.n, self.q), field, self.n), self.q)
        if len(g) - 1 != self.n - self.dim:
            raise AssertionError("generator polynomial degree mismatch")
        _, rem = poly_divmod(x_pow_n_minus_1(self.n, self.q), g, self.q)
        if poly_trim(rem) != [0]:
            raise AssertionError("generator polynomial does not divide x^n - 1")
        return g

    def generator_matrix(self, field=None) -> np.ndarray:
        """k x n matrix whose rows are the cyclic shifts g, xg, ..., x^(k-1) g."""
        k = self.dim
        g = self.generator_polynomial(field)
        G = np.zeros((k, self.n), dtype=np.uint8)
        for i in range(k):
            for j, c in enumerate(g):
                G[i, (i + j) % self.n] = c
        if k and linalg.rank_mod(G, self.q) != k:
            raise AssertionError("generator matrix rank defect")
        return G

    def contains_word(self, word) -> bool:
        """Membership via the dual generator as a parity check."""
        H = self.dual().generator_matrix()
        word = np.asarray(word, dtype=np.int64) % self.q
        return not np.any((H @ word) % self.q)


def code_from_cosets(reps, n: int, q: int, complement: bool = False) -> CyclicCode:
    """Union of the cyclotomic cosets of the given representatives.

    With complement=True the generating set is everything outside that
    union (the defining-set / complement notation used by some tables).
    """
    _check_nq(n, q)
    m = 0
    for r in reps:
        m |= coset_mask(r, n, q)
    if complement:
        m ^= (1 << n) - 1
    return CyclicCode(q, n, m)


# ---------------------------------------------------------------------------
# Textual grammar: "q=<int> n=<int> cosets=<r1,r2,...>" (whitespace-insensitive)
# ---------------------------------------------------------------------------

def parse_code_spec(text: str) -> CyclicCode:
    q = n = None
    reps = None
    pos = 0
    length = len(text)
    while pos < length:
        if text[pos].isspace():
            pos += 1
            continue
        start = pos
        eq = text.find("=", pos)
        if eq < 0:
            raise CodeSpecError(f"expected key=value at position {start}", start)
        key = text[pos:eq].strip()
        vstart = eq + 1
        vend = vstart
        while vend < length and not text[vend].isspace():
            vend += 1
        value = text[vstart:vend]
        if key == "q" or key == "n":
            try:
                num = int(value)
            except ValueError:
                raise CodeSpecError(f"bad integer {value!r} for {key} at position {vstart}", vstart)
            if key == "q":
                q = num
            else:
                n = num
        elif key == "cosets":
            reps = []
            if value:
                offset = vstart
                for part in value.split(","):
                    try:
                        reps.append(int(part))
                    except ValueError:
                        raise CodeSpecError(f"bad coset representative {part!r} at position {offset}", offset)
                    offset += len(part) + 1
        else:
            raise CodeSpecError(f"unknown key {key!r} at position {start}", start)
        pos = vend
    if q is None:
        raise CodeSpecError("missing q=<int>", 0)
    if n is None:
        raise CodeSpecError("missing n=<int>", 0)
    if reps is None:
        raise CodeSpecError("missing cosets=<r1,r2,...>", 0)
    try:
        return code_from_cosets(reps, n, q)
    except ValueError as exc:
        raise CodeSpecError(str(exc), 0)
