"""Exact arithmetic in GF(p^s) via discrete-log tables.

Nonzero elements are stored as discrete logs of a fixed primitive element
alpha; zero carries a distinguished marker.  Multiplication and inversion
are table lookups, addition goes through an antilog/log round trip.

The primitive polynomial for p=2 is pinned per extension degree so that
every run builds the same field (different choices give permutation
equivalent codes downstream; pinning keeps outputs reproducible).
"""

from __future__ import annotations

from functools import lru_cache

MAX_FIELD_SIZE = 1 << 20

# Primitive polynomials over GF(2), bit i = coefficient of x^i.
PRIMITIVE_POLY_GF2 = {
    1: 0b11,                 # x + 1
    2: 0b111,                # x^2 + x + 1
    3: 0b1011,               # x^3 + x + 1
    4: 0b10011,              # x^4 + x + 1
    5: 0b100101,             # x^5 + x^2 + 1
    6: 0b1000011,            # x^6 + x + 1
    7: 0b10001001,           # x^7 + x^3 + 1
    8: 0b100011101,          # x^8 + x^4 + x^3 + x^2 + 1
    9: 0b1000010001,         # x^9 + x^4 + 1
    10: 0b10000001001,       # x^10 + x^3 + 1
    11: 0b100000000101,      # x^11 + x^2 + 1
    12: 0b1000001010011,     # x^12 + x^6 + x^4 + x + 1
    13: 0b10000000011011,    # x^13 + x^4 + x^3 + x + 1
    14: 0b100010001000011,   # x^14 + x^10 + x^6 + x + 1
    15: 0b1000000000000011,  # x^15 + x + 1
    16: 0b10001000000001011, # x^16 + x^12 + x^3 + x + 1
}

ZERO_LOG = -1


class FieldError(ValueError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def multiplicative_order(q: int, n: int) -> int:
    """Smallest s >= 1 with q^s = 1 mod n.  Requires gcd(q, n) = 1."""
    if n == 1:
        return 1
    acc = q % n
    s = 1
    while acc != 1:
        acc = (acc * q) % n
        s += 1
        if s > n:
            raise FieldError(f"q={q} is not invertible mod n={n}")
    return s


class FieldElement:
    """Element of a GF instance: zero or a power of the primitive element."""

    __slots__ = ("field", "log")

    def __init__(self, field: "GF", log: int):
        self.field = field
        self.log = log

    def is_zero(self) -> bool:
        return self.log == ZERO_LOG

    def as_int(self) -> int:
        """Canonical integer representation (base-p digit packing)."""
        if self.log == ZERO_LOG:
            return 0
        return self.field.antilog[self.log]

    def in_prime_field(self):
        """The prime-field value of this element, or None if it has none."""
        return self.field._prime_rep.get(self.as_int())

    def _check(self, other: "FieldElement"):
        if self.field is not other.field:
            raise FieldError("operands belong to different fields")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        rep = self.field._rep_add(self.as_int(), other.as_int())
        return self.field.from_int(rep)

    def __neg__(self) -> "FieldElement":
        return self.field.from_int(self.field._rep_neg(self.as_int()))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        return self + (-other)

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        if self.log == ZERO_LOG or other.log == ZERO_LOG:
            return self.field.zero()
        return FieldElement(self.field, (self.log + other.log) % self.field.group_order)

    def inverse(self) -> "FieldElement":
        if self.log == ZERO_LOG:
            raise FieldError("zero has no multiplicative inverse")
        return FieldElement(self.field, (-self.log) % self.field.group_order)

    def __pow__(self, e: int) -> "FieldElement":
        if self.log == ZERO_LOG:
            if e > 0:
                return self
            if e == 0:
                return self.field.one()
            raise FieldError("negative power of zero")
        return FieldElement(self.field, (self.log * e) % self.field.group_order)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldElement)
            and self.field is other.field
            and self.log == other.log
        )

    def __hash__(self):
        return hash((id(self.field), self.log))

    def __repr__(self):
        if self.log == ZERO_LOG:
            return "0"
        if self.log == 0:
            return "1"
        return f"a^{self.log}"


class GF:
    """GF(p^s) with log/antilog tables over a primitive polynomial.

    antilog[i] is the packed representation of alpha^i; log inverts it.
    Construction verifies that alpha generates the full multiplicative
    group, so a non-primitive polynomial is rejected.
    """

    def __init__(self, p: int, s: int, primitive_poly=None):
        if not _is_prime(p):
            raise FieldError(f"characteristic {p} is not prime")
        if s < 1:
            raise FieldError("extension degree must be positive")
        order = p**s
        if order > MAX_FIELD_SIZE:
            raise FieldError(f"field too large: {p}^{s} exceeds {MAX_FIELD_SIZE}")
        self.p = p
        self.s = s
        self.order = order
        self.group_order = order - 1
        if primitive_poly is None:
            primitive_poly = self._default_poly(p, s)
        self.poly = tuple(primitive_poly)
        if len(self.poly) != s + 1 or self.poly[-1] % p == 0:
            raise FieldError("primitive polynomial must be monic of degree s")
        self._build_tables()
        # packed rep -> prime-field value, for coefficients of minimal polynomials
        self._prime_rep = {0: 0}
        acc = self.zero()
        one = self.one()
        for c in range(1, p):
            acc = acc + one
            self._prime_rep[acc.as_int()] = c

    @staticmethod
    def _default_poly(p, s):
        if p == 2:
            if s not in PRIMITIVE_POLY_GF2:
                raise FieldError(f"no built-in primitive polynomial for GF(2^{s})")
            mask = PRIMITIVE_POLY_GF2[s]
            return [(mask >> i) & 1 for i in range(s + 1)]
        return _search_primitive_poly(p, s)

    def _build_tables(self):
        p, s, order = self.p, self.s, self.order
        self.antilog = [0] * self.group_order
        self.log = [ZERO_LOG] * order
        cur = [0] * s
        cur[0] = 1  # alpha^0
        for i in range(self.group_order):
            rep = _pack(cur, p)
            if rep == 1 and i > 0:
                raise FieldError("polynomial is not primitive (alpha order too small)")
            if self.log[rep] != ZERO_LOG:
                raise FieldError("polynomial is not primitive (repeated element)")
            self.antilog[i] = rep
            self.log[rep] = i
            cur = self._mul_by_x(cur)
        if _pack(cur, p) != 1:
            raise FieldError("polynomial is not primitive (alpha^(p^s-1) != 1)")

    def _mul_by_x(self, digits):
        p, s = self.p, self.s
        carry = digits[-1]
        out = [0] + digits[:-1]
        if carry:
            # subtract carry * (poly without leading term); poly is monic
            for i in range(s):
                out[i] = (out[i] - carry * self.poly[i]) % p
        return out

    def _rep_add(self, r1: int, r2: int) -> int:
        if self.p == 2:
            return r1 ^ r2
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.s):
            out += ((r1 % p + r2 % p) % p) * mult
            r1 //= p
            r2 //= p
            mult *= p
        return out

    def _rep_neg(self, r: int) -> int:
        if self.p == 2:
            return r
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.s):
            out += ((-(r % p)) % p) * mult
            r //= p
            mult *= p
        return out

    def zero(self) -> FieldElement:
        return FieldElement(self, ZERO_LOG)

    def one(self) -> FieldElement:
        return FieldElement(self, 0)

    def alpha(self, power: int = 1) -> FieldElement:
        return FieldElement(self, power % self.group_order)

    def from_int(self, rep: int) -> FieldElement:
        if rep == 0:
            return self.zero()
        return FieldElement(self, self.log[rep])

    def __repr__(self):
        return f"GF({self.p}^{self.s})"


def _pack(digits, p):
    out = 0
    for d in reversed(digits):
        out = out * p + d
    return out


def _search_primitive_poly(p, s):
    """Brute-force search for a primitive polynomial of degree s over GF(p)."""
    # iterate constant-term-nonzero monic polynomials in lexicographic order
    for mask in range(p**s):
        digits = []
        m = mask
        for _ in range(s):
            digits.append(m % p)
            m //= p
        if digits[0] == 0:
            continue
        candidate = digits + [1]
        try:
            GF(p, s, candidate)
        except FieldError:
            continue
        return candidate
    raise FieldError(f"no primitive polynomial found for GF({p}^{s})")


@lru_cache(maxsize=None)
def field_build(p: int, s: int) -> GF:
    """Build (and cache) GF(p^s) with the pinned primitive polynomial."""
    return GF(p, s)


@lru_cache(maxsize=None)
def field_for_root_of_unity(n: int, q: int) -> GF:
    """Smallest-degree extension of GF(q) containing the n-th roots of unity."""
    s = multiplicative_order(q, n)
    return field_build(q, s)


# ---------------------------------------------------------------------------
# Polynomials over the prime field, coefficient lists lowest degree first.
# ---------------------------------------------------------------------------

def poly_trim(a):
    a = list(a)
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] = (out[i + j] + ai * bj) % p
    return poly_trim(out)


def poly_divmod(a, b, p):
    a = list(a)
    b = poly_trim(b)
    if b == [0]:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(b[-1], p - 2, p) if p > 2 else b[-1]
    quot = [0] * max(1, len(a) - len(b) + 1)
    while len(poly_trim(a)) >= len(b) and poly_trim(a) != [0]:
        a = poly_trim(a)
        if len(a) < len(b):
            break
        shift = len(a) - len(b)
        factor = (a[-1] * inv_lead) % p
        quot[shift] = factor
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - factor * bi) % p
    return poly_trim(quot), poly_trim(a)


def x_pow_n_minus_1(n, p):
    out = [0] * (n + 1)
    out[0] = (-1) % p
    out[n] = 1
    return out


def minimal_polynomial(coset, field: GF, n: int):
    """Product of (x - beta^j) over a q-cyclotomic coset, beta = alpha^((p^s-1)/n).

    The result has all coefficients in the prime field; that is checked and
    the polynomial is returned as a plain coefficient list over GF(p).
    """
    p = field.p
    if field.group_order % n != 0:
        raise FieldError(f"n={n} does not divide {p}^{field.s} - 1")
    coset = sorted(x % n for x in coset)
    for j in coset:
        if (j * p) % n not in coset:
            raise FieldError(f"set {coset} is not closed under multiplication by {p} mod {n}")
    step = field.group_order // n
    acc = [field.one()]
    for j in coset:
        beta_j = field.alpha(step * j)
        # multiply acc by (x - beta^j)
        nxt = [field.zero() for _ in range(len(acc) + 1)]
        for i, c in enumerate(acc):
            nxt[i + 1] = nxt[i + 1] + c
            nxt[i] = nxt[i] + (-(beta_j) * c)
        acc = nxt
    coeffs = []
    for c in acc:
        v = c.in_prime_field()
        if v is None:
            raise FieldError("minimal polynomial has a coefficient outside the prime field")
        coeffs.append(v)
    return poly_trim(coeffs)
