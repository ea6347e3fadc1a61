"""Arithmetic in GF(p^s).

Elements are plain integers in ``[0, p^s)``: the element ``sum(c_i * b^i)``
(``b`` a root of the modulus) is stored as ``sum(c_i * p^i)``.  This is also
the JSON encoding.  :class:`FieldElement` wraps an integer together with its
field for operator syntax and mixed-field checks; bulk code in the rest of
the package works on the raw integers through the table-driven methods of
:class:`GF`.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

import numpy as np

__all__ = [
    "GF",
    "FieldElement",
    "is_prime",
    "is_irreducible",
    "find_modulus",
    "poly_eval",
    "poly_mul",
    "poly_from_roots",
    "synthetic_div",
]

MAX_ORDER = 1 << 16
_TABLE_LIMIT = 1024


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _prime_polymod(a: list[int], m: list[int], p: int) -> list[int]:
    """Remainder of ``a`` modulo monic ``m`` over F_p (ascending coefficients)."""
    a = _trim([x % p for x in a])
    dm = len(m) - 1
    while len(a) - 1 >= dm:
        c, shift = a[-1], len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _trim(a)
    return a


def is_irreducible(modulus, p: int) -> bool:
    """True when the monic ``modulus`` (ascending, over F_p) is irreducible.

    Brute force over monic candidate factors of degree up to ``deg // 2``.
    """
    m = [int(c) % p for c in modulus]
    deg = len(m) - 1
    if deg < 1 or m[-1] != 1:
        return False
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _prime_polymod(m, list(low) + [1], p):
                return False
    return True


def find_modulus(p: int, s: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree ``s`` over F_p.

    Candidates are ordered by ``(c_0, c_1, ..., c_{s-1})``.
    """
    for low in itertools.product(range(p), repeat=s):
        cand = list(low) + [1]
        if is_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError("no irreducible polynomial found")  # unreachable for prime p


class GF:
    """The finite field GF(p^s) with a fixed defining modulus."""

    def __init__(self, p: int, s: int = 1, modulus=None, symbol: str = "b"):
        if not isinstance(p, int) or not is_prime(p):
            raise ValueError(f"p must be prime, got {p!r}")
        if not isinstance(s, int) or s < 1:
            raise ValueError(f"s must be a positive integer, got {s!r}")
        if p ** s > MAX_ORDER:
            raise ValueError(f"field order {p}^{s} exceeds the supported maximum {MAX_ORDER}")
        if modulus is None:
            modulus = find_modulus(p, s)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != s + 1 or modulus[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {s}: {modulus}")
        if not is_irreducible(modulus, p):
            raise ValueError(f"modulus {modulus} is reducible over F_{p}")
        self.p, self.s, self.q = p, s, p ** s
        self.modulus = modulus
        self.symbol = symbol
        self._build()

    # -- construction -----------------------------------------------------
    def _build(self):
        p, s, q = self.p, self.s, self.q
        self._pw = [p ** i for i in range(s)]
        self.digits = np.array(
            [[(a // p ** i) % p for i in range(s)] for a in range(q)], dtype=np.int64
        )

        def slow_mul(a, b):
            da, db = self.digits[a], self.digits[b]
            prod = [0] * (2 * s - 1)
            for i in range(s):
                if da[i]:
                    for j in range(s):
                        prod[i + j] += int(da[i]) * int(db[j])
            r = _prime_polymod(prod, list(self.modulus), p)
            return sum(c * self._pw[i] for i, c in enumerate(r))

        # primitive element and exp/log tables
        order = q - 1
        exp = None
        for g in range(1, q):
            powers, x = [1], 1
            for _ in range(order - 1):
                x = slow_mul(x, g)
                if x == 1:
                    break
                powers.append(x)
            if len(powers) == order:
                exp = powers
                break
        assert exp is not None
        self.primitive = exp[1] if order > 1 else 1
        self._exp = exp + exp  # doubled to skip a modulo in mul
        self._log = [0] * q
        for i, x in enumerate(exp):
            self._log[x] = i

        if q <= _TABLE_LIMIT:
            dig = self.digits
            summed = (dig[:, None, :] + dig[None, :, :]) % p
            add = summed @ np.array(self._pw, dtype=np.int64)
            mul = np.zeros((q, q), dtype=np.int64)
            lg = np.array(self._log)
            ex = np.array(self._exp)
            mul[1:, 1:] = ex[lg[1:, None] + lg[None, 1:]]
            self.add_table = add
            self.mul_table = mul
            self._add = add.tolist()
            self._mul = mul.tolist()
        else:
            self.add_table = self.mul_table = None
            self._add = self._mul = None
        self.neg_table = np.array(
            [int(((-self.digits[a]) % p) @ np.array(self._pw)) for a in range(q)], dtype=np.int64
        )
        self._neg = self.neg_table.tolist()
        self._inv = [0] + [self._exp[(order - self._log[a]) % order] for a in range(1, q)]

    # -- identity ---------------------------------------------------------
    def __eq__(self, other):
        return isinstance(other, GF) and (self.p, self.s, self.modulus) == (
            other.p,
            other.s,
            other.modulus,
        )

    def __hash__(self):
        return hash((self.p, self.s, self.modulus))

    def __repr__(self):
        return f"GF({self.p}, {self.s}, modulus={list(self.modulus)})"

    def __call__(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.field != self:
                raise ValueError("element belongs to a different field")
            return value
        return FieldElement(self, self.check(value))

    def check(self, a) -> int:
        a = int(a)
        if not 0 <= a < self.q:
            raise ValueError(f"{a} is not an element index of GF({self.q})")
        return a

    @property
    def characteristic(self) -> int:
        return self.p

    zero = 0
    one = 1

    def elements(self) -> range:
        return range(self.q)

    def from_coeffs(self, coeffs) -> int:
        """Element ``sum(c_i b^i)`` from its coefficient vector (length <= s)."""
        coeffs = list(coeffs)
        if len(coeffs) > self.s:
            raise ValueError("too many coefficients")
        return sum((int(c) % self.p) * self._pw[i] for i, c in enumerate(coeffs))

    def coeffs(self, a: int) -> list[int]:
        return [int(c) for c in self.digits[a]]

    def scalar(self, n: int) -> int:
        """The integer ``n`` mapped into the prime subfield."""
        return n % self.p

    # -- arithmetic on integer encodings ------------------------------------
    def add(self, a: int, b: int) -> int:
        if self._add is not None:
            return self._add[a][b]
        if self.p == 2:
            return a ^ b
        return int(((self.digits[a] + self.digits[b]) % self.p) @ self._pw)

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self._neg[b])

    def mul(self, a: int, b: int) -> int:
        if self._mul is not None:
            return self._mul[a][b]
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self._inv[a]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("zero has no inverse")
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def is_zero(self, a: int) -> bool:
        return a == 0

    def is_unit(self, a: int) -> bool:
        return a != 0

    def log(self, a: int) -> int:
        """Discrete log base :attr:`primitive`."""
        if a == 0:
            raise ValueError("log of zero")
        return self._log[a]

    # -- Frobenius ----------------------------------------------------------
    def _check_t(self, t: int):
        if not isinstance(t, (int, np.integer)) or not 1 <= t <= self.s:
            raise ValueError(f"Frobenius power t must lie in [1, {self.s}], got {t!r}")

    def frobenius(self, a: int, t: int = 1) -> int:
        """``a ** (p ** t)`` for ``1 <= t <= s``."""
        self._check_t(t)
        return self.frobenius_power(a, t)

    def frobenius_power(self, a: int, k: int) -> int:
        """``a ** (p ** k)`` for any integer ``k >= 0`` (exponent taken mod s)."""
        k %= self.s
        if k == 0 or a == 0:
            return a
        return self._exp[(self._log[a] * self.p ** k) % (self.q - 1)]

    def frobenius_table(self, k: int) -> np.ndarray:
        return self._frob_tables[k % self.s]

    @cached_property
    def _frob_tables(self):
        return [
            np.array([self.frobenius_power(a, k) for a in range(self.q)], dtype=np.int64)
            for k in range(self.s)
        ]

    def frobenius_order(self, t: int) -> int:
        """Order ``s / t`` of ``a -> a^(p^t)``; ``t`` must divide ``s``."""
        self._check_t(t)
        if self.s % t:
            raise ValueError(f"t={t} does not divide s={self.s}")
        return self.s // t

    # skew-polynomial coefficient interface (shared with Ring)
    def autom_order(self, autom) -> int:
        if autom.kind == "id":
            return 1
        if autom.kind == "theta":
            return self.frobenius_order(autom.t)
        raise ValueError(f"{autom} is not an automorphism of GF({self.q})")

    def twist(self, a: int, autom, k: int = 1) -> int:
        """Apply ``autom ** k`` to ``a``."""
        if autom.kind == "id":
            return a
        return self.frobenius_power(a, autom.t * k)

    def in_subfield(self, a: int, t: int) -> bool:
        """True when ``a`` lies in GF(p^t), i.e. is fixed by the t-th Frobenius power."""
        return self.frobenius_power(a, t) == a

    # -- vectorised helpers (numpy integer arrays) ----------------------------
    def vadd(self, a, b):
        if self.add_table is not None:
            return self.add_table[a, b]
        if self.p == 2:
            return np.bitwise_xor(a, b)
        return ((self.digits[a] + self.digits[b]) % self.p) @ np.array(self._pw)

    def vmul(self, a, b):
        if self.mul_table is not None:
            return self.mul_table[a, b]
        a, b = np.broadcast_arrays(np.asarray(a), np.asarray(b))
        ex, lg = np.array(self._exp), np.array(self._log)
        out = ex[lg[a] + lg[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def vneg(self, a):
        return self.neg_table[a]

    # -- display --------------------------------------------------------------
    def format(self, a: int) -> str:
        """Human-readable element: symmetric residue in the prime subfield,
        otherwise a power of the modulus root (or its coefficient form)."""
        if a < self.p:
            return str(a if a <= self.p // 2 else a - self.p)
        root = self.p  # index of b itself
        if self.s > 1 and self._log[root] != 0 and np.gcd(self._log[root], self.q - 1) == 1:
            # b is primitive: write a = b^k
            k = (self._log[a] * pow(self._log[root], -1, self.q - 1)) % (self.q - 1)
            return self.symbol if k == 1 else f"{self.symbol}^{k}"
        terms = []
        for i, c in enumerate(self.coeffs(a)):
            if c:
                mono = "" if i == 0 else (self.symbol if i == 1 else f"{self.symbol}^{i}")
                cs = str(c if c <= self.p // 2 else c - self.p)
                terms.append(cs if not mono else (mono if cs == "1" else f"{cs}{mono}"))
        return "(" + "+".join(terms) + ")"

    # -- polynomials over this field -------------------------------------------
    def roots_of(self, poly) -> list[int]:
        """All roots in F_q by exhaustive evaluation, repeated by multiplicity.

        Multiplicity is found by repeated synthetic division by ``(x - r)``.
        """
        poly = _trim([self.check(c) for c in poly])
        if not poly:
            raise ValueError("the zero polynomial has every element as a root")
        roots = []
        for r in range(self.q):
            cur = poly
            while len(cur) > 1:
                quo, rem = synthetic_div(self, cur, r)
                if rem != 0:
                    break
                roots.append(r)
                cur = quo
        return roots


def poly_eval(field: GF, poly, x: int) -> int:
    acc = 0
    for c in reversed(list(poly)):
        acc = field.add(field.mul(acc, x), c)
    return acc


def poly_mul(field: GF, a, b) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = field.add(out[i + j], field.mul(x, y))
    return _trim(out)


def poly_from_roots(field: GF, roots) -> list[int]:
    """Monic ``prod (x - r)`` as an ascending coefficient list."""
    out = [1]
    for r in roots:
        out = poly_mul(field, out, [field.neg(r), 1])
    return out


def synthetic_div(field: GF, poly, r: int) -> tuple[list[int], int]:
    """Divide ``poly`` by ``(x - r)``; returns ``(quotient, remainder)``."""
    poly = list(poly)
    if len(poly) <= 1:
        return [], (poly[0] if poly else 0)
    quo = [0] * (len(poly) - 1)
    acc = poly[-1]
    for i in range(len(poly) - 2, -1, -1):
        quo[i] = acc
        acc = field.add(poly[i], field.mul(acc, r))
    return quo, acc


@dataclass(frozen=True)
class FieldElement:
    """A field element with operator syntax; operands must share a field."""

    field: GF
    value: int

    def _other(self, other) -> int:
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.field != self.field:
            raise ValueError("operands belong to different fields")
        return other.value

    def __add__(self, other):
        b = self._other(other)
        return b if b is NotImplemented else FieldElement(self.field, self.field.add(self.value, b))

    def __sub__(self, other):
        b = self._other(other)
        return b if b is NotImplemented else FieldElement(self.field, self.field.sub(self.value, b))

    def __mul__(self, other):
        b = self._other(other)
        return b if b is NotImplemented else FieldElement(self.field, self.field.mul(self.value, b))

    def __truediv__(self, other):
        b = self._other(other)
        return b if b is NotImplemented else FieldElement(self.field, self.field.div(self.value, b))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inv(self):
        return FieldElement(self.field, self.field.inv(self.value))

    def frobenius(self, t: int = 1):
        return FieldElement(self.field, self.field.frobenius(self.value, t))

    @property
    def coeffs(self) -> list[int]:
        return self.field.coeffs(self.value)

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return self.field.format(self.value)
