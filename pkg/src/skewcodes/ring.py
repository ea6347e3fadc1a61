"""The ring R = F_q[u,v] / <f(u), g(v), uv - vu> with f, g split and squarefree.

Elements are held in CRT coordinates: ``a_ij = r(alpha_i, beta_j)`` for the
roots ``alpha_i`` of f and ``beta_j`` of g, flattened with i outer and j
inner.  The u,v-polynomial form is a view computed through the Lagrange
idempotents ``eps_i(u)``, ``gam_j(v)`` and ``eta_ij = eps_i gam_j``.

Bivariate polynomials are nested lists ``table[a][b]`` holding the
coefficient of ``u^a v^b``.
"""
from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass

import numpy as np

from .gf import GF, poly_eval, poly_from_roots

__all__ = ["Ring", "RingElement"]


def _lagrange_basis(field: GF, roots: list[int]) -> list[list[int]]:
    """Coefficient lists of the Lagrange polynomials for ``roots``.

    For a single root the basis is the constant 1.
    """
    if len(roots) <= 1:
        return [[1]]
    out = []
    for i, ri in enumerate(roots):
        others = roots[:i] + roots[i + 1:]
        num = poly_from_roots(field, others)
        den = 1
        for r in others:
            den = field.mul(den, field.sub(ri, r))
        dinv = field.inv(den)
        out.append([field.mul(c, dinv) for c in num])
    return out


class Ring:
    """Handle for R built from the root lists of f and g."""

    def __init__(self, field: GF, f_roots, g_roots):
        f_roots = [field.check(r) for r in f_roots]
        g_roots = [field.check(r) for r in g_roots]
        if not f_roots or not g_roots:
            raise ValueError("f and g need at least one root each")
        for name, roots in (("f", f_roots), ("g", g_roots)):
            if len(set(roots)) != len(roots):
                raise ValueError(f"{name} has repeated roots {roots}")
        if len(f_roots) == 1 and len(g_roots) == 1:
            warnings.warn("k = l = 1: the ring is just F_q", stacklevel=2)
        self.field = field
        self.f_roots, self.g_roots = tuple(f_roots), tuple(g_roots)
        self.k, self.l = len(f_roots), len(g_roots)
        self.kl = self.k * self.l
        self.f_poly = poly_from_roots(field, f_roots)
        self.g_poly = poly_from_roots(field, g_roots)
        self.eps = _lagrange_basis(field, list(f_roots))
        self.gam = _lagrange_basis(field, list(g_roots))
        self.zero = RingElement(self, (0,) * self.kl)
        self.one = RingElement(self, (1,) * self.kl)

    # -- identity ---------------------------------------------------------
    def __eq__(self, other):
        return isinstance(other, Ring) and (self.field, self.f_roots, self.g_roots) == (
            other.field,
            other.f_roots,
            other.g_roots,
        )

    def __hash__(self):
        return hash((self.field, self.f_roots, self.g_roots))

    def __repr__(self):
        return f"Ring({self.field!r}, f_roots={list(self.f_roots)}, g_roots={list(self.g_roots)})"

    @property
    def size(self) -> int:
        return self.field.q ** self.kl

    @property
    def characteristic(self) -> int:
        return self.field.p

    def index(self, i: int, j: int) -> int:
        """Flat CRT position of the (i, j) coordinate (0-based)."""
        if not (0 <= i < self.k and 0 <= j < self.l):
            raise IndexError((i, j))
        return i * self.l + j

    def pairs(self):
        return itertools.product(range(self.k), range(self.l))

    # -- element construction ------------------------------------------------
    def element(self, crt) -> RingElement:
        crt = tuple(self.field.check(c) for c in crt)
        if len(crt) != self.kl:
            raise ValueError(f"expected {self.kl} CRT coordinates, got {len(crt)}")
        return RingElement(self, crt)

    def const(self, c: int) -> RingElement:
        """The constant ``c * 1`` for a field element ``c``."""
        return RingElement(self, (self.field.check(c),) * self.kl)

    def eta(self, i: int, j: int) -> RingElement:
        crt = [0] * self.kl
        crt[self.index(i, j)] = 1
        return RingElement(self, tuple(crt))

    def u(self) -> RingElement:
        return RingElement(self, tuple(a for a in self.f_roots for _ in self.g_roots))

    def v(self) -> RingElement:
        return RingElement(self, tuple(b for _ in self.f_roots for b in self.g_roots))

    def elements(self):
        for crt in itertools.product(range(self.field.q), repeat=self.kl):
            yield RingElement(self, crt)

    def random_element(self, rng: np.random.Generator, unit: bool = False) -> RingElement:
        lo = 1 if unit else 0
        return RingElement(self, tuple(int(x) for x in rng.integers(lo, self.field.q, self.kl)))

    # -- u,v polynomial view ----------------------------------------------------
    def from_uv_poly(self, table) -> RingElement:
        """Evaluate a bivariate table at every root pair."""
        F = self.field
        rows = [[F.check(c) for c in row] for row in table]
        crt = []
        for a in self.f_roots:
            # collapse u first: coefficient list in v
            vpoly = [0] * max((len(r) for r in rows), default=0)
            apow = 1
            for row in rows:
                for b, c in enumerate(row):
                    vpoly[b] = F.add(vpoly[b], F.mul(c, apow))
                apow = F.mul(apow, a)
            for b in self.g_roots:
                crt.append(poly_eval(F, vpoly, b))
        return RingElement(self, tuple(crt))

    def to_uv_poly(self, a: RingElement) -> list[list[int]]:
        """Reduced table (u-degree < k, v-degree < l) of ``sum eta_ij a_ij``."""
        self._own(a)
        F = self.field
        out = [[0] * self.l for _ in range(self.k)]
        for i, j in self.pairs():
            c = a.crt[self.index(i, j)]
            if c == 0:
                continue
            for da, ea in enumerate(self.eps[i]):
                if ea == 0:
                    continue
                for db, gb in enumerate(self.gam[j]):
                    out[da][db] = F.add(out[da][db], F.mul(c, F.mul(ea, gb)))
        return out

    def eta_table(self, i: int, j: int) -> list[list[int]]:
        """``eta_ij(u, v) = eps_i(u) gam_j(v)`` as a bivariate table."""
        F = self.field
        return [[F.mul(e, g) for g in self.gam[j]] for e in self.eps[i]]

    def reduce_uv(self, table) -> list[list[int]]:
        """Reduce a bivariate table modulo f(u) and g(v)."""
        F = self.field
        rows = [[F.check(c) for c in row] for row in table]
        width = max(max((len(r) for r in rows), default=0), self.l)
        rows = [r + [0] * (width - len(r)) for r in rows]
        # u-reduction: row-wise since f is monic
        fk = self.f_poly
        while len(rows) > self.k:
            top = rows.pop()
            shift = len(rows) - self.k
            for idx in range(self.k):
                coef = fk[idx]
                if coef:
                    rows[shift + idx] = [
                        F.sub(x, F.mul(coef, y)) for x, y in zip(rows[shift + idx], top)
                    ]
        rows += [[0] * width for _ in range(self.k - len(rows))]
        # v-reduction per row
        gl = self.g_poly
        out = []
        for row in rows:
            row = list(row)
            while len(row) > self.l:
                top = row.pop()
                shift = len(row) - self.l
                for idx in range(self.l):
                    if gl[idx]:
                        row[shift + idx] = F.sub(row[shift + idx], F.mul(gl[idx], top))
            out.append(row + [0] * (self.l - len(row)))
        return out

    def mul_uv(self, a, b) -> list[list[int]]:
        """Product of two bivariate tables, reduced."""
        F = self.field
        out: dict[tuple[int, int], int] = {}
        for da, ra in enumerate(a):
            for db, x in enumerate(ra):
                if not x:
                    continue
                for ea, rb in enumerate(b):
                    for eb, y in enumerate(rb):
                        if y:
                            key = (da + ea, db + eb)
                            out[key] = F.add(out.get(key, 0), F.mul(x, y))
        if not out:
            return self.reduce_uv([[0]])
        nu = max(k[0] for k in out) + 1
        nv = max(k[1] for k in out) + 1
        table = [[out.get((i, j), 0) for j in range(nv)] for i in range(nu)]
        return self.reduce_uv(table)

    def format_uv(self, table, u: str = "u", v: str = "v") -> str:
        """Pretty form such as ``1 - 2u^2 + 2u^2v``."""
        F = self.field
        terms = []
        for a, row in enumerate(table):
            for b, c in enumerate(row):
                if c:
                    terms.append((a + b, -a, a, b, c))
        if not terms:
            return "0"
        terms.sort()
        parts = []
        for _, _, a, b, c in terms:
            mono = ""
            if a:
                mono += u if a == 1 else f"{u}^{a}"
            if b:
                mono += v if b == 1 else f"{v}^{b}"
            cs = F.format(c)
            neg = cs.startswith("-")
            if neg:
                cs = cs[1:]
            if mono and cs == "1":
                body = mono
            elif mono:
                body = f"{cs}{mono}" if cs.isdigit() else f"{cs}*{mono}"
            else:
                body = cs
            parts.append(("-" if neg else "+", body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    # -- arithmetic interface used by skew polynomials -------------------------
    def _own(self, a: RingElement):
        if not isinstance(a, RingElement) or a.ring is not self and a.ring != self:
            raise ValueError("operand belongs to a different ring")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        return a.inv()

    def is_zero(self, a) -> bool:
        return not any(a.crt)

    def is_unit(self, a) -> bool:
        return a.is_unit()

    def psi(self, a: RingElement, k: int = 1) -> RingElement:
        """``a'_{i,j} = a_{i, j-k}``: cyclic shift of the v-index in each u-block."""
        self._own(a)
        k %= self.l
        if k == 0:
            return a
        crt = a.crt
        out = []
        for i in range(self.k):
            block = crt[i * self.l:(i + 1) * self.l]
            out.extend(block[-k:] + block[:-k])
        return RingElement(self, tuple(out))

    def theta(self, a: RingElement, t: int) -> RingElement:
        """Coordinatewise Frobenius ``a_ij -> a_ij^(p^t)``; requires t | s."""
        self._own(a)
        self.field.frobenius_order(t)
        F = self.field
        return RingElement(self, tuple(F.frobenius_power(c, t) for c in a.crt))

    def autom_order(self, autom) -> int:
        if autom.kind == "id":
            return 1
        if autom.kind == "psi":
            return self.l
        return self.field.frobenius_order(autom.t)

    def twist(self, a: RingElement, autom, k: int = 1) -> RingElement:
        if autom.kind == "id" or k == 0:
            return a
        if autom.kind == "psi":
            return self.psi(a, k)
        F = self.field
        e = autom.t * k
        return RingElement(self, tuple(F.frobenius_power(c, e) for c in a.crt))

    def is_fixed(self, a: RingElement, autom) -> bool:
        return self.twist(a, autom) == a

    def selfdual_unit_candidates(self) -> list[RingElement]:
        """All units ``sum(+-eta_ij)``; collapses to ``[1]`` in characteristic 2."""
        if self.field.p == 2:
            return [self.one]
        m1 = self.field.neg(1)
        return [
            RingElement(self, signs)
            for signs in itertools.product((1, m1), repeat=self.kl)
        ]


@dataclass(frozen=True, eq=False)
class RingElement:
    ring: Ring
    crt: tuple[int, ...]

    def _check(self, other) -> RingElement:
        if not isinstance(other, RingElement):
            return NotImplemented
        if other.ring is not self.ring and other.ring != self.ring:
            raise ValueError("operands belong to different rings")
        return other

    def __eq__(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.crt == other.crt and (other.ring is self.ring or other.ring == self.ring)

    def __hash__(self):
        return hash(self.crt)

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        add = self.ring.field._add
        if add is not None:
            return RingElement(self.ring, tuple(add[a][b] for a, b in zip(self.crt, other.crt)))
        F = self.ring.field
        return RingElement(self.ring, tuple(F.add(a, b) for a, b in zip(self.crt, other.crt)))

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        F = self.ring.field
        return RingElement(self.ring, tuple(F.sub(a, b) for a, b in zip(self.crt, other.crt)))

    def __neg__(self):
        neg = self.ring.field._neg
        return RingElement(self.ring, tuple(neg[a] for a in self.crt))

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        mul = self.ring.field._mul
        if mul is not None:
            return RingElement(self.ring, tuple(mul[a][b] for a, b in zip(self.crt, other.crt)))
        F = self.ring.field
        return RingElement(self.ring, tuple(F.mul(a, b) for a, b in zip(self.crt, other.crt)))

    def scale(self, c: int) -> RingElement:
        """Multiply by the field scalar ``c``."""
        F = self.ring.field
        return RingElement(self.ring, tuple(F.mul(c, a) for a in self.crt))

    def __pow__(self, e: int):
        F = self.ring.field
        return RingElement(self.ring, tuple(F.pow(a, e) for a in self.crt))

    def is_unit(self) -> bool:
        return all(self.crt)

    def inv(self) -> RingElement:
        if not self.is_unit():
            raise ZeroDivisionError(f"{self} is not a unit")
        F = self.ring.field
        return RingElement(self.ring, tuple(F.inv(a) for a in self.crt))

    def __bool__(self):
        return any(self.crt)

    def component(self, i: int, j: int) -> int:
        return self.crt[self.ring.index(i, j)]

    def psi(self, k: int = 1) -> RingElement:
        return self.ring.psi(self, k)

    def theta(self, t: int) -> RingElement:
        return self.ring.theta(self, t)

    def to_uv_poly(self) -> list[list[int]]:
        return self.ring.to_uv_poly(self)

    def is_constant(self) -> bool:
        """True for elements of F_q embedded as ``c * 1``."""
        return len(set(self.crt)) == 1

    def __repr__(self):
        return self.ring.format_uv(self.ring.to_uv_poly(self))

    def to_json(self) -> list[int]:
        return list(self.crt)
