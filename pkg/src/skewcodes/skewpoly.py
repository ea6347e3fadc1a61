"""Skew polynomials over R or F_q with product ``a x^i * b x^j = a theta^i(b) x^(i+j)``.

The coefficient domain ("base") is either a :class:`~skewcodes.gf.GF`, with
plain integer coefficients, or a :class:`~skewcodes.ring.Ring`, with
:class:`~skewcodes.ring.RingElement` coefficients.  Both expose the same
small interface (``add``, ``mul``, ``inv``, ``is_unit``, ``twist`` ...), so
everything here is written once.
"""
from __future__ import annotations

from dataclasses import dataclass

from .autom import Autom
from .errors import PreconditionError
from .gf import GF

__all__ = ["SkewPoly", "Autom", "NEG_INF"]

NEG_INF = float("-inf")


def _zero(base):
    return base.zero


def _one(base):
    return base.one


@dataclass(frozen=True, eq=False)
class SkewPoly:
    base: object
    coeffs: tuple
    autom: Autom

    def __post_init__(self):
        c = list(self.coeffs)
        while c and self.base.is_zero(c[-1]):
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))
        self.base.autom_order(self.autom)  # rejects psi over a field, bad t

    # -- constructors -----------------------------------------------------------
    @classmethod
    def from_coeffs(cls, base, coeffs, autom: Autom) -> SkewPoly:
        if isinstance(base, GF):
            coeffs = [base.check(c) for c in coeffs]
        else:
            coeffs = [c if not isinstance(c, (list, tuple)) else base.element(c) for c in coeffs]
        return cls(base, tuple(coeffs), autom)

    @classmethod
    def zero(cls, base, autom: Autom) -> SkewPoly:
        return cls(base, (), autom)

    @classmethod
    def one(cls, base, autom: Autom) -> SkewPoly:
        return cls(base, (_one(base),), autom)

    @classmethod
    def monomial(cls, base, c, d: int, autom: Autom) -> SkewPoly:
        return cls(base, (_zero(base),) * d + (c,), autom)

    @classmethod
    def x_n_minus(cls, base, n: int, alpha, autom: Autom) -> SkewPoly:
        """``x^n - alpha``."""
        return cls(base, (base.neg(alpha),) + (_zero(base),) * (n - 1) + (_one(base),), autom)

    def like(self, coeffs) -> SkewPoly:
        return SkewPoly(self.base, tuple(coeffs), self.autom)

    # -- basic properties ---------------------------------------------------------
    @property
    def degree(self):
        """Degree, or ``-inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, d: int):
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else _zero(self.base)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, SkewPoly):
            return NotImplemented
        return (
            self.autom == other.autom
            and (self.base is other.base or self.base == other.base)
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.autom, self.coeffs))

    def _compat(self, other: SkewPoly):
        if not isinstance(other, SkewPoly):
            raise TypeError(f"expected SkewPoly, got {type(other).__name__}")
        if other.autom != self.autom:
            raise ValueError(f"automorphism mismatch: {self.autom} vs {other.autom}")
        if other.base is not self.base and other.base != self.base:
            raise ValueError("skew polynomials over different coefficient domains")

    # -- ring operations ---------------------------------------------------------
    def __add__(self, other: SkewPoly) -> SkewPoly:
        self._compat(other)
        B = self.base
        n = max(len(self.coeffs), len(other.coeffs))
        return self.like(B.add(self.coeff(i), other.coeff(i)) for i in range(n))

    def __neg__(self) -> SkewPoly:
        return self.like(self.base.neg(c) for c in self.coeffs)

    def __sub__(self, other: SkewPoly) -> SkewPoly:
        self._compat(other)
        B = self.base
        n = max(len(self.coeffs), len(other.coeffs))
        return self.like(B.sub(self.coeff(i), other.coeff(i)) for i in range(n))

    def __mul__(self, other: SkewPoly) -> SkewPoly:
        return self.skew_mul(other)

    def skew_mul(self, other: SkewPoly) -> SkewPoly:
        """``sum_{i,j} a_i theta^i(b_j) x^(i+j)``."""
        self._compat(other)
        if not self.coeffs or not other.coeffs:
            return self.like(())
        B, A = self.base, self.autom
        out = [_zero(B)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if B.is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                if not B.is_zero(b):
                    out[i + j] = B.add(out[i + j], B.mul(a, B.twist(b, A, i)))
        return self.like(out)

    def left_scale(self, c) -> SkewPoly:
        """``c * self`` for a constant ``c``."""
        B = self.base
        return self.like(B.mul(c, a) for a in self.coeffs)

    def shift(self, d: int) -> SkewPoly:
        """``x^d * self``."""
        B, A = self.base, self.autom
        return self.like([_zero(B)] * d + [B.twist(a, A, d) for a in self.coeffs])

    def apply(self, k: int = 1) -> SkewPoly:
        """Apply the automorphism ``k`` times to every coefficient."""
        B, A = self.base, self.autom
        return self.like(B.twist(a, A, k) for a in self.coeffs)

    def monic(self) -> SkewPoly:
        """Left-multiply by the inverse of the leading coefficient."""
        lc = self.lead
        if not self.base.is_unit(lc):
            raise PreconditionError("leading coefficient is not a unit")
        return self.left_scale(self.base.inv(lc))

    # -- division -------------------------------------------------------------------
    def right_divrem(self, g: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
        """``(q, r)`` with ``self = q * g + r`` and ``deg r < deg g``.

        Over R under theta_t or the identity a divisor with a non-unit leading
        coefficient is handled per CRT component: then ``deg r_ij < deg g_ij``
        in every component (a zero component of g leaves that of self as the
        remainder).
        """
        self._compat(g)
        if g.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        B, A = self.base, self.autom
        if not B.is_unit(g.lead):
            if isinstance(B, GF) or A.kind == "psi":
                raise PreconditionError("leading coefficient of the divisor is not a unit")
            return self._crt_divrem(g)
        dg = g.degree
        r = list(self.coeffs)
        quo = [_zero(B)] * max(len(r) - dg, 0)
        # twisted inverses of lc(g) are reused across degrees
        inv_cache = {}
        while len(r) - 1 >= dg:
            d = len(r) - 1 - dg
            if d not in inv_cache:
                inv_cache[d] = B.inv(B.twist(g.lead, A, d))
            c = B.mul(r[-1], inv_cache[d])
            quo[d] = c
            for j, b in enumerate(g.coeffs):
                if not B.is_zero(b):
                    r[d + j] = B.sub(r[d + j], B.mul(c, B.twist(b, A, d)))
            while r and B.is_zero(r[-1]):
                r.pop()
        return self.like(quo), self.like(r)

    def _crt_divrem(self, g: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
        B = self.base
        qs, rs = {}, {}
        for i, j in B.pairs():
            f_ij, g_ij = self.component(i, j), g.component(i, j)
            if g_ij.is_zero():
                qs[(i, j)], rs[(i, j)] = SkewPoly.zero(B.field, self.autom), f_ij
            else:
                qs[(i, j)], rs[(i, j)] = f_ij.right_divrem(g_ij)
        return (SkewPoly.from_components(B, qs, self.autom),
                SkewPoly.from_components(B, rs, self.autom))

    def right_rem(self, g: SkewPoly) -> SkewPoly:
        return self.right_divrem(g)[1]

    def is_right_divisor_of(self, f: SkewPoly) -> bool:
        """True when ``f = q * self`` for some q."""
        return f.right_divrem(self)[1].is_zero()

    def mod(self, n: int, alpha) -> SkewPoly:
        """Reduce modulo the left ideal generated by ``x^n - alpha``."""
        B = self.base
        return self.right_rem(SkewPoly.x_n_minus(B, n, alpha, self.autom))

    def gcrd(self, other: SkewPoly) -> SkewPoly:
        """Monic greatest common right divisor (coefficients over a field)."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.right_rem(b)
        return a.monic() if not a.is_zero() else a

    # -- centrality and substitution -----------------------------------------------
    def commutes_with(self, other: SkewPoly) -> bool:
        return self.skew_mul(other) == other.skew_mul(self)

    def is_central(self) -> bool:
        """Membership in the centre, by commutation with ring generators.

        Checks ``x``, the CRT idempotents (or 1 over a field) and the primitive
        field element embedded as a constant; these generate the coefficient
        ring together with ``x``.
        """
        B, A = self.base, self.autom
        gens = [SkewPoly.monomial(B, _one(B), 1, A)]
        if isinstance(B, GF):
            consts = [B.primitive]
        else:
            consts = [B.eta(i, j) for i, j in B.pairs()] + [B.const(B.field.primitive)]
        gens += [SkewPoly(B, (c,), A) for c in consts]
        return all(self.commutes_with(g) for g in gens)

    def eval_twist(self, alpha) -> SkewPoly:
        """``f(alpha x)``: coefficient ``c_d`` becomes ``c_d alpha^d``.

        ``alpha`` must be a unit fixed by the automorphism with ``alpha^2 = 1``,
        so ``(alpha x)^d = alpha^d x^d``.
        """
        B, A = self.base, self.autom
        if not B.is_unit(alpha):
            raise PreconditionError("alpha must be a unit")
        if B.mul(alpha, alpha) != _one(B):
            raise PreconditionError("alpha^2 must equal 1")
        if B.twist(alpha, A, 1) != alpha:
            raise PreconditionError("alpha must be fixed by the automorphism")
        return self.like(c if d % 2 == 0 else B.mul(c, alpha) for d, c in enumerate(self.coeffs))

    # -- projections and conversions ------------------------------------------------
    def component(self, i: int, j: int) -> SkewPoly:
        """The (i, j) CRT projection, a skew polynomial over F_q (theta / id only)."""
        if isinstance(self.base, GF):
            raise TypeError("already over a field")
        if self.autom.kind == "psi":
            raise ValueError("psi mixes CRT coordinates; components are not skew polynomials")
        B = self.base
        idx = B.index(i, j)
        return SkewPoly(B.field, tuple(c.crt[idx] for c in self.coeffs), self.autom)

    @classmethod
    def from_components(cls, ring, comps: dict, autom: Autom) -> SkewPoly:
        """``sum eta_ij g_ij(x)`` from a mapping ``(i, j) -> SkewPoly over F_q``."""
        length = max((len(p.coeffs) for p in comps.values()), default=0)
        cols = [[0] * ring.kl for _ in range(length)]
        for (i, j), p in comps.items():
            if p.autom != autom:
                raise ValueError(f"component ({i},{j}) has automorphism {p.autom}, expected {autom}")
            idx = ring.index(i, j)
            for d, c in enumerate(p.coeffs):
                cols[d][idx] = c
        return cls(ring, tuple(ring.element(c) for c in cols), autom)

    def to_vector(self, n: int) -> list:
        """Coefficient vector of length n (degree must be below n)."""
        if len(self.coeffs) > n:
            raise ValueError(f"degree {self.degree} does not fit length {n}")
        return list(self.coeffs) + [_zero(self.base)] * (n - len(self.coeffs))

    def to_json(self) -> dict:
        if isinstance(self.base, GF):
            coeffs = list(self.coeffs)
        else:
            coeffs = [c.to_json() for c in self.coeffs]
        return {"autom": self.autom.to_json(), "coeffs": coeffs}

    # -- display ----------------------------------------------------------------------
    def __repr__(self):
        return self.format()

    def format(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        B = self.base
        parts = []
        for d in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[d]
            if B.is_zero(c):
                continue
            mono = "" if d == 0 else (var if d == 1 else f"{var}^{d}")
            if isinstance(B, GF):
                cs = B.format(c)
                simple = True
            else:
                cs = B.format_uv(B.to_uv_poly(c))
                simple = " " not in cs
            neg = simple and cs.startswith("-")
            if neg:
                cs = cs[1:]
            if not simple:
                cs = f"({cs})"
            body = mono if (mono and cs == "1") else f"{cs}{mono}"
            parts.append(("-" if neg else "+", body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s
