"""Skew alpha-constacyclic codes over R and their component codes over F_q.

A code over R under ``theta_t`` (or the identity) is the direct sum of its
component codes ``C_ij``, each a skew ``alpha_ij``-constacyclic code over
F_q with a monic generator dividing ``x^n - alpha_ij`` on the right.  The
component generators are the canonical description: equality of codes is
equality of component generators, and sizes, duals and idempotents are all
computed per component.

``psi``-codes do not split this way (psi permutes the CRT coordinates).
They are described by a single generator with unit leading coefficient.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field

import numpy as np

from .autom import Autom
from .errors import EnumerationLimitError, PreconditionError
from .gf import GF
from .ring import Ring, RingElement
from .skewpoly import SkewPoly

__all__ = [
    "ENUM_CAP",
    "ComponentCode",
    "Code",
    "ShiftKind",
    "classify",
    "code_from_components",
    "code_from_generator",
    "dual_component",
    "idempotent_component",
    "minimal_degree_generator",
    "span_words",
]

ENUM_CAP = 1 << 20


def span_words(field: GF, rows: np.ndarray, cap: int = ENUM_CAP) -> np.ndarray:
    """All F_q-combinations of the (linearly independent) ``rows``."""
    rows = np.asarray(rows, dtype=np.int64)
    if rows.ndim != 2:
        raise ValueError("rows must be a 2-d array")
    r, width = rows.shape
    if field.q ** r > cap:
        raise EnumerationLimitError(f"{field.q}^{r} words exceed the cap of {cap}")
    words = np.zeros((1, width), dtype=np.int64)
    for row in rows:
        scaled = field.vmul(np.arange(field.q)[:, None], row[None, :])  # (q, width)
        words = field.vadd(words[None, :, :], scaled[:, None, :]).reshape(-1, width)
    return words


@dataclass(frozen=True)
class ShiftKind:
    """Outcome of the shift classification: ``r = gcd(n, |autom|)``."""

    kind: str
    index: int
    r: int

    def __str__(self):
        if self.kind in ("cyclic", "constacyclic"):
            return self.kind
        return f"{self.kind} of index {self.index}"

    def to_json(self):
        return {"kind": self.kind, "index": self.index, "r": self.r}


def classify(n: int, order: int, alpha_is_one: bool) -> ShiftKind:
    r = math.gcd(n, order)
    if r == 1:
        return ShiftKind("cyclic" if alpha_is_one else "constacyclic", n, 1)
    return ShiftKind("quasi-cyclic" if alpha_is_one else "quasi-twisted", n // r, r)


# ---------------------------------------------------------------------------
# component level (over F_q)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ComponentCode:
    n: int
    alpha: int
    gen: SkewPoly

    @property
    def field(self) -> GF:
        return self.gen.base

    @property
    def dim(self) -> int:
        return self.n - self.gen.degree

    def basis(self) -> np.ndarray:
        """Rows ``x^i * g`` for ``i < dim``."""
        rows = [self.gen.shift(i).to_vector(self.n) for i in range(self.dim)]
        return np.array(rows, dtype=np.int64).reshape(self.dim, self.n)

    def codewords(self, cap: int = ENUM_CAP) -> np.ndarray:
        return span_words(self.field, self.basis(), cap)

    def contains(self, word) -> bool:
        p = SkewPoly(self.field, tuple(int(c) for c in word), self.gen.autom)
        return p.right_rem(self.gen).is_zero()

    def min_distance(self, cap: int = ENUM_CAP):
        """Minimum Hamming weight by enumeration; ``None`` for the zero code."""
        if self.dim == 0:
            return None
        words = self.codewords(cap)
        w = np.count_nonzero(words, axis=1)
        return int(w[w > 0].min())


def _check_component_alpha(field: GF, alpha: int, autom: Autom):
    if alpha == 0:
        raise PreconditionError("alpha_ij must be nonzero")
    if field.twist(alpha, autom) != alpha:
        raise PreconditionError(f"alpha_ij = {field.format(alpha)} is not fixed by {autom}")


def make_component(field: GF, n: int, alpha: int, gen, autom: Autom) -> ComponentCode:
    if not isinstance(gen, SkewPoly):
        gen = SkewPoly.from_coeffs(field, gen, autom)
    _check_component_alpha(field, alpha, autom)
    if gen.is_zero():
        raise PreconditionError("a component generator is zero")
    gen = gen.monic()
    if gen.degree > n:
        raise PreconditionError(f"generator degree {gen.degree} exceeds n = {n}")
    xn = SkewPoly.x_n_minus(field, n, alpha, autom)
    if not gen.is_right_divisor_of(xn):
        raise PreconditionError(f"{gen} is not a right divisor of {xn}")
    return ComponentCode(n, alpha, gen)


def dual_component(gen: SkewPoly, n: int, alpha: int) -> SkewPoly:
    """Monic generator of the dual of ``<gen>`` (an ``alpha^-1``-constacyclic code).

    With ``x^n - alpha = h * g`` and ``h = sum h_i x^i`` of degree ``m``, the
    dual is generated by ``sum_i theta^i(h_{m-i}) x^i``.  Needs the order of
    the automorphism to divide n.
    """
    F, A = gen.base, gen.autom
    order = F.autom_order(A)
    if n % order:
        raise PreconditionError(
            f"dual generator formula needs the automorphism order {order} to divide n = {n}"
        )
    h, r = SkewPoly.x_n_minus(F, n, alpha, A).right_divrem(gen)
    if not r.is_zero():
        raise PreconditionError(f"{gen} does not right-divide x^{n} - {F.format(alpha)}")
    m = h.degree
    return SkewPoly(F, tuple(F.twist(h.coeff(m - i), A, i) for i in range(m + 1)), A).monic()


def _ext_gcd(a: SkewPoly, b: SkewPoly):
    """Commutative extended Euclid: ``(g, s, t)`` with ``s a + t b = g`` monic."""
    F, A = a.base, a.autom
    r0, r1 = a, b
    s0, s1 = SkewPoly.one(F, A), SkewPoly.zero(F, A)
    t0, t1 = SkewPoly.zero(F, A), SkewPoly.one(F, A)
    while not r1.is_zero():
        quo, rem = r0.right_divrem(r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quo * s1
        t0, t1 = t1, t0 - quo * t1
    c = F.inv(r0.lead)
    return r0.left_scale(c), s0.left_scale(c), t0.left_scale(c)


def idempotent_component(comp: ComponentCode) -> SkewPoly:
    """Idempotent generator ``e`` of a component code, ``e * e = e`` mod ``x^n - alpha``.

    Needs ``gcd(n, q) = 1`` and ``gcd(n, |theta|) = 1``; the code is then an
    ordinary constacyclic code, whose idempotent comes from the commutative
    Bezout identity ``a g' + b h' = 1`` as ``e = a g'``.  The result is checked
    under the skew product before it is returned.
    """
    F, A, n, lam = comp.field, comp.gen.autom, comp.n, comp.alpha
    order = F.autom_order(A)
    if math.gcd(n, F.q) != 1 or math.gcd(n, order) != 1:
        raise PreconditionError(
            f"an idempotent generator needs gcd(n, q) = 1 and gcd(n, |autom|) = 1 "
            f"(n = {n}, q = {F.q}, |autom| = {order})"
        )
    ident = Autom.identity()
    g_c = SkewPoly(F, comp.gen.coeffs, ident)
    xn_c = SkewPoly.x_n_minus(F, n, lam, ident)
    g1, _, _ = _ext_gcd(g_c, xn_c)
    h1, _ = xn_c.right_divrem(g1)
    one, a, _ = _ext_gcd(g1, h1)
    if one.degree != 0:
        raise PreconditionError("x^n - alpha is not squarefree")
    e_c = (a * g1).mod(n, lam)
    e = SkewPoly(F, e_c.coeffs, A)
    xn = SkewPoly.x_n_minus(F, n, lam, A)
    if (e * e).right_rem(xn) != e or e.gcrd(xn) != comp.gen:
        raise AssertionError("idempotent self-check failed")  # hypotheses guarantee success
    return e


def dual_idempotent_component(comp: ComponentCode, e: SkewPoly) -> SkewPoly:
    """``1 - e(x^-1)`` in the dual's quotient by ``x^n - alpha^-1``.

    There ``x^-i = alpha x^(n-i)``.  The result is checked to be idempotent.
    """
    F, n, lam = comp.field, comp.n, comp.alpha
    out = [0] * n
    out[0] = F.sub(1, e.coeff(0))
    for i in range(1, n):
        out[n - i] = F.neg(F.mul(e.coeff(i), lam))
    d = SkewPoly(F, tuple(out), e.autom)
    xn = SkewPoly.x_n_minus(F, n, F.inv(lam), e.autom)
    if (d * d).right_rem(xn) != d:
        raise AssertionError("dual idempotent self-check failed")  # hypotheses guarantee success
    return d


# ---------------------------------------------------------------------------
# codes over R
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Code:
    ring: Ring
    n: int
    autom: Autom
    alpha: RingElement
    gen: SkewPoly
    components: dict | None = dc_field(default=None)

    # -- derived quantities ------------------------------------------------------
    @property
    def field(self) -> GF:
        return self.ring.field

    @property
    def autom_order(self) -> int:
        return self.ring.autom_order(self.autom)

    @property
    def size_exponent(self) -> int:
        """``e`` with ``|C| = q^e``."""
        R = self.ring
        if self.components is None:
            return R.kl * (self.n - self.gen.degree)
        return R.kl * self.n - sum(c.gen.degree for c in self.components.values())

    def size(self) -> tuple[int, int]:
        return self.field.q, self.size_exponent

    def decompose(self) -> dict:
        if self.components is None:
            raise PreconditionError("psi-codes do not decompose into skew component codes")
        return dict(self.components)

    def classify_shift(self) -> ShiftKind:
        return classify(self.n, self.autom_order, self.alpha == self.ring.one)

    def __eq__(self, other):
        if not isinstance(other, Code):
            return NotImplemented
        if (self.ring, self.n, self.autom, self.alpha) != (other.ring, other.n, other.autom, other.alpha):
            return False
        if self.components is not None:
            return self.components == other.components
        return self.gen.monic() == other.gen.monic()

    __hash__ = None

    # -- membership and enumeration ----------------------------------------------
    def _as_array(self, word) -> np.ndarray:
        if isinstance(word, SkewPoly):
            word = word.to_vector(self.n)
        if len(word) and isinstance(word[0], RingElement):
            word = [c.crt for c in word]
        arr = np.asarray(word, dtype=np.int64)
        if arr.shape != (self.n, self.ring.kl):
            raise ValueError(f"expected a word of shape {(self.n, self.ring.kl)}, got {arr.shape}")
        return arr

    def contains(self, word) -> bool:
        """Membership by right division (per component when available)."""
        arr = self._as_array(word)
        R = self.ring
        if self.components is not None:
            return all(
                comp.contains(arr[:, R.index(i, j)]) for (i, j), comp in self.components.items()
            )
        p = SkewPoly(R, tuple(R.element(row) for row in arr), self.autom)
        return p.right_rem(self.gen).is_zero()

    def basis(self) -> np.ndarray:
        """An F_q-basis of the code as flattened ``(n * kl)`` rows (symbol-major)."""
        R, n = self.ring, self.n
        rows = []
        if self.components is not None:
            for (i, j), comp in self.components.items():
                idx = R.index(i, j)
                for row in comp.basis():
                    w = np.zeros((n, R.kl), dtype=np.int64)
                    w[:, idx] = row
                    rows.append(w.reshape(-1))
        else:
            for d in range(n - self.gen.degree):
                sh = self.gen.shift(d)
                for i, j in R.pairs():
                    vec = sh.left_scale(R.eta(i, j)).to_vector(n)
                    rows.append(np.array([c.crt for c in vec], dtype=np.int64).reshape(-1))
        return np.array(rows, dtype=np.int64).reshape(len(rows), n * R.kl)

    def codewords(self, cap: int = ENUM_CAP) -> np.ndarray:
        """All codewords as an array of shape ``(q^e, n, kl)``."""
        words = span_words(self.field, self.basis(), cap)
        return words.reshape(-1, self.n, self.ring.kl)

    # -- duality ---------------------------------------------------------------------
    def dual(self) -> Code:
        """The dual code, an ``alpha^-1``-constacyclic code with generator
        ``sum eta_ij h_ij^perp``."""
        if self.components is None:
            raise PreconditionError("no dual generator formula for psi-codes; use the oracle")
        comps = {}
        for key, comp in self.components.items():
            ainv = self.field.inv(comp.alpha)
            comps[key] = ComponentCode(self.n, ainv, dual_component(comp.gen, self.n, comp.alpha))
        gen = SkewPoly.from_components(self.ring, {k: c.gen for k, c in comps.items()}, self.autom)
        return Code(self.ring, self.n, self.autom, self.alpha.inv(), gen, comps)

    def is_selfdual(self) -> bool:
        if self.components is None:
            raise PreconditionError("self-duality of psi-codes is only decidable by the oracle")
        F = self.field
        if any(F.mul(c.alpha, c.alpha) != 1 for c in self.components.values()):
            return False
        if 2 * self.size_exponent != self.ring.kl * self.n:
            return False
        return self.dual() == self

    # -- idempotents -------------------------------------------------------------------
    def idempotent(self) -> SkewPoly:
        """``e = sum eta_ij e_ij`` with ``e * e = e`` mod ``x^n - alpha`` and ``<e> = C``."""
        if self.components is None:
            raise PreconditionError("idempotents of psi-codes are only available from the oracle")
        es = {k: idempotent_component(c) for k, c in self.components.items()}
        return SkewPoly.from_components(self.ring, es, self.autom)

    def dual_idempotent(self) -> SkewPoly:
        """``1 - e(x^-1)`` assembled componentwise."""
        if self.components is None:
            raise PreconditionError("idempotents of psi-codes are only available from the oracle")
        es = {
            k: dual_idempotent_component(c, idempotent_component(c))
            for k, c in self.components.items()
        }
        return SkewPoly.from_components(self.ring, es, self.autom)

    # -- equivalence with skew cyclic codes ----------------------------------------------
    def twist_by(self, unit: RingElement) -> Code:
        """Image of this skew cyclic code under ``f(x) -> f(unit x)``.

        Needs ``n`` odd, ``unit^2 = 1`` and ``unit`` fixed by the automorphism;
        the result is a skew ``unit``-constacyclic code generated by ``g(unit x)``.
        """
        if self.alpha != self.ring.one:
            raise PreconditionError("twist_by expects a skew cyclic code")
        if self.n % 2 == 0:
            raise PreconditionError("twist_by needs n odd")
        gen = self.gen.eval_twist(unit)
        return code_from_generator(self.ring, self.n, self.autom, unit, gen)

    # -- serialisation ---------------------------------------------------------------------
    def component_table(self) -> list[dict]:
        if self.components is None:
            return []
        return [
            {"i": i + 1, "j": j + 1, "alpha": c.alpha, "gen": list(c.gen.coeffs), "dim": c.dim}
            for (i, j), c in sorted(self.components.items())
        ]


def _alpha_element(ring: Ring, alpha) -> RingElement:
    if isinstance(alpha, RingElement):
        return alpha
    if isinstance(alpha, dict):
        return ring.element([alpha[(i, j)] for i, j in ring.pairs()])
    if alpha is None:
        return ring.one
    return ring.element(alpha)


def code_from_components(ring: Ring, n: int, autom: Autom, alphas, gens) -> Code:
    """Assemble ``C = sum eta_ij C_ij`` with generator ``sum eta_ij g_ij``.

    ``alphas`` is a RingElement, a flat CRT list or a mapping ``(i, j) -> int``;
    ``gens`` maps ``(i, j)`` (0-based) to a SkewPoly or coefficient list.
    """
    if autom.kind == "psi":
        raise PreconditionError("psi-codes are not built from components")
    alpha = _alpha_element(ring, alphas)
    missing = [p for p in ring.pairs() if p not in gens]
    if missing:
        raise PreconditionError(f"missing component generators for {missing}")
    comps = {}
    for i, j in ring.pairs():
        try:
            comps[(i, j)] = make_component(ring.field, n, alpha.component(i, j), gens[(i, j)], autom)
        except PreconditionError as exc:
            raise PreconditionError(f"component ({i + 1},{j + 1}): {exc}") from None
    gen = SkewPoly.from_components(ring, {k: c.gen for k, c in comps.items()}, autom)
    return Code(ring, n, autom, alpha, gen, comps)


def code_from_generator(ring: Ring, n: int, autom: Autom, alpha, gen: SkewPoly) -> Code:
    """Code ``<gen>`` in ``R[x, autom] / <x^n - alpha>``; gen must right-divide ``x^n - alpha``."""
    alpha = _alpha_element(ring, alpha)
    if not alpha.is_unit():
        raise PreconditionError("alpha must be a unit")
    if not ring.is_fixed(alpha, autom):
        raise PreconditionError(f"alpha is not fixed by {autom}")
    if gen.autom != autom:
        raise PreconditionError(f"generator carries {gen.autom}, expected {autom}")
    if gen.is_zero() or gen.degree > n:
        raise PreconditionError("generator must be nonzero of degree at most n")
    xn = SkewPoly.x_n_minus(ring, n, alpha, autom)
    if autom.kind == "psi":
        if not gen.lead.is_unit():
            raise PreconditionError("psi-code generators need a unit leading coefficient")
        if not gen.is_right_divisor_of(xn):
            raise PreconditionError("generator does not right-divide x^n - alpha")
        return Code(ring, n, autom, alpha, gen, None)
    comps = {}
    F = ring.field
    for i, j in ring.pairs():
        a_ij = alpha.component(i, j)
        g_ij = gen.component(i, j)
        if g_ij.is_zero():
            g_ij = SkewPoly.x_n_minus(F, n, a_ij, autom)
        g_ij = g_ij.monic()
        if not g_ij.is_right_divisor_of(SkewPoly.x_n_minus(F, n, a_ij, autom)):
            raise PreconditionError(f"generator does not right-divide x^n - alpha (component ({i + 1},{j + 1}))")
        comps[(i, j)] = ComponentCode(n, a_ij, g_ij)
    return Code(ring, n, autom, alpha, gen, comps)


def minimal_degree_generator(words, base, autom: Autom) -> SkewPoly:
    """Monic generator read off a codeword list as a minimal-degree codeword.

    ``words`` has shape ``(M, n)`` over a field or ``(M, n, kl)`` over a ring.
    Among nonzero codewords of least degree one with a unit leading
    coefficient is chosen.
    """
    arr = np.asarray(words, dtype=np.int64)
    over_ring = isinstance(base, Ring)
    if over_ring:
        nz = arr.any(axis=2)
    else:
        nz = arr != 0
    nonzero = nz.any(axis=1)
    if not nonzero.any():
        raise PreconditionError("the code has no nonzero codeword")
    n = arr.shape[1]
    degrees = np.where(nonzero, n - 1 - np.argmax(nz[:, ::-1], axis=1), n)
    dmin = degrees.min()
    for idx in np.flatnonzero(degrees == dmin):
        w = arr[idx]
        if over_ring:
            coeffs = tuple(base.element(row) for row in w[: dmin + 1])
        else:
            coeffs = tuple(int(c) for c in w[: dmin + 1])
        p = SkewPoly(base, coeffs, autom)
        if base.is_unit(p.lead):
            return p.monic()
    raise PreconditionError("no minimal-degree codeword has a unit leading coefficient")
