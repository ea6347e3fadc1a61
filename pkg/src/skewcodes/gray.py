"""Gray maps R^n -> F_q^(kl n), Gray weights, and the skew shift operators.

Vectors over R are integer arrays of shape ``(n, kl)`` (one row of CRT
coordinates per symbol); vectors over F_q are 1-d integer arrays.  The Gray
map reads the array row by row, the permuted Gray map column by column.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .autom import Autom
from .codes import Code, ENUM_CAP
from .errors import PreconditionError
from .gf import GF
from .ring import Ring, RingElement
from .skewpoly import SkewPoly

__all__ = [
    "as_array",
    "phi",
    "phi_inv",
    "phi_pi",
    "phi_pi_inv",
    "gray_weight",
    "gray_distance",
    "ShiftOp",
    "apply_shift",
    "check_permuted_gray_shift",
    "check_gray_frobenius_shift",
    "GrayParams",
    "gray_image_params",
]


def as_array(ring: Ring, v) -> np.ndarray:
    """Coerce a list of RingElements, a SkewPoly or nested lists to shape ``(n, kl)``."""
    if isinstance(v, SkewPoly):
        v = v.coeffs
    if isinstance(v, np.ndarray):
        arr = v.astype(np.int64, copy=False)
    else:
        v = list(v)
        if v and isinstance(v[0], RingElement):
            v = [c.crt for c in v]
        arr = np.asarray(v, dtype=np.int64)
    if arr.ndim != 2 or arr.shape[1] != ring.kl:
        raise ValueError(f"expected shape (n, {ring.kl}), got {arr.shape}")
    return arr


def phi(v: np.ndarray) -> np.ndarray:
    """``(a_11^(0), ..., a_kl^(0), a_11^(1), ...)``: symbols in order, CRT coordinates inside."""
    return np.asarray(v).reshape(-1)


def phi_inv(w: np.ndarray, kl: int) -> np.ndarray:
    return np.asarray(w).reshape(-1, kl)


def phi_pi(v: np.ndarray) -> np.ndarray:
    """``(a_11^(0), ..., a_11^(n-1), a_12^(0), ...)``: one block per CRT coordinate."""
    return np.asarray(v).T.reshape(-1)


def phi_pi_inv(w: np.ndarray, kl: int) -> np.ndarray:
    return np.asarray(w).reshape(kl, -1).T


def gray_weight(v: np.ndarray) -> int:
    return int(np.count_nonzero(phi(v)))


def gray_distance(v: np.ndarray, w: np.ndarray, field: GF) -> int:
    return gray_weight(field.vadd(np.asarray(v), field.vneg(np.asarray(w))))


# ---------------------------------------------------------------------------
# shifts
# ---------------------------------------------------------------------------

_KINDS = ("cyclic", "quasi_cyclic", "constacyclic", "quasi_twisted", "block_constacyclic")


@dataclass(frozen=True)
class ShiftOp:
    """A skew shift on vectors.

    kinds
        ``cyclic``: ``(a(c_{n-1}), a(c_0), ..., a(c_{n-2}))``
        ``quasi_cyclic``: the same on m blocks
        ``constacyclic``: ``(alpha a(c_{n-1}), a(c_0), ...)``
        ``quasi_twisted``: the same on m blocks, the wrapped block scaled by alpha
        ``block_constacyclic``: ``constacyclic`` applied inside each of m blocks

    ``a`` is the automorphism.  For field vectors ``alpha`` may be a sequence
    with one scalar per block (``block_constacyclic`` only).
    """

    kind: str
    autom: Autom
    alpha: object = None
    m: int | None = None

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown shift kind {self.kind!r}")
        if self.kind in ("quasi_cyclic", "quasi_twisted", "block_constacyclic") and not self.m:
            raise ValueError(f"{self.kind} needs a block count m")

    @classmethod
    def cyclic(cls, autom):
        return cls("cyclic", autom)

    @classmethod
    def quasi_cyclic(cls, autom, m):
        return cls("quasi_cyclic", autom, None, m)

    @classmethod
    def constacyclic(cls, autom, alpha):
        return cls("constacyclic", autom, alpha)

    @classmethod
    def quasi_twisted(cls, autom, alpha, m):
        return cls("quasi_twisted", autom, alpha, m)

    @classmethod
    def block_constacyclic(cls, autom, alpha, m):
        return cls("block_constacyclic", autom, alpha, m)

    def __call__(self, v, base):
        return apply_shift(self, v, base)


def _twist(base, arr: np.ndarray, autom: Autom, k: int = 1) -> np.ndarray:
    if autom.kind == "id" or k == 0:
        return arr
    if autom.kind == "theta":
        F = base if isinstance(base, GF) else base.field
        return F.frobenius_table(autom.t * k)[arr]
    if isinstance(base, GF):
        raise ValueError("psi acts on ring vectors only")
    shape = arr.shape
    blocks = arr.reshape(shape[:-1] + (base.k, base.l))
    return np.roll(blocks, k, axis=-1).reshape(shape)


def _scale(base, arr: np.ndarray, alpha) -> np.ndarray:
    if alpha is None:
        return arr
    if isinstance(base, GF):
        return base.vmul(int(alpha), arr)
    crt = np.array(alpha.crt if isinstance(alpha, RingElement) else alpha, dtype=np.int64)
    return base.field.vmul(crt, arr)


def _block_shift(base, arr, autom, alpha, m):
    n = arr.shape[0]
    if n % m:
        raise ValueError(f"block count {m} does not divide length {n}")
    r = n // m
    blocks = _twist(base, arr, autom).reshape((m, r) + arr.shape[1:])
    blocks = np.roll(blocks, 1, axis=0)
    blocks[0] = _scale(base, blocks[0], alpha)
    return blocks.reshape(arr.shape)


def apply_shift(op: ShiftOp, v, base) -> np.ndarray:
    """Apply ``op`` to ``v``; ``base`` is the GF (field vectors) or Ring (ring vectors)."""
    if isinstance(base, Ring):
        arr = np.array(as_array(base, v), dtype=np.int64)
    else:
        arr = np.array(v, dtype=np.int64)
    if not isinstance(base, Ring) and arr.ndim != 1:
        raise ValueError("field vectors must be 1-d")
    n = arr.shape[0]
    k = op.kind
    if k == "cyclic":
        return _block_shift(base, arr, op.autom, None, n)
    if k == "constacyclic":
        return _block_shift(base, arr, op.autom, op.alpha, n)
    if k == "quasi_cyclic":
        return _block_shift(base, arr, op.autom, None, op.m)
    if k == "quasi_twisted":
        return _block_shift(base, arr, op.autom, op.alpha, op.m)
    # block_constacyclic
    m = op.m
    if n % m:
        raise ValueError(f"block count {m} does not divide length {n}")
    r = n // m
    per_block = isinstance(base, GF) and isinstance(op.alpha, (list, tuple, np.ndarray))
    if per_block and len(op.alpha) != m:
        raise ValueError("need one alpha per block")
    blocks = arr.reshape((m, r) + arr.shape[1:])
    out = np.empty_like(blocks)
    for b in range(m):
        a = op.alpha[b] if per_block else op.alpha
        out[b] = _block_shift(base, blocks[b], op.autom, a, r)
    return out.reshape(arr.shape)


def check_permuted_gray_shift(ring: Ring, v, alpha: RingElement, autom: Autom) -> bool:
    """``phi_pi(constacyclic_alpha(v)) == block_constacyclic(phi_pi(v))`` with kl blocks.

    The block for coordinate (i, j) is scaled by ``alpha_ij``.
    """
    if autom.kind == "psi":
        raise PreconditionError("psi mixes CRT coordinates; use theta_t or the identity")
    arr = as_array(ring, v)
    lhs = phi_pi(apply_shift(ShiftOp.constacyclic(autom, alpha), arr, ring))
    op = ShiftOp.block_constacyclic(autom, list(alpha.crt), ring.kl)
    rhs = apply_shift(op, phi_pi(arr), ring.field)
    return bool(np.array_equal(lhs, rhs))


def check_gray_frobenius_shift(ring: Ring, v, t: int) -> bool:
    """``phi(skew_cyclic(v)) == skew_cyclic^kl(phi(v))`` under ``theta_t``.

    Requires ``kl = 1 (mod s/t)``.
    """
    order = ring.field.frobenius_order(t)
    if ring.kl % order != 1 % order:
        raise PreconditionError(f"needs kl = 1 mod {order}, got kl = {ring.kl}")
    autom = Autom.theta(t)
    arr = as_array(ring, v)
    lhs = phi(apply_shift(ShiftOp.cyclic(autom), arr, ring))
    rhs = phi(arr)
    op = ShiftOp.cyclic(autom)
    for _ in range(ring.kl):
        rhs = apply_shift(op, rhs, ring.field)
    return bool(np.array_equal(lhs, rhs))


# ---------------------------------------------------------------------------
# Gray image parameters
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GrayParams:
    n: int
    k_dim: int
    d: int | None
    rho_invariant: bool | None = None

    def as_tuple(self):
        return (self.n, self.k_dim, self.d)

    def to_json(self):
        return {"n": self.n, "k_dim": self.k_dim, "d": self.d}


def gray_image_params(code: Code, cap: int = ENUM_CAP, samples: int = 64, seed: int = 0) -> GrayParams:
    """Length, F_q-dimension and minimum distance of the Gray image.

    For theta/identity codes the minimum is taken over the component codes,
    which occupy disjoint Gray coordinates; each component is enumerated.
    Sampled codewords are also checked for invariance of ``phi_pi(C)`` under
    the block constacyclic shift with kl blocks.
    """
    R = code.ring
    length = R.kl * code.n
    if code.components is None:
        words = code.codewords(cap)
        w = np.count_nonzero(words.reshape(len(words), -1), axis=1)
        d = int(w[w > 0].min()) if (w > 0).any() else None
        return GrayParams(length, code.size_exponent, d, None)

    dists = [c.min_distance(cap) for c in code.components.values()]
    dists = [d for d in dists if d is not None]
    d = min(dists) if dists else None

    rng = np.random.default_rng(seed)
    F = R.field
    basis = code.basis()
    op = ShiftOp.block_constacyclic(code.autom, list(code.alpha.crt), R.kl)
    invariant = True
    if len(basis):
        for _ in range(samples):
            coeffs = rng.integers(0, F.q, len(basis))
            word = np.zeros(basis.shape[1], dtype=np.int64)
            for c, row in zip(coeffs, basis):
                word = F.vadd(word, F.vmul(int(c), row))
            img = apply_shift(op, phi_pi(word.reshape(code.n, R.kl)), F)
            if not code.contains(phi_pi_inv(img, R.kl)):
                invariant = False
                break
    return GrayParams(length, code.size_exponent, d, invariant)
