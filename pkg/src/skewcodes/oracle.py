"""Brute-force reference implementations for validating constructions.

Everything here is written directly against field arithmetic (``GF``) and raw
coefficient arrays: codes are enumerated as F_q-spans of shift orbits,
duals by scanning the ambient space, and shifts by explicit index
bookkeeping.  Nothing is shared with the skew polynomial or code modules.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EnumerationLimitError
from .gf import GF

__all__ = [
    "ORACLE_CAP",
    "CodewordSet",
    "enumerate_code",
    "brute_dual",
    "brute_min_distance",
    "closure_check",
    "oracle_shift",
]

ORACLE_CAP = 1 << 20


# ---------------------------------------------------------------------------
# linear algebra over F_q
# ---------------------------------------------------------------------------

def _row_basis(F: GF, rows: np.ndarray) -> np.ndarray:
    """Row-reduced basis of the F_q-span of ``rows`` (shape ``(M, N)``)."""
    a = np.array(rows, dtype=np.int64)
    if a.size == 0:
        return a.reshape(0, a.shape[-1] if a.ndim >= 2 else 0)
    a = a.reshape(len(a), -1)
    pivots = []
    r = 0
    for col in range(a.shape[1]):
        nz = np.flatnonzero(a[r:, col])
        if not len(nz):
            continue
        piv = r + nz[0]
        a[[r, piv]] = a[[piv, r]]
        a[r] = F.vmul(F.inv(int(a[r, col])), a[r])
        factors = a[:, col].copy()
        factors[r] = 0
        a = F.vadd(a, F.vneg(F.vmul(factors[:, None], a[r][None, :])))
        pivots.append(col)
        r += 1
        if r == a.shape[0]:
            break
    return a[:r]


def _span(F: GF, basis: np.ndarray, cap: int) -> np.ndarray:
    k, N = basis.shape
    if F.q ** k > cap:
        raise EnumerationLimitError(f"{F.q}^{k} codewords exceed the oracle cap of {cap}")
    words = np.zeros((1, N), dtype=np.int64)
    scal = np.arange(F.q)
    for row in basis:
        layer = F.vmul(scal[:, None], row[None, :])
        words = F.vadd(words[None, :, :], layer[:, None, :]).reshape(-1, N)
    return words


def _dots(F: GF, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix of F_q inner products ``a[i] . b[j]``."""
    if F.s == 1:
        return (a @ b.T) % F.p
    acc = np.zeros((a.shape[0], b.shape[0]), dtype=np.int64)
    for col in range(a.shape[1]):
        acc = F.vadd(acc, F.vmul(a[:, col][:, None], b[:, col][None, :]))
    return acc


# ---------------------------------------------------------------------------
# codeword sets
# ---------------------------------------------------------------------------

@dataclass(eq=False)
class CodewordSet:
    """A deduplicated explicit set of codewords.

    ``shape`` is ``(n,)`` for vectors over F_q and ``(n, kl)`` for vectors
    over R in CRT coordinates.
    """

    field: GF
    shape: tuple
    words: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.words, dtype=np.int64).reshape((-1,) + tuple(self.shape))
        keys = self._pack(w.reshape(len(w), -1))
        self._sorted, idx = np.unique(keys, return_index=True)
        self.words = w[np.sort(idx)]

    def _pack(self, flat: np.ndarray) -> np.ndarray:
        """One opaque byte-string key per row; order is memcmp order."""
        dtype = np.uint8 if self.field.q <= 256 else np.uint16
        arr = np.ascontiguousarray(flat, dtype=dtype)
        return arr.view(np.dtype((np.void, arr.shape[1] * arr.itemsize))).ravel()

    @classmethod
    def from_basis(cls, field: GF, shape, basis, cap: int = ORACLE_CAP) -> CodewordSet:
        N = int(np.prod(shape))
        b = _row_basis(field, np.asarray(basis, dtype=np.int64).reshape(-1, N))
        return cls(field, tuple(shape), _span(field, b, cap))

    @property
    def flat(self) -> np.ndarray:
        return self.words.reshape(len(self.words), -1)

    def contains_all(self, words) -> np.ndarray:
        """Membership of each word in a batch."""
        N = int(np.prod(self.shape))
        keys = self._pack(np.asarray(words, dtype=np.int64).reshape(-1, N))
        pos = np.minimum(np.searchsorted(self._sorted, keys), len(self._sorted) - 1)
        return self._sorted[pos] == keys

    def __len__(self):
        return len(self.words)

    def __contains__(self, word) -> bool:
        return bool(self.contains_all(word)[0])

    def __eq__(self, other):
        if not isinstance(other, CodewordSet):
            return NotImplemented
        return (self.shape == other.shape and len(self) == len(other)
                and bool(np.all(self._sorted == other._sorted)))

    __hash__ = None

    def basis(self) -> np.ndarray:
        return _row_basis(self.field, self.flat)

    def log_size(self) -> int:
        """``e`` with ``len(self) == q^e``."""
        e, m = 0, len(self)
        while m > 1 and m % self.field.q == 0:
            m //= self.field.q
            e += 1
        if m != 1:
            raise ValueError("size is not a power of q; not a linear code")
        return e

    def is_linear(self) -> bool:
        return len(self) == self.field.q ** len(self.basis())

    def mapped(self, fn) -> CodewordSet:
        """Image under a vectorised map on the flat words."""
        out = fn(self.flat.copy())
        return CodewordSet(self.field, (out.shape[1],), out)


# ---------------------------------------------------------------------------
# the automorphism and shifts, written from the coordinate formulas
# ---------------------------------------------------------------------------

def _frob(F: GF, arr: np.ndarray, power: int) -> np.ndarray:
    """``a -> a^(p^power)`` elementwise by repeated p-th powers."""
    out = np.array(arr, dtype=np.int64)
    for _ in range(power % F.s):
        res = np.ones_like(out)
        for _ in range(F.p):
            res = F.vmul(res, out)
        out = res
    return out


def _apply_autom(F: GF, arr: np.ndarray, autom, dims) -> np.ndarray:
    """Act on the trailing axis (CRT coordinates) or elementwise on field vectors.

    ``dims`` is ``(k, l)`` for ring vectors and ``None`` for field vectors.
    """
    kind = autom.kind
    if kind == "id":
        return np.array(arr, dtype=np.int64)
    if kind == "theta":
        return _frob(F, arr, autom.t)
    if dims is None:
        raise ValueError("psi acts on ring vectors only")
    k, l = dims
    out = np.empty_like(arr)
    for i in range(k):
        for j in range(l):
            # (psi a)_{i,j} = a_{i,j-1}
            out[..., i * l + j] = arr[..., i * l + (j - 1) % l]
    return out


def oracle_shift(F: GF, words: np.ndarray, op, dims=None) -> np.ndarray:
    """Apply a ShiftOp-like description to a batch of words.

    ``words`` has shape ``(M, n)`` (field) or ``(M, n, kl)`` (ring, CRT
    coordinates).  Per-block alphas (a sequence) are accepted for field words.
    """
    words = np.asarray(words, dtype=np.int64)
    n = words.shape[1]
    kind, alpha, m = op.kind, op.alpha, op.m
    if kind in ("cyclic", "constacyclic"):
        m = n
    r = n // m
    if kind == "block_constacyclic":
        sub = [None] * m
        per_block = dims is None and isinstance(alpha, (list, tuple, np.ndarray))
        for b in range(m):
            a = alpha[b] if per_block else alpha
            sub[b] = _wrap(F, words[:, b * r:(b + 1) * r], op.autom, a, r, dims)
        return np.concatenate(sub, axis=1)
    if kind in ("cyclic", "quasi_cyclic"):
        alpha = None
    return _wrap(F, words, op.autom, alpha, m, dims)


def _wrap(F, words, autom, alpha, m, dims):
    n = words.shape[1]
    r = n // m
    tw = _apply_autom(F, words, autom, dims)
    out = np.empty_like(tw)
    for pos in range(n):
        src = (pos - r) % n
        out[:, pos] = tw[:, src]
    if alpha is not None:
        a = np.asarray(getattr(alpha, "crt", alpha), dtype=np.int64)
        out[:, :r] = F.vmul(a, out[:, :r])
    return out


@dataclass(frozen=True)
class _Op:
    kind: str
    autom: object
    alpha: object = None
    m: int | None = None


# ---------------------------------------------------------------------------
# oracle operations
# ---------------------------------------------------------------------------

def _coeff_array(gen, n: int, alpha):
    """Coefficient array of ``gen`` reduced modulo ``x^n - alpha``.

    Shape ``(n, kl)`` over R, ``(n,)`` over F_q.  Uses ``c x^d = c alpha x^(d-n)``
    for ``d >= n`` (alpha is fixed by the automorphism).
    """
    base = gen.base
    F = base if isinstance(base, GF) else base.field
    ring_dims = None if isinstance(base, GF) else (base.k, base.l)
    width = () if ring_dims is None else (ring_dims[0] * ring_dims[1],)
    full = np.zeros((max(len(gen.coeffs), n),) + width, dtype=np.int64)
    for i, c in enumerate(gen.coeffs):
        full[i] = c.crt if ring_dims else c
    a = np.asarray(getattr(alpha, "crt", alpha), dtype=np.int64)
    for d in range(len(full) - 1, n - 1, -1):
        full[d - n] = F.vadd(full[d - n], F.vmul(a, full[d]))
    return F, ring_dims, full[:n]


def enumerate_code(gen, n: int, alpha, autom, cap: int = ORACLE_CAP) -> CodewordSet:
    """All left multiples of ``gen`` modulo ``x^n - alpha``.

    The code is the smallest F_q-space containing the coefficient vector of
    ``gen`` scaled by every CRT idempotent and closed under the skew
    ``alpha``-constacyclic shift (left multiplication by ``x``).
    """
    F, dims, c0 = _coeff_array(gen, n, alpha)
    shape = (n,) if dims is None else (n, dims[0] * dims[1])
    N = int(np.prod(shape))
    if dims is None:
        seeds = [c0]
    else:
        seeds = []
        for idx in range(shape[1]):
            w = np.zeros_like(c0)
            w[:, idx] = c0[:, idx]
            seeds.append(w)
    op = _Op(kind="constacyclic", autom=autom, alpha=alpha, m=None)
    basis = _row_basis(F, np.array(seeds).reshape(len(seeds), N))
    while True:
        if F.q ** len(basis) > cap:
            raise EnumerationLimitError(f"more than {cap} codewords")
        shifted = oracle_shift(F, basis.reshape((-1,) + shape), op, dims).reshape(len(basis), N)
        nxt = _row_basis(F, np.vstack([basis, shifted]))
        if len(nxt) == len(basis):
            break
        basis = nxt
    return CodewordSet(F, shape, _span(F, basis, cap))


def _ambient(F: GF, N: int, cap: int) -> np.ndarray:
    if F.q ** N > cap:
        raise EnumerationLimitError(f"ambient space {F.q}^{N} exceeds the oracle cap of {cap}")
    grids = np.indices((F.q,) * N).reshape(N, -1).T
    return grids.astype(np.int64)


def brute_dual(cs: CodewordSet, inner: str = "ring", cap: int = ORACLE_CAP,
               chunk: int = 1 << 15) -> CodewordSet:
    """All ambient vectors orthogonal to every codeword.

    ``inner="ring"`` uses ``sum_s c_s d_s`` in R, i.e. orthogonality in each
    CRT coordinate separately; ``inner="field"`` uses the F_q inner product
    of the flattened vectors.  Both agree for field vectors.
    """
    F = cs.field
    N = int(np.prod(cs.shape))
    tests = cs.flat
    if inner == "ring" and len(cs.shape) == 2:
        kl = cs.shape[1]
        masked = []
        for idx in range(kl):
            w = np.zeros_like(cs.words)
            w[:, :, idx] = cs.words[:, :, idx]
            masked.append(w.reshape(len(w), -1))
        tests = np.vstack(masked)
    elif inner not in ("ring", "field"):
        raise ValueError(f"unknown inner product {inner!r}")
    tests = _row_basis(F, tests)
    amb = _ambient(F, N, cap)
    if len(tests) == 0:
        keep = amb
    else:
        parts = []
        for start in range(0, len(amb), chunk):
            block = amb[start:start + chunk]
            ok = ~_dots(F, block, tests).any(axis=1)
            parts.append(block[ok])
        keep = np.vstack(parts)
    return CodewordSet(F, cs.shape, keep)


def brute_min_distance(cs: CodewordSet, metric: str = "hamming"):
    """Minimum nonzero weight; ``None`` when the set has no nonzero word.

    ``hamming`` counts nonzero symbols (a ring symbol is nonzero when any CRT
    coordinate is); ``gray`` counts nonzero F_q coordinates.
    """
    w = cs.words
    if metric == "gray" or w.ndim == 2:
        weights = np.count_nonzero(w.reshape(len(w), -1), axis=1)
    elif metric == "hamming":
        weights = np.count_nonzero(w.any(axis=2), axis=1)
    else:
        raise ValueError(f"unknown metric {metric!r}")
    nz = weights[weights > 0]
    return int(nz.min()) if len(nz) else None


def closure_check(cs: CodewordSet, op, scalar=None, dims=None) -> bool:
    """True iff ``op`` maps every codeword into ``cs``.

    ``op`` is a ShiftOp-like object (kind, autom, alpha, m) or a callable on
    batches of words.  With ``scalar`` the image is multiplied by it before
    the membership test.  ``dims = (k, l)`` is needed for psi on ring words.
    """
    F = cs.field
    if callable(op) and not hasattr(op, "kind"):
        img = np.asarray(op(cs.words.copy()), dtype=np.int64)
    else:
        if dims is None and len(cs.shape) == 2 and op.autom.kind == "psi":
            raise ValueError("psi closure checks need dims=(k, l)")
        img = oracle_shift(F, cs.words, op, dims)
    if scalar is not None:
        s = np.asarray(getattr(scalar, "crt", scalar), dtype=np.int64)
        img = F.vmul(s, img)
    return bool(cs.contains_all(img).all())
