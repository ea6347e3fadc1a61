"""Automorphism tags carried by skew polynomials and shift operators."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import ConfigError


@dataclass(frozen=True)
class Autom:
    """One of the identity, ``psi`` (cyclic shift of the v-index) or the
    Frobenius power ``theta_t``.

    Tags compare strictly: ``theta_s`` acts as the identity but is a
    different tag from ``Autom.identity()``.
    """

    kind: str
    t: int | None = None

    def __post_init__(self):
        if self.kind not in ("id", "psi", "theta"):
            raise ValueError(f"unknown automorphism kind {self.kind!r}")
        if (self.kind == "theta") != (self.t is not None):
            raise ValueError("theta needs t; id and psi take none")
        if self.kind == "theta" and self.t < 1:
            raise ValueError("theta_t needs t >= 1")

    @classmethod
    def identity(cls) -> Autom:
        return cls("id")

    @classmethod
    def psi(cls) -> Autom:
        return cls("psi")

    @classmethod
    def theta(cls, t: int) -> Autom:
        return cls("theta", int(t))

    def to_json(self):
        return {"theta": self.t} if self.kind == "theta" else self.kind

    @classmethod
    def from_json(cls, obj) -> Autom:
        if obj in ("id", "identity", None):
            return cls.identity()
        if obj == "psi":
            return cls.psi()
        if isinstance(obj, dict) and set(obj) == {"theta"} and isinstance(obj["theta"], int):
            return cls.theta(obj["theta"])
        raise ConfigError(f'autom must be "id", "psi" or {{"theta": t}}, got {obj!r}')

    def __str__(self):
        return f"theta_{self.t}" if self.kind == "theta" else self.kind
