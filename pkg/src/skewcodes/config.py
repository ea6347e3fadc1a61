"""JSON job configurations: parsing, validation and the bundled examples.

Field elements are integers ``sum c_i p^i`` over the coefficients of the
field element in the power basis of the modulus root.  Ring elements are
given either as flat CRT lists (``i`` outer, ``j`` inner) or as
``{"uv": table}`` with ``table[a][b]`` the coefficient of ``u^a v^b``.
"""
from __future__ import annotations

import copy
import json
from dataclasses import dataclass, field as dc_field
from importlib import resources
from pathlib import Path

from .autom import Autom
from .errors import ConfigError
from .gf import GF
from .ring import Ring, RingElement
from .skewpoly import SkewPoly

__all__ = [
    "JobConfig",
    "parse_field",
    "parse_ring",
    "parse_element",
    "parse_poly",
    "parse_config",
    "load_config",
    "list_examples",
    "load_example",
]


def _need(obj: dict, key: str, where: str):
    if not isinstance(obj, dict) or key not in obj:
        raise ConfigError(f"{where}: missing field {key!r}")
    return obj[key]


def parse_field(obj) -> GF:
    where = "ring.field"
    if not isinstance(obj, dict):
        raise ConfigError(f"{where}: expected an object with p, s and optional modulus")
    p = _need(obj, "p", where)
    s = obj.get("s", 1)
    try:
        return GF(int(p), int(s), obj.get("modulus"))
    except (ValueError, TypeError) as exc:
        raise ConfigError(f"{where}: {exc}") from None


def _roots(F: GF, obj: dict, key: str) -> list[int]:
    if f"{key}_roots" in obj:
        roots = obj[f"{key}_roots"]
    elif key in obj:
        roots = F.roots_of(obj[key])
        if len(roots) != len(obj[key]) - 1:
            raise ConfigError(f"ring.{key}: polynomial does not split over the field")
    else:
        raise ConfigError(f"ring: missing field {key + '_roots'!r} (or {key!r})")
    if not isinstance(roots, list) or not all(isinstance(r, int) for r in roots):
        raise ConfigError(f"ring.{key}_roots: expected a list of field integers")
    return roots


def parse_ring(obj) -> Ring:
    F = parse_field(_need(obj, "field", "ring"))
    f_roots, g_roots = _roots(F, obj, "f"), _roots(F, obj, "g")
    try:
        return Ring(F, f_roots, g_roots)
    except ValueError as exc:
        raise ConfigError(f"ring: {exc}") from None


def parse_element(base, obj, where: str = "element"):
    """A field int, or a ring element from a CRT list / ``{"uv": table}`` / int constant."""
    try:
        if isinstance(base, GF):
            return base.check(int(obj))
        if isinstance(obj, dict):
            return base.from_uv_poly(_need(obj, "uv", where))
        if isinstance(obj, int):
            return base.const(obj)
        return base.element(obj)
    except ConfigError:
        raise
    except (ValueError, TypeError, IndexError) as exc:
        raise ConfigError(f"{where}: {exc}") from None


def parse_poly(base, obj, autom: Autom, where: str = "gen") -> SkewPoly:
    """Ascending coefficient list, or ``{"autom": tag, "coeffs": [...]}``."""
    if isinstance(obj, dict):
        if "autom" in obj:
            tag = Autom.from_json(obj["autom"])
            if tag != autom:
                raise ConfigError(f"{where}: automorphism {tag} differs from the job's {autom}")
        obj = _need(obj, "coeffs", where)
    if not isinstance(obj, list) or not obj:
        raise ConfigError(f"{where}: expected a nonempty coefficient list")
    coeffs = tuple(parse_element(base, c, f"{where}[{d}]") for d, c in enumerate(obj))
    try:
        return SkewPoly(base, coeffs, autom)
    except ValueError as exc:
        raise ConfigError(f"{where}: {exc}") from None


@dataclass
class JobConfig:
    """A parsed job: ring, length, automorphism, alpha and a generator description."""

    ring: Ring
    n: int
    autom: Autom
    alpha: RingElement
    gen: SkewPoly | None = None
    components: dict | None = None
    name: str = ""
    expect: dict = dc_field(default_factory=dict)
    extra: dict = dc_field(default_factory=dict)
    raw: dict = dc_field(default_factory=dict)

    @property
    def field(self) -> GF:
        return self.ring.field

    def build(self):
        """The Code described by this job (components take precedence)."""
        from .codes import code_from_components, code_from_generator

        if self.components is not None:
            return code_from_components(self.ring, self.n, self.autom, self.alpha, self.components)
        if self.gen is None:
            raise ConfigError("config has neither 'gen' nor 'components'")
        return code_from_generator(self.ring, self.n, self.autom, self.alpha, self.gen)


def _components(ring: Ring, entries, autom: Autom) -> dict:
    if not isinstance(entries, list):
        raise ConfigError("components: expected a list of {i, j, gen} objects")
    out = {}
    for idx, ent in enumerate(entries):
        where = f"components[{idx}]"
        i, j = _need(ent, "i", where), _need(ent, "j", where)
        if not (isinstance(i, int) and isinstance(j, int) and 1 <= i <= ring.k and 1 <= j <= ring.l):
            raise ConfigError(f"{where}: (i, j) = ({i}, {j}) outside 1..{ring.k} x 1..{ring.l}")
        out[(i - 1, j - 1)] = parse_poly(ring.field, _need(ent, "gen", where), autom, f"{where}.gen")
    return out


def parse_config(obj: dict, variant: int | None = None) -> JobConfig:
    """Validate a JSON object and return a JobConfig.

    A config with ``"variants"`` is a shared header plus a list of overrides;
    ``variant`` selects one (default 0).
    """
    if not isinstance(obj, dict):
        raise ConfigError("config: expected a JSON object")
    if "variants" in obj:
        variants = obj["variants"]
        idx = 0 if variant is None else variant
        if not (0 <= idx < len(variants)):
            raise ConfigError(f"variant {idx} out of range 0..{len(variants) - 1}")
        merged = {k: v for k, v in obj.items() if k != "variants"}
        merged.update(copy.deepcopy(variants[idx]))
        merged["name"] = f"{obj.get('name', '')}/{variants[idx].get('label', idx)}"
        obj = merged
    ring = parse_ring(_need(obj, "ring", "config"))
    n = _need(obj, "n", "config")
    if not isinstance(n, int) or n < 1:
        raise ConfigError("n: expected a positive integer")
    autom = Autom.from_json(obj.get("autom", "id"))
    try:
        ring.autom_order(autom)
    except ValueError as exc:
        raise ConfigError(f"autom: {exc}") from None
    alpha = parse_element(ring, obj.get("alpha", 1), "alpha")
    gen = comps = None
    if "components" in obj:
        comps = _components(ring, obj["components"], autom)
    if "gen" in obj:
        gen = parse_poly(ring, obj["gen"], autom)
    if gen is None and comps is None:
        raise ConfigError("config: supply 'gen' or 'components'")
    known = {"ring", "n", "autom", "alpha", "gen", "components", "name", "expect", "label", "description"}
    return JobConfig(
        ring=ring, n=n, autom=autom, alpha=alpha, gen=gen, components=comps,
        name=obj.get("name", ""), expect=obj.get("expect", {}),
        extra={k: v for k, v in obj.items() if k not in known}, raw=obj,
    )


def load_config(source, variant: int | None = None) -> JobConfig:
    """Load from a path, a JSON string, a file object or an already-parsed dict."""
    if isinstance(source, dict):
        return parse_config(source, variant)
    if hasattr(source, "read"):
        text = source.read()
    elif isinstance(source, Path) or (isinstance(source, str) and not source.lstrip().startswith("{")):
        try:
            text = Path(source).read_text()
        except OSError as exc:
            raise ConfigError(f"cannot read config: {exc}") from None
    else:
        text = source
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return parse_config(obj, variant)


def _data_dir():
    return resources.files("skewcodes") / "data"


def list_examples() -> list[str]:
    return sorted(p.name[:-5] for p in _data_dir().iterdir() if p.name.endswith(".json"))


def load_example_json(name: str) -> dict:
    path = _data_dir() / f"{name}.json"
    if not path.is_file():
        raise ConfigError(f"no bundled config named {name!r}; known: {', '.join(list_examples())}")
    return json.loads(path.read_text())


def load_example(name: str, variant: int | None = None) -> JobConfig:
    return parse_config(load_example_json(name), variant)


def variant_count(obj: dict) -> int:
    return len(obj.get("variants", [None]))

