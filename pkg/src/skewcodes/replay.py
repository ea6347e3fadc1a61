"""Replay the ``expect`` blocks of bundled configurations.

Each key of an ``expect`` block names one check; a configuration passes when
every check does.  Configurations with variants are checked per variant.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field as dc_field

from .codes import Code
from .config import JobConfig, load_example_json, parse_config, parse_element, parse_poly, list_examples
from .errors import SkewCodesError
from .gray import gray_image_params
from .oracle import brute_min_distance, enumerate_code
from .skewpoly import SkewPoly

__all__ = ["Check", "ExampleReport", "run_config", "run_example", "run_examples", "worked_examples"]


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""

    def to_json(self):
        return {"check": self.name, "ok": self.ok, "detail": self.detail}


@dataclass
class ExampleReport:
    name: str
    checks: list = dc_field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return bool(self.checks) and all(c.ok for c in self.checks)

    def failures(self) -> list:
        return [c for c in self.checks if not c.ok]

    def to_json(self):
        return {
            "name": self.name,
            "ok": self.ok,
            "seconds": round(self.seconds, 3),
            "checks": [c.to_json() for c in self.checks],
        }


def _generator(job: JobConfig, code: Code | None) -> SkewPoly:
    if code is not None:
        return code.gen
    return job.gen


def _check(job: JobConfig, key: str, want, code: Code | None) -> Check:
    R, F, n, A = job.ring, job.field, job.n, job.autom
    if key == "divides":
        gen = _generator(job, code)
        xn = SkewPoly.x_n_minus(R, n, job.alpha, A)
        _, rem = xn.right_divrem(gen)
        got = rem.is_zero()
        return Check(key, got == want, f"remainder {rem}")
    if key == "classification":
        got = code.classify_shift()
        ok = got.kind == want["kind"] and got.index == want["index"]
        return Check(key, ok, str(got))
    if key == "autom_order":
        got = R.autom_order(A)
        return Check(key, got == want, f"order {got}")
    if key == "psi_map":
        bad = []
        for a, b in want:
            x, y = parse_element(R, a), parse_element(R, b)
            if R.psi(x) != y:
                bad.append(f"psi({x}) = {R.psi(x)}, expected {y}")
        return Check(key, not bad, "; ".join(bad) or f"{len(want)} images")
    if key == "alpha":
        exp = parse_element(R, want)
        return Check(key, job.alpha == exp, f"alpha = {job.alpha}")
    if key == "alpha_unit":
        return Check(key, job.alpha.is_unit() == want, f"alpha = {job.alpha}")
    if key == "component_alphas":
        return Check(key, list(job.alpha.crt) == list(want), f"crt {list(job.alpha.crt)}")
    if key == "eta":
        bad = []
        for ent in want:
            got = R.eta(ent["i"] - 1, ent["j"] - 1)
            exp = parse_element(R, ent["value"])
            if got != exp:
                bad.append(f"eta_{ent['i']}{ent['j']} = {got}, expected {exp}")
        return Check(key, not bad, "; ".join(bad) or f"{len(want)} idempotents")
    if key == "gen":
        exp = parse_poly(R, want, A, "expect.gen")
        return Check(key, code.gen == exp, f"gen = {code.gen}")
    if key == "field_factorizations":
        bad = []
        for ent in want:
            target = SkewPoly.x_n_minus(F, n, ent["alpha"], A)
            prod = SkewPoly.one(F, A)
            for fac in ent["factors"]:
                prod = prod * SkewPoly.from_coeffs(F, fac, A)
            if prod != target:
                bad.append(f"product {prod} != {target}")
        return Check(key, not bad, "; ".join(bad) or f"{len(want)} factorizations")
    if key == "gray":
        got = gray_image_params(code).as_tuple()
        return Check(key, list(got) == list(want), f"(n, k, d) = {got}")
    if key == "gray_rho_invariant":
        got = gray_image_params(code).rho_invariant
        return Check(key, got == want, f"invariant = {got}")
    if key == "component_words":
        sizes, dists = [], []
        for comp in code.components.values():
            cs = enumerate_code(comp.gen, n, comp.alpha, A)
            sizes.append(len(cs))
            dists.append(brute_min_distance(cs))
        ok = all(s == want for s in sizes)
        return Check(key, ok, f"sizes {sizes}, distances {dists}")
    return Check(key, False, "unknown expectation key")


def run_config(job: JobConfig) -> ExampleReport:
    report = ExampleReport(job.name)
    start = time.perf_counter()
    try:
        code = job.build()
    except SkewCodesError as exc:
        code = None
        report.checks.append(Check("build", False, str(exc)))
    for key, want in job.expect.items():
        try:
            report.checks.append(_check(job, key, want, code))
        except (SkewCodesError, ValueError, ZeroDivisionError, AttributeError) as exc:
            report.checks.append(Check(key, False, f"{type(exc).__name__}: {exc}"))
    report.seconds = time.perf_counter() - start
    return report


def run_example(name: str) -> list[ExampleReport]:
    obj = load_example_json(name)
    count = len(obj.get("variants", [None]))
    return [run_config(parse_config(obj, v if count > 1 or "variants" in obj else None)) for v in range(count)]


def worked_examples() -> list[str]:
    return [n for n in list_examples() if n.startswith("example")]


def run_examples(names=None) -> list[ExampleReport]:
    out = []
    for name in names or worked_examples():
        out.extend(run_example(name))
    return out
