"""Command-line front end.

    skewcodes <command> [config.json | -] [--json] [--verify oracle] [--seed N]

Commands: verify-generator, build, decompose, dual, idempotent, gray,
mindist, classify, examples.  The config is read from a path, from
``--example NAME`` (a bundled config), or from standard input.

Exit codes: 0 success, 2 config error, 3 mathematical precondition,
4 oracle enumeration bound, 5 failed assertion or example.
"""
from __future__ import annotations

import argparse
import json
import math
import sys

from .codes import Code, code_from_generator
from .config import JobConfig, list_examples, load_config, load_example
from .errors import ConfigError, EnumerationLimitError, PreconditionError
from .gray import gray_image_params
from .oracle import CodewordSet, brute_dual, brute_min_distance, enumerate_code
from .replay import run_examples
from .skewpoly import SkewPoly

EXIT_OK, EXIT_CONFIG, EXIT_PRECONDITION, EXIT_ORACLE, EXIT_ASSERT = 0, 2, 3, 4, 5


# ---------------------------------------------------------------------------
# report helpers
# ---------------------------------------------------------------------------

def _poly_report(p: SkewPoly) -> dict:
    return {"coeffs": p.to_json()["coeffs"], "text": p.format()}


def _job_header(job: JobConfig) -> dict:
    raw = job.raw
    return {
        "ring": raw["ring"],
        "n": job.n,
        "autom": job.autom.to_json(),
        "alpha": job.alpha.to_json(),
    }


def _component_report(code: Code) -> list:
    F = code.field
    rows = []
    for ent in code.component_table():
        g = code.components[(ent["i"] - 1, ent["j"] - 1)].gen
        rows.append({**ent, "alpha_text": F.format(ent["alpha"]), "gen_text": g.format()})
    return rows


def _words_of(code: Code) -> CodewordSet:
    return CodewordSet(code.field, (code.n, code.ring.kl), code.codewords())


# ---------------------------------------------------------------------------
# commands: each returns (report, exit_code)
# ---------------------------------------------------------------------------

def cmd_verify_generator(job: JobConfig, opts) -> tuple[dict, int]:
    """Right-divisibility of x^n - alpha by the generator, with size and class."""
    gen = job.gen if job.gen is not None else job.build().gen
    xn = SkewPoly.x_n_minus(job.ring, job.n, job.alpha, job.autom)
    _, rem = xn.right_divrem(gen)
    report = {"gen": _poly_report(gen), "divides": rem.is_zero()}
    if not rem.is_zero():
        report["remainder"] = _poly_report(rem)
        return report, EXIT_OK
    code = code_from_generator(job.ring, job.n, job.autom, job.alpha, gen)
    report["size_exponent"] = code.size_exponent
    report["classification"] = code.classify_shift().to_json()
    report["classification_text"] = str(code.classify_shift())
    if opts.verify == "oracle":
        cs = enumerate_code(gen, job.n, job.alpha, job.autom)
        report["oracle"] = {"words": len(cs), "matches_size": len(cs) == job.field.q ** code.size_exponent}
    return report, EXIT_OK


def cmd_build(job: JobConfig, opts) -> tuple[dict, int]:
    """Generator over R from a component table; re-feedable to verify-generator."""
    if job.components is None:
        raise ConfigError("build needs a 'components' table")
    code = job.build()
    report = {**_job_header(job), "gen": code.gen.to_json()}
    report["gen_text"] = code.gen.format()
    report["size_exponent"] = code.size_exponent
    report["classification"] = code.classify_shift().to_json()
    report["components"] = _component_report(code)
    if opts.verify == "oracle":
        cs = enumerate_code(code.gen, job.n, job.alpha, job.autom)
        report["oracle"] = {"matches": cs == _words_of(code)}
    return report, EXIT_OK


def cmd_decompose(job: JobConfig, opts) -> tuple[dict, int]:
    """Component codes C_ij with their alpha_ij, dimension and generator."""
    code = job.build()
    return {"components": _component_report(code), "size_exponent": code.size_exponent}, EXIT_OK


def cmd_classify(job: JobConfig, opts) -> tuple[dict, int]:
    """Shift-closure class of the code: cyclic, constacyclic, quasi-cyclic or quasi-twisted."""
    code = job.build()
    kind = code.classify_shift()
    return {"classification": kind.to_json(), "text": str(kind)}, EXIT_OK


def cmd_dual(job: JobConfig, opts) -> tuple[dict, int]:
    """Generator of the Euclidean dual, built from the component duals."""
    code = job.build()
    if code.components is None:
        if opts.verify != "oracle":
            raise PreconditionError("psi-code duals are available only with --verify oracle")
        bd = brute_dual(enumerate_code(code.gen, job.n, job.alpha, job.autom))
        return {"oracle": {"dual_size_exponent": bd.log_size()}}, EXIT_OK
    dual = code.dual()
    report = {
        **_job_header(job),
        "alpha": dual.alpha.to_json(),
        "gen": dual.gen.to_json(),
        "gen_text": dual.gen.format(),
        "size_exponent": dual.size_exponent,
        "components": _component_report(dual),
        "selfdual": code.is_selfdual(),
    }
    if opts.verify == "oracle":
        bd = brute_dual(enumerate_code(code.gen, job.n, job.alpha, job.autom))
        ok = bd == _words_of(dual)
        report["oracle"] = {"matches": ok}
        if not ok:
            return report, EXIT_ASSERT
    return report, EXIT_OK


def cmd_idempotent(job: JobConfig, opts) -> tuple[dict, int]:
    """Idempotent generator of the code and of its dual."""
    code = job.build()
    if code.components is None:
        raise PreconditionError("idempotents of psi-codes are not computed")
    e = code.idempotent()
    de = code.dual_idempotent()
    report = {"idempotent": _poly_report(e), "dual_idempotent": _poly_report(de)}
    if opts.verify == "oracle":
        ok = enumerate_code(e, job.n, job.alpha, job.autom) == enumerate_code(code.gen, job.n, job.alpha, job.autom)
        report["oracle"] = {"same_code": ok}
        if not ok:
            return report, EXIT_ASSERT
    return report, EXIT_OK


def cmd_gray(job: JobConfig, opts) -> tuple[dict, int]:
    """Length, dimension and minimum distance of the Gray image."""
    code = job.build()
    params = gray_image_params(code, seed=opts.seed)
    report = params.to_json()
    report["rho_invariant"] = params.rho_invariant
    if opts.verify == "oracle":
        ds = []
        if code.components is None:
            ds.append(brute_min_distance(enumerate_code(code.gen, job.n, job.alpha, job.autom), "gray"))
        else:
            for comp in code.components.values():
                ds.append(brute_min_distance(enumerate_code(comp.gen, job.n, comp.alpha, job.autom)))
        ds = [d for d in ds if d is not None]
        ok = (min(ds) if ds else None) == params.d
        report["oracle"] = {"d": min(ds) if ds else None, "matches": ok}
        if not ok:
            return report, EXIT_ASSERT
    return report, EXIT_OK


def cmd_mindist(job: JobConfig, opts) -> tuple[dict, int]:
    """Minimum Hamming (symbol) and Gray distances of the code over R."""
    code = job.build()
    if code.components is None:
        cs = enumerate_code(code.gen, job.n, job.alpha, job.autom)
        report = {"hamming": brute_min_distance(cs, "hamming"), "gray": brute_min_distance(cs, "gray")}
        return report, EXIT_OK
    # a word supported on one component realises both minima
    d = gray_image_params(code, samples=0).d
    report = {"hamming": d, "gray": d}
    if opts.verify == "oracle":
        cs = enumerate_code(code.gen, job.n, job.alpha, job.autom)
        got = {"hamming": brute_min_distance(cs, "hamming"), "gray": brute_min_distance(cs, "gray")}
        report["oracle"] = {**got, "matches": got == {"hamming": d, "gray": d}}
        if not report["oracle"]["matches"]:
            return report, EXIT_ASSERT
    return report, EXIT_OK


def cmd_examples(opts) -> tuple[dict, int]:
    names = list_examples() if opts.all else None
    reports = run_examples(names)
    ok = all(r.ok for r in reports)
    return {"ok": ok, "examples": [r.to_json() for r in reports]}, EXIT_OK if ok else EXIT_ASSERT


COMMANDS = {
    "verify-generator": cmd_verify_generator,
    "build": cmd_build,
    "decompose": cmd_decompose,
    "dual": cmd_dual,
    "idempotent": cmd_idempotent,
    "gray": cmd_gray,
    "mindist": cmd_mindist,
    "classify": cmd_classify,
}


# ---------------------------------------------------------------------------
# output
# ---------------------------------------------------------------------------

def _print_human(command: str, report: dict, out):
    if command == "examples":
        for ex in report["examples"]:
            status = "PASS" if ex["ok"] else "FAIL"
            print(f"{status} {ex['name']} ({ex['seconds']:.3f} s)", file=out)
            for c in ex["checks"]:
                if not c["ok"]:
                    print(f"    {c['check']}: {c['detail']}", file=out)
        total = len(report["examples"])
        passed = sum(ex["ok"] for ex in report["examples"])
        print(f"{passed}/{total} passed", file=out)
        return
    for key, val in report.items():
        if key == "components" and isinstance(val, list):
            print("components:", file=out)
            for c in val:
                print(f"  ({c['i']},{c['j']}) alpha={c['alpha_text']} dim={c['dim']}: {c['gen_text']}", file=out)
        elif isinstance(val, dict) and "text" in val:
            print(f"{key}: {val['text']}", file=out)
        elif isinstance(val, (dict, list)):
            print(f"{key}: {json.dumps(val)}", file=out)
        else:
            print(f"{key}: {val}", file=out)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--verify", choices=["oracle"], help="cross-check against brute-force enumeration")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized sampling")

    parser = argparse.ArgumentParser(
        prog="skewcodes",
        description="Skew constacyclic codes over F_q[u,v]/<f(u), g(v), uv - vu>.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, fn in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=(fn.__doc__ or "").strip().split("\n")[0] or None)
        p.add_argument("config", nargs="?", default="-", help="JSON config path, or - for stdin")
        p.add_argument("--example", help=f"bundled config name ({', '.join(list_examples())})")
        p.add_argument("--variant", type=int, default=None, help="variant index for multi-code configs")
    ex = sub.add_parser("examples", parents=[common], help="replay the bundled example configs")
    ex.add_argument("--all", action="store_true", help="include the desk-scale configs")
    return parser


def _load(args) -> JobConfig:
    if args.example:
        return load_example(args.example, args.variant)
    if args.config == "-":
        return load_config(sys.stdin, args.variant)
    return load_config(args.config, args.variant)


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        if args.command == "examples":
            report, code = cmd_examples(args)
        else:
            report, code = COMMANDS[args.command](_load(args), args)
    except ConfigError as exc:
        return _fail(args, "config", exc, EXIT_CONFIG, out)
    except EnumerationLimitError as exc:
        return _fail(args, "oracle_bound", exc, EXIT_ORACLE, out)
    except (PreconditionError, ValueError, ZeroDivisionError) as exc:
        return _fail(args, "precondition", exc, EXIT_PRECONDITION, out)
    except AssertionError as exc:
        return _fail(args, "assertion", exc, EXIT_ASSERT, out)
    if args.json:
        print(json.dumps(report, indent=2, default=_json_default), file=out)
    else:
        _print_human(args.command, report, out)
    return code


def _json_default(obj):
    if isinstance(obj, float) and math.isinf(obj):
        return None
    if hasattr(obj, "item"):
        return obj.item()
    raise TypeError(f"not serialisable: {type(obj).__name__}")


def _fail(args, kind: str, exc: Exception, code: int, out) -> int:
    msg = str(exc)
    if args.json:
        print(json.dumps({"error": kind, "message": msg, "exit_code": code}), file=out)
    else:
        print(f"error ({kind}): {msg}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
