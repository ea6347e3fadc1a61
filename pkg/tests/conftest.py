import numpy as np
import pytest

from skewcodes.config import list_examples, load_example, load_example_json

ACCEPTANCE: dict[int, tuple[str, bool, str]] = {}


def record(num: int, label: str, ok: bool, detail: str = ""):
    """Register an acceptance verdict; printed in the terminal summary."""
    ACCEPTANCE[num] = (label, bool(ok), detail)
    print(f"ACCEPTANCE {num:2d} {'PASS' if ok else 'FAIL'} {label} {detail}")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        label, ok, detail = ACCEPTANCE[num]
        terminalreporter.write_line(f"[{num:2d}] {'PASS' if ok else 'FAIL'}  {label}  {detail}")


def all_jobs():
    """Every bundled configuration, one entry per variant."""
    jobs = []
    for name in list_examples():
        count = len(load_example_json(name).get("variants", [None]))
        for v in range(count):
            jobs.append(load_example(name, v if count > 1 else None))
    return jobs


def bundled_rings():
    rings = []
    for job in all_jobs():
        if not any(job.ring == r for r, _ in rings):
            rings.append((job.ring, job.name))
    return rings


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
