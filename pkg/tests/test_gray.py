import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from skewcodes.autom import Autom
from skewcodes.codes import code_from_components
from skewcodes.config import load_example
from skewcodes.errors import PreconditionError
from skewcodes.gf import GF
from skewcodes.gray import (
    ShiftOp,
    apply_shift,
    as_array,
    check_gray_frobenius_shift,
    check_permuted_gray_shift,
    gray_distance,
    gray_image_params,
    gray_weight,
    phi,
    phi_inv,
    phi_pi,
    phi_pi_inv,
)
from skewcodes.oracle import CodewordSet, closure_check, enumerate_code, oracle_shift
from skewcodes.ring import Ring

F5 = GF(5)
ID = Autom.identity()
TH = Autom.theta(1)
PSI = Autom.psi()

ENUMERABLE = ["example4", "desk_f4_skew_n4", "desk_f9_skew_n2", "desk_f5_const_n3",
              "desk_f2_cyclic_n5", "desk_f3_const_n4", "desk_f4_skew_n3"]
RINGS = [load_example(n).ring for n in ["example1", "example2", "example5", "example6", "desk_f9_skew_n2"]]


def test_phi_examples():
    R = Ring(F5, [0, 1], [0, 1])
    assert np.array_equal(phi(np.zeros((3, 4), dtype=np.int64)), np.zeros(12))
    assert list(phi(as_array(R, [R.eta(0, 0)]))) == [1, 0, 0, 0]
    v = np.array([[1, 2], [3, 4]])  # rows (a, b), (c, d)
    assert list(phi(v)) == [1, 2, 3, 4]
    assert list(phi_pi(v)) == [1, 3, 2, 4]
    assert np.array_equal(phi_inv(phi(v), 2), v)
    assert np.array_equal(phi_pi_inv(phi_pi(v), 2), v)


def test_gray_weight_examples():
    R = Ring(F5, [0, 1], [0, 1])
    assert gray_weight(np.zeros((2, 4), dtype=np.int64)) == 0
    assert gray_weight(as_array(R, [R.one])) == R.kl
    assert gray_weight(as_array(R, [R.eta(0, 0)])) == 1


def test_negacyclic_shift():
    op = ShiftOp.constacyclic(ID, 4)
    assert list(apply_shift(op, [2, 3], F5)) == [F5.neg(3), 2]


def test_shift_kinds_on_field_vectors():
    v = [1, 2, 3, 4]
    assert list(apply_shift(ShiftOp.cyclic(ID), v, F5)) == [4, 1, 2, 3]
    assert list(apply_shift(ShiftOp.quasi_cyclic(ID, 2), v, F5)) == [3, 4, 1, 2]
    assert list(apply_shift(ShiftOp.quasi_twisted(ID, 2, 2), v, F5)) == [1, 3, 1, 2]
    assert list(apply_shift(ShiftOp.block_constacyclic(ID, [2, 3], 2), v, F5)) == [4, 1, 2, 3]


def test_shift_validation():
    with pytest.raises(ValueError):
        ShiftOp("spiral", ID)
    with pytest.raises(ValueError):
        ShiftOp("quasi_cyclic", ID)
    with pytest.raises(ValueError):
        apply_shift(ShiftOp.quasi_cyclic(ID, 3), [1, 2, 3, 4], F5)
    with pytest.raises(ValueError):
        apply_shift(ShiftOp.cyclic(PSI), [1, 2], F5)


def test_psi_shift_on_ring_vectors():
    R = load_example("example1").ring
    v = [R.v(), R.one]
    out = apply_shift(ShiftOp.cyclic(PSI), v, R)
    assert [R.element(r) for r in out] == [R.one, R.psi(R.v())]


def test_commuting_checks_preconditions():
    R = load_example("example1").ring
    with pytest.raises(PreconditionError):
        check_permuted_gray_shift(R, [R.one], R.one, PSI)
    R7 = load_example("example7", 0).ring  # kl = 6, s / t = 2
    with pytest.raises(PreconditionError):
        check_gray_frobenius_shift(R7, [R7.one], 1)


def test_commuting_checks_on_zero():
    job = load_example("desk_f9_skew_n2")
    zero = np.zeros((job.n, job.ring.kl), dtype=np.int64)
    assert check_permuted_gray_shift(job.ring, zero, job.alpha, job.autom)
    assert check_gray_frobenius_shift(job.ring, zero, 1)


def test_zero_code_params():
    R = Ring(F5, [0, 1], [0])
    zero = code_from_components(R, 2, ID, R.one, {p: [4, 0, 1] for p in R.pairs()})
    assert gray_image_params(zero).as_tuple() == (4, 0, None)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(RINGS), st.integers(1, 5), st.integers(0, 2**32 - 1))
def test_phi_linear_bijective_isometric(R, n, seed):
    rng = np.random.default_rng(seed)
    F = R.field
    v, w = (rng.integers(0, F.q, (n, R.kl)) for _ in range(2))
    a, b = (int(x) for x in rng.integers(0, F.q, 2))
    comb = F.vadd(F.vmul(a, v), F.vmul(b, w))
    assert np.array_equal(phi(comb), F.vadd(F.vmul(a, phi(v)), F.vmul(b, phi(w))))
    assert np.array_equal(phi_inv(phi(v), R.kl), v)
    assert np.array_equal(phi_pi_inv(phi_pi(v), R.kl), v)
    # phi and phi_pi differ by a fixed coordinate permutation
    perm = phi_pi(np.arange(n * R.kl).reshape(n, R.kl))
    assert np.array_equal(phi(v)[perm], phi_pi(v))
    dh = int(np.count_nonzero(phi(v) != phi(w)))
    assert gray_distance(v, w, F) == dh


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(["example5", "example6", "desk_f9_skew_n2", "desk_f3_const_n4", "example4"]),
       st.sampled_from(["cyclic", "constacyclic", "quasi_cyclic", "quasi_twisted", "block_constacyclic"]),
       st.integers(0, 2**32 - 1))
def test_shift_matches_oracle_shift(name, kind, seed):
    job = load_example(name)
    R, n = job.ring, job.n
    rng = np.random.default_rng(seed)
    v = rng.integers(0, R.field.q, (3, n, R.kl))
    m = 1 if n % 2 else 2
    op = {
        "cyclic": ShiftOp.cyclic(job.autom),
        "constacyclic": ShiftOp.constacyclic(job.autom, job.alpha),
        "quasi_cyclic": ShiftOp.quasi_cyclic(job.autom, m),
        "quasi_twisted": ShiftOp.quasi_twisted(job.autom, job.alpha, m),
        "block_constacyclic": ShiftOp.block_constacyclic(job.autom, job.alpha, m),
    }[kind]
    want = oracle_shift(R.field, v, op, (R.k, R.l))
    for w, exp in zip(v, want):
        assert np.array_equal(apply_shift(op, w, R), exp)


def test_psi_shift_matches_oracle_shift():
    R = load_example("example2").ring
    rng = np.random.default_rng(2)
    v = rng.integers(0, R.field.q, (5, 8, R.kl))
    op = ShiftOp.cyclic(PSI)
    want = oracle_shift(R.field, v, op, (R.k, R.l))
    for w, exp in zip(v, want):
        assert np.array_equal(apply_shift(op, w, R), exp)


def _rho_on_images(job):
    F, R = job.field, job.ring
    op = ShiftOp.block_constacyclic(job.autom, list(job.alpha.crt), R.kl)

    def fn(batch):
        return oracle_shift(F, batch, op)
    return fn


@pytest.mark.parametrize("name", ENUMERABLE)
def test_permuted_gray_image_is_block_constacyclic(name):
    job = load_example(name)
    cs = enumerate_code(job.build().gen, job.n, job.alpha, job.autom)
    images = CodewordSet(job.field, (job.n * job.ring.kl,),
                         np.array([phi_pi(w) for w in cs.words]))
    assert closure_check(images, _rho_on_images(job))
    assert gray_image_params(job.build()).rho_invariant


def _random_codeword(code, rng):
    F = code.field
    basis = code.basis()
    coeffs = rng.integers(0, F.q, len(basis))
    word = np.zeros(basis.shape[1], dtype=np.int64)
    for c, row in zip(coeffs, basis):
        word = F.vadd(word, F.vmul(int(c), row))
    return word.reshape(code.n, code.ring.kl)


CLOSURE_CASES = ["example1", "example2", "example6", "desk_f2_psi_n4", "desk_f4_skew_n4",
                 "desk_f9_skew_n2", ("example7", 0), ("example7", 1)]


@pytest.mark.parametrize("case", CLOSURE_CASES, ids=str)
def test_block_shift_closure_matches_classification(case):
    name, variant = case if isinstance(case, tuple) else (case, None)
    job = load_example(name, variant)
    code = job.build()
    kind = code.classify_shift()
    assert kind.r > 1
    m = kind.index
    if kind.kind == "quasi-cyclic":
        op = ShiftOp.quasi_cyclic(ID, m)
    else:
        op = ShiftOp.quasi_twisted(ID, job.alpha, m)
    rng = np.random.default_rng(4)
    for _ in range(25):
        w = _random_codeword(code, rng)
        assert code.contains(apply_shift(op, w, job.ring))
        assert code.contains(apply_shift(ShiftOp.constacyclic(job.autom, job.alpha), w, job.ring))


def test_example1_not_closed_under_plain_cyclic_shift():
    code = load_example("example1").build()
    rng = np.random.default_rng(9)
    op = ShiftOp.cyclic(ID)
    verdicts = [code.contains(apply_shift(op, _random_codeword(code, rng), code.ring)) for _ in range(10)]
    assert not all(verdicts)


@pytest.mark.parametrize("name", ["desk_f2_psi_n4", "desk_f4_skew_n4"])
def test_block_shift_closure_exhaustive(name):
    job = load_example(name)
    R = job.ring
    cs = enumerate_code(job.build().gen, job.n, job.alpha, job.autom)
    kind = job.build().classify_shift()
    op = ShiftOp.quasi_cyclic(ID, kind.index)
    assert closure_check(cs, op, dims=(R.k, R.l))
    # negative control: replace one codeword by a non-codeword
    words = cs.words.copy()
    victim = next(i for i, w in enumerate(words) if w.any())
    words[victim] = (words[victim] + 1) % R.field.p
    assert words[victim].tolist() not in cs.words.tolist()
    broken = CodewordSet(cs.field, cs.shape, words)
    assert len(broken) == len(cs)
    assert not closure_check(broken, ShiftOp.constacyclic(job.autom, job.alpha), dims=(R.k, R.l))
