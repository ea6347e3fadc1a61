"""Cross-check constructions against brute-force enumeration.

For a small (1, -1)-constacyclic code over F_3[u]/<u^2 - u> the dual,
the idempotent generator and the Gray-map duality are recomputed from
explicit codeword sets.

    python demos/oracle_crosscheck.py
"""
import numpy as np

from skewcodes import CodewordSet, brute_dual, enumerate_code, load_example, phi

job = load_example("desk_f3_const_n4")
code = job.build()
n, R = job.n, job.ring

words = enumerate_code(code.gen, n, job.alpha, job.autom)
print(f"code: {code.gen}, {len(words)} codewords (formula: {R.field.q}^{code.size_exponent})")

dual = code.dual()
brute = brute_dual(words)
constructed = CodewordSet(R.field, (n, R.kl), dual.codewords())
print(f"dual generator {dual.gen}: matches brute force = {brute == constructed}")

e = code.idempotent()
print(f"idempotent {e}: e*e = e is {(e * e).mod(n, job.alpha) == e.mod(n, job.alpha)}, "
      f"same code = {enumerate_code(e, n, job.alpha, job.autom) == words}")

gray = CodewordSet(R.field, (n * R.kl,), np.array([phi(w) for w in words.words]))
gray_dual = CodewordSet(R.field, (n * R.kl,), np.array([phi(w) for w in constructed.words]))
print(f"Gray image of the dual equals dual of the Gray image: "
      f"{brute_dual(gray, inner='field') == gray_dual}")
