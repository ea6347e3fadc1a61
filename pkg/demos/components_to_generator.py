"""Assemble a code over R from component codes and inspect it.

Builds the six-component theta-skew constacyclic code of length 6 over
F_25[u,v]/<u^3 - u, v^2 - v>, prints its generator in u,v form, its dual and
its shift classification.

    python demos/components_to_generator.py
"""
from skewcodes import load_example

job = load_example("example6")
R = job.ring
code = job.build()

print(f"ring: F_{R.field.q}, k = {R.k}, l = {R.l}, alpha = {code.alpha}")
print("component generators over F_q:")
for (i, j), comp in sorted(code.components.items()):
    print(f"  C_{i + 1}{j + 1}: alpha = {R.field.format(comp.alpha):>2}   g = {comp.gen}")

print(f"\ngenerator over R:  {code.gen}")
print(f"|C| = {R.field.q}^{code.size_exponent}")
print(f"closure: {code.classify_shift()}")

dual = code.dual()
print(f"\ndual generator:    {dual.gen}")
print(f"|C^perp| = {R.field.q}^{dual.size_exponent}  (exponents sum to kl*n = {R.kl * code.n})")
print(f"dual of the dual is the code again: {dual.dual() == code}")
print(f"self-dual: {code.is_selfdual()}")
