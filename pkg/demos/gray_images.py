"""Gray images of two theta-skew cyclic codes of length 6 over F_4[u,v].

The minimum distance of the Gray image is the least component distance, so
only the component codes (64 and 16 words) are enumerated.

    python demos/gray_images.py
"""
from skewcodes import brute_min_distance, enumerate_code, gray_image_params, load_example
from skewcodes.skewpoly import SkewPoly

for variant in (0, 1):
    job = load_example("example7", variant)
    code = job.build()
    print(f"== {job.name}")
    print(f"generator: {code.gen}")
    comp = code.components[(0, 0)]
    xn = SkewPoly.x_n_minus(job.field, job.n, comp.alpha, job.autom)
    cofactor, _ = xn.right_divrem(comp.gen)
    print(f"x^6 - 1 = ({cofactor}) * ({comp.gen})")
    for (i, j), c in sorted(code.components.items()):
        cs = enumerate_code(c.gen, job.n, c.alpha, job.autom)
        print(f"  C_{i + 1}{j + 1}: {len(cs):3d} words, d = {brute_min_distance(cs)}")
    params = gray_image_params(code)
    print(f"Gray image [n, k, d] = {list(params.as_tuple())}")
    print(f"permuted image closed under the block shift: {params.rho_invariant}\n")
