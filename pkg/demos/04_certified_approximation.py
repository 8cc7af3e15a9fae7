"""The certified approximation for monotone submodular ordering costs.

Ordering the ground set along any linear extension of the principal
partition achieves cost within a factor 2 - (1 + linearity)/(1 + m) of the
optimum.  The certificate carries exact rational lower and upper bounds, so
every claim below is checked as an equality or inequality of fractions, not
floats.
"""

import random

from ordolab import GraphicMatroid, approx_monotone_mlop, exact_mlop_dp
from ordolab.instances import random_connected_graph, triangle_with_bridge

f = GraphicMatroid(triangle_with_bridge())
sigma, cert = approx_monotone_mlop(f)
opt, _ = exact_mlop_dp(f)
print("triangle+bridge:")
print(f"  achieved {cert.achieved}, optimum {opt}")
print(f"  certified bounds [{cert.lower}, {cert.upper}]")
print(f"  guarantee factor {cert.guarantee} (here 2 - 4/5)")
assert cert.lower <= opt <= cert.achieved <= cert.upper
assert cert.achieved <= cert.guarantee * opt

print("\n30 random connected graphs:")
rng = random.Random(0)
worst = None
for _ in range(30):
    n = rng.randint(3, 6)
    m = rng.randint(n - 1, min(10, n * (n - 1) // 2))
    g = GraphicMatroid(random_connected_graph(n, m, rng))
    opt, _ = exact_mlop_dp(g)
    _, cert = approx_monotone_mlop(g)
    ratio = cert.achieved / opt
    if worst is None or ratio > worst:
        worst = ratio
    assert cert.achieved <= cert.guarantee * opt
print(f"  worst achieved/optimum ratio observed: {worst} (= {float(worst):.4f})")
