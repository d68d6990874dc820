"""Two-outcome phase measurement (s = 1) on two-mode squeezed states.

Prints optimized B_CH and B_S against the closed forms in c0, c1 as the
squeezing parameter grows.
"""

import math

import numpy as np

from phasebell import equal_coeffs, make_scheme, optimize_psi, tms_coeffs

scheme = make_scheme("equal", 1)

ideal = optimize_psi(equal_coeffs(1), 1, scheme)
print(f"equal weights: psi0={ideal.psi0:.10f} B_CH={ideal.b_ch:.10f} B_S={ideal.b_s:.10f}")
print()
print(f"{'lambda':>7} {'B_CH':>10} {'closed':>10} {'B_S':>10} {'closed':>10}")
for lam in np.linspace(0.1, 0.9, 9):
    c = tms_coeffs(lam, 400)
    c0, c1 = c.coeffs[:2]
    ev = optimize_psi(c, 1, scheme)
    ch = 0.5 + math.sqrt(2) * c0 * c1 / (c0**2 + c1**2)
    bs = 4 * math.sqrt(2) * c0 * c1
    print(f"{lam:7.2f} {ev.b_ch:10.6f} {ch:10.6f} {ev.b_s:10.6f} {bs:10.6f}")
