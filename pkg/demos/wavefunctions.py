"""Radial ground wavefunctions from tight to strong coupling.

The left panel shows phi(q) on a shared grid: peaked at the origin for
weak coupling, pushed out to a displaced ring as alpha grows. The right
panel shows the radial density q phi^2 at alpha = 3 against the
semiclassical circle q0.
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from jtfield import apes_minimum, make_params, run_wavefunctions

OUT = Path(__file__).parent / "output"

D = 10.0
alphas = [0.0, 1.0, 2.0, 3.0]
q, cols = run_wavefunctions(D, alphas)

fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9.6, 4.2))
for alpha in alphas:
    ax1.plot(q, cols[alpha], label=f"$\\alpha = {alpha:g}$")
ax1.set_xlabel("$q$")
ax1.set_ylabel("$\\varphi(q)$")
ax1.set_xlim(0, 8)
ax1.set_title(f"Ground wavefunctions, $D = {D:g}$")
ax1.legend(fontsize=9)

density = q * cols[3.0] ** 2
ax2.plot(q, density, color="tab:red")
q0, _ = apes_minimum(make_params(D, 3.0))
ax2.axvline(q0, color="gray", ls="--", lw=1, label=f"$q_0 = {q0:.3f}$")
ax2.set_xlabel("$q$")
ax2.set_ylabel("$q\\,\\varphi^2(q)$")
ax2.set_xlim(0, 8)
ax2.set_title("Radial density at $\\alpha = 3$")
ax2.legend(fontsize=9)
fig.tight_layout()

OUT.mkdir(exist_ok=True)
target = OUT / "wavefunctions.png"
fig.savefig(target, dpi=160)
print(f"wrote {target}")
