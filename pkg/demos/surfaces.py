"""Lower and upper adiabatic surfaces across the bifurcation.

Below alpha = 1 the lower surface W_-(q) has a single minimum at the
origin; above it the minimum moves onto the circle q0 and deepens. The
upper surface stays single-welled and is shown once for contrast.
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from jtfield import apes_minimum, make_params, theta, w_minus

OUT = Path(__file__).parent / "output"

D = 10.0
q = np.linspace(0.0, 4.5, 600)

fig, ax = plt.subplots(figsize=(6.4, 4.4))
for alpha, color in ((0.5, "tab:blue"), (1.0, "tab:green"), (2.0, "tab:orange"), (3.0, "tab:red")):
    p = make_params(D, alpha)
    ax.plot(q, w_minus(p, q), color=color, label=f"$\\alpha = {alpha:g}$")
    q0, w0 = apes_minimum(p)
    if q0 > 0:
        ax.plot([q0], [w0], "o", color=color, ms=5)
p1 = make_params(D, 1.0)
ax.plot(q, q**2 + theta(p1, q), "--", color="gray", lw=1, label="upper surface, $\\alpha = 1$")
ax.set_xlabel("$q$")
ax.set_ylabel("$W_\\pm(q)$  [$\\omega/2$]")
ax.set_title(f"Adiabatic surfaces at $D = {D:g}$; dots mark off-center minima")
ax.legend(fontsize=9)
ax.set_ylim(-22, 30)
fig.tight_layout()

OUT.mkdir(exist_ok=True)
target = OUT / "surfaces.png"
fig.savefig(target, dpi=160)
print(f"wrote {target}")
