"""Deterministic derivative-free maximizers used internally.

Two flavours of coordinate search over a box:

* :func:`compass_max` probes ``x +- step`` along one coordinate at a time,
  halving the step when neither side improves.  Cheap and good enough for
  smooth, few-parameter objectives (hyperparameter evidence surfaces).
* :func:`scan_max` sweeps a dense 1-D grid per coordinate and then refines
  around the best cell.  Needed for oscillatory separable objectives where
  a local +-probe stalls in the nearest ripple.

Both are pure functions of their inputs; no global RNG is touched.
"""

from __future__ import annotations

from typing import Callable

import numpy as np


def compass_max(
    f: Callable[[np.ndarray], float],
    x0: np.ndarray,
    lo: np.ndarray,
    hi: np.ndarray,
    steps: int,
    init_step: float = 0.25,
) -> tuple[np.ndarray, float]:
    """Maximize ``f`` on the box by coordinate-wise compass search.

    ``steps`` counts probe pairs; coordinates are visited round-robin.
    A successful probe moves the iterate and grows the step (capped at the
    initial size); a failed pair halves it.  Non-finite objective values are
    treated as losses.
    """
    x = np.array(x0, dtype=float)
    width = hi - lo
    best = f(x)
    if not np.isfinite(best):
        best = -np.inf
    step = init_step
    d = x.size
    for k in range(steps):
        j = k % d
        h = step * width[j]
        improved = False
        for sgn in (1.0, -1.0):
            cand = x.copy()
            cand[j] = min(max(cand[j] + sgn * h, lo[j]), hi[j])
            val = f(cand)
            if np.isfinite(val) and val > best:
                x, best = cand, val
                improved = True
                break
        if improved:
            step = min(step * 2.0, init_step)
        else:
            step *= 0.5
    return x, best


def scan_max(
    f: Callable[[np.ndarray], float],
    x0: np.ndarray,
    lo: np.ndarray,
    hi: np.ndarray,
    sweeps: int = 4,
    grid: int = 129,
    refine: int = 30,
) -> tuple[np.ndarray, float]:
    """Cyclic per-coordinate grid scan with bisection refinement.

    Each sweep scans every coordinate on a uniform grid (holding the others
    fixed), jumps to the best grid point and then narrows around it by
    interval thirds.  Robust against per-coordinate multimodality.
    """
    x = np.array(x0, dtype=float)
    best = f(x)
    d = x.size
    for _ in range(sweeps):
        for j in range(d):
            ts = np.linspace(lo[j], hi[j], grid)
            cand = x.copy()
            vals = np.empty(grid)
            for i, t in enumerate(ts):
                cand[j] = t
                vals[i] = f(cand)
            i = int(np.argmax(vals))
            xj, vj = ts[i], vals[i]
            # ternary search between the neighbouring grid cells
            a, b = ts[max(i - 1, 0)], ts[min(i + 1, grid - 1)]
            for _ in range(refine):
                m1 = a + (b - a) / 3.0
                m2 = b - (b - a) / 3.0
                cand[j] = m1
                v1 = f(cand)
                cand[j] = m2
                v2 = f(cand)
                if v1 < v2:
                    a = m1
                else:
                    b = m2
            cand[j] = 0.5 * (a + b)
            v = f(cand)
            if v > vj:
                xj, vj = cand[j], v
            if vj > best:
                x[j] = xj
                best = vj
    return x, best
