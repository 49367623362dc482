"""Independent oracles used to derive or verify expected values in the tests.

These deliberately avoid the code paths they check: rates are recomputed with
arbitrary-precision logarithms, the fixed-input secrecy optimizer is checked
against a dense two-dimensional scan built directly from the decodable-region
inequalities, and the closed-form Sato minimizer is checked against a plain
grid argmin.
"""

from __future__ import annotations

import numpy as np
from mpmath import mp

from wthi.dmc import MutualInfoProfile

mp.dps = 50


def half_log2(numerator: float, denominator: float = 1.0) -> float:
    """(1/2) * log2(numerator / denominator) at 50 decimal digits, rounded to float."""
    return float(mp.log(mp.mpf(numerator) / mp.mpf(denominator), 2) / 2)


def scan_secrecy_rate(prof: MutualInfoProfile, n1: int = 2000, n2: int = 2000
                      ) -> tuple[float, float]:
    """Dense (r1, r2) scan of the double-binning secrecy rate.

    Re-derives feasibility from the decodable-region inequalities (receiver
    union taken as published, eavesdropper regions closed) rather than from
    the breakpoint enumeration.  Returns (best rate, grid resolution bound),
    the latter being the sum of the two grid steps (the objective is
    1-Lipschitz in each rate).
    """
    a1, a2 = prof.i_x1_y1_given_x2, prof.i_x2_y1_given_x1
    a12, a1m = prof.i_x1x2_y1, prof.i_x1_y1
    b1, b2 = prof.i_x1_y2_given_x2, prof.i_x2_y2_given_x1
    b12, b1m = prof.i_x1x2_y2, prof.i_x1_y2

    r1_hi = max(a1, a1m, 1e-12)
    r2_hi = max(a2, b2, 1e-12)
    r1 = np.linspace(0.0, r1_hi, n1)[:, None]
    # One extra point beyond every breakpoint samples the constant tail.
    r2 = np.concatenate([np.linspace(0.0, r2_hi, n2 - 1), [r2_hi + 1.0]])[None, :]

    receiver = ((r1 <= a1) & (r2 <= a2) & (r1 + r2 <= a12)) | ((r1 <= a1m) & (r2 > a2))
    required = np.where(r2 < b2, np.minimum(b1, b12 - r2), b1m)
    r1s = np.where(receiver, np.maximum(r1 - required, 0.0), 0.0)
    resolution = r1_hi / (n1 - 1) + r2_hi / max(n2 - 2, 1)
    return float(r1s.max()), resolution


def sato_grid(a: float, b: float, p1: float, p2: float, points: int = 1001
              ) -> tuple[np.ndarray, np.ndarray]:
    """The Sato objective on a rho grid over the open interval (-1, 1)."""
    rho = np.linspace(-1.0 + 1e-6, 1.0 - 1e-6, points)
    s = np.sqrt(a) * p1 + np.sqrt(b) * p2
    num = (1.0 + p1 + b * p2) * (1.0 + a * p1 + p2) - (rho + s) ** 2
    den = (1.0 - rho**2) * (1.0 + a * p1 + p2)
    return rho, 0.5 * np.log2(num / den)
