"""Discrete memoryless wiretap channel with a helping interferer.

A channel instance is a finite-alphabet transition tensor p(y1, y2 | x1, x2)
together with a product input distribution p(x1)p(x2).  This module computes
the mutual-information profile of an instance, the receiver/eavesdropper
decodable-rate regions, the secrecy rate achievable by double binning, the
weak/strong regime closed forms, and a desk-scale Sato-type minimax upper
bound over noise couplings with fixed marginals.

Region conventions
------------------
The receiver region is the union of the joint-decoding (MAC) region, taken
closed, and the separate-decoding region, which needs the dummy rate to
exceed the receiver's conditional capacity strictly.  The eavesdropper
region is taken *closed* on all boundaries: a rate pair sitting exactly on
the boundary counts as decodable by the eavesdropper.  This is the
conservative reading; it demands marginally more redundancy and never
overclaims secrecy.  The optimum secrecy rate is unaffected because the
objective is continuous in the rates.

All information quantities are in bits.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import DeskScaleError, DomainError, RegimeMismatchError
from .gaussian import RateSplit, Regime

_SIMPLEX_TOL = 1e-12


# ---------------------------------------------------------------------------
# Entropy helpers (exact summation, 0*log 0 = 0)
# ---------------------------------------------------------------------------


def entropy_bits(p: np.ndarray) -> float:
    """Shannon entropy of a (possibly unnormalized-by-roundoff) pmf, in bits."""
    p = np.asarray(p, dtype=float).ravel()
    nz = p[p > 0.0]
    return float(-np.sum(nz * np.log2(nz)))


def mutual_information_bits(joint: np.ndarray) -> float:
    """I(X;Y) from a joint pmf with X on axis 0 and Y on axis 1, in bits."""
    joint = np.asarray(joint, dtype=float)
    hx = entropy_bits(joint.sum(axis=1))
    hy = entropy_bits(joint.sum(axis=0))
    return max(0.0, hx + hy - entropy_bits(joint))


def _cond_mi(joint: np.ndarray) -> float:
    """I(X;Y|Z) from a joint pmf with axes (Z, X, Y)."""
    total = 0.0
    for z in range(joint.shape[0]):
        pz = float(joint[z].sum())
        if pz > 0.0:
            total += pz * mutual_information_bits(joint[z] / pz)
    return total


# ---------------------------------------------------------------------------
# Domain types
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class DmcWthi:
    """Finite-alphabet channel p(y1, y2 | x1, x2).

    ``transition`` is indexed [x1][x2][y1][y2]; every conditional slice must
    be a pmf (entries in [0, 1] summing to 1 within 1e-12).  Desk-scale
    operations additionally restrict the alphabet sizes; the type itself only
    validates the probability structure.
    """

    nx1: int
    nx2: int
    ny1: int
    ny2: int
    transition: np.ndarray

    def __post_init__(self) -> None:
        for name in ("nx1", "nx2", "ny1", "ny2"):
            if int(getattr(self, name)) < 1:
                raise DomainError(f"{name} must be >= 1")
        t = np.asarray(self.transition, dtype=float)
        expected = (self.nx1, self.nx2, self.ny1, self.ny2)
        if t.shape != expected:
            raise DomainError(f"transition shape {t.shape} does not match {expected}")
        if np.any(t < -_SIMPLEX_TOL) or np.any(t > 1.0 + _SIMPLEX_TOL):
            raise DomainError("transition entries must lie in [0, 1]")
        sums = t.sum(axis=(2, 3))
        if np.any(np.abs(sums - 1.0) > _SIMPLEX_TOL):
            bad = np.unravel_index(int(np.argmax(np.abs(sums - 1.0))), sums.shape)
            raise DomainError(
                f"conditional slice (x1={bad[0]}, x2={bad[1]}) sums to {sums[bad]!r}, not 1"
            )
        t = np.clip(t, 0.0, 1.0)
        t.setflags(write=False)
        object.__setattr__(self, "transition", t)

    def receiver_marginal(self) -> np.ndarray:
        """p(y1 | x1, x2), shape (nx1, nx2, ny1)."""
        return self.transition.sum(axis=3)

    def eavesdropper_marginal(self) -> np.ndarray:
        """p(y2 | x1, x2), shape (nx1, nx2, ny2)."""
        return self.transition.sum(axis=2)

    @classmethod
    def from_dict(cls, doc: dict) -> "DmcWthi":
        missing = {"nx1", "nx2", "ny1", "ny2", "transition"} - set(doc)
        if missing:
            raise DomainError(f"channel document missing fields: {sorted(missing)}")
        return cls(
            nx1=int(doc["nx1"]),
            nx2=int(doc["nx2"]),
            ny1=int(doc["ny1"]),
            ny2=int(doc["ny2"]),
            transition=np.asarray(doc["transition"], dtype=float),
        )

    @classmethod
    def from_json(cls, path: str | Path) -> "DmcWthi":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.from_dict(json.load(fh))

    def to_dict(self) -> dict:
        return {
            "nx1": self.nx1,
            "nx2": self.nx2,
            "ny1": self.ny1,
            "ny2": self.ny2,
            "transition": self.transition.tolist(),
        }


@dataclass(frozen=True, eq=False)
class ProductInput:
    """Independent input distributions p(x1) and p(x2)."""

    px1: np.ndarray
    px2: np.ndarray

    def __post_init__(self) -> None:
        for name in ("px1", "px2"):
            p = np.asarray(getattr(self, name), dtype=float)
            if p.ndim != 1 or p.size < 1:
                raise DomainError(f"{name} must be a 1-D distribution")
            if np.any(p < -_SIMPLEX_TOL) or abs(float(p.sum()) - 1.0) > _SIMPLEX_TOL:
                raise DomainError(f"{name} must be a pmf summing to 1, got {p!r}")
            p = np.clip(p, 0.0, None)
            p.setflags(write=False)
            object.__setattr__(self, name, p)

    @classmethod
    def uniform(cls, nx1: int, nx2: int) -> "ProductInput":
        return cls(np.full(nx1, 1.0 / nx1), np.full(nx2, 1.0 / nx2))


@dataclass(frozen=True)
class MutualInfoProfile:
    """The eight mutual informations that define the decodable-rate regions."""

    i_x1_y1_given_x2: float
    i_x2_y1_given_x1: float
    i_x1x2_y1: float
    i_x1_y1: float
    i_x1_y2_given_x2: float
    i_x2_y2_given_x1: float
    i_x1x2_y2: float
    i_x1_y2: float


def mi_profile(ch: DmcWthi, inp: ProductInput) -> MutualInfoProfile:
    """Exact mutual informations of the product-input joint distribution."""
    if inp.px1.size != ch.nx1 or inp.px2.size != ch.nx2:
        raise DomainError(
            f"input sizes ({inp.px1.size}, {inp.px2.size}) do not match channel "
            f"alphabets ({ch.nx1}, {ch.nx2})"
        )
    joint = inp.px1[:, None, None, None] * inp.px2[None, :, None, None] * ch.transition

    def side(axis_other_y: int) -> tuple[float, float, float, float]:
        # Marginalize out the other terminal's output; j has axes (x1, x2, y).
        j = joint.sum(axis=axis_other_y)
        given_x2 = _cond_mi(np.transpose(j, (1, 0, 2)))             # I(X1;Y|X2)
        given_x1 = _cond_mi(j)                                      # I(X2;Y|X1)
        pair = mutual_information_bits(j.reshape(-1, j.shape[2]))   # I(X1,X2;Y)
        single = mutual_information_bits(j.sum(axis=1))             # I(X1;Y)
        return given_x2, given_x1, pair, single

    a1, a2, a12, a1m = side(3)
    b1, b2, b12, b1m = side(2)
    return MutualInfoProfile(
        i_x1_y1_given_x2=a1,
        i_x2_y1_given_x1=a2,
        i_x1x2_y1=a12,
        i_x1_y1=a1m,
        i_x1_y2_given_x2=b1,
        i_x2_y2_given_x1=b2,
        i_x1x2_y2=b12,
        i_x1_y2=b1m,
    )


# ---------------------------------------------------------------------------
# Decodable-rate regions
# ---------------------------------------------------------------------------


def _require_rates(*vals: float) -> None:
    for v in vals:
        if not math.isfinite(v) or v < 0.0:
            raise DomainError(f"rates must be finite and >= 0, got {v!r}")


def in_region_receiver(prof: MutualInfoProfile, r1: float, r2: float) -> bool:
    """True iff the receiver can decode the message at rates (r1, r2).

    Joint-decoding branch (closed): r1 <= I(X1;Y1|X2), r2 <= I(X2;Y1|X1) and
    r1 + r2 <= I(X1,X2;Y1).  Separate-decoding branch: r1 <= I(X1;Y1) with
    r2 > I(X2;Y1|X1) strictly (the interference is too fast to decode and is
    treated as noise).
    """
    _require_rates(r1, r2)
    mac = (
        r1 <= prof.i_x1_y1_given_x2
        and r2 <= prof.i_x2_y1_given_x1
        and r1 + r2 <= prof.i_x1x2_y1
    )
    separate = r1 <= prof.i_x1_y1 and r2 > prof.i_x2_y1_given_x1
    return mac or separate


def in_region_eavesdropper(prof: MutualInfoProfile, r1d: float, r2: float) -> bool:
    """True iff the eavesdropper can decode the redundancy pair (r1d, r2).

    Both branches are taken closed (boundary pairs count as decodable), the
    conservative reading for the secrecy analysis.
    """
    _require_rates(r1d, r2)
    mac = (
        r1d <= prof.i_x1_y2_given_x2
        and r2 <= prof.i_x2_y2_given_x1
        and r1d + r2 <= prof.i_x1x2_y2
    )
    separate = r1d <= prof.i_x1_y2 and r2 >= prof.i_x2_y2_given_x1
    return mac or separate


# ---------------------------------------------------------------------------
# Achievable secrecy rate
# ---------------------------------------------------------------------------


def _receiver_rate_cap(prof: MutualInfoProfile, r2: float) -> float:
    """Largest r1 the receiver supports at dummy rate r2."""
    if r2 <= prof.i_x2_y1_given_x1:
        return min(prof.i_x1_y1_given_x2, prof.i_x1x2_y1 - r2)
    return prof.i_x1_y1


def _redundancy_required(prof: MutualInfoProfile, r2: float) -> float:
    """Smallest redundancy rate that saturates the eavesdropper at dummy rate r2."""
    if r2 < prof.i_x2_y2_given_x1:
        return min(prof.i_x1_y2_given_x2, prof.i_x1x2_y2 - r2)
    return prof.i_x1_y2


def achievable_rate_fixed_input(prof: MutualInfoProfile) -> tuple[float, RateSplit]:
    """Best secrecy rate of the double-binning scheme at a fixed input law.

    The objective max(0, cap(r2) - required(r2)) is piecewise linear in the
    dummy rate r2 with slopes in {0, +-1}, so the supremum over r2 >= 0 is
    attained at a breakpoint of either piecewise form (or at a crossing,
    where the clamped objective is zero).  The finite breakpoint set is
    evaluated directly; ties break to the smallest r2.

    The returned split uses r1d equal to the redundancy requirement at the
    winning r2 and r1 = r1s + r1d, which the receiver supports by
    construction.  Regime tags: ``SILENT`` when no positive rate exists,
    ``NO_INTERFERER`` when the winning dummy rate is zero, ``TREAT_AS_NOISE``
    when it exceeds the receiver's conditional capacity for the interferer,
    ``JOINT_DECODE`` otherwise.
    """
    a1, a2 = prof.i_x1_y1_given_x2, prof.i_x2_y1_given_x1
    a12, a1m = prof.i_x1x2_y1, prof.i_x1_y1
    b1, b2 = prof.i_x1_y2_given_x2, prof.i_x2_y2_given_x1
    b12, b1m = prof.i_x1x2_y2, prof.i_x1_y2

    points = {0.0, a2, b2, a12 - a1, b12 - b1}
    # Crossings of a constant piece of one form with the sloped piece of the other.
    points.update({b12 - a1, b12 - a1m, a12 - b1, a12 - b1m})
    candidates = sorted(p for p in points if p >= 0.0)

    best_rate = -math.inf
    best_r2 = 0.0
    for r2 in candidates:
        r1s = _receiver_rate_cap(prof, r2) - _redundancy_required(prof, r2)
        if r1s > best_rate + 1e-15:
            best_rate, best_r2 = r1s, r2

    if best_rate <= 0.0:
        return 0.0, RateSplit(0.0, 0.0, 0.0, 0.0, Regime.SILENT)

    r1d = max(0.0, _redundancy_required(prof, best_r2))
    if best_r2 == 0.0:
        regime = Regime.NO_INTERFERER
    elif best_r2 > a2:
        regime = Regime.TREAT_AS_NOISE
    else:
        regime = Regime.JOINT_DECODE
    split = RateSplit(r1=best_rate + r1d, r2=best_r2, r1s=best_rate, r1d=r1d, regime=regime)
    return best_rate, split


def simplex_grid(dim: int, points_per_coord: int) -> list[np.ndarray]:
    """Lattice discretization of the probability simplex on ``dim`` outcomes.

    ``points_per_coord`` lattice points per coordinate axis (so step
    1/(points_per_coord-1)); enumeration order is deterministic.
    """
    if points_per_coord < 2:
        raise DomainError("points_per_coord must be >= 2")
    m = points_per_coord - 1
    out = []
    for cuts in itertools.combinations(range(m + dim - 1), dim - 1):
        prev = -1
        counts = []
        for c in cuts:
            counts.append(c - prev - 1)
            prev = c
        counts.append(m + dim - 2 - prev)
        out.append(np.asarray(counts, dtype=float) / m)
    return out


_DESK_ALPHABET = 4


def _check_desk_scale(ch: DmcWthi) -> None:
    if max(ch.nx1, ch.nx2, ch.ny1, ch.ny2) > _DESK_ALPHABET:
        raise DeskScaleError(
            f"alphabets {(ch.nx1, ch.nx2, ch.ny1, ch.ny2)} exceed the desk-scale "
            f"limit of {_DESK_ALPHABET}"
        )


def achievable_rate(
    ch: DmcWthi, grid_per_dim: int = 21
) -> tuple[float, ProductInput, RateSplit]:
    """Achievable secrecy rate maximized over a grid of product input laws.

    Each input simplex is discretized with ``grid_per_dim`` points per free
    coordinate and every pair is scored with ``achievable_rate_fixed_input``.
    Iteration order is deterministic and ties keep the first (lexicographically
    smallest) grid point.  Desk scale only: alphabets of size at most 4.
    """
    _check_desk_scale(ch)
    if grid_per_dim < 3:
        raise DomainError("grid_per_dim must be >= 3")
    best: tuple[float, ProductInput, RateSplit] | None = None
    for px1 in simplex_grid(ch.nx1, grid_per_dim):
        for px2 in simplex_grid(ch.nx2, grid_per_dim):
            inp = ProductInput(px1, px2)
            rate, split = achievable_rate_fixed_input(mi_profile(ch, inp))
            if best is None or rate > best[0] + 1e-15:
                best = (rate, inp, split)
    assert best is not None
    return best


# ---------------------------------------------------------------------------
# Regime special cases
# ---------------------------------------------------------------------------

_REGIME_SLACK = 1e-9


def _profiles(ch: DmcWthi, grid_per_dim: int):
    for px1 in simplex_grid(ch.nx1, grid_per_dim):
        for px2 in simplex_grid(ch.nx2, grid_per_dim):
            inp = ProductInput(px1, px2)
            yield inp, mi_profile(ch, inp)


def weak_regime_rate(ch: DmcWthi, grid_per_dim: int = 21) -> float:
    """Closed-form secrecy rate in the weak interference/eavesdropping regime.

    Regime condition, checked at every grid input: the receiver hears the
    transmitter at least as well as the eavesdropper does conditionally, and
    the eavesdropper hears the interferer at least as well as the receiver
    does.  The rate is max over the grid of max(delta1, delta2) where
    delta1 = I(X1;Y1|X2) - I(X1;Y2|X2) and delta2 = I(X1;Y1) - I(X1;Y2).
    """
    _check_desk_scale(ch)
    best = -math.inf
    for inp, prof in _profiles(ch, grid_per_dim):
        if prof.i_x1_y1_given_x2 < prof.i_x1_y2_given_x2 - _REGIME_SLACK or (
            prof.i_x2_y2_given_x1 < prof.i_x2_y1_given_x1 - _REGIME_SLACK
        ):
            raise RegimeMismatchError(
                f"weak-regime condition fails at px1={inp.px1.tolist()}, "
                f"px2={inp.px2.tolist()}"
            )
        delta1 = prof.i_x1_y1_given_x2 - prof.i_x1_y2_given_x2
        delta2 = prof.i_x1_y1 - prof.i_x1_y2
        best = max(best, delta1, delta2)
    return best


def strong_regime_rate(ch: DmcWthi, grid_per_dim: int = 21) -> float:
    """Closed-form secrecy rate in the strong interference/eavesdropping regime.

    Regime condition (checked at every grid input) is the reverse of the weak
    one.  The rate is max over the grid, clamped at zero, of
    min(I(X1,X2;Y1) - I(X1,X2;Y2), I(X1;Y1|X2) - I(X1;Y2)).
    """
    _check_desk_scale(ch)
    best = 0.0
    for inp, prof in _profiles(ch, grid_per_dim):
        if prof.i_x1_y1_given_x2 > prof.i_x1_y2_given_x2 + _REGIME_SLACK or (
            prof.i_x2_y2_given_x1 > prof.i_x2_y1_given_x1 + _REGIME_SLACK
        ):
            raise RegimeMismatchError(
                f"strong-regime condition fails at px1={inp.px1.tolist()}, "
                f"px2={inp.px2.tolist()}"
            )
        val = min(
            prof.i_x1x2_y1 - prof.i_x1x2_y2,
            prof.i_x1_y1_given_x2 - prof.i_x1_y2,
        )
        best = max(best, val)
    return best


def very_strong_eavesdropping(ch: DmcWthi, grid_per_dim: int = 21) -> bool:
    """True iff I(X1;Y2) >= I(X1;Y1|X2) at every grid input (no positive rate)."""
    _check_desk_scale(ch)
    return all(
        prof.i_x1_y2 >= prof.i_x1_y1_given_x2 - _REGIME_SLACK
        for _, prof in _profiles(ch, grid_per_dim)
    )


# ---------------------------------------------------------------------------
# Sato-type minimax bound (binary desk scale)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DmcSatoBound:
    """Grid-search Sato bound with an honest slack estimate.

    ``value`` is min over sampled noise couplings of the grid max over
    product inputs of I(X1,X2; Y1~ | Y2~).  The inner grid max undershoots
    the true max, so ``value`` alone may sit below the exact bound at that
    coupling; ``inner_tolerance`` estimates that undershoot (grid refinement
    gap plus local variation).  ``coupling_tolerance`` estimates how much the
    outer min could still descend between coupling grid nodes (local
    half-step sensitivity).  ``tolerance`` is their sum: the reported value
    is a valid upper bound up to ``inner_tolerance`` and is within
    ``tolerance`` of what this double grid could certify.
    """

    value: float
    inner_tolerance: float
    coupling_tolerance: float

    @property
    def tolerance(self) -> float:
        return self.inner_tolerance + self.coupling_tolerance


def _coupling_tensors(ch: DmcWthi, params: np.ndarray) -> np.ndarray:
    """Couplings q(y1, y2 | x1, x2) with the channel's marginals, binary outputs.

    ``params`` holds, per (x1, x2) pair, the position t in [0, 1] of
    q(0,0|x1,x2) inside its Frechet interval.  Shape (n, 4) -> (n, 2, 2, 2, 2).
    """
    m1 = ch.receiver_marginal()[..., 0]  # p(y1=0 | x1, x2), shape (2, 2)
    m2 = ch.eavesdropper_marginal()[..., 0]
    lo = np.maximum(0.0, m1 + m2 - 1.0).ravel()
    hi = np.minimum(m1, m2).ravel()
    q00 = lo[None, :] + params * (hi - lo)[None, :]  # (n, 4)
    m1f = m1.ravel()[None, :]
    m2f = m2.ravel()[None, :]
    q = np.empty((params.shape[0], 4, 2, 2))
    q[:, :, 0, 0] = q00
    q[:, :, 0, 1] = m1f - q00
    q[:, :, 1, 0] = m2f - q00
    q[:, :, 1, 1] = 1.0 - m1f - m2f + q00
    q = np.clip(q, 0.0, 1.0)
    return q.reshape(params.shape[0], 2, 2, 2, 2)


def _entropy_rows(p: np.ndarray) -> np.ndarray:
    """Entropy in bits along the last axis, vectorized."""
    with np.errstate(divide="ignore", invalid="ignore"):
        terms = np.where(p > 0.0, p * np.log2(np.where(p > 0.0, p, 1.0)), 0.0)
    return -terms.sum(axis=-1)


def _inner_objective(couplings: np.ndarray, px1: np.ndarray, px2: np.ndarray) -> np.ndarray:
    """I(X1,X2; Y1~ | Y2~) for every coupling, at one product input."""
    n = couplings.shape[0]
    joint = (
        px1[None, :, None, None, None]
        * px2[None, None, :, None, None]
        * couplings
    )  # (n, x1, x2, y1, y2)
    flat = joint.reshape(n, -1)
    h_all = _entropy_rows(flat)
    h_y1y2 = _entropy_rows(joint.sum(axis=(1, 2)).reshape(n, -1))
    h_y2 = _entropy_rows(joint.sum(axis=(1, 2, 3)))
    h_x_y2 = _entropy_rows(joint.sum(axis=3).reshape(n, -1))
    # I = H(Y1|Y2) - H(Y1 | X1, X2, Y2)
    return (h_y1y2 - h_y2) - (h_all - h_x_y2)


def dmc_sato_bound(
    ch: DmcWthi, coupling_grid: int = 9, input_grid: int = 21
) -> DmcSatoBound:
    """Desk-scale Sato-type upper bound for binary-alphabet channels.

    Minimizes, over a grid of noise couplings whose marginals match the
    channel, the grid maximum over product inputs of the genie-aided
    conditional mutual information.  Binary alphabets only; the coupling
    space has one free parameter per input pair, discretized with
    ``coupling_grid`` points, and the inner maximization uses ``input_grid``
    points per input coordinate.  See ``DmcSatoBound`` for what the reported
    tolerances cover.
    """
    if (ch.nx1, ch.nx2, ch.ny1, ch.ny2) != (2, 2, 2, 2):
        raise DeskScaleError("the Sato minimax search supports binary alphabets only")
    if coupling_grid < 2 or input_grid < 3:
        raise DomainError("coupling_grid must be >= 2 and input_grid >= 3")

    steps = np.linspace(0.0, 1.0, coupling_grid)
    params = np.asarray(list(itertools.product(steps, repeat=4)))
    couplings = _coupling_tensors(ch, params)

    t_axis = np.linspace(0.0, 1.0, input_grid)
    inputs = [(np.asarray([t1, 1 - t1]), np.asarray([t2, 1 - t2]))
              for t1 in t_axis for t2 in t_axis]

    inner_max = np.full(couplings.shape[0], -np.inf)
    for px1, px2 in inputs:
        inner_max = np.maximum(inner_max, _inner_objective(couplings, px1, px2))
    best_idx = int(np.argmin(inner_max))
    value = float(inner_max[best_idx])
    best_coupling = couplings[best_idx : best_idx + 1]

    # Inner-max quality at the winning coupling: refine the input grid 4x and
    # add the local variation of the refined surface as a Lipschitz cushion.
    fine_axis = np.linspace(0.0, 1.0, 4 * (input_grid - 1) + 1)
    surface = np.empty((fine_axis.size, fine_axis.size))
    for i, t1 in enumerate(fine_axis):
        px1 = np.asarray([t1, 1 - t1])
        for j, t2 in enumerate(fine_axis):
            surface[i, j] = _inner_objective(
                best_coupling, px1, np.asarray([t2, 1 - t2])
            )[0]
    fine_max = float(surface.max())
    local_var = max(
        float(np.max(np.abs(np.diff(surface, axis=0)))),
        float(np.max(np.abs(np.diff(surface, axis=1)))),
    )
    inner_tol = max(0.0, fine_max - value) + local_var

    # Outer-min sensitivity: half-step perturbations of the winning coupling.
    half = 0.5 / (coupling_grid - 1)
    base = params[best_idx]
    perturbed = []
    for k in range(4):
        for sign in (-1.0, 1.0):
            p = base.copy()
            p[k] = min(1.0, max(0.0, p[k] + sign * half))
            perturbed.append(p)
    pert_couplings = _coupling_tensors(ch, np.asarray(perturbed))
    pert_max = np.full(pert_couplings.shape[0], -np.inf)
    for px1, px2 in inputs:
        pert_max = np.maximum(pert_max, _inner_objective(pert_couplings, px1, px2))
    coupling_tol = max(0.0, value - float(pert_max.min()))

    return DmcSatoBound(
        value=value, inner_tolerance=inner_tol, coupling_tolerance=coupling_tol
    )
