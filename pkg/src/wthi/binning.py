"""Desk-scale simulation of the double-binning code construction.

The transmitter's codebook holds ``2^(n*r1)`` i.i.d. codewords arranged in
bins (one bin per secret message) and sub-bins (the redundancy index is split
as r1d = r1d' + r1d'').  The interferer's codebook holds ``2^(n*r2)``
codewords, likewise split into bins.  Encoding picks the within-bin indices
uniformly at random; the receiver decodes by maximum likelihood over all
codeword pairs, and the eavesdropper's confusion is measured by the exact
per-realization conditional entropy of the secret message.

Maximum-likelihood decoding stands in for joint typicality: typical sets are
vacuous at blocklengths this small, and ML can only do better, so error
trends remain meaningful.

Randomness comes from the counter-based Philox 4x64 generator (numpy's
``Philox``).  The codebook stream uses key ``(seed, 0)`` and trial ``t`` uses
key ``(seed, t + 1)``, so serial and parallel trial execution agree
bit-exactly.

Sizes are the rounded powers ``round(2^(n*rate))``; all entropy
normalizations use the realized size ``m1s`` rather than the nominal rate.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from .dmc import DmcWthi, ProductInput
from .errors import DeskScaleError, DomainError

RNG_ALGORITHM = "philox4x64"

_MAX_BLOCKLENGTH = 14
_MAX_PAIRS = 1 << 20


def _size(n: int, rate: float) -> int:
    return max(1, round(2.0 ** (n * rate)))


@dataclass(frozen=True)
class CodebookSpec:
    """Blocklength and the six binning rates (bits per channel use).

    The transmitter's codebook rate is r1 = r1s + r1d_prime + r1d_dprime and
    the interferer's is r2 = r2_prime + r2_dprime; ``r2`` is stored
    explicitly and validated against its parts.  The product of the two
    realized codebook sizes must stay within the desk-scale enumeration
    budget of 2^20.
    """

    n: int
    r1s: float
    r1d_prime: float
    r1d_dprime: float
    r2: float
    r2_prime: float
    r2_dprime: float

    def __post_init__(self) -> None:
        if not (1 <= int(self.n) <= _MAX_BLOCKLENGTH):
            raise DeskScaleError(f"blocklength must be in [1, {_MAX_BLOCKLENGTH}], got {self.n}")
        for name in ("r1s", "r1d_prime", "r1d_dprime", "r2", "r2_prime", "r2_dprime"):
            v = float(getattr(self, name))
            if not math.isfinite(v) or v < 0.0:
                raise DomainError(f"{name} must be finite and >= 0, got {v!r}")
        if abs(self.r2 - (self.r2_prime + self.r2_dprime)) > 1e-12:
            raise DomainError("r2 must equal r2_prime + r2_dprime")
        if self.pairs > _MAX_PAIRS:
            raise DeskScaleError(
                f"codebook pair count {self.pairs} exceeds the desk-scale budget {_MAX_PAIRS}"
            )

    @property
    def r1(self) -> float:
        return self.r1s + self.r1d_prime + self.r1d_dprime

    @property
    def sizes(self) -> tuple[int, int, int, int, int]:
        """(m1s, m1p, m1pp, m2p, m2pp): realized bin/sub-bin/codebook sizes."""
        n = self.n
        return (
            _size(n, self.r1s),
            _size(n, self.r1d_prime),
            _size(n, self.r1d_dprime),
            _size(n, self.r2_prime),
            _size(n, self.r2_dprime),
        )

    @property
    def pairs(self) -> int:
        m1s, m1p, m1pp, m2p, m2pp = self.sizes
        return m1s * m1p * m1pp * m2p * m2pp


@dataclass(frozen=True, eq=False)
class Codebooks:
    """Realized random codebooks.

    c1 has shape (m1s, m1p, m1pp, n): bins indexed by the secret message,
    sub-bins by the first redundancy index.  c2 has shape (m2p, m2pp, n).
    """

    c1: np.ndarray
    c2: np.ndarray


@dataclass(frozen=True)
class SimResult:
    p_e: float
    equivocation_ratio: float
    trials: int


def _stream(seed: int, stream: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=[seed & (2**64 - 1), stream]))


def build_codebooks(
    ch: DmcWthi, inp: ProductInput, spec: CodebookSpec, seed: int
) -> Codebooks:
    """Draw both codebooks i.i.d. from the input laws; deterministic in ``seed``."""
    if inp.px1.size != ch.nx1 or inp.px2.size != ch.nx2:
        raise DomainError("input distribution sizes do not match the channel alphabets")
    m1s, m1p, m1pp, m2p, m2pp = spec.sizes
    rng = _stream(seed, 0)
    c1 = rng.choice(ch.nx1, size=(m1s, m1p, m1pp, spec.n), p=inp.px1).astype(np.int8)
    c2 = rng.choice(ch.nx2, size=(m2p, m2pp, spec.n), p=inp.px2).astype(np.int8)
    return Codebooks(c1=c1, c2=c2)


def _log_table(p: np.ndarray) -> np.ndarray:
    with np.errstate(divide="ignore"):
        return np.where(p > 0.0, np.log(np.where(p > 0.0, p, 1.0)), -np.inf)


def _pair_loglik(table: np.ndarray, c1f: np.ndarray, c2f: np.ndarray,
                 y: np.ndarray) -> np.ndarray:
    """Sum_k log p(y_k | x1_k, x2_k) for every codeword pair, shape (m1, m2)."""
    m1, m2 = c1f.shape[0], c2f.shape[0]
    ll = np.zeros((m1, m2))
    for k in range(y.size):
        ll += table[:, :, y[k]][c1f[:, k][:, None], c2f[:, k][None, :]]
    return ll


def _posterior_entropy_bits(ll: np.ndarray, m1s: int) -> float:
    """H(W1 | y2) from the pair log-likelihood matrix under uniform priors."""
    finite = ll[np.isfinite(ll)]
    if finite.size == 0:
        return math.log2(m1s)  # observation impossible under every pair: flat posterior
    shift = float(finite.max())
    w = np.exp(ll - shift)
    per_bin = w.reshape(m1s, -1).sum(axis=1)
    total = per_bin.sum()
    q = per_bin[per_bin > 0.0] / total
    return float(-np.sum(q * np.log2(q)))


def simulate(
    ch: DmcWthi,
    inp: ProductInput,
    spec: CodebookSpec,
    seed: int,
    trials: int,
) -> SimResult:
    """Monte Carlo error probability and exact average equivocation ratio.

    Per trial: the secret message and all dithering indices are drawn
    uniformly, the channel emits (y1, y2) symbol by symbol, the receiver
    performs ML decoding over all codeword pairs (ties to the lowest index),
    and the eavesdropper's posterior over secret messages given y2 is summed
    exactly over all pairs.  ``equivocation_ratio`` is the trial-averaged
    H(W1 | Y2 = y2) normalized by log2(m1s), so it lies in [0, 1]; a
    degenerate spec with a single secret message reports 1.0.
    """
    result, _, _ = simulate_detailed(ch, inp, spec, seed, trials)
    return result


def simulate_detailed(
    ch: DmcWthi,
    inp: ProductInput,
    spec: CodebookSpec,
    seed: int,
    trials: int,
) -> tuple[SimResult, np.ndarray, np.ndarray]:
    """Like ``simulate`` but also returns per-trial entropies and error flags."""
    if trials <= 0:
        raise DomainError(f"trials must be > 0, got {trials}")
    books = build_codebooks(ch, inp, spec, seed)
    m1s, m1p, m1pp, m2p, m2pp = spec.sizes
    m1 = m1s * m1p * m1pp
    m2 = m2p * m2pp
    c1f = books.c1.reshape(m1, spec.n)
    c2f = books.c2.reshape(m2, spec.n)

    log_y1 = _log_table(ch.receiver_marginal())      # [x1, x2, y1]
    log_y2 = _log_table(ch.eavesdropper_marginal())  # [x1, x2, y2]
    flat_channel = ch.transition.reshape(ch.nx1, ch.nx2, -1)
    cdf = np.cumsum(flat_channel, axis=2)

    h_bits = np.empty(trials)
    errors = np.zeros(trials, dtype=bool)
    h_max = math.log2(m1s) if m1s > 1 else 0.0

    for t in range(trials):
        rng = _stream(seed, t + 1)
        w1 = int(rng.integers(m1s))
        idx1 = (w1 * m1p + int(rng.integers(m1p))) * m1pp + int(rng.integers(m1pp))
        idx2 = int(rng.integers(m2p)) * m2pp + int(rng.integers(m2pp))
        x1 = c1f[idx1]
        x2 = c2f[idx2]

        u = rng.random(spec.n)
        row_cdf = cdf[x1, x2]  # (n, ny1*ny2)
        out = np.minimum((row_cdf <= u[:, None]).sum(axis=1), row_cdf.shape[1] - 1)
        y1 = (out // ch.ny2).astype(np.int64)
        y2 = (out % ch.ny2).astype(np.int64)

        ll1 = _pair_loglik(log_y1, c1f, c2f, y1)
        flat_best = int(np.argmax(ll1))
        w1_hat = (flat_best // m2) // (m1p * m1pp)
        errors[t] = w1_hat != w1

        if m1s > 1:
            ll2 = _pair_loglik(log_y2, c1f, c2f, y2)
            h_bits[t] = _posterior_entropy_bits(ll2, m1s)
        else:
            h_bits[t] = 0.0

    ratio = float(np.mean(h_bits) / h_max) if h_max > 0.0 else 1.0
    result = SimResult(
        p_e=float(np.mean(errors)),
        equivocation_ratio=ratio,
        trials=trials,
    )
    return result, h_bits, errors


def result_record(
    spec: CodebookSpec, seed: int, trials: int, result: SimResult, runtime_ms: float
) -> dict:
    """JSON-ready record of one simulation run, with RNG provenance."""
    return {
        "spec": asdict(spec),
        "seed": seed,
        "trials": trials,
        "p_e": result.p_e,
        "equivocation_ratio": result.equivocation_ratio,
        "runtime_ms": runtime_ms,
        "rng": RNG_ALGORITHM,
    }
