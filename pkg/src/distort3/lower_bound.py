"""Executable lower-bound certificates for planar tame sequences.

With ``delta`` an integer at least the 3-distortion of ``M_0..M_n``, the
subsequence ``M_0, M_delta, M_2delta, ...`` is in convex position, and a convex
polygon with ``m`` vertices has a vertex angle of at least ``(m - 2) pi / m``,
so some triangle has distortion at least ``m / (2 pi)``. Chaining the two gives
``delta >= floor(n / delta) / (2 pi)``, i.e. distortion ``Omega(sqrt(n))``.

Everything here re-checks those facts numerically on concrete sequences. A
failed check raises :class:`LemmaViolation`; since the statements are
theorems, that signals a bug, not a counterexample.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .distortion import TameSequence, check_tame, delta3, triple_distortion
from .geometry import (
    EPS_AREA,
    GeometryError,
    angle_at_vertex,
    cross2,
    gram_area,
    is_convex_sequence,
    sqnorm,
)

CEIL_GUARD = 1e-9
ANGLE_TOL = 1e-9


class LemmaViolation(AssertionError):
    pass


def ceil_delta(value: float) -> int:
    """Smallest admissible integer ``delta``: ``ceil(value + 1e-9)``."""
    if not math.isfinite(value):
        raise ValueError("no finite delta exists for an infinite 3-distortion")
    return int(math.ceil(value + CEIL_GUARD))


def _as_seq(seq) -> TameSequence:
    return seq if isinstance(seq, TameSequence) else check_tame(seq)


def _planar(seq: TameSequence) -> TameSequence:
    if seq.dim != 2:
        raise GeometryError(f"planar sequence required, got dimension {seq.dim}")
    return seq


def subsample(seq, delta: int) -> list[int]:
    """Indices ``0, delta, 2 delta, ..., floor(n / delta) delta``."""
    if int(delta) != delta or delta < 1:
        raise ValueError(f"delta must be a positive integer, got {delta!r}")
    n = len(seq) - 1
    return list(range(0, (n // delta) * delta + 1, delta))


@dataclass(frozen=True)
class AngleWitness:
    position: int
    angle: float
    bound: float

    @property
    def inverse_sine(self) -> float:
        return 1.0 / math.sin(self.angle)


def angle_witness(points) -> AngleWitness:
    """Vertex of a convex polygon whose angle forces distortion ``>= m / (2 pi)``.

    ``position`` is the ``i`` of the cyclic triple ``P_i P_{i+1} P_{i+2}`` with
    the largest angle at ``P_{i+1}``; ties go to the smallest ``i``.
    """
    P = np.asarray(points, dtype=float)
    m = len(P)
    if m < 3:
        raise GeometryError("angle witness needs at least 3 points")
    if not is_convex_sequence(P):
        raise GeometryError("angle witness needs a convex sequence")
    angles = [angle_at_vertex(P[i], P[(i + 1) % m], P[(i + 2) % m]) for i in range(m)]
    i = int(np.argmax(angles))
    floor = (m - 2) * math.pi / m
    if angles[i] < floor - ANGLE_TOL:
        raise LemmaViolation(f"largest angle {angles[i]!r} of a convex {m}-gon is below (m-2)pi/m = {floor!r}")
    return AngleWitness(i, angles[i], m / (2 * math.pi))


@dataclass(frozen=True)
class Witness:
    """Angle witness located in the original sequence.

    ``lemma_bound`` is the abstract ``m / (2 pi)``; ``inverse_sine`` is
    ``1 / sin(angle)``; ``triple_distortion`` is the actual distortion term of
    the three original indices (sorted).
    """

    positions: tuple[int, int, int]
    indices: tuple[int, int, int]
    angle: float
    lemma_bound: float
    inverse_sine: float
    triple_distortion: float


@dataclass(frozen=True)
class Certificate:
    delta: int
    subsample_indices: list[int]
    convex: bool
    witness: Witness | None = None
    implied_lower_bound: float = 0.0

    def to_dict(self) -> dict:
        w = self.witness
        return {
            "delta": self.delta,
            "subsample_indices": list(self.subsample_indices),
            "convex": self.convex,
            "witness": None
            if w is None
            else {
                "positions": list(w.positions),
                "indices": list(w.indices),
                "angle": w.angle,
                "lemma_bound": w.lemma_bound,
                "inverse_sine": w.inverse_sine,
                "triple_distortion": w.triple_distortion,
            },
            "implied_lower_bound": self.implied_lower_bound,
        }


def convexity_certificate(seq, delta: int) -> Certificate:
    """Subsample with step ``delta`` and test convex position.

    Non-convex outcomes are returned as data (``convex=False``). Subsamples of
    fewer than 3 points are vacuously convex and carry no witness.
    """
    seq = _planar(_as_seq(seq))
    idx = subsample(seq, delta)
    if len(idx) < 3:
        return Certificate(delta, idx, True)
    S = seq.points[idx]
    if not is_convex_sequence(S):
        return Certificate(delta, idx, False)
    aw = angle_witness(S)
    m = len(idx)
    pos = (aw.position, (aw.position + 1) % m, (aw.position + 2) % m)
    orig = tuple(sorted(idx[p] for p in pos))
    td = triple_distortion(seq.points, *orig).value
    w = Witness(pos, orig, aw.angle, aw.bound, aw.inverse_sine, td)
    return Certificate(delta, idx, True, w, aw.bound)


def _anchor_lines(P: np.ndarray, i: int):
    """For anchor ``i``: (|M_i M_j|, distance of M_k to line M_i M_j) over j < k."""
    U = P[i + 1 :] - P[i]
    area = gram_area(U[:, None, :], U[None, :, :])
    base = np.sqrt(sqnorm(U))
    with np.errstate(divide="ignore", invalid="ignore"):
        dist = 2 * area / base[:, None]
    return base, dist


def line_distance_bound_check(seq, delta: int, tol: float = 1e-9) -> bool:
    """Every ``M_k`` stays at least ``(k - j) / delta`` from the line ``M_i M_j``."""
    P = _as_seq(seq).points
    N = len(P)
    for i in range(N - 2):
        base, dist = _anchor_lines(P, i)
        m = len(base)
        gap = np.arange(1, m + 1)
        need = (gap[None, :] - gap[:, None]) / delta - tol
        upper = np.triu(np.ones((m, m), dtype=bool), 1)
        if np.any(base == 0.0) or np.any(dist[upper] < need[upper]):
            return False
    return True


def same_side_check(seq, delta: int) -> bool:
    """For ``k >= j + delta``, ``M_k`` and ``M_{k+1}`` lie strictly on one side of ``(M_i M_j)``."""
    P = _planar(_as_seq(seq)).points
    N = len(P)
    for i in range(N - 1):
        for j in range(i + 1, N):
            ks = np.arange(j + delta, N - 1)
            if ks.size == 0:
                break
            a = cross2(P[i], P[j], P[ks])
            b = cross2(P[i], P[j], P[ks + 1])
            uu = sqnorm(P[j] - P[i])
            tol_a = EPS_AREA * np.maximum(uu, np.maximum(sqnorm(P[ks] - P[i]), sqnorm(P[ks] - P[j])))
            tol_b = EPS_AREA * np.maximum(uu, np.maximum(sqnorm(P[ks + 1] - P[i]), sqnorm(P[ks + 1] - P[j])))
            if np.any(np.abs(a) < tol_a) or np.any(np.abs(b) < tol_b) or np.any(np.sign(a) != np.sign(b)):
                return False
    return True


@dataclass(frozen=True)
class Prop1Report:
    n: int
    delta3: float
    delta: int
    branch: str
    certificate: Certificate | None
    implied_bound: float
    sqrt_bound: float
    checks: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "delta3": self.delta3,
            "delta": self.delta,
            "branch": self.branch,
            "certificate": None if self.certificate is None else self.certificate.to_dict(),
            "implied_bound": self.implied_bound,
            "sqrt_bound": self.sqrt_bound,
            "checks": list(self.checks),
        }


def prop1_verify(seq, delta3_value: float | None = None) -> Prop1Report:
    """Run the square-root lower-bound argument on a planar tame sequence.

    With ``delta = ceil(Delta3)``: if ``floor(n / delta) < 2`` then
    ``delta >= n / 2``; otherwise the step-``delta`` subsample must be convex
    and its witness bound ``floor(n / delta) / (2 pi)`` cannot exceed ``delta``.
    """
    seq = _planar(_as_seq(seq))
    n = seq.n
    value = delta3(seq).delta3 if delta3_value is None else float(delta3_value)
    if not math.isfinite(value):
        raise GeometryError("3-distortion is infinite; no finite delta exists")
    d = ceil_delta(value)
    q = n // d
    checks = []
    if q < 2:
        if not d >= n / 2:
            raise LemmaViolation(f"floor(n/delta) < 2 but delta = {d} < n/2 = {n / 2}")
        checks.append(f"delta = {d} >= n/2 = {n / 2:g}")
        return Prop1Report(n, value, d, "floor(n/delta) < 2", None, n / 2, math.sqrt(n / (2 * math.pi)), checks)
    cert = convexity_certificate(seq, d)
    if not cert.convex:
        raise LemmaViolation(f"subsample with step delta = {d} is not convex")
    checks.append(f"subsample of {len(cert.subsample_indices)} points is convex")
    bound = q / (2 * math.pi)
    if not bound <= d:
        raise LemmaViolation(f"witness bound floor(n/delta)/(2 pi) = {bound} exceeds delta = {d}")
    checks.append(f"floor(n/delta)/(2 pi) = {bound:.6g} <= delta = {d}")
    w = cert.witness
    if w is not None:
        if not w.triple_distortion <= value * (1 + 1e-12):
            raise LemmaViolation("witness triple exceeds the sequence's own 3-distortion")
        checks.append(f"witness triple {w.indices} has distortion {w.triple_distortion:.6g} <= Delta3")
    return Prop1Report(n, value, d, "convex subsample", cert, bound, math.sqrt(n / (2 * math.pi)), checks)
