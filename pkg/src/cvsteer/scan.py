"""Parameter sweeps, boundary bisection and the monogamy scenario.

Everything here composes the criterion modules over (squeezing, channel
parameter) grids; no detection logic of its own.  Grid evaluation is pure and
embarrassingly parallel; output rows always come back in deterministic grid
order (squeezing-major, then channel parameter, then criterion).
"""

import csv
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from scipy.optimize import bisect

from .covariance import TwoModeCovariance, apply_gain, apply_loss, tmsv_covariance
from .fock import fock_density
from .gaussian_criterion import gaussian_gain_boundary, gaussian_steerable
from .tloo_criterion import tloo_steerable
from .verdict import A_TO_B, B_TO_A, MARGIN_TOL, SteeringVerdict

CRITERIA = ("gaussian", "tloo-n2", "tloo-n3")
DIRECTION_LABELS = {B_TO_A: "b-to-a", A_TO_B: "a-to-b"}
DIRECTION_FROM_LABEL = {v: k for k, v in DIRECTION_LABELS.items()}

CSV_HEADER = ("r", "param", "criterion", "direction", "margin", "steerable")

# Channel-parameter search brackets for boundary bisection.
_LOSS_BRACKET = (1e-6, 1.0)
_GAIN_BRACKET = (1.0 + 1e-12, 6.0)
_BOUNDARY_XTOL = 1e-8


def channel_covariance(channel: str, r: float, param: float) -> TwoModeCovariance:
    """Two-mode squeezed vacuum pushed through the named channel on mode B."""
    base = tmsv_covariance(r)
    if channel == "loss":
        return apply_loss(base, param, "B")
    if channel == "gain":
        return apply_gain(base, param, "B")
    raise ValueError(f"unknown channel {channel!r}")


def tloo_level(criterion: str) -> int:
    if criterion == "tloo-n2":
        return 2
    if criterion == "tloo-n3":
        return 3
    raise ValueError(f"not a TLOO criterion: {criterion!r}")


def evaluate_point(
    channel: str, r: float, param: float, criterion: str, direction: str
) -> SteeringVerdict:
    """Run one criterion at one grid point."""
    cov = channel_covariance(channel, r, param)
    if criterion == "gaussian":
        return gaussian_steerable(cov, direction)
    level = tloo_level(criterion)
    rho = fock_density(cov, level, level)
    return tloo_steerable(rho, level, level, direction)


@dataclass(frozen=True)
class SweepSpec:
    """Grid description for a sweep: channel, ranges and criteria to run."""

    channel: str
    r_range: tuple[float, float, int]
    param_range: tuple[float, float, int]
    criteria: tuple[tuple[str, str], ...]  # (criterion, direction) pairs

    def __post_init__(self):
        if self.channel not in ("loss", "gain"):
            raise ValueError(f"unknown channel {self.channel!r}")
        for name, (lo, hi, steps) in (("r", self.r_range), ("param", self.param_range)):
            if steps < 2:
                raise ValueError(f"{name} range needs at least 2 steps, got {steps}")
            if not lo <= hi:
                raise ValueError(f"{name} range is inverted: ({lo}, {hi})")
        lo, hi, _ = self.param_range
        if self.channel == "loss" and not (0.0 < lo and hi <= 1.0):
            raise ValueError("loss transmittance range must lie in (0, 1]")
        if self.channel == "gain" and lo < 1.0:
            raise ValueError("gain range must start at >= 1")
        if self.r_range[0] < 0.0:
            raise ValueError("squeezing range must be non-negative")
        for criterion, direction in self.criteria:
            if criterion not in CRITERIA:
                raise ValueError(f"unknown criterion {criterion!r}")
            if direction not in DIRECTION_LABELS:
                raise ValueError(f"unknown direction {direction!r}")

    def grid(self) -> list[tuple[float, float]]:
        r_lo, r_hi, r_steps = self.r_range
        p_lo, p_hi, p_steps = self.param_range
        rs = [r_lo + (r_hi - r_lo) * i / (r_steps - 1) for i in range(r_steps)]
        ps = [p_lo + (p_hi - p_lo) * i / (p_steps - 1) for i in range(p_steps)]
        return [(r, p) for r in rs for p in ps]


@dataclass(frozen=True)
class SweepRow:
    r: float
    param: float
    criterion: str
    direction: str
    margin: float
    steerable: bool


def run_sweep(spec: SweepSpec, threads: int = 1) -> list[SweepRow]:
    """Evaluate every (criterion, direction) at every grid point, in grid order."""

    def rows_at(point: tuple[float, float]) -> list[SweepRow]:
        r, param = point
        out = []
        for criterion, direction in spec.criteria:
            verdict = evaluate_point(spec.channel, r, param, criterion, direction)
            out.append(SweepRow(r, param, criterion, direction, verdict.margin, verdict.steerable))
        return out

    points = spec.grid()
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(rows_at, points))
    else:
        chunks = [rows_at(p) for p in points]
    return [row for chunk in chunks for row in chunk]


def write_sweep_csv(rows: list[SweepRow], stream) -> None:
    """Write sweep rows with the fixed header, 9 significant digits."""
    writer = csv.writer(stream)
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(
            [
                f"{row.r:.9g}",
                f"{row.param:.9g}",
                row.criterion,
                DIRECTION_LABELS[row.direction],
                f"{row.margin:.9g}",
                "true" if row.steerable else "false",
            ]
        )


def find_boundary(channel: str, r: float, criterion: str, direction: str) -> float | None:
    """Bisect the channel parameter where the criterion margin changes sign.

    Returns None when the margin has the same sign across the whole physical
    parameter range (no boundary).
    """
    if r <= 0.0:
        raise ValueError(f"squeezing parameter must be > 0, got {r}")
    lo, hi = _LOSS_BRACKET if channel == "loss" else _GAIN_BRACKET

    def margin(param: float) -> float:
        return evaluate_point(channel, r, param, criterion, direction).margin

    m_lo, m_hi = margin(lo), margin(hi)
    if (m_lo > 0.0) == (m_hi > 0.0):
        return None
    return float(bisect(margin, lo, hi, xtol=_BOUNDARY_XTOL, maxiter=200))


@dataclass(frozen=True)
class SqueezingRange:
    """Squeezing interval where a TLOO criterion beats the Gaussian one.

    For the loss channel the Gaussian-blind region is transmittance below 1/2;
    detection there exists iff the margin at 1/2 is positive (the margin is
    single-crossing in the transmittance).  For the gain channel the blind
    region is gain above the Gaussian boundary, and eps_curve records the
    measured excess gain (r, detected gain minus Gaussian boundary) at every
    detected squeezing.
    """

    channel: str
    criterion: str
    direction: str
    detected: bool
    r_low: float | None = None
    r_high: float | None = None
    eps_curve: tuple[tuple[float, float], ...] | None = None

    @property
    def eps_max(self) -> float | None:
        if not self.eps_curve:
            return None
        return max(eps for _, eps in self.eps_curve)

    @property
    def eps_argmax(self) -> float | None:
        if not self.eps_curve:
            return None
        return max(self.eps_curve, key=lambda pair: pair[1])[0]


def squeezing_range(
    channel: str,
    criterion: str,
    direction: str,
    r_step: float = 1e-3,
    r_max: float = 1.4,
) -> SqueezingRange:
    """Scan squeezing for detection inside the Gaussian-blind region.

    Scans r on a uniform grid with endpoint refinement by bisection; only the
    TLOO criteria are meaningful here.
    """
    if criterion not in ("tloo-n2", "tloo-n3"):
        raise ValueError(f"squeezing-range scan requires a TLOO criterion, got {criterion!r}")
    steps = int(round(r_max / r_step))
    rs = [r_step * i for i in range(1, steps + 1)]

    if channel == "loss":
        def blind_margin(r: float) -> float:
            return evaluate_point("loss", r, 0.5, criterion, direction).margin
    elif channel == "gain":
        def blind_margin(r: float) -> float:
            boundary = gaussian_gain_boundary(r)
            return evaluate_point("gain", r, boundary, criterion, direction).margin
    else:
        raise ValueError(f"unknown channel {channel!r}")

    margins = [blind_margin(r) for r in rs]
    detected = [m > MARGIN_TOL for m in margins]
    if not any(detected):
        return SqueezingRange(channel, criterion, direction, False)

    first = detected.index(True)
    last = len(detected) - 1 - detected[::-1].index(True)
    r_low, r_high = rs[first], rs[last]
    # Refine endpoints where a sign change brackets them.
    if first > 0:
        r_low = float(bisect(blind_margin, rs[first - 1], rs[first], xtol=1e-6, maxiter=200))
    if last < len(rs) - 1:
        r_high = float(bisect(blind_margin, rs[last], rs[last + 1], xtol=1e-6, maxiter=200))

    eps_curve = None
    if channel == "gain":
        curve = []
        for r, hit in zip(rs, detected):
            if not hit:
                continue
            boundary = gaussian_gain_boundary(r)

            def margin_at(gain: float) -> float:
                return evaluate_point("gain", r, gain, criterion, direction).margin

            hi = boundary + 0.5
            while margin_at(hi) > 0.0:
                hi += 0.5
            edge = float(bisect(margin_at, boundary, hi, xtol=1e-8, maxiter=200))
            curve.append((r, edge - boundary))
        eps_curve = tuple(curve)

    return SqueezingRange(channel, criterion, direction, True, r_low, r_high, eps_curve)


@dataclass(frozen=True)
class MonogamyReport:
    """Simultaneous-steering check for the beamsplitter loss model.

    Bob holds the transmitted fraction eta, Eve the reflected 1 - eta.  Bob is
    tested against Alice with the Gaussian criterion, Eve with the 2-level
    TLOO criterion.
    """

    r: float
    eta: float
    bob: SteeringVerdict
    eve: SteeringVerdict

    @property
    def simultaneous(self) -> bool:
        return self.bob.steerable and self.eve.steerable


def monogamy_report(r: float, eta: float) -> MonogamyReport:
    """Evaluate both parties' steering of Alice for a beamsplitter of
    transmittance eta (Bob's share)."""
    if not 0.0 < eta < 1.0:
        raise ValueError(f"transmittance must lie strictly inside (0, 1), got {eta}")
    bob = evaluate_point("loss", r, eta, "gaussian", B_TO_A)
    eve = evaluate_point("loss", r, 1.0 - eta, "tloo-n2", B_TO_A)
    return MonogamyReport(r, eta, bob, eve)
