"""The obstruction battery and admissible-ratio tables.

Verdicts are three-valued: a test whose hypotheses are not met reports
``Inapplicable`` rather than passing, so enumeration workflows can tell
"not excluded" apart from "hypothesis failed".  A candidate is excluded as
soon as any applicable test fails, but the battery always runs everything
for full diagnostics.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple

from .branch import build_branch_matrix, extract_lambda
from .errors import InvalidArgument, NoUnitaryPhase
from .graph import GradedBigraph, TriplePointData, extract_triple_point
from .qnum import QuantumContext

#: Default tolerance for root-of-unity distances on the trace scale.
DEFAULT_TRACE_TOL = 1e-6


class Verdict(enum.Enum):
    PASS = "Pass"
    FAIL = "Fail"
    INAPPLICABLE = "Inapplicable"


class RootCandidate(NamedTuple):
    k: int
    distance: float


class RatioRow(NamedTuple):
    k: int
    lambda_trace: float
    r: float
    p: float
    q: float


@dataclass(frozen=True)
class ObstructionReport:
    n: int
    delta: float
    p: float
    q: float
    r: float
    verdicts: dict[str, Verdict]
    lambda_trace: float
    root_candidates: tuple[RootCandidate, ...]
    tol: float

    @property
    def has_failure(self) -> bool:
        return any(v is Verdict.FAIL for v in self.verdicts.values())

    @property
    def all_applicable_pass(self) -> bool:
        return not self.has_failure

    def as_dict(self) -> dict:
        """Plain-data form of the report, suitable for JSON output."""
        return {
            "n": self.n,
            "delta": self.delta,
            "p": self.p,
            "q": self.q,
            "r": self.r,
            "lambda_trace": self.lambda_trace,
            "verdicts": {name: v.value for name, v in self.verdicts.items()},
            "root_candidates": [
                {"k": c.k, "distance": c.distance} for c in self.root_candidates
            ],
            "tol": self.tol,
        }


def ocneanu_parity(branch_depth: int) -> Verdict:
    """For index at least 4 the initial triple point must sit at odd depth."""
    if branch_depth < 1:
        raise InvalidArgument(f"branch_depth = {branch_depth} must be >= 1")
    return Verdict.PASS if branch_depth % 2 == 1 else Verdict.FAIL


def triple_single(tp: TriplePointData, tol: float = DEFAULT_TRACE_TOL) -> Verdict:
    """With a 1-valent dual branch vertex, p - q may not exceed 1."""
    if not tp.gamma3_univalent:
        return Verdict.INAPPLICABLE
    return Verdict.PASS if tp.p - tp.q <= 1.0 + tol else Verdict.FAIL


def _trace_and_candidates(
    ctx: QuantumContext, tp: TriplePointData
) -> tuple[float, tuple[RootCandidate, ...]]:
    big = ctx.qint(tp.n) * ctx.qint(tp.n + 2)
    trace = (tp.p - tp.q) ** 2 * big / (tp.p * tp.q) - 2.0
    candidates = sorted(
        (
            RootCandidate(k, abs(trace - 2.0 * math.cos(2.0 * math.pi * k / tp.n)))
            for k in range(tp.n // 2 + 1)
        ),
        key=lambda c: (c.distance, c.k),
    )
    return trace, tuple(candidates)


def rotational_test(
    ctx: QuantumContext, tp: TriplePointData, tol: float = DEFAULT_TRACE_TOL
) -> tuple[Verdict, float, tuple[RootCandidate, ...]]:
    """Test that lambda + 1/lambda lands on the trace of an n-th root of unity.

    lambda + 1/lambda = (p - q)^2 [n][n+2] / (pq) - 2 must equal some
    2 cos(2 pi k / n).  Conjugate roots give the same trace, so k only runs
    to n // 2.  Applicable when the dual branch vertex is 1-valent and the
    branch depth is odd; the trace and candidate list are reported either way.
    """
    trace, candidates = _trace_and_candidates(ctx, tp)
    if not (tp.gamma3_univalent and tp.branch_depth_odd):
        return Verdict.INAPPLICABLE, trace, candidates
    in_range = -2.0 - tol <= trace <= 2.0 + tol
    verdict = (
        Verdict.PASS if in_range and candidates[0].distance <= tol else Verdict.FAIL
    )
    return verdict, trace, candidates


def qt_test(
    ctx: QuantumContext, tp: TriplePointData, tol: float = DEFAULT_TRACE_TOL
) -> Verdict:
    """The historical form of the rotational test, needing a 3-valent gamma2.

    Same computation as :func:`rotational_test`, reported separately so users
    can see which of the older obstructions already applied.
    """
    if not (tp.gamma3_univalent and tp.gamma2_trivalent):
        return Verdict.INAPPLICABLE
    verdict, _, _ = rotational_test(ctx, tp, tol)
    return verdict


def allowed_ratios(ctx: QuantumContext, n: int) -> list[RatioRow]:
    """Invert the rotational identity: the admissible (r, p, q) for each k.

    For every k in 0..n/2 the trace 2 cos(2 pi k / n) determines r >= 1 via
    r + 1/r = (trace + 2)/([n][n+2]) + 2, and with p + q = [n+1] the pair
    (p, q) follows.  n must be even since the branch depth n-1 is odd.
    """
    if n < 2 or n % 2 != 0:
        raise InvalidArgument(f"n = {n} must be even and >= 2")
    big = ctx.qint(n) * ctx.qint(n + 2)
    sum_pq = ctx.qint(n + 1)
    rows = []
    for k in range(n // 2 + 1):
        trace = 2.0 * math.cos(2.0 * math.pi * k / n)
        # work with r + 1/r - 2 directly; going through r + 1/r and back
        # cancels away most digits of r - 1 once [n][n+2] is large
        excess = (trace + 2.0) / big
        half = (excess + math.sqrt(excess * (excess + 4.0))) / 2.0  # r - 1
        gap = sum_pq * half / (2.0 + half)  # p - q
        rows.append(
            RatioRow(
                k=k,
                lambda_trace=trace,
                r=1.0 + half,
                p=(sum_pq + gap) / 2.0,
                q=(sum_pq - gap) / 2.0,
            )
        )
    return rows


def run_battery(
    ctx: QuantumContext,
    principal: GradedBigraph,
    dual: GradedBigraph,
    tol: float = DEFAULT_TRACE_TOL,
) -> ObstructionReport:
    """Extract the triple point of a pair and run every obstruction test.

    When the rotational test applies, lambda is also recovered through the
    branch matrix and checked against the trace formula.  A missing unitary
    phase there is the same fact as a triple-single failure, so it is
    recorded as one instead of aborting the battery.
    """
    tp = extract_triple_point(ctx, principal, dual)
    verdicts = {"ocneanu_parity": ocneanu_parity(tp.n - 1)}
    verdicts["triple_single"] = triple_single(tp, tol)
    verdicts["quadratic_tangles"] = qt_test(ctx, tp, tol)
    rotational, trace, candidates = rotational_test(ctx, tp, tol)
    verdicts["rotational"] = rotational

    if tp.gamma3_univalent and tp.branch_depth_odd:
        try:
            matrix = build_branch_matrix(ctx, tp.n, tp.p, tp.q)
            lam = extract_lambda(matrix)
            if abs(2.0 * lam.real - trace) > tol:
                raise RuntimeError(
                    "branch-matrix lambda disagrees with the trace formula"
                )
        except NoUnitaryPhase:
            verdicts["triple_single"] = Verdict.FAIL

    return ObstructionReport(
        n=tp.n,
        delta=ctx.delta,
        p=tp.p,
        q=tp.q,
        r=tp.p / tp.q,
        verdicts=verdicts,
        lambda_trace=trace,
        root_candidates=candidates,
        tol=tol,
    )
