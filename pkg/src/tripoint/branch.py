"""The 3x3 branch matrix at the initial triple point and its rotational eigenvalue.

With a 1-valent vertex on the dual side, normalization and unitarity pin down
seven of the nine entries of the branch matrix at the branch vertex, up to two
unknown phases sigma and tau.  In the canonical gauge (positive first row and
column) the matrix acts on the coefficient vector (0, sqrt(q), -sqrt(p)) of
the one-dimensional complement of the trivial part of the n-box space, and
the middle coordinate of the image exposes the rotational eigenvalue lambda.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DimensionSumMismatch, InvalidArgument, NoUnitaryPhase
from .qnum import QuantumContext

Entries = tuple[tuple[complex | None, ...], ...]


@dataclass(frozen=True)
class BranchMatrix:
    """Known entries of the branch matrix in the positive gauge.

    ``entries`` is row-major with ``None`` for the two entries that play no
    role; the first row and column are real and strictly positive.
    ``im_sign`` records the chosen sign of Im(tau); the opposite choice
    conjugates everything the matrix produces.
    """

    n: int
    ctx: QuantumContext
    p: float
    q: float
    sigma: complex
    tau: complex
    entries: Entries
    im_sign: int

    def __post_init__(self) -> None:
        tol = self.ctx.tol
        if abs(abs(self.sigma) - 1.0) > tol or abs(abs(self.tau) - 1.0) > tol:
            raise InvalidArgument("sigma and tau must be unit phases")
        if abs(1.0 + self.sigma * self.p + self.tau * self.q) > tol * (1.0 + self.p + self.q):
            raise InvalidArgument("phases do not satisfy 1 + sigma*p + tau*q = 0")
        for i in range(3):
            for entry in (self.entries[0][i], self.entries[i][0]):
                if entry is None or abs(entry.imag) > tol or entry.real <= 0:
                    raise InvalidArgument("first row and column must be positive reals")


def solve_phases(
    ctx: QuantumContext, n: int, p: float, q: float, im_sign: int = 1
) -> tuple[complex, complex]:
    """Solve 1 + sigma*p + tau*q = 0 for unit phases sigma and tau.

    Unitarity forces Re(tau) = (p^2 - q^2 - 1)/(2q); the phase exists exactly
    when that value lies in [-1, 1].  Values within ctx.tol of the boundary
    snap onto it from either side: sqrt(1 - Re^2) has unbounded slope at
    +-1, so rounding-level undershoot would otherwise smear the meaningful
    boundary case p - q = 1 into a spurious imaginary part of order 1e-7.
    """
    if im_sign not in (1, -1):
        raise InvalidArgument("im_sign must be +1 or -1")
    if not (q > 0 and p >= q):
        raise InvalidArgument("dimensions must satisfy p >= q > 0")
    re_tau = (p * p - q * q - 1.0) / (2.0 * q)
    if abs(re_tau) > 1.0 + ctx.tol:
        raise NoUnitaryPhase(
            f"|Re tau| = {abs(re_tau)!r} exceeds 1: no unitary phase exists (p - q > 1)"
        )
    if abs(re_tau) > 1.0 - ctx.tol:
        re_tau = math.copysign(1.0, re_tau)
    tau = complex(re_tau, im_sign * math.sqrt(1.0 - re_tau * re_tau))
    sigma = -(1.0 + tau * q) / p
    return sigma, tau


def build_branch_matrix(
    ctx: QuantumContext, n: int, p: float, q: float, im_sign: int = 1
) -> BranchMatrix:
    """Populate the seven known entries of the branch matrix."""
    if n < 2:
        raise InvalidArgument(f"n = {n} must be >= 2")
    qn_minus = ctx.qint(n - 1)
    qn = ctx.qint(n)
    qn_plus2 = ctx.qint(n + 2)
    if min(qn_minus, qn, qn_plus2) <= 0:
        raise InvalidArgument("quantum integers through [n+2] must be positive")
    sigma, tau = solve_phases(ctx, n, p, q, im_sign)
    dn = ctx.delta * qn
    entries: Entries = (
        (
            complex(1.0 / qn),
            complex(math.sqrt(qn_minus * p)),
            complex(math.sqrt(qn_minus * q)),
        ),
        (
            complex(math.sqrt(qn_minus / dn)),
            sigma * math.sqrt(p / dn),
            tau * math.sqrt(q / dn),
        ),
        (complex(math.sqrt(qn_minus * qn_plus2 / (dn * qn))), None, None),
    )
    return BranchMatrix(
        n=n, ctx=ctx, p=p, q=q, sigma=sigma, tau=tau, entries=entries, im_sign=im_sign
    )


def apply_to_perp_vector(u: BranchMatrix) -> tuple[complex, complex, None]:
    """Image of (0, sqrt(q), -sqrt(p)) under the known entries of the matrix.

    The first coordinate vanishes identically; the third depends on the
    unknown entries and is reported as ``None``.
    """
    sq = math.sqrt(u.q)
    sp = math.sqrt(u.p)
    c1 = u.entries[0][1] * sq - u.entries[0][2] * sp
    c2 = u.entries[1][1] * sq - u.entries[1][2] * sp
    return c1, c2, None


def extract_lambda(u: BranchMatrix, tol: float | None = None) -> complex:
    """Rotational eigenvalue lambda = (sigma - tau)^2 * p*q / ([n][n+2]).

    Requires p + q = [n+1] (relative to ``tol``, defaulting to the context
    tolerance); that constraint is what makes |lambda| = 1.
    """
    ctx = u.ctx
    if tol is None:
        tol = ctx.tol
    target = ctx.qint(u.n + 1)
    if abs(u.p + u.q - target) > tol * max(1.0, target):
        raise DimensionSumMismatch(
            f"p + q = {u.p + u.q!r} but [n+1] = {target!r}; lambda needs p + q = [n+1]"
        )
    lam = (u.sigma - u.tau) ** 2 * (u.p * u.q) / (ctx.qint(u.n) * ctx.qint(u.n + 2))
    if abs(abs(lam) - 1.0) > 10.0 * tol + 1e-12:
        raise DimensionSumMismatch(f"computed |lambda| = {abs(lam)!r} is not 1")
    return lam
