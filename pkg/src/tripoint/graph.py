"""Depth-graded bipartite graphs and extraction of initial triple-point data.

A single graph is described by three keys, in this order::

    depths: 5
    counts: 1 1 1 1 2
    edges: 0:0-0 1:0-0 2:0-0 3:0-0 3:0-1

``counts`` lists the number of vertices at each depth; the root depth has
exactly one vertex.  Each edge token ``d:u-v`` joins vertex ``u`` at depth
``d`` to vertex ``v`` at depth ``d+1`` (0-based); repeating a token encodes a
multiple edge.  Lines whose first non-blank character is ``#`` are comments.
A graph *pair* file wraps two such blocks in ``[principal]`` and ``[dual]``
sections.

Vertices are addressed as ``(depth, index)`` throughout.  Dimensions are the
entries of the Perron-Frobenius eigenvector of the full adjacency matrix,
normalized to 1 at the root.  Note that for an incomplete candidate graph
these differ from the dimensions of any completion, so verdicts derived from
a truncated graph are advisory.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionSumMismatch,
    EigenvalueMismatch,
    InvalidGraph,
    NormMismatch,
    NotATriplePoint,
    ParseError,
    SupertransitivityMismatch,
)
from .qnum import QuantumContext

Edge = tuple[int, int, int]

_EDGE_RE = re.compile(r"^(\d+):(\d+)-(\d+)$")

#: Power iteration stops once the eigen-residual drops below this value.
RESIDUAL_TOL = 1e-12
POWER_ITERATION_CAP = 10**6


@dataclass(frozen=True)
class GradedBigraph:
    """A connected graph graded by distance from a unique root vertex."""

    vertex_counts: tuple[int, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        counts = tuple(int(c) for c in self.vertex_counts)
        edges = tuple(sorted((int(d), int(u), int(v)) for d, u, v in self.edges))
        object.__setattr__(self, "vertex_counts", counts)
        object.__setattr__(self, "edges", edges)
        if not counts:
            raise InvalidGraph("graph must have at least one depth")
        if counts[0] != 1:
            raise InvalidGraph("exactly one vertex at depth 0 required")
        if any(c < 1 for c in counts):
            raise InvalidGraph("every depth must have at least one vertex")
        for d, u, v in edges:
            if not 0 <= d < len(counts) - 1:
                raise InvalidGraph(f"edge {d}:{u}-{v} does not connect consecutive depths")
            if not (0 <= u < counts[d] and 0 <= v < counts[d + 1]):
                raise InvalidGraph(f"edge {d}:{u}-{v} has an out-of-range vertex index")
        # Depth equals distance from the root, so every deeper vertex needs a
        # downward edge; together with the unique root this forces connectivity.
        for d in range(1, len(counts)):
            covered = {v for dd, _, v in edges if dd == d - 1}
            missing = sorted(set(range(counts[d])) - covered)
            if missing:
                raise InvalidGraph(
                    f"vertex {missing[0]} at depth {d} has no edge to depth {d - 1}"
                    " (graph not graded)"
                )

    @property
    def depth_count(self) -> int:
        return len(self.vertex_counts)

    @property
    def vertex_count(self) -> int:
        return sum(self.vertex_counts)

    def vertex_offset(self, depth: int) -> int:
        return sum(self.vertex_counts[:depth])

    def adjacency(self) -> np.ndarray:
        """Symmetric adjacency matrix; entries count edge multiplicity."""
        a = np.zeros((self.vertex_count, self.vertex_count))
        for d, u, v in self.edges:
            i = self.vertex_offset(d) + u
            j = self.vertex_offset(d + 1) + v
            a[i, j] += 1.0
            a[j, i] += 1.0
        return a

    def up_multiplicities(self, depth: int, index: int) -> dict[int, int]:
        """Multiplicity of edges from ``(depth, index)`` to each depth+1 vertex."""
        return dict(Counter(v for d, u, v in self.edges if d == depth and u == index))

    def down_degree(self, depth: int, index: int) -> int:
        return sum(1 for d, _, v in self.edges if d == depth - 1 and v == index)

    def up_degree(self, depth: int, index: int) -> int:
        return sum(1 for d, u, _ in self.edges if d == depth and u == index)

    def valence(self, depth: int, index: int) -> int:
        """Number of incident edges, counted with multiplicity."""
        return self.down_degree(depth, index) + self.up_degree(depth, index)


@dataclass(frozen=True)
class DimensionAssignment:
    """Perron-Frobenius dimensions: vertex ``(depth, index)`` -> positive real."""

    delta: float
    dims: dict[tuple[int, int], float]

    def __getitem__(self, vertex: tuple[int, int]) -> float:
        return self.dims[vertex]


@dataclass(frozen=True)
class TriplePointData:
    """Branch data consumed by the obstruction battery.

    ``n`` is the depth of the two branch arms (the branch vertex sits at
    depth n-1), ``p >= q`` are the principal-graph dimensions at depth n and
    ``dual_dims`` the dual-graph ones, ordered the same way.  ``dim_tie``
    flags p and q agreeing within tolerance, in which case the ordering is
    conventional.
    """

    n: int
    p: float
    q: float
    dual_dims: tuple[float, float]
    gamma3_univalent: bool
    gamma2_trivalent: bool
    branch_depth_odd: bool
    dim_tie: bool = False

    def __post_init__(self) -> None:
        if not (self.q > 0 and self.p >= self.q):
            raise InvalidGraph("branch dimensions must satisfy p >= q > 0")
        g2, g3 = self.dual_dims
        if not (g3 > 0 and g2 >= g3):
            raise InvalidGraph("dual branch dimensions must be positive and ordered")


# ---------------------------------------------------------------------------
# parsing and serialization

def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        out.append((lineno, stripped))
    return out


def _take_key(lines: list[tuple[int, str]], key: str) -> tuple[int, list[str]]:
    if not lines:
        raise ParseError(f"missing '{key}:' line")
    lineno, text = lines.pop(0)
    if not text.startswith(key + ":"):
        raise ParseError(f"expected '{key}:' line, got {text!r}", lineno)
    return lineno, text[len(key) + 1 :].split()


def _parse_block(lines: list[tuple[int, str]]) -> GradedBigraph:
    lineno, tokens = _take_key(lines, "depths")
    if len(tokens) != 1 or not tokens[0].isdigit() or int(tokens[0]) < 1:
        raise ParseError("'depths:' needs a single positive integer", lineno)
    depth_count = int(tokens[0])

    lineno, tokens = _take_key(lines, "counts")
    if len(tokens) != depth_count:
        raise ParseError(
            f"'counts:' needs exactly {depth_count} entries, got {len(tokens)}", lineno
        )
    try:
        counts = tuple(int(t) for t in tokens)
    except ValueError:
        raise ParseError("'counts:' entries must be integers", lineno) from None

    lineno, tokens = _take_key(lines, "edges")
    edges = []
    for token in tokens:
        m = _EDGE_RE.match(token)
        if m is None:
            raise ParseError(f"bad edge token {token!r} (expected d:u-v)", lineno)
        d, u, v = (int(g) for g in m.groups())
        if d >= depth_count - 1:
            raise ParseError(
                f"edge {token!r}: depth {d} out of range for {depth_count} depths", lineno
            )
        if u >= counts[d] or v >= counts[d + 1]:
            raise ParseError(f"edge {token!r}: vertex index out of range", lineno)
        edges.append((d, u, v))
    return GradedBigraph(counts, tuple(edges))


def _parse_block_exact(lines: list[tuple[int, str]]) -> GradedBigraph:
    graph = _parse_block(lines)
    if lines:
        raise ParseError(f"unexpected content {lines[0][1]!r}", lines[0][0])
    return graph


def parse_graph(text: str) -> GradedBigraph:
    """Parse a single graph block; see the module docstring for the format."""
    return _parse_block_exact(_content_lines(text))


def parse_pair(text: str) -> tuple[GradedBigraph, GradedBigraph]:
    """Parse a graph pair file with [principal] and [dual] sections."""
    lines = _content_lines(text)
    if not lines or lines[0][1] != "[principal]":
        lineno = lines[0][0] if lines else None
        raise ParseError("pair file must start with a [principal] section", lineno)
    try:
        split_at = next(i for i, (_, t) in enumerate(lines) if t == "[dual]")
    except StopIteration:
        raise ParseError("missing [dual] section") from None
    principal = _parse_block_exact(lines[1:split_at])
    dual = _parse_block_exact(lines[split_at + 1 :])
    return principal, dual


def serialize_graph(g: GradedBigraph) -> str:
    counts = " ".join(str(c) for c in g.vertex_counts)
    tokens = " ".join(f"{d}:{u}-{v}" for d, u, v in g.edges)
    return f"depths: {g.depth_count}\ncounts: {counts}\nedges: {tokens}\n"


def serialize_pair(principal: GradedBigraph, dual: GradedBigraph) -> str:
    return f"[principal]\n{serialize_graph(principal)}[dual]\n{serialize_graph(dual)}"


# ---------------------------------------------------------------------------
# spectral data

def _perron_pair(a: np.ndarray) -> tuple[float, np.ndarray]:
    """Largest eigenvalue and unit positive eigenvector of an adjacency matrix.

    Power iteration runs on A + I: a graded graph is bipartite, so the
    spectrum of A is symmetric about zero and iterating A itself oscillates
    between the +delta and -delta eigenspaces.  The shift keeps the
    eigenvectors and makes the Perron eigenvalue strictly dominant.
    """
    size = a.shape[0]
    x = np.full(size, 1.0 / math.sqrt(size))
    for _ in range(POWER_ITERATION_CAP):
        ax = a @ x
        lam = float(x @ ax)
        if float(np.linalg.norm(ax - lam * x)) <= RESIDUAL_TOL:
            return lam, x
        y = ax + x
        x = y / np.linalg.norm(y)
    raise RuntimeError("power iteration failed to converge")


def graph_norm(g: GradedBigraph) -> float:
    """Spectral radius of the adjacency matrix (the graph norm)."""
    return _perron_pair(g.adjacency())[0]


def dimension_vector(g: GradedBigraph, delta: float) -> DimensionAssignment:
    """Perron-Frobenius dimensions at eigenvalue ``delta``, root normalized to 1."""
    norm, vec = _perron_pair(g.adjacency())
    if abs(delta - norm) > 1e-9:
        raise EigenvalueMismatch(f"delta = {delta!r} is not the graph norm {norm!r}")
    root = vec[0]
    dims = {}
    for d in range(g.depth_count):
        offset = g.vertex_offset(d)
        for i in range(g.vertex_counts[d]):
            dims[(d, i)] = float(vec[offset + i] / root)
    return DimensionAssignment(delta=delta, dims=dims)


def supertransitivity(g: GradedBigraph) -> tuple[int, bool]:
    """Length of the initial single-edge string, and whether a branch follows.

    Returns the largest ``s`` such that depths 0..s form a simple path with
    single edges.  ``has_branch`` is true when some vertex at depth s has two
    or more continuations into depth s+1 (counting multiplicity), i.e. the
    graph is not just a path.
    """
    level_multiplicity = Counter(d for d, _, _ in g.edges)
    s = 0
    while (
        s + 1 < g.depth_count
        and g.vertex_counts[s + 1] == 1
        and level_multiplicity[s] == 1
    ):
        s += 1
    return s, s + 1 < g.depth_count


def _require_simple_triple_point(g: GradedBigraph, n: int, label: str) -> None:
    if n < 2:
        raise NotATriplePoint(f"{label} graph branches at depth 0 (no downward edge)")
    ups = g.up_multiplicities(n - 1, 0)
    if g.valence(n - 1, 0) != 3:
        raise NotATriplePoint(
            f"{label} branch vertex has valence {g.valence(n - 1, 0)}, expected 3"
        )
    if len(ups) != 2 or any(m > 1 for m in ups.values()):
        raise NotATriplePoint(f"{label} branch vertex has a multiple edge")


def _ordered_depth_n(
    dims: DimensionAssignment, n: int, tol: float
) -> tuple[tuple[float, float], tuple[int, int], bool]:
    d0, d1 = dims[(n, 0)], dims[(n, 1)]
    tie = abs(d0 - d1) <= tol * max(1.0, d0, d1)
    if d1 > d0:
        return (d1, d0), (1, 0), tie
    return (d0, d1), (0, 1), tie


def extract_triple_point(
    ctx: QuantumContext, principal: GradedBigraph, dual: GradedBigraph
) -> TriplePointData:
    """Locate the initial triple point of a graph pair and collect its data.

    Both graphs must share their norm and supertransitivity, and each must
    branch into a simple triple point (three single edges: one down, two up).
    Larger-dimension vertices come first in the (p, q) and dual orderings;
    exact ties keep the input index order and are flagged.
    """
    norm_p = graph_norm(principal)
    norm_d = graph_norm(dual)
    if abs(norm_p - norm_d) > ctx.tol:
        raise NormMismatch(f"graph norms differ: {norm_p!r} vs {norm_d!r}")
    s_p, branch_p = supertransitivity(principal)
    s_d, branch_d = supertransitivity(dual)
    if s_p != s_d:
        raise SupertransitivityMismatch(f"supertransitivities differ: {s_p} vs {s_d}")
    if not (branch_p and branch_d):
        raise NotATriplePoint("graph has no initial branch point")
    n = s_p + 1
    _require_simple_triple_point(principal, n, "principal")
    _require_simple_triple_point(dual, n, "dual")

    dims_p = dimension_vector(principal, ctx.delta)
    dims_d = dimension_vector(dual, ctx.delta)
    (p, q), _, tie = _ordered_depth_n(dims_p, n, ctx.tol)
    (g2, g3), (idx2, idx3), _ = _ordered_depth_n(dims_d, n, ctx.tol)

    target = ctx.qint(n + 1)
    if abs(p + q - target) > 1e-6 * max(1.0, target):
        raise DimensionSumMismatch(
            f"p + q = {p + q!r} does not match [n+1] = {target!r};"
            " context delta is inconsistent with the graph spectrum"
        )
    return TriplePointData(
        n=n,
        p=p,
        q=q,
        dual_dims=(g2, g3),
        gamma3_univalent=dual.valence(n, idx3) == 1,
        gamma2_trivalent=dual.valence(n, idx2) == 3,
        branch_depth_odd=(n - 1) % 2 == 1,
        dim_tie=tie,
    )
