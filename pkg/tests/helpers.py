"""Shared builders for synthetic graph-pair fixtures.

All fixtures are trees (occasionally with doubled edges) built on string
labels and then graded by BFS distance from a chosen root.  Grading a tree
from two different roots yields two graphs with exactly the same spectrum,
which is how pairs with matching norms but different shapes are made.
"""

from __future__ import annotations

from collections import deque

from tripoint.graph import GradedBigraph, serialize_pair

LabeledEdge = tuple[str, str]


def grade_tree(edges: list[LabeledEdge], root: str) -> GradedBigraph:
    """Grade a (multi)graph by distance from ``root`` and convert.

    Every edge must join vertices at consecutive depths; trees satisfy this
    for any root, and doubled edges or reconverging arms are fine as long as
    the depths work out.
    """
    neighbors: dict[str, list[str]] = {}
    for a, b in edges:
        neighbors.setdefault(a, []).append(b)
        neighbors.setdefault(b, []).append(a)

    depth = {root: 0}
    queue = deque([root])
    order: dict[int, list[str]] = {0: [root]}
    while queue:
        node = queue.popleft()
        for other in sorted(set(neighbors[node])):
            if other not in depth:
                depth[other] = depth[node] + 1
                order.setdefault(depth[other], []).append(other)
                queue.append(other)

    if len(depth) != len(neighbors):
        raise ValueError("graph is not connected")
    index = {
        label: i for d in sorted(order) for i, label in enumerate(order[d])
    }
    converted = []
    for a, b in edges:
        da, db = depth[a], depth[b]
        if abs(da - db) != 1:
            raise ValueError(f"edge {a}-{b} does not join consecutive depths")
        if da > db:
            a, b, da = b, a, db
        converted.append((da, index[a], index[b]))
    counts = tuple(len(order[d]) for d in range(len(order)))
    return GradedBigraph(counts, tuple(converted))


def branched_tree(
    branch_depth: int,
    spec_a: tuple[int, ...] = (),
    spec_b: tuple[int, ...] = (),
    doubled_tail: bool = False,
) -> list[LabeledEdge]:
    """A string of ``branch_depth`` edges, then a triple point with two arms.

    Each arm spec lists the lengths of the chains sprouting from that arm's
    first vertex: ``()`` ends the arm immediately (a 1-valent vertex), ``(2,)``
    continues it by a chain of two edges, ``(1, 1)`` splits it into two chains
    (a 3-valent vertex).  ``doubled_tail`` doubles the last edge of the first
    chain of arm B, for multiplicity coverage away from the branch.
    """
    path = [f"p{i}" for i in range(branch_depth + 1)]
    edges = [(path[i], path[i + 1]) for i in range(branch_depth)]
    for arm, spec in (("A", spec_a), ("B", spec_b)):
        edges.append((path[-1], arm))
        for j, length in enumerate(spec):
            prev = arm
            for step in range(length):
                node = f"{arm}{j}x{step}"
                edges.append((prev, node))
                prev = node
    if doubled_tail:
        edges.append(edges[-1])
    return edges


def self_paired(edges: list[LabeledEdge], root: str = "p0") -> tuple[GradedBigraph, GradedBigraph]:
    graph = grade_tree(edges, root)
    return graph, graph


def two_rooted_tree(extra_tail: int = 0) -> list[LabeledEdge]:
    """A tree graded two ways: symmetric arms from one root, a dead arm from the other.

    Rooted at ``a`` the branch vertex is c1 at depth 3 with two isomorphic
    arms (equal dimensions when ``extra_tail`` is 0).  Rooted at ``b`` the
    branch vertex is c2 at depth 3 with a 1-valent vertex L at depth 4.
    ``extra_tail`` lengthens the far end of the second arm, breaking the
    symmetry without touching the b-side grading.
    """
    edges = [
        ("a", "a2"), ("a2", "a1"), ("a1", "c1"),
        ("c1", "w"), ("w", "c2"), ("c2", "L"),
        ("c2", "m2"), ("m2", "m1"), ("m1", "b"),
        ("c1", "v"), ("v", "d2"), ("d2", "K"),
        ("d2", "n2"), ("n2", "n1"), ("n1", "e"),
    ]
    prev = "e"
    for i in range(extra_tail):
        node = f"t{i}"
        edges.append((prev, node))
        prev = node
    return edges


def two_rooted_pair(extra_tail: int = 0) -> tuple[GradedBigraph, GradedBigraph]:
    edges = two_rooted_tree(extra_tail)
    return grade_tree(edges, "a"), grade_tree(edges, "b")


def pair_text(principal: GradedBigraph, dual: GradedBigraph) -> str:
    return serialize_pair(principal, dual)


def battery_corpus() -> list[tuple[str, GradedBigraph, GradedBigraph]]:
    """At least twenty valid graph pairs covering the verdict combinations."""
    pairs: list[tuple[str, GradedBigraph, GradedBigraph]] = []

    def add_self(name: str, branch_depth: int, spec_a, spec_b, doubled=False):
        edges = branched_tree(branch_depth, spec_a, spec_b, doubled_tail=doubled)
        principal, dual = self_paired(edges)
        pairs.append((name, principal, dual))

    # odd branch depth, one dead arm: gamma3 is 1-valent
    for tail in (3, 4, 5, 6):
        add_self(f"depth3-dead-chain{tail}", 3, (), (tail,))
    for tail in (2, 3, 4, 5):
        add_self(f"depth5-dead-chain{tail}", 5, (), (tail,))
    # odd branch depth, both arms alive: gamma3 is 2-valent
    for arms in ((1, 1), (1, 2), (2, 2), (1, 3), (2, 3)):
        add_self(f"depth3-arms{arms[0]}{arms[1]}", 3, (arms[0],), (arms[1],))
    # dead arm plus a splitting arm: gamma2 is 3-valent
    for split in ((1, 1), (2, 1), (2, 2), (3, 1)):
        add_self(f"depth3-dead-split{split[0]}{split[1]}", 3, (), split)
    # even branch depth: parity obstruction fails
    add_self("depth4-dead-chain3", 4, (), (3,))
    add_self("depth4-dead-chain4", 4, (), (4,))
    add_self("depth4-arms11", 4, (1,), (1,))
    # doubled edge away from the branch
    add_self("depth3-doubled-tail", 3, (), (2,), doubled=True)
    # distinct gradings of one tree: symmetric arms vs dead arm
    pairs.append(("two-rooted-symmetric", *two_rooted_pair(0)))
    pairs.append(("two-rooted-skewed", *two_rooted_pair(1)))
    return pairs
