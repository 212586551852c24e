"""A Foata-Strehl style action on Gessel trees.

Call an x-leaf balanced when its vertex also has a y-leaf (and vice
versa).  The local flip psi_i swaps the first and last children of vertex
i when that vertex carries an unbalanced y-leaf, moving the leaf to the
x side; the two-sided variant ``toggle`` flips whenever the vertex has an
unbalanced leaf on either side, and is an involution.

A tree is canonical when no vertex has an unbalanced y-leaf.  Flipping
every unbalanced-y vertex of a tree reaches the unique canonical member
of its orbit; the orbit itself consists of the trees obtained from the
canonical representative by flipping any subset of its unbalanced-x
vertices, hence has size 2^uxleaf.

Pruning a tree removes its x- and y-leaves and remembers what was lost as
a vertex label: nothing for a vertex that had neither, ``y`` when only a
y-leaf was removed, ``v`` when only an x-leaf, and ``u`` when both.  A
canonical tree has no ``y`` labels and carries the weight u^#u * v^#v.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterator

from .errors import DomainError, NotCanonicalError
from .multiset import Multiset
from .stirling import enumerate_stirling
from .trees import (
    LEAF,
    GesselTree,
    Internal,
    Leaf,
    Node,
    internal_vertices,
    leaf_census,
)


class BalanceStatus(str, Enum):
    NO_XY = "no-xy-leaf"
    BALANCED = "balanced-pair"
    UNBALANCED_X = "unbalanced-x"
    UNBALANCED_Y = "unbalanced-y"


@dataclass(frozen=True)
class BalanceReport:
    """Per-vertex balance classification with the four summary counts."""

    status: dict[int, BalanceStatus]
    uxleaf: int
    bxleaf: int
    uyleaf: int
    byleaf: int

    def vertices_with(self, status: BalanceStatus) -> list[int]:
        return sorted(v for v, st in self.status.items() if st is status)


_STATUS_BY_FLAGS = {
    (False, False): BalanceStatus.NO_XY,
    (True, True): BalanceStatus.BALANCED,
    (True, False): BalanceStatus.UNBALANCED_X,
    (False, True): BalanceStatus.UNBALANCED_Y,
}


def balance_report(t: GesselTree) -> BalanceReport:
    census = leaf_census(t)
    status = {
        label: _STATUS_BY_FLAGS[(has_x, has_y)]
        for label, (has_x, has_y, _) in census.per_vertex.items()
    }
    counts = {st: 0 for st in BalanceStatus}
    for st in status.values():
        counts[st] += 1
    balanced = counts[BalanceStatus.BALANCED]
    return BalanceReport(
        status=status,
        uxleaf=counts[BalanceStatus.UNBALANCED_X],
        bxleaf=balanced,
        uyleaf=counts[BalanceStatus.UNBALANCED_Y],
        byleaf=balanced,
    )


def _swap_ends_at(node: Node, i: int) -> Node:
    """Swap the first and last children of the vertex labelled i."""
    if isinstance(node, Leaf):
        return node
    if node.label == i:
        ch = list(node.children)
        ch[0], ch[-1] = ch[-1], ch[0]
        return Internal(i, tuple(ch))
    return Internal(node.label, tuple(_swap_ends_at(c, i) for c in node.children))


def _require_vertex(t: GesselTree, i: int) -> None:
    if not 1 <= i <= t.multiset.n:
        raise DomainError(f"vertex {i} is not in the tree over {{{t.multiset}}}")


def psi(t: GesselTree, i: int) -> GesselTree:
    """Flip vertex i if it has an unbalanced y-leaf; otherwise the identity."""
    _require_vertex(t, i)
    if balance_report(t).status[i] is BalanceStatus.UNBALANCED_Y:
        return GesselTree(_swap_ends_at(t.root, i), t.multiset)
    return t


def toggle(t: GesselTree, i: int) -> GesselTree:
    """Flip vertex i if it has an unbalanced leaf on either side (an involution)."""
    _require_vertex(t, i)
    st = balance_report(t).status[i]
    if st in (BalanceStatus.UNBALANCED_X, BalanceStatus.UNBALANCED_Y):
        return GesselTree(_swap_ends_at(t.root, i), t.multiset)
    return t


def is_canonical(t: GesselTree) -> bool:
    return balance_report(t).uyleaf == 0


def canonical_representative(t: GesselTree) -> GesselTree:
    """Flip every unbalanced-y vertex, in ascending label order.

    A flip at one vertex never changes another vertex's child list, so the
    result does not depend on the order; ascending order is fixed to make
    runs reproducible.
    """
    report = balance_report(t)
    root = t.root
    for i in report.vertices_with(BalanceStatus.UNBALANCED_Y):
        root = _swap_ends_at(root, i)
    return GesselTree(root, t.multiset)


def orbit(t: GesselTree) -> frozenset[GesselTree]:
    """The orbit of t: all subset-flips of the canonical form's unbalanced-x vertices."""
    canon = canonical_representative(t)
    free = balance_report(canon).vertices_with(BalanceStatus.UNBALANCED_X)
    members = []
    for r in range(len(free) + 1):
        for subset in combinations(free, r):
            root = canon.root
            for i in subset:
                root = _swap_ends_at(root, i)
            members.append(GesselTree(root, canon.multiset))
    return frozenset(members)


def enumerate_canonical(m: Multiset) -> Iterator[GesselTree]:
    """All canonical Gessel trees over m, by filtering the permutation stream."""
    from .trees import gessel_forward

    for s in enumerate_stirling(m):
        t = gessel_forward(s)
        if is_canonical(t):
            yield t


def is_canonical_ternary(t: GesselTree) -> bool:
    """For trees over {1^2, ..., n^2}: no vertex has a z-leaf without an x-leaf."""
    if not t.multiset.is_uniform(2):
        raise DomainError(
            f"canonical ternary trees live over 2,2,...,2 multisets, not {{{t.multiset}}}")
    for has_x, _, z_count in leaf_census(t).per_vertex.values():
        if z_count and not has_x:
            return False
    return True


# Pruned-tree vertex types, keyed by (had_x, had_y).
TYPE_NONE, TYPE_Y, TYPE_V, TYPE_U = 1, 2, 3, 4

_TYPE_BY_FLAGS = {
    (False, False): TYPE_NONE,
    (False, True): TYPE_Y,
    (True, False): TYPE_V,
    (True, True): TYPE_U,
}

_TYPE_SUFFIX = {TYPE_NONE: "", TYPE_Y: ":y", TYPE_V: ":v", TYPE_U: ":u"}


@dataclass(frozen=True)
class PrunedTree:
    """A Gessel tree with its x- and y-leaves removed.

    The remaining leaves are exactly the z-leaves of the original tree.
    ``types`` records, per vertex, which sides were removed; ``weight``
    is only defined when no vertex is of the y-only type.
    """

    root: Node
    multiset: Multiset
    types: dict[int, int]
    zleaf: int

    @property
    def u_count(self) -> int:
        return sum(1 for ty in self.types.values() if ty == TYPE_U)

    @property
    def v_count(self) -> int:
        return sum(1 for ty in self.types.values() if ty == TYPE_V)

    def weight(self) -> tuple[int, int]:
        """(u-exponent, v-exponent); raises NotCanonicalError on a y-type vertex."""
        bad = sorted(v for v, ty in self.types.items() if ty == TYPE_Y)
        if bad:
            raise NotCanonicalError(bad[0])
        return (self.u_count, self.v_count)


def prune(t: GesselTree) -> PrunedTree:
    census = leaf_census(t)
    types = {
        label: _TYPE_BY_FLAGS[(has_x, has_y)]
        for label, (has_x, has_y, _) in census.per_vertex.items()
    }

    def strip(node: Internal) -> Internal:
        kept: list[Node] = []
        last = len(node.children)
        for pos, child in enumerate(node.children, start=1):
            if isinstance(child, Leaf):
                if pos == 1 or pos == last:
                    continue  # x- or y-leaf
                kept.append(child)
            else:
                kept.append(strip(child))
        return Internal(node.label, tuple(kept))

    root: Node = t.root if isinstance(t.root, Leaf) else strip(t.root)
    return PrunedTree(root=root, multiset=t.multiset, types=types, zleaf=census.zleaf)


def serialize_pruned(p: PrunedTree) -> str:
    """``(label[:tag] child ...)`` with ``*`` for the surviving z-leaves."""

    def render(n: Node) -> str:
        if isinstance(n, Leaf):
            return "*"
        head = f"{n.label}{_TYPE_SUFFIX[p.types[n.label]]}"
        inner = " ".join(render(c) for c in n.children)
        return f"({head} {inner})" if inner else f"({head})"

    return render(p.root)
