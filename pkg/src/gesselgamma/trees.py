"""Increasing plane trees and the Gessel correspondence.

A Gessel tree for the multiset {1^k1, ..., n^kn} is a plane tree whose
internal vertices are labelled 1..n (each exactly once), labels increase
away from the root, vertex i has exactly k_i + 1 ordered children, and the
K + 1 remaining slots are unlabelled leaves.

The correspondence sends a Stirling permutation w to a tree recursively:
the empty word maps to a single leaf; otherwise the smallest value i
splits w as w0 i w1 i ... i w_ki and the tree has root i whose children
are the images of w0, ..., w_ki.  Reading the tree back left to right
(writing the root label between consecutive subtrees) inverts the map.

Leaves are classified by their position among their parent's children:
the first child slot is an x-leaf, the last a y-leaf, and the slot at
position j (2 <= j <= k) a z-leaf with key j.

Serialized form: ``Internal := "(" LABEL { " " Child } ")"`` where a child
is either an internal vertex or ``"*"`` for a leaf.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union

from .errors import DomainError, ParseError, TreeValidationError
from .multiset import Multiset
from .stirling import StirlingPermutation


@dataclass(frozen=True, slots=True)
class Leaf:
    pass


@dataclass(frozen=True, slots=True)
class Internal:
    label: int
    children: tuple["Node", ...]


Node = Union[Leaf, Internal]

LEAF = Leaf()


@dataclass(frozen=True, slots=True)
class GesselTree:
    root: Node
    multiset: Multiset


@dataclass(frozen=True, slots=True)
class TreeViolation:
    kind: str  # "labels" | "arity" | "increasing" | "structure"
    vertex: int | None
    message: str


@dataclass(frozen=True)
class LeafCensus:
    """Leaf counts of a Gessel tree, overall and per internal vertex.

    ``per_vertex`` maps each label to ``(has_x, has_y, z_count)``;
    ``zleaf_by_j`` counts z-leaves by their child-position key j.
    """

    xleaf: int
    yleaf: int
    zleaf: int
    zleaf_by_j: dict[int, int]
    per_vertex: dict[int, tuple[bool, bool, int]]

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.xleaf, self.yleaf, self.zleaf)


def internal_vertices(node: Node) -> Iterator[Internal]:
    """Depth-first iteration over the internal vertices below (and at) a node."""
    stack = [node]
    while stack:
        cur = stack.pop()
        if isinstance(cur, Internal):
            yield cur
            stack.extend(cur.children)


def gessel_forward(s: StirlingPermutation) -> GesselTree:
    """Map a Stirling permutation to its Gessel tree."""

    def build(word: tuple[int, ...]) -> Node:
        if not word:
            return LEAF
        i = min(word)
        parts: list[tuple[int, ...]] = []
        start = 0
        for pos, v in enumerate(word):
            if v == i:
                parts.append(word[start:pos])
                start = pos + 1
        parts.append(word[start:])
        return Internal(i, tuple(build(p) for p in parts))

    return GesselTree(build(s.word), s.multiset)


def gessel_inverse(t: GesselTree) -> StirlingPermutation:
    """Read a Gessel tree back to its Stirling permutation.

    The tree is validated first; a malformed tree raises
    :class:`TreeValidationError`.
    """
    violations = validate_tree(t)
    if violations:
        raise TreeValidationError(violations)

    out: list[int] = []

    def read(node: Node) -> None:
        if isinstance(node, Leaf):
            return
        for idx, child in enumerate(node.children):
            if idx:
                out.append(node.label)
            read(child)

    read(t.root)
    return StirlingPermutation(tuple(out), t.multiset)


def validate_tree(t: GesselTree) -> list[TreeViolation]:
    """Structural validation; returns one violation record per defect."""
    m = t.multiset
    violations: list[TreeViolation] = []
    if m.n == 0:
        if not isinstance(t.root, Leaf):
            violations.append(TreeViolation(
                "structure", None, "tree over the empty multiset must be a single leaf"))
        return violations
    if isinstance(t.root, Leaf):
        violations.append(TreeViolation(
            "structure", None, f"root must be an internal vertex for {{{m}}}"))
        return violations

    seen: dict[int, int] = {}
    for v in internal_vertices(t.root):
        seen[v.label] = seen.get(v.label, 0) + 1
        if not 1 <= v.label <= m.n:
            violations.append(TreeViolation(
                "labels", v.label, f"vertex label {v.label} outside 1..{m.n}"))
            continue
        expected = m.multiplicity(v.label) + 1
        if len(v.children) != expected:
            violations.append(TreeViolation(
                "arity", v.label,
                f"vertex {v.label} has {len(v.children)} children, expected {expected}"))
        for child in v.children:
            if isinstance(child, Internal) and child.label <= v.label:
                violations.append(TreeViolation(
                    "increasing", child.label,
                    f"edge ({v.label} -> {child.label}) is not label-increasing"))
    for label in range(1, m.n + 1):
        c = seen.get(label, 0)
        if c == 0:
            violations.append(TreeViolation(
                "labels", label, f"vertex {label} is missing"))
        elif c > 1:
            violations.append(TreeViolation(
                "labels", label, f"vertex {label} appears {c} times"))
    return violations


def leaf_census(t: GesselTree) -> LeafCensus:
    xleaf = yleaf = zleaf = 0
    zleaf_by_j: dict[int, int] = {}
    per_vertex: dict[int, tuple[bool, bool, int]] = {}
    for v in internal_vertices(t.root):
        last = len(v.children)
        has_x = isinstance(v.children[0], Leaf)
        has_y = isinstance(v.children[-1], Leaf)
        z_count = 0
        for j in range(2, last):
            if isinstance(v.children[j - 1], Leaf):
                z_count += 1
                zleaf_by_j[j] = zleaf_by_j.get(j, 0) + 1
        xleaf += has_x
        yleaf += has_y
        zleaf += z_count
        per_vertex[v.label] = (has_x, has_y, z_count)
    return LeafCensus(xleaf, yleaf, zleaf, zleaf_by_j, per_vertex)


def _positions(word: tuple[int, ...], i: int) -> list[int]:
    return [p for p, v in enumerate(word, start=1) if v == i]


def segment(s: StirlingPermutation, i: int) -> tuple[int, int]:
    """The i-segment as a 1-based inclusive index window (r, s).

    This is the maximal contiguous window that contains every occurrence
    of i and consists of elements >= i: starting from the span of the
    occurrences of i, grow outwards while the neighbouring element is at
    least i.  Maximality pins the window down uniquely; it coincides with
    the subword the Gessel tree hangs below vertex i.
    """
    if not 1 <= i <= s.multiset.n:
        raise DomainError(f"value {i} is not in the multiset {{{s.multiset}}}")
    w = s.word
    pos = _positions(w, i)
    r, t = pos[0], pos[-1]
    while r > 1 and w[r - 2] >= i:
        r -= 1
    while t < len(w) and w[t] >= i:
        t += 1
    return (r, t)


def segment_word(s: StirlingPermutation, i: int) -> tuple[int, ...]:
    r, t = segment(s, i)
    return s.word[r - 1 : t]


def gessel_decomposition(s: StirlingPermutation, i: int) -> tuple[tuple[int, ...], ...]:
    """Split the i-segment at the k_i copies of i into k_i + 1 factors.

    Each nonempty factor is itself the segment of its own minimum, which
    is how the tree recursion consumes the word.
    """
    seg = segment_word(s, i)
    parts: list[tuple[int, ...]] = []
    start = 0
    for pos, v in enumerate(seg):
        if v == i:
            parts.append(seg[start:pos])
            start = pos + 1
    parts.append(seg[start:])
    return tuple(parts)


def first_last_occurrence_flags(s: StirlingPermutation, i: int) -> tuple[bool, bool]:
    """(first occurrence of i is an ascent, last occurrence is a descent)."""
    if not 1 <= i <= s.multiset.n:
        raise DomainError(f"value {i} is not in the multiset {{{s.multiset}}}")
    w = s.word
    pos = _positions(w, i)
    p, q = pos[0], pos[-1]
    before = w[p - 2] if p >= 2 else 0
    after = w[q] if q < len(w) else 0
    return (before < i, i > after)


def serialize(tree_or_node: GesselTree | Node) -> str:
    """Write a tree in the ``(label child ...)`` form with ``*`` for leaves."""
    node = tree_or_node.root if isinstance(tree_or_node, GesselTree) else tree_or_node

    def render(n: Node) -> str:
        if isinstance(n, Leaf):
            return "*"
        inner = " ".join(render(c) for c in n.children)
        return f"({n.label} {inner})" if inner else f"({n.label})"

    return render(node)


def parse_tree(text: str, multiset: Multiset | None = None) -> GesselTree:
    """Parse the serialized form and validate the result.

    The multiset is inferred from the tree (vertex i with c children has
    k_i = c - 1) unless one is supplied, in which case they must agree.
    Syntax errors raise :class:`ParseError`; a syntactically fine but
    structurally invalid tree raises :class:`TreeValidationError`.
    """
    tokens = text.replace("(", " ( ").replace(")", " ) ").split()
    pos = 0

    def parse_node() -> Node:
        nonlocal pos
        if pos >= len(tokens):
            raise ParseError("unexpected end of tree text")
        tok = tokens[pos]
        if tok == "*":
            pos += 1
            return LEAF
        if tok != "(":
            raise ParseError(f"expected '(' or '*', got {tok!r}")
        pos += 1
        if pos >= len(tokens) or not tokens[pos].isdigit():
            raise ParseError("expected a vertex label after '('")
        label = int(tokens[pos])
        pos += 1
        children: list[Node] = []
        while pos < len(tokens) and tokens[pos] != ")":
            children.append(parse_node())
        if pos >= len(tokens):
            raise ParseError(f"unclosed '(' for vertex {label}")
        pos += 1  # consume ")"
        return Internal(label, tuple(children))

    root = parse_node()
    if pos != len(tokens):
        raise ParseError(f"trailing tokens after tree: {' '.join(tokens[pos:])!r}")
    if isinstance(root, Leaf):
        inferred = Multiset(())
    else:
        counts: dict[int, int] = {}
        for v in internal_vertices(root):
            if v.label in counts:
                raise TreeValidationError([TreeViolation(
                    "labels", v.label, f"vertex {v.label} appears more than once")])
            if len(v.children) < 2:
                raise TreeValidationError([TreeViolation(
                    "arity", v.label,
                    f"vertex {v.label} has {len(v.children)} children, expected at least 2")])
            counts[v.label] = len(v.children) - 1
        n = max(counts)
        missing = [i for i in range(1, n + 1) if i not in counts]
        if missing:
            raise TreeValidationError([TreeViolation(
                "labels", i, f"vertex {i} is missing") for i in missing])
        inferred = Multiset(tuple(counts[i] for i in range(1, n + 1)))
    if multiset is not None and multiset != inferred:
        raise DomainError(
            f"tree implies multiset {{{inferred}}} but {{{multiset}}} was given")
    tree = GesselTree(root, inferred)
    violations = validate_tree(tree)
    if violations:
        raise TreeValidationError(violations)
    return tree
