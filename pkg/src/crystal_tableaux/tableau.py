"""Tableaux, the far-eastern reading, the signature rule and B(lambda)."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, NamedTuple, Sequence

from .lie_types import (
    LOWERING,
    RAISING,
    LetterError,
    TypeSpec,
    Weight,
    hat_dominant_violation,
)


class TableauError(ValueError):
    pass


@dataclass(frozen=True)
class Tableau:
    """Rows of letters, top row first."""

    spec: TypeSpec
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) > self.spec.n:
            raise TableauError(f"{len(rows)} rows, {self.spec} allows at most {self.spec.n}")
        for r, row in enumerate(rows, start=1):
            if not row:
                raise TableauError(f"row {r} is empty")
            if r > 1 and len(row) > len(rows[r - 2]):
                raise TableauError(f"row {r} is longer than row {r - 1}")
            for x in row:
                if x not in self.spec.order:
                    raise LetterError(f"letter {x} in row {r} is not in the alphabet of {self.spec}")

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    def key(self) -> str:
        """Canonical serialization: rows joined by '/', letters by ','."""
        return "/".join(",".join(str(x) for x in row) for row in self.rows)

    def ascii(self) -> str:
        return "\n".join("[" + " ".join(str(x) for x in row) + "]" for row in self.rows)

    def __str__(self) -> str:
        return self.key()


def reading_positions(rows: Sequence[Sequence[int]]) -> list[tuple[int, int]]:
    """(row, column) pairs in far-eastern order: columns right to left, each top-down."""
    width = len(rows[0]) if rows else 0
    positions = []
    for c in range(width - 1, -1, -1):
        for r, row in enumerate(rows):
            if len(row) <= c:
                break
            positions.append((r, c))
    return positions


def far_eastern_reading(T: Tableau) -> list[int]:
    return [T.rows[r][c] for r, c in reading_positions(T.rows)]


class Signature(NamedTuple):
    ones: int
    zeros: int
    lower: int | None  # position owning the leftmost surviving 0
    raise_: int | None  # position owning the rightmost surviving 1

    def reduced(self) -> str:
        return "1" * self.ones + "0" * self.zeros


def i_signature(spec: TypeSpec, i: int, word: Iterable[int]) -> Signature:
    """Reduce the i-signature of ``word`` by cancelling (0, 1) pairs.

    A single stack pass: a 1 cancels the nearest unmatched 0 to its left.
    """
    zeros: list[int] = []
    last_one = None
    ones = 0
    table = spec.epsphi
    for pos, x in enumerate(word):
        eps, phi = table[(i, x)]
        for _ in range(eps):
            if zeros:
                zeros.pop()
            else:
                ones += 1
                last_one = pos
        zeros.extend([pos] * phi)
    return Signature(ones, len(zeros), zeros[0] if zeros else None, last_one)


def _act(T: Tableau, i: int, direction: str) -> tuple[Tableau, tuple[int, int]] | None:
    spec = T.spec
    positions = reading_positions(T.rows)
    sig = i_signature(spec, i, (T.rows[r][c] for r, c in positions))
    pos = sig.lower if direction == LOWERING else sig.raise_
    if pos is None:
        return None
    r, c = positions[pos]
    table = spec.lower if direction == LOWERING else spec.raise_
    new = table.get((i, T.rows[r][c]))
    if new is None:
        return None
    rows = list(T.rows)
    row = list(rows[r])
    row[c] = new
    rows[r] = tuple(row)
    return Tableau(spec, tuple(rows)), (r, c)


def apply_plain(spec: TypeSpec, i: int, T: Tableau, direction: str) -> Tableau | None:
    """Kashiwara operator on a tableau via the tensor product rule."""
    if i not in spec.index_set:
        raise LetterError(f"index {i} is not in I = 1..{spec.rank}")
    out = _act(T, i, direction)
    return None if out is None else out[0]


def apply_plain_at(T: Tableau, i: int, direction: str):
    """Like apply_plain but also reports the (row, column) of the changed box."""
    return _act(T, i, direction)


def tableau_weight(T: Tableau) -> Weight:
    weights = T.spec.weights
    total = [0] * T.spec.rank
    for row in T.rows:
        for x in row:
            for k, v in enumerate(weights[x].coords):
                total[k] += v
    return Weight(tuple(total))


def tableau_stats(spec: TypeSpec, T: Tableau) -> tuple[Weight, tuple[int, ...], tuple[int, ...]]:
    word = far_eastern_reading(T)
    eps, phi = [], []
    for i in spec.index_set:
        sig = i_signature(spec, i, word)
        eps.append(sig.ones)
        phi.append(sig.zeros)
    return tableau_weight(T), tuple(eps), tuple(phi)


def shape_weight(spec: TypeSpec, shape: Sequence[int]) -> Weight:
    """Weight of the filling of ``shape`` whose row i holds only the letter i."""
    total = Weight.zero(spec.rank)
    for i, length in enumerate(shape, start=1):
        total = total + spec.weights[i].scale(length)
    return total


def column_weight(spec: TypeSpec, height: int) -> Weight:
    return shape_weight(spec, [1] * height)


def shape_for_weight(spec: TypeSpec, lam: Weight) -> tuple[int, ...]:
    """Row lengths of the shape whose all-i filling has weight ``lam``."""
    problem = hat_dominant_violation(spec, lam)
    if problem:
        raise TableauError(f"{lam.coords} is not a restricted dominant weight for {spec}: {problem}")
    # column of height k < n carries the k-th fundamental weight in every family
    counts = [lam[k] for k in range(1, spec.n)]
    rest = lam - shape_weight(spec, [sum(counts[k - 1:]) for k in range(1, spec.n)])
    top = column_weight(spec, spec.n)
    pivot = next(k for k, v in enumerate(top.coords) if v)
    c_n, remainder = divmod(rest.coords[pivot], top.coords[pivot])
    if remainder or top.scale(c_n) != rest:
        raise TableauError(f"{lam.coords} is not a sum of column weights for {spec}")
    counts.append(c_n)
    shape = tuple(sum(counts[k:]) for k in range(spec.n))
    return tuple(length for length in shape if length)


def highest_weight_tableau(spec: TypeSpec, lam: Weight) -> Tableau:
    shape = shape_for_weight(spec, lam)
    if not shape:
        raise TableauError("the zero weight gives the empty tableau, which is not representable")
    return Tableau(spec, tuple((i,) * length for i, length in enumerate(shape, start=1)))


@dataclass
class Node:
    key: str
    element: object
    weight: Weight
    depth: int


@dataclass
class CrystalGraph:
    """Nodes in canonical BFS order and edges (source, i, target) by node index."""

    spec: TypeSpec
    nodes: list[Node] = field(default_factory=list)
    edges: list[tuple[int, int, int]] = field(default_factory=list)

    def index(self) -> dict[str, int]:
        return {node.key: k for k, node in enumerate(self.nodes)}

    def layer(self, depth: int) -> list[Node]:
        return [node for node in self.nodes if node.depth == depth]


def bfs(
    spec: TypeSpec,
    start,
    lower: Callable[[int, object], object | None],
    weight: Callable[[object], Weight],
    key: Callable[[object], Hashable],
    depth: int | None,
) -> CrystalGraph:
    """Closure of ``start`` under lowering, layer by layer.

    Nodes of each layer are sorted by ``key``; the edge list is ordered by
    (source index, label). Edges leaving the last layer are dropped.
    """
    graph = CrystalGraph(spec)
    seen = {key(start): 0}
    graph.nodes.append(Node(key(start), start, weight(start), 0))
    frontier = [0]
    d = 0
    while frontier and (depth is None or d < depth):
        found = {}
        pending = []
        for src in frontier:
            x = graph.nodes[src].element
            for i in spec.index_set:
                y = lower(i, x)
                if y is None:
                    continue
                k = key(y)
                if k not in seen and k not in found:
                    found[k] = y
                pending.append((src, i, k))
        frontier = []
        for k in sorted(found):
            seen[k] = len(graph.nodes)
            frontier.append(len(graph.nodes))
            graph.nodes.append(Node(k, found[k], weight(found[k]), d + 1))
        graph.edges.extend((src, i, seen[k]) for src, i, k in pending)
        d += 1
    return graph


def bfs_highest_weight(spec: TypeSpec, lam: Weight, depth: int | None = None) -> CrystalGraph:
    """B(lam) generated from u_lam; ``depth=None`` means the whole crystal."""
    u = highest_weight_tableau(spec, lam)
    return bfs(
        spec,
        u,
        lambda i, T: apply_plain(spec, i, T, LOWERING),
        tableau_weight,
        Tableau.key,
        depth,
    )


__all__ = [
    "CrystalGraph",
    "Node",
    "Signature",
    "Tableau",
    "TableauError",
    "apply_plain",
    "bfs",
    "bfs_highest_weight",
    "far_eastern_reading",
    "highest_weight_tableau",
    "i_signature",
    "shape_for_weight",
    "shape_weight",
    "tableau_stats",
    "tableau_weight",
    "RAISING",
    "LOWERING",
]
