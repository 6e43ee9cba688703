"""Root data and letter crystals for the types A_n, B_n, C_n, D_{n+1} and G_2.

Letters are signed integers: ``i`` is the unbarred letter i, ``-i`` is the
barred letter, and ``0`` is the zero letter (types B and G only).

For type D the subscript is shifted: ``make_type_spec("D", n)`` is the
algebra D_{n+1}, of rank n + 1, whose tableaux have at most n rows.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

FAMILIES = ("A", "B", "C", "D", "G")

RAISING = "raising"
LOWERING = "lowering"


class TypeSpecError(ValueError):
    """Unsupported family/rank combination."""


class LetterError(ValueError):
    """A letter or index that does not belong to the alphabet."""


@dataclass(frozen=True)
class Weight:
    """Integer vector of values <h_i, .>, i = 1..rank."""

    coords: tuple[int, ...]

    def __add__(self, other: Weight) -> Weight:
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: Weight) -> Weight:
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> Weight:
        return Weight(tuple(-a for a in self.coords))

    def __getitem__(self, i: int) -> int:
        # 1-based, matching the index set I
        return self.coords[i - 1]

    def __len__(self) -> int:
        return len(self.coords)

    def scale(self, k: int) -> Weight:
        return Weight(tuple(k * a for a in self.coords))

    @classmethod
    def zero(cls, rank: int) -> Weight:
        return cls((0,) * rank)


@dataclass(frozen=True)
class TypeSpec:
    family: str
    n: int
    alphabet: tuple[int, ...] = field(compare=False)
    # rank of each letter under the ordering; D puts n+1 and -(n+1) on one level
    order: dict = field(compare=False, hash=False, repr=False)
    # (i, x) -> f_i x, and the inverse (i, y) -> e_i y
    lower: dict = field(compare=False, hash=False, repr=False)
    raise_: dict = field(compare=False, hash=False, repr=False)
    cartan: tuple[tuple[int, ...], ...] = field(compare=False, repr=False, default=())
    # (i, x) -> (eps_i(x), phi_i(x)); x -> weight
    epsphi: dict = field(compare=False, hash=False, repr=False, default_factory=dict)
    weights: dict = field(compare=False, hash=False, repr=False, default_factory=dict)

    @property
    def rank(self) -> int:
        return self.n + 1 if self.family == "D" else self.n

    @property
    def index_set(self) -> range:
        return range(1, self.rank + 1)

    def key(self, x: int) -> int:
        """Sort key realising the order on the alphabet."""
        return self.order[x]

    def simple_root(self, i: int) -> Weight:
        return Weight(tuple(row[i - 1] for row in self.cartan))

    def __str__(self) -> str:
        rank = self.rank
        return f"{self.family}{rank}"


def _arrows(family: str, n: int) -> list[tuple[int, int, int]]:
    """Lowering arrows (i, x, f_i x) of the vector/fundamental letter crystal."""
    if family == "G":
        return [(1, 1, 2), (2, 2, 3), (1, 3, 0), (1, 0, -3), (2, -3, -2), (1, -2, -1)]
    arrows = [(i, i, i + 1) for i in range(1, n)]
    if family == "A":
        arrows.append((n, n, n + 1))
        return arrows
    arrows += [(i, -(i + 1), -i) for i in range(1, n)]
    if family == "B":
        arrows += [(n, n, 0), (n, 0, -n)]
    elif family == "C":
        arrows.append((n, n, -n))
    elif family == "D":
        m = n + 1
        arrows += [(n, n, m), (m, n, -m), (m, m, -n), (n, -m, -n)]
    return arrows


def _alphabet(family: str, n: int) -> tuple[int, ...]:
    if family == "A":
        return tuple(range(1, n + 2))
    if family == "G":
        return (1, 2, 3, 0, -3, -2, -1)
    up = list(range(1, n + 1))
    down = [-j for j in range(n, 0, -1)]
    if family == "B":
        return tuple(up + [0] + down)
    if family == "C":
        return tuple(up + down)
    return tuple(up + [n + 1, -(n + 1)] + down)


def _check(family: str, n: int) -> None:
    if family not in FAMILIES:
        raise TypeSpecError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    if not isinstance(n, int) or n < 1:
        raise TypeSpecError(f"n must be a positive integer, got {n!r}")
    if family == "G" and n != 2:
        raise TypeSpecError(f"family G admits only n = 2, got n = {n}")
    if family == "D" and n < 2:
        raise TypeSpecError(f"family D needs n >= 2 (algebra D_(n+1) of rank >= 3), got n = {n}")


@lru_cache(maxsize=None)
def make_type_spec(family: str, n: int) -> TypeSpec:
    """Build the alphabet, letter crystal and Cartan data for (family, n)."""
    _check(family, n)
    alphabet = _alphabet(family, n)
    order = {x: pos for pos, x in enumerate(alphabet)}
    if family == "D":
        order[-(n + 1)] = order[n + 1]
        for x in alphabet[alphabet.index(-(n + 1)) + 1:]:
            order[x] -= 1
    lower = {}
    raise_ = {}
    for i, x, y in _arrows(family, n):
        lower[(i, x)] = y
        raise_[(i, y)] = x
    spec = TypeSpec(family, n, alphabet, order, lower, raise_)
    for i in spec.index_set:
        for x in alphabet:
            spec.epsphi[(i, x)] = _string_position(spec, i, x)
    for x in alphabet:
        spec.weights[x] = Weight(tuple(spec.epsphi[(i, x)][1] - spec.epsphi[(i, x)][0]
                                       for i in spec.index_set))

    rank = spec.rank
    columns = []
    for i in range(1, rank + 1):
        x = next(a for (j, a) in lower if j == i)
        alpha = letter_weight(spec, x) - letter_weight(spec, lower[(i, x)])
        columns.append(alpha.coords)
    cartan = tuple(tuple(columns[j][i] for j in range(rank)) for i in range(rank))
    for i in range(rank):
        assert cartan[i][i] == 2, (family, n, cartan)
        assert all(cartan[i][j] <= 0 for j in range(rank) if j != i), (family, n, cartan)
        # zero pattern must be symmetric for a generalized Cartan matrix
        assert all((cartan[i][j] == 0) == (cartan[j][i] == 0) for j in range(rank))
    object.__setattr__(spec, "cartan", cartan)
    # every arrow, not just the first per index, must realise the same root
    for (i, x), y in lower.items():
        assert letter_weight(spec, x) - letter_weight(spec, y) == spec.simple_root(i)
    return spec


def _check_letter(spec: TypeSpec, x: int) -> None:
    if x not in spec.order:
        raise LetterError(f"letter {x} is not in the alphabet of {spec}")


def _check_index(spec: TypeSpec, i: int) -> None:
    if i not in spec.index_set:
        raise LetterError(f"index {i} is not in I = 1..{spec.rank} for {spec}")


def letter_step(spec: TypeSpec, i: int, x: int, direction: str) -> int | None:
    """The i-arrow neighbour of ``x``, or None when there is none."""
    _check_letter(spec, x)
    _check_index(spec, i)
    table = spec.lower if direction == LOWERING else spec.raise_
    return table.get((i, x))


def _string_position(spec: TypeSpec, i: int, x: int) -> tuple[int, int]:
    eps = 0
    y = x
    while (i, y) in spec.raise_:
        y = spec.raise_[(i, y)]
        eps += 1
    phi = 0
    y = x
    while (i, y) in spec.lower:
        y = spec.lower[(i, y)]
        phi += 1
    return eps, phi


def letter_eps_phi(spec: TypeSpec, i: int, x: int) -> tuple[int, int]:
    """Distances from ``x`` to the top and bottom of its i-string."""
    _check_letter(spec, x)
    _check_index(spec, i)
    return spec.epsphi[(i, x)]


def letter_weight(spec: TypeSpec, x: int) -> Weight:
    _check_letter(spec, x)
    return spec.weights[x]


def is_hat_dominant(spec: TypeSpec, lam: Weight) -> bool:
    """Membership in the restricted dominant cone."""
    if len(lam) != spec.rank:
        raise ValueError(f"weight {lam.coords} has length {len(lam)}, {spec} needs {spec.rank}")
    return not hat_dominant_violation(spec, lam)


def hat_dominant_violation(spec: TypeSpec, lam: Weight) -> str | None:
    """Describe why ``lam`` is outside the restricted dominant cone, or None."""
    if len(lam) != spec.rank:
        return f"weight has length {len(lam)}, expected {spec.rank}"
    for i, c in enumerate(lam.coords, start=1):
        if c < 0:
            return f"coordinate {i} is negative ({c})"
    n = spec.n
    if spec.family == "B" and lam[n] % 2:
        return f"type B needs an even coordinate {n}, got {lam[n]}"
    if spec.family == "D" and lam[n] != lam[n + 1]:
        return f"type D needs coordinates {n} and {n + 1} equal, got {lam[n]} and {lam[n + 1]}"
    return None
