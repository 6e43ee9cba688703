"""Cliff's realization of B(infinity) and its bijection with marginally large tableaux.

An element is u_inf (x) beta_1 (x) ... (x) beta_n, where beta_i is a tensor
product of elementary crystals b_j(-k). Each factor is labelled by the j of
its exponent k_{i,j}: a positive label r for k_{i,r} and a negative label -r
for k_{i,bar r}. The elementary crystal of a label r is B_r, and of
-r it is B_{r-1}.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import floor

from .lie_types import LOWERING, RAISING, TypeSpec, Weight
from .tableau import Tableau

NEG_INF = float("-inf")


class CliffError(ValueError):
    pass


def _require_classical(spec: TypeSpec) -> None:
    if spec.family not in "ABCD":
        raise CliffError(f"no Cliff realization for {spec}: only types A, B, C and D are covered")


def factor_labels(spec: TypeSpec, i: int) -> tuple[int, ...]:
    """Labels j of k_{i,j}, in the tensor order of beta_i."""
    n = spec.n
    down = tuple(range(n, i - 1, -1))
    if spec.family == "A":
        return down
    bars = tuple(-r for r in range(i + 1, n + 1))
    if spec.family == "D":
        if i == n:
            return (n + 1, n)
        return bars + (n + 1,) + down
    return bars + down


def crystal_index(label: int) -> int:
    return label if label > 0 else -label - 1


@dataclass(frozen=True)
class CliffElement:
    spec: TypeSpec
    k: tuple[tuple[int, ...], ...]  # k[i-1] is beta_i in factor order

    def __post_init__(self):
        object.__setattr__(self, "k", tuple(tuple(row) for row in self.k))
        _require_classical(self.spec)
        n = self.spec.n
        if len(self.k) != n:
            raise CliffError(f"expected {n} tuples beta_1..beta_{n}, got {len(self.k)}")
        for i, row in enumerate(self.k, start=1):
            want = len(factor_labels(self.spec, i))
            if len(row) != want:
                raise CliffError(f"beta_{i} needs {want} entries, got {len(row)}")

    def get(self, i: int, label: int) -> int:
        """k_{i,label}; labels absent from beta_i read as 0."""
        labels = factor_labels(self.spec, i)
        if label not in labels:
            return 0
        return self.k[i - 1][labels.index(label)]

    def as_dict(self) -> dict[tuple[int, int], int]:
        return {
            (i, j): v
            for i, row in enumerate(self.k, start=1)
            for j, v in zip(factor_labels(self.spec, i), row)
        }

    def key(self) -> str:
        return "|".join(",".join(map(str, row)) for row in self.k)

    @classmethod
    def from_dict(cls, spec: TypeSpec, values: dict[tuple[int, int], int]) -> CliffElement:
        rows = []
        for i in range(1, spec.n + 1):
            rows.append(tuple(values.get((i, j), 0) for j in factor_labels(spec, i)))
        extra = set(values) - {(i, j) for i in range(1, spec.n + 1) for j in factor_labels(spec, i)}
        if extra:
            raise CliffError(f"unknown entries {sorted(extra)} for {spec}")
        return cls(spec, tuple(rows))


def cliff_zero(spec: TypeSpec) -> CliffElement:
    _require_classical(spec)
    return CliffElement(spec, tuple((0,) * len(factor_labels(spec, i)) for i in range(1, spec.n + 1)))


def _chain_ok(values) -> bool:
    return all(v >= 0 for v in values[:1]) and all(a <= b for a, b in zip(values, values[1:]))


def validate_cliff(spec: TypeSpec, c: CliffElement) -> bool:
    """The inequality chains cutting out the image of B(infinity)."""
    _require_classical(spec)
    n = spec.n
    for i in range(1, n + 1):
        row = c.k[i - 1]
        if any(not isinstance(v, int) or v < 0 for v in row):
            return False
        labels = factor_labels(spec, i)
        if spec.family in "AC":
            chain = list(row)
        elif spec.family == "B":
            # k_{i,n}/2 is compared exactly by doubling everything else
            chain = [v if j == n else 2 * v for j, v in zip(labels, row)]
        else:
            if i == n:
                continue
            m = labels.index(n + 1)
            low, high = sorted((row[m], row[m + 1]))
            chain = list(row[:m]) + [low, high] + list(row[m + 2:])
        if not _chain_ok(chain):
            return False
    return True


def _factors(c: CliffElement) -> list[tuple[int, int, int]]:
    """(row i, position in beta_i, crystal index) for every factor, left to right."""
    out = []
    for i in range(1, c.spec.n + 1):
        for p, label in enumerate(factor_labels(c.spec, i)):
            out.append((i, p, crystal_index(label)))
    return out


def cliff_step(spec: TypeSpec, a: int, c: CliffElement, direction: str) -> CliffElement | None:
    """Kashiwara operator on u_inf (x) beta_1 (x) ... (x) beta_n.

    b_j(-k) has eps_j = k, phi_j = -k, wt = -k alpha_j and eps = phi = -inf
    for other indices; u_inf has eps = phi = 0. The product is treated as
    left-associated: f acts on the left part X of X (x) y iff
    phi(X) > eps(y), e acts on X iff phi(X) >= eps(y).
    """
    if not validate_cliff(spec, c):
        raise CliffError(f"{c.key()} violates the constraint chains")
    if a not in spec.index_set:
        raise CliffError(f"index {a} is not in I = 1..{spec.rank}")
    factors = _factors(c)
    row_a = spec.cartan[a - 1]
    # phi of each prefix u_inf (x) x_1 (x) ... (x) x_m
    prefix_phi = [0]
    for i, p, j in factors:
        k = c.k[i - 1][p]
        pairing = -k * row_a[j - 1]
        phi_y = -k if j == a else NEG_INF
        prefix_phi.append(max(phi_y, prefix_phi[-1] + pairing))
    for m in range(len(factors), 0, -1):
        i, p, j = factors[m - 1]
        if j != a:
            continue
        eps_y = c.k[i - 1][p]
        left = prefix_phi[m - 1]
        goes_left = left > eps_y if direction == LOWERING else left >= eps_y
        if goes_left:
            continue
        rows = [list(r) for r in c.k]
        rows[i - 1][p] += 1 if direction == LOWERING else -1
        out = CliffElement(spec, tuple(rows))
        if not validate_cliff(spec, out):
            raise CliffError(f"operator {direction} {a} left the image: {out.key()}")
        return out
    if direction == RAISING:
        return None
    raise CliffError(f"lowering {a} reached u_inf from {c.key()}")


def _row_counts(T: Tableau, i: int) -> Counter:
    return Counter(x for x in T.rows[i - 1] if x != i)


def tableau_to_cliff(spec: TypeSpec, T: Tableau) -> CliffElement:
    _require_classical(spec)
    n = spec.n
    fam = spec.family
    k: dict[tuple[int, int], int] = {}
    for i in range(1, n + 1):
        b = _row_counts(T, i)
        bar = lambda lo, hi: sum(b[-j] for j in range(lo, hi + 1))  # noqa: E731
        plain = lambda lo, hi: sum(b[j] for j in range(lo, hi + 1))  # noqa: E731
        if fam == "A":
            for r in range(i, n + 1):
                k[(i, r)] = plain(r + 1, n + 1)
            continue
        if i == n:
            if fam == "B":
                k[(n, n)] = 2 * b[-n] + b[0]
            elif fam == "C":
                k[(n, n)] = b[-n]
            else:
                k[(n, n)] = b[n + 1] + b[-n]
                k[(n, n + 1)] = bar(n, n + 1)
            continue
        for r in range(i + 1, n + 1):
            k[(i, -r)] = bar(i, r - 1)
        if fam == "B":
            for r in range(i, n):
                k[(i, r)] = plain(r + 1, n) + b[0] + bar(i, n)
            k[(i, n)] = 2 * bar(i, n) + b[0]
        elif fam == "C":
            for r in range(i, n):
                k[(i, r)] = plain(r + 1, n) + bar(i, n)
            k[(i, n)] = bar(i, n)
        else:
            for r in range(i, n):
                k[(i, r)] = plain(r + 1, n + 1) + bar(i, n + 1)
            k[(i, n)] = b[n + 1] + bar(i, n)
            k[(i, n + 1)] = bar(i, n + 1)
    return CliffElement.from_dict(spec, k)


def _whole(value) -> int:
    value = Fraction(value)
    if value.denominator != 1 or value < 0:
        raise CliffError(f"letter count {value} is not a nonnegative integer")
    return int(value)


def cliff_to_tableau(spec: TypeSpec, c: CliffElement) -> Tableau:
    if not validate_cliff(spec, c):
        raise CliffError(f"{c.key()} violates the constraint chains")
    n = spec.n
    fam = spec.family
    K = c.get
    half = Fraction(1, 2)
    rows = []
    for i in range(1, n + 1):
        count: dict[int, object] = {}
        if fam == "A":
            count[n + 1] = K(i, n)
            for j in range(i + 1, n + 1):
                count[j] = K(i, j - 1) - K(i, j)
            count[i] = (n - i + 1) + sum(K(r, r) for r in range(i + 1, n + 1))
        elif i == n:
            if fam == "B":
                B = K(n, n) * half - K(n, -n)
                count[-n] = floor(B)
                count[0] = 2 * (B - floor(B))
            elif fam == "C":
                count[-n] = K(n, n)
            else:
                count[-n] = K(n, n) - max(0, K(n, n) - K(n, n + 1))
                count[-(n + 1)] = max(0, K(n, n + 1) - K(n, n))
                count[n + 1] = max(0, K(n, n) - K(n, n + 1))
            count[n] = 1
        else:
            count[-i] = K(i, -(i + 1))
            for j in range(i + 1, n):
                count[-j] = K(i, -(j + 1)) - K(i, -j)
            for j in range(i + 1, n):
                count[j] = K(i, j - 1) - K(i, j)
            tail = sum(K(r, r) for r in range(i + 1, n))
            if fam == "B":
                A = K(i, n - 1) - K(i, n) * half
                B = K(i, n) * half - K(i, -n)
                count[-n] = floor(B)
                count[0] = (A + B) - (floor(A) + floor(B))
                count[n] = floor(A)
                count[i] = (n - i + 1) + (K(n, n) + 1) // 2 + tail
            elif fam == "C":
                count[-n] = K(i, n) - K(i, -n)
                count[n] = K(i, n - 1) - K(i, n)
                count[i] = (n - i + 1) + tail + K(n, n)
            else:
                up = max(0, K(i, n) - K(i, n + 1))
                down = max(0, K(i, n + 1) - K(i, n))
                count[-n] = K(i, n) - K(i, -n) - up
                count[-(n + 1)] = down
                count[n + 1] = up
                count[n] = K(i, n - 1) - K(i, n) - down
                C = K(n, n) + max(0, K(n, n + 1) - K(n, n))
                count[i] = C + (n - i + 1) + tail
        counts = {x: _whole(v) for x, v in count.items()}
        letters = sorted((x for x, v in counts.items() if x != i for _ in range(v)), key=spec.key)
        rows.append((i,) * counts[i] + tuple(letters))
    return Tableau(spec, tuple(rows))


def cliff_weight(spec: TypeSpec, c: CliffElement) -> Weight:
    total = Weight.zero(spec.rank)
    for i, p, j in _factors(c):
        total = total - spec.simple_root(j).scale(c.k[i - 1][p])
    return total
