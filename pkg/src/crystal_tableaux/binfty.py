"""B(infinity) as marginally large tableaux.

A tableau with n rows is *large* when row i holds more i's than row i + 1
holds boxes, and *marginally large* when it holds exactly one more. Two
large tableaux are related when they agree on the number of j-boxes,
j > i, in every row i; each class has one marginally large member, which is
the representative used throughout.
"""
from __future__ import annotations

from collections import Counter

from .lie_types import LOWERING, RAISING, TypeSpec, Weight
from .tableau import (
    CrystalGraph,
    Tableau,
    TableauError,
    apply_plain_at,
    bfs,
    i_signature,
    reading_positions,
    shape_for_weight,
    shape_weight,
    tableau_weight,
)


class RepresentativeError(ValueError):
    pass


def _excesses(T: Tableau) -> list[int] | None:
    n = T.spec.n
    if len(T.rows) != n:
        return None
    out = []
    for i in range(1, n + 1):
        below = len(T.rows[i]) if i < n else 0
        out.append(T.rows[i - 1].count(i) - below)
    return out


def is_large(T: Tableau) -> bool:
    ex = _excesses(T)
    return ex is not None and all(e > 0 for e in ex)


def is_marginally_large(T: Tableau) -> bool:
    ex = _excesses(T)
    return ex is not None and all(e == 1 for e in ex)


def representative_violation(spec: TypeSpec, T: Tableau) -> str | None:
    """First reason ``T`` is not a valid representative, or None."""
    if T.spec != spec:
        return f"tableau belongs to {T.spec}, not {spec}"
    if not is_marginally_large(T):
        return "not marginally large"
    key = spec.key
    n = spec.n
    for i, row in enumerate(T.rows, start=1):
        if row[0] != i:
            return f"row {i} does not start with {i}"
        for a, b in zip(row, row[1:]):
            if key(a) > key(b):
                return f"row {i} is not weakly increasing ({a} before {b})"
        fam = spec.family
        if fam in "BCD" and any(key(x) > key(-i) for x in row):
            return f"row {i} has an entry beyond -{i}"
        if fam == "B" and row.count(0) > 1:
            return f"row {i} has more than one 0"
        if fam == "D" and n + 1 in row and -(n + 1) in row:
            return f"row {i} holds both {n + 1} and -{n + 1}"
        if fam == "G":
            if i == 2 and any(x not in (2, 3) for x in row):
                return "row 2 may only hold 2 and 3"
            if i == 1 and row.count(0) > 1:
                return "row 1 has more than one 0"
    return None


def is_valid_representative(spec: TypeSpec, T: Tableau) -> bool:
    return representative_violation(spec, T) is None


def _require(spec: TypeSpec, T: Tableau) -> None:
    problem = representative_violation(spec, T)
    if problem:
        raise RepresentativeError(f"{T.key()}: {problem}")


def t_infinity(spec: TypeSpec) -> Tableau:
    n = spec.n
    return Tableau(spec, tuple((i,) * (n - i + 1) for i in range(1, n + 1)))


def _nontrivial(T: Tableau, i: int) -> Counter:
    return Counter(x for x in T.rows[i - 1] if x != i)


def related(T1: Tableau, T2: Tableau) -> bool:
    if T1.spec != T2.spec:
        raise TableauError(f"cannot compare tableaux of {T1.spec} and {T2.spec}")
    if not (is_large(T1) and is_large(T2)):
        raise TableauError("relatedness is only defined for large tableaux")
    return all(_nontrivial(T1, i) == _nontrivial(T2, i) for i in range(1, T1.spec.n + 1))


def _rebuild(T: Tableau, counts: list[int]) -> Tableau:
    key = T.spec.key
    rows = []
    for i, row in enumerate(T.rows, start=1):
        rest = sorted((x for x in row if x != i), key=key)
        rows.append((i,) * counts[i - 1] + tuple(rest))
    return Tableau(T.spec, tuple(rows))


def canonicalize(T: Tableau) -> Tableau:
    """The marginally large tableau related to the large tableau ``T``."""
    if not is_large(T):
        raise TableauError(f"{T.key()} is not large")
    n = T.spec.n
    counts = [0] * n
    below = 0
    for i in range(n, 0, -1):
        counts[i - 1] = below + 1
        below = counts[i - 1] + sum(1 for x in T.rows[i - 1] if x != i)
    return _rebuild(T, counts)


def pad(T: Tableau, lam: Weight, strict: bool = True) -> Tableau:
    """Refill the i-letters of each row i so that the shape becomes that of ``lam``.

    With ``strict`` the result must be large. Otherwise each row only needs
    room for its other letters, which is all the projection to B(lam) needs.
    """
    spec = T.spec
    shape = shape_for_weight(spec, lam)
    if len(shape) != spec.n or len(T.rows) != spec.n:
        raise TableauError(f"shape {shape} of {lam.coords} does not have {spec.n} rows")
    counts = []
    for i, length in enumerate(shape, start=1):
        c = length - sum(1 for x in T.rows[i - 1] if x != i)
        below = shape[i] if i < spec.n else 0
        if c < 0 or (strict and c <= below):
            raise TableauError(
                f"{lam.coords} is too small: row {i} would hold {c} letters {i} "
                f"over a row of length {below}"
            )
        counts.append(c)
    return _rebuild(T, counts)


def _column_height(spec: TypeSpec, i: int) -> int:
    # in type D the index n+1 moves the letter n, so it works on row n
    return min(i, spec.n)


def binfty_lower(spec: TypeSpec, i: int, T: Tableau) -> Tableau:
    _require(spec, T)
    out = apply_plain_at(T, i, LOWERING)
    # a large tableau always has a surviving 0 in every i-signature
    assert out is not None, (T.key(), i)
    U, (r, c) = out
    if is_large(U):
        return U
    h = _column_height(spec, i)
    assert r == h - 1, (T.key(), i, r)
    rows = list(U.rows)
    for k in range(h):
        rows[k] = rows[k][:c] + (k + 1,) + rows[k][c:]
    return Tableau(spec, tuple(rows))


def binfty_raise(spec: TypeSpec, i: int, T: Tableau) -> Tableau | None:
    _require(spec, T)
    out = apply_plain_at(T, i, RAISING)
    if out is None:
        return None
    U, (r, c) = out
    if is_marginally_large(U):
        return U
    h = _column_height(spec, i)
    assert is_large(U) and r == h - 1, (T.key(), i)
    rows = list(U.rows)
    for k in range(h):
        assert rows[k][c] == k + 1
        rows[k] = rows[k][:c] + rows[k][c + 1:]
    return Tableau(spec, tuple(rows))


def binfty_weight(T: Tableau) -> Weight:
    return tableau_weight(T) - shape_weight(T.spec, T.shape)


def binfty_stats(spec: TypeSpec, T: Tableau) -> tuple[Weight, tuple[int, ...], tuple[int, ...]]:
    wt = binfty_weight(T)
    positions = reading_positions(T.rows)
    word = [T.rows[r][c] for r, c in positions]
    eps = tuple(i_signature(spec, i, word).ones for i in spec.index_set)
    # phi may be negative here
    phi = tuple(e + wt[i] for e, i in zip(eps, spec.index_set))
    return wt, eps, phi


def bfs_binfty(spec: TypeSpec, depth: int) -> CrystalGraph:
    if depth is None or depth < 0:
        raise ValueError("B(infinity) is infinite; give a nonnegative depth")
    return bfs(
        spec,
        t_infinity(spec),
        lambda i, T: binfty_lower(spec, i, T),
        binfty_weight,
        Tableau.key,
        depth,
    )
