"""Invariant suites shared by the CLI ``verify`` subcommand."""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field

from .binfty import (
    bfs_binfty,
    binfty_lower,
    binfty_raise,
    binfty_stats,
    binfty_weight,
    is_large,
    is_valid_representative,
    pad,
    t_infinity,
)
from .cliff import (
    CliffError,
    cliff_step,
    cliff_to_tableau,
    cliff_weight,
    tableau_to_cliff,
    validate_cliff,
)
from .lie_types import LOWERING, RAISING, TypeSpec, Weight, make_type_spec
from .serialization import load_golden, parse_letter
from .tableau import Tableau, apply_plain, bfs_highest_weight

SUITES = ("figures", "inverse", "counts", "projection", "cliff-morphism")


@dataclass
class Report:
    suite: str
    target: str
    depth: int | None
    checks: int = 0
    failures: list[str] = field(default_factory=list)

    def check(self, ok: bool, message: str) -> None:
        self.checks += 1
        if not ok:
            self.failures.append(message)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> str:
        return json.dumps(
            {
                "suite": self.suite,
                "target": self.target,
                "depth": self.depth,
                "checks": self.checks,
                "failed": len(self.failures),
                "passed": self.passed,
                "failures": self.failures[:50],
            }
        )


def stable_weight(spec: TypeSpec, value: int) -> Weight:
    """All coordinates ``value``; type B rounds its last coordinate up to even."""
    coords = [value] * spec.rank
    if spec.family == "B":
        coords[-1] += coords[-1] % 2
    return Weight(tuple(coords))


def _rows(spec: TypeSpec, payload) -> Tableau:
    return Tableau(spec, tuple(tuple(parse_letter(x, "golden") for x in row) for row in payload))


def apply_word(spec: TypeSpec, T: Tableau, word) -> Tableau | None:
    for token in word:
        i = int(token[1:])
        T = binfty_lower(spec, i, T) if token[0] == "f" else binfty_raise(spec, i, T)
        if T is None:
            return None
    return T


def figures_suite(family: str | None = None, rank: int | None = None) -> Report:
    data = load_golden()
    report = Report("figures", family or "all", None)
    for group in data["large_samples"]:
        if family and (group["family"], group["rank"]) != (family, rank or group["rank"]):
            continue
        spec = make_type_spec(group["family"], group["rank"])
        for rows in group["large"]:
            T = _rows(spec, rows)
            report.check(is_large(T), f"large samples {spec}: {T.key()} should be large")
        for rows in group["not_large"]:
            T = _rows(spec, rows)
            report.check(not is_large(T), f"large samples {spec}: {T.key()} should not be large")
    for name in ("b3_depth2", "g2_depth3"):
        fig = data[name]
        if family and (fig["family"], fig["rank"]) != (family, rank or fig["rank"]):
            continue
        spec = make_type_spec(fig["family"], fig["rank"])
        graph = bfs_binfty(spec, fig["depth"])
        expected_layers: dict[int, set] = {}
        for entry in fig["entries"]:
            want = _rows(spec, entry["rows"])
            got = apply_word(spec, t_infinity(spec), entry["word"])
            label = ",".join(entry["word"]) or "(start)"
            report.check(got == want, f"{name} {label}: got {got and got.key()}, want {want.key()}")
            expected_layers.setdefault(len(entry["word"]), set()).add(want.key())
        for d, keys in expected_layers.items():
            layer = {node.key for node in graph.layer(d)}
            report.check(layer == keys, f"{name} depth {d}: layer {sorted(layer)} != golden {sorted(keys)}")
        top_labels = sorted(i for src, i, _ in graph.edges if src == 0)
        report.check(top_labels == list(spec.index_set), f"{name}: top edge labels {top_labels}")
    return report


def inverse_suite(spec: TypeSpec, depth: int) -> Report:
    report = Report("inverse", str(spec), depth)
    graph = bfs_binfty(spec, depth)
    for node in graph.nodes:
        T = node.element
        wt, eps, phi = binfty_stats(spec, T)
        for i in spec.index_set:
            report.check(phi[i - 1] - eps[i - 1] == wt[i], f"{T.key()}: phi-eps != wt at {i}")
            down = binfty_lower(spec, i, T)
            report.check(down is not None, f"{T.key()}: f{i} vanished")
            if down is None:
                continue
            report.check(is_valid_representative(spec, down), f"{T.key()}: f{i} left the representatives")
            report.check(binfty_raise(spec, i, down) == T, f"{T.key()}: e{i} f{i} != id")
            report.check(
                binfty_weight(down) == wt - spec.simple_root(i), f"{T.key()}: wt(f{i}) != wt - alpha_{i}"
            )
            up = binfty_raise(spec, i, T)
            report.check((up is None) == (eps[i - 1] == 0), f"{T.key()}: e{i} vs eps_{i} mismatch")
            if up is not None:
                report.check(is_valid_representative(spec, up), f"{T.key()}: e{i} left the representatives")
                report.check(binfty_lower(spec, i, up) == T, f"{T.key()}: f{i} e{i} != id")
    return report


def count_suite(spec: TypeSpec, depth: int, lam: Weight | None = None) -> Report:
    """Weight multiplicities of B(inf) near the top against those of B(lam) near lam."""
    lam = lam or stable_weight(spec, depth + 1)
    report = Report("counts", str(spec), depth)
    inf = Counter(node.weight for node in bfs_binfty(spec, depth).nodes)
    hw = Counter(node.weight - lam for node in bfs_highest_weight(spec, lam, depth).nodes)
    for w in sorted(set(inf) | set(hw), key=lambda w: w.coords):
        report.check(inf[w] == hw[w], f"weight {w.coords}: B(inf) has {inf[w]}, B{lam.coords} has {hw[w]}")
    return report


def projection_suite(spec: TypeSpec, depth: int, lam: Weight | None = None) -> Report:
    """Lowering commutes with padding to shape lam."""
    lam = lam or stable_weight(spec, depth + 1)
    report = Report("projection", str(spec), depth)
    for node in bfs_binfty(spec, depth).nodes:
        T = node.element
        padded = pad(T, lam)
        for i in spec.index_set:
            lhs = apply_plain(spec, i, padded, LOWERING)
            rhs = pad(binfty_lower(spec, i, T), lam, strict=False)
            report.check(lhs == rhs, f"{T.key()}: f{i} does not commute with padding to {lam.coords}")
    return report


def cliff_suite(spec: TypeSpec, depth: int) -> Report:
    report = Report("cliff-morphism", str(spec), depth)
    for node in bfs_binfty(spec, depth).nodes:
        T = node.element
        c = tableau_to_cliff(spec, T)
        report.check(validate_cliff(spec, c), f"{T.key()}: image {c.key()} violates the chains")
        report.check(cliff_to_tableau(spec, c) == T, f"{T.key()}: round trip through {c.key()} fails")
        report.check(cliff_weight(spec, c) == node.weight, f"{T.key()}: weight mismatch")
        for i in spec.index_set:
            try:
                down = cliff_step(spec, i, c, LOWERING)
                up = cliff_step(spec, i, c, RAISING)
            except CliffError as exc:
                report.check(False, f"{T.key()}: {exc}")
                continue
            report.check(
                tableau_to_cliff(spec, binfty_lower(spec, i, T)) == down,
                f"{T.key()}: f{i} does not commute with the Cliff map",
            )
            raised = binfty_raise(spec, i, T)
            want = None if raised is None else tableau_to_cliff(spec, raised)
            report.check(want == up, f"{T.key()}: e{i} does not commute with the Cliff map")
            if down is not None:
                report.check(cliff_to_tableau(spec, down) == binfty_lower(spec, i, T),
                             f"{c.key()}: inverse map disagrees after f{i}")
    return report


def run_suite(name: str, family: str | None, rank: int | None, depth: int) -> Report:
    if name == "figures":
        return figures_suite(family, rank)
    if family is None or rank is None:
        raise ValueError(f"suite {name} needs --family and --rank")
    spec = make_type_spec(family, rank)
    if name == "inverse":
        return inverse_suite(spec, depth)
    if name == "counts":
        return count_suite(spec, depth)
    if name == "projection":
        return projection_suite(spec, depth)
    if name == "cliff-morphism":
        return cliff_suite(spec, depth)
    raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
