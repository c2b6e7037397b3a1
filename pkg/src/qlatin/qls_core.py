"""Quantum Latin squares and row rectangles: the data model, exact
verification, and cardinality counting.

A grid of order n passes verification when all n*n cells are unit vectors
and every row and every column is pairwise orthogonal; n orthonormal
vectors in dimension n are automatically a basis. Cardinality counts
phase-equivalence classes of the cells, with a quadratic pairwise oracle
kept around as an independent cross-check.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .algebraic import ONE
from .vectors import (
    QVector,
    canonicalize,
    inner_product,
    phase_equal,
    phase_equal_by_inner,
    vector_from_json_dict,
    vector_to_json_dict,
)


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of an orthonormality check; only the first violation is kept."""

    ok: bool
    message: str | None = None
    # ("unit", row, col) or ("row"|"col", index, first_pos, second_pos)
    location: tuple | None = None
    duplicate_rows: tuple[tuple[int, int], ...] = ()


@dataclass(frozen=True)
class CardinalityReport:
    cardinality: int
    # class representatives in first-appearance (row-major) order
    classes: tuple[tuple[QVector, tuple[tuple[int, int], ...]], ...] = field(repr=False)


class QLSGrid(object):
    """n x n array of dim-n unit vectors; verification and counting are cached."""

    __slots__ = ("order", "cells", "provenance", "_verify_report", "_card_report")

    def __init__(self, cells: Sequence[Sequence[QVector]], provenance: str = ""):
        rows = tuple(tuple(r) for r in cells)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("cells must form a nonempty square array")
        for r in rows:
            for v in r:
                if v.dim != n:
                    raise ValueError(
                        f"cell dimension {v.dim} does not match grid order {n}"
                    )
        self.order = n
        self.cells = rows
        self.provenance = provenance
        self._verify_report = None
        self._card_report = None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QLSGrid):
            return NotImplemented
        return self.cells == other.cells

    def __hash__(self) -> int:
        return hash(self.cells)

    def __repr__(self) -> str:
        return f"QLSGrid(order={self.order}, provenance={self.provenance!r})"


class RowQLR(object):
    """m x n array of dim-n vectors where only rows must be orthonormal."""

    __slots__ = ("rows", "cols", "cells")

    def __init__(self, cells: Sequence[Sequence[QVector]]):
        grid = tuple(tuple(r) for r in cells)
        if not grid or not grid[0]:
            raise ValueError("cells must form a nonempty rectangle")
        m, n = len(grid), len(grid[0])
        if any(len(r) != n for r in grid):
            raise ValueError("all rows must have the same length")
        for r in grid:
            for v in r:
                if v.dim != n:
                    raise ValueError(
                        f"cell dimension {v.dim} does not match column count {n}"
                    )
        self.rows = m
        self.cols = n
        self.cells = grid

    def __repr__(self) -> str:
        return f"RowQLR({self.rows}x{self.cols})"


def _check_line(cells: Sequence[QVector], kind: str, index: int) -> VerificationReport | None:
    n = len(cells)
    for p in range(n):
        for q in range(p + 1, n):
            if not inner_product(cells[p], cells[q]).is_zero:
                return VerificationReport(
                    ok=False,
                    message=f"{kind} {index}: cells {p} and {q} are not orthogonal",
                    location=(kind, index, p, q),
                )
    return None


def _check_units(g: QLSGrid) -> VerificationReport | None:
    for r, row in enumerate(g.cells):
        for c, v in enumerate(row):
            if inner_product(v, v) != ONE:
                return VerificationReport(
                    ok=False,
                    message=f"cell ({r},{c}) is not a unit vector",
                    location=("unit", r, c),
                )
    return None


def verify_qls(g: QLSGrid, jobs: int = 1) -> VerificationReport:
    """Check every unit and orthogonality equation exactly; cached per grid."""
    if g._verify_report is not None:
        return g._verify_report
    bad = _check_units(g)
    if bad is None:
        n = g.order
        tasks = [(g.cells[r], "row", r) for r in range(n)]
        tasks += [(tuple(g.cells[r][c] for r in range(n)), "col", c) for c in range(n)]
        if jobs > 1:
            with ThreadPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(lambda t: _check_line(*t), tasks))
        else:
            results = [_check_line(*t) for t in tasks]
        bad = next((x for x in results if x is not None), None)
    report = bad if bad is not None else VerificationReport(ok=True)
    g._verify_report = report
    return report


def verify_row_qlr(r: RowQLR) -> VerificationReport:
    """Rows must be orthonormal; duplicate rows pass but are flagged."""
    for i, row in enumerate(r.cells):
        for j, v in enumerate(row):
            if inner_product(v, v) != ONE:
                return VerificationReport(
                    ok=False,
                    message=f"cell ({i},{j}) is not a unit vector",
                    location=("unit", i, j),
                )
        bad = _check_line(row, "row", i)
        if bad is not None:
            return bad
    dups = []
    for i in range(r.rows):
        for j in range(i + 1, r.rows):
            if all(phase_equal(a, b) for a, b in zip(r.cells[i], r.cells[j])):
                dups.append((i, j))
    return VerificationReport(ok=True, duplicate_rows=tuple(dups))


def cardinality(g: QLSGrid) -> CardinalityReport:
    """Count phase classes by canonical form; requires a verified grid."""
    if g._card_report is not None:
        return g._card_report
    if not verify_qls(g).ok:
        raise ValueError(f"grid is not a QLS: {verify_qls(g).message}")
    classes: dict[QVector, list[tuple[int, int]]] = {}
    for r, row in enumerate(g.cells):
        for c, v in enumerate(row):
            classes.setdefault(canonicalize(v), []).append((r, c))
    report = CardinalityReport(
        cardinality=len(classes),
        classes=tuple((rep, tuple(pos)) for rep, pos in classes.items()),
    )
    g._card_report = report
    return report


def cardinality_oracle(g: QLSGrid) -> int:
    """Independent count via pairwise <u,v>^2 = 1 and union-find; O(n^4)."""
    flat = [v for row in g.cells for v in row]
    parent = list(range(len(flat)))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i in range(len(flat)):
        for j in range(i + 1, len(flat)):
            if phase_equal_by_inner(flat[i], flat[j]):
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[rj] = ri
    return sum(1 for i, p in enumerate(parent) if find(i) == i)


def canonical_set(cells: Iterable[QVector]) -> frozenset[QVector]:
    """Canonical representatives of an arbitrary bag of vectors."""
    return frozenset(canonicalize(v) for v in cells)


def distinct_elements(g: QLSGrid) -> frozenset[QVector]:
    return frozenset(rep for rep, _ in cardinality(g).classes)


def count_new_elements(g: QLSGrid, baseline: Iterable[QVector]) -> int:
    """How many phase classes of g are absent from the (canonical) baseline."""
    base = baseline if isinstance(baseline, frozenset) else frozenset(baseline)
    return len(distinct_elements(g) - base)


def grid_to_json_dict(g: QLSGrid) -> dict:
    return {
        "order": g.order,
        "provenance": g.provenance,
        "cells": [[vector_to_json_dict(v) for v in row] for row in g.cells],
    }


def grid_from_json_dict(obj: dict) -> QLSGrid:
    if not isinstance(obj, dict) or set(obj) != {"order", "provenance", "cells"}:
        raise ValueError(
            "grid object must have exactly the keys 'order', 'provenance', 'cells'"
        )
    order, prov, cells = obj["order"], obj["provenance"], obj["cells"]
    if not isinstance(order, int) or order < 1:
        raise ValueError(f"bad grid order: {order!r}")
    if not isinstance(prov, str):
        raise ValueError("provenance must be a string")
    if not isinstance(cells, list) or len(cells) != order:
        raise ValueError("cells must be an order x order array")
    rows = []
    for row in cells:
        if not isinstance(row, list) or len(row) != order:
            raise ValueError("cells must be an order x order array")
        rows.append([vector_from_json_dict(v) for v in row])
    return QLSGrid(rows, provenance=prov)


def grid_to_json(g: QLSGrid, pretty: bool = False) -> str:
    """Deterministic serialization: fixed key order, no whitespace drift."""
    if pretty:
        return json.dumps(grid_to_json_dict(g), indent=2) + "\n"
    return json.dumps(grid_to_json_dict(g), separators=(",", ":")) + "\n"


def grid_from_json(text: str) -> QLSGrid:
    return grid_from_json_dict(json.loads(text))
