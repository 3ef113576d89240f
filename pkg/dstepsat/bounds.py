#!/usr/bin/env python3
"""
Bounds on Delta(d, n), the maximal diameter of a d-polytope with n facets.

A finite grid (d = 2..d_max, slack n - d = 1..slack_max) is seeded with the
closed formulas for d <= 3, the simplex, the literature values and any
computed results, then closed under the known recursions until nothing
tightens. Intervals only ever shrink; lo > hi aborts.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .data.known_bounds import COMPUTED_BOUNDS, LITERATURE_BOUNDS
from .errors import BoundsContradiction

Cell = tuple[int, int]


@dataclass
class Interval:
    lo: int = 1
    hi: Optional[int] = None
    lo_source: str = "trivial"
    hi_source: str = "none"

    @property
    def exact(self) -> bool:
        return self.hi is not None and self.lo == self.hi

    def display(self) -> str:
        if self.hi is None:
            return f">={self.lo}"
        if self.lo == self.hi:
            return str(self.lo)
        if self.hi - self.lo == 1:
            return f"{{{self.lo},{self.hi}}}"
        return f"[{self.lo},{self.hi}]"

    def to_dict(self) -> dict:
        return {"lo": self.lo, "hi": self.hi, "display": self.display(),
                "lo_source": self.lo_source, "hi_source": self.hi_source}


class BoundsTable:
    def __init__(self, d_max: int = 7, slack_max: int = 7):
        self.d_max = d_max
        self.slack_max = slack_max
        self.cells: dict[Cell, Interval] = {
            (d, d + s): Interval() for d in range(2, d_max + 1) for s in range(1, slack_max + 1)
        }

    def __contains__(self, cell: Cell) -> bool:
        return cell in self.cells

    def get(self, d: int, n: int) -> Optional[Interval]:
        return self.cells.get((d, n))

    def lower(self, d: int, n: int) -> Optional[int]:
        cell = self.cells.get((d, n))
        return cell.lo if cell else None

    def upper(self, d: int, n: int) -> Optional[int]:
        cell = self.cells.get((d, n))
        return cell.hi if cell else None

    def tighten_lower(self, d: int, n: int, value: Optional[int], source: str) -> bool:
        cell = self.cells.get((d, n))
        if cell is None or value is None or value <= cell.lo:
            return False
        cell.lo, cell.lo_source = value, source
        self._check((d, n))
        return True

    def tighten_upper(self, d: int, n: int, value: Optional[int], source: str) -> bool:
        cell = self.cells.get((d, n))
        if cell is None or value is None or (cell.hi is not None and value >= cell.hi):
            return False
        cell.hi, cell.hi_source = value, source
        self._check((d, n))
        return True

    def _check(self, key: Cell):
        cell = self.cells[key]
        if cell.hi is not None and cell.lo > cell.hi:
            raise BoundsContradiction(key, cell.lo, cell.hi, [cell.lo_source, cell.hi_source])

    def differing(self, other: "BoundsTable") -> list[Cell]:
        """Cells whose interval differs from the same cell in `other`."""
        out = []
        for key, cell in self.cells.items():
            theirs = other.cells.get(key)
            if theirs is None or (cell.lo, cell.hi) != (theirs.lo, theirs.hi):
                out.append(key)
        return sorted(out)

    def render(self, d_values: Optional[Sequence[int]] = None, slack_values: Optional[Sequence[int]] = None,
               highlight: Iterable[Cell] = ()) -> str:
        """Text table, rows d and columns n - d; highlighted cells carry a '*'."""
        d_values = list(d_values or range(2, self.d_max + 1))
        slack_values = list(slack_values or range(1, self.slack_max + 1))
        highlight = set(highlight)
        header = ["d \\ n-d"] + [str(s) for s in slack_values]
        rows = [header]
        for d in d_values:
            row = [str(d)]
            for s in slack_values:
                cell = self.cells.get((d, d + s))
                text = cell.display() if cell else "-"
                if (d, d + s) in highlight:
                    text += "*"
                row.append(text)
            rows.append(row)
        widths = [max(len(r[i]) for r in rows) for i in range(len(header))]
        return "\n".join("  ".join(v.rjust(w) for v, w in zip(r, widths)) for r in rows)

    def to_dict(self) -> dict:
        return {f"{d},{n}": cell.to_dict() for (d, n), cell in sorted(self.cells.items())}


# ---------------------------------------------------------------------------
# Propagation
# ---------------------------------------------------------------------------

def _seed(table: BoundsTable, facts: Iterable[dict]):
    for (d, n), _ in list(table.cells.items()):
        if n == d + 1:
            table.tighten_upper(d, n, 1, "simplex")
        if d == 2:
            table.tighten_lower(d, n, n // 2, "polygon: floor(n/2)")
            table.tighten_upper(d, n, n // 2, "polygon: floor(n/2)")
        if d == 3:
            value = (2 * n) // 3 - 1
            table.tighten_lower(d, n, value, "d = 3: floor(2n/3) - 1")
            table.tighten_upper(d, n, value, "d = 3: floor(2n/3) - 1")
    for fact in facts:
        table.tighten_lower(fact["d"], fact["n"], fact.get("lo"), fact["source"])
        table.tighten_upper(fact["d"], fact["n"], fact.get("hi"), fact["source"])


def _apply_rules(table: BoundsTable, d: int, n: int) -> bool:
    changed = False
    k = n - 2 * d
    if d >= 3 and 0 <= k <= 3:
        below = table.upper(d - 1, n - 1)
        if below is not None:
            changed |= table.tighten_upper(
                d, n, below + k // 2 + 1, f"Delta({d - 1},{n - 1}) + floor({k}/2) + 1")

    s = n - d
    if s >= 2 and (s, 2 * s) in table and (s, 2 * s) != (d, n):
        ref = f"Delta({s},{2 * s})"
        changed |= table.tighten_upper(d, n, table.upper(s, 2 * s), f"<= {ref}")
        if n <= 2 * d:
            changed |= table.tighten_lower(d, n, table.lower(s, 2 * s), f"= {ref}")
            changed |= table.tighten_lower(s, 2 * s, table.lower(d, n), f"= Delta({d},{n})")
            changed |= table.tighten_upper(s, 2 * s, table.upper(d, n), f"= Delta({d},{n})")

    if d >= 7 and n > d:
        changed |= table.tighten_lower(d, n, n - d, "n - d for d >= 7")
    return changed


def propagate(computed: Iterable[dict] = (), d_max: int = 7, slack_max: int = 7,
              include_literature: bool = True) -> BoundsTable:
    """Seed the grid and apply the recursions to a fixpoint."""
    table = BoundsTable(d_max, slack_max)
    facts = list(LITERATURE_BOUNDS) if include_literature else []
    _seed(table, facts + list(computed))
    changed = True
    while changed:
        changed = False
        for d, n in sorted(table.cells):
            changed |= _apply_rules(table, d, n)
    return table


def known_table(d_max: int = 7, slack_max: int = 7) -> BoundsTable:
    """Bounds from the literature alone."""
    return propagate((), d_max, slack_max)


def improved_table(d_max: int = 7, slack_max: int = 7) -> BoundsTable:
    """Bounds after adding Delta(6,12) <= 6 and Delta(4,11) <= 6."""
    return propagate(COMPUTED_BOUNDS, d_max, slack_max)


def parse_fact(text: str, source: str = "user") -> dict:
    """'d,n=v', 'd,n<=v' or 'd,n>=v' into a fact dict."""
    for op in ("<=", ">=", "="):
        if op in text:
            cell, value = text.split(op, 1)
            d, n = (int(x) for x in cell.split(","))
            v = int(value)
            lo = v if op in ("=", ">=") else None
            hi = v if op in ("=", "<=") else None
            return {"d": d, "n": n, "lo": lo, "hi": hi, "source": f"{source}: Delta({d},{n}) {op} {v}"}
    raise ValueError(f"cannot parse bound {text!r} (expected e.g. '6,12<=6')")
