"""Conceptual-neighborhood distances between relations and source profiles.

Two base relations are neighbors when a continuous deformation of two
regions moves directly between them; the induced graph has edge set
{DR-PO, PO-PP, PO-PPi, PP-EQ, PPi-EQ}.  Distances between a base relation
and a constraint, then a profile of constraints, are the min and sum
liftings of shortest-path length in that graph.  Everything here is exact
integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

from .rcc5 import EQ, PO, PP, DR, PPi, BaseRelation, QCN, Relation

__all__ = [
    "NEIGHBORHOOD_EDGES",
    "base_distance",
    "constraint_distance",
    "profile_distance",
    "DistanceTable",
    "distance_table",
    "render_distance_table",
]

#: Conceptual-neighborhood edges over the five base relations.
NEIGHBORHOOD_EDGES: frozenset[frozenset[BaseRelation]] = frozenset(
    frozenset(edge) for edge in ((DR, PO), (PO, PP), (PO, PPi), (PP, EQ), (PPi, EQ))
)


def _all_pairs_shortest_paths() -> dict[tuple[BaseRelation, BaseRelation], int]:
    neighbors: dict[BaseRelation, list[BaseRelation]] = {b: [] for b in BaseRelation}
    for edge in NEIGHBORHOOD_EDGES:
        a, b = sorted(edge, key=lambda r: r.index)
        neighbors[a].append(b)
        neighbors[b].append(a)
    dist: dict[tuple[BaseRelation, BaseRelation], int] = {}
    for start in BaseRelation:
        seen = {start: 0}
        frontier = [start]
        while frontier:
            nxt = []
            for node in frontier:
                for other in neighbors[node]:
                    if other not in seen:
                        seen[other] = seen[node] + 1
                        nxt.append(other)
            frontier = nxt
        for end, d in seen.items():
            dist[(start, end)] = d
    return dist


_DIST = _all_pairs_shortest_paths()


def base_distance(b1: BaseRelation, b2: BaseRelation) -> int:
    """Shortest-path length between two base relations in the graph."""
    return _DIST[(b1, b2)]


def constraint_distance(b: BaseRelation, phi: Relation) -> int:
    """Distance from a base relation to a constraint: min over members.

    An empty constraint yields 0 so the operator stays total; callers that
    build tables flag the affected pairs (a self-contradictory source
    imposes no preference).
    """
    if phi.is_empty:
        return 0
    return min(_DIST[(b, member)] for member in phi)


def profile_distance(b: BaseRelation, entries: Sequence[Relation]) -> int:
    """Distance from a base relation to a profile: sum over the entries."""
    return sum(constraint_distance(b, phi) for phi in entries)


def _canonical(u: str, v: str) -> tuple[str, str]:
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class DistanceTable:
    """Per-pair distances from every base relation to the profile.

    Columns are stored for the canonical orientation (lexicographically
    smaller variable first); `column` transposes PP and PPi when asked
    for the flipped orientation.
    """

    pairs: tuple[tuple[str, str], ...]
    columns: Mapping[tuple[str, str], tuple[int, int, int, int, int]]
    empty_entries: tuple[tuple[int, tuple[str, str]], ...]

    def distance(self, u: str, v: str, b: BaseRelation) -> int:
        return self.column(u, v)[b]

    def column(self, u: str, v: str) -> dict[BaseRelation, int]:
        """Distances for the ordered pair (u, v)."""
        key = _canonical(u, v)
        try:
            stored = self.columns[key]
        except KeyError:
            raise KeyError(f"no distance column for pair ({u!r}, {v!r})") from None
        if (u, v) == key:
            values = stored
        else:
            values = (stored[0], stored[1], stored[3], stored[2], stored[4])
        return {b: values[b.index] for b in BaseRelation}

    def minimal_bases(self, u: str, v: str) -> Relation:
        """The base relations at minimal distance to the pair's profile."""
        col = self.column(u, v)
        best = min(col.values())
        return Relation(b for b in BaseRelation if col[b] == best)


def distance_table(profile: Sequence[QCN]) -> DistanceTable:
    """The full distance table for a profile of networks.

    All networks must share the variable set; entries that are empty
    relations (conflicting single sources) contribute distance 0 and are
    flagged in `empty_entries`.
    """
    if not profile:
        raise ValueError("profile must contain at least one QCN")
    varset = set(profile[0].variables)
    for k, qcn in enumerate(profile):
        if set(qcn.variables) != varset:
            raise ValueError(
                f"variable-set mismatch: source {k} has {sorted(qcn.variables)}, "
                f"expected {sorted(varset)}"
            )
    names = sorted(varset)
    pairs = tuple((names[i], names[j]) for i in range(len(names)) for j in range(i + 1, len(names)))
    columns: dict[tuple[str, str], tuple[int, int, int, int, int]] = {}
    flagged: list[tuple[int, tuple[str, str]]] = []
    for u, v in pairs:
        entries = [qcn.constraint(u, v) for qcn in profile]
        for k, entry in enumerate(entries):
            if entry.is_empty:
                flagged.append((k, (u, v)))
        columns[(u, v)] = tuple(profile_distance(b, entries) for b in BaseRelation)
    return DistanceTable(pairs=pairs, columns=columns, empty_entries=tuple(flagged))


def _table_rows(table: DistanceTable) -> Iterator[tuple[str, ...]]:
    header = ("relation",) + tuple(f"{u}-{v}" for u, v in table.pairs)
    yield header
    for b in BaseRelation:
        yield (b.name,) + tuple(str(table.columns[pair][b.index]) for pair in table.pairs)


def render_distance_table(table: DistanceTable, fmt: str = "text") -> str:
    """Rows are relations, columns are canonical pairs; text or CSV."""
    rows = list(_table_rows(table))
    if fmt == "csv":
        return "\n".join(",".join(row) for row in rows) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown format: {fmt!r}")
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    lines = []
    for row in rows:
        cells = [row[0].ljust(widths[0])]
        cells += [cell.rjust(widths[i]) for i, cell in enumerate(row) if i > 0]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines) + "\n"
