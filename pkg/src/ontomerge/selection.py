"""Choosing a representative scenario by counting ABox conflicts.

Each source contributes, per scenario constraint, the number of its
(closed) individuals that contradict the constraint: members of the
would-be subset missing from the superset for {PP,EQ}-like labels, the
mirror image for {PPi,EQ}-like labels, and common members for {DR}.  A
{PO} label counts how unbalanced those three figures are (max minus
min).  The representative scenario minimizes the grand total, with a
lexicographic tie-break on its labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .ontology import ClosedABox, Ontology, deductive_closure
from .rcc5 import EQ, PO, PP, DR, PPi, Relation, Scenario

__all__ = [
    "PairConflicts",
    "pair_conflicts",
    "nb_conflicts",
    "scenario_distance",
    "ScenarioScore",
    "ConflictReport",
    "select_scenario",
]

_SUBSET_LIKE = Relation([PP, EQ])
_SUPERSET_LIKE = Relation([PPi, EQ])
_DISJOINT = Relation([DR])
_OVERLAP = Relation([PO])


@dataclass(frozen=True)
class PairConflicts:
    """Conflict counts of one source against one ordered concept pair."""

    subset_witnesses: frozenset[str]
    superset_witnesses: frozenset[str]
    common_witnesses: frozenset[str]

    @property
    def subset_count(self) -> int:
        return len(self.subset_witnesses)

    @property
    def superset_count(self) -> int:
        return len(self.superset_witnesses)

    @property
    def common_count(self) -> int:
        return len(self.common_witnesses)

    @property
    def overlap_count(self) -> int:
        counts = (self.subset_count, self.superset_count, self.common_count)
        return max(counts) - min(counts)

    def for_label(self, label: Relation) -> int:
        if not label.is_empty and label <= _SUBSET_LIKE:
            return self.subset_count
        if not label.is_empty and label <= _SUPERSET_LIKE:
            return self.superset_count
        if label == _DISJOINT:
            return self.common_count
        if label == _OVERLAP:
            return self.overlap_count
        raise ValueError(f"not a scenario label: {label!r}")

    def to_json_dict(self) -> dict:
        return {
            "subset_like": sorted(self.subset_witnesses),
            "superset_like": sorted(self.superset_witnesses),
            "disjoint": sorted(self.common_witnesses),
            "overlap_count": self.overlap_count,
        }


def pair_conflicts(closed: ClosedABox, first: str, second: str) -> PairConflicts:
    """Witness sets of one closed ABox on the ordered pair (first, second)."""
    in_first = closed.instances_of(first)
    in_second = closed.instances_of(second)
    return PairConflicts(
        subset_witnesses=in_first - in_second,
        superset_witnesses=in_second - in_first,
        common_witnesses=in_first & in_second,
    )


def nb_conflicts(closed: ClosedABox, pair: tuple[str, str], label: Relation) -> int:
    """Individuals of one source conflicting with a scenario label."""
    return pair_conflicts(closed, *pair).for_label(label)


def _canonical_pairs(s: Scenario) -> list[tuple[str, str]]:
    return sorted(tuple(sorted(pair)) for pair in s.pairs())


def scenario_distance(
    s: Scenario,
    profile: Sequence[Ontology],
    closures: Sequence[ClosedABox] | None = None,
) -> int:
    """Total conflicts of all sources against all scenario constraints.

    Every unordered pair counts once, in canonical (lexicographic)
    orientation; each source is closed against its own TBox.
    """
    if closures is None:
        closures = [deductive_closure(o) for o in profile]
    expected = set(s.variables)
    union: set[str] = set()
    for o in profile:
        union.update(o.concepts)
    if union != expected:
        raise ValueError(
            f"signature mismatch: scenario has {sorted(expected)}, sources cover {sorted(union)}"
        )
    total = 0
    for u, v in _canonical_pairs(s):
        label = s.constraint(u, v)
        for closed in closures:
            total += nb_conflicts(closed, (u, v), label)
    return total


@dataclass(frozen=True)
class ScenarioScore:
    scenario: Scenario
    distance: int
    per_source: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {
            "distance": self.distance,
            "per_source": list(self.per_source),
            "qcn": self.scenario.to_json_dict(),
        }


@dataclass(frozen=True)
class ConflictReport:
    """Scores for every candidate plus the per-(source, pair) counts."""

    counts: Mapping[tuple[int, tuple[str, str]], PairConflicts]
    scores: tuple[ScenarioScore, ...]
    selected_index: int
    tied_indices: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {
            "scenarios": [
                {"index": i + 1, **score.to_json_dict()} for i, score in enumerate(self.scores)
            ],
            "selected": self.selected_index + 1,
            "tied": [i + 1 for i in self.tied_indices],
            "pair_counts": [
                {"source": source + 1, "pair": list(pair), **pc.to_json_dict()}
                for (source, pair), pc in sorted(self.counts.items())
            ],
        }


def _scenario_sort_key(s: Scenario) -> tuple:
    return tuple(s.constraint(u, v).sort_key() for u, v in s.pairs())


def select_scenario(
    candidates: Sequence[Scenario], profile: Sequence[Ontology]
) -> tuple[Scenario, ConflictReport]:
    """The candidate with minimal distance to the profile.

    Ties break by lexicographic comparison of the constraint labels in
    pair order; the report lists every tied candidate.
    """
    if not candidates:
        raise ValueError("no candidate scenarios")
    union: set[str] = set()
    for o in profile:
        union.update(o.concepts)
    if union != set(candidates[0].variables):
        raise ValueError(
            f"signature mismatch: scenarios have {sorted(candidates[0].variables)}, "
            f"sources cover {sorted(union)}"
        )
    closures = [deductive_closure(o) for o in profile]

    counts: dict[tuple[int, tuple[str, str]], PairConflicts] = {}
    pairs = _canonical_pairs(candidates[0])
    for source_index, closed in enumerate(closures):
        for pair in pairs:
            counts[(source_index, pair)] = pair_conflicts(closed, *pair)

    scores = []
    for s in candidates:
        per_source = []
        for source_index in range(len(closures)):
            subtotal = 0
            for u, v in _canonical_pairs(s):
                subtotal += counts[(source_index, (u, v))].for_label(s.constraint(u, v))
            per_source.append(subtotal)
        scores.append(
            ScenarioScore(scenario=s, distance=sum(per_source), per_source=tuple(per_source))
        )

    best = min(score.distance for score in scores)
    tied = tuple(i for i, score in enumerate(scores) if score.distance == best)
    selected = min(tied, key=lambda i: _scenario_sort_key(candidates[i]))
    report = ConflictReport(
        counts=counts,
        scores=tuple(scores),
        selected_index=selected,
        tied_indices=tied if len(tied) > 1 else (),
    )
    return candidates[selected], report
