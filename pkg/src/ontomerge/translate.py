"""Two-way translation between ontologies and constraint networks.

Forward: one region variable per concept name; each asserted subsumption
narrows its pair to {PP,EQ}, each asserted disjointness to {DR}; several
axioms on one pair intersect, and an empty intersection is kept and
reported rather than erased.  Role-form axioms carry no pair constraint
and are reported as dropped.

Backward: each quasi-atomic scenario label becomes a small axiom (and,
for strict labels, assertion) block over the pair, with fresh witness
concepts and individuals drawn from a deterministic pool.

The flatten/inflate maps connect finite interpretations of the ontology
with set assignments of the network and power the faithfulness tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .ontology import (
    Assertion,
    Axiom,
    ConceptAssertion,
    Disjointness,
    Interpretation,
    Ontology,
    Statement,
    Subsumption,
    statement_sort_key,
)
from .rcc5 import (
    EQ,
    PO,
    PP,
    DR,
    PPi,
    QCN,
    Relation,
    Scenario,
    SetInterpretation,
    UNIVERSAL,
)

__all__ = [
    "ForwardTranslation",
    "forward",
    "FreshNamePool",
    "backward",
    "NotFulfillingError",
    "flatten",
    "inflate",
]

_SUBSUMPTION_LABEL = Relation([PP, EQ])
_DISJOINTNESS_LABEL = Relation([DR])


@dataclass(frozen=True)
class ForwardTranslation:
    """A translated network plus notes about what did not translate."""

    qcn: QCN
    dropped_role_axioms: tuple[Axiom, ...]
    degenerate_axioms: tuple[Axiom, ...]
    conflicting_pairs: tuple[tuple[str, str], ...]


def forward(o: Ontology, variables: Sequence[str] | None = None) -> ForwardTranslation:
    """Translate the asserted TBox into a constraint network.

    Variables default to the ontology's concept names in first-occurrence
    order; passing a superset embeds the network into a shared variable
    space.  Pairs with an empty intersection (a source contradicting
    itself on one pair) are kept and listed in `conflicting_pairs`.
    """
    if variables is None:
        var_list = o.concepts
    else:
        var_list = tuple(variables)
        missing = set(o.concepts) - set(var_list)
        if missing:
            raise ValueError(f"variables must cover the signature; missing {sorted(missing)}")
    masks: dict[tuple[str, str], Relation] = {}
    dropped: list[Axiom] = []
    degenerate: list[Axiom] = []
    for axiom in sorted(o.tbox, key=statement_sort_key):
        if isinstance(axiom, Subsumption):
            if axiom.sub == axiom.sup:
                continue
            pair, label = (axiom.sub, axiom.sup), _SUBSUMPTION_LABEL
        elif isinstance(axiom, Disjointness):
            if axiom.first == axiom.second:
                degenerate.append(axiom)
                continue
            pair, label = (axiom.first, axiom.second), _DISJOINTNESS_LABEL
        else:
            dropped.append(axiom)
            continue
        u, v = pair
        if v < u:
            u, v, label = v, u, label.converse()
        key = (u, v)
        masks[key] = masks.get(key, UNIVERSAL) & label
    qcn = QCN(var_list, masks)
    conflicts = tuple(sorted(pair for pair, rel in masks.items() if rel.is_empty))
    return ForwardTranslation(
        qcn=qcn,
        dropped_role_axioms=tuple(dropped),
        degenerate_axioms=tuple(degenerate),
        conflicting_pairs=conflicts,
    )


class FreshNamePool:
    """Deterministic fresh names for backward translation.

    Witness concepts are ``Sub<base>`` (numeric suffix on collision),
    overlap witnesses ``Int<left><right>``, individuals ``x_<k>`` with a
    global counter.  Generated names never collide with the reserved set
    or with each other.
    """

    def __init__(self, reserved: Iterable[str] = ()) -> None:
        self._used = set(reserved)
        self._counter = 0

    def _claim(self, base: str) -> str:
        if base not in self._used:
            self._used.add(base)
            return base
        k = 2
        while f"{base}{k}" in self._used:
            k += 1
        name = f"{base}{k}"
        self._used.add(name)
        return name

    def sub_concept(self, base: str) -> str:
        return self._claim(f"Sub{base}")

    def overlap_concept(self, left: str, right: str) -> str:
        return self._claim(f"Int{left}{right}")

    def individual(self) -> str:
        while True:
            self._counter += 1
            name = f"x_{self._counter}"
            if name not in self._used:
                self._used.add(name)
                return name


def _proper_part_block(
    part: str, whole: str, pool: FreshNamePool
) -> tuple[list[Axiom], list[Assertion]]:
    """part is strictly inside whole: subsumption plus a witness of strictness."""
    outside = pool.sub_concept(whole)
    d = pool.individual()
    c = pool.individual()
    axioms: list[Axiom] = [
        Subsumption(part, whole),
        Subsumption(outside, whole),
        Disjointness(part, outside),
    ]
    assertions: list[Assertion] = [
        ConceptAssertion(outside, d),
        ConceptAssertion(part, c),
        ConceptAssertion(whole, d),
        ConceptAssertion(whole, c),
    ]
    return axioms, assertions


def _overlap_block(u: str, v: str, pool: FreshNamePool) -> tuple[list[Axiom], list[Assertion]]:
    """u and v overlap partially: witnesses for the middle and both sides."""
    middle = pool.overlap_concept(u, v)
    u_only = pool.sub_concept(u)
    v_only = pool.sub_concept(v)
    a = pool.individual()
    c = pool.individual()
    d = pool.individual()
    axioms: list[Axiom] = [
        Subsumption(middle, u),
        Subsumption(middle, v),
        Subsumption(u_only, u),
        Disjointness(u_only, v),
        Subsumption(v_only, v),
        Disjointness(v_only, u),
    ]
    assertions: list[Assertion] = [
        ConceptAssertion(middle, a),
        ConceptAssertion(u, c),
        ConceptAssertion(u, a),
        ConceptAssertion(v, d),
        ConceptAssertion(v, a),
        ConceptAssertion(u_only, c),
        ConceptAssertion(v_only, d),
    ]
    return axioms, assertions


def backward(s: Scenario, pool: FreshNamePool | None = None) -> Ontology:
    """Translate a scenario back into a strict-normal-form ontology.

    Pairs are visited in lexicographic order; the emitted ontology is the
    union of the per-pair blocks.
    """
    if pool is None:
        pool = FreshNamePool(reserved=s.variables)
    statements: list[Statement] = []
    for u, v in sorted(tuple(sorted(pair)) for pair in s.pairs()):
        label = s.constraint(u, v)
        if label == Relation([EQ]):
            statements += [Subsumption(u, v), Subsumption(v, u)]
        elif label == Relation([DR]):
            statements.append(Disjointness(u, v))
        elif label == Relation([PP, EQ]):
            statements.append(Subsumption(u, v))
        elif label == Relation([PPi, EQ]):
            statements.append(Subsumption(v, u))
        elif label == Relation([PP]):
            axioms, assertions = _proper_part_block(u, v, pool)
            statements += axioms + assertions
        elif label == Relation([PPi]):
            axioms, assertions = _proper_part_block(v, u, pool)
            statements += axioms + assertions
        elif label == Relation([PO]):
            axioms, assertions = _overlap_block(u, v, pool)
            statements += axioms + assertions
        else:  # unreachable: Scenario validates its labels
            raise ValueError(f"not a scenario label: {label!r}")
    return Ontology.from_statements(statements, concepts=s.variables)


class NotFulfillingError(ValueError):
    """An interpretation leaves some concept empty."""


def flatten(
    interpretation: Interpretation, concepts: Sequence[str] | None = None
) -> SetInterpretation:
    """Region assignment read off a fulfilling interpretation's extensions."""
    names = tuple(concepts) if concepts is not None else tuple(interpretation.concepts)
    assignment = {}
    for name in names:
        extension = interpretation.extension(name)
        if not extension:
            raise NotFulfillingError(f"concept {name!r} has an empty extension")
        assignment[name] = extension
    return SetInterpretation(tuple(sorted(interpretation.universe)), assignment)


def inflate(
    solution: SetInterpretation,
    roles: Iterable[str] = (),
    individuals: Iterable[str] = (),
    role_assignment: Mapping[str, frozenset[tuple[int, int]]] | None = None,
    individual_assignment: Mapping[str, int] | None = None,
) -> Interpretation:
    """Interpretation blown up from a solution's regions.

    Concept extensions copy the regions.  Unless explicit assignments are
    supplied, every role is empty and every individual denotes the least
    point of the universe.
    """
    universe = frozenset(solution.universe)
    role_map: dict[str, frozenset[tuple[int, int]]] = {r: frozenset() for r in roles}
    if role_assignment:
        role_map.update(role_assignment)
    individual_map: dict[str, int] = {}
    names = list(individuals)
    if names and not universe:
        raise ValueError("cannot place individuals in an empty universe")
    default_point = min(universe) if universe else 0
    for name in names:
        individual_map[name] = default_point
    if individual_assignment:
        individual_map.update(individual_assignment)
    return Interpretation(
        universe=universe,
        concepts=dict(solution.assignment),
        roles=role_map,
        individuals=individual_map,
    )
