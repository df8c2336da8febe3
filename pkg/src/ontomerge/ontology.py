"""Lightweight terminological knowledge bases in strict normal form.

An ontology is a TBox of axioms drawn from exactly four shapes --
``A <= B``, ``A & B <= bot``, ``A <= some r.B``, ``some r.A <= B`` with
atomic names -- plus an ABox of concept and role assertions.  This module
provides the data model, a line-oriented text parser, JSON export,
classification (saturation of atomic subsumptions and disjointness),
deductive closure of the ABox, and a finite interpretation type used by
the semantic test oracles.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Union

__all__ = [
    "OntologyError",
    "OntologySyntaxError",
    "NotNormalFormError",
    "NameClashError",
    "UnsatisfiableConceptError",
    "Subsumption",
    "Disjointness",
    "ExistsRight",
    "ExistsLeft",
    "Axiom",
    "ConceptAssertion",
    "RoleAssertion",
    "Assertion",
    "Statement",
    "Ontology",
    "Classification",
    "ClosedABox",
    "Interpretation",
    "parse_ontology",
    "format_statement",
    "format_ontology",
    "ontology_to_json",
    "closed_abox_to_json",
    "classify",
    "deductive_closure",
]


class OntologyError(Exception):
    """Base class for input-level ontology failures."""


class OntologySyntaxError(OntologyError):
    def __init__(self, message: str, line: int, column: int) -> None:
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class NotNormalFormError(OntologyError):
    """An axiom outside the four strict-normal-form shapes."""

    def __init__(self, message: str, line: int) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


class NameClashError(OntologyError):
    """One name used in two of the concept/role/individual namespaces."""

    def __init__(self, message: str, line: int | None = None) -> None:
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


class UnsatisfiableConceptError(OntologyError):
    """Classification derived that a concept must be empty."""

    def __init__(self, concept: str) -> None:
        super().__init__(f"concept {concept!r} is unsatisfiable")
        self.concept = concept


@dataclass(frozen=True)
class Subsumption:
    sub: str
    sup: str


@dataclass(frozen=True)
class Disjointness:
    """Disjointness of two concepts; the order of arguments is immaterial."""

    first: str
    second: str

    def __post_init__(self) -> None:
        if self.second < self.first:
            a, b = self.second, self.first
            object.__setattr__(self, "first", a)
            object.__setattr__(self, "second", b)

    @property
    def concepts(self) -> frozenset[str]:
        return frozenset((self.first, self.second))


@dataclass(frozen=True)
class ExistsRight:
    """sub is subsumed by (some role.filler)."""

    sub: str
    role: str
    filler: str


@dataclass(frozen=True)
class ExistsLeft:
    """(some role.filler) is subsumed by sup."""

    role: str
    filler: str
    sup: str


Axiom = Union[Subsumption, Disjointness, ExistsRight, ExistsLeft]


@dataclass(frozen=True)
class ConceptAssertion:
    concept: str
    individual: str


@dataclass(frozen=True)
class RoleAssertion:
    role: str
    subject: str
    object: str


Assertion = Union[ConceptAssertion, RoleAssertion]
Statement = Union[Subsumption, Disjointness, ExistsRight, ExistsLeft, ConceptAssertion, RoleAssertion]

_KIND_RANK = {
    Subsumption: 0,
    Disjointness: 1,
    ExistsRight: 2,
    ExistsLeft: 3,
    ConceptAssertion: 4,
    RoleAssertion: 5,
}


def statement_sort_key(stmt: Statement) -> tuple:
    if isinstance(stmt, Subsumption):
        fields = (stmt.sub, stmt.sup)
    elif isinstance(stmt, Disjointness):
        fields = (stmt.first, stmt.second)
    elif isinstance(stmt, ExistsRight):
        fields = (stmt.sub, stmt.role, stmt.filler)
    elif isinstance(stmt, ExistsLeft):
        fields = (stmt.role, stmt.filler, stmt.sup)
    elif isinstance(stmt, ConceptAssertion):
        fields = (stmt.concept, stmt.individual)
    elif isinstance(stmt, RoleAssertion):
        fields = (stmt.role, stmt.subject, stmt.object)
    else:
        raise TypeError(f"not a statement: {stmt!r}")
    return (_KIND_RANK[type(stmt)], fields)


def _statement_names(stmt: Statement) -> Iterator[tuple[str, str]]:
    """(name, kind) occurrences of a statement, in written order."""
    if isinstance(stmt, Subsumption):
        yield stmt.sub, "concept"
        yield stmt.sup, "concept"
    elif isinstance(stmt, Disjointness):
        yield stmt.first, "concept"
        yield stmt.second, "concept"
    elif isinstance(stmt, ExistsRight):
        yield stmt.sub, "concept"
        yield stmt.role, "role"
        yield stmt.filler, "concept"
    elif isinstance(stmt, ExistsLeft):
        yield stmt.role, "role"
        yield stmt.filler, "concept"
        yield stmt.sup, "concept"
    elif isinstance(stmt, ConceptAssertion):
        yield stmt.concept, "concept"
        yield stmt.individual, "individual"
    elif isinstance(stmt, RoleAssertion):
        yield stmt.role, "role"
        yield stmt.subject, "individual"
        yield stmt.object, "individual"
    else:
        raise TypeError(f"not a statement: {stmt!r}")


@dataclass(frozen=True)
class Ontology:
    """A TBox/ABox pair with its signature in first-occurrence order."""

    tbox: frozenset[Axiom]
    abox: frozenset[Assertion]
    concepts: tuple[str, ...]
    roles: tuple[str, ...]
    individuals: tuple[str, ...]

    def __post_init__(self) -> None:
        by_kind = {
            "concept": set(self.concepts),
            "role": set(self.roles),
            "individual": set(self.individuals),
        }
        if by_kind["concept"] & by_kind["role"] or by_kind["concept"] & by_kind[
            "individual"
        ] or by_kind["role"] & by_kind["individual"]:
            raise NameClashError("concept, role and individual names must be disjoint")
        for stmt in list(self.tbox) + list(self.abox):
            for name, kind in _statement_names(stmt):
                if name not in by_kind[kind]:
                    raise ValueError(f"{kind} {name!r} missing from the signature")

    @classmethod
    def from_statements(
        cls,
        statements: Iterable[Statement],
        concepts: Iterable[str] = (),
        roles: Iterable[str] = (),
        individuals: Iterable[str] = (),
    ) -> "Ontology":
        order = {"concept": list(concepts), "role": list(roles), "individual": list(individuals)}
        seen = {kind: set(names) for kind, names in order.items()}
        tbox: set[Axiom] = set()
        abox: set[Assertion] = set()
        for stmt in statements:
            for name, kind in _statement_names(stmt):
                clash = next((k for k, names in seen.items() if k != kind and name in names), None)
                if clash is not None:
                    raise NameClashError(f"name {name!r} used as both {clash} and {kind}")
                if name not in seen[kind]:
                    seen[kind].add(name)
                    order[kind].append(name)
            if isinstance(stmt, (ConceptAssertion, RoleAssertion)):
                abox.add(stmt)
            else:
                tbox.add(stmt)
        return cls(
            tbox=frozenset(tbox),
            abox=frozenset(abox),
            concepts=tuple(order["concept"]),
            roles=tuple(order["role"]),
            individuals=tuple(order["individual"]),
        )

    def statements(self) -> list[Statement]:
        """All statements in canonical (kind, names) order."""
        return sorted(list(self.tbox) + list(self.abox), key=statement_sort_key)


# --- text grammar -----------------------------------------------------------

_NAME_RE = re.compile(r"[A-Za-z0-9_]+")
_RESERVED = {"some": "SOME", "bot": "BOT"}
_PUNCT = {"&": "AMP", "(": "LPAR", ")": "RPAR", ",": "COMMA", ".": "DOT"}

_PATTERNS: tuple[tuple[tuple[str, ...], str], ...] = (
    (("NAME", "LE", "NAME"), "subsumption"),
    (("NAME", "AMP", "NAME", "LE", "BOT"), "disjointness"),
    (("NAME", "LE", "SOME", "NAME", "DOT", "NAME"), "exists_right"),
    (("SOME", "NAME", "DOT", "NAME", "LE", "NAME"), "exists_left"),
    (("NAME", "LPAR", "NAME", "RPAR"), "concept_assertion"),
    (("NAME", "LPAR", "NAME", "COMMA", "NAME", "RPAR"), "role_assertion"),
)


def _tokenize(line: str, line_no: int) -> list[tuple[str, str, int]]:
    tokens: list[tuple[str, str, int]] = []
    pos = 0
    while pos < len(line):
        ch = line[pos]
        if ch in " \t":
            pos += 1
            continue
        if ch == "#":
            break
        if line.startswith("<=", pos):
            tokens.append(("LE", "<=", pos + 1))
            pos += 2
            continue
        if ch in _PUNCT:
            tokens.append((_PUNCT[ch], ch, pos + 1))
            pos += 1
            continue
        match = _NAME_RE.match(line, pos)
        if match:
            word = match.group()
            tokens.append((_RESERVED.get(word, "NAME"), word, pos + 1))
            pos = match.end()
            continue
        raise OntologySyntaxError(f"unexpected character {ch!r}", line_no, pos + 1)
    return tokens


def _loose_expression(kinds: tuple[str, ...]) -> bool:
    """Whether tokens form a conjunction of atoms/existentials (any arity).

    Used only to distinguish "axiom outside the four normal forms" from
    plain syntax garbage.
    """
    pos = 0

    def term() -> bool:
        nonlocal pos
        while pos < len(kinds) and kinds[pos] == "SOME":
            if pos + 2 >= len(kinds) or kinds[pos + 1] != "NAME" or kinds[pos + 2] != "DOT":
                return False
            pos += 3
        if pos < len(kinds) and kinds[pos] in ("NAME", "BOT"):
            pos += 1
            return True
        return False

    if not term():
        return False
    while pos < len(kinds):
        if kinds[pos] != "AMP":
            return False
        pos += 1
        if not term():
            return False
    return True


def _match_statement(tokens: list[tuple[str, str, int]], line_no: int, line: str) -> Statement:
    kinds = tuple(kind for kind, _, _ in tokens)
    for pattern, which in _PATTERNS:
        if kinds != pattern:
            continue
        words = [text for _, text, _ in tokens]
        if which == "subsumption":
            return Subsumption(words[0], words[2])
        if which == "disjointness":
            return Disjointness(words[0], words[2])
        if which == "exists_right":
            return ExistsRight(words[0], words[3], words[5])
        if which == "exists_left":
            return ExistsLeft(words[1], words[3], words[5])
        if which == "concept_assertion":
            return ConceptAssertion(words[0], words[2])
        return RoleAssertion(words[0], words[2], words[4])
    if kinds.count("LE") == 1:
        split = kinds.index("LE")
        if _loose_expression(kinds[:split]) and _loose_expression(kinds[split + 1 :]):
            raise NotNormalFormError(
                f"axiom is not in strict normal form: {line.strip()!r}", line_no
            )
    best = 0
    for pattern, _ in _PATTERNS:
        k = 0
        while k < len(kinds) and k < len(pattern) and kinds[k] == pattern[k]:
            k += 1
        best = max(best, k)
    if best < len(tokens):
        _, text, column = tokens[best]
        raise OntologySyntaxError(f"unexpected token {text!r}", line_no, column)
    raise OntologySyntaxError("incomplete statement", line_no, len(line.rstrip()) + 1)


def parse_ontology(text: str) -> Ontology:
    """Parse the line-oriented grammar; infer the signature from use.

    Raises OntologySyntaxError / NotNormalFormError / NameClashError with
    the offending line.
    """
    order: dict[str, list[str]] = {"concept": [], "role": [], "individual": []}
    kind_of: dict[str, str] = {}
    tbox: set[Axiom] = set()
    abox: set[Assertion] = set()
    for line_no, line in enumerate(text.splitlines(), start=1):
        tokens = _tokenize(line, line_no)
        if not tokens:
            continue
        stmt = _match_statement(tokens, line_no, line)
        for name, kind in _statement_names(stmt):
            previous = kind_of.get(name)
            if previous is None:
                kind_of[name] = kind
                order[kind].append(name)
            elif previous != kind:
                raise NameClashError(
                    f"name {name!r} already used as a {previous}, here as a {kind}", line_no
                )
        if isinstance(stmt, (ConceptAssertion, RoleAssertion)):
            abox.add(stmt)
        else:
            tbox.add(stmt)
    return Ontology(
        tbox=frozenset(tbox),
        abox=frozenset(abox),
        concepts=tuple(order["concept"]),
        roles=tuple(order["role"]),
        individuals=tuple(order["individual"]),
    )


def format_statement(stmt: Statement) -> str:
    if isinstance(stmt, Subsumption):
        return f"{stmt.sub} <= {stmt.sup}"
    if isinstance(stmt, Disjointness):
        return f"{stmt.first} & {stmt.second} <= bot"
    if isinstance(stmt, ExistsRight):
        return f"{stmt.sub} <= some {stmt.role}.{stmt.filler}"
    if isinstance(stmt, ExistsLeft):
        return f"some {stmt.role}.{stmt.filler} <= {stmt.sup}"
    if isinstance(stmt, ConceptAssertion):
        return f"{stmt.concept}({stmt.individual})"
    if isinstance(stmt, RoleAssertion):
        return f"{stmt.role}({stmt.subject},{stmt.object})"
    raise TypeError(f"not a statement: {stmt!r}")


def format_ontology(o: Ontology) -> str:
    """Render back into the text grammar, statements in canonical order."""
    return "\n".join(format_statement(stmt) for stmt in o.statements()) + "\n"


def _statement_json(stmt: Statement) -> dict:
    if isinstance(stmt, Subsumption):
        return {"type": "subsumption", "sub": stmt.sub, "sup": stmt.sup}
    if isinstance(stmt, Disjointness):
        return {"type": "disjointness", "first": stmt.first, "second": stmt.second}
    if isinstance(stmt, ExistsRight):
        return {"type": "exists_right", "sub": stmt.sub, "role": stmt.role, "filler": stmt.filler}
    if isinstance(stmt, ExistsLeft):
        return {"type": "exists_left", "role": stmt.role, "filler": stmt.filler, "sup": stmt.sup}
    if isinstance(stmt, ConceptAssertion):
        return {"type": "concept", "concept": stmt.concept, "individual": stmt.individual}
    return {"type": "role", "role": stmt.role, "subject": stmt.subject, "object": stmt.object}


def ontology_to_json(o: Ontology) -> str:
    data = {
        "concepts": sorted(o.concepts),
        "roles": sorted(o.roles),
        "individuals": sorted(o.individuals),
        "tbox": [_statement_json(a) for a in sorted(o.tbox, key=statement_sort_key)],
        "abox": [_statement_json(a) for a in sorted(o.abox, key=statement_sort_key)],
    }
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


# --- classification ---------------------------------------------------------


@dataclass(frozen=True)
class Classification:
    """Entailed atomic facts of a TBox.

    `subsumptions` includes the reflexive ones; `disjointness` is the
    asserted set closed downward under subsumption (self-disjointness is
    reported through `unsatisfiable` instead of as an axiom).
    """

    subsumptions: frozenset[Subsumption]
    disjointness: frozenset[Disjointness]
    unsatisfiable: frozenset[str]

    @property
    def axioms(self) -> frozenset[Axiom]:
        return self.subsumptions | self.disjointness

    def supers_of(self, concept: str) -> frozenset[str]:
        return frozenset(s.sup for s in self.subsumptions if s.sub == concept)

    def entails_subsumption(self, sub: str, sup: str) -> bool:
        return Subsumption(sub, sup) in self.subsumptions

    def entails_disjointness(self, a: str, b: str) -> bool:
        return Disjointness(a, b) in self.disjointness

    def to_json_dict(self) -> dict:
        return {
            "subsumptions": sorted([s.sub, s.sup] for s in self.subsumptions),
            "disjointness": sorted([d.first, d.second] for d in self.disjointness),
            "unsatisfiable": sorted(self.unsatisfiable),
        }


def classify(
    tbox: Iterable[Axiom],
    concepts: Iterable[str] = (),
    strict: bool = False,
) -> Classification:
    """Saturate a strict-normal-form TBox into its atomic consequences.

    Rules: reflexivity, transitive subsumption, propagation through
    existential axioms (A <= some r.B, B <= B', some r.B' <= C entail
    A <= C, also along entailed chains), downward propagation of
    disjointness, and detection of unsatisfiable concepts, including
    through existential successors.  With strict=True an unsatisfiable
    concept raises UnsatisfiableConceptError; otherwise it is reported in
    the result and the caller decides.
    """
    axioms = list(tbox)
    names: list[str] = []
    seen: set[str] = set()
    for stmt in axioms:
        for name, kind in _statement_names(stmt):
            if kind == "concept" and name not in seen:
                seen.add(name)
                names.append(name)
    for name in concepts:
        if name not in seen:
            seen.add(name)
            names.append(name)
    names.sort()

    subs = [a for a in axioms if isinstance(a, Subsumption)]
    disj = [a for a in axioms if isinstance(a, Disjointness)]
    ex_right = [a for a in axioms if isinstance(a, ExistsRight)]
    ex_left = [a for a in axioms if isinstance(a, ExistsLeft)]

    supers: dict[str, set[str]] = {a: {a} for a in names}
    successors: set[tuple[str, str, str]] = set()
    changed = True
    while changed:
        changed = False
        for a in names:
            sa = supers[a]
            for axiom in subs:
                if axiom.sub in sa and axiom.sup not in sa:
                    sa.add(axiom.sup)
                    changed = True
            for axiom in ex_right:
                edge = (a, axiom.role, axiom.filler)
                if axiom.sub in sa and edge not in successors:
                    successors.add(edge)
                    changed = True
        for axiom in ex_left:
            for a, role, filler in list(successors):
                if role == axiom.role and axiom.filler in supers[filler]:
                    if axiom.sup not in supers[a]:
                        supers[a].add(axiom.sup)
                        changed = True

    pairs: set[frozenset[str]] = {d.concepts for d in disj}
    changed = True
    while changed:
        changed = False
        for pair in list(pairs):
            members = tuple(pair)
            for a in names:
                for x in members:
                    if x in supers[a]:
                        other = members[1] if len(members) == 2 and x == members[0] else members[0]
                        derived = frozenset((a, other))
                        if derived not in pairs:
                            pairs.add(derived)
                            changed = True

    unsatisfiable: set[str] = set()
    for a in names:
        sa = supers[a]
        for pair in pairs:
            if pair <= sa:
                unsatisfiable.add(a)
                break
    changed = True
    while changed:
        changed = False
        for a, _, filler in successors:
            if filler in unsatisfiable and a not in unsatisfiable:
                unsatisfiable.add(a)
                changed = True
        for a in names:
            if a in unsatisfiable:
                continue
            if any(x in unsatisfiable for x in supers[a]):
                unsatisfiable.add(a)
                changed = True

    if strict and unsatisfiable:
        raise UnsatisfiableConceptError(min(unsatisfiable))

    return Classification(
        subsumptions=frozenset(
            Subsumption(a, b) for a in names for b in supers[a]
        ),
        disjointness=frozenset(
            Disjointness(x, y) for pair in pairs if len(pair) == 2 for x, y in [sorted(pair)]
        ),
        unsatisfiable=frozenset(unsatisfiable),
    )


# --- deductive closure ------------------------------------------------------


@dataclass(frozen=True)
class ClosedABox:
    """The ABox saturated against its TBox.

    `facts` is the least fixpoint of the instance rules (asserted facts,
    subsumption propagation, existential-left firing on asserted role
    edges); `roles` are the asserted role assertions, never derived.
    Individuals asserted into provably disjoint concepts are recorded,
    not raised: conflicting sources are expected input.
    """

    facts: frozenset[ConceptAssertion]
    roles: frozenset[RoleAssertion]
    inconsistent_individuals: frozenset[str]

    def holds(self, concept: str, individual: str) -> bool:
        return ConceptAssertion(concept, individual) in self.facts

    def instances_of(self, concept: str) -> frozenset[str]:
        return frozenset(f.individual for f in self.facts if f.concept == concept)

    def concepts_of(self, individual: str) -> frozenset[str]:
        return frozenset(f.concept for f in self.facts if f.individual == individual)

    def individuals(self) -> frozenset[str]:
        out = {f.individual for f in self.facts}
        for r in self.roles:
            out.add(r.subject)
            out.add(r.object)
        return frozenset(out)

    def to_json_dict(self) -> dict:
        return {
            "facts": [_statement_json(f) for f in sorted(self.facts, key=statement_sort_key)],
            "roles": [_statement_json(r) for r in sorted(self.roles, key=statement_sort_key)],
            "inconsistent_individuals": sorted(self.inconsistent_individuals),
        }


def closed_abox_to_json(closed: ClosedABox) -> str:
    return json.dumps(closed.to_json_dict(), indent=2, sort_keys=True) + "\n"


def deductive_closure(o: Ontology, classification: Classification | None = None) -> ClosedABox:
    """All entailed concept memberships of the named individuals."""
    cls = classification if classification is not None else classify(o.tbox, concepts=o.concepts)
    sup_map: dict[str, list[str]] = {}
    for s in cls.subsumptions:
        sup_map.setdefault(s.sub, []).append(s.sup)
    ex_left = [a for a in o.tbox if isinstance(a, ExistsLeft)]
    role_edges: dict[str, list[tuple[str, str]]] = {}
    for r in o.abox:
        if isinstance(r, RoleAssertion):
            role_edges.setdefault(r.role, []).append((r.subject, r.object))

    facts: set[ConceptAssertion] = {a for a in o.abox if isinstance(a, ConceptAssertion)}
    changed = True
    while changed:
        changed = False
        for fact in list(facts):
            for sup in sup_map.get(fact.concept, ()):
                derived = ConceptAssertion(sup, fact.individual)
                if derived not in facts:
                    facts.add(derived)
                    changed = True
        for axiom in ex_left:
            for subject, obj in role_edges.get(axiom.role, ()):
                if ConceptAssertion(axiom.filler, obj) in facts:
                    derived = ConceptAssertion(axiom.sup, subject)
                    if derived not in facts:
                        facts.add(derived)
                        changed = True

    by_individual: dict[str, set[str]] = {}
    for fact in facts:
        by_individual.setdefault(fact.individual, set()).add(fact.concept)
    inconsistent: set[str] = set()
    for individual, members in by_individual.items():
        if members & cls.unsatisfiable:
            inconsistent.add(individual)
            continue
        found = False
        for d in cls.disjointness:
            if d.first in members and d.second in members:
                found = True
                break
        if found:
            inconsistent.add(individual)

    return ClosedABox(
        facts=frozenset(facts),
        roles=frozenset(r for r in o.abox if isinstance(r, RoleAssertion)),
        inconsistent_individuals=frozenset(inconsistent),
    )


# --- finite interpretations (semantic oracle support) -----------------------


@dataclass(frozen=True)
class Interpretation:
    """A finite interpretation: universe, extensions, role graphs, names."""

    universe: frozenset[int]
    concepts: Mapping[str, frozenset[int]]
    roles: Mapping[str, frozenset[tuple[int, int]]]
    individuals: Mapping[str, int]

    def extension(self, concept: str) -> frozenset[int]:
        return self.concepts.get(concept, frozenset())

    def satisfies(self, stmt: Statement) -> bool:
        if isinstance(stmt, Subsumption):
            return self.extension(stmt.sub) <= self.extension(stmt.sup)
        if isinstance(stmt, Disjointness):
            return not (self.extension(stmt.first) & self.extension(stmt.second))
        if isinstance(stmt, ExistsRight):
            pairs = self.roles.get(stmt.role, frozenset())
            filler = self.extension(stmt.filler)
            witnesses = {x for x, y in pairs if y in filler}
            return self.extension(stmt.sub) <= witnesses
        if isinstance(stmt, ExistsLeft):
            pairs = self.roles.get(stmt.role, frozenset())
            filler = self.extension(stmt.filler)
            witnesses = {x for x, y in pairs if y in filler}
            return witnesses <= self.extension(stmt.sup)
        if isinstance(stmt, ConceptAssertion):
            return self.individuals[stmt.individual] in self.extension(stmt.concept)
        if isinstance(stmt, RoleAssertion):
            pair = (self.individuals[stmt.subject], self.individuals[stmt.object])
            return pair in self.roles.get(stmt.role, frozenset())
        raise TypeError(f"not a statement: {stmt!r}")

    def is_model(self, o: Ontology) -> bool:
        return all(self.satisfies(stmt) for stmt in list(o.tbox) + list(o.abox))

    def is_fulfilling(self, concepts: Iterable[str] | None = None) -> bool:
        names = self.concepts.keys() if concepts is None else concepts
        return all(self.extension(name) for name in names)
