"""Insertion systems with contexts, graph-controlled insertion systems,
regular-control semicontextual grammars, and the conversions tying the
context-free (0,0) classes to jumping automata."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from jumpfa.core import Gjfa, Nfa, Rule, Word, word_str
from jumpfa.langops import LangSet


class NonzeroContextError(ValueError):
    """Raised by conversions that require empty left/right contexts."""

    def __init__(self, rule: "InsRule"):
        self.rule = rule
        super().__init__(f"rule {rule} has a non-empty context")


@dataclass(frozen=True, order=True)
class InsRule:
    """Insert ``ins`` between an occurrence of ``left`` and ``right``."""

    left: Word
    ins: Word
    right: Word

    @property
    def context_free(self) -> bool:
        return not self.left and not self.right

    def __str__(self) -> str:
        return f"({word_str(self.left)}|{word_str(self.ins)}|{word_str(self.right)})"


@dataclass(frozen=True)
class InsSystem:
    alphabet: frozenset[str]
    axioms: LangSet
    rules: frozenset[InsRule]

    def __init__(self, alphabet: Iterable[str], axioms: LangSet, rules: Iterable[InsRule]):
        object.__setattr__(self, "alphabet", frozenset(alphabet))
        object.__setattr__(self, "axioms", axioms)
        object.__setattr__(self, "rules", frozenset(rules))


def _rule_positions(rule: InsRule, w: Word) -> list[int]:
    """Positions where w reads ...left][right... around the insertion point."""
    lw, rw = len(rule.left), len(rule.right)
    return [
        i
        for i in range(len(w) + 1)
        if i >= lw
        and w[i - lw : i] == rule.left
        and w[i : i + rw] == rule.right
    ]


def apply_rule(rule: InsRule, w: Word) -> set[Word]:
    return {w[:i] + rule.ins + w[i:] for i in _rule_positions(rule, w)}


def ins_derive_step(sys: InsSystem, w: Word) -> set[Word]:
    """All one-step successors over all rules and matching positions."""
    out: set[Word] = set()
    for rule in sys.rules:
        out |= apply_rule(rule, w)
    return out


def ins_enumerate(sys: InsSystem, max_len: int) -> LangSet:
    """Closure of the axioms under the rules, truncated to max_len."""
    out = {w for w in sys.axioms.words if len(w) <= max_len}
    queue = deque(out)
    while queue:
        w = queue.popleft()
        for nxt in ins_derive_step(sys, w):
            if len(nxt) <= max_len and nxt not in out:
                out.add(nxt)
                queue.append(nxt)
    return LangSet(out, max_len)


def ins_classify(sys: InsSystem) -> tuple[int, int, int]:
    """(max inserted length, max left context, max right context)."""
    n = max((len(r.ins) for r in sys.rules), default=0)
    m = max((len(r.left) for r in sys.rules), default=0)
    m2 = max((len(r.right) for r in sys.rules), default=0)
    return (n, m, m2)


@dataclass(frozen=True)
class GcInsSystem:
    """Insertion rules on the edges of a directed multigraph of components.

    A word is accepted when it is derived from an axiom along an edge path
    from the initial component to the final component; the zero-length path
    accepts axioms exactly when initial = final.
    """

    components: frozenset[str]
    edges: frozenset[tuple[str, InsRule, str]]
    axioms: LangSet
    alphabet: frozenset[str]
    initial: str
    final: str

    def __init__(self, components, edges, axioms, alphabet, initial, final):
        object.__setattr__(self, "components", frozenset(components))
        object.__setattr__(self, "edges", frozenset(edges))
        object.__setattr__(self, "axioms", axioms)
        object.__setattr__(self, "alphabet", frozenset(alphabet))
        object.__setattr__(self, "initial", initial)
        object.__setattr__(self, "final", final)


def gcis_enumerate(g: GcInsSystem, max_len: int) -> LangSet:
    """Words of length <= max_len reachable at the final component."""
    accepted: set[Word] = set()
    frontier = {(g.initial, w) for w in g.axioms.words if len(w) <= max_len}
    seen = set(frontier)
    queue = deque(frontier)
    edges_by_src: dict[str, list[tuple[InsRule, str]]] = {}
    for src, rule, dst in g.edges:
        edges_by_src.setdefault(src, []).append((rule, dst))
    while queue:
        comp, w = queue.popleft()
        if comp == g.final:
            accepted.add(w)
        for rule, dst in edges_by_src.get(comp, ()):
            for nxt in apply_rule(rule, w):
                if len(nxt) <= max_len and (dst, nxt) not in seen:
                    seen.add((dst, nxt))
                    queue.append((dst, nxt))
    return LangSet(accepted, max_len)


def gcis_from_gjfa(m: Gjfa) -> GcInsSystem:
    """Same structure as the automaton, with edges reversed.

    The generative reading applies the last rule's label first, so a rule
    (q, v, r) becomes an edge r -> q inserting v; a fresh initial component
    reaches every final state by a no-op edge, and the final component is the
    automaton's start. The only axiom is the empty word.
    """
    existing = set(m.states)
    i = 0
    while f"_g{i}" in existing:
        i += 1
    entry = f"_g{i}"
    edges = {(r.dst, InsRule((), r.label, ()), r.src) for r in m.rules}
    edges |= {(entry, InsRule((), (), ()), f) for f in m.finals}
    return GcInsSystem(
        m.states | {entry}, edges, LangSet([()]), m.alphabet, entry, m.initial
    )


def gjfa_from_gcis(g: GcInsSystem) -> Gjfa:
    """Inverse direction for context-free systems: axioms become final deletions."""
    for _, rule, _ in sorted(g.edges, key=lambda e: (e[0], e[1], e[2])):
        if not rule.context_free:
            raise NonzeroContextError(rule)
    existing = set(g.components)
    i = 0
    while f"_g{i}" in existing:
        i += 1
    sink = f"_g{i}"
    rules = {Rule(dst, rule.ins, src) for src, rule, dst in g.edges}
    rules |= {Rule(g.initial, a, sink) for a in g.axioms.words}
    return Gjfa(g.components | {sink}, g.alphabet, rules, g.final, {sink})


@dataclass(frozen=True)
class RcGrammar:
    """Insertion rules with an NFA over rule indices constraining application order."""

    alphabet: frozenset[str]
    axioms: LangSet
    rules: tuple[InsRule, ...]
    control: Nfa

    def __init__(self, alphabet, axioms, rules, control):
        object.__setattr__(self, "alphabet", frozenset(alphabet))
        object.__setattr__(self, "axioms", axioms)
        object.__setattr__(self, "rules", tuple(rules))
        object.__setattr__(self, "control", control)


def rcg_enumerate(r: RcGrammar, max_len: int) -> LangSet:
    """Words derivable along a rule-index sequence the control NFA accepts."""
    accepted: set[Word] = set()
    start = r.control.eps_closure({r.control.initial})
    frontier = {(start, w) for w in r.axioms.words if len(w) <= max_len}
    seen = set(frontier)
    queue = deque(frontier)
    while queue:
        states, w = queue.popleft()
        if states & r.control.finals:
            accepted.add(w)
        for idx, rule in enumerate(r.rules):
            nstates = r.control.step(states, str(idx))
            if not nstates:
                continue
            for nxt in apply_rule(rule, w):
                if len(nxt) <= max_len and (nstates, nxt) not in seen:
                    seen.add((nstates, nxt))
                    queue.append((nstates, nxt))
    return LangSet(accepted, max_len)


def rcg_from_gcis(g: GcInsSystem) -> RcGrammar:
    """Component graph becomes the control NFA; edges are relabeled by rule index."""
    for _, rule, _ in g.edges:
        if not rule.context_free:
            raise NonzeroContextError(rule)
    rules = tuple(sorted({rule for _, rule, _ in g.edges}))
    index = {rule: i for i, rule in enumerate(rules)}
    transitions = {(src, str(index[rule]), dst) for src, rule, dst in g.edges}
    control = Nfa(
        g.components,
        {str(i) for i in range(len(rules))},
        transitions,
        g.initial,
        {g.final},
    )
    return RcGrammar(g.alphabet, g.axioms, rules, control)


def gcis_from_rcg(r: RcGrammar) -> GcInsSystem:
    """Control NFA states become components; eps moves become no-op insertions.

    If the control has several final states, a fresh final component collects
    them by no-op edges (the graph-controlled model fixes a single final).
    """
    for rule in r.rules:
        if not rule.context_free:
            raise NonzeroContextError(rule)
    noop = InsRule((), (), ())
    edges: set[tuple[str, InsRule, str]] = set()
    for src, label, dst in r.control.transitions:
        edges.add((src, noop if label is None else r.rules[int(label)], dst))
    components = set(r.control.states)
    finals = sorted(r.control.finals)
    if len(finals) == 1:
        final = finals[0]
    else:
        i = 0
        while f"_g{i}" in components:
            i += 1
        final = f"_g{i}"
        components.add(final)
        edges |= {(f, noop, final) for f in finals}
    return GcInsSystem(components, edges, r.axioms, r.alphabet, r.control.initial, final)
