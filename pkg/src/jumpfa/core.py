"""Domain types: symbols, words, rules, GJFA, paths, and a small NFA.

Symbols and state ids are plain interned token strings; words are tuples of
symbol tokens. The empty tuple is the empty word and is written ``eps`` in
all textual forms.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional

SYMBOL_RE = re.compile(r"[A-Za-z0-9_]+\Z")
EPS_TOKEN = "eps"

# A word is a tuple of symbol tokens; () is the empty word.
Word = tuple[str, ...]

EMPTY_WORD: Word = ()


def check_symbol(name: str) -> str:
    """Validate a symbol (or state) token and return it."""
    if not SYMBOL_RE.match(name):
        raise ValueError(f"invalid token {name!r}")
    if name == EPS_TOKEN:
        raise ValueError(f"{EPS_TOKEN!r} is reserved for the empty word")
    return name


def word(text: str) -> Word:
    """Parse a dotted word: ``a.abar`` -> ('a', 'abar'); ``eps`` -> ()."""
    if text == EPS_TOKEN or text == "":
        return ()
    return tuple(check_symbol(tok) for tok in text.split("."))


def word_str(w: Word) -> str:
    """Inverse of :func:`word`."""
    return ".".join(w) if w else EPS_TOKEN


def shortlex_key(w: Word):
    """Sort key: length first, then symbol tokens in name order."""
    return (len(w), w)


@dataclass(frozen=True, order=True)
class Rule:
    """A rule (from-state, label word, to-state)."""

    src: str
    label: Word
    dst: str

    def __str__(self) -> str:
        return f"({self.src}, {word_str(self.label)}, {self.dst})"


@dataclass(frozen=True)
class Gjfa:
    """A general jumping finite automaton: (states, alphabet, rules, initial, finals).

    Construction coerces the collections to frozen sets; structural problems
    are reported by :func:`validate` rather than raised here.
    """

    states: frozenset[str]
    alphabet: frozenset[str]
    rules: frozenset[Rule]
    initial: str
    finals: frozenset[str]

    def __init__(
        self,
        states: Iterable[str],
        alphabet: Iterable[str],
        rules: Iterable[Rule],
        initial: str,
        finals: Iterable[str],
    ):
        object.__setattr__(self, "states", frozenset(states))
        object.__setattr__(self, "alphabet", frozenset(alphabet))
        object.__setattr__(self, "rules", frozenset(rules))
        object.__setattr__(self, "initial", initial)
        object.__setattr__(self, "finals", frozenset(finals))

    def rules_from(self, state: str) -> list[Rule]:
        return sorted(r for r in self.rules if r.src == state)

    def rules_into(self, state: str) -> list[Rule]:
        return sorted(r for r in self.rules if r.dst == state)


def validate(m: Gjfa) -> list[str]:
    """Check all Gjfa invariants; return one diagnostic string per violation."""
    diags: list[str] = []
    for s in sorted(m.states):
        if not SYMBOL_RE.match(s) or s == EPS_TOKEN:
            diags.append(f"invalid state token: {s!r}")
    for a in sorted(m.alphabet):
        if not SYMBOL_RE.match(a) or a == EPS_TOKEN:
            diags.append(f"invalid alphabet symbol: {a!r}")
    if m.initial not in m.states:
        diags.append(f"initial state not declared: {m.initial}")
    for f in sorted(m.finals - m.states):
        diags.append(f"final state not declared: {f}")
    for r in sorted(m.rules):
        if r.src not in m.states:
            diags.append(f"rule {r} references undeclared state {r.src}")
        if r.dst not in m.states:
            diags.append(f"rule {r} references undeclared state {r.dst}")
        for sym in r.label:
            if sym not in m.alphabet:
                diags.append(f"rule {r} uses undeclared symbol {sym}")
    return diags


def degree(m: Gjfa) -> int:
    """Maximum rule-label length; 0 for a rule-free automaton."""
    return max((len(r.label) for r in m.rules), default=0)


def is_jfa(m: Gjfa) -> bool:
    """True iff every label has length at most 1."""
    return degree(m) <= 1


Path = tuple[Rule, ...]


def path_labeling(p: Path) -> list[Word]:
    """The label sequence of a path; raises on mismatched endpoints."""
    if not p:
        raise ValueError("a path has at least one rule")
    for prev, nxt in zip(p, p[1:]):
        if prev.dst != nxt.src:
            raise ValueError(f"rules {prev} and {nxt} do not chain")
    return [r.label for r in p]


@dataclass(frozen=True)
class Nfa:
    """A classical NFA with epsilon moves; labels are single tokens or None."""

    states: frozenset[str]
    alphabet: frozenset[str]
    transitions: frozenset[tuple[str, Optional[str], str]]
    initial: str
    finals: frozenset[str]

    def __init__(self, states, alphabet, transitions, initial, finals):
        object.__setattr__(self, "states", frozenset(states))
        object.__setattr__(self, "alphabet", frozenset(alphabet))
        object.__setattr__(self, "transitions", frozenset(transitions))
        object.__setattr__(self, "initial", initial)
        object.__setattr__(self, "finals", frozenset(finals))

    def validate(self) -> list[str]:
        diags = []
        if self.initial not in self.states:
            diags.append(f"initial state not declared: {self.initial}")
        for f in sorted(self.finals - self.states):
            diags.append(f"final state not declared: {f}")
        for src, label, dst in sorted(
            self.transitions, key=lambda t: (t[0], t[1] or "", t[2])
        ):
            if src not in self.states or dst not in self.states:
                diags.append(f"transition ({src}, {label}, {dst}) endpoint undeclared")
            if label is not None and label not in self.alphabet:
                diags.append(f"transition label undeclared: {label}")
        return diags

    def eps_closure(self, states: Iterable[str]) -> frozenset[str]:
        seen = set(states)
        queue = deque(seen)
        while queue:
            q = queue.popleft()
            for src, label, dst in self.transitions:
                if src == q and label is None and dst not in seen:
                    seen.add(dst)
                    queue.append(dst)
        return frozenset(seen)

    def step(self, states: frozenset[str], token: str) -> frozenset[str]:
        nxt = {dst for src, label, dst in self.transitions if src in states and label == token}
        return self.eps_closure(nxt)

    def accepts(self, w: Word) -> bool:
        current = self.eps_closure({self.initial})
        for tok in w:
            current = self.step(current, tok)
            if not current:
                return False
        return bool(current & self.finals)

    def enumerate_bounded(self, max_len: int) -> set[Word]:
        """All accepted words of length at most max_len."""
        accepted: set[Word] = set()
        start = self.eps_closure({self.initial})
        frontier: list[tuple[frozenset[str], Word]] = [(start, ())]
        seen: set[tuple[frozenset[str], Word]] = {(start, ())}
        while frontier:
            nxt_frontier = []
            for states, w in frontier:
                if states & self.finals:
                    accepted.add(w)
                if len(w) < max_len:
                    for tok in sorted(self.alphabet):
                        nstates = self.step(states, tok)
                        if nstates:
                            node = (nstates, w + (tok,))
                            if node not in seen:
                                seen.add(node)
                                nxt_frontier.append(node)
            frontier = nxt_frontier
        return accepted
