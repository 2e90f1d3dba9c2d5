"""The two equivalent GJFA semantics.

Deletion side: step from configuration (state, word) by deleting a factor
equal to a rule label anywhere in the word; accept on reaching a final state
with the empty word. Generation side: walk rules backward from final states,
inserting labels anywhere; a word is accepted when the walk reaches the
initial state carrying exactly that word.

The tape-head position is not modeled: the head may move anywhere in each
step, so a configuration is just (state, word).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from jumpfa.core import Gjfa, Rule, Word
from jumpfa.langops import LangSet


@dataclass(frozen=True)
class Configuration:
    state: str
    word: Word


@dataclass(frozen=True)
class AcceptanceWitness:
    """Replayable evidence of acceptance.

    ``steps`` lists (rule, position) in deletion order; inserting the labels
    back in reverse order at the recorded positions regenerates the word.
    An empty ``steps`` witnesses the empty-word case (initial state final).
    """

    word: Word
    steps: tuple[tuple[Rule, int], ...]

    def replay(self) -> Word:
        w: Word = ()
        for rule, pos in reversed(self.steps):
            w = w[:pos] + rule.label + w[pos:]
        return w


def _occurrences(w: Word, v: Word) -> list[int]:
    if not v:
        return [0]
    return [i for i in range(len(w) - len(v) + 1) if w[i : i + len(v)] == v]


def delete_successors(m: Gjfa, c: Configuration) -> set[Configuration]:
    """All configurations reachable in one deletion step."""
    out: set[Configuration] = set()
    for rule in m.rules:
        if rule.src != c.state:
            continue
        for pos in _occurrences(c.word, rule.label):
            out.add(Configuration(rule.dst, c.word[:pos] + c.word[pos + len(rule.label) :]))
    return out


def _jump_search(m: Gjfa, w: Word) -> Optional[AcceptanceWitness]:
    """Breadth-first deletion search; returns a witness or None."""
    start = Configuration(m.initial, tuple(w))
    parents: dict[Configuration, Optional[tuple[Configuration, Rule, int]]] = {start: None}
    queue = deque([start])
    rules_by_state: dict[str, list[Rule]] = {}
    for rule in m.rules:
        rules_by_state.setdefault(rule.src, []).append(rule)
    while queue:
        c = queue.popleft()
        if c.word == () and c.state in m.finals:
            steps: list[tuple[Rule, int]] = []
            cur = c
            while parents[cur] is not None:
                prev, rule, pos = parents[cur]
                steps.append((rule, pos))
                cur = prev
            steps.reverse()
            return AcceptanceWitness(tuple(w), tuple(steps))
        for rule in rules_by_state.get(c.state, ()):
            for pos in _occurrences(c.word, rule.label):
                nxt = Configuration(rule.dst, c.word[:pos] + c.word[pos + len(rule.label) :])
                if nxt not in parents:
                    parents[nxt] = (c, rule, pos)
                    queue.append(nxt)
    return None


def jump_accepts(m: Gjfa, w: Word) -> bool:
    """Deletion-side acceptance."""
    return _jump_search(m, w) is not None


def acceptance_witness(m: Gjfa, w: Word) -> Optional[AcceptanceWitness]:
    """Like jump_accepts but returns the replayable witness on acceptance."""
    return _jump_search(m, w)


def generate_accepts(m: Gjfa, w: Word) -> bool:
    """Generation-side acceptance: backward walk from final states.

    From a rule (q, v, r) the walk moves r -> q, inserting v at any position.
    Words longer than the target are pruned (insertion is length-monotone);
    epsilon-labeled rules are cycle-cut by the visited set.
    """
    w = tuple(w)
    target_len = len(w)
    rules_by_dst: dict[str, list[Rule]] = {}
    for rule in m.rules:
        rules_by_dst.setdefault(rule.dst, []).append(rule)
    frontier: set[tuple[str, Word]] = {(f, ()) for f in m.finals}
    seen = set(frontier)
    queue = deque(frontier)
    while queue:
        state, u = queue.popleft()
        if state == m.initial and u == w:
            return True
        for rule in rules_by_dst.get(state, ()):
            if len(u) + len(rule.label) > target_len:
                continue
            for i in range(len(u) + 1):
                node = (rule.src, u[:i] + rule.label + u[i:])
                if node not in seen:
                    seen.add(node)
                    queue.append(node)
    return False


def enumerate_language(m: Gjfa, max_len: int) -> LangSet:
    """L(m) truncated to words of length <= max_len, by backward generation."""
    rules_by_dst: dict[str, list[Rule]] = {}
    for rule in m.rules:
        rules_by_dst.setdefault(rule.dst, []).append(rule)
    accepted: set[Word] = set()
    frontier: set[tuple[str, Word]] = {(f, ()) for f in m.finals}
    seen = set(frontier)
    queue = deque(frontier)
    while queue:
        state, u = queue.popleft()
        if state == m.initial:
            accepted.add(u)
        for rule in rules_by_dst.get(state, ()):
            if len(u) + len(rule.label) > max_len:
                continue
            for i in range(len(u) + 1):
                node = (rule.src, u[:i] + rule.label + u[i:])
                if node not in seen:
                    seen.add(node)
                    queue.append(node)
    return LangSet(accepted, max_len)
