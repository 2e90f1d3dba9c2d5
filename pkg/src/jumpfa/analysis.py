"""Bounded automata comparison, the union-of-compositions falsifier, and the
JFA permutation-closure check.

The falsifier implements a necessary condition: if a language is a union of
compositions of degree n, then every non-empty member w contains a factor v
(1 <= |v| <= n) that can be re-inserted at any other position of the rest of
the word without leaving the language. A word where every factorization fails
proves that no degree-n jumping automaton accepts the language.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

from jumpfa.core import Gjfa, Nfa, Word, degree, is_jfa
from jumpfa.langops import LangSet, perm_closure
from jumpfa.semantics import enumerate_language, jump_accepts

Oracle = Callable[[Word], bool]


@dataclass(frozen=True)
class EquivReport:
    equal: bool
    bound: int
    counterexamples: tuple[Word, ...]


@dataclass(frozen=True)
class UcReport:
    """Verdict of the necessary-condition check on a single word.

    On ``passes``: ``witness`` is a factorization (u1, v, u2) whose factor v
    survives re-insertion at every split of u1u2. On ``falsified``: for every
    candidate factorization, ``violations`` records one split (x, y) with
    x v y outside the language. ``trivial`` flags n >= |w|, where v = w makes
    the condition hold whenever w itself is a member.
    """

    verdict: str  # "passes" | "falsified"
    word: Word
    degree: int
    witness: Optional[tuple[Word, Word, Word]] = None
    violations: tuple[tuple[tuple[Word, Word, Word], tuple[Word, Word]], ...] = ()
    trivial: bool = False

    @property
    def passes(self) -> bool:
        return self.verdict == "passes"


def bounded_equiv(a: Gjfa, b: Gjfa, max_len: int) -> EquivReport:
    """Compare bounded enumerations; counterexamples are the symmetric difference."""
    la = enumerate_language(a, max_len).words
    lb = enumerate_language(b, max_len).words
    diff = LangSet(la ^ lb).sorted_words()
    return EquivReport(not diff, max_len, tuple(diff))


def bounded_inclusion(a: Gjfa, b: Gjfa, max_len: int) -> EquivReport:
    """Check L(a) subset of L(b) at the bound; counterexamples from a only."""
    la = enumerate_language(a, max_len).words
    lb = enumerate_language(b, max_len).words
    diff = LangSet(la - lb).sorted_words()
    return EquivReport(not diff, max_len, tuple(diff))


def uc_condition(member: Oracle, w: Word, n: int) -> UcReport:
    """Check the degree-n re-insertion condition on w.

    Tries every factorization w = u1 v u2 with 1 <= |v| <= n (occurrences,
    not values: the same factor at two positions is two candidates). A
    factorization passes when x v y is a member for every split x y = u1 u2.
    """
    w = tuple(w)
    if not w:
        raise ValueError("the condition is vacuous on the empty word")
    if n < 1:
        raise ValueError("degree must be >= 1")
    violations = []
    for i in range(len(w)):
        for j in range(i + 1, min(i + n, len(w)) + 1):
            u1, v, u2 = w[:i], w[i:j], w[j:]
            rest = u1 + u2
            bad = None
            for cut in range(len(rest) + 1):
                x, y = rest[:cut], rest[cut:]
                if not member(x + v + y):
                    bad = (x, y)
                    break
            if bad is None:
                return UcReport("passes", w, n, witness=(u1, v, u2), trivial=n >= len(w))
            violations.append(((u1, v, u2), bad))
    return UcReport("falsified", w, n, violations=tuple(violations))


def uc_sweep(member: Oracle, words: LangSet, n: int) -> list[UcReport]:
    """Apply uc_condition to each word, in canonical order."""
    return [uc_condition(member, w, n) for w in words]


def uc_soundness_check(m: Gjfa, max_len: int) -> bool:
    """Every accepted non-empty word must pass the condition at the automaton's degree.

    A falsification here would contradict the fact that every jumping-automaton
    language is a union of compositions of its degree.
    """
    n = max(degree(m), 1)

    @lru_cache(maxsize=None)
    def member(w: Word) -> bool:
        return jump_accepts(m, w)

    for w in enumerate_language(m, max_len):
        if w and not uc_condition(member, w, n).passes:
            return False
    return True


def gjfa_as_nfa(m: Gjfa) -> Nfa:
    """Read a degree-<=1 automaton as a classical NFA (eps labels are eps moves)."""
    if not is_jfa(m):
        raise ValueError(f"degree {degree(m)} > 1: not a jumping finite automaton")
    transitions = {(r.src, r.label[0] if r.label else None, r.dst) for r in m.rules}
    return Nfa(m.states, m.alphabet, transitions, m.initial, m.finals)


def jfa_permutation_check(m: Gjfa, max_len: int) -> bool:
    """Jumping language equals the permutation closure of the classical NFA language."""
    nfa = gjfa_as_nfa(m)
    regular = LangSet(nfa.enumerate_bounded(max_len), max_len)
    closed = LangSet(
        (w for w in perm_closure(regular).words if len(w) <= max_len), max_len
    )
    return enumerate_language(m, max_len) == closed
