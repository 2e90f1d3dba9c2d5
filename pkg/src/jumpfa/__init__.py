"""Workbench for general jumping finite automata (GJFA).

Provides automata types and both acceptance semantics (factor deletion and
generation by insertion along accepting paths), finite-language insertion
operators, automaton constructions, a falsifier for the union-of-compositions
necessary condition, and conversions to graph-controlled insertion systems
and regular-control semicontextual grammars.
"""

from jumpfa.core import Gjfa, Nfa, Rule, word, word_str
from jumpfa.langops import LangSet

__all__ = ["Gjfa", "Nfa", "Rule", "LangSet", "word", "word_str"]
