import itertools

import pytest

from jumpfa.core import degree, validate, word
from jumpfa.corpus import (
    corpus_automata,
    corpus_get,
    corpus_list,
    sigma_star_gjfa,
    unitary_gjfa,
)
from jumpfa.langops import (
    dyck_bounded,
    insert_star_bounded,
    langset,
    semi_dyck_bounded,
)
from jumpfa.semantics import enumerate_language


def test_thm1_entry():
    m = corpus_get("thm1_m").value
    assert len(m.states) == 2
    assert {(r.src, r.label, r.dst) for r in m.rules} == {
        ("q", word("abar.a"), "q"),
        ("q", word("a.abar"), "r"),
    }
    assert m.finals == {"r"}


def test_invhom_entry():
    m = corpus_get("invhom_m").value
    assert {(r.src, r.label, r.dst) for r in m.rules} == {
        ("q", word("a1.a1bar"), "q"),
        ("q", word("a2.a2bar"), "q"),
        ("q", word("a1bar.a1"), "r"),
    }


def test_equal_counts_entry():
    m = corpus_get("equal_counts_jfa").value
    assert len(m.states) == 3
    assert m.initial == "q0" and m.finals == {"q0"}
    assert degree(m) == 1


def test_unknown_name():
    with pytest.raises(KeyError):
        corpus_get("no_such_entry")


def test_corpus_list_contents():
    listing = corpus_list()
    names = [name for name, _, _ in listing]
    assert len(names) == len(set(names))
    assert "thm1_m" in names
    assert "phi_thm4" in names
    phi = corpus_get("phi_thm4").value
    assert phi.mapping == {"a": word("a1bar.a2"), "b": word("a2bar.a1")}


def test_all_corpus_automata_validate():
    for name, m in corpus_automata():
        assert validate(m) == [], name


def test_invhom_language_matches_fragment_concatenation():
    # independent generator: D2 a1bar D2 a1 D2 assembled from bounded pieces
    d2 = list(semi_dyck_bounded(2, 6))
    expected = set()
    for u1, u2, u3 in itertools.product(d2, repeat=3):
        w = u1 + ("a1bar",) + u2 + ("a1",) + u3
        if len(w) <= 6:
            expected.add(w)
    m = corpus_get("invhom_m").value
    assert enumerate_language(m, 6) == expected


def test_dyck_gjfa_language():
    m = corpus_get("dyck_gjfa").value
    for k in (4, 8, 10):
        assert enumerate_language(m, k) == dyck_bounded(k)


def test_equal_counts_language():
    m = corpus_get("equal_counts_jfa").value
    expected = set()
    for n in range(7):
        for w in itertools.product("abc", repeat=n):
            if w.count("a") == w.count("b") == w.count("c"):
                expected.add(w)
    assert enumerate_language(m, 6) == expected


def test_sigma_star_builder():
    m = sigma_star_gjfa({"a", "b"})
    expected = set()
    for n in range(4):
        expected.update(itertools.product(["a", "b"], repeat=n))
    assert enumerate_language(m, 3) == expected


def test_unitary_builder():
    base = word("b")
    k = langset("a.a")
    m = unitary_gjfa(base, k)
    assert enumerate_language(m, 5) == insert_star_bounded(langset("b"), k, 5)


def test_predicates_are_automaton_independent():
    ab_star = corpus_get("ab_star").value
    assert ab_star(())
    assert ab_star(word("a.b.a.b"))
    assert not ab_star(word("b.a"))
    equal_counts = corpus_get("equal_counts").value
    assert equal_counts(word("c.b.a"))
    assert not equal_counts(word("a.a"))
    assert not equal_counts(word("a.b.c.d"))
