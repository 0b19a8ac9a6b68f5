from itertools import product

import pytest

from superlie import (
    Alphabet,
    AlphabetError,
    AssocWord,
    WordError,
    cyclic_rotations,
    deglex_less,
    find_occurrences,
    leaf,
    lex_less,
    node,
    rho,
)

AL = Alphabet(("y", "x"), (0, 0))  # y < x


def w(text):
    return AL.word(text)


def all_words(alphabet, max_len):
    for n in range(max_len + 1):
        for idx in product(range(alphabet.size), repeat=n):
            yield AssocWord(alphabet, idx)


def test_alphabet_rejects_duplicates_and_bad_names():
    with pytest.raises(AlphabetError):
        Alphabet(("x", "x"), (0, 0))
    with pytest.raises(AlphabetError):
        Alphabet(("ok", "no!"), (0, 0))
    with pytest.raises(AlphabetError):
        Alphabet(("x",), (2,))


def test_rho_examples():
    x, y = leaf(AL, "x"), leaf(AL, "y")
    assert rho(x) == w("x")
    assert rho(node(x, y)) == w("xy")
    assert rho(node(node(x, y), y)) == w("xyy")


def test_rho_is_a_homomorphism():
    x, y = leaf(AL, "x"), leaf(AL, "y")
    pieces = [x, y, node(x, y), node(node(x, y), y), node(x, node(x, y))]
    for a in pieces:
        for b in pieces:
            assert rho(node(a, b)) == rho(a) + rho(b)


def test_lex_less_examples():
    assert lex_less(w("xy"), w("x"))       # proper prefix is greater
    assert lex_less(w("yx"), w("xy"))
    assert not lex_less(w("x"), w("x"))
    assert lex_less(w("xyx"), AL.empty_word())  # empty word is the maximum
    assert not lex_less(AL.empty_word(), w("y"))


def test_deglex_less_examples():
    assert deglex_less(w("x"), w("yy"))
    assert deglex_less(w("yx"), w("xy"))
    assert not deglex_less(w("xy"), w("x"))


@pytest.mark.parametrize("less", [lex_less, deglex_less])
def test_orders_are_strict_total_orders(less):
    words = list(all_words(AL, 4))
    for u in words:
        assert not less(u, u)
    for u in words:
        for v in words:
            if u == v:
                continue
            assert less(u, v) != less(v, u)
    import random
    rng = random.Random(7)
    for _ in range(4000):
        u, v, t = rng.choice(words), rng.choice(words), rng.choice(words)
        if less(u, v) and less(v, t):
            assert less(u, t)


def test_deglex_sorting_is_unique_and_matches_key():
    words = list(all_words(AL, 4))
    by_key = sorted(words, key=lambda u: u.deglex_key)
    for a, b in zip(by_key, by_key[1:]):
        assert deglex_less(a, b) or a == b
    # no two distinct words tie
    assert len({u.deglex_key for u in words}) == len(words)


def test_cyclic_rotations():
    assert [str(r) for r in cyclic_rotations(w("xy"))] == ["xy", "yx"]
    assert [str(r) for r in cyclic_rotations(w("x"))] == ["x"]
    assert [str(r) for r in cyclic_rotations(w("xyy"))] == ["xyy", "yyx", "yxy"]
    with pytest.raises(WordError):
        cyclic_rotations(AL.empty_word())


def test_find_occurrences():
    occ = find_occurrences(w("x"), w("xyx"))
    assert [(str(a), str(b)) for a, b in occ] == [("1", "yx"), ("xy", "1")]
    assert [(str(a), str(b)) for a, b in find_occurrences(w("xy"), w("xy"))] \
        == [("1", "1")]
    occ = find_occurrences(w("xx"), w("xxx"))
    assert [(str(a), str(b)) for a, b in occ] == [("1", "x"), ("x", "1")]
    assert find_occurrences(w("yy"), w("xyx")) == []


def test_occurrence_factorizations_recompose():
    words = [u for u in all_words(AL, 5) if not u.is_empty]
    for u in words:
        for v in words:
            for a, b in find_occurrences(v, u):
                assert a + v + b == u


def test_words_are_values():
    assert w("xy") == w("xy")
    assert hash(w("xy")) == hash(w("xy"))
    assert w("xy") != w("yx")
    other = Alphabet(("y", "x"), (0, 1))
    assert other.word("xy") != w("xy")
    with pytest.raises(AlphabetError):
        lex_less(other.word("x"), w("x"))


def test_parity_is_letter_sum():
    graded = Alphabet(("y", "x"), (1, 0))
    assert graded.word("xy").parity == 1
    assert graded.word("yy").parity == 0
    assert graded.empty_word().parity == 0
