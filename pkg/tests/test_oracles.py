import pytest

from kostka.oracles import (
    ContentMismatch,
    Tableau,
    charge,
    enumerate_ssyt,
    is_semistandard,
    kostka_number,
    kostka_via_charge,
    reading_word,
)
from kostka.partitions import dominates, partitions_of
from kostka.polynomials import ONE, TPoly


# --- enumeration ---

def test_enumerate_small_fixtures():
    two = enumerate_ssyt((2, 1), (1, 1, 1))
    assert two == [Tableau([[1, 2], [3]]), Tableau([[1, 3], [2]])]
    for n in range(1, 6):
        assert enumerate_ssyt((n,), (n,)) == [Tableau([[1] * n])]
    assert enumerate_ssyt((), ()) == [Tableau([])]


def test_enumerate_empty_on_invalid_pairs():
    assert enumerate_ssyt((2, 1), (3, 1)) == []          # dominance fails
    assert enumerate_ssyt((2, 1), (2, 2)) == []          # weight mismatch
    assert enumerate_ssyt((1, 1), (2,)) == []


def test_enumerate_is_valid_unique_and_sorted():
    for n in range(7):
        ps = list(partitions_of(n))
        for shape in ps:
            for content in ps:
                found = enumerate_ssyt(shape, content)
                assert len(set(found)) == len(found)
                assert found == sorted(found, key=lambda t: t.rows)
                for t in found:
                    assert is_semistandard(t)
                    assert t.shape == shape
                    assert t.content == content


def test_tableau_json_form():
    t = Tableau([[1, 1, 2], [2, 3], [4]])
    assert t.to_json_obj() == {"shape": [3, 2, 1], "rows": [[1, 1, 2], [2, 3], [4]]}


# --- reading word ---

def test_reading_word():
    assert reading_word(Tableau([[1, 2], [3]])) == (2, 1, 3)
    assert reading_word(Tableau([[1, 3], [2]])) == (3, 1, 2)
    assert reading_word(Tableau([[1, 1, 2]])) == (2, 1, 1)
    assert reading_word(Tableau([])) == ()


# --- charge ---

def test_charge_fixed_values():
    assert charge((2, 1, 3), (1, 1, 1)) == 2
    assert charge((3, 1, 2), (1, 1, 1)) == 1
    assert charge((1,) * 4, (4,)) == 0
    assert charge((), ()) == 0


def test_charge_rejects_content_mismatch():
    with pytest.raises(ContentMismatch):
        charge((1, 1, 2), (1, 1, 1))
    with pytest.raises(ContentMismatch):
        charge((1, 3), (1, 1))


def test_charge_extreme_words():
    for n in range(1, 8):
        col = (1,) * n
        row_tab = enumerate_ssyt((n,), col)
        col_tab = enumerate_ssyt(col, col)
        assert len(row_tab) == len(col_tab) == 1
        assert charge(reading_word(row_tab[0]), col) == n * (n - 1) // 2
        assert charge(reading_word(col_tab[0]), col) == 0


def test_charge_bounded_for_standard_words():
    n = 5
    col = (1,) * n
    for shape in partitions_of(n):
        for t in enumerate_ssyt(shape, col):
            assert 0 <= charge(reading_word(t), col) <= n * (n - 1) // 2


# --- generating function ---

def test_kostka_via_charge_fixtures():
    assert kostka_via_charge((2, 1), (1, 1, 1)) == TPoly({1: 1, 2: 1})
    assert kostka_via_charge((3, 2, 1), (2, 2, 1, 1)) == TPoly({1: 1, 2: 2, 3: 1})
    for n in range(1, 7):
        assert kostka_via_charge((n,), (1,) * n) == TPoly({n * (n - 1) // 2: 1})
    assert kostka_via_charge((), ()) == ONE


# --- counting recursion ---

def test_kostka_number_fixtures():
    assert kostka_number((3, 2, 1), (2, 2, 1, 1)) == 4
    assert kostka_number((6, 4, 3, 2), (3,) + (1,) * 12) == 35035
    for shape in partitions_of(5):
        assert kostka_number(shape, (5,)) == (1 if shape == (5,) else 0)
    assert kostka_number((2, 2), (2, 1)) == 0


def test_kostka_number_matches_enumeration():
    for n in range(9):
        ps = list(partitions_of(n))
        for shape in ps:
            for content in ps:
                assert kostka_number(shape, content) == len(enumerate_ssyt(shape, content))


def test_kostka_number_vanishes_with_dominance():
    for n in range(9):
        ps = list(partitions_of(n))
        for shape in ps:
            for content in ps:
                assert (kostka_number(shape, content) > 0) == dominates(shape, content)
