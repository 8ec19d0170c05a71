from fractions import Fraction
from math import factorial

import pytest

from qstein.algebraic import make, rational
from qstein.an_chars import (
    AnCharLabel,
    AnClass,
    an_character_table,
    an_classes,
    an_labels,
    an_nonzero,
    an_value,
    canonical_down,
)
from qstein.partitions import conjugate, partitions_of
from qstein.sn_chars import mn_value

from conftest import an_elements, conjugacy_classes, perm_cycle_type


def brute_an_classes(n):
    elems = an_elements(n)
    return conjugacy_classes(elems, elems)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_an_classes_match_brute_force(n):
    brute = brute_an_classes(n)
    by_type = {}
    for cls in brute:
        alpha = perm_cycle_type(min(cls))
        by_type.setdefault(alpha, []).append(len(cls))
    got = {}
    for cls in an_classes(n):
        got.setdefault(cls.alpha, []).append((cls.tag, cls.size))
    assert set(got) == set(by_type)
    for alpha, sizes in by_type.items():
        tags = got[alpha]
        if len(sizes) == 2:
            assert sizes[0] == sizes[1]
            assert sorted(t for t, _ in tags) == ["minus", "plus"]
            assert all(s == sizes[0] for _, s in tags)
        else:
            assert tags == [("plain", sizes[0])]


def test_an_class_sizes_sum():
    for n in range(2, 11):
        assert sum(c.size for c in an_classes(n)) == factorial(n) // 2


def test_an_classes_example_order():
    got = [(str(c), c.size) for c in an_classes(5)]
    assert got == [
        ("1,1,1,1,1", 1),
        ("2,2,1", 15),
        ("3,1,1", 20),
        ("5+", 12),
        ("5-", 12),
    ]


def test_label_enumeration_and_validation():
    labels = an_labels(4)
    assert [str(label) for label in labels] == ["2,2:+", "2,2:-", "3,1:down", "4:down"]
    with pytest.raises(ValueError):
        AnCharLabel((3, 1), "plus")  # not self-conjugate
    with pytest.raises(ValueError):
        AnCharLabel((2, 2), "down")  # self-conjugate
    assert canonical_down((2, 1, 1)) == (3, 1)


def test_golden_split_values():
    classes = {str(c): c for c in an_classes(5)}
    label_plus = AnCharLabel((3, 1, 1), "plus")
    label_minus = AnCharLabel((3, 1, 1), "minus")
    golden = make(Fraction(1, 2), Fraction(1, 2), 0, 5)
    other = make(Fraction(1, 2), Fraction(-1, 2), 0, 5)
    assert an_value(label_plus, classes["5+"]) == golden
    assert an_value(label_minus, classes["5-"]) == golden
    assert an_value(label_plus, classes["5-"]) == other
    assert an_value(label_minus, classes["5+"]) == other
    assert str(other) == "(1 - √5)/2"


def test_half_and_down_values():
    classes4 = {str(c): c for c in an_classes(4)}
    assert an_value(AnCharLabel((2, 2), "plus"), classes4["1,1,1,1"]) == rational(1)
    classes5 = {str(c): c for c in an_classes(5)}
    assert an_value(AnCharLabel((4, 1), "down"), classes5["3,1,1"]) == rational(1)


def test_a3_table_is_cyclic_group_table():
    # A_3 is cyclic of order 3: nontrivial characters take the two primitive
    # cube roots of unity on the split 3-cycle classes
    classes = {str(c): c for c in an_classes(3)}
    omega = make(Fraction(-1, 2), Fraction(1, 2), 1, 3)
    omega_bar = omega.conjugate()
    plus = AnCharLabel((2, 1), "plus")
    minus = AnCharLabel((2, 1), "minus")
    assert an_value(plus, classes["3+"]) == omega
    assert an_value(plus, classes["3-"]) == omega_bar
    assert an_value(minus, classes["3+"]) == omega_bar
    assert an_value(minus, classes["3-"]) == omega
    assert an_value(plus, classes["1,1,1"]) == rational(1)


def test_restriction_sum():
    for n in range(2, 10):
        for lam in partitions_of(n):
            if conjugate(lam) != lam:
                continue
            plus = AnCharLabel(lam, "plus")
            minus = AnCharLabel(lam, "minus")
            for cls in an_classes(n):
                total = an_value(plus, cls) + an_value(minus, cls)
                assert total == rational(mn_value(lam, cls.alpha))


def test_split_class_swap():
    for n in range(3, 10):
        split = [c for c in an_classes(n) if c.tag == "plus"]
        for cls_plus in split:
            cls_minus = AnClass(cls_plus.alpha, "minus", cls_plus.size)
            for lam in partitions_of(n):
                if conjugate(lam) != lam:
                    continue
                assert an_value(AnCharLabel(lam, "plus"), cls_plus) == an_value(
                    AnCharLabel(lam, "minus"), cls_minus
                )
                assert an_value(AnCharLabel(lam, "plus"), cls_minus) == an_value(
                    AnCharLabel(lam, "minus"), cls_plus
                )


def test_first_orthogonality_over_an():
    for n in range(3, 9):
        order = rational(factorial(n) // 2)
        for label in an_labels(n):
            total = rational(0)
            for cls in an_classes(n):
                v = an_value(label, cls)
                total = total + rational(cls.size) * (v * v.conjugate())
            assert total == order, (n, str(label))


def test_nonzero_matches_value():
    for n in range(3, 9):
        for label in an_labels(n):
            for cls in an_classes(n):
                assert an_nonzero(label, cls) == (
                    not an_value(label, cls).is_zero()
                )


def test_down_label_conjugation_invariance():
    # chi restricted from lam and from its conjugate agree on even classes
    for n in range(3, 9):
        for lam in partitions_of(n):
            mu = conjugate(lam)
            if mu <= lam:
                continue
            for cls in an_classes(n):
                assert mn_value(lam, cls.alpha) == mn_value(mu, cls.alpha)


def test_known_vanishing_in_a6():
    # the restricted (5,1) character vanishes on both split classes of
    # 5-cycles in A_6
    classes = {str(c): c for c in an_classes(6)}
    label = AnCharLabel((5, 1), "down")
    for key in ("5,1+", "5,1-"):
        assert not an_nonzero(label, classes[key])
        assert an_value(label, classes[key]).is_zero()


def test_size_mismatch_rejected():
    cls5 = an_classes(5)[0]
    with pytest.raises(ValueError):
        an_value(AnCharLabel((2, 2), "plus"), cls5)
    with pytest.raises(ValueError):
        an_nonzero(AnCharLabel((2, 2), "plus"), cls5)


def test_an_table_shape():
    table = an_character_table(5)
    assert table.row_labels == (
        "3,1,1:+",
        "3,1,1:-",
        "3,2:down",
        "4,1:down",
        "5:down",
    )
    assert table.col_labels == ("1,1,1,1,1", "2,2,1", "3,1,1", "5+", "5-")
    assert "(1 + √5)/2" in table.to_csv()
