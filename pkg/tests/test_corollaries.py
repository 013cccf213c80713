import pytest

from acmbundles.acm import is_acm
from acmbundles.corollaries import families_for, validate_corollaries
from acmbundles.lie import FlagSpace

from conftest import all_spaces


def test_b5_k3_high_family_is_exact():
    X = FlagSpace("B", 5, 3)
    for a4 in range(6):
        for a5 in range(9):
            assert is_acm(X, (0, 0, 0, a4, a5)).is_acm == (a4 <= 2 and a5 <= 5)


def test_c4_k2_low_family():
    X = FlagSpace("C", 4, 2)
    assert all(is_acm(X, (a, 0, 0, 0)).is_acm for a in range(6))


def test_og_5_11_in_middle_family():
    X = FlagSpace("B", 5, 5)
    fam = {f.name: f for f in families_for(X)}["B k=n middle nodes"]
    assert fam.region({2: 1, 3: 1})
    assert is_acm(X, (0, 1, 1, 0, 0)).is_acm


def test_which_families_apply():
    names = lambda X: [f.name for f in families_for(X)]
    assert names(FlagSpace("B", 5, 1)) == ["k=1 classification"]
    assert names(FlagSpace("B", 5, 3)) == ["B low nodes", "B high nodes"]
    assert names(FlagSpace("C", 4, 4)) == ["C low nodes", "C high nodes"]
    assert names(FlagSpace("D", 6, 2)) == ["D low nodes", "D high nodes"]
    assert names(FlagSpace("D", 6, 6)) == ["D k=n middle nodes", "D k=n end nodes"]


@pytest.mark.parametrize("X", all_spaces(6), ids=str)
def test_no_violations(X):
    for check in validate_corollaries(X):
        assert check.ok, check.summary()
        assert check.inside >= 1


def test_margin_reaches_outside_the_box():
    (low, high) = validate_corollaries(FlagSpace("B", 5, 3), margin=2)
    assert high.swept == 5 * 8 and high.inside == 3 * 6
    assert low.swept == 7 * 7 and low.inside == 5 * 5
