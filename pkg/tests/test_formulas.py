from fractions import Fraction

import pytest

from liechain.errors import MalformedTypeError
from liechain.formulas import (
    BoundsOrExact,
    chain_difference,
    check_dimlen,
    check_lcd,
    check_sqrt_lower_bound,
    complex_depth_simple,
    depth,
    depth_simple,
    elem_inequalities,
    f_classical,
    is_cd_one,
    is_length_eq_depth,
    lendim_formula,
    length,
    length_complex_semisimple,
    length_simple,
    smalll_deficit,
)
from liechain.groups import SimpleType, iter_simple_types, parse_group, simple
from liechain.radicals import QuadExpr


def test_bounds_or_exact():
    exact = BoundsOrExact.exact(5)
    assert exact.is_exact and exact.exact_value == 5 and exact.to_json() == 5
    window = BoundsOrExact.bounds(4, 7)
    assert not window.is_exact and 5 in window and 8 not in window
    assert window.to_json() == {"lower": 4, "upper": 7}
    with pytest.raises(ValueError):
        BoundsOrExact(3, 2)
    with pytest.raises(ValueError):
        window.exact_value


@pytest.mark.parametrize("family,n,expected", [
    ("SU", 5, 8), ("SO", 8, 9), ("Sp", 4, 5), ("SU", 2, 2), ("SO", 7, 7),
])
def test_f_classical(family, n, expected):
    assert f_classical(family, n) == expected


def test_f_classical_range_errors():
    for family, n in [("SU", 1), ("Sp", 3), ("Sp", 2), ("SO", 6), ("G2", 2)]:
        with pytest.raises(MalformedTypeError):
            f_classical(family, n)


@pytest.mark.parametrize("spec,expected", [
    ("G2", 5), ("F4", 11), ("E6", 13), ("E7", 17), ("E8", 20),
    ("SU(3) x SU(2)", 6), ("T^7", 7), ("1", 0), ("SO(16)", 19),
])
def test_length(spec, expected):
    assert length(parse_group(spec)) == expected


def test_length_additive():
    a, b = parse_group("SU(4) x T^2"), parse_group("SO(11) x G2")
    assert length(a * b) == length(a) + length(b)


@pytest.mark.parametrize("spec,expected", [
    ("SU(2)", 3), ("G2", 10), ("E8", 136),
])
def test_length_complex(spec, expected):
    assert length_complex_semisimple(parse_group(spec)) == expected


def test_length_complex_requires_semisimple():
    with pytest.raises(ValueError):
        length_complex_semisimple(parse_group("SU(2) x T"))


def test_compact_length_below_complex():
    for s in iter_simple_types(max_degree=40):
        assert length_simple(s) < length_complex_semisimple(simple(s.family, s.degree))


@pytest.mark.parametrize("family,degree,expected", [
    ("SU", 2, 2), ("SU", 3, 3), ("SU", 4, 4), ("SU", 6, 4), ("SU", 7, 5),
    ("SU", 8, 4), ("Sp", 4, 3), ("Sp", 30, 3), ("SO", 7, 4), ("SO", 8, 4),
    ("SO", 9, 3), ("SO", 10, 4), ("SO", 11, 3), ("SO", 12, 4),
    ("G2", 0, 3), ("F4", 0, 3), ("E6", 0, 4), ("E7", 0, 3), ("E8", 0, 3),
])
def test_depth_simple_table(family, degree, expected):
    assert depth_simple(SimpleType(family, degree)) == expected


def test_depth_complex_offset_data():
    for s in iter_simple_types(max_degree=60):
        assert depth_simple(s) == complex_depth_simple(s) - 1


def test_depth_values():
    assert depth(parse_group("SU(2)^5")) == BoundsOrExact.exact(6)
    assert depth(parse_group("SU(2)^2")) == BoundsOrExact.exact(3)
    assert depth(parse_group("T^9")) == BoundsOrExact.exact(9)
    assert depth(parse_group("SO(7)^2 x T^2")) == BoundsOrExact.exact(7)
    window = depth(parse_group("SU(4) x Sp(4)"))
    assert window == BoundsOrExact.bounds(4, 7)
    assert depth(parse_group("SU(4) x Sp(4)"), refine=True) == BoundsOrExact.exact(5)
    # outside the curated set the interval stays an interval
    assert not depth(parse_group("SU(7) x SU(2)"), refine=True).is_exact


def test_rank_bounds_on_simple_lengths():
    for s in iter_simple_types(max_degree=60):
        assert 2 * s.rank <= length_simple(s) <= 3 * s.rank - 1


def test_chain_difference():
    assert chain_difference(parse_group("SU(3)")) == BoundsOrExact.exact(1)
    assert chain_difference(parse_group("SU(2)")) == BoundsOrExact.exact(0)
    for k in range(1, 6):
        assert chain_difference(parse_group(f"SU(2)^{k}")) == BoundsOrExact.exact(k - 1)
    assert chain_difference(parse_group("SU(3) x SU(2)"), refine=True) == BoundsOrExact.exact(2)


def test_length_eq_depth_predicate():
    assert is_length_eq_depth(parse_group("T^4"))
    assert is_length_eq_depth(parse_group("SU(2) x T^9"))
    assert not is_length_eq_depth(parse_group("SU(2)^2"))
    assert not is_length_eq_depth(parse_group("SU(3)"))


def test_cd_one_predicate():
    assert is_cd_one(parse_group("SU(3) x T^2"))
    assert is_cd_one(parse_group("SU(2)^2"))
    assert is_cd_one(parse_group("SU(3) x SU(2) x T"))
    assert not is_cd_one(parse_group("SU(2)^3"))
    assert not is_cd_one(parse_group("SU(4)"))


def test_check_dimlen():
    for spec in ["SU(2)", "T^5", "E8", "SO(9) x SU(2) x T"]:
        for check in check_dimlen(parse_group(spec)):
            assert check.passed, (spec, check)
    e8 = {c.claim: c for c in check_dimlen(parse_group("E8"))}
    assert "228 <= 248" in e8["dimension deficit bounds the semisimple dimension"].lhs


def test_check_sqrt_lower_bound():
    for spec in ["E8", "F4", "T", "SU(2)", "SO(11) x G2 x T^3"]:
        for check in check_sqrt_lower_bound(parse_group(spec)):
            assert check.passed, (spec, check)
    # E8 attains the bound exactly
    from liechain.formulas import sqrt_lower_bound
    assert sqrt_lower_bound(parse_group("E8")) == QuadExpr.rational(20)


@pytest.mark.parametrize("family,degree,expected", [
    ("SU", 4, 6), ("Sp", 6, 8), ("SO", 9, 10), ("SO", 8, 9), ("SO", 7, 7), ("SU", 2, 2),
])
def test_lendim_formula(family, degree, expected):
    assert lendim_formula(SimpleType(family, degree)) == QuadExpr.rational(expected)


def test_lendim_formula_rejects_exceptional():
    with pytest.raises(MalformedTypeError):
        lendim_formula(SimpleType("E6"))


def test_elem_inequalities():
    growth, sum_one, sum_alpha = elem_inequalities(3, 3)
    assert growth is True and sum_one is True and sum_alpha is None
    growth, sum_one, sum_alpha = elem_inequalities(1, 0)
    assert growth is True and sum_one is None
    growth, sum_one, sum_alpha = elem_inequalities(78, 78)
    assert sum_alpha is True
    assert elem_inequalities(Fraction(1, 2), 1) == (None, None, None)


def test_smalll_deficit():
    assert smalll_deficit((7, 7)).sign() < 0
    assert smalll_deficit((8, 7)).sign() > 0
    assert smalll_deficit((7, 7, 7)).sign() >= 0
    assert smalll_deficit((20, 7, 7, 7)).sign() > 0
    with pytest.raises(MalformedTypeError):
        smalll_deficit((7,))
    with pytest.raises(MalformedTypeError):
        smalll_deficit((7, 8))
    with pytest.raises(MalformedTypeError):
        smalll_deficit((8, 6))


def test_check_lcd_boundaries():
    for k in range(1, 6):
        checks = check_lcd(parse_group(f"SU(2)^{k}"))
        assert all(c.passed for c in checks)
    by_claim = {c.claim: c for c in check_lcd(parse_group("SO(7)"))}
    twice = by_claim["simple length at most twice chain difference plus slack"]
    assert twice.passed and "2*cd+1 = 7" in twice.rhs
    assert all(c.passed for c in check_lcd(parse_group("SU(3)")))
    assert all(c.passed for c in check_lcd(parse_group("G2")))
    assert all(c.passed for c in check_lcd(parse_group("SU(3) x SU(2)")))
    assert all(c.passed for c in check_lcd(parse_group("SO(7)^3")))


def test_check_json_schema():
    check = check_lcd(parse_group("SU(3)"))[0]
    payload = check.to_json()
    assert set(payload) == {"claim", "inputs", "lhs", "rhs", "pass"}


def test_small_depth_classification():
    # depth 1 only at the circle; depth 2 only at T^2 and SU(2)
    from liechain.groups import iter_groups

    ones, twos = [], []
    for g in iter_groups(20):
        d = depth(g, refine=True)
        assert d.is_exact
        if d.exact_value == 1:
            ones.append(str(g))
        elif d.exact_value == 2:
            twos.append(str(g))
    assert ones == ["T"]
    assert sorted(twos) == ["SU(2)", "T^2"]
