import pytest

from conftest import DIST1, DIST2

from cyclotome.cli import _sweep_candidates
from cyclotome.code import brute_distribution, build_code, semi_analytic_distribution
from cyclotome.fields import build_tower
from cyclotome.theorem import (
    NotApplicable,
    NotApplicableError,
    TheoremCase,
    classify,
    instantiate_table,
    table_distribution,
)


def test_classify_desk_sets(set1, set2, set3):
    assert set1.case == TheoremCase(j=1, gamma=1, case_major=2, case_minor=1, sqrt_r=7, N=2)
    assert set1.case.label == "2.1"
    assert set2.case == TheoremCase(j=1, gamma=3, case_major=2, case_minor=2, sqrt_r=8, N=3)
    assert set2.case.label == "2.2"
    # gamma, p, (p+1)/2 all odd and g an N-th power
    assert set3.case == TheoremCase(j=1, gamma=1, case_major=1, case_minor=1, sqrt_r=13, N=2)


def test_classify_not_applicable_reasons(set1):
    e2 = build_code(set1.tower, 6, 2)
    out = classify(e2)
    assert isinstance(out, NotApplicable) and "e = 2" in out.reason

    n1 = build_code(set1.tower, 6, 3)  # N = gcd(2, 3) = 1
    out = classify(n1)
    assert isinstance(out, NotApplicable) and "N = 1" in out.reason

    # p = 1 mod N for every power: no j exists (N = 4 needs p**j = -1)
    tower = build_tower(13, 1, 4)
    params = build_code(tower, 3, 3)
    assert params.N == 4
    out = classify(params)
    assert isinstance(out, NotApplicable) and "no j" in out.reason


def test_table_distribution_frozen(set1, set2):
    assert table_distribution(set1.case, set1.params).counts == DIST1
    assert table_distribution(set2.case, set2.params).counts == DIST2


def test_table_merges_colliding_weights(set2):
    # two distinct rows of the minor-2 table land on weight 36: 189 + 63
    dist = table_distribution(set2.case, set2.params)
    assert dist.counts[36] == 252


def test_table_total_is_r_squared(set1, set2, set3):
    for desk in (set1, set2, set3):
        dist = table_distribution(desk.case, desk.params)
        assert dist.total() == desk.tower.r ** 2
        dist.validate(desk.params)


def test_three_routes_agree_on_major_case_1(set3):
    table = table_distribution(set3.case, set3.params)
    semi = semi_analytic_distribution(set3.params, set3.case)
    brute = brute_distribution(set3.params)
    assert table == semi == brute


def test_case_mismatch_is_rejected(set1, set2):
    with pytest.raises(NotApplicableError):
        table_distribution(set2.case, set1.params)
    stale = TheoremCase(j=1, gamma=1, case_major=2, case_minor=2, sqrt_r=7, N=2)
    with pytest.raises(NotApplicableError):
        table_distribution(stale, set1.params)


def test_instantiate_table_guards():
    tower = build_tower(7, 1, 3)  # odd degree: sqrt(r) not an integer
    params = build_code(tower, 3, 3)
    with pytest.raises(NotApplicableError):
        instantiate_table(1, 1, params)
    params2 = build_code(build_tower(7, 1, 2), 3, 3)
    with pytest.raises(NotApplicableError):
        instantiate_table(2, 1, params2)  # gamma required for the sign
    with pytest.raises(NotApplicableError):
        instantiate_table(3, 1, params2, gamma=1)


def test_zero_frequency_rows_are_dropped(set1):
    # raw substitution of the minor-2 table at N = 2 empties its last row
    dist = instantiate_table(1, 2, set1.params)
    assert all(freq > 0 for freq in dist.counts.values())
    assert len(dist.counts) == 6  # five surviving rows plus the zero weight


def test_n2_tables_coincide(set1, set3):
    # both N = 2 sign patterns instantiate to the same distribution
    for desk in (set1, set3):
        t11 = instantiate_table(1, 1, desk.params)
        t21 = instantiate_table(2, 1, desk.params, gamma=desk.case.gamma)
        assert t11 == t21 == table_distribution(desk.case, desk.params)


def test_semi_equals_table_across_small_sweep():
    # every applicable parameter set with r <= 2500: symbolic table rows
    # against period-and-count assembly, no codeword enumeration involved
    import math

    checked = 0
    labels = set()
    for p, s, m, h in _sweep_candidates(2500, 3):
        if math.gcd(m, 3 * (p**s - 1) // h) < 2:
            continue  # N = 1, never applicable; skip the tower build
        params = build_code(build_tower(p, s, m), h, 3)
        case = classify(params)
        if isinstance(case, NotApplicable):
            continue
        table = table_distribution(case, params)
        semi = semi_analytic_distribution(params, case)
        assert table == semi, (p, s, m, h)
        table.validate(params)
        labels.add(case.label)
        checked += 1
    assert checked >= 6
    assert {"1.1", "2.1", "2.2"} <= labels


def test_table_equals_semi_at_r4096():
    # N = 3 with gamma even, above the small-sweep bound; still no brute force
    params = build_code(build_tower(2, 2, 6), 3, 3)
    case = classify(params)
    assert (case.label, case.gamma) == ("2.2", 6)
    table = table_distribution(case, params)
    semi = semi_analytic_distribution(params, case)
    assert table == semi
    table.validate(params)
