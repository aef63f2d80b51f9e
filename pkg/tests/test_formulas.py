from fractions import Fraction

import pytest

from oracles import admissible_oracle, pairs_of_size_two_product
from tropical_moduli import (
    HEAVY_LIGHT_TABLE,
    MissingTopWeightEntry,
    WeightVector,
    admissible_partitions,
    build_top_weight_table,
    euler_bernoulli,
    euler_from_cells,
    euler_from_top_weight,
    euler_heavy_light,
    grothendieck_decomposition,
    heavy_light_weights,
    parse_weight_spec,
    restricted_stirling2,
    stirling2,
    top_weight_euler,
)
from tropical_moduli.formulas import TopWeightTable


def test_admissible_partitions_all_heavy():
    w = parse_weight_spec("1,1,eps")
    assert admissible_partitions(w, 3) == 1
    assert admissible_partitions(w, 2) == 0
    assert admissible_partitions(w, 1) == 0


def test_admissible_partitions_half_weights():
    w = WeightVector([Fraction(1, 2)] * 4)
    assert admissible_partitions(w, 2) == 3
    w3 = WeightVector([Fraction(1, 2)] * 3)
    assert grothendieck_decomposition(1, w3) == [(2, 3), (3, 1)]


def test_admissible_matches_brute_force_oracle():
    cases = [
        parse_weight_spec("1,1,eps"),
        parse_weight_spec("1/2^4"),
        parse_weight_spec("1/3^5"),
        parse_weight_spec("1,1/2,1/3,1/4"),
        heavy_light_weights(2, 3),
    ]
    for w in cases:
        for r in range(1, len(w) + 1):
            assert admissible_partitions(w, r) == admissible_oracle(list(w), r)


def test_heavy_light_counts_are_stirling_numbers():
    for n in range(1, 6):
        for m in range(1, 6):
            w = heavy_light_weights(n, m)
            for r in range(1, m + 1):
                assert admissible_partitions(w, n + r) == stirling2(m, r)
            # no admissible partition merges heavy markings
            for r in range(1, n + 1):
                assert admissible_partitions(w, r) == 0 or r > n


def test_uniform_fraction_counts_are_restricted_stirling():
    for m in (2, 3):
        for n in range(1, 9):
            w = WeightVector([Fraction(1, m)] * n)
            for r in range(1, n + 1):
                assert admissible_partitions(w, r) == restricted_stirling2(
                    n, r, m
                )


def test_size_two_product_formula():
    for n in range(1, 11):
        for r in range((n + 1) // 2, n + 1):
            assert restricted_stirling2(n, r, 2) == pairs_of_size_two_product(
                n, r
            )


def test_unit_weights_have_discrete_decomposition():
    for n in (2, 3, 4):
        w = parse_weight_spec(f"1^{n}")
        assert grothendieck_decomposition(1, w) == [(n, 1)]


def test_heavy_light_decomposition():
    for n in (2, 3):
        for m in (1, 2, 3):
            w = heavy_light_weights(n, m)
            expected = [
                (n + r, stirling2(m, r)) for r in range(1, m + 1) if stirling2(m, r)
            ]
            assert grothendieck_decomposition(1, w) == expected


def test_top_weight_closed_form_examples():
    # g=1, r=3: (-1)^4 * 2! * B_1 = -1
    assert top_weight_euler(1, 3, "closed-form") == -1
    # g=0, r=4: (-1)^5 * 2!/0! * B_0 = -2
    assert top_weight_euler(0, 4, "closed-form") == -2
    with pytest.raises(ValueError):
        top_weight_euler(1, 2, "closed-form")  # out of validity range


def test_top_weight_both_modes_agree():
    for g, r in [(1, 3), (0, 4), (0, 5), (1, 4)]:
        assert top_weight_euler(g, r, "from-delta") == top_weight_euler(
            g, r, "closed-form"
        )


def test_missing_table_entry_names_offending_r():
    table = TopWeightTable(g=1, values={}, provenance={})
    with pytest.raises(MissingTopWeightEntry) as err:
        euler_from_top_weight(1, parse_weight_spec("1,1"), table)
    assert err.value.r == 2


def test_heavy_light_euler_examples():
    assert euler_heavy_light(0, 3, 2) == -3
    assert euler_heavy_light(1, 5, 4) == 7501
    assert euler_heavy_light(2, 6, 4) == 144061
    with pytest.raises(ValueError):
        euler_heavy_light(1, 1, 2)  # requires n > g


def test_full_golden_table():
    for (g, n, m), value in HEAVY_LIGHT_TABLE.items():
        if value is None:
            continue
        assert euler_heavy_light(g, n, m) == value, (g, n, m)


def test_genus_three_rows_are_all_one():
    for n in range(4, 8):
        for m in range(1, 5):
            assert euler_heavy_light(3, n, m) == 1


def test_formula_pipeline_matches_direct(cached):
    for g, spec in [
        (1, "1,1"),
        (1, "1/2^3"),
        (1, "1,1,eps"),
        (2, "1"),
        (0, "1^4"),
        (1, "eps^3"),
    ]:
        w = parse_weight_spec(spec)
        direct = euler_from_cells(cached.complex(g, spec))
        rs = [r for r, _n in grothendieck_decomposition(g, w)]
        table = build_top_weight_table(g, rs)
        assert euler_from_top_weight(g, w, table) == direct, (g, spec)


def test_bernoulli_closed_form_agrees_when_valid(cached):
    # cases with N_r = 0 for r <= g + 1
    for g, spec in [(1, "1,1,eps"), (0, "1^4"), (1, "1/2^3")]:
        w = parse_weight_spec(spec)
        if any(r <= g + 1 for r, _n in grothendieck_decomposition(g, w)):
            continue
        assert euler_bernoulli(g, w) == euler_from_cells(cached.complex(g, spec))


def test_bernoulli_closed_form_rejects_small_blocks():
    with pytest.raises(ValueError):
        euler_bernoulli(1, parse_weight_spec("eps^3"))  # N_1 > 0


def test_weight_spec_parsing():
    w = parse_weight_spec("1^3,eps^2")
    assert list(w) == [1, 1, 1, Fraction(1, 3), Fraction(1, 3)]
    assert list(parse_weight_spec("1,1,1/2")) == [1, 1, Fraction(1, 2)]
    with pytest.raises(ValueError):
        parse_weight_spec("")
    with pytest.raises(ValueError):
        parse_weight_spec("2,1")


def test_heavy_light_weights_preset():
    w = heavy_light_weights(2, 3)
    assert list(w) == [1, 1, Fraction(1, 4), Fraction(1, 4), Fraction(1, 4)]
