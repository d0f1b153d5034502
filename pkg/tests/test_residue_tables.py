from __future__ import annotations

import pytest

from powerfib.errors import OutOfDomainError
from powerfib.fibcore import fib_exact
from powerfib.oracle import sequence_prefix
from powerfib.residue_tables import (
    case_breakdown,
    residues_e1,
    residues_e2,
    residues_general,
)

# Full periods for the first nontrivial moduli (F_4 = 3 up to F_7 = 13).
# Small enough to check by hand against the recurrence.
E1_GOLDEN = {
    4: (0, 1, 1, 2, 0, 2, 2, 1),
    5: (0, 1, 1, 2, 3, 0, 3, 3, 1, 4, 0, 4, 4, 3, 2, 0, 2, 2, 4, 1),
    6: (0, 1, 1, 2, 3, 5, 0, 5, 5, 2, 7, 1),
    7: (0, 1, 1, 2, 3, 5, 8, 0, 8, 8, 3, 11, 1, 12, 0, 12, 12, 11, 10, 8, 5, 0, 5, 5, 10, 2, 12, 1),
}
E2_GOLDEN = {
    6: (0, 1, 1, 4, 1, 1),
    7: (0, 1, 1, 4, 9, 12, 12, 0, 12, 12, 9, 4, 1, 1),
}


def test_e1_golden_tables():
    for j, expected in E1_GOLDEN.items():
        table = residues_e1(j)
        assert table.residues == expected, j
        assert table.period == len(expected)
        assert table.modulus == fib_exact(j)


def test_e2_golden_tables():
    for j, expected in E2_GOLDEN.items():
        assert residues_e2(j).residues == expected, j


def test_e2_j8():
    # squares of 0,1,1,2,3,5,8,13 reduced mod F_8 = 21
    assert residues_e2(8).residues == (0, 1, 1, 4, 9, 4, 1, 1)


def test_period_lengths_by_parity():
    for j in range(4, 31):
        e1, e2 = residues_e1(j), residues_e2(j)
        if j % 2 == 0:
            assert e1.period == 2 * j and e2.period == j
        else:
            assert e1.period == 4 * j and e2.period == 2 * j
        assert len(e1.residues) == e1.period
        assert len(e2.residues) == e2.period


def test_tables_start_zero_one_and_stay_in_range():
    for j in range(4, 31):
        for table in (residues_e1(j), residues_e2(j), residues_general(j, 3)):
            assert table.residues[0] == 0
            assert table.residues[1] == 1
            assert all(0 <= r < table.modulus for r in table.residues)


def test_e1_matches_modular_iteration():
    # closed-form assembly vs plain stepped residues, entry by entry
    for j in range(4, 31):
        table = residues_e1(j)
        assert list(table.residues) == sequence_prefix(j, 1, table.period), j


def test_e2_is_squared_e1():
    for j in range(4, 31):
        e1, e2 = residues_e1(j), residues_e2(j)
        m = e1.modulus
        for k in range(e2.period):
            assert e2.residues[k] == e1.residues[k] ** 2 % m, (j, k)


def test_e2_mirror_symmetry_for_odd_j():
    for j in range(5, 30, 2):
        res = residues_e2(j).residues
        for i in range(j + 1, 2 * j):
            assert res[i] == res[2 * j - i], (j, i)


def test_general_matches_dedicated_builders():
    for j in range(4, 23):
        assert residues_general(j, 1).residues == residues_e1(j).residues, j
        assert residues_general(j, 2).residues == residues_e2(j).residues, j


def test_general_cube_and_fourth_power_at_j6():
    assert residues_general(6, 3).residues == (0, 1, 1, 0, 3, 5, 0, 5, 5, 0, 7, 1)
    assert residues_general(6, 4).residues == (0, 1, 1)


def test_general_j9_e5():
    table = residues_general(9, 5)
    assert table.period == 36
    # frozen from the stepped reference
    assert table.residues[:12] == (0, 1, 1, 32, 5, 31, 26, 13, 21, 0, 21, 21)
    assert list(table.residues) == sequence_prefix(9, 5, 36)


def test_general_matches_modular_iteration_on_grid():
    for j in range(4, 23):
        for e in range(1, 7):
            table = residues_general(j, e)
            assert list(table.residues) == sequence_prefix(j, e, table.period), (j, e)


def test_zeros_exactly_at_multiples_of_j():
    for j in range(4, 31):
        if j == 6:
            continue
        for e in range(1, 7):
            table = residues_general(j, e)
            for i, r in enumerate(table.residues):
                assert (r == 0) == (i % j == 0), (j, e, i)


def test_base_cases_rejected():
    for j in (3, 2, 1, 0, -1):
        with pytest.raises(OutOfDomainError):
            residues_e1(j)
        with pytest.raises(OutOfDomainError):
            residues_e2(j)
        with pytest.raises(OutOfDomainError):
            residues_general(j, 2)
        with pytest.raises(OutOfDomainError):
            case_breakdown(j, 1)


def test_bad_exponent_rejected():
    with pytest.raises(OutOfDomainError):
        residues_general(7, 0)
    with pytest.raises(OutOfDomainError):
        case_breakdown(7, 3)


def test_case_breakdown_aligns_with_tables():
    for j, e in ((6, 1), (7, 1), (6, 2), (7, 2), (12, 1), (13, 2)):
        table = residues_e1(j) if e == 1 else residues_e2(j)
        labels = case_breakdown(j, e)
        assert len(labels) == table.period
        # a "0" label is used exactly for the structural zeros; the zero
        # at index 0 belongs to the F[i] run (F_0 = 0)
        for i, label in enumerate(labels):
            if label == "0":
                assert table.residues[i] == 0, (j, e, i)
    assert case_breakdown(6, 1)[6] == "0"
    assert case_breakdown(7, 2)[7] == "0"
    assert case_breakdown(7, 1)[3] == "F[3]"


def test_to_record_uses_decimal_strings():
    rec = residues_e2(6).to_record()
    assert rec == {
        "j": 6,
        "e": 2,
        "modulus": "8",
        "period": 6,
        "residues": ["0", "1", "1", "4", "1", "1"],
    }
