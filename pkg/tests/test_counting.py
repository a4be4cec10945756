import math

import pytest

from signed_biclique import COUNT_MAX, CountOverflow, binomial, checked_add
from signed_biclique.counting import BinomialRow


def test_binomial_matches_pascal():
    row = [1]
    for n in range(1, 40):
        row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
        assert [binomial(n, k) for k in range(n + 1)] == row
    assert binomial(3, 5) == 0


def test_checked_add_capacity():
    assert checked_add(COUNT_MAX - 1, 1) == COUNT_MAX
    with pytest.raises(CountOverflow):
        checked_add(COUNT_MAX, 1)


def test_binomial_overflow_is_an_error():
    assert binomial(130, 65) == math.comb(130, 65)  # ~2^126.7, fits
    with pytest.raises(CountOverflow):
        binomial(140, 70)


def test_binomial_row_grows():
    r = BinomialRow(3)
    assert r[10] == 120
    assert r.table[:5] == [0, 0, 0, 1, 4]
