"""Exact counting helpers with a fixed 128-bit unsigned capacity.

Python integers never wrap, so the capacity is enforced explicitly: any total
or binomial that would not fit in an unsigned 128-bit register raises
:class:`CountOverflow` instead of being returned.
"""

from __future__ import annotations

import math

from .errors import CountOverflow, InvalidParameter

COUNT_BITS = 128
COUNT_MAX = (1 << COUNT_BITS) - 1


def check_count(value: int) -> int:
    if value < 0 or value > COUNT_MAX:
        raise CountOverflow(f"count {value} exceeds {COUNT_BITS}-bit capacity")
    return value


def checked_add(a: int, b: int) -> int:
    return check_count(a + b)


def binomial(n: int, k: int) -> int:
    """C(n, k) for non-negative integers, 0 when k > n."""
    if n < 0 or k < 0:
        raise InvalidParameter(f"binomial({n}, {k}) needs non-negative arguments")
    return check_count(math.comb(n, k))


class BinomialRow:
    """Memoized ``n -> C(n, k)`` for one fixed ``k``.

    Indexing grows the table on demand, so lookups in hot loops are a list
    subscript once the largest ``n`` has been seen.
    """

    def __init__(self, k: int, size: int = 0):
        if k < 0:
            raise InvalidParameter("k must be non-negative")
        self.k = k
        self._table: list[int] = []
        self._grow(size)

    def _grow(self, size: int) -> None:
        for n in range(len(self._table), size + 1):
            self._table.append(binomial(n, self.k))

    def __getitem__(self, n: int) -> int:
        if n >= len(self._table):
            self._grow(n)
        return self._table[n]

    @property
    def table(self) -> list[int]:
        return self._table
