"""Partitions, skew shapes, their posets, 2-cores and partition statistics.

Partitions are weakly decreasing tuples of positive ints.  Cells are
``(row, col)`` pairs, both 1-based, rows numbered top to bottom.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterator, Sequence

from imbalance.polynomials import ONE, QPoly, q_binomial
from imbalance.poset import Labeling, Poset, make_poset

Partition = tuple[int, ...]
Cell = tuple[int, int]

__all__ = [
    "Partition", "Cell", "SkewShape", "ShapeError", "partition", "partitions",
    "parse_partition", "parse_shape", "conjugate", "content", "content_sum",
    "cells", "shape_poset", "two_core", "two_core_abacus", "is_staircase",
    "v_stat", "d_stat", "r_stat", "corners", "addable", "b_stat",
    "inv_poly_shape", "imbalance", "q_binomial", "a_lambda_quadruple",
    "count_series", "partition_numbers", "is_hook", "hooks",
]


class ShapeError(ValueError):
    pass


def partition(parts: Sequence[int]) -> Partition:
    """Canonical form: drop trailing zeros, check weakly decreasing."""
    p = list(parts)
    while p and p[-1] == 0:
        p.pop()
    if any(x < 0 for x in p) or any(a < b for a, b in zip(p, p[1:])):
        raise ShapeError(f"{tuple(parts)} is not a partition")
    return tuple(p)


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = ()

    def __post_init__(self):
        outer, inner = partition(self.outer), partition(self.inner)
        if len(inner) > len(outer) or any(m > l for m, l in zip(inner, outer)):
            raise ShapeError(f"{inner} is not contained in {outer}")
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    def __str__(self):
        s = ",".join(map(str, self.outer))
        return s + ("/" + ",".join(map(str, self.inner)) if self.inner else "")


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if not text or text in ("0", "()", "empty"):
        return ()
    try:
        return partition(int(x) for x in text.split(","))
    except ValueError as exc:
        raise ShapeError(f"cannot parse partition {text!r}: {exc}") from None


def parse_shape(text: str) -> SkewShape:
    """``"4,3,1"`` or ``"4,3,1/2,1"``."""
    outer, _, inner = text.partition("/")
    return SkewShape(parse_partition(outer), parse_partition(inner))


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def conjugate(lam: Sequence[int]) -> Partition:
    lam = partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x >= j) for j in range(1, lam[0] + 1))


def content(cell: Cell) -> int:
    i, j = cell
    return j - i


def cells(shape) -> list[Cell]:
    """Cells in reading order (row by row, left to right)."""
    if not isinstance(shape, SkewShape):
        shape = SkewShape(tuple(shape))
    inner = list(shape.inner) + [0] * (len(shape.outer) - len(shape.inner))
    return [
        (i + 1, j + 1)
        for i, (lo, hi) in enumerate(zip(inner, shape.outer))
        for j in range(lo, hi)
    ]


def content_sum(lam: Sequence[int]) -> int:
    return sum(content(c) for c in cells(lam))


def shape_poset(shape) -> tuple[Poset, Labeling]:
    """Poset of the cells under the coordinatewise order, with reading labels.

    Element k is the k-th cell in reading order, so the reading-order
    labeling is simply ``(1, ..., n)``.
    """
    cs = cells(shape)
    rel = [
        (a, b)
        for a, (i, j) in enumerate(cs)
        for b, (k, l) in enumerate(cs)
        if a != b and i <= k and j <= l
    ]
    return make_poset(len(cs), rel), tuple(range(1, len(cs) + 1))


def is_staircase(lam: Sequence[int]) -> bool:
    lam = partition(lam)
    return lam == tuple(range(len(lam), 0, -1))


def _removable_dominos(lam: list[int]) -> list[tuple[str, int]]:
    out = []
    ext = lam + [0, 0]
    for i in range(len(lam)):
        if ext[i] - 2 >= ext[i + 1]:
            out.append(("h", i))
        if ext[i] == ext[i + 1] and ext[i + 1] >= 1 and ext[i + 1] - 1 >= ext[i + 2]:
            out.append(("v", i))
    return out


def two_core(lam: Sequence[int], rng: random.Random | None = None) -> Partition:
    """Strip border dominos until none is removable.

    With ``rng`` the domino to remove is chosen at random, otherwise the first
    one found; the result does not depend on the choice.
    """
    cur = list(partition(lam))
    while True:
        options = _removable_dominos(cur)
        if not options:
            return partition(cur)
        kind, i = rng.choice(options) if rng else options[0]
        if kind == "h":
            cur[i] -= 2
        else:
            cur[i] -= 1
            cur[i + 1] -= 1
        while cur and cur[-1] == 0:
            cur.pop()


def two_core_abacus(lam: Sequence[int]) -> Partition:
    """2-core by sliding beads on a two-runner abacus of beta numbers."""
    lam = list(partition(lam))
    if len(lam) % 2:
        lam.append(0)
    ell = len(lam)
    beta = [lam[i] + ell - 1 - i for i in range(ell)]
    beads = [sum(1 for b in beta if b % 2 == r) for r in (0, 1)]
    slid = sorted((r + 2 * k for r in (0, 1) for k in range(beads[r])), reverse=True)
    return partition([b - (ell - 1 - i) for i, b in enumerate(slid)])


def v_stat(lam: Sequence[int]) -> int:
    """Sum over all columns of floor(column length / 2)."""
    return sum(c // 2 for c in conjugate(lam))


def d_stat(lam: Sequence[int]) -> int:
    """Sum over even-indexed columns of floor(column length / 2)."""
    return sum(c // 2 for c in conjugate(lam)[1::2])


def r_stat(lam: Sequence[int]) -> int:
    """Maximum of ev(D) over standard domino tableaux D of shape lam."""
    from imbalance.domino import enumerate_sdt, ev_stat

    lam = partition(lam)
    if two_core(lam):
        raise ShapeError(f"r is defined only for an empty 2-core; {lam} has core {two_core(lam)}")
    return max(ev_stat(D) for D in enumerate_sdt(lam))


def is_hook(lam: Sequence[int]) -> bool:
    lam = partition(lam)
    return len(lam) <= 1 or all(x == 1 for x in lam[1:])


def hooks(n: int) -> list[Partition]:
    """The hooks (n-k, 1^k), 0 <= k <= n-1."""
    return [(n - k,) + (1,) * k for k in range(n)] if n else [()]


def corners(lam: Sequence[int]) -> list[Cell]:
    lam = partition(lam)
    ext = list(lam) + [0]
    return [(i + 1, lam[i]) for i in range(len(lam)) if lam[i] > ext[i + 1]]


def addable(lam: Sequence[int]) -> list[Cell]:
    lam = partition(lam)
    ext = [float("inf")] + list(lam) + [0]
    return [(i, ext[i] + 1) for i in range(1, len(lam) + 2) if ext[i] < ext[i - 1]]


def b_stat(lam: Sequence[int], t: Cell) -> int:
    """Number of cells of lam in rows strictly below the corner t."""
    lam = partition(lam)
    if t not in corners(lam):
        raise ShapeError(f"{t} is not a corner of {lam}")
    return sum(lam[t[0]:])


def remove_cell(lam: Partition, t: Cell) -> Partition:
    p = list(lam)
    p[t[0] - 1] -= 1
    return partition(p)


def add_cell(lam: Partition, t: Cell) -> Partition:
    p = list(lam) + [0]
    p[t[0] - 1] += 1
    return partition(p)


@lru_cache(maxsize=None)
def _inv_poly_shape(lam: Partition) -> QPoly:
    if sum(lam) <= 1:
        return ONE
    total = QPoly()
    for t in corners(lam):
        total = total + _inv_poly_shape(remove_cell(lam, t)).shift(b_stat(lam, t))
    return total


def inv_poly_shape(lam: Sequence[int]) -> QPoly:
    """I_lam(q) by the corner recursion: remove the cell holding n."""
    return _inv_poly_shape(partition(lam))


@lru_cache(maxsize=None)
def _imbalance(lam: Partition) -> int:
    if sum(lam) <= 1:
        return 1
    return sum(
        (-1) ** b_stat(lam, t) * _imbalance(remove_cell(lam, t)) for t in corners(lam)
    )


def imbalance(lam: Sequence[int]) -> int:
    """I_lam(-1), the same recursion specialised at q = -1."""
    return _imbalance(partition(lam))


def odd_parts(lam: Sequence[int]) -> int:
    return sum(1 for x in lam if x % 2)


def a_lambda_quadruple(lam: Sequence[int]) -> tuple[int, int, int, int]:
    """(Gamma(P_lam), content sum, (O(lam)-O(lam'))/2, (n - #core)/2)."""
    from imbalance.promotion import gamma

    lam = partition(lam)
    n = sum(lam)
    P, _ = shape_poset(lam)
    core_size = sum(two_core(lam))
    return (
        gamma(P),
        content_sum(lam),
        (odd_parts(lam) - odd_parts(conjugate(lam))) // 2,
        (n - core_size) // 2,
    )


def _series_mul(a: list[int], b: list[int], N: int) -> list[int]:
    out = [0] * (N + 1)
    for i, x in enumerate(a[: N + 1]):
        if x:
            for j in range(0, N + 1 - i):
                if j < len(b) and b[j]:
                    out[i + j] += x * b[j]
    return out


def _geom(k: int, N: int, sign: int = 1) -> list[int]:
    """1 / (1 - sign*x^k) truncated at degree N."""
    out = [0] * (N + 1)
    for j in range(0, N + 1, k):
        out[j] = sign ** (j // k)
    return out


def _binom1(k: int, N: int, sign: int = 1) -> list[int]:
    """1 + sign*x^k truncated at degree N."""
    out = [0] * (N + 1)
    out[0] = 1
    if k <= N:
        out[k] += sign
    return out


def partition_numbers(N: int) -> list[int]:
    s = [1] + [0] * N
    for k in range(1, N + 1):
        s = _series_mul(s, _geom(k, N), N)
    return s


def _core_le_1_series(N: int) -> list[int]:
    # (1 + x) / prod_i (1 - x^{2i})^2
    s = _binom1(1, N)
    for i in range(1, N // 2 + 1):
        g = _geom(2 * i, N)
        s = _series_mul(_series_mul(s, g, N), g, N)
    return s


def _a_even_f_series(N: int) -> list[int]:
    # prod_i (1 + x^{2i-1}) / ((1 - x^{4i}) (1 + x^{4i-2})^2)
    s = [1] + [0] * N
    for i in range(1, N + 1):
        if 2 * i - 1 <= N:
            s = _series_mul(s, _binom1(2 * i - 1, N), N)
        if 4 * i <= N:
            s = _series_mul(s, _geom(4 * i, N), N)
        if 4 * i - 2 <= N:
            g = _geom(4 * i - 2, N, sign=-1)
            s = _series_mul(_series_mul(s, g, N), g, N)
    return s


def count_series(kind: str, n_max: int) -> list[int]:
    """Coefficients 0..n_max of one of the product generating functions.

    ``core_le_1``: partitions with a 2-core of at most one cell.
    ``a_even_f``: the correction term f(n) in t(n) = (p(n) + f(n)) / 2.
    ``t_n``: partitions whose a_lambda is even.
    ``g_n``: partitions on which evacuation reverses parity.
    """
    if not 0 <= n_max <= 64:
        raise ValueError("n_max must lie in 0..64")
    if kind == "core_le_1":
        return _core_le_1_series(n_max)
    if kind == "a_even_f":
        return _a_even_f_series(n_max)
    p = partition_numbers(n_max)
    f = _a_even_f_series(n_max)
    if kind == "t_n":
        return [(a + b) // 2 for a, b in zip(p, f)]
    if kind == "g_n":
        return [
            (p[n] + f[n]) // 2 if comb(n, 2) % 2 else (p[n] - f[n]) // 2
            for n in range(n_max + 1)
        ]
    raise ValueError(f"unknown series {kind!r}")
