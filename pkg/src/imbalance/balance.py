"""Maj-balance: domino counts, square regions with Schur labelings, hook lengths."""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial, prod
from typing import Iterable, Iterator, Sequence

from imbalance.domino import count_p_domino
from imbalance.polynomials import QPoly, one_minus_q_power
from imbalance.poset import (
    Labeling, Poset, PosetError, _bits, extension_stats, is_natural, make_poset,
    maj_poly, natural_labeling,
)
from imbalance.promotion import delta_stat, is_dual_consistent
from imbalance.shapes import Partition, cells, conjugate, partition

Region = frozenset  # of (row, col) cells


class RegionError(ValueError):
    pass


def majdom_check(P: Poset) -> tuple[int, int]:
    """(W_P(-1) for a natural labeling, number of P-domino tableaux)."""
    return maj_poly(P, natural_labeling(P))(-1), count_p_domino(P)


def dcmb_check(P: Poset) -> bool:
    """Odd C(n,2) - Delta(P) forces maj-balance on dual consistent posets.

    Returns True when the prediction holds or when the parity condition is
    not met (nothing is predicted then).
    """
    if not is_dual_consistent(P):
        raise PosetError("poset is not dual consistent")
    if (comb(P.n, 2) - delta_stat(P)) % 2 == 0:
        return True
    return maj_poly(P, natural_labeling(P))(-1) == 0


# -- regions -----------------------------------------------------------------

def make_region(cells_: Iterable[tuple[int, int]]) -> Region:
    S = frozenset((int(i), int(j)) for i, j in cells_)
    check_region(S)
    return S


def _neighbours(c):
    i, j = c
    return ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1))


def _flood(start, members) -> set:
    seen = {start}
    stack = [start]
    while stack:
        for d in _neighbours(stack.pop()):
            if d in members and d not in seen:
                seen.add(d)
                stack.append(d)
    return seen


def is_simply_connected(S: Region) -> bool:
    """Edge-connected cells whose complement in a padded frame is connected."""
    if not S:
        return False
    if len(_flood(next(iter(S)), S)) != len(S):
        return False
    rows = [i for i, _ in S]
    cols = [j for _, j in S]
    frame = {
        (i, j)
        for i in range(min(rows) - 1, max(rows) + 2)
        for j in range(min(cols) - 1, max(cols) + 2)
    }
    outside = frame - S
    corner = (min(rows) - 1, min(cols) - 1)
    return len(_flood(corner, outside)) == len(outside)


def check_region(S: Region) -> None:
    if not S:
        raise RegionError("empty region")
    if not is_simply_connected(S):
        raise RegionError("region must be edge-connected and simply connected")


def region_cells(S: Region) -> list[tuple[int, int]]:
    """Cells in reading order; element k of the region poset is cell k."""
    return sorted(S)


def region_poset(S: Region) -> Poset:
    """Cells ordered by the closure of steps one column right or one row down."""
    check_region(S)
    cs = region_cells(S)
    index = {c: k for k, c in enumerate(cs)}
    rel = []
    for (i, j), k in index.items():
        for nb in ((i, j + 1), (i + 1, j)):
            if nb in index:
                rel.append((k, index[nb]))
    return make_poset(len(cs), rel)


def schur_labeling(S: Region) -> Labeling:
    """Increasing along rows, decreasing down columns.

    Rows are labelled bottom row first, each left to right.
    """
    cs = region_cells(S)
    order = sorted(cs, key=lambda c: (-c[0], c[1]))
    label = {c: k + 1 for k, c in enumerate(order)}
    return tuple(label[c] for c in cs)


def is_schur_labeling(S: Region, omega: Sequence[int]) -> bool:
    cs = region_cells(S)
    lab = dict(zip(cs, omega))
    for (i, j), w in lab.items():
        if (i, j + 1) in lab and not w < lab[(i, j + 1)]:
            return False
        if (i + 1, j) in lab and not w > lab[(i + 1, j)]:
            return False
    return True


def tilings(S: Region) -> Iterator[list[tuple[tuple[int, int], tuple[int, int]]]]:
    """Domino tilings: cover the first free cell horizontally, then vertically."""
    cs = region_cells(S)
    free = set(cs)
    placed: list = []

    def rec():
        if not free:
            yield list(placed)
            return
        c = min(free)
        i, j = c
        for other in ((i, j + 1), (i + 1, j)):
            if other in free:
                free.discard(c)
                free.discard(other)
                placed.append((c, other))
                yield from rec()
                placed.pop()
                free.add(c)
                free.add(other)

    yield from rec()


def vertical_count(tiling) -> int:
    return sum(1 for a, b in tiling if a[1] == b[1])


def region_sign(S: Region) -> int:
    """(-1)^(vertical dominos) of the first tiling found."""
    check_region(S)
    if len(S) % 2:
        raise RegionError("region has odd size")
    first = next(tilings(S), None)
    if first is None:
        raise RegionError("region cannot be tiled by dominos")
    return -1 if vertical_count(first) % 2 else 1


def slabps_check(S: Region) -> tuple[int, int]:
    """(sgn(S) * W_{P_S, omega}(-1) for a Schur labeling, #P_S-domino tableaux)."""
    P = region_poset(S)
    if P.n % 2:
        raise RegionError("region has odd size")
    W = maj_poly(P, schur_labeling(S))(-1)
    count = count_p_domino(P)
    if next(tilings(S), None) is None:
        if count:
            raise RegionError("untilable region with P_S-domino tableaux")
        return W, count
    return region_sign(S) * W, count


def regions_in_frame(rows: int, cols: int, max_size: int, even_only: bool = True) -> Iterator[Region]:
    """Simply connected regions inside a rows x cols frame, by cell bitmask."""
    frame = [(i + 1, j + 1) for i in range(rows) for j in range(cols)]
    for mask in range(1, 1 << len(frame)):
        size = bin(mask).count("1")
        if size > max_size or (even_only and size % 2):
            continue
        S = frozenset(frame[k] for k in _bits(mask))
        if is_simply_connected(S):
            yield S


def parse_region(text: str) -> Region:
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        if len(tok) != 2:
            raise RegionError(f"line {lineno}: expected 'row col'")
        try:
            out.append((int(tok[0]), int(tok[1])))
        except ValueError:
            raise RegionError(f"line {lineno}: expected integers") from None
    return make_region(out)


# -- hook lengths ------------------------------------------------------------

def is_forest(P: Poset) -> bool:
    """Every element is covered by at most one element."""
    return all(len(P.upper_covers(t)) <= 1 for t in range(P.n))


def forest_hooks(P: Poset) -> tuple[int, ...]:
    """h_t = size of the principal order ideal of t."""
    if not is_forest(P):
        raise PosetError("not a forest: some element has two upper covers")
    return tuple(bin(P.down_set(t)).count("1") for t in range(P.n))


def cell_hooks(lam: Sequence[int]) -> tuple[int, ...]:
    """Ordinary hook lengths of lam in reading order."""
    lam = partition(lam)
    lc = conjugate(lam)
    return tuple(lam[i - 1] - j + lc[j - 1] - i + 1 for i, j in cells(lam))


def hook_product_poly(n: int, hooks: Sequence[int]) -> QPoly:
    """(1-q)(1-q^2)...(1-q^n) / prod (1-q^h), as an exact quotient."""
    num = QPoly([1])
    for k in range(1, n + 1):
        num = num * one_minus_q_power(k)
    den = QPoly([1])
    for h in hooks:
        den = den * one_minus_q_power(h)
    return num.exact_div(den)


def hlsb_imbalance(n: int, hooks: Sequence[int]) -> Fraction:
    """W_P(-1) predicted from the hook lengths alone."""
    even = [h for h in hooks if h % 2 == 0]
    m = n // 2
    if len(even) < m:
        return Fraction(0)
    value = Fraction(factorial(m), prod(h // 2 for h in even))
    assert value.denominator == 1, "hook-length imbalance is not an integer"
    return value


def postorder_labeling(P: Poset) -> Labeling:
    """Label each subtree consecutively, children before their parent."""
    if not is_forest(P):
        raise PosetError("postorder labeling needs a forest")
    omega = [0] * P.n
    counter = 0

    def visit(t: int):
        nonlocal counter
        for s in P.lower_covers(t):
            visit(s)
        counter += 1
        omega[t] = counter

    for root in P.maximal():
        visit(root)
    return tuple(omega)


def bw_check(P: Poset) -> bool:
    """I and W agree for a forest under its postorder labeling."""
    omega = postorder_labeling(P)
    _, I, W = extension_stats(P, omega)
    return is_natural(P, omega) and I == W


def all_forests(n: int) -> list[Poset]:
    """One poset per isomorphism class of rooted forests on n elements.

    Roots are maximal; element i's parent is a larger index, so every
    increasing tree labeling is visited and duplicates are merged by a
    canonical nested-tuple code.
    """
    seen: dict = {}

    def code(children, t):
        return tuple(sorted(code(children, c) for c in children[t]))

    def rec(i: int, parent: list[int | None]):
        if i < 0:
            children = [[] for _ in range(n)]
            for t, p in enumerate(parent):
                if p is not None:
                    children[p].append(t)
            roots = [t for t in range(n) if parent[t] is None]
            key = tuple(sorted(code(children, r) for r in roots))
            if key not in seen:
                seen[key] = make_poset(n, [(t, p) for t, p in enumerate(parent) if p is not None])
            return
        for p in [None] + list(range(i + 1, n)):
            parent[i] = p
            rec(i - 1, parent)
        parent[i] = None

    rec(n - 1, [None] * n)
    return [seen[k] for k in sorted(seen)]


def dual_shape_poset(lam: Sequence[int]) -> Poset:
    """P*_lam with elements in reading order of the cells."""
    from imbalance.shapes import shape_poset

    P, _ = shape_poset(lam)
    return make_poset(P.n, [(t, s) for s, t in P.covers])
