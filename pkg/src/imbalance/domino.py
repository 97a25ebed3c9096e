"""Standard domino tableaux, P-domino tableaux and alpha-chains of order ideals."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Sequence

from imbalance.polynomials import QPoly
from imbalance.poset import Poset, _bits, inv_poly
from imbalance.shapes import Cell, Partition, ShapeError, _removable_dominos, partition


@dataclass(frozen=True)
class Domino:
    cells: tuple[Cell, Cell]

    @property
    def vertical(self) -> bool:
        return self.cells[0][1] == self.cells[1][1]

    @property
    def column(self) -> int:
        """Column of a vertical domino (left column for a horizontal one)."""
        return min(c[1] for c in self.cells)


@dataclass(frozen=True)
class DominoTableau:
    chain: tuple[Partition, ...]
    dominoes: tuple[Domino, ...]

    @property
    def shape(self) -> Partition:
        return self.chain[-1]


def _sdt_chains(lam: Partition) -> Iterator[list[tuple[Partition, Domino]]]:
    if not lam:
        yield []
        return
    cur = list(lam)
    for kind, i in _removable_dominos(cur):
        smaller = list(cur)
        if kind == "h":
            smaller[i] -= 2
            dom = Domino(((i + 1, cur[i] - 1), (i + 1, cur[i])))
        else:
            smaller[i] -= 1
            smaller[i + 1] -= 1
            dom = Domino(((i + 1, cur[i]), (i + 2, cur[i + 1])))
        for rest in _sdt_chains(partition(smaller)):
            yield rest + [(lam, dom)]


def enumerate_sdt(lam: Sequence[int]) -> Iterator[DominoTableau]:
    """Every standard domino tableau of shape lam, each once."""
    lam = partition(lam)
    if sum(lam) % 2:
        raise ShapeError(f"{lam} has odd size; no domino tableaux")
    for steps in _sdt_chains(lam):
        yield DominoTableau(
            ((),) + tuple(p for p, _ in steps), tuple(d for _, d in steps)
        )


def vdom_stat(D: DominoTableau) -> int:
    return sum(1 for d in D.dominoes if d.vertical)


def ev_stat(D: DominoTableau) -> int:
    """Vertical dominos lying in an even-numbered column."""
    return sum(1 for d in D.dominoes if d.vertical and d.column % 2 == 0)


def imbalance_domino(lam: Sequence[int]) -> int:
    """Signed count of SDT by the parity of ev."""
    return sum(-1 if ev_stat(D) % 2 else 1 for D in enumerate_sdt(lam))


@dataclass(frozen=True)
class IdealChain:
    ideals: tuple[int, ...]

    @property
    def block_sizes(self) -> tuple[int, ...]:
        return tuple(
            bin(b).count("1") - bin(a).count("1")
            for a, b in zip(self.ideals, self.ideals[1:])
        )

    def blocks(self) -> list[list[int]]:
        return [list(_bits(b & ~a)) for a, b in zip(self.ideals, self.ideals[1:])]


def _two_chain_blocks(P: Poset, K: int) -> list[tuple[int, int]]:
    """Pairs s < t outside K such that K + {s, t} is an order ideal."""
    out = []
    for s in range(P.n):
        if (K >> s) & 1 or (P.below[s] & ~K):
            continue
        for t in P.upper_covers(s):
            if not (K >> t) & 1 and not (P.below[t] & ~(K | (1 << s))):
                out.append((s, t))
    return out


def _addable_points(P: Poset, K: int) -> list[int]:
    return [t for t in range(P.n) if not (K >> t) & 1 and not (P.below[t] & ~K)]


def p_domino_tableaux(P: Poset) -> Iterator[IdealChain]:
    """Chains of order ideals whose steps are 2-element chains.

    For odd n the final step is a single point.
    """
    full = (1 << P.n) - 1
    odd = P.n % 2

    def rec(K: int, path: list[int]):
        size = bin(K).count("1")
        if size == P.n:
            yield IdealChain(tuple(path))
            return
        if odd and size == P.n - 1:
            yield IdealChain(tuple(path) + (full,))
            return
        for s, t in _two_chain_blocks(P, K):
            K2 = K | (1 << s) | (1 << t)
            path.append(K2)
            yield from rec(K2, path)
            path.pop()

    yield from rec(0, [0])


def count_p_domino(P: Poset) -> int:
    """Number of P-domino tableaux by memoised search over ideal bitmasks."""
    return _count_with_singleton(P, None)


def _count_with_singleton(P: Poset, j: int | None) -> int:
    """Count domino chains; block ``j`` (1-based) is a single point.

    ``j=None`` means: for odd n the singleton is the last block.
    """
    n = P.n
    if j is None and n % 2:
        j = (n + 1) // 2
    full = (1 << n) - 1

    @lru_cache(maxsize=None)
    def ways(K: int, used: bool) -> int:
        if K == full:
            return 1
        size = bin(K).count("1")
        block = (size - 1) // 2 + 2 if used else size // 2 + 1
        if not used and block == j:
            return sum(ways(K | (1 << t), True) for t in _addable_points(P, K))
        return sum(ways(K | (1 << s) | (1 << t), used) for s, t in _two_chain_blocks(P, K))

    return ways(0, False)


def is_tilable(P: Poset) -> bool:
    if P.n % 2:
        raise ValueError("tilability needs an even number of elements")
    return _count_with_singleton(P, None) > 0


def is_j_tilable(P: Poset, j: int) -> bool:
    m = P.n // 2
    if P.n % 2 == 0 or P.n < 3:
        raise ValueError("j-tilability needs an odd number of elements, at least 3")
    if not 1 <= j <= m + 1:
        raise ValueError(f"j must lie in 1..{m + 1}")
    return _count_with_singleton(P, j) > 0


def alpha_chains(P: Poset, alpha: Sequence[int]) -> Iterator[IdealChain]:
    """All chains of order ideals whose successive differences have sizes alpha."""
    if sum(alpha) != P.n or any(a <= 0 for a in alpha):
        raise ValueError(f"{tuple(alpha)} is not a composition of {P.n}")

    def rec(K: int, i: int, path: list[int]):
        if i == len(alpha):
            yield IdealChain(tuple(path))
            return
        rest = [t for t in range(P.n) if not (K >> t) & 1]
        for S in combinations(rest, alpha[i]):
            K2 = K
            for t in S:
                K2 |= 1 << t
            if P.is_ideal(K2):
                path.append(K2)
                yield from rec(K2, i + 1, path)
                path.pop()

    yield from rec(0, 0, [0])


def block_inv_poly(P: Poset, omega: Sequence[int], block: Sequence[int]) -> QPoly:
    """I of a block with omega restricted and relabelled order-isomorphically."""
    block = sorted(block)
    ranks = {t: r + 1 for r, t in enumerate(sorted(block, key=omega.__getitem__))}
    return inv_poly(P.induced(block), [ranks[t] for t in block])


def chain_inv(P: Poset, C: IdealChain, omega: Sequence[int]) -> int:
    """Fewest inversions among linear extensions compatible with C.

    Inversions between different blocks are the same for every compatible
    extension; inside a block the minimum is the low degree of its polynomial.
    """
    blocks = C.blocks()
    cross = sum(
        1
        for a in range(len(blocks))
        for b in range(a + 1, len(blocks))
        for s in blocks[a]
        for t in blocks[b]
        if omega[s] > omega[t]
    )
    return cross + sum(block_inv_poly(P, omega, B).low_degree for B in blocks)


def factorized_inv_poly(P: Poset, omega: Sequence[int], alpha: Sequence[int]) -> QPoly:
    """Sum over alpha-chains of q^inv(C) times the product of block polynomials.

    Block polynomials are normalised to constant term nonzero, so the
    minimum inside each block is counted once, in inv(C).
    """
    total = QPoly()
    for C in alpha_chains(P, alpha):
        term = QPoly.monomial(chain_inv(P, C, omega))
        for B in C.blocks():
            term = term * block_inv_poly(P, omega, B).strip_low()
        total = total + term
    return total
