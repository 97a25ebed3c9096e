"""Promotion, evacuation and the chain-length parity statistics."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import comb
from typing import Sequence

from imbalance.poset import LinearExtension, Poset, dual, maximal_chain_lengths


class Parity(str, Enum):
    REVERSING = "reversing"
    PRESERVING = "preserving"
    NEITHER = "neither"


class InconsistentPoset(ValueError):
    pass


@dataclass(frozen=True)
class PromotionChain:
    elements: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.elements) - 1


def _promotion_chain(covers_up: list[list[int]], f: Sequence[int], alive: int) -> list[int]:
    start = min((t for t in range(len(f)) if (alive >> t) & 1), key=f.__getitem__)
    chain = [start]
    while True:
        ups = [u for u in covers_up[chain[-1]] if (alive >> u) & 1]
        if not ups:
            return chain
        chain.append(min(ups, key=f.__getitem__))


def promotion_chain(P: Poset, f: Sequence[int]) -> PromotionChain:
    """Greedy ascent from f^-1(1), always to the upper cover with least f."""
    ups = [P.upper_covers(t) for t in range(P.n)]
    return PromotionChain(tuple(_promotion_chain(ups, f, (1 << P.n) - 1)))


def promote(P: Poset, f: Sequence[int]) -> LinearExtension:
    ups = [P.upper_covers(t) for t in range(P.n)]
    g, _ = _promote_on(ups, list(f), (1 << P.n) - 1)
    return tuple(g)


def _promote_on(ups, f: list[int], alive: int) -> tuple[list[int], int]:
    """Promote the restriction of ``f`` to the subposet ``alive``.

    Values on ``alive`` must be 1..#alive.  Returns the new values (entries
    outside ``alive`` untouched) and the top of the promotion chain.  On a
    subposet, covers between live elements are the covers of the induced
    subposet only when ``alive`` is an order ideal, which is always the case
    here since evacuation removes maximal elements.
    """
    m = bin(alive).count("1")
    chain = _promotion_chain(ups, f, alive)
    g = list(f)
    on_chain = set(chain)
    for t in range(len(f)):
        if (alive >> t) & 1 and t not in on_chain:
            g[t] = f[t] - 1
    for a, b in zip(chain, chain[1:]):
        g[a] = f[b] - 1
    g[chain[-1]] = m
    return g, chain[-1]


def evacuate(P: Poset, f: Sequence[int]) -> LinearExtension:
    """Schutzenberger evacuation by repeated promote-then-freeze-the-top.

    At step k the current extension of the live subposet is promoted; the top
    of its promotion chain receives the final value n-k+1 and is removed.
    """
    ups = [P.upper_covers(t) for t in range(P.n)]
    n = P.n
    alive = (1 << n) - 1
    g = list(f)
    out = [0] * n
    for k in range(1, n + 1):
        g, top = _promote_on(ups, g, alive)
        out[top] = n - k + 1
        alive &= ~(1 << top)
    return tuple(out)


def nu(P: Poset, t: int) -> int:
    """Length of the longest chain in the principal ideal of t."""
    return _nu_all(P)[t]


def _nu_all(P: Poset) -> list[int]:
    out = [-1] * P.n

    def rec(t: int) -> int:
        if out[t] < 0:
            lows = P.lower_covers(t)
            out[t] = 0 if not lows else 1 + max(rec(s) for s in lows)
        return out[t]

    for t in range(P.n):
        rec(t)
    return out


def gamma(P: Poset) -> int:
    return sum(_nu_all(P))


def delta_stat(P: Poset) -> int:
    return gamma(dual(P))


def _chain_parities(P: Poset) -> list[set[int]]:
    """Parities of the lengths of maximal chains of each principal ideal."""
    out: list[set[int] | None] = [None] * P.n

    def rec(t: int) -> set[int]:
        if out[t] is None:
            lows = P.lower_covers(t)
            out[t] = {0} if not lows else {1 - p for s in lows for p in rec(s)}
        return out[t]

    return [rec(t) for t in range(P.n)]


def is_consistent(P: Poset) -> bool:
    return all(len(s) == 1 for s in _chain_parities(P))


def is_dual_consistent(P: Poset) -> bool:
    return is_consistent(dual(P))


def promotion_parity_class(P: Poset) -> Parity:
    """Parity behaviour of promotion read off the maximal chain lengths."""
    flips = {(P.n - ell) % 2 for ell in maximal_chain_lengths(P)}
    if flips == {0}:
        return Parity.REVERSING
    if flips == {1}:
        return Parity.PRESERVING
    return Parity.NEITHER


def evac_parity(P: Poset) -> Parity:
    if not is_consistent(P):
        raise InconsistentPoset("evacuation parity is only predicted for consistent posets")
    return Parity.PRESERVING if (comb(P.n, 2) - gamma(P)) % 2 == 0 else Parity.REVERSING


def parity_of_change(f: Sequence[int], g: Sequence[int]) -> int:
    """Parity (0 even, 1 odd) of the permutation g o f^-1 of [n]."""
    n = len(f)
    perm = [0] * n
    for t in range(n):
        perm[f[t] - 1] = g[t] - 1
    seen = [False] * n
    transpositions = 0
    for i in range(n):
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length:
            transpositions += length - 1
    return transpositions % 2
