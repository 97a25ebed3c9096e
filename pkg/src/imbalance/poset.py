"""Finite posets, labelings, linear extensions and the two imbalance polynomials.

Elements are ``0..n-1``.  A labeling ``omega`` and a linear extension ``f``
are tuples with ``omega[t]`` (resp. ``f[t]``) in ``1..n``.  A permutation is
its one-line word, a tuple of values in ``1..n``.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from imbalance import kernels
from imbalance.kernels import CapExceeded
from imbalance.polynomials import QPoly

Labeling = tuple[int, ...]
LinearExtension = tuple[int, ...]
Permutation = tuple[int, ...]

DEFAULT_CAP = 10**7


class PosetError(ValueError):
    """Invalid poset input (cycle, self-loop, bad index, bad labeling)."""


def extension_cap() -> int:
    """Enumeration cap, overridable through ``IMBALANCE_CAP``."""
    env = os.environ.get("IMBALANCE_CAP")
    return int(env) if env else DEFAULT_CAP


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Poset:
    """Immutable finite poset stored as bitmask down-sets.

    ``below[t]`` is the mask of elements strictly less than ``t``; ``covers``
    holds pairs ``(s, t)`` with ``t`` covering ``s``.
    """

    n: int
    covers: frozenset
    below: tuple[int, ...] = field(repr=False)
    above: tuple[int, ...] = field(repr=False)

    def leq(self, s: int, t: int) -> bool:
        return s == t or bool((self.below[t] >> s) & 1)

    def lt(self, s: int, t: int) -> bool:
        return bool((self.below[t] >> s) & 1)

    @property
    def leq_matrix(self) -> list[list[bool]]:
        return [[self.leq(s, t) for t in range(self.n)] for s in range(self.n)]

    def lower_covers(self, t: int) -> list[int]:
        return sorted(s for s, u in self.covers if u == t)

    def upper_covers(self, s: int) -> list[int]:
        return sorted(u for r, u in self.covers if r == s)

    def minimal(self) -> list[int]:
        return [t for t in range(self.n) if not self.below[t]]

    def maximal(self) -> list[int]:
        return [t for t in range(self.n) if not self.above[t]]

    def down_set(self, t: int) -> int:
        """Mask of the principal order ideal of t (t included)."""
        return self.below[t] | (1 << t)

    def is_ideal(self, mask: int) -> bool:
        return all((self.below[t] & mask) == self.below[t] for t in _bits(mask))

    def induced(self, elements: Sequence[int]) -> "Poset":
        """Subposet on ``elements``, reindexed to 0..k-1 in the given order."""
        index = {t: i for i, t in enumerate(elements)}
        rel = [
            (index[s], index[t])
            for s in elements
            for t in elements
            if s != t and self.lt(s, t)
        ]
        return make_poset(len(elements), rel)

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return self.n == other.n and self.covers == other.covers

    def __hash__(self):
        return hash((self.n, self.covers))


def make_poset(n: int, covers: Sequence[tuple[int, int]]) -> Poset:
    """Build a poset from (possibly redundant) relations ``s < t``.

    The transitive closure is computed and the cover relation is reduced to
    its Hasse diagram.
    """
    if n < 0:
        raise PosetError("negative element count")
    succ = [0] * n
    for s, t in covers:
        if not (0 <= s < n and 0 <= t < n):
            raise PosetError(f"relation ({s}, {t}) out of range for n={n}")
        if s == t:
            raise PosetError(f"self-loop at {s}")
        succ[s] |= 1 << t
    # Kahn's algorithm gives a topological order or detects a cycle.
    indeg = [0] * n
    for s in range(n):
        for t in _bits(succ[s]):
            indeg[t] += 1
    order = [t for t in range(n) if indeg[t] == 0]
    i = 0
    while i < len(order):
        s = order[i]
        i += 1
        for t in _bits(succ[s]):
            indeg[t] -= 1
            if indeg[t] == 0:
                order.append(t)
    if len(order) < n:
        raise PosetError("relation contains a cycle")
    below = [0] * n
    for s in order:
        for t in _bits(succ[s]):
            below[t] |= below[s] | (1 << s)
    above = [0] * n
    for t in range(n):
        for s in _bits(below[t]):
            above[s] |= 1 << t
    hasse = set()
    for t in range(n):
        for s in _bits(below[t]):
            # s < t is a cover iff no u with s < u < t
            if not (above[s] & below[t]):
                hasse.add((s, t))
    return Poset(n, frozenset(hasse), tuple(below), tuple(above))


def chain(n: int) -> Poset:
    return make_poset(n, [(i, i + 1) for i in range(n - 1)])


def antichain(n: int) -> Poset:
    return make_poset(n, [])


def dual(P: Poset) -> Poset:
    return make_poset(P.n, [(t, s) for s, t in P.covers])


def check_labeling(P: Poset, omega: Sequence[int]) -> Labeling:
    omega = tuple(omega)
    if sorted(omega) != list(range(1, P.n + 1)):
        raise PosetError(f"labeling {omega} is not a bijection onto 1..{P.n}")
    return omega


def is_natural(P: Poset, omega: Sequence[int]) -> bool:
    return all(omega[s] < omega[t] for s, t in P.covers)


def is_linear_extension(P: Poset, f: Sequence[int]) -> bool:
    return sorted(f) == list(range(1, P.n + 1)) and all(f[s] < f[t] for s, t in P.covers)


def natural_labeling(P: Poset) -> Labeling:
    """Topological order, smallest available element first."""
    return next(linear_extensions(P, cap=1))


def linear_extensions(P: Poset, cap: int | None = None) -> Iterator[LinearExtension]:
    """Yield every linear extension once.

    Extensions come out in lexicographic order of ``(f^-1(1), ..., f^-1(n))``:
    the backtracker always tries the currently-minimal elements by ascending
    index.  More than ``cap`` extensions raises ``CapExceeded``.
    """
    cap = extension_cap() if cap is None else cap
    n = P.n
    below = P.below
    full = (1 << n) - 1
    word: list[int] = []
    count = 0

    def rec(placed: int):
        nonlocal count
        if placed == full:
            count += 1
            if count > cap:
                raise CapExceeded(f"more than {cap} linear extensions")
            f = [0] * n
            for i, t in enumerate(word):
                f[t] = i + 1
            yield tuple(f)
            return
        for t in range(n):
            if not (placed >> t) & 1 and (below[t] & placed) == below[t]:
                word.append(t)
                yield from rec(placed | (1 << t))
                word.pop()

    if n == 0:
        yield ()
        return
    yield from rec(0)


def count_extensions(P: Poset, cap: int | None = None) -> int:
    return extension_stats(P, tuple(range(1, P.n + 1)), cap)[0]


def perm_of(f: Sequence[int], omega: Sequence[int]) -> Permutation:
    """The word a_1..a_n with a_i = omega(f^-1(i))."""
    word = [0] * len(f)
    for t, v in enumerate(f):
        word[v - 1] = omega[t]
    return tuple(word)


def inv(pi: Sequence[int]) -> int:
    n = len(pi)
    return sum(1 for i in range(n) for j in range(i + 1, n) if pi[i] > pi[j])


def descent_set(pi: Sequence[int]) -> set[int]:
    """1-based positions i with a_i > a_{i+1}."""
    return {i + 1 for i in range(len(pi) - 1) if pi[i] > pi[i + 1]}


def maj(pi: Sequence[int]) -> int:
    return sum(descent_set(pi))


def sign(pi: Sequence[int]) -> int:
    return -1 if inv(pi) % 2 else 1


def extension_stats(P: Poset, omega: Sequence[int], cap: int | None = None):
    """``(e(P), I_{P,omega}, W_{P,omega})`` from one pass of the kernel."""
    omega = check_labeling(P, omega)
    cap = extension_cap() if cap is None else cap
    count, ih, mh = kernels.extension_stats(P.n, list(P.below), list(omega), cap)
    return count, QPoly(ih), QPoly(mh)


def inv_poly(P: Poset, omega: Sequence[int], cap: int | None = None) -> QPoly:
    """Generating function of linear extensions by inversions of pi(f)."""
    return extension_stats(P, omega, cap)[1]


def maj_poly(P: Poset, omega: Sequence[int], cap: int | None = None) -> QPoly:
    """Generating function of linear extensions by major index of pi(f)."""
    return extension_stats(P, omega, cap)[2]


def is_sign_balanced(P: Poset, cap: int | None = None) -> bool:
    # independent of the labeling, so any one will do
    return inv_poly(P, natural_labeling(P), cap)(-1) == 0


def is_maj_balanced(P: Poset, omega: Sequence[int] | None = None, cap: int | None = None) -> bool:
    if omega is None:
        omega = natural_labeling(P)
    return maj_poly(P, omega, cap)(-1) == 0


def ruskey_hypothesis(P: Poset) -> bool:
    """Every nonminimal element lies above at least two minimal elements."""
    mins = 0
    for t in P.minimal():
        mins |= 1 << t
    return all(
        bin(P.below[t] & mins).count("1") >= 2 for t in range(P.n) if P.below[t]
    )


def maximal_chain_lengths(P: Poset) -> set[int]:
    """Lengths of all maximal chains (minimal element up to maximal element)."""
    memo: dict[int, set[int]] = {}

    def up(t: int) -> set[int]:
        if t not in memo:
            ups = P.upper_covers(t)
            memo[t] = {0} if not ups else {1 + k for u in ups for k in up(u)}
        return memo[t]

    out: set[int] = set()
    for t in P.minimal():
        out |= up(t)
    return out


def random_poset(n: int, rng: random.Random, p: float = 0.3) -> Poset:
    """Each pair i < j is related with probability p, then closed and reduced."""
    rel = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return make_poset(n, rel)


def random_labeling(n: int, rng: random.Random) -> Labeling:
    omega = list(range(1, n + 1))
    rng.shuffle(omega)
    return tuple(omega)


def parse_poset(text: str) -> tuple[Poset, Labeling | None]:
    """Parse the plain-text poset format.

    Line ``n <count>``, then one ``<s> <t>`` per cover, optionally a line
    ``omega <labels...>``.  ``#`` starts a comment.
    """
    n = None
    rel = []
    omega = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        try:
            if tok[0] == "n":
                if n is not None or len(tok) != 2:
                    raise PosetError(f"line {lineno}: bad 'n' line")
                n = int(tok[1])
            elif tok[0] == "omega":
                omega = tuple(int(x) for x in tok[1:])
            elif len(tok) == 2:
                rel.append((int(tok[0]), int(tok[1])))
            else:
                raise PosetError(f"line {lineno}: cannot parse {raw!r}")
        except ValueError as exc:
            if isinstance(exc, PosetError):
                raise
            raise PosetError(f"line {lineno}: {exc}") from None
    if n is None:
        raise PosetError("missing 'n <count>' line")
    P = make_poset(n, rel)
    if omega is not None:
        omega = check_labeling(P, omega)
    return P, omega


def format_poset(P: Poset, omega: Sequence[int] | None = None) -> str:
    lines = [f"n {P.n}"]
    lines += [f"{s} {t}" for s, t in sorted(P.covers)]
    if omega is not None:
        lines.append("omega " + " ".join(map(str, omega)))
    return "\n".join(lines) + "\n"


def canonical_form(P: Poset) -> tuple:
    """Isomorphism-invariant key: lexicographically least relabelled relation.

    Only relabellings that sort elements by a degree invariant are tried.
    """
    from itertools import permutations, product

    inv_of = [
        (bin(P.below[t]).count("1"), bin(P.above[t]).count("1"),
         len(P.lower_covers(t)), len(P.upper_covers(t)))
        for t in range(P.n)
    ]
    groups: dict[tuple, list[int]] = {}
    for t in range(P.n):
        groups.setdefault(inv_of[t], []).append(t)
    keys = sorted(groups)
    best = None
    for parts in product(*(permutations(groups[k]) for k in keys)):
        order = [t for part in parts for t in part]
        pos = {t: i for i, t in enumerate(order)}
        code = tuple(sorted((pos[s], pos[t]) for s, t in P.covers))
        if best is None or code < best:
            best = code
    return (P.n, tuple(keys), best)


def all_posets(n: int) -> list[Poset]:
    """One representative of every isomorphism class of n-element posets.

    Built by adjoining a new maximal element above each order ideal of every
    (n-1)-element poset; removing a maximal element inverts this.
    """
    level = [make_poset(0, [])]
    for m in range(1, n + 1):
        seen = {}
        for Q in level:
            for mask in order_ideals(Q):
                rel = [(s, m - 1) for s in _bits(mask)]
                rel += list(Q.covers)
                P = make_poset(m, rel)
                key = canonical_form(P)
                if key not in seen:
                    seen[key] = P
        level = [seen[k] for k in sorted(seen)]
    return level


def order_ideals(P: Poset) -> list[int]:
    """All order ideals as sorted bitmasks, empty and full included."""
    topo = sorted(range(P.n), key=natural_labeling(P).__getitem__) if P.n else []
    out: list[int] = []

    def rec(i: int, mask: int):
        if i == P.n:
            out.append(mask)
            return
        t = topo[i]
        rec(i + 1, mask)
        # everything below t precedes it in topo, so membership is decided
        if (P.below[t] & ~mask) == 0:
            rec(i + 1, mask | (1 << t))

    rec(0, 0)
    return sorted(out)
