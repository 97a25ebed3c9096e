"""Shifted tableaux and the imbalance identities for partition shapes.

Also the Schur-basis operators U(q), D(q) and A acting on finite formal
combinations of partitions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Callable, Iterable, Sequence

from imbalance.polynomials import ONE, MultiPoly, QPoly, q_binomial
from imbalance.poset import count_extensions, make_poset
from imbalance.shapes import (
    Partition, ShapeError, add_cell, addable, b_stat, conjugate, corners, d_stat,
    hooks, imbalance, partition, partitions, remove_cell, v_stat,
)

# -- shifted tableaux --------------------------------------------------------


@lru_cache(maxsize=None)
def _g_strict(mu: tuple[int, ...]) -> int:
    if not mu:
        return 1
    total = 0
    for i in range(len(mu)):
        last = i == len(mu) - 1
        if last or mu[i] - 1 > mu[i + 1]:
            smaller = list(mu)
            smaller[i] -= 1
            if smaller[-1] == 0:
                smaller.pop()
            total += _g_strict(tuple(smaller))
    return total


def _sort_sign(seq: Sequence[int]) -> int:
    """Sign of the permutation sorting distinct entries into decreasing order."""
    s = list(seq)
    inversions = sum(1 for i in range(len(s)) for j in range(i + 1, len(s)) if s[i] < s[j])
    return -1 if inversions % 2 else 1


def g_shifted(mu: Iterable[int]) -> int:
    """Number of shifted standard tableaux, extended to any integer sequence.

    Trailing zeros are dropped; a repeated or negative entry gives 0; otherwise
    the result is the sign of the sorting permutation times g of the sorted
    strict partition (interior zeros are dropped after sorting).
    """
    mu = list(mu)
    while mu and mu[-1] == 0:
        mu.pop()
    if any(x < 0 for x in mu) or len(set(mu)) != len(mu):
        return 0
    sign = _sort_sign(mu)
    strict = tuple(x for x in sorted(mu, reverse=True) if x > 0)
    return sign * _g_strict(strict)


def shifted_syt_count(mu: Sequence[int]) -> int:
    """Brute force: linear extensions of the shifted diagram of a strict mu."""
    mu = tuple(mu)
    if any(a <= b for a, b in zip(mu, mu[1:])) or any(x <= 0 for x in mu):
        raise ShapeError(f"{mu} is not a strict partition")
    cs = [(i, j) for i, part in enumerate(mu) for j in range(i, i + part)]
    rel = [
        (a, b)
        for a, (i, j) in enumerate(cs)
        for b, (k, l) in enumerate(cs)
        if a != b and i <= k and j <= l
    ]
    return count_extensions(make_poset(len(cs), rel))


# -- White's rectangles ------------------------------------------------------


def white_staircase(m: int, n: int) -> tuple[int, ...]:
    """((m+n-1)/2, (m+n-3)/2, ..., (|n-m|+1)/2) for m, n of opposite parity."""
    top, bottom = (m + n - 1) // 2, (abs(n - m) + 1) // 2
    return tuple(range(top, bottom - 1, -1))


def white_magnitude(m: int, n: int) -> int:
    """|I| of the m x n rectangle as predicted by White's theorem."""
    if m < 1 or n < 1:
        raise ValueError("rectangle sides must be positive")
    if m == 1 or n == 1:
        return 1
    if (m - n) % 2 == 0:
        return 0
    return g_shifted(white_staircase(m, n))


@dataclass(frozen=True)
class RectangleRow:
    m: int
    n: int
    formula: int
    observed: int

    @property
    def sign(self) -> int:
        return (self.observed > 0) - (self.observed < 0)

    @property
    def passed(self) -> bool:
        return abs(self.observed) == self.formula


def rectangle_imbalance(m: int, n: int) -> int:
    """Signed I of the m x n rectangle (m rows of length n).

    The magnitude comes from White's formula; the sign, which the formula
    leaves open, is read off the corner recursion.
    """
    mag = white_magnitude(m, n)
    observed = imbalance((n,) * m)
    if abs(observed) != mag:
        raise ArithmeticError(f"{m}x{n}: recursion gives {observed}, formula {mag}")
    return observed


def rectangle_row(m: int, n: int) -> RectangleRow:
    return RectangleRow(m, n, white_magnitude(m, n), imbalance((n,) * m))


# -- Eremenko-Gabrielov three- and four-row identities -----------------------

Term = tuple[int, tuple[int, ...]]


def _eg_terms(lam: Sequence[int]) -> tuple[str, list[Term]]:
    """Family name and the signed g-terms predicted for lam (3 or 4 parts)."""
    lam = tuple(lam)
    if len(lam) == 3:
        x, y, z = lam
        a, b, c = x // 2, y // 2, z // 2
        key = (x % 2, y % 2, z % 2)
        table = {
            (0, 0, 0): [(1, (a, b, c)), (-1, (a + 1, b, c - 1))],
            (1, 0, 0): [(1, (a, b, c)), (1, (a + 1, b - 1, c))],
            (0, 1, 0): [],
            (0, 0, 1): [(-1, (a + 1, b - 1, c)), (-1, (a + 1, b, c - 1))],
            (1, 1, 0): [(1, (a + 1, b, c)), (1, (a + 1, b + 1, c - 1))],
            (1, 0, 1): [],
            (0, 1, 1): [(1, (a + 1, b, c)), (1, (a, b + 1, c))],
            (1, 1, 1): [(1, (a, b + 1, c)), (1, (a + 1, b + 1, c - 1))],
        }
        name = "({},{},{})".format(*(f"2{v}+1" if p else f"2{v}" for v, p in zip("abc", key)))
        return name, table[key]
    if len(lam) == 4 and all(x % 2 == 0 for x in lam):
        a, b, c, d = (x // 2 for x in lam)
        return "(2a,2b,2c,2d)", [
            (1, (a, b, c, d)),
            (-1, (a + 1, b, c - 1, d)),
            (-1, (a + 1, b + 1, c - 1, d - 1)),
            (-2, (a + 1, b, c, d - 1)),
        ]
    raise ValueError(f"no printed identity for {lam}")


EG_FAMILIES = (
    "(2a,2b,2c)", "(2a+1,2b,2c)", "(2a,2b+1,2c)", "(2a,2b,2c+1)",
    "(2a+1,2b+1,2c)", "(2a+1,2b,2c+1)", "(2a,2b+1,2c+1)", "(2a+1,2b+1,2c+1)",
)


def eg_family(lam: Sequence[int]) -> str:
    return _eg_terms(partition(lam))[0]


def eg_three_row_check(a: int, b: int, c: int, family: str) -> tuple[int, int]:
    """(I_lam at q=-1, the predicted g-combination) for one family member."""
    if family not in EG_FAMILIES and family != "(2a,2b,2c,2d)":
        raise ValueError(f"unknown family {family}")
    odd = [part.endswith("+1") for part in family.strip("()").split(",")]
    lam = tuple(2 * v + o for v, o in zip((a, b, c), odd))
    try:
        lam = partition(lam)
    except ShapeError:
        raise ShapeError(f"{family} with a,b,c={a},{b},{c} is not a partition") from None
    if len(lam) != 3:
        raise ShapeError(f"{lam} does not have three positive parts")
    return eg_check(lam)


def _eg_amendment(lam: Partition) -> list[Term]:
    """Extra g-terms that make the printed all-odd and four-row lines hold.

    Found by exhaustive search over small coefficient vectors; each is the
    unique single-term correction consistent with every instance checked.
    """
    if len(lam) == 3 and all(x % 2 for x in lam):
        a, b, c = (x // 2 for x in lam)
        return [(2, (a + 1, b, c))]
    if len(lam) == 4 and all(x % 2 == 0 for x in lam):
        a, b, c, d = (x // 2 for x in lam)
        return [(-1, (a, b + 1, c, d - 1))]
    return []


def eg_check(lam: Sequence[int], amended: bool = False) -> tuple[int, int]:
    """(I_lam, the g-combination for lam's family).

    With ``amended`` the all-odd three-row and the four-row lines get their
    missing term; other families are unchanged.
    """
    lam = partition(lam)
    _, terms = _eg_terms(lam)
    if amended:
        terms = terms + _eg_amendment(lam)
    return imbalance(lam), sum(c * g_shifted(mu) for c, mu in terms)


def eg_instances(rows: int, max_size: int) -> list[Partition]:
    """Partitions with exactly ``rows`` positive parts and size <= max_size.

    Four-row instances are restricted to all-even parts.
    """
    out = []
    for n in range(rows, max_size + 1):
        for lam in partitions(n):
            if len(lam) == rows and (rows == 3 or all(x % 2 == 0 for x in lam)):
                out.append(lam)
    return out


# -- kcor / sytimb / hooksum -------------------------------------------------


def kcor_a_sum(m: int) -> int:
    """Sum over mu |- m of I_{2 mu}."""
    return sum(imbalance(tuple(2 * x for x in mu)) for mu in partitions(m))


def kcor_b_sum(m: int) -> int:
    """Sum over lam |- 2m of (-1)^v(lam) I_lam^2."""
    return sum((-1) ** v_stat(lam) * imbalance(lam) ** 2 for lam in partitions(2 * m))


Q_, T_, X_, Y_ = range(4)


def sytimb_sum(n: int) -> MultiPoly:
    """Sum over lam |- n of q^v(lam) t^d(lam) x^v(lam') y^d(lam') I_lam."""
    terms: dict[tuple[int, ...], int] = {}
    for lam in partitions(n):
        lc = conjugate(lam)
        e = (v_stat(lam), d_stat(lam), v_stat(lc), d_stat(lc))
        terms[e] = terms.get(e, 0) + imbalance(lam)
    return MultiPoly(4, terms)


def sytimb_b_sum(n: int) -> QPoly:
    """Sum over lam |- n of (-1)^v(lam) t^d(lam) I_lam^2, as a polynomial in t."""
    coeffs: dict[int, int] = {}
    for lam in partitions(n):
        d = d_stat(lam)
        coeffs[d] = coeffs.get(d, 0) + (-1) ** v_stat(lam) * imbalance(lam) ** 2
    top = max(coeffs, default=0)
    return QPoly(coeffs.get(i, 0) for i in range(top + 1))


def q_plus_x_power(n: int, nvars: int = 4, qi: int = Q_, xi: int = X_) -> MultiPoly:
    k = n // 2
    return MultiPoly(nvars, {
        tuple(j if v == qi else k - j if v == xi else 0 for v in range(nvars)): comb(k, j)
        for j in range(k + 1)
    })


def _hook_k(lam: Partition) -> int:
    return len(lam) - 1


def hook_imbalance_qbinomial(lam: Sequence[int]) -> int:
    """I of a hook (n-k, 1^k) as the q-binomial [n-1 choose k] at q = -1."""
    lam = partition(lam)
    if not lam:
        return 1
    return q_binomial(sum(lam) - 1, _hook_k(lam))(-1)


def _hook_syt(lam: Partition):
    """SYT of a hook as maps entry -> (row, col)."""
    from itertools import combinations

    n, k = sum(lam), _hook_k(lam)
    for col_entries in combinations(range(2, n + 1), k):
        pos = {1: (1, 1)}
        for r, v in enumerate(col_entries):
            pos[v] = (r + 2, 1)
        rest = [v for v in range(2, n + 1) if v not in set(col_entries)]
        for c, v in enumerate(rest):
            pos[v] = (1, c + 2)
        yield pos


def _reading_inv(pos: dict[int, tuple[int, int]]) -> int:
    word = [v for v, _ in sorted(pos.items(), key=lambda item: item[1])]
    return sum(1 for i in range(len(word)) for j in range(i + 1, len(word)) if word[i] > word[j])


def survivor_involution(lam: Sequence[int]) -> int:
    """Number of hook SYT left unpaired by the adjacent-transposition involution.

    Pairs are (2i-1, 2i) for even n and (2i, 2i+1) for odd n; the first pair
    lying in different rows and columns is swapped.  Paired tableaux are
    checked to have opposite inversion parity and survivors even parity.
    """
    lam = partition(lam)
    if not lam:
        return 1
    if any(x != 1 for x in lam[1:]):
        raise ShapeError(f"{lam} is not a hook")
    n = sum(lam)
    start = 1 if n % 2 == 0 else 2
    survivors = 0
    for pos in _hook_syt(lam):
        swap = None
        for a in range(start, n, 2):
            (r1, c1), (r2, c2) = pos[a], pos[a + 1]
            if r1 != r2 and c1 != c2:
                swap = a
                break
        if swap is None:
            survivors += 1
            if _reading_inv(pos) % 2:
                raise AssertionError(f"odd survivor {pos}")
            continue
        partner = dict(pos)
        partner[swap], partner[swap + 1] = pos[swap + 1], pos[swap]
        if (_reading_inv(pos) + _reading_inv(partner)) % 2 != 1:
            raise AssertionError("paired tableaux have equal parity")
    return survivors


def survivor_formula(lam: Sequence[int]) -> int:
    """Closed-form survivor count from the case analysis of the involution."""
    lam = partition(lam)
    n, k = sum(lam), _hook_k(lam)
    m, j = n // 2, k // 2
    if n % 2 == 0:
        return comb(m - 1, j)
    return comb(m, j) if k % 2 == 0 else 0


def hooksum_identity(n: int, route: str = "qbinomial") -> MultiPoly:
    """Sum over hooks lam |- n of q^v(lam) x^v(lam') I_lam (variables q, x).

    ``route`` picks how I_lam is evaluated: ``qbinomial``, ``survivor`` or
    ``recursion``.
    """
    evaluate: Callable[[Partition], int] = {
        "qbinomial": hook_imbalance_qbinomial,
        "survivor": survivor_involution,
        "recursion": imbalance,
    }[route]
    terms: dict[tuple[int, int], int] = {}
    for lam in hooks(n):
        e = (v_stat(lam), v_stat(conjugate(lam)))
        terms[e] = terms.get(e, 0) + evaluate(lam)
    return MultiPoly(2, terms)


# -- operators U(q), D(q), A -------------------------------------------------


class PartitionVector:
    """Finite combination sum c_lam s_lam with QPoly coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms: dict[Partition, QPoly] = {}
        for lam, c in (terms or {}).items():
            c = c if isinstance(c, QPoly) else QPoly([c])
            if not c.is_zero():
                self.terms[partition(lam)] = c

    @classmethod
    def basis(cls, lam: Sequence[int]) -> "PartitionVector":
        return cls({partition(lam): ONE})

    def __add__(self, other: "PartitionVector") -> "PartitionVector":
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out.get(lam, QPoly()) + c
        return PartitionVector(out)

    def scale(self, c) -> "PartitionVector":
        return PartitionVector({lam: v * c for lam, v in self.terms.items()})

    def at(self, q: int) -> dict[Partition, int]:
        return {lam: c(q) for lam, c in self.terms.items() if c(q)}

    def coefficient(self, lam: Sequence[int]) -> QPoly:
        return self.terms.get(partition(lam), QPoly())

    def __eq__(self, other):
        return isinstance(other, PartitionVector) and self.terms == other.terms

    def __repr__(self):
        return "PartitionVector({" + ", ".join(
            f"{lam}: {c}" for lam, c in sorted(self.terms.items())
        ) + "})"


def _weight(b: int, q: int | None) -> QPoly:
    return QPoly.monomial(b) if q is None else QPoly([q ** b])


def op_U(vec: PartitionVector, q: int | None = None) -> PartitionVector:
    """U(q) s_mu = sum over addable t of q^{b_{mu+t}(t)} s_{mu+t}.

    ``q=None`` keeps q symbolic; an integer specialises it.
    """
    out: dict[Partition, QPoly] = {}
    for mu, c in vec.terms.items():
        for t in addable(mu):
            lam = add_cell(mu, t)
            out[lam] = out.get(lam, QPoly()) + c * _weight(b_stat(lam, t), q)
    return PartitionVector(out)


def op_D(vec: PartitionVector, q: int | None = None) -> PartitionVector:
    """D(q) s_lam = sum over corners t of q^{b_lam(t)} s_{lam-t}."""
    out: dict[Partition, QPoly] = {}
    for lam, c in vec.terms.items():
        for t in corners(lam):
            mu = remove_cell(lam, t)
            out[mu] = out.get(mu, QPoly()) + c * _weight(b_stat(lam, t), q)
    return PartitionVector(out)


def op_A(vec: PartitionVector) -> PartitionVector:
    """A s_lam = (2 k(lam) + 1) s_lam with k the number of corners."""
    return PartitionVector({
        lam: c * (2 * len(corners(lam)) + 1) for lam, c in vec.terms.items()
    })


def du_commutator_holds(lam: Sequence[int]) -> bool:
    v = PartitionVector.basis(lam)
    lhs = op_D(op_U(v, -1), -1) + op_U(op_D(v, -1), -1)
    return lhs == op_A(v)


def du_commutator_check(n_max: int) -> bool:
    """DU + UD = A at q = -1 on every s_lam with |lam| <= n_max."""
    return all(du_commutator_holds(lam) for m in range(n_max + 1) for lam in partitions(m))


def u_power_expansion(n: int) -> PartitionVector:
    """U(q)^n applied to s_empty."""
    v = PartitionVector.basis(())
    for _ in range(n):
        v = op_U(v)
    return v


__all__ = [
    "g_shifted", "shifted_syt_count", "white_staircase", "white_magnitude",
    "rectangle_imbalance", "rectangle_row", "RectangleRow", "EG_FAMILIES",
    "eg_family", "eg_three_row_check", "eg_check",
    "eg_instances", "kcor_a_sum",
    "kcor_b_sum", "sytimb_sum", "sytimb_b_sum", "q_plus_x_power",
    "hook_imbalance_qbinomial", "survivor_involution", "survivor_formula",
    "hooksum_identity", "PartitionVector", "op_U", "op_D", "op_A",
    "du_commutator_holds", "du_commutator_check", "u_power_expansion",
]
