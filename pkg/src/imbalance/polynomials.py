"""Exact integer polynomials.

``QPoly`` is a dense univariate polynomial in q with integer coefficients,
``MultiPoly`` a sparse polynomial in any fixed number of variables.  Python
ints are unbounded, so no overflow handling is needed.
"""

from __future__ import annotations

from itertools import zip_longest
from math import comb
from typing import Iterable, Sequence


class QPoly:
    """Dense polynomial in q, coefficient i multiplies q**i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "QPoly":
        if degree < 0:
            raise ValueError("negative exponent")
        return cls([0] * degree + [coeff])

    @classmethod
    def const(cls, c: int) -> "QPoly":
        return cls([c])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def low_degree(self) -> int:
        """Smallest exponent with a nonzero coefficient (-1 for zero)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return -1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, q):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def _coerce(self, other) -> "QPoly":
        if isinstance(other, QPoly):
            return other
        if isinstance(other, int):
            return QPoly([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QPoly(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self):
        return QPoly(-a for a in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return QPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result, base = QPoly([1]), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "QPoly":
        """Multiply by q**k."""
        if not self.coeffs:
            return self
        return QPoly([0] * k + list(self.coeffs))

    def divmod(self, other: "QPoly") -> tuple["QPoly", "QPoly"]:
        """Long division; requires a leading coefficient of +-1 in the divisor."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        lead = other.coeffs[-1]
        if lead not in (1, -1):
            raise ValueError("divisor must be monic up to sign")
        rem = list(self.coeffs)
        dq = other.degree
        quot = [0] * max(len(rem) - dq, 0)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i]
            if c:
                f = c * lead
                quot[i - dq] = f
                for j, b in enumerate(other.coeffs):
                    rem[i - dq + j] -= f * b
        return QPoly(quot), QPoly(rem)

    def exact_div(self, other: "QPoly") -> "QPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError("polynomial division is not exact")
        return q

    def strip_low(self) -> "QPoly":
        """Divide out the largest power of q dividing self."""
        low = self.low_degree
        return QPoly(self.coeffs[low:]) if low > 0 else self

    def is_palindromic(self, total_degree: int) -> bool:
        """True iff q**total_degree * p(1/q) == p(q)."""
        if self.degree > total_degree:
            return False
        padded = list(self.coeffs) + [0] * (total_degree + 1 - len(self.coeffs))
        return padded == padded[::-1]

    def __eq__(self, other):
        if isinstance(other, int):
            other = QPoly([other])
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"QPoly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mon = "" if i == 0 else ("q" if i == 1 else f"q^{i}")
            if mon and c == 1:
                terms.append(mon)
            elif mon and c == -1:
                terms.append("-" + mon)
            else:
                terms.append(f"{c}{'*' + mon if mon else ''}")
        return " + ".join(terms).replace("+ -", "- ")

    def to_list(self) -> list[int]:
        return list(self.coeffs)


ZERO = QPoly()
ONE = QPoly([1])
Q = QPoly([0, 1])


def q_int(k: int) -> QPoly:
    """[k]_q = 1 + q + ... + q**(k-1)."""
    return QPoly([1] * k)


def q_factorial(n: int) -> QPoly:
    out = ONE
    for k in range(1, n + 1):
        out = out * q_int(k)
    return out


def q_binomial(n: int, k: int) -> QPoly:
    """Gaussian binomial coefficient via the q-Pascal rule."""
    if not 0 <= k <= n:
        raise ValueError(f"q_binomial needs 0 <= k <= n, got n={n}, k={k}")
    row = [ONE]
    for m in range(1, n + 1):
        nxt = [ONE] * (m + 1)
        for j in range(1, m):
            nxt[j] = row[j - 1] + row[j].shift(j)
        row = nxt
    return row[k]


def one_minus_q_power(h: int) -> QPoly:
    """1 - q**h."""
    return ONE - QPoly.monomial(h)


class MultiPoly:
    """Sparse integer polynomial; keys are exponent tuples of fixed length."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        clean: dict[tuple[int, ...], int] = {}
        for exps, c in (terms or {}).items():
            if len(exps) != nvars:
                raise ValueError("exponent tuple has wrong length")
            if c:
                clean[tuple(exps)] = clean.get(tuple(exps), 0) + c
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def variable(cls, nvars: int, index: int) -> "MultiPoly":
        e = [0] * nvars
        e[index] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def const(cls, nvars: int, c: int) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: c})

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(self.nvars, out)

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + other.scale(-1)

    def scale(self, k: int) -> "MultiPoly":
        return MultiPoly(self.nvars, {e: k * c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiPoly":
        out = MultiPoly.const(self.nvars, 1)
        for _ in range(k):
            out = out * self
        return out

    def substitute_zero(self, index: int) -> "MultiPoly":
        """Set variable ``index`` to 0."""
        return MultiPoly(self.nvars, {e: c for e, c in self.terms.items() if e[index] == 0})

    def uses_variable(self, index: int) -> bool:
        return any(e[index] for e in self.terms)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.terms.items())

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.sorted_terms() == other.sorted_terms()

    def __hash__(self):
        return hash((self.nvars, tuple(self.sorted_terms())))

    def __repr__(self):
        return f"MultiPoly({self.nvars}, {dict(self.sorted_terms())})"

    def format(self, names: Sequence[str]) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mon = "*".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k
            )
            if not mon:
                parts.append(str(c))
            elif c == 1:
                parts.append(mon)
            else:
                parts.append(f"{c}*{mon}")
        return " + ".join(parts)


def binomial_power(nvars: int, i: int, j: int, power: int) -> MultiPoly:
    """(v_i + v_j)**power expanded by the binomial theorem."""
    out = {}
    for a in range(power + 1):
        e = [0] * nvars
        e[i] += a
        e[j] += power - a
        out[tuple(e)] = out.get(tuple(e), 0) + comb(power, a)
    return MultiPoly(nvars, out)
