"""Multivariate truncated power series over exact rationals.

A :class:`TruncatedSeries` stores coefficients for exponent vectors of total
degree <= bound, in a sparse map keyed by exponent tuples; coefficients are
``fractions.Fraction`` and zero coefficients are never stored.  Truncation is
by *total* degree, matching the grading in which a radius-N ball of the
group determines the series exactly to degree N.

Values are immutable and all operations are pure.

>>> t1, t2 = variables(2, 4)
>>> print((one(2, 4) + t1) * (one(2, 4) + t2))
1 + t1 + t2 + t1·t2
>>> print(geometric(2, (1, 1), 4))
1 + t1·t2 + t1^2·t2^2
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

__all__ = [
    "TruncatedSeries",
    "one",
    "zero",
    "monomial",
    "variables",
    "geometric",
    "from_counts",
    "render_monomial",
]

Exponent = tuple[int, ...]


def _term_order(exp: Exponent) -> tuple:
    """Graded order: total degree first, then t1-dominant terms before t2-dominant."""
    return (sum(exp), tuple(-e for e in exp))


def render_monomial(names: Sequence[str], exp: Exponent) -> str:
    """Canonical monomial text like ``t1^2·t2`` (empty for the constant term)."""
    return "·".join(f"{names[i]}^{e}" if e > 1 else names[i] for i, e in enumerate(exp) if e > 0)


class TruncatedSeries:
    """Polynomial truncated at a total-degree bound, over Fraction."""

    __slots__ = ("nvars", "bound", "coeffs")

    def __init__(self, nvars: int, bound: int, coeffs: Mapping[Exponent, Fraction | int]):
        if nvars < 1:
            raise ValueError("need at least one variable")
        if bound < 0:
            raise ValueError("bound must be >= 0")
        clean: dict[Exponent, Fraction] = {}
        for exp, c in coeffs.items():
            if len(exp) != nvars or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent vector {exp} for {nvars} variables")
            if sum(exp) > bound:
                continue
            c = Fraction(c)
            if c != 0:
                clean[tuple(exp)] = c
        self.nvars = nvars
        self.bound = bound
        self.coeffs = clean

    # -- ring structure ----------------------------------------------------

    def _check_compatible(self, other: "TruncatedSeries") -> int:
        if self.nvars != other.nvars:
            raise ValueError(f"variable mismatch: {self.nvars} vs {other.nvars}")
        return min(self.bound, other.bound)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        bound = self._check_compatible(other)
        out = dict(self.coeffs)
        for exp, c in other.coeffs.items():
            out[exp] = out.get(exp, Fraction(0)) + c
        return TruncatedSeries(self.nvars, bound, out)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.nvars, self.bound, {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries(
                self.nvars, self.bound, {e: c * other for e, c in self.coeffs.items()}
            )
        bound = self._check_compatible(other)
        out: dict[Exponent, Fraction] = {}
        for ea, ca in self.coeffs.items():
            da = sum(ea)
            for eb, cb in other.coeffs.items():
                if da + sum(eb) > bound:
                    continue
                exp = tuple(x + y for x, y in zip(ea, eb))
                prev = out.get(exp)
                out[exp] = ca * cb if prev is None else prev + ca * cb
        return TruncatedSeries(self.nvars, bound, out)

    __rmul__ = __mul__

    def invert(self) -> "TruncatedSeries":
        """Multiplicative inverse as a power series, exact up to the bound.

        Requires a nonzero constant term.  Horner iteration on the tail:
        with a = c0*(1 - r), 1/a = (1/c0)*(1 + r + r^2 + ...).
        """
        zero_exp = (0,) * self.nvars
        c0 = self.coeffs.get(zero_exp, Fraction(0))
        if c0 == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        inv_c0 = Fraction(1) / c0
        # r = 1 - a/c0 has zero constant term
        r = one(self.nvars, self.bound) - self * inv_c0
        acc = one(self.nvars, self.bound)
        for _ in range(self.bound):
            acc = one(self.nvars, self.bound) + r * acc
        return acc * inv_c0

    # -- reshaping -----------------------------------------------------------

    def truncate(self, bound: int) -> "TruncatedSeries":
        if bound > self.bound:
            raise ValueError("cannot raise the bound of a truncated series")
        return TruncatedSeries(self.nvars, bound, self.coeffs)

    def collapse_variables(self, assignment: Iterable[int], nvars_out: int) -> "TruncatedSeries":
        """Substitution homomorphism t_i -> u_{assignment[i]}.

        ``assignment`` maps each old variable index to a new variable index;
        exponents of variables mapped to the same target add up.
        """
        assign = tuple(assignment)
        if len(assign) != self.nvars or any(not 0 <= a < nvars_out for a in assign):
            raise ValueError("assignment must map every old variable to a new index")
        out: dict[Exponent, Fraction] = {}
        for exp, c in self.coeffs.items():
            new = [0] * nvars_out
            for i, e in enumerate(exp):
                new[assign[i]] += e
            key = tuple(new)
            prev = out.get(key)
            out[key] = c if prev is None else prev + c
        return TruncatedSeries(nvars_out, self.bound, out)

    def permute_variables(self, perm: Iterable[int]) -> "TruncatedSeries":
        """Relabel variables: new exponent of t_{perm[i]} is the old one of t_i."""
        p = tuple(perm)
        if sorted(p) != list(range(self.nvars)):
            raise ValueError(f"{p} is not a permutation of range({self.nvars})")
        out: dict[Exponent, Fraction] = {}
        for exp, c in self.coeffs.items():
            new = [0] * self.nvars
            for i, e in enumerate(exp):
                new[p[i]] = e
            out[tuple(new)] = c
        return TruncatedSeries(self.nvars, self.bound, out)

    # -- queries -----------------------------------------------------------

    def coefficient(self, exp: Exponent) -> Fraction:
        return self.coeffs.get(tuple(exp), Fraction(0))

    def degree_slice(self, degree: int) -> dict[Exponent, Fraction]:
        return {e: c for e, c in self.coeffs.items() if sum(e) == degree}

    def evaluate(self, point: Iterable[Fraction | int]) -> Fraction:
        """Plain substitution of the stored (truncated) polynomial."""
        pt = [Fraction(x) for x in point]
        if len(pt) != self.nvars:
            raise ValueError("point dimension mismatch")
        total = Fraction(0)
        for exp, c in self.coeffs.items():
            term = c
            for x, e in zip(pt, exp):
                term *= x**e
            total += term
        return total

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.nvars == other.nvars
            and self.bound == other.bound
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.nvars, self.bound, frozenset(self.coeffs.items())))

    def first_difference(self, other: "TruncatedSeries") -> Exponent | None:
        """First exponent vector (in canonical term order) where two series differ."""
        keys = set(self.coeffs) | set(other.coeffs)
        diffs = [e for e in keys if self.coeffs.get(e, 0) != other.coeffs.get(e, 0)]
        return min(diffs, key=_term_order) if diffs else None

    # -- rendering -----------------------------------------------------------

    def _var_names(self) -> list[str]:
        return ["t"] if self.nvars == 1 else [f"t{i + 1}" for i in range(self.nvars)]

    def __str__(self) -> str:
        """Canonical text: graded term order (t1-dominant first), exact coefficients."""
        if not self.coeffs:
            return "0"
        names = self._var_names()
        parts: list[str] = []
        for exp in sorted(self.coeffs, key=_term_order):
            c = self.coeffs[exp]
            mono = render_monomial(names, exp)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}·{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"TruncatedSeries({self.nvars} vars, bound={self.bound}, {self})"


# -- constructors ------------------------------------------------------------


def zero(nvars: int, bound: int) -> TruncatedSeries:
    return TruncatedSeries(nvars, bound, {})


def one(nvars: int, bound: int) -> TruncatedSeries:
    return TruncatedSeries(nvars, bound, {(0,) * nvars: Fraction(1)})


def monomial(nvars: int, bound: int, exp: Exponent, coeff: Fraction | int = 1) -> TruncatedSeries:
    return TruncatedSeries(nvars, bound, {tuple(exp): Fraction(coeff)})


def variables(nvars: int, bound: int) -> list[TruncatedSeries]:
    return [
        monomial(nvars, bound, tuple(1 if j == i else 0 for j in range(nvars)))
        for i in range(nvars)
    ]


def geometric(nvars: int, exp: Exponent, bound: int) -> TruncatedSeries:
    """1 + x + x^2 + ... for the monomial x with the given exponent vector."""
    step = sum(exp)
    if step == 0:
        raise ValueError("geometric series needs a non-constant monomial")
    out: dict[Exponent, Fraction] = {}
    k = 0
    while k * step <= bound:
        out[tuple(k * e for e in exp)] = Fraction(1)
        k += 1
    return TruncatedSeries(nvars, bound, out)


def from_counts(counts: Mapping[Exponent, int], nvars: int, bound: int) -> TruncatedSeries:
    """Series with integer coefficients given as a counts map."""
    return TruncatedSeries(nvars, bound, {e: Fraction(c) for e, c in counts.items()})
