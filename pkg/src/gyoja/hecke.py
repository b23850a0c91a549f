"""Representations of the affine Hecke algebra and their generating series.

The algebra has a basis e_w indexed by group elements, generators e_s obeying
the quadratic relation (e_s + 1)(e_s - q) = 0 and multiplicativity
e_w e_w' = e_ww' when lengths add, with q = q_o**2 (the parameter of the
quadratic unramified situation; APIs take q_o and derive q so the two never
get confused).

For a representation r, the value r(e_w) is the ordered product of the
generator images along any reduced word of w -- the braid relations make it
word-independent, which the test suite checks exhaustively rather than
assumes.  The attached generating function

    L(t, r) = sum_w r(e_w) * t_1^(l_1(w)) ... t_m^(l_m(w))

is accumulated here from enumerated balls, never from the closed forms, so
the two modules stay independent checks of one another.

Two different "trivial" objects are kept deliberately distinct: the trivial
*Hecke character* sends every e_s to q (a valid representation), while the
*counting character* sends every e_w to 1 -- not a Hecke representation at
all, but exactly the functional that degenerates L(t, r) into the growth
series W(t).  Use ``COUNTING`` for the latter.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .cartan import INFINITE_BOND, AffineCoxeterSystem, ClassPartition, SignCharacter
from .series import TruncatedSeries, from_counts
from .weyl import Ball, GroupElement

__all__ = [
    "COUNTING",
    "CountingCharacter",
    "MatrixRep",
    "RepValidationError",
    "RepValidationReport",
    "validate_rep",
    "eval_rep_on_element",
    "char_value_e_w",
    "counting_series",
    "gyoja_series",
    "partial_sums_at_point",
    "parse_sign_vector",
]


class CountingCharacter:
    """Formal functional e_w -> 1; turns L(t, r) into the growth series W(t)."""

    def __repr__(self) -> str:
        return "COUNTING"


COUNTING = CountingCharacter()


def parse_sign_vector(text: str) -> SignCharacter:
    """Parse "[-1,1]" or "-1,1" into a SignCharacter."""
    body = text.strip().removeprefix("[").removesuffix("]")
    try:
        signs = tuple(int(p) for p in body.replace(" ", "").split(",") if p)
    except ValueError as exc:
        raise ValueError(f"cannot parse sign vector {text!r}") from exc
    return SignCharacter(signs)


# ---------------------------------------------------------------------------
# Degree-1 characters
# ---------------------------------------------------------------------------


def char_value_e_s(eps: SignCharacter, class_index: int, q_o: int) -> Fraction:
    """Value on a generator of class i: -1 when eps_i = -1, q = q_o^2 when +1."""
    s = eps.signs[class_index]
    return Fraction(s * q_o ** (s + 1))


def char_value_e_w(eps: SignCharacter, multilength: Sequence[int], q_o: int) -> Fraction:
    """Value on e_w from the class-graded length vector of w.

    Multiplicativity along a reduced word gives
    r(e_w) = prod_i (eps_i * q_o^(eps_i + 1))^(l_i(w)).
    """
    if q_o < 2:
        raise ValueError("q_o must be >= 2 (a residue field size)")
    if len(multilength) != len(eps.signs):
        raise ValueError("multilength / sign vector dimension mismatch")
    value = Fraction(1)
    for s, li in zip(eps.signs, multilength):
        value *= Fraction(s * q_o ** (s + 1)) ** li
    return value


# ---------------------------------------------------------------------------
# Matrix representations
# ---------------------------------------------------------------------------


def _as_object_matrix(rows, dim: int) -> np.ndarray:
    mat = np.empty((dim, dim), dtype=object)
    for i in range(dim):
        for j in range(dim):
            mat[i, j] = Fraction(rows[i][j])
    return mat


def _object_eye(dim: int) -> np.ndarray:
    mat = np.empty((dim, dim), dtype=object)
    for i in range(dim):
        for j in range(dim):
            mat[i, j] = Fraction(1) if i == j else Fraction(0)
    return mat


@dataclass(frozen=True)
class MatrixRep:
    """One exact-rational matrix per generator, plus the parameter q."""

    dimension: int
    q: Fraction
    matrices: tuple[np.ndarray, ...]

    @staticmethod
    def make(matrices: Sequence, q_o: int | None = None, q: Fraction | int | None = None) -> "MatrixRep":
        if (q_o is None) == (q is None):
            raise ValueError("give exactly one of q_o or q")
        qq = Fraction(q_o) ** 2 if q_o is not None else Fraction(q)
        mats = []
        dim = len(matrices[0])
        for rows in matrices:
            mats.append(_as_object_matrix(np.asarray(rows, dtype=object), dim))
        return MatrixRep(dim, qq, tuple(mats))

    @staticmethod
    def from_sign_character(eps: SignCharacter, partition: ClassPartition, q_o: int) -> "MatrixRep":
        if len(eps.signs) != partition.m:
            raise ValueError("sign vector length does not match the class count")
        mats = [
            [[char_value_e_s(eps, partition.class_of[s], q_o)]]
            for s in range(len(partition.class_of))
        ]
        return MatrixRep.make(mats, q_o=q_o)


@dataclass(frozen=True)
class RepValidationReport:
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        if self.ok:
            return "all quadratic and braid relations hold"
        return "; ".join(self.violations)


class RepValidationError(ValueError):
    def __init__(self, report: RepValidationReport):
        super().__init__(str(report))
        self.report = report


def _is_zero_matrix(mat: np.ndarray) -> bool:
    return all(x == 0 for x in mat.flat)


def validate_rep(rep: MatrixRep, system: AffineCoxeterSystem) -> RepValidationReport:
    """Check every quadratic and braid relation exactly; report the failures."""
    violations = []
    if len(rep.matrices) != system.num_gens:
        return RepValidationReport(
            (f"expected {system.num_gens} generator matrices, got {len(rep.matrices)}",)
        )
    eye = _object_eye(rep.dimension)
    for s, mat in enumerate(rep.matrices):
        lhs = (mat + eye).dot(mat - rep.q * eye)
        if not _is_zero_matrix(lhs):
            violations.append(f"quadratic relation fails at generator {s}")
    for s in range(system.num_gens):
        for t in range(s + 1, system.num_gens):
            mst = system.coxeter_matrix[s][t]
            if mst == INFINITE_BOND:
                continue
            left = eye
            right = eye
            for k in range(mst):
                left = left.dot(rep.matrices[s] if k % 2 == 0 else rep.matrices[t])
                right = right.dot(rep.matrices[t] if k % 2 == 0 else rep.matrices[s])
            if not _is_zero_matrix(left - right):
                violations.append(f"braid relation fails for pair ({s},{t}) with bond {mst}")
    return RepValidationReport(tuple(violations))


def eval_rep_on_word(rep: MatrixRep, word: Sequence[int]) -> np.ndarray:
    out = _object_eye(rep.dimension)
    for s in word:
        out = out.dot(rep.matrices[s])
    return out


def eval_rep_on_element(rep: MatrixRep, element: GroupElement) -> np.ndarray:
    """r(e_w) as the ordered product along the element's geodesic.

    Any reduced word gives the same product for a rep that passes
    :func:`validate_rep`; callers are expected to have validated once.
    """
    return eval_rep_on_word(rep, element.geodesic)


# ---------------------------------------------------------------------------
# Generating series
# ---------------------------------------------------------------------------


def counting_series(ball: Ball, bound: int | None = None) -> TruncatedSeries:
    """Growth series W(t): one t_1^(l_1)...t_m^(l_m) term per element."""
    if bound is None:
        bound = ball.radius
    if bound > ball.radius:
        raise ValueError(f"ball of radius {ball.radius} cannot determine degree {bound}")
    return from_counts(ball.multilength_counts(), ball.system.m, bound)


def gyoja_series(
    ball: Ball,
    rep: CountingCharacter | SignCharacter | MatrixRep,
    q_o: int | None = None,
    bound: int | None = None,
):
    """Truncated generating series L(t, r) accumulated over a ball.

    For ``COUNTING`` and a :class:`SignCharacter` (requires ``q_o``) the
    result is a scalar :class:`TruncatedSeries`; for a :class:`MatrixRep` it
    is a (d, d) object array of series.
    """
    if bound is None:
        bound = ball.radius
    if bound > ball.radius:
        raise ValueError(f"ball of radius {ball.radius} cannot determine degree {bound}")
    m = ball.system.m
    if isinstance(rep, CountingCharacter):
        return counting_series(ball, bound)
    if isinstance(rep, SignCharacter):
        if q_o is None:
            raise ValueError("a sign character needs q_o")
        coeffs = {
            ml: count * char_value_e_w(rep, ml, q_o)
            for ml, count in ball.multilength_counts().items()
        }
        return TruncatedSeries(m, bound, coeffs)
    if isinstance(rep, MatrixRep):
        acc: dict[tuple[int, ...], np.ndarray] = {}
        for el in ball:
            if el.length > bound:
                continue
            mat = eval_rep_on_element(rep, el)
            prev = acc.get(el.multilength)
            acc[el.multilength] = mat if prev is None else prev + mat
        d = rep.dimension
        out = np.empty((d, d), dtype=object)
        for i in range(d):
            for j in range(d):
                out[i, j] = TruncatedSeries(
                    m, bound, {ml: mat[i, j] for ml, mat in acc.items()}
                )
        return out
    raise TypeError(f"cannot form a series for {type(rep).__name__}")


def partial_sums_at_point(ball: Ball, eps: SignCharacter, q_o: int) -> list[Fraction]:
    """Partial sums S_k = sum over length <= k of r(e_w) * q_o^(-l(w)).

    The limit, when the character is a discrete series one, is the value the
    closed forms compute directly; the sequence is a convergence diagnostic.
    """
    if q_o < 2:
        raise ValueError("q_o must be >= 2")
    by_length = [Fraction(0)] * (ball.radius + 1)
    for ml, count in ball.multilength_counts().items():
        length = sum(ml)
        by_length[length] += count * char_value_e_w(eps, ml, q_o) * Fraction(1, q_o) ** length
    sums = []
    acc = Fraction(0)
    for term in by_length:
        acc += term
        sums.append(acc)
    return sums
