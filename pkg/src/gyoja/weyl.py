"""Exact enumeration of affine Weyl group elements by length.

Elements are represented as exact integer affine maps ``x -> M x + v`` in
simple-coroot coordinates; equality of elements is equality of coordinates.
Because the Cayley-graph distance from the identity equals the Coxeter
length, a breadth-first closure under the generators enumerates the ball of
radius N level by level: the children of a length-k element have length
k-1 or k+1, so a new level is the candidate set minus the previous level.

Each discovered element keeps one geodesic (its BFS discovery word) and the
class-graded length vector (l_1, ..., l_m), which is word-independent and
therefore may be accumulated along the discovery tree.

Levels are sorted by numeric lexicographic order of the flattened
(matrix, translation) row, so two runs (on either kernel backend) produce
byte-identical balls.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from typing import IO, Iterator

import numpy as np

from . import _kernels
from .cartan import AffineCoxeterSystem

__all__ = [
    "DEFAULT_MAX_ELEMENTS",
    "ResourceLimitExceeded",
    "NotReducedWordError",
    "GroupElement",
    "Ball",
    "enumerate_ball",
    "evaluate_word",
    "is_reduced",
    "multilength_of_word",
]

DEFAULT_MAX_ELEMENTS = 5_000_000
_CAP_ENV_VAR = "GYOJA_MAX_ELEMENTS"


def _effective_cap(max_elements: int | None) -> int:
    if max_elements is not None:
        return max_elements
    env = os.environ.get(_CAP_ENV_VAR, "").strip()
    return int(env) if env else DEFAULT_MAX_ELEMENTS


class ResourceLimitExceeded(RuntimeError):
    """The element cap was hit; carries the ball completed so far."""

    def __init__(
        self,
        completed_radius: int,
        cap: int,
        partial: "Ball | None" = None,
        reason: str | None = None,
    ):
        super().__init__(
            reason or f"element cap {cap} exceeded after completing radius {completed_radius}"
        )
        self.completed_radius = completed_radius
        self.cap = cap
        self.partial = partial


class NotReducedWordError(ValueError):
    """Raised when a quantity defined only on reduced words is asked of a non-reduced one."""


@dataclass(frozen=True)
class GroupElement:
    """One affine Weyl group element with its cached combinatorial data."""

    linear: tuple[tuple[int, ...], ...]
    translation: tuple[int, ...]
    length: int
    multilength: tuple[int, ...]
    geodesic: tuple[int, ...]

    @property
    def is_identity(self) -> bool:
        return self.length == 0

    def as_json_dict(self) -> dict:
        return {
            "length": self.length,
            "multilength": list(self.multilength),
            "geodesic": list(self.geodesic),
            "matrix": [list(r) for r in self.linear],
            "translation": list(self.translation),
        }


@dataclass
class _Level:
    lin: np.ndarray  # (K, n, n)
    tr: np.ndarray  # (K, n)
    parent: np.ndarray  # (K,) index into previous level, -1 at level 0
    letter: np.ndarray  # (K,) generator index, -1 at level 0
    multilength: np.ndarray  # (K, m)

    def __len__(self) -> int:
        return self.tr.shape[0]


class Ball:
    """All elements of length <= radius, grouped by length; immutable."""

    def __init__(self, system: AffineCoxeterSystem, levels: list[_Level]):
        self.system = system
        self.levels = levels
        self.radius = len(levels) - 1
        self.counts = tuple(len(lv) for lv in levels)
        self.total = sum(self.counts)
        self._index: dict[bytes, tuple[int, int]] | None = None

    # -- lookups ---------------------------------------------------------

    def _key(self, lin: np.ndarray, tr: np.ndarray) -> bytes:
        return np.ascontiguousarray(lin, dtype=np.int64).tobytes() + np.ascontiguousarray(
            tr, dtype=np.int64
        ).tobytes()

    def _build_index(self) -> dict[bytes, tuple[int, int]]:
        if self._index is None:
            index: dict[bytes, tuple[int, int]] = {}
            for length, lv in enumerate(self.levels):
                for i in range(len(lv)):
                    index[self._key(lv.lin[i], lv.tr[i])] = (length, i)
            self._index = index
        return self._index

    def length_of(self, lin: np.ndarray, tr: np.ndarray) -> int | None:
        """Coxeter length of the given affine map, or None if outside the ball."""
        hit = self._build_index().get(self._key(lin, tr))
        return None if hit is None else hit[0]

    def geodesic(self, length: int, i: int) -> tuple[int, ...]:
        word: list[int] = []
        k = length
        while k > 0:
            lv = self.levels[k]
            word.append(int(lv.letter[i]))
            i = int(lv.parent[i])
            k -= 1
        return tuple(reversed(word))

    def element(self, length: int, i: int) -> GroupElement:
        lv = self.levels[length]
        return GroupElement(
            linear=tuple(tuple(int(x) for x in row) for row in lv.lin[i]),
            translation=tuple(int(x) for x in lv.tr[i]),
            length=length,
            multilength=tuple(int(x) for x in lv.multilength[i]),
            geodesic=self.geodesic(length, i),
        )

    def __iter__(self) -> Iterator[GroupElement]:
        for length, lv in enumerate(self.levels):
            for i in range(len(lv)):
                yield self.element(length, i)

    def __len__(self) -> int:
        return self.total

    # -- aggregates ------------------------------------------------------

    def multilength_counts(self) -> dict[tuple[int, ...], int]:
        """Number of elements per class-graded length vector."""
        out: dict[tuple[int, ...], int] = {}
        for lv in self.levels:
            rows, counts = np.unique(lv.multilength, axis=0, return_counts=True)
            for row, c in zip(rows, counts):
                out[tuple(int(x) for x in row)] = out.get(tuple(int(x) for x in row), 0) + int(c)
        return out

    def export_jsonl(self, fp: IO[str]) -> int:
        """Stream the ball, one element per line; returns the line count."""
        written = 0
        for el in self:
            fp.write(json.dumps(el.as_json_dict(), separators=(",", ":")))
            fp.write("\n")
            written += 1
        return written

    def __repr__(self) -> str:
        return f"Ball({self.system.ctype.label}, radius={self.radius}, total={self.total})"


def enumerate_ball(
    system: AffineCoxeterSystem,
    radius: int,
    max_elements: int | None = None,
    backend: str | None = None,
) -> Ball:
    """Breadth-first closure of the identity under the generators.

    Raises :class:`ResourceLimitExceeded` (carrying the completed radius and
    the partial ball) instead of silently truncating when the element cap
    (argument, else GYOJA_MAX_ELEMENTS, else 5,000,000) would be passed.
    """
    if radius < 0:
        raise ValueError("radius must be >= 0")
    cap = _effective_cap(max_elements)
    n = system.rank
    ngens = system.num_gens
    m = system.m
    class_onehot = np.zeros((ngens, m), dtype=np.int64)
    for s in range(ngens):
        class_onehot[s, system.partition.class_of[s]] = 1

    identity = _Level(
        lin=np.eye(n, dtype=np.int64)[None, :, :],
        tr=np.zeros((1, n), dtype=np.int64),
        parent=np.full(1, -1, dtype=np.int64),
        letter=np.full(1, -1, dtype=np.int64),
        multilength=np.zeros((1, m), dtype=np.int64),
    )
    levels = [identity]
    prev_keys: set[bytes] = set()
    cur_keys = {identity.lin[0].tobytes() + identity.tr[0].tobytes()}
    total = 1
    width = n * n + n

    for depth in range(radius):
        frontier = levels[-1]
        cand_lin, cand_tr = _kernels.expand_frontier(
            frontier.lin, frontier.tr, system.gen_linear, system.gen_translation, backend=backend
        )
        flat = np.concatenate(
            [cand_lin.reshape(-1, n * n), cand_tr.reshape(-1, n)], axis=1
        )
        flat = np.ascontiguousarray(flat)
        # First occurrence in generation order wins: deterministic geodesics.
        keep: list[int] = []
        new_keys: set[bytes] = set()
        raw = flat.tobytes()
        row_bytes = 8 * width
        for i in range(flat.shape[0]):
            key = raw[i * row_bytes : (i + 1) * row_bytes]
            if key in prev_keys or key in new_keys:
                continue
            new_keys.add(key)
            keep.append(i)
        if total + len(keep) > cap:
            partial = Ball(system, levels)
            raise ResourceLimitExceeded(depth, cap, partial)
        kept = np.array(keep, dtype=np.int64)
        rows = flat[kept]
        order = np.lexsort(rows.T[::-1])
        kept = kept[order]
        level = _Level(
            lin=cand_lin[kept],
            tr=cand_tr[kept],
            parent=kept // ngens,
            letter=kept % ngens,
            multilength=frontier.multilength[kept // ngens] + class_onehot[kept % ngens],
        )
        levels.append(level)
        total += len(level)
        prev_keys, cur_keys = cur_keys, new_keys

    return Ball(system, levels)


def evaluate_word(system: AffineCoxeterSystem, word: tuple[int, ...] | list[int]) -> tuple[np.ndarray, np.ndarray]:
    """Exact affine map of a generator word (left-to-right product)."""
    n = system.rank
    lin = np.eye(n, dtype=np.int64)
    tr = np.zeros(n, dtype=np.int64)
    for s in word:
        if not 0 <= s < system.num_gens:
            raise ValueError(f"generator index {s} out of range for {system.ctype.label}")
        tr = lin @ system.gen_translation[s] + tr
        lin = lin @ system.gen_linear[s]
    return lin, tr


def is_reduced(
    system: AffineCoxeterSystem,
    word: tuple[int, ...] | list[int],
    ball: Ball | None = None,
) -> bool:
    """True iff the word length equals the Coxeter length of its product."""
    lin, tr = evaluate_word(system, word)
    if ball is None:
        ball = _cached_ball(system, len(word))
    length = ball.length_of(lin, tr)
    if length is None:
        raise ResourceLimitExceeded(
            ball.radius,
            ball.total,
            ball,
            reason=(
                f"word of length {len(word)} evaluates outside the provided "
                f"radius-{ball.radius} ball"
            ),
        )
    return length == len(word)


def multilength_of_word(
    system: AffineCoxeterSystem,
    word: tuple[int, ...] | list[int],
    ball: Ball | None = None,
) -> tuple[int, ...]:
    """Class-graded letter counts of a reduced word.

    The quantity is well-defined on elements only via reduced expressions,
    so a non-reduced word is rejected.
    """
    if not is_reduced(system, word, ball=ball):
        raise NotReducedWordError(f"word {tuple(word)} is not reduced")
    counts = [0] * system.m
    for s in word:
        counts[system.partition.class_of[s]] += 1
    return tuple(counts)


_BALL_CACHE: dict[tuple[str, int], Ball] = {}


def _cached_ball(system: AffineCoxeterSystem, radius: int) -> Ball:
    for (label, r), ball in _BALL_CACHE.items():
        if label == system.ctype.label and r >= radius:
            return ball
    ball = enumerate_ball(system, radius)
    _BALL_CACHE[(system.ctype.label, radius)] = ball
    return ball
