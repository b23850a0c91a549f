"""Batched integer kernels for the enumeration inner loop.

The only hot numeric loop in this package is expanding a BFS frontier of
group elements by every generator: for each element ``x -> M x + v`` and
each generator ``x -> A x + b`` form the right product ``x -> (M A) x +
(M b + v)``.  Everything is int64 and exact (linear parts range over the
finite Weyl group, translations grow linearly with the radius, so entries
stay tiny compared to 2**63).

Two interchangeable implementations are provided:

* ``numba``: explicit loops under ``@njit`` (default when numba imports),
* ``numpy``: batched ``einsum``/broadcast arithmetic, always available.

Selection: the ``GYOJA_BACKEND`` environment variable (``numba`` or
``numpy``), else numba when present.  ``expand_frontier`` also accepts an
explicit ``backend=`` argument so the two paths can be benchmarked against
each other in one process.
"""

from __future__ import annotations

import os

import numpy as np

__all__ = ["expand_frontier", "default_backend", "available_backends", "NUMBA_AVAILABLE"]

try:
    from numba import njit

    NUMBA_AVAILABLE = True
except ImportError:  # pragma: no cover - environment without numba
    NUMBA_AVAILABLE = False

    def njit(*args, **kwargs):  # type: ignore[misc]
        def wrap(f):
            return f

        return wrap


_ENV_VAR = "GYOJA_BACKEND"


def available_backends() -> tuple[str, ...]:
    return ("numba", "numpy") if NUMBA_AVAILABLE else ("numpy",)


def default_backend() -> str:
    """Backend chosen by GYOJA_BACKEND, else numba when importable."""
    choice = os.environ.get(_ENV_VAR, "").strip().lower()
    if choice:
        if choice not in ("numba", "numpy"):
            raise ValueError(f"{_ENV_VAR} must be 'numba' or 'numpy', got {choice!r}")
        if choice == "numba" and not NUMBA_AVAILABLE:
            raise RuntimeError(f"{_ENV_VAR}=numba but numba is not importable")
        return choice
    return "numba" if NUMBA_AVAILABLE else "numpy"


@njit(cache=True)
def _expand_numba(lin, tr, gen_lin, gen_tr, out_lin, out_tr):  # pragma: no cover - jitted
    count = lin.shape[0]
    ngens = gen_lin.shape[0]
    n = lin.shape[1]
    for f in range(count):
        for g in range(ngens):
            row = f * ngens + g
            for a in range(n):
                acc = 0
                for b in range(n):
                    s = 0
                    for c in range(n):
                        s += lin[f, a, c] * gen_lin[g, c, b]
                    out_lin[row, a, b] = s
                    acc += lin[f, a, b] * gen_tr[g, b]
                out_tr[row, a] = acc + tr[f, a]


def _expand_numpy(lin, tr, gen_lin, gen_tr, out_lin, out_tr):
    np.einsum("fac,gcb->fgab", lin, gen_lin, out=out_lin.reshape(lin.shape[0], gen_lin.shape[0], lin.shape[1], lin.shape[1]))
    out_tr[...] = (np.einsum("fab,gb->fga", lin, gen_tr) + tr[:, None, :]).reshape(out_tr.shape)


def expand_frontier(
    lin: np.ndarray,
    tr: np.ndarray,
    gen_lin: np.ndarray,
    gen_tr: np.ndarray,
    backend: str | None = None,
) -> tuple[np.ndarray, np.ndarray]:
    """All right products (element, generator) of a frontier.

    ``lin``: (F, n, n) linear parts, ``tr``: (F, n) translations,
    ``gen_lin``/``gen_tr``: the generator actions.  Returns
    ``(out_lin, out_tr)`` of shapes (F*g, n, n) and (F*g, n); candidate
    ``f * g + j`` is frontier element ``f`` times generator ``j``, in both
    backends, so enumeration order does not depend on the backend.
    """
    if backend is None:
        backend = default_backend()
    count, n = tr.shape
    ngens = gen_tr.shape[0]
    out_lin = np.empty((count * ngens, n, n), dtype=np.int64)
    out_tr = np.empty((count * ngens, n), dtype=np.int64)
    if backend == "numba":
        if not NUMBA_AVAILABLE:
            raise RuntimeError("numba backend requested but numba is not importable")
        _expand_numba(lin, tr, gen_lin, gen_tr, out_lin, out_tr)
    elif backend == "numpy":
        _expand_numpy(lin, tr, gen_lin, gen_tr, out_lin, out_tr)
    else:
        raise ValueError(f"unknown backend {backend!r}")
    return out_lin, out_tr
