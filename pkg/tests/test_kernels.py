import numpy as np
import pytest

from gyoja import _kernels
from conftest import system_of


def _random_frontier(rng, n, count):
    lin = rng.integers(-3, 4, size=(count, n, n)).astype(np.int64)
    tr = rng.integers(-5, 6, size=(count, n)).astype(np.int64)
    return lin, tr


def test_backends_agree_on_random_data():
    if not _kernels.NUMBA_AVAILABLE:
        pytest.skip("numba not importable")
    rng = np.random.default_rng(99)
    for n in (1, 2, 4, 7):
        lin, tr = _random_frontier(rng, n, 17)
        gen_lin, gen_tr = _random_frontier(rng, n, 5)
        out_a = _kernels.expand_frontier(lin, tr, gen_lin, gen_tr, backend="numba")
        out_b = _kernels.expand_frontier(lin, tr, gen_lin, gen_tr, backend="numpy")
        assert np.array_equal(out_a[0], out_b[0])
        assert np.array_equal(out_a[1], out_b[1])


def test_expand_frontier_matches_direct_products():
    system = system_of("C2")
    n = system.rank
    lin = np.stack([np.eye(n, dtype=np.int64), system.gen_linear[1]])
    tr = np.stack([np.zeros(n, dtype=np.int64), system.gen_translation[1]])
    out_lin, out_tr = _kernels.expand_frontier(
        lin, tr, system.gen_linear, system.gen_translation, backend="numpy"
    )
    ngens = system.num_gens
    for f in range(2):
        for g in range(ngens):
            row = f * ngens + g
            assert np.array_equal(out_lin[row], lin[f] @ system.gen_linear[g])
            assert np.array_equal(out_tr[row], lin[f] @ system.gen_translation[g] + tr[f])


def test_env_flag_selects_backend(monkeypatch):
    monkeypatch.setenv("GYOJA_BACKEND", "numpy")
    assert _kernels.default_backend() == "numpy"
    monkeypatch.setenv("GYOJA_BACKEND", "bogus")
    with pytest.raises(ValueError):
        _kernels.default_backend()
    monkeypatch.delenv("GYOJA_BACKEND")
    assert _kernels.default_backend() in ("numba", "numpy")
    if _kernels.NUMBA_AVAILABLE:
        monkeypatch.setenv("GYOJA_BACKEND", "numba")
        assert _kernels.default_backend() == "numba"


def test_unknown_backend_argument_rejected():
    system = system_of("A1")
    with pytest.raises(ValueError):
        _kernels.expand_frontier(
            np.eye(1, dtype=np.int64)[None],
            np.zeros((1, 1), dtype=np.int64),
            system.gen_linear,
            system.gen_translation,
            backend="fortran",
        )
