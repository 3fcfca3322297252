import subprocess
import sys

import pytest

from lpackets import _kernels
from lpackets._kernels import fallback
from lpackets.fq import field
from lpackets.oracle import _BUILDERS

try:
    from lpackets._kernels import _core
except ImportError:
    _core = None

BACKENDS = [fallback] if _core is None else [fallback, _core]

CASES = [("sl2", 2), ("sl2", 5), ("gl2", 3), ("pgl2", 3),
         ("torus1", 7), ("o2", 5), ("sp4", 2)]


def build(name, q):
    gens, n, tf = _BUILDERS[name](field(q))
    return gens, n, tf.q, tf.add, tf.mul


def test_backend_name_is_exposed():
    assert _kernels.BACKEND in ("python", "c")
    assert fallback.BACKEND == "python"
    if _core is not None:
        assert _core.BACKEND == "c"


@pytest.mark.parametrize("name,q", CASES)
def test_backends_agree(name, q):
    gens, n, fq, add, mul = build(name, q)
    reference = fallback.matrix_closure(gens, n, fq, add, mul)
    ref_count = fallback.matrix_class_count(reference, gens, n, fq, add, mul)
    for backend in BACKENDS:
        elements = backend.matrix_closure(gens, n, fq, add, mul)
        assert elements == reference
        count = backend.matrix_class_count(elements, gens, n, fq, add, mul)
        assert count == ref_count


@pytest.mark.parametrize("backend", BACKENDS)
def test_closure_of_nothing_is_identity(backend):
    f = field(3)
    out = backend.matrix_closure([], 2, 3, f.add, f.mul)
    assert out == [bytes((1, 0, 0, 1))]


@pytest.mark.parametrize("backend", BACKENDS)
def test_closure_cap(backend):
    gens, n, fq, add, mul = build("sl2", 5)
    with pytest.raises(ValueError):
        backend.matrix_closure(gens, n, fq, add, mul, cap=10)


@pytest.mark.parametrize("backend", BACKENDS)
def test_abelian_group_has_singleton_classes(backend):
    gens, n, fq, add, mul = build("torus1", 5)
    elements = backend.matrix_closure(gens, n, fq, add, mul)
    assert backend.matrix_class_count(elements, gens, n, fq, add, mul) == \
        len(elements)


def test_environment_forces_fallback():
    script = ("import os; os.environ['LPACKETS_FORCE_FALLBACK'] = '1'; "
              "from lpackets._kernels import BACKEND; print(BACKEND)")
    out = subprocess.run([sys.executable, "-c", script],
                         capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
