"""Timing comparison of the compiled and pure-Python matrix kernels.

Runs closure plus class counting for a few oracle groups with each backend
and prints a small table.  The compiled backend is skipped with a note when
the extension is not built.

Usage: python bench/benchmark_kernels.py [--big]

The --big flag adds sp4 over F_3 (51840 elements), which takes a while on
the pure-Python backend.
"""

from __future__ import annotations

import argparse
import time

from lpackets._kernels import fallback
from lpackets.fq import field
from lpackets.oracle import _BUILDERS, expected_order

try:
    from lpackets._kernels import _core
except ImportError:
    _core = None

CASES = [("sl2", 9), ("gl2", 5), ("pgl2", 7), ("sp4", 2)]
BIG = [("sp4", 3)]


def run(backend, name: str, q: int) -> tuple[int, int, float]:
    gens, n, tf = _BUILDERS[name](field(q))
    t0 = time.perf_counter()
    elements = backend.matrix_closure(gens, n, tf.q, tf.add, tf.mul)
    classes = backend.matrix_class_count(elements, gens, n, tf.q,
                                         tf.add, tf.mul)
    elapsed = time.perf_counter() - t0
    assert len(elements) == expected_order(name, q)
    return len(elements), classes, elapsed


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--big", action="store_true",
                        help="include sp4 over F_3")
    args = parser.parse_args()
    cases = CASES + (BIG if args.big else [])

    if _core is None:
        print("compiled backend not built; timing the fallback only")
    header = f"{'case':>12s} {'order':>8s} {'classes':>8s} " \
             f"{'python':>10s} {'c':>10s} {'speedup':>8s}"
    print(header)
    for name, q in cases:
        order, classes, t_py = run(fallback, name, q)
        if _core is not None:
            order_c, classes_c, t_c = run(_core, name, q)
            assert (order_c, classes_c) == (order, classes)
            ratio = f"{t_py / t_c:7.1f}x" if t_c > 0 else "     inf"
            c_col = f"{t_c:9.3f}s"
        else:
            c_col, ratio = "        -", "       -"
        print(f"{name + '/F' + str(q):>12s} {order:8d} {classes:8d} "
              f"{t_py:9.3f}s {c_col} {ratio}")


if __name__ == "__main__":
    main()
