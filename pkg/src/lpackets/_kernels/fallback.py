"""Pure-Python closure and class-counting kernels.

Same contract as the compiled module: matrices are bytes of length n*n over
a field given by its add/mul tables; closures are returned sorted so both
backends agree byte for byte.
"""

from __future__ import annotations

BACKEND = "python"


def _mat_mul(a: bytes, b: bytes, n: int, q: int, add: bytes, mul: bytes) -> bytes:
    out = bytearray(n * n)
    for i in range(n):
        row = i * n
        for j in range(n):
            acc = 0
            for k in range(n):
                acc = add[acc * q + mul[a[row + k] * q + b[k * n + j]]]
            out[row + j] = acc
    return bytes(out)


def _identity(n: int) -> bytes:
    out = bytearray(n * n)
    for i in range(n):
        out[i * n + i] = 1
    return bytes(out)


def matrix_closure(gens, n: int, q: int, add: bytes, mul: bytes,
                   cap: int = 1 << 20):
    """All products of the generators, as a sorted list of byte matrices."""
    ident = _identity(n)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                ag = _mat_mul(a, g, n, q, add, mul)
                if ag not in seen:
                    seen.add(ag)
                    nxt.append(ag)
        frontier = nxt
        if len(seen) > cap:
            raise ValueError(f"closure exceeds the cap of {cap} elements")
    return sorted(seen)


def _inverse_in(elem: bytes, n: int, q: int, add: bytes, mul: bytes) -> bytes:
    """Inverse by powering; the element has finite order in a finite group."""
    ident = _identity(n)
    prev, cur = elem, _mat_mul(elem, elem, n, q, add, mul)
    if elem == ident:
        return ident
    while cur != ident:
        prev, cur = cur, _mat_mul(cur, elem, n, q, add, mul)
    return prev


def matrix_class_count(elements, gens, n: int, q: int, add: bytes, mul: bytes) -> int:
    """Conjugacy classes of the listed group, conjugating by the generators."""
    conj = [(g, _inverse_in(g, n, q, add, mul)) for g in gens]
    seen = set()
    count = 0
    for x in elements:
        if x in seen:
            continue
        count += 1
        orbit = {x}
        stack = [x]
        while stack:
            y = stack.pop()
            for g, gi in conj:
                z = _mat_mul(gi, _mat_mul(y, g, n, q, add, mul), n, q, add, mul)
                if z not in orbit:
                    orbit.add(z)
                    stack.append(z)
        seen |= orbit
    return count
