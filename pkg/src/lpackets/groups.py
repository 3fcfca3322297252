"""Finite groups given by explicit multiplication tables.

Component groups, their extensions, and the twisted-conjugation bookkeeping
all happen on groups of order at most a few dozen, so everything is stored as
a full table.  Elements are indices into ``labels``; the label strings are the
canonical element names used in reports, and ties are always broken by label
so that output is deterministic.
"""

from __future__ import annotations

from itertools import permutations


class FiniteGroup:
    __slots__ = ("labels", "table", "identity", "inverse", "_index")

    def __init__(self, labels, table, check=True):
        self.labels = tuple(labels)
        self.table = tuple(tuple(row) for row in table)
        n = len(self.labels)
        ident = None
        for e in range(n):
            if all(self.table[e][x] == x and self.table[x][e] == x for x in range(n)):
                ident = e
                break
        if ident is None:
            raise ValueError("no identity element")
        self.identity = ident
        inv = []
        for x in range(n):
            found = [y for y in range(n) if self.table[x][y] == ident]
            if len(found) != 1:
                raise ValueError("element without unique inverse")
            inv.append(found[0])
        self.inverse = tuple(inv)
        if check:
            for a in range(n):
                for b in range(n):
                    ab = self.table[a][b]
                    for c in range(n):
                        if self.table[ab][c] != self.table[a][self.table[b][c]]:
                            raise ValueError("multiplication table is not associative")
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        if len(self._index) != n:
            raise ValueError("duplicate labels")

    @property
    def order(self) -> int:
        return len(self.labels)

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def inv(self, x: int) -> int:
        return self.inverse[x]

    def conj(self, x: int, y: int) -> int:
        """x y x^-1."""
        return self.table[self.table[x][y]][self.inverse[x]]

    def element_order(self, x: int) -> int:
        k, y = 1, x
        while y != self.identity:
            y = self.table[y][x]
            k += 1
        return k

    def is_abelian(self) -> bool:
        return all(self.table[a][b] == self.table[b][a]
                   for a in range(self.order) for b in range(self.order))

    def index_of(self, label: str) -> int:
        return self._index[label]

    # ---- subgroups and classes -------------------------------------------

    def subgroup(self, indices) -> "FiniteGroup":
        """The subgroup on the given element indices, as its own group."""
        idx = sorted(set(indices))
        pos = {g: i for i, g in enumerate(idx)}
        for a in idx:
            for b in idx:
                if self.table[a][b] not in pos:
                    raise ValueError("indices are not closed under multiplication")
        table = [[pos[self.table[a][b]] for b in idx] for a in idx]
        return FiniteGroup([self.labels[g] for g in idx], table, check=False)

    def conjugacy_classes(self) -> list[tuple[int, ...]]:
        seen = [False] * self.order
        classes = []
        for x in range(self.order):
            if seen[x]:
                continue
            orbit = {x}
            stack = [x]
            while stack:
                y = stack.pop()
                for g in range(self.order):
                    z = self.conj(g, y)
                    if z not in orbit:
                        orbit.add(z)
                        stack.append(z)
            for y in orbit:
                seen[y] = True
            classes.append(tuple(sorted(orbit)))
        classes.sort(key=lambda c: c[0])
        return classes

    def class_count(self) -> int:
        return len(self.conjugacy_classes())

    def centralizer(self, x: int) -> list[int]:
        return [g for g in range(self.order) if self.table[g][x] == self.table[x][g]]

    # ---- automorphisms and twisted conjugation ---------------------------

    def is_automorphism(self, perm) -> bool:
        if sorted(perm) != list(range(self.order)):
            return False
        return all(perm[self.table[a][b]] == self.table[perm[a]][perm[b]]
                   for a in range(self.order) for b in range(self.order))

    def twisted_orbits(self, f) -> list[tuple[int, ...]]:
        """Orbits of b . x = b x f(b)^-1 on the whole group.

        f is an automorphism given as an index permutation; f = identity gives
        ordinary conjugacy classes.
        """
        if not self.is_automorphism(f):
            raise ValueError("twist is not an automorphism")
        seen = [False] * self.order
        orbits = []
        for x in range(self.order):
            if seen[x]:
                continue
            orbit = {x}
            stack = [x]
            while stack:
                y = stack.pop()
                for b in range(self.order):
                    z = self.table[self.table[b][y]][self.inverse[f[b]]]
                    if z not in orbit:
                        orbit.add(z)
                        stack.append(z)
            for y in orbit:
                seen[y] = True
            orbits.append(tuple(sorted(orbit)))
        orbits.sort(key=lambda c: c[0])
        return orbits

    def twisted_centralizer(self, x: int, f) -> list[int]:
        """Subgroup of b with b x f(b)^-1 = x."""
        return [b for b in range(self.order)
                if self.table[self.table[b][x]][self.inverse[f[b]]] == x]


# ---- constructors ---------------------------------------------------------


def trivial_group() -> FiniteGroup:
    return FiniteGroup(("e",), ((0,),), check=False)


def cyclic(n: int) -> FiniteGroup:
    labels = [f"g{k}" if k else "e" for k in range(n)]
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return FiniteGroup(labels, table, check=False)


def _cycle_label(p: tuple[int, ...]) -> str:
    seen = [False] * len(p)
    parts = []
    for start in range(len(p)):
        if seen[start] or p[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        nxt = p[start]
        while nxt != start:
            cyc.append(nxt)
            seen[nxt] = True
            nxt = p[nxt]
        parts.append("(" + "".join(str(i) for i in cyc) + ")")
    return "".join(parts) if parts else "e"


def from_permutations(perms) -> FiniteGroup:
    """The group of the given permutation tuples (must be closed)."""
    perms = sorted(set(tuple(p) for p in perms))
    pos = {p: i for i, p in enumerate(perms)}
    table = []
    for a in perms:
        row = []
        for b in perms:
            c = tuple(a[b[i]] for i in range(len(a)))
            if c not in pos:
                raise ValueError("permutations are not closed under composition")
            row.append(pos[c])
        table.append(row)
    return FiniteGroup([_cycle_label(p) for p in perms], table, check=False)


def symmetric(n: int) -> FiniteGroup:
    return from_permutations(permutations(range(n)))


def direct_product(a: FiniteGroup, b: FiniteGroup) -> FiniteGroup:
    def label(i, j):
        return f"{a.labels[i]}*{b.labels[j]}"

    na, nb = a.order, b.order
    labels = [label(i, j) for i in range(na) for j in range(nb)]
    table = [[(a.table[i1][i2]) * nb + b.table[j1][j2]
              for i2 in range(na) for j2 in range(nb)]
             for i1 in range(na) for j1 in range(nb)]
    return FiniteGroup(labels, table, check=False)


def semidirect(n: FiniteGroup, h: FiniteGroup, act) -> FiniteGroup:
    """N semidirect H where act(v) is the index permutation of N for v in H.

    Elements are pairs (g, v), multiplication
    (g1, v1)(g2, v2) = (g1 * act(v1)(g2), v1 v2); labels are "g|v".
    """
    for v in range(h.order):
        if not n.is_automorphism(act(v)):
            raise ValueError("action is not by automorphisms")
    for v1 in range(h.order):
        for v2 in range(h.order):
            a12 = act(h.table[v1][v2])
            comp = [act(v1)[act(v2)[g]] for g in range(n.order)]
            if list(a12) != comp:
                raise ValueError("action is not a homomorphism")
    nn, nh = n.order, h.order
    labels = [f"{n.labels[g]}|{h.labels[v]}" for g in range(nn) for v in range(nh)]
    table = []
    for g1 in range(nn):
        for v1 in range(nh):
            row = []
            a1 = act(v1)
            for g2 in range(nn):
                for v2 in range(nh):
                    row.append(n.table[g1][a1[g2]] * nh + h.table[v1][v2])
            table.append(row)
    return FiniteGroup(labels, table, check=False)


def product_automorphism(groups, factor_perm, f_within=None):
    """Index permutation of a direct product that permutes the factors.

    ``groups`` are the factors in order, ``factor_perm[i] = j`` means factor i
    is sent to slot j (the factors must be compatible: same order tables).
    ``f_within`` optionally gives a per-factor index permutation applied before
    the slot move.
    """
    sizes = [g.order for g in groups]
    k = len(groups)
    for i in range(k):
        if sizes[i] != sizes[factor_perm[i]]:
            raise ValueError("factor permutation between incompatible factors")

    def unrank(x):
        coords = []
        for s in reversed(sizes):
            coords.append(x % s)
            x //= s
        return list(reversed(coords))

    def rank(coords):
        x = 0
        for s, c in zip(sizes, coords):
            x = x * s + c
        return x

    total = 1
    for s in sizes:
        total *= s
    out = []
    for x in range(total):
        coords = unrank(x)
        if f_within is not None:
            coords = [f_within[i][coords[i]] for i in range(k)]
        moved = [0] * k
        for i in range(k):
            moved[factor_perm[i]] = coords[i]
        out.append(rank(moved))
    return out


def identity_perm(n: int) -> list[int]:
    return list(range(n))
