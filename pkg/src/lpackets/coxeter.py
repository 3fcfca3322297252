"""Weyl groups: canonical words, Bruhat order, KL polynomials, cells.

Elements are Y-matrices of the underlying datum; each element carries the
lex-least reduced word over the simple reflections, and every ordering
downstream (cell ids, coset representatives, report labels) is derived from
those words, which is what makes the output deterministic.

Polynomials live in one variable as integer coefficient tuples.  The cell
partition comes from the strongly connected components of the mu-edge graph;
an independent re-verification of the polynomial table through the
R-polynomial inversion identity is provided for the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvariantError
from .lattice import Matrix, identity, mat_inv_unimodular, mat_mul, mat_vec
from .rootdata import RootDatum, positive_root_indices, reflection_on_y, x_action

__all__ = [
    "CoxeterGroup", "KLTable", "CellPartition", "enumerate_weyl", "kl_table",
    "cells", "cell_action", "poly_eval", "verify_kl_by_inversion",
]


# ---- polynomial helpers (coefficient tuples, index = degree) --------------

def poly_trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_add(a, b):
    n = max(len(a), len(b))
    return poly_trim(tuple((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                           for i in range(n)))


def poly_sub(a, b):
    n = max(len(a), len(b))
    return poly_trim(tuple((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)
                           for i in range(n)))


def poly_shift(a, k):
    """Multiply by q^k."""
    if not a:
        return ()
    return (0,) * k + tuple(a)


def poly_scale(c, a):
    return poly_trim(tuple(c * x for x in a))


def poly_mul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return poly_trim(out)


def poly_eval(a, q):
    return sum(c * q ** i for i, c in enumerate(a))


ONE = (1,)


# ---- the group -------------------------------------------------------------

@dataclass
class CoxeterGroup:
    datum: RootDatum
    generators: tuple[Matrix, ...]
    elements: tuple[Matrix, ...]
    words: tuple[tuple[int, ...], ...]
    length: tuple[int, ...]
    index: dict
    left: tuple[tuple[int, ...], ...]   # left[s][i] = index of gens[s] @ elements[i]
    right: tuple[tuple[int, ...], ...]  # right[s][i] = index of elements[i] @ gens[s]
    inverse: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def longest(self) -> int:
        m = max(self.length)
        idx = [i for i, l in enumerate(self.length) if l == m]
        if len(idx) != 1:
            raise InvariantError("longest element is not unique")
        return idx[0]

    def word_label(self, i: int) -> str:
        w = self.words[i]
        return "e" if not w else "".join(str(s) for s in w)

    def left_descents(self, i: int):
        return [s for s in range(len(self.generators))
                if self.length[self.left[s][i]] < self.length[i]]

    def right_descents(self, i: int):
        return [s for s in range(len(self.generators))
                if self.length[self.right[s][i]] < self.length[i]]


def enumerate_weyl(datum: RootDatum) -> CoxeterGroup:
    """Enumerate the reflection group of the datum with canonical words.

    Canonical word = lex-least reduced word; elements are sorted by
    (length, canonical word) so index order is deterministic and index 0 is
    the identity.
    """
    gens = tuple(reflection_on_y(datum, i) for i in datum.simple_indices)
    n = datum.rank
    ident = identity(n)
    words = {ident: ()}
    level = [ident]
    while level:
        nxt = {}
        for m in sorted(level, key=lambda m: words[m]):
            for s, g in enumerate(gens):
                m2 = mat_mul(m, g)  # extend the word on the right
                if m2 in words:
                    continue
                cand = words[m] + (s,)
                if m2 not in nxt or cand < nxt[m2]:
                    nxt[m2] = cand
        for m2, w in nxt.items():
            words[m2] = w
        level = list(nxt)
        if len(words) > 10000:
            raise InvariantError("reflection group too large")

    order = sorted(words, key=lambda m: (len(words[m]), words[m]))
    index = {m: i for i, m in enumerate(order)}
    elements = tuple(order)
    word_list = tuple(words[m] for m in order)
    length = tuple(len(w) for w in word_list)

    # length must equal the inversion count on the datum's positive roots
    pos = positive_root_indices(datum)
    pos_set = {datum.roots[i] for i in pos}
    for m, w in words.items():
        mx = x_action(m)
        inv_count = sum(1 for i in pos if tuple(mat_vec(mx, datum.roots[i])) not in pos_set)
        if inv_count != len(w):
            raise InvariantError("word length does not match inversion count")

    left = tuple(tuple(index[mat_mul(g, m)] for m in elements) for g in gens)
    right = tuple(tuple(index[mat_mul(m, g)] for m in elements) for g in gens)
    inverse = tuple(index[mat_inv_unimodular(m)] for m in elements)
    return CoxeterGroup(datum=datum, generators=gens, elements=elements,
                        words=word_list, length=length, index=index,
                        left=left, right=right, inverse=inverse)


# ---- Bruhat order ----------------------------------------------------------

def bruhat_leq_table(cox: CoxeterGroup):
    """Full x <= w table via the lifting property."""
    n = cox.order
    leq = [[False] * n for _ in range(n)]
    by_length = sorted(range(n), key=lambda i: cox.length[i])
    for w in by_length:
        leq[w][w] = True
        if cox.length[w] == 0:
            continue
        s = cox.right_descents(w)[0]
        ws = cox.right[s][w]
        for x in range(n):
            if cox.length[x] >= cox.length[w]:
                continue
            xs = cox.right[s][x]
            xp = xs if cox.length[xs] < cox.length[x] else x
            leq[x][w] = leq[xp][ws]
    return leq


# ---- KL table --------------------------------------------------------------

@dataclass
class KLTable:
    cox: CoxeterGroup
    leq: list
    polynomials: dict  # (x, w) -> coeff tuple, for x <= w
    mu: dict           # (x, w) -> int, for x < w


def kl_table(cox: CoxeterGroup) -> KLTable:
    leq = bruhat_leq_table(cox)
    polys: dict = {}

    def P(x, w):
        if not leq[x][w]:
            return ()
        if x == w:
            return ONE
        key = (x, w)
        if key in polys:
            return polys[key]
        s = cox.left_descents(w)[0]
        sx = cox.left[s][x]
        if cox.length[sx] > cox.length[x]:
            # s is a left descent of w but not of x
            val = P(sx, w)
        else:
            v = cox.left[s][w]  # sw < w
            val = poly_add(P(sx, v), poly_shift(P(x, v), 1))
            for z in range(cox.order):
                if not (leq[x][z] and leq[z][v]):
                    continue
                if cox.length[cox.left[s][z]] >= cox.length[z]:
                    continue
                m = mu_value(P(z, v), cox.length[v] - cox.length[z])
                if m == 0:
                    continue
                exp2 = cox.length[w] - cox.length[z]
                if exp2 % 2 != 0:
                    raise InvariantError("odd exponent in KL recursion")
                val = poly_sub(val, poly_scale(m, poly_shift(P(x, z), exp2 // 2)))
        # degree bound: deg < (l(w) - l(x)) / 2
        bound = (cox.length[w] - cox.length[x] - 1) / 2
        if val and len(val) - 1 > bound:
            raise InvariantError("KL degree bound violated")
        if val and any(c < 0 for c in val):
            raise InvariantError("negative KL coefficient")
        polys[key] = val
        return val

    def mu_value(poly, ldiff):
        if (ldiff - 1) % 2 != 0:
            return 0
        d = (ldiff - 1) // 2
        return poly[d] if d < len(poly) else 0

    mu = {}
    for w in range(cox.order):
        for x in range(cox.order):
            if leq[x][w] and x != w:
                p = P(x, w)
                m = mu_value(p, cox.length[w] - cox.length[x])
                if m:
                    mu[(x, w)] = m
    # make sure every pair is computed
    for w in range(cox.order):
        for x in range(cox.order):
            if leq[x][w]:
                P(x, w)
    full = {(x, w): polys.get((x, w), ONE if x == w else ())
            for w in range(cox.order) for x in range(cox.order) if leq[x][w]}
    return KLTable(cox=cox, leq=leq, polynomials=full, mu=mu)


def r_polynomials(cox: CoxeterGroup, leq) -> dict:
    """R-polynomials by their own recursion (independent of the KL one)."""
    rp: dict = {}

    def R(x, w):
        if not leq[x][w]:
            return ()
        key = (x, w)
        if key in rp:
            return rp[key]
        if x == w:
            rp[key] = ONE
            return ONE
        s = cox.left_descents(w)[0]
        v = cox.left[s][w]
        sx = cox.left[s][x]
        if cox.length[sx] < cox.length[x]:
            val = R(sx, v)
        else:
            val = poly_add(poly_mul((-1, 1), R(x, v)), poly_shift(R(sx, v), 1))
        rp[key] = val
        return val

    for w in range(cox.order):
        for x in range(cox.order):
            R(x, w)
    return rp


def verify_kl_by_inversion(kl: KLTable) -> bool:
    """Check q^(l(w)-l(x)) P_{x,w}(1/q) = sum_z R_{x,z} P_{z,w} for all pairs."""
    cox = kl.cox
    rp = r_polynomials(cox, kl.leq)
    for w in range(cox.order):
        for x in range(cox.order):
            if not kl.leq[x][w]:
                continue
            d = cox.length[w] - cox.length[x]
            p = kl.polynomials[(x, w)]
            lhs = [0] * (d + 1)
            for i, c in enumerate(p):
                lhs[d - i] += c
            rhs = ()
            for z in range(cox.order):
                if kl.leq[x][z] and kl.leq[z][w]:
                    rhs = poly_add(rhs, poly_mul(rp.get((x, z), ()),
                                                 kl.polynomials[(z, w)]))
            if poly_trim(lhs) != rhs:
                return False
    return True


# ---- cells ------------------------------------------------------------------

@dataclass
class CellPartition:
    cox: CoxeterGroup
    left_cells: tuple[tuple[int, ...], ...]
    right_cells: tuple[tuple[int, ...], ...]
    two_sided_cells: tuple[tuple[int, ...], ...]
    cell_of: tuple[int, ...]  # element index -> two-sided cell position

    def cell_id(self, cell_pos: int) -> str:
        members = self.two_sided_cells[cell_pos]
        best = min(members, key=lambda i: (self.cox.length[i], self.cox.words[i]))
        return self.cox.word_label(best)


def _left_edges(kl: KLTable):
    """edges[w] = elements z with z <=_L w forced in one step."""
    cox = kl.cox
    edges = [set() for _ in range(cox.order)]
    for w in range(cox.order):
        for s in range(len(cox.generators)):
            sw = cox.left[s][w]
            if cox.length[sw] <= cox.length[w]:
                continue
            edges[w].add(sw)
            for z in range(cox.order):
                if z != w and kl.leq[z][w] and (z, w) in kl.mu and \
                        cox.length[cox.left[s][z]] < cox.length[z]:
                    edges[w].add(z)
    return edges


def _sccs(edges):
    """Iterative Tarjan, returning components sorted by smallest member."""
    n = len(edges)
    index = [None] * n
    low = [0] * n
    onstack = [False] * n
    stack = []
    comps = []
    counter = 0
    for root in range(n):
        if index[root] is not None:
            continue
        work = [(root, iter(sorted(edges[root])))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        onstack[root] = True
        while work:
            v, it = work[-1]
            advanced = False
            for u in it:
                if index[u] is None:
                    index[u] = low[u] = counter
                    counter += 1
                    stack.append(u)
                    onstack[u] = True
                    work.append((u, iter(sorted(edges[u]))))
                    advanced = True
                    break
                elif onstack[u]:
                    low[v] = min(low[v], index[u])
            if advanced:
                continue
            work.pop()
            if work:
                pv = work[-1][0]
                low[pv] = min(low[pv], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    u = stack.pop()
                    onstack[u] = False
                    comp.append(u)
                    if u == v:
                        break
                comps.append(tuple(sorted(comp)))
    comps.sort(key=lambda c: c[0])
    return comps


def cells(kl: KLTable) -> CellPartition:
    cox = kl.cox
    ledges = _left_edges(kl)
    redges = [set() for _ in range(cox.order)]
    for w in range(cox.order):
        wi = cox.inverse[w]
        for z in ledges[wi]:
            redges[w].add(cox.inverse[z])
    both = [ledges[w] | redges[w] for w in range(cox.order)]
    left_cells = _sccs(ledges)
    right_cells = _sccs(redges)
    two_sided = _sccs(both)

    def sort_key(cell):
        best = min(cell, key=lambda i: (cox.length[i], cox.words[i]))
        return (cox.length[best], cox.words[best])

    left_cells = tuple(sorted(left_cells, key=sort_key))
    right_cells = tuple(sorted(right_cells, key=sort_key))
    two_sided = tuple(sorted(two_sided, key=sort_key))
    cell_of = [None] * cox.order
    for ci, cell in enumerate(two_sided):
        for i in cell:
            cell_of[i] = ci
    # left and right cells must refine two-sided cells
    for part in (left_cells, right_cells):
        for cell in part:
            if len({cell_of[i] for i in cell}) != 1:
                raise InvariantError("one-sided cell crosses a two-sided cell")
    return CellPartition(cox=cox, left_cells=left_cells, right_cells=right_cells,
                         two_sided_cells=tuple(two_sided), cell_of=tuple(cell_of))


def cell_action(part: CellPartition, m_y: Matrix):
    """Permutations induced by conjugation with a normalizing lattice map.

    Returns (element_perm, cell_perm); raises if the map does not normalize
    the group or shuffles elements across cell boundaries.
    """
    cox = part.cox
    m_inv = mat_inv_unimodular(m_y)
    elem_perm = []
    for w in cox.elements:
        img = mat_mul(mat_mul(m_y, w), m_inv)
        if img not in cox.index:
            raise InvariantError("matrix does not normalize the reflection group")
        elem_perm.append(cox.index[img])
    k = len(part.two_sided_cells)
    cell_perm = [None] * k
    for ci, cell in enumerate(part.two_sided_cells):
        images = {part.cell_of[elem_perm[i]] for i in cell}
        if len(images) != 1:
            raise InvariantError("conjugation does not permute the cells")
        cell_perm[ci] = images.pop()
    return tuple(elem_perm), tuple(cell_perm)
