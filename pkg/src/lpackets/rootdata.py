"""Root data, Frobenius twists, and group descriptions.

A root datum is stored with explicit dual bases: the character lattice X and
cocharacter lattice Y are both Z^rank and the pairing is the dot product, so
an isogeny choice is a choice of coordinates for the roots and coroots.
Reflections act on Y by y -> y - <alpha, y> alpha^ and on X contragrediently;
all Weyl elements downstream are carried as Y-matrices.

Torsion points of the maximal torus live in Y tensor Q/Z as Fraction tuples
reduced to [0, 1).  The same solver feeds both counting pipelines: one reads
the points against the dual datum, the other against the original.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ConfigError, InvariantError, UnsupportedTypeError
from .lattice import (
    Matrix,
    Vector,
    det,
    fixed_torsion_count,
    frac_vec_mod1,
    identity,
    mat_inv_unimodular,
    mat_mul,
    mat_vec,
    torsion_order,
    transpose,
)

__all__ = [
    "RootDatum", "FrobeniusTwist", "GroupSpec", "TorsionPoint", "SubSystem",
    "parse_group_spec", "dual_datum", "centralizer_subdatum",
    "component_group_of_centralizer", "whittaker_torsor_size",
    "reflection_on_y", "x_action", "weyl_closure", "NAMED_SPECS",
]


@dataclass(frozen=True)
class RootDatum:
    rank: int
    roots: tuple[Vector, ...]
    coroots: tuple[Vector, ...]
    simple_indices: tuple[int, ...]
    cartan_label: str

    def pairing(self, x, y):
        return sum(a * b for a, b in zip(x, y))

    @property
    def simple_roots(self):
        return tuple(self.roots[i] for i in self.simple_indices)

    @property
    def simple_coroots(self):
        return tuple(self.coroots[i] for i in self.simple_indices)

    def __post_init__(self):
        if len(self.roots) != len(self.coroots):
            raise InvariantError("roots and coroots must be matched in length")
        for i in self.simple_indices:
            if self.pairing(self.roots[i], self.coroots[i]) != 2:
                raise InvariantError("simple root paired with its coroot must give 2")


@dataclass(frozen=True)
class FrobeniusTwist:
    q: int
    p: int
    sigma_y: Matrix  # finite-order action on Y, permuting the coroots

    @property
    def sigma_x(self) -> Matrix:
        return transpose(mat_inv_unimodular(self.sigma_y))


@dataclass(frozen=True)
class GroupSpec:
    datum: RootDatum
    twist: FrobeniusTwist
    components: tuple[Matrix, ...]  # Y-matrices of the component group (identity included)
    name: str

    @property
    def connected(self) -> bool:
        return len(self.components) == 1

    @property
    def q(self) -> int:
        return self.twist.q


@dataclass(frozen=True)
class TorsionPoint:
    coordinates: tuple[Fraction, ...]

    @property
    def order(self) -> int:
        return torsion_order(self.coordinates)

    def label(self) -> str:
        return point_label(self.coordinates)


def point_label(coords) -> str:
    return "(" + ",".join(str(Fraction(c) % 1) for c in coords) + ")"


# ---------------------------------------------------------------------------
# reflections and Weyl closure


def reflection_on_y(datum: RootDatum, root_index: int) -> Matrix:
    """Matrix of the reflection in roots[root_index] acting on Y."""
    alpha = datum.roots[root_index]
    cov = datum.coroots[root_index]
    n = datum.rank
    return tuple(
        tuple((1 if r == c else 0) - cov[r] * alpha[c] for c in range(n))
        for r in range(n)
    )


def x_action(m_y: Matrix) -> Matrix:
    """The X-side matrix of a Y-side lattice automorphism (contragredient)."""
    return transpose(mat_inv_unimodular(m_y))


def weyl_closure(datum: RootDatum, extra=()) -> list[Matrix]:
    """All products of simple reflections (and optional extra matrices), by BFS."""
    gens = [reflection_on_y(datum, i) for i in datum.simple_indices]
    gens.extend(extra)
    seen = {identity(datum.rank)}
    frontier = [identity(datum.rank)]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                wg = mat_mul(g, w)
                if wg not in seen:
                    seen.add(wg)
                    nxt.append(wg)
        frontier = nxt
        if len(seen) > 20000:
            raise InvariantError("reflection closure did not terminate")
    return sorted(seen)


# ---------------------------------------------------------------------------
# positivity

def _solve_rational(cols, target):
    """Solve sum c_i cols[i] = target over Q, or None if inconsistent."""
    if not cols:
        return () if all(t == 0 for t in target) else None
    n = len(target)
    k = len(cols)
    aug = [[Fraction(cols[j][i]) for j in range(k)] + [Fraction(target[i])]
           for i in range(n)]
    pivots = []
    r = 0
    for c in range(k):
        piv = next((i for i in range(r, n) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(n):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    for i in range(r, n):
        if aug[i][k] != 0:
            return None
    sol = [Fraction(0)] * k
    for row, c in enumerate(pivots):
        sol[c] = aug[row][k]
    return tuple(sol)


def positive_root_indices(datum: RootDatum) -> tuple[int, ...]:
    """Indices of the roots lying in the nonnegative span of the simples."""
    simples = datum.simple_roots
    out = []
    for i, root in enumerate(datum.roots):
        coeffs = _solve_rational(simples, root)
        if coeffs is None:
            raise InvariantError("root outside the span of the simple roots")
        if all(c >= 0 for c in coeffs):
            out.append(i)
    if 2 * len(out) != len(datum.roots):
        raise InvariantError("positive roots are not half of all roots")
    return tuple(out)


# ---------------------------------------------------------------------------
# named constructions

def _close_roots(simple_roots, simple_coroots, rank):
    """Generate the full root list from the simples by reflection closure.

    Returns (roots, coroots, simple_indices) with matched indexing and the
    simples listed first.
    """
    pairs = list(zip(simple_roots, simple_coroots))
    changed = True
    while changed:
        changed = False
        for a, av in list(pairs):
            for b, bv in list(pairs):
                k = sum(x * y for x, y in zip(b, av))  # <b, a^>
                rb = tuple(x - k * y for x, y in zip(b, a))
                rbv = tuple(x - sum(p * q for p, q in zip(a, bv)) * y
                            for x, y in zip(bv, av))
                if (rb, rbv) not in pairs:
                    pairs.append((rb, rbv))
                    changed = True
    roots = tuple(p[0] for p in pairs)
    coroots = tuple(p[1] for p in pairs)
    return roots, coroots, tuple(range(len(simple_roots)))


def _datum_from_simples(simples, cosimples, rank, label) -> RootDatum:
    roots, coroots, s_idx = _close_roots(simples, cosimples, rank)
    return RootDatum(rank, roots, coroots, s_idx, label)


def _torus(rank: int) -> RootDatum:
    return RootDatum(rank, (), (), (), f"T{rank}")


_SC_SIMPLES = {
    # type -> (simple roots in X, simple coroots in Y, rank)
    "A1": (((2,),), ((1,),), 1),
    "A2": (((2, -1), (-1, 2)), ((1, 0), (0, 1)), 2),
    "B2": (((1, -1), (0, 2)), ((1, -1), (0, 1)), 2),  # Sp4 coordinates
    "G2": (((2, -1), (-3, 2)), ((1, 0), (0, 1)), 2),
    "A1xA1": (((2, 0), (0, 2)), ((1, 0), (0, 1)), 2),
}

_GL_DATA = {
    # GL-style: roots e_i - e_j in X = Y = Z^n, coroots the same vectors
    "A1": 2,
    "A2": 3,
}


def _gl_datum(n: int) -> RootDatum:
    roots = []
    for i in range(n):
        for j in range(n):
            if i != j:
                v = [0] * n
                v[i], v[j] = 1, -1
                roots.append(tuple(v))
    roots_t = tuple(roots)
    simples = tuple(
        roots_t.index(tuple(1 if k == i else (-1 if k == i + 1 else 0) for k in range(n)))
        for i in range(n - 1)
    )
    return RootDatum(n, roots_t, roots_t, simples, f"A{n - 1}+T1")


def dual_datum(datum: RootDatum) -> RootDatum:
    """Swap roots and coroots, keeping the index correspondence."""
    return RootDatum(
        rank=datum.rank,
        roots=datum.coroots,
        coroots=datum.roots,
        simple_indices=datum.simple_indices,
        cartan_label=datum.cartan_label,
    )


def _sublattice_datum(base: RootDatum, basis_rows, label) -> RootDatum:
    """Pass to the sublattice of X spanned by the given rows (old coordinates).

    The sublattice must still contain every root; coroots move to the dual
    overlattice.  New coordinates: a root r becomes the solution c of
    c . basis = r, a coroot y becomes basis @ y.
    """
    b = tuple(tuple(int(x) for x in row) for row in basis_rows)
    if len(b) != base.rank or any(len(r) != base.rank for r in b):
        raise ConfigError("sublattice basis must be a square integer matrix of full rank")
    if det(b) == 0:
        raise ConfigError("sublattice basis is singular")
    new_roots = []
    for r in base.roots:
        # new coordinates c with sum_i c_i * (row i of b) = r
        c = _solve_rational(list(b), r)
        if c is None or any(x.denominator != 1 for x in c):
            raise ConfigError("sublattice does not contain all roots")
        new_roots.append(tuple(int(x) for x in c))
    new_coroots = [mat_vec(b, y) for y in base.coroots]
    return RootDatum(base.rank, tuple(new_roots), tuple(new_coroots),
                     base.simple_indices, label)


def _append_torus(datum: RootDatum, extra: int) -> RootDatum:
    pad = (0,) * extra
    label = datum.cartan_label
    if extra:
        if "+T" in label:
            head, tail = label.rsplit("+T", 1)
            label = f"{head}+T{int(tail) + extra}"
        else:
            label = f"{label}+T{extra}"
    return RootDatum(
        rank=datum.rank + extra,
        roots=tuple(r + pad for r in datum.roots),
        coroots=tuple(c + pad for c in datum.coroots),
        simple_indices=datum.simple_indices,
        cartan_label=label,
    )


def _build_datum(base_type: str, isogeny) -> RootDatum:
    if base_type.startswith("T"):
        try:
            r = int(base_type[1:])
        except ValueError:
            raise ConfigError(f"bad torus type {base_type!r}")
        if not 1 <= r <= 6:
            raise UnsupportedTypeError("torus rank must be between 1 and 6")
        if isogeny not in (None, "sc", "ad"):
            raise ConfigError("tori take no isogeny")
        return _torus(r)
    key = "B2" if base_type == "C2" else base_type
    if key not in _SC_SIMPLES:
        raise UnsupportedTypeError(
            f"type {base_type!r} is outside the supported menu "
            "(T<r>, A1, A1xA1, A2, B2/C2, G2, optionally +T<r>)")
    simples, cosimples, rank = _SC_SIMPLES[key]
    sc = _datum_from_simples(simples, cosimples, rank, key)
    if isogeny is None or isogeny == "sc":
        return sc
    if isogeny == "ad":
        # the adjoint form is the dual of the simply connected form of the
        # dual type; all supported types are self-dual as Weyl types
        return RootDatum(sc.rank, dual_datum(sc).roots, dual_datum(sc).coroots,
                         sc.simple_indices, key)
    if isogeny == "gl":
        if key not in _GL_DATA:
            raise UnsupportedTypeError(f"GL-style isogeny is only available for A1 and A2, not {key}")
        return _gl_datum(_GL_DATA[key])
    if isinstance(isogeny, (list, tuple)):
        return _sublattice_datum(sc, isogeny, key)
    raise ConfigError(f"unknown isogeny {isogeny!r}")


# ---------------------------------------------------------------------------
# twists and component groups

def _prime_power(q: int) -> tuple[int, int]:
    if q < 2:
        raise ConfigError("q must be a prime power >= 2")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    e = 0
    m = q
    while m % p == 0:
        m //= p
        e += 1
    if m != 1:
        raise ConfigError(f"q = {q} is not a prime power")
    return p, e


def _bad_primes(label: str) -> set[int]:
    bad = set()
    for factor in label.replace("+", "x").split("x"):
        if factor in ("B2", "C2"):
            bad.add(2)
        elif factor == "G2":
            bad.update((2, 3))
    return bad


def _is_root_permuting(datum: RootDatum, m_y: Matrix) -> bool:
    mx = x_action(m_y)
    root_set = set(datum.roots)
    co_set = set(datum.coroots)
    return (all(mat_vec(mx, r) in root_set for r in datum.roots)
            and all(mat_vec(m_y, c) in co_set for c in datum.coroots))


def _is_based(datum: RootDatum, m_y: Matrix) -> bool:
    mx = x_action(m_y)
    simple_set = set(datum.simple_roots)
    return all(tuple(mat_vec(mx, s)) in simple_set for s in datum.simple_roots)


def _matrix_order(m: Matrix, cap: int = 48) -> int:
    n = len(m)
    acc = m
    for k in range(1, cap + 1):
        if acc == identity(n):
            return k
        acc = mat_mul(acc, m)
    raise ConfigError("twist matrix does not have small finite order")


def _twist_from_permutation(datum: RootDatum, perm) -> Matrix:
    """The lattice matrix sending simple coroot i to simple coroot perm[i].

    Pinned extension: it exists and is unique exactly when the simple coroots
    form a Q-basis of Y; otherwise the caller must supply a matrix.
    """
    k = len(datum.simple_indices)
    n = datum.rank
    if sorted(perm) != list(range(k)):
        raise ConfigError("twist permutation must permute the simple roots")
    cosimples = datum.simple_coroots
    if k != n or det(tuple(cosimples)) == 0:
        raise ConfigError(
            "twist permutations need the simple coroots to form a basis of the "
            "cocharacter lattice; give the twist as an explicit matrix instead")
    # sigma @ src = dst columnwise, src columns the cosimples
    src = transpose(tuple(cosimples))
    dst = transpose(tuple(cosimples[perm[i]] for i in range(k)))
    src_inv_rows = [[Fraction(x) for x in row] for row in _rational_inverse(src)]
    sigma = []
    for r in range(n):
        row = []
        for c in range(n):
            val = sum(Fraction(dst[r][j]) * src_inv_rows[j][c] for j in range(n))
            if val.denominator != 1:
                raise ConfigError("twist permutation does not extend to the lattice")
            row.append(int(val))
        sigma.append(tuple(row))
    return tuple(sigma)


def _rational_inverse(m: Matrix):
    n = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ConfigError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


# ---------------------------------------------------------------------------
# the parser

NAMED_SPECS = {
    "sl2": {"type": "A1", "isogeny": "sc"},
    "gl2": {"type": "A1", "isogeny": "gl"},
    "pgl2": {"type": "A1", "isogeny": "ad"},
    "gl3": {"type": "A2", "isogeny": "gl"},
    "sp4": {"type": "B2", "isogeny": "sc"},
    "g2": {"type": "G2"},
    "torus1": {"type": "T1"},
    "o2": {"type": "T1", "component_group": [[[-1]]]},
}

_ALLOWED_KEYS = {"type", "isogeny", "q", "twist", "component_group"}


def parse_group_spec(config, q: int | None = None) -> GroupSpec:
    """Build a validated GroupSpec from a config dict or a shortcut name.

    ``q`` overrides any q inside the config.  Unknown keys are rejected.
    """
    name = None
    if isinstance(config, str):
        name = config
        if config not in NAMED_SPECS:
            raise ConfigError(f"unknown group shortcut {config!r}; "
                              f"known: {', '.join(sorted(NAMED_SPECS))}")
        config = dict(NAMED_SPECS[config])
    if not isinstance(config, dict):
        raise ConfigError("group description must be a dict or a shortcut name")
    unknown = set(config) - _ALLOWED_KEYS
    if unknown:
        raise ConfigError(f"unknown keys in group description: {sorted(unknown)}")
    if "type" not in config:
        raise ConfigError("group description needs a 'type'")
    type_str = config["type"]
    if not isinstance(type_str, str):
        raise ConfigError("'type' must be a string")

    extra_torus = 0
    base_type = type_str
    if "+" in type_str:
        base_type, tail = type_str.split("+", 1)
        if not tail.startswith("T"):
            raise ConfigError(f"bad type suffix {tail!r}; only +T<r> is supported")
        try:
            extra_torus = int(tail[1:])
        except ValueError:
            raise ConfigError(f"bad torus suffix {tail!r}")
        if extra_torus < 1 or extra_torus > 6:
            raise ConfigError("torus suffix rank must be between 1 and 6")

    datum = _build_datum(base_type, config.get("isogeny"))
    if extra_torus:
        datum = _append_torus(datum, extra_torus)

    q_eff = q if q is not None else config.get("q")
    if q_eff is None:
        raise ConfigError("q is required (config key 'q' or the --q flag)")
    if not isinstance(q_eff, int):
        raise ConfigError("q must be an integer")
    p, _ = _prime_power(q_eff)
    bad = _bad_primes(datum.cartan_label)
    if p in bad:
        raise UnsupportedTypeError(
            f"p = {p} is a bad prime for type {datum.cartan_label}; "
            f"supported q for this type avoid {sorted(bad)}")

    twist_cfg = config.get("twist")
    n = datum.rank
    if twist_cfg is None:
        sigma = identity(n)
    elif isinstance(twist_cfg, (list, tuple)) and twist_cfg and \
            isinstance(twist_cfg[0], (list, tuple)):
        sigma = tuple(tuple(int(x) for x in row) for row in twist_cfg)
        if len(sigma) != n or any(len(r) != n for r in sigma):
            raise ConfigError("twist matrix has the wrong shape")
    elif isinstance(twist_cfg, (list, tuple)):
        sigma = _twist_from_permutation(datum, list(twist_cfg))
    else:
        raise ConfigError("twist must be a permutation list or a matrix")
    if abs(det(sigma)) != 1:
        raise ConfigError("twist must be a lattice automorphism")
    if not _is_root_permuting(datum, sigma) or not _is_based(datum, sigma):
        raise ConfigError("twist must permute the roots and preserve the simple roots")
    _matrix_order(sigma)
    twist = FrobeniusTwist(q=q_eff, p=p, sigma_y=sigma)

    comp_cfg = config.get("component_group")
    if comp_cfg is None:
        components = (identity(n),)
    else:
        gens = []
        for m in comp_cfg:
            g = tuple(tuple(int(x) for x in row) for row in m)
            if len(g) != n or any(len(r) != n for r in g):
                raise ConfigError("component matrix has the wrong shape")
            if abs(det(g)) != 1:
                raise ConfigError("component matrices must be lattice automorphisms")
            if not _is_root_permuting(datum, g):
                raise ConfigError("component matrices must permute the roots")
            gens.append(g)
        components = tuple(_close_group(gens, n))
        _validate_components(datum, twist, components)

    spec_name = name or type_str
    return GroupSpec(datum=datum, twist=twist, components=components,
                     name=spec_name)


def _close_group(gens, n, cap=256):
    seen = {identity(n)}
    frontier = [identity(n)]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                ag = mat_mul(a, g)
                if ag not in seen:
                    seen.add(ag)
                    nxt.append(ag)
        frontier = nxt
        if len(seen) > cap:
            raise ConfigError("component group is too large")
    return sorted(seen)


def _validate_components(datum: RootDatum, twist: FrobeniusTwist, components):
    if datum.simple_indices:
        weyl = set(weyl_closure(datum))
    else:
        weyl = {identity(datum.rank)}
    for g in components:
        if g != identity(datum.rank) and g in weyl:
            raise ConfigError(
                "component matrices must meet the reflection group only in the identity")
        # the twist must fix every component (trivial action on the component set)
        conj = mat_mul(mat_mul(twist.sigma_y, g), mat_inv_unimodular(twist.sigma_y))
        hits = [h for h in components if mat_mul(conj, mat_inv_unimodular(h)) in weyl]
        if not hits:
            raise ConfigError("twist does not preserve the component group")
        if hits != [g]:
            raise ConfigError("twist must fix every component")


# ---------------------------------------------------------------------------
# centralizer subsystems

@dataclass(frozen=True)
class SubSystem:
    """The roots of the ambient datum pairing integrally with a torsion point.

    ``positions`` index into ambient.roots; simples are the indecomposable
    positive elements with positivity inherited from the ambient system.
    Factors are the connected components of the simple-root graph, ordered by
    their smallest ambient root index.
    """

    ambient: RootDatum
    root_positions: tuple[int, ...]
    positive_positions: tuple[int, ...]
    simple_positions: tuple[int, ...]
    factors: tuple[tuple[int, ...], ...]  # partition of range(len(simple_positions))
    factor_types: tuple[str, ...]

    @property
    def label(self) -> str:
        if not self.factor_types:
            return "T"
        return "x".join(self.factor_types)

    def simple_roots(self):
        return tuple(self.ambient.roots[i] for i in self.simple_positions)

    def simple_coroots(self):
        return tuple(self.ambient.coroots[i] for i in self.simple_positions)

    def as_datum(self) -> RootDatum:
        """The subsystem as a root datum on the ambient lattices."""
        return RootDatum(
            rank=self.ambient.rank,
            roots=tuple(self.ambient.roots[i] for i in self.root_positions),
            coroots=tuple(self.ambient.coroots[i] for i in self.root_positions),
            simple_indices=tuple(self.root_positions.index(i)
                                 for i in self.simple_positions),
            cartan_label=self.label,
        )

    def simple_permutation(self, m_y: Matrix) -> tuple[int, ...]:
        """How a subsystem-preserving based automorphism permutes the simples."""
        mx = x_action(m_y)
        simples = self.simple_roots()
        out = []
        for s in simples:
            img = tuple(mat_vec(mx, s))
            try:
                out.append(simples.index(img))
            except ValueError:
                raise InvariantError("matrix does not preserve the subsystem simples")
        return tuple(out)

    def factor_of_simple(self, pos: int) -> int:
        for fi, comp in enumerate(self.factors):
            if pos in comp:
                return fi
        raise IndexError(pos)


def factor_permutation(sub: SubSystem, m_y: Matrix) -> tuple[int, ...]:
    """Permutation of the subsystem factors induced by a based automorphism."""
    sp = sub.simple_permutation(m_y)
    k = len(sub.factors)
    out = [None] * k
    for fi, comp in enumerate(sub.factors):
        targets = {sub.factor_of_simple(sp[pos]) for pos in comp}
        if len(targets) != 1:
            raise InvariantError("factor permutation tears a factor apart")
        out[fi] = targets.pop()
    if sorted(out) != list(range(k)):
        raise InvariantError("factor map is not a permutation")
    for fi in range(k):
        if sub.factor_types[fi] != sub.factor_types[out[fi]]:
            raise InvariantError("factor permutation changes the type")
    return tuple(out)


def _classify_component(datum: RootDatum, simple_positions, comp) -> str:
    if len(comp) == 1:
        return "A1"
    if len(comp) == 2:
        i, j = (simple_positions[c] for c in comp)
        nij = datum.pairing(datum.roots[i], datum.coroots[j])
        nji = datum.pairing(datum.roots[j], datum.coroots[i])
        prod = nij * nji
        if prod == 1:
            return "A2"
        if prod == 2:
            return "B2"
        if prod == 3:
            return "G2"
    raise UnsupportedTypeError(
        f"centralizer subsystem of rank {len(comp)} outside the supported menu")


def centralizer_subdatum(datum: RootDatum, point) -> SubSystem:
    """Subsystem of roots alpha with <alpha, point> integral, point in Y x Q/Z."""
    coords = frac_vec_mod1(point)
    positions = tuple(i for i, r in enumerate(datum.roots)
                      if Fraction(datum.pairing(r, coords)) % 1 == 0)
    pos_all = set(positive_root_indices(datum))
    positive = tuple(i for i in positions if i in pos_all)
    pos_vectors = {datum.roots[i] for i in positive}
    simple_positions = []
    for i in positive:
        r = datum.roots[i]
        decomposable = any(
            tuple(a - b for a, b in zip(r, other)) in pos_vectors
            for other in pos_vectors if other != r
        )
        if not decomposable:
            simple_positions.append(i)
    simple_positions = tuple(sorted(simple_positions))
    k = len(simple_positions)
    adj = {a: set() for a in range(k)}
    for a in range(k):
        for b in range(a + 1, k):
            i, j = simple_positions[a], simple_positions[b]
            if datum.pairing(datum.roots[i], datum.coroots[j]) != 0:
                adj[a].add(b)
                adj[b].add(a)
    unseen = set(range(k))
    factors = []
    while unseen:
        start = min(unseen)
        comp = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        unseen -= comp
        factors.append(tuple(sorted(comp)))
    factors.sort(key=lambda c: simple_positions[c[0]])
    types = tuple(_classify_component(datum, simple_positions, c) for c in factors)
    return SubSystem(
        ambient=datum,
        root_positions=positions,
        positive_positions=positive,
        simple_positions=simple_positions,
        factors=tuple(factors),
        factor_types=types,
    )


def component_group_of_centralizer(datum: RootDatum, point, weyl_elements) -> list[Matrix]:
    """Elements w of the given Weyl set fixing the point and its subsystem positivity."""
    coords = frac_vec_mod1(point)
    sub = centralizer_subdatum(datum, point)
    pos_set = {datum.roots[i] for i in sub.positive_positions}
    out = []
    for w in weyl_elements:
        if frac_vec_mod1(mat_vec(w, coords)) != coords:
            continue
        wx = x_action(w)
        if all(tuple(mat_vec(wx, r)) in pos_set for r in pos_set):
            out.append(w)
    return out


# ---------------------------------------------------------------------------
# Whittaker normalization data

def whittaker_torsor_size(spec: GroupSpec) -> int:
    """Size of the torsor of Whittaker normalizations.

    This is the number of Frobenius-fixed points on the prime-to-p torsion of
    X / (root lattice); counts never depend on the choice, but the size is
    reported so the normalization ambiguity is visible.
    """
    d = spec.datum
    n = d.rank
    rel_cols = transpose(tuple(d.roots)) if d.roots else ()
    f = mat_scale_int(spec.q, spec.twist.sigma_x)
    return fixed_torsion_count(n, rel_cols, f, spec.twist.p)


def mat_scale_int(c: int, m: Matrix) -> Matrix:
    return tuple(tuple(c * x for x in row) for row in m)
