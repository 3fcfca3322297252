"""Parameter enumeration through character-sheaf strata.

The torsion points of the dual torus are grouped into orbits of the full
acting group (dual reflections extended by the component group).  At a
canonical point the stabilizer splits into the reflection group of the
integral subsystem and a based complement; the strata at that point are
indexed by orbits of two-sided cells of the integral reflection group
together with twisted classes of distinguished Frobenius cosets.  Packets
come from the family group of the cell extended by the stabilizer of the
cell and coset, through the same twisted-conjugation bookkeeping the dual
route uses.

This route covers disconnected groups: component matrices act on the torus
alongside the reflections and enter every stabilizer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .coxeter import CellPartition, CoxeterGroup, cell_action, cells, enumerate_weyl, kl_table
from .errors import InvariantError
from .groups import FiniteGroup, semidirect
from .lattice import (
    Matrix,
    frac_vec_mod1,
    identity,
    mat_inv_unimodular,
    mat_mul,
    mat_vec,
    solve_torsion,
)
from .rootdata import (
    GroupSpec,
    SubSystem,
    _build_datum,
    centralizer_subdatum,
    dual_datum,
    factor_permutation,
    point_label,
    x_action,
)
from .springer import (
    assemble_product_group,
    family_groups,
    group_structure_label,
    induced_automorphism,
)

__all__ = [
    "SemisimpleParameter", "UnipotentParameter", "BetaClass", "StratPacket",
    "StratifiedStratum", "semisimple_parameters", "stratified_strata",
    "stratified_total", "stratified_parameters",
]


@dataclass(frozen=True)
class SemisimpleParameter:
    rep: tuple[Fraction, ...]
    orbit: tuple[tuple[Fraction, ...], ...]
    sub_label: str

    @property
    def orbit_size(self) -> int:
        return len(self.orbit)

    def label(self) -> str:
        return point_label(self.rep)


@dataclass(frozen=True)
class UnipotentParameter:
    cell_positions: tuple[int, ...]   # orbit of two-sided cells, sorted
    rep_cell: int
    label: str                        # "+"-joined cell ids over the orbit
    family_labels: tuple[str, ...]    # factor family groups at the rep cell


@dataclass(frozen=True)
class BetaClass:
    rep: Matrix                       # distinguished coset representative
    label: str                        # its word label in the reflection group
    orbit_size: int                   # cosets in its twisted class


@dataclass(frozen=True)
class StratPacket:
    x_label: str
    packet_size: int
    group_label: str


@dataclass
class StratifiedStratum:
    ss: SemisimpleParameter
    unip: UnipotentParameter
    beta: BetaClass
    group_desc: str
    packets: list[StratPacket]

    @property
    def count(self) -> int:
        return len(self.packets)

    @property
    def total(self) -> int:
        return sum(p.packet_size for p in self.packets)


@dataclass(frozen=True)
class StratifiedParameter:
    ss_label: str
    cell_label: str
    beta_label: str
    x_label: str
    packet_group_label: str
    packet_size: int


# ---------------------------------------------------------------------------
# the full acting group on the dual torus

class _Ambient:
    """Dual reflection group extended by the component matrices."""

    def __init__(self, spec: GroupSpec):
        self.spec = spec
        self.dd = dual_datum(spec.datum)
        self.cox = enumerate_weyl(self.dd)
        self.sigma = spec.twist.sigma_x
        self.sigma_inv = mat_inv_unimodular(self.sigma)
        self.q = spec.q
        ident = identity(spec.datum.rank)
        self.elements: list[tuple[str, Matrix]] = []
        self.label_of: dict = {}
        for ci, g in enumerate(spec.components):
            c = x_action(g)
            prefix = "" if g == ident else f"c{ci}"
            for wi, w in enumerate(self.cox.elements):
                m = mat_mul(c, w)
                word = self.cox.word_label(wi)
                if not prefix:
                    label = word
                else:
                    label = prefix if word == "e" else f"{prefix}.{word}"
                if m in self.label_of:
                    raise InvariantError(
                        "component coset collides with the reflection group")
                self.label_of[m] = label
                self.elements.append((label, m))

    def frobenius(self, v):
        """q sigma on the dual torus."""
        return frac_vec_mod1(tuple(self.q * x for x in mat_vec(self.sigma, v)))


# ---------------------------------------------------------------------------
# semisimple parameters

def semisimple_parameters(spec: GroupSpec, rng=None) -> list[SemisimpleParameter]:
    """Orbits on the dual torus containing a Frobenius-stable reflection orbit."""
    amb = _Ambient(spec)
    n = amb.dd.rank
    q = amb.q
    points = set()
    for w in amb.cox.elements:
        m = mat_mul(amb.sigma, w)
        a = tuple(tuple(q * m[i][j] - (1 if i == j else 0) for j in range(n))
                  for i in range(n))
        points.update(solve_torsion(a))

    point_list = sorted(points)
    if rng is not None:
        rng.shuffle(point_list)
    out = []
    seen = set()
    mats = [m for _, m in amb.elements]
    for start in point_list:
        if start in seen:
            continue
        orbit = set()
        stack = [start]
        while stack:
            s = stack.pop()
            if s in orbit:
                continue
            orbit.add(s)
            for m in mats:
                t = frac_vec_mod1(mat_vec(m, s))
                if t not in orbit:
                    stack.append(t)
        if not orbit <= points:
            raise InvariantError("full orbit leaks outside the solution set")
        seen |= orbit
        rep = min(orbit)
        sub = centralizer_subdatum(amb.dd, rep)
        out.append(SemisimpleParameter(rep=rep, orbit=tuple(sorted(orbit)),
                                       sub_label=sub.label))
    out.sort(key=lambda c: c.rep)
    return out


# ---------------------------------------------------------------------------
# standalone cell structure per factor type

@lru_cache(maxsize=None)
def _standalone(type_label: str):
    datum = _build_datum(type_label, None)
    cox = enumerate_weyl(datum)
    part = cells(kl_table(cox))
    return cox, part


def _factor_cell_ids(sub: SubSystem, sub_cox: CoxeterGroup,
                     part: CellPartition) -> tuple[tuple[str, ...], ...]:
    """Per two-sided cell, the cell id of each factor component.

    Cells of a product reflection group are products of factor cells; the
    assignment projects the least element of each cell onto the factors and
    reads its cell off the factor's standalone structure.
    """
    where = []
    for s in range(len(sub.simple_positions)):
        fi = sub.factor_of_simple(s)
        where.append((fi, sub.factors[fi].index(s)))
    k = len(sub.factors)
    out = []
    for cell in part.two_sided_cells:
        least = min(cell, key=lambda i: (sub_cox.length[i], sub_cox.words[i]))
        local_words = [[] for _ in range(k)]
        for letter in sub_cox.words[least]:
            fi, loc = where[letter]
            local_words[fi].append(loc)
        ids = []
        for fi, t in enumerate(sub.factor_types):
            cox_t, part_t = _standalone(t)
            idx = 0
            for loc in local_words[fi]:
                idx = cox_t.right[loc][idx]
            ids.append(part_t.cell_id(part_t.cell_of[idx]))
        out.append(tuple(ids))
    expected = 1
    for t in sub.factor_types:
        expected *= len(_standalone(t)[1].two_sided_cells)
    if len(set(out)) != len(out) or len(out) != expected:
        raise InvariantError("cells do not factor as products over the factors")
    return tuple(out)


# ---------------------------------------------------------------------------
# geometry at one canonical point

class _PointGeometry:
    """Stabilizer, cells, and Frobenius cosets at one torus point."""

    def __init__(self, amb: _Ambient, rep):
        self.amb = amb
        self.rep = rep
        dd = amb.dd
        self.sub = centralizer_subdatum(dd, rep)
        self.sub_cox = enumerate_weyl(self.sub.as_datum())
        self.part = cells(kl_table(self.sub_cox))
        self.factor_cells = _factor_cell_ids(self.sub, self.sub_cox, self.part)
        self.pos_set = {dd.roots[i] for i in self.sub.positive_positions}
        coords = frac_vec_mod1(rep)

        int_set = set(self.sub_cox.elements)
        stab = [(lab, m) for lab, m in amb.elements
                if frac_vec_mod1(mat_vec(m, coords)) == coords]
        omega = [(lab, m) for lab, m in stab if self._based(m)]
        if len(stab) != len(omega) * len(int_set):
            raise InvariantError(
                "stabilizer does not split over the integral reflection group")
        self.omega_labels = [lab for lab, _ in omega]
        self.omega_mats = [m for _, m in omega]
        index = {m: i for i, m in enumerate(self.omega_mats)}
        table = []
        for _, a in omega:
            row = []
            for _, b in omega:
                ab = mat_mul(a, b)
                if ab not in index:
                    raise InvariantError("based stabilizer complement is not closed")
                row.append(index[ab])
            table.append(row)
        self.omega = FiniteGroup(self.omega_labels, table, check=False)
        self.cell_perm = [cell_action(self.part, m)[1] for m in self.omega_mats]

        # Frobenius cosets: reflection-group solutions of w(F(rep)) = rep,
        # partitioned into left cosets of the integral reflection group
        target = amb.frobenius(coords)
        sprime = [w for w in amb.cox.elements
                  if frac_vec_mod1(mat_vec(w, target)) == coords]
        if not sprime:
            raise InvariantError("point enumerated without a Frobenius witness")
        sset = set(sprime)
        self.coset_reps: list[Matrix] = []      # distinguished representatives
        self.coset_of: dict = {}
        for w in sprime:
            if w in self.coset_of:
                continue
            coset = {mat_mul(u, w) for u in int_set}
            if not coset <= sset:
                raise InvariantError("Frobenius coset leaves the solution set")
            dist = [v for v in coset if self._based(mat_mul(v, amb.sigma))]
            if len(dist) != 1:
                raise InvariantError("distinguished representative is not unique")
            ci = len(self.coset_reps)
            self.coset_reps.append(dist[0])
            for v in coset:
                self.coset_of[v] = ci
        if len(self.coset_of) != len(sset):
            raise InvariantError("Frobenius cosets do not cover the solutions")

        # twisted conjugation of the complement on the cosets
        self.ad = []
        for g in self.omega_mats:
            sgs = mat_mul(mat_mul(amb.sigma, g), amb.sigma_inv)
            sgs_inv = mat_inv_unimodular(sgs)
            row = []
            for w in self.coset_reps:
                img = mat_mul(mat_mul(g, w), sgs_inv)
                if img not in self.coset_of:
                    raise InvariantError("twisted conjugation leaves the cosets")
                row.append(self.coset_of[img])
            self.ad.append(row)

        # cell permutation of each distinguished Frobenius map
        self.beta_cell_perm = [cell_action(self.part, mat_mul(w, amb.sigma))[1]
                               for w in self.coset_reps]

    def _based(self, m: Matrix) -> bool:
        mx = x_action(m)
        return all(tuple(mat_vec(mx, r)) in self.pos_set for r in self.pos_set)

    def factor_perm(self, m: Matrix) -> tuple[int, ...]:
        return factor_permutation(self.sub, m)


# ---------------------------------------------------------------------------
# counting one stratum

def _check_factor_cells(geo: _PointGeometry, cell_pos: int, perm) -> None:
    ids = geo.factor_cells[cell_pos]
    for fi, target in enumerate(perm):
        if ids[target] != ids[fi]:
            raise InvariantError("cell-preserving map moves a factor cell")


def _stratum_packets(geo: _PointGeometry, cell_pos: int, beta_idx: int,
                     omega_sub_idx: list[int], rng=None):
    """Packets of one stratum: twisted classes of the family group extended
    by the stabilizer of the cell and coset."""
    labels = tuple(family_groups(t)[geo.factor_cells[cell_pos][fi]].group_label
                   for fi, t in enumerate(geo.sub.factor_types))
    g_group = assemble_product_group(labels)
    ng = g_group.order

    m_beta = mat_mul(geo.coset_reps[beta_idx], geo.amb.sigma)
    tau_fp = geo.factor_perm(m_beta)
    _check_factor_cells(geo, cell_pos, tau_fp)
    tau = induced_automorphism(labels, list(tau_fp))

    omega_sub = geo.omega.subgroup(omega_sub_idx)
    acts = []
    for oi in omega_sub_idx:
        fp = geo.factor_perm(geo.omega_mats[oi])
        _check_factor_cells(geo, cell_pos, fp)
        if tuple(fp[tau_fp[i]] for i in range(len(fp))) != \
                tuple(tau_fp[fp[i]] for i in range(len(fp))):
            raise InvariantError("cell stabilizer does not commute with Frobenius")
        acts.append(induced_automorphism(labels, list(fp)))

    ext = semidirect(g_group, omega_sub, lambda v: acts[v])
    no = omega_sub.order

    def act(p: int, g: int) -> int:
        h, v = divmod(p, no)
        return g_group.mul(h, g_group.mul(acts[v][g],
                                          g_group.inverse[tau[h]]))

    order = list(range(ng))
    if rng is not None:
        rng.shuffle(order)
    seen = set()
    packets = []
    for start in order:
        if start in seen:
            continue
        orbit = {start}
        stack = [start]
        while stack:
            g = stack.pop()
            for p in range(ext.order):
                g2 = act(p, g)
                if g2 not in orbit:
                    orbit.add(g2)
                    stack.append(g2)
        seen |= orbit
        x = min(orbit, key=lambda i: g_group.labels[i])
        stab = [p for p in range(ext.order) if act(p, x) == x]
        cz = ext.subgroup(stab)
        packets.append(StratPacket(x_label=g_group.labels[x],
                                   packet_size=cz.class_count(),
                                   group_label=group_structure_label(cz)))
    packets.sort(key=lambda p: p.x_label)
    desc = group_structure_label(g_group)
    if no > 1:
        desc = f"{desc}:{group_structure_label(omega_sub)}"
    return packets, desc


# ---------------------------------------------------------------------------
# assembly

def stratified_strata(spec: GroupSpec, rng=None) -> list[StratifiedStratum]:
    amb = _Ambient(spec)
    strata = []
    for ss in semisimple_parameters(spec, rng=rng):
        geo = _PointGeometry(amb, ss.rep)
        k = len(geo.part.two_sided_cells)

        # orbits of cells under the based complement
        cell_seen = set()
        for c0 in range(k):
            if c0 in cell_seen:
                continue
            orb = {c0}
            stack = [c0]
            while stack:
                c = stack.pop()
                for perm in geo.cell_perm:
                    if perm[c] not in orb:
                        orb.add(perm[c])
                        stack.append(perm[c])
            cell_seen |= orb
            members = tuple(sorted(orb))
            rep_cell = members[0]
            unip = UnipotentParameter(
                cell_positions=members,
                rep_cell=rep_cell,
                label="+".join(geo.part.cell_id(c) for c in members),
                family_labels=tuple(
                    family_groups(t)[geo.factor_cells[rep_cell][fi]].group_label
                    for fi, t in enumerate(geo.sub.factor_types)),
            )

            omega_stab = [oi for oi in range(geo.omega.order)
                          if geo.cell_perm[oi][rep_cell] == rep_cell]
            stable = [bi for bi in range(len(geo.coset_reps))
                      if geo.beta_cell_perm[bi][rep_cell] == rep_cell]

            beta_seen = set()
            for b0 in stable:
                if b0 in beta_seen:
                    continue
                borb = {b0}
                stack = [b0]
                while stack:
                    b = stack.pop()
                    for oi in omega_stab:
                        nb = geo.ad[oi][b]
                        if nb not in borb:
                            if nb not in stable:
                                raise InvariantError(
                                    "twisted conjugation leaves the stable cosets")
                            borb.add(nb)
                            stack.append(nb)
                beta_seen |= borb
                bi = min(borb)
                stab_idx = [oi for oi in omega_stab if geo.ad[oi][bi] == bi]
                packets, desc = _stratum_packets(geo, rep_cell, bi, stab_idx,
                                                 rng=rng)
                beta = BetaClass(
                    rep=geo.coset_reps[bi],
                    label=amb.cox.word_label(amb.cox.index[geo.coset_reps[bi]]),
                    orbit_size=len(borb),
                )
                strata.append(StratifiedStratum(ss=ss, unip=unip, beta=beta,
                                                group_desc=desc,
                                                packets=packets))
    return strata


def stratified_total(spec: GroupSpec, rng=None) -> int:
    return sum(st.total for st in stratified_strata(spec, rng=rng))


def stratified_parameters(spec: GroupSpec, rng=None) -> list[StratifiedParameter]:
    out = []
    for st in stratified_strata(spec, rng=rng):
        for p in st.packets:
            out.append(StratifiedParameter(
                ss_label=st.ss.label(),
                cell_label=st.unip.label,
                beta_label=st.beta.label,
                x_label=p.x_label,
                packet_group_label=p.group_label,
                packet_size=p.packet_size,
            ))
    return out
