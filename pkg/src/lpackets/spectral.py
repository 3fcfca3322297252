"""Parameter enumeration through the dual group.

For a connected group the Frobenius-semisimple parameters are enumerated as
pairs (s, C): a torsion point s of the dual torus taken up to the dual Weyl
group, with q sigma (s) in the orbit of s, together with a component-stable
special class C of the centralizer of s.  Each pair carries an extended
component group (the class's component group extended by the stabilizer of C
in the centralizer's component group) with a Frobenius automorphism; the
parameters in the pair's stratum are the twisted-conjugation classes of that
extended group and each one's packet size is the number of irreducible
characters of its twisted centralizer.

Disconnected groups are refused here; the stratified route handles them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .coxeter import CoxeterGroup, enumerate_weyl
from .errors import InvariantError, PipelineUnavailableError
from .groups import FiniteGroup, identity_perm, semidirect
from .lattice import Matrix, frac_vec_mod1, identity, mat_inv_unimodular, mat_mul, mat_vec
from .rootdata import (
    GroupSpec,
    SubSystem,
    centralizer_subdatum,
    dual_datum,
    factor_permutation,
    point_label,
    x_action,
)
from .lattice import solve_torsion
from .springer import (
    assemble_product_group,
    group_structure_label,
    induced_automorphism,
    special_classes,
)

__all__ = [
    "SemisimpleClass", "SpecialPair", "ExtendedComponentGroup", "MbarElement",
    "FiniteLParameter", "SpectralStratum", "enumerate_ss_classes",
    "special_pairs", "extended_group", "mbar", "parameters", "total_count",
    "spectral_strata", "sl2_wd_convert",
]


@dataclass(frozen=True)
class SemisimpleClass:
    rep: tuple[Fraction, ...]
    orbit: tuple[tuple[Fraction, ...], ...]
    witness: Matrix
    sub_label: str

    @property
    def orbit_size(self) -> int:
        return len(self.orbit)

    def label(self) -> str:
        return point_label(self.rep)


@dataclass(frozen=True)
class SpecialPair:
    ss: SemisimpleClass
    class_tuple: tuple[str, ...]     # canonical representative, one label per factor
    class_orbit: tuple[tuple[str, ...], ...]

    def class_label(self) -> str:
        if not self.class_tuple:
            return "1"
        return ",".join(self.class_tuple)


@dataclass
class ExtendedComponentGroup:
    abar: FiniteGroup
    f_action: tuple[int, ...]
    n: int                       # order of the Frobenius automorphism
    description: str


@dataclass
class MbarElement:
    x: int
    x_label: str
    x_class_size: int
    centralizer: FiniteGroup
    irr_count: int


@dataclass(frozen=True)
class FiniteLParameter:
    ss_label: str
    class_label: str
    x_label: str
    packet_group_label: str
    packet_size: int
    normal_form: str            # "sl2" or "wd"
    monodromy_label: str        # class label in sl2 form, nilpotent label in wd form


@dataclass
class SpectralStratum:
    ss: SemisimpleClass
    pair: SpecialPair
    ext: ExtendedComponentGroup
    elements: list[MbarElement]

    @property
    def count(self) -> int:
        return len(self.elements)

    @property
    def total(self) -> int:
        return sum(e.irr_count for e in self.elements)


def _require_connected(spec: GroupSpec):
    if not spec.connected:
        raise PipelineUnavailableError(
            "the dual-side enumeration only covers connected groups; "
            "use the stratified pipeline for disconnected ones")


# ---------------------------------------------------------------------------
# semisimple classes

def enumerate_ss_classes(spec: GroupSpec, rng=None) -> list[SemisimpleClass]:
    """Torsion points of the dual torus with q sigma (s) Weyl-conjugate to s,
    up to the Weyl group, with canonical representatives and witnesses."""
    _require_connected(spec)
    dd = dual_datum(spec.datum)
    sigma = spec.twist.sigma_x  # the twist seen by the dual side
    q = spec.q
    cox = enumerate_weyl(dd)
    n = dd.rank
    points = set()
    for w in cox.elements:
        m = mat_mul(sigma, w)
        a = tuple(tuple(q * m[i][j] - (1 if i == j else 0) for j in range(n))
                  for i in range(n))
        points.update(solve_torsion(a))

    point_list = sorted(points)
    if rng is not None:
        rng.shuffle(point_list)
    classes = []
    seen = set()
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
            for w in cox.elements:
                t = frac_vec_mod1(mat_vec(w, s))
                if t not in orbit:
                    stack.append(t)
        if not orbit <= points:
            raise InvariantError("Weyl orbit leaks outside the solution set")
        seen |= orbit
        rep = min(orbit)
        target = frac_vec_mod1(tuple(q * x for x in mat_vec(sigma, rep)))
        witness = next((w for w in cox.elements
                        if frac_vec_mod1(mat_vec(w, rep)) == target), None)
        if witness is None:
            raise InvariantError("no witness for a supposedly stable orbit")
        sub = centralizer_subdatum(dd, rep)
        classes.append(SemisimpleClass(rep=rep, orbit=tuple(sorted(orbit)),
                                       witness=witness, sub_label=sub.label))
    classes.sort(key=lambda c: c.rep)
    return classes


# ---------------------------------------------------------------------------
# geometry at one semisimple class

class _StratumGeometry:
    """Everything about the centralizer at the canonical representative."""

    def __init__(self, spec: GroupSpec, ssc: SemisimpleClass):
        self.spec = spec
        self.ssc = ssc
        dd = dual_datum(spec.datum)
        self.dd = dd
        self.cox = enumerate_weyl(dd)
        self.sub = centralizer_subdatum(dd, ssc.rep)
        self.pi0 = _pi0_elements(self.cox, self.sub, ssc.rep)
        self.factor_types = self.sub.factor_types
        # Frobenius as a based automorphism of the subsystem:
        # v0 . witness^-1 . sigma with v0 the positivity correction
        m = mat_mul(mat_inv_unimodular(ssc.witness), spec.twist.sigma_x)
        self.aut_f = _positivity_correct(self.cox, self.sub, m)

    def factor_perm_of(self, m_y: Matrix) -> tuple[int, ...]:
        """Permutation of the subsystem factors induced by a based map."""
        return factor_permutation(self.sub, m_y)

    def act_on_tuple(self, m_y: Matrix, labels: tuple[str, ...]) -> tuple[str, ...]:
        perm = self.factor_perm_of(m_y)
        out = [None] * len(labels)
        for i, lab in enumerate(labels):
            out[perm[i]] = lab
        return tuple(out)


def _pi0_elements(cox: CoxeterGroup, sub: SubSystem, rep) -> list[Matrix]:
    coords = frac_vec_mod1(rep)
    pos_set = {sub.ambient.roots[i] for i in sub.positive_positions}
    out = []
    for w in cox.elements:  # element order = (length, word): deterministic
        if frac_vec_mod1(mat_vec(w, coords)) != coords:
            continue
        wx = x_action(w)
        if all(tuple(mat_vec(wx, r)) in pos_set for r in pos_set):
            out.append(w)
    return out


def _positivity_correct(cox: CoxeterGroup, sub: SubSystem, m: Matrix) -> Matrix:
    """Compose with the unique element of the subsystem reflection group that
    makes m preserve the positive subsystem."""
    pos = [sub.ambient.roots[i] for i in sub.positive_positions]
    pos_set = set(pos)
    all_set = {sub.ambient.roots[i] for i in sub.root_positions}
    mx = x_action(m)
    image = [tuple(mat_vec(mx, r)) for r in pos]
    if not set(image) <= all_set:
        raise InvariantError("map does not normalize the subsystem")
    sub_weyl = _subsystem_weyl(sub)
    fixes = [v for v in sub_weyl
             if {tuple(mat_vec(x_action(mat_mul(v, m)), r)) for r in pos} == pos_set]
    if len(fixes) != 1:
        raise InvariantError("positivity correction is not unique")
    return mat_mul(fixes[0], m)


def _subsystem_weyl(sub: SubSystem) -> list[Matrix]:
    from .rootdata import weyl_closure
    return weyl_closure(sub.as_datum())


# ---------------------------------------------------------------------------
# special pairs

def special_pairs(spec: GroupSpec, ssc: SemisimpleClass, geo=None, rng=None) -> list[SpecialPair]:
    """Component-stable Frobenius-stable orbits of special classes of the
    centralizer at the canonical representative."""
    _require_connected(spec)
    geo = geo or _StratumGeometry(spec, ssc)
    per_factor = [tuple(r.class_label for r in special_classes(t))
                  for t in geo.factor_types]
    tuples = [()]
    for labels in per_factor:
        tuples = [t + (lab,) for t in tuples for lab in labels]

    rank_key = {}
    for t in set(geo.factor_types):
        for pos, r in enumerate(special_classes(t)):
            rank_key[(t, r.class_label)] = pos

    def tuple_key(tup):
        return tuple(rank_key[(geo.factor_types[i], lab)] for i, lab in enumerate(tup))

    order = list(tuples)
    if rng is not None:
        rng.shuffle(order)
    seen = set()
    pairs = []
    for start in order:
        if start in seen:
            continue
        orbit = {start}
        stack = [start]
        while stack:
            t = stack.pop()
            for g in geo.pi0:
                t2 = geo.act_on_tuple(g, t)
                if t2 not in orbit:
                    orbit.add(t2)
                    stack.append(t2)
        seen |= orbit
        # Frobenius stability of the orbit
        rep = min(orbit, key=tuple_key)
        if geo.act_on_tuple(geo.aut_f, rep) not in orbit:
            continue
        pairs.append(SpecialPair(ss=ssc, class_tuple=rep,
                                 class_orbit=tuple(sorted(orbit, key=tuple_key))))
    pairs.sort(key=lambda p: tuple_key(p.class_tuple))
    return pairs


# ---------------------------------------------------------------------------
# the extended component group and its Frobenius

def extended_group(spec: GroupSpec, pair: SpecialPair, geo=None) -> ExtendedComponentGroup:
    _require_connected(spec)
    geo = geo or _StratumGeometry(spec, pair.ss)
    cox = geo.cox

    # correct the Frobenius so it fixes the canonical class tuple
    aut = None
    for g in geo.pi0:  # deterministic order
        cand = mat_mul(g, geo.aut_f)
        if geo.act_on_tuple(cand, pair.class_tuple) == pair.class_tuple:
            aut = cand
            break
    if aut is None:
        raise InvariantError("stable orbit without a class-fixing Frobenius")

    stab = [g for g in geo.pi0
            if geo.act_on_tuple(g, pair.class_tuple) == pair.class_tuple]
    stab_index = {m: i for i, m in enumerate(stab)}
    s_labels = []
    s_table = []
    for a in stab:
        row = []
        for b in stab:
            ab = mat_mul(a, b)
            if ab not in stab_index:
                raise InvariantError("class stabilizer is not closed")
            row.append(stab_index[ab])
        s_table.append(row)
        s_labels.append(cox.word_label(cox.index[a]))
    s_group = FiniteGroup(s_labels, s_table, check=False)

    abar_labels = []
    for i, t in enumerate(geo.factor_types):
        rec = next(r for r in special_classes(t)
                   if r.class_label == pair.class_tuple[i])
        abar_labels.append(rec.abar_label)
    g_group = assemble_product_group(abar_labels)

    def act(v: int):
        return induced_automorphism(abar_labels, list(geo.factor_perm_of(stab[v])))

    abar = semidirect(g_group, s_group, act)

    # Frobenius on the connected part: factor permutation; on the stabilizer:
    # conjugation by the corrected automorphism
    fg = induced_automorphism(abar_labels, list(geo.factor_perm_of(aut)))
    aut_inv = mat_inv_unimodular(aut)
    fs = []
    for v in stab:
        img = mat_mul(mat_mul(aut, v), aut_inv)
        if img not in stab_index:
            raise InvariantError("Frobenius does not normalize the class stabilizer")
        fs.append(stab_index[img])
    ns = s_group.order
    f_action = tuple(fg[g] * ns + fs[v]
                     for g in range(g_group.order) for v in range(ns))
    if not abar.is_automorphism(f_action):
        raise InvariantError("Frobenius is not an automorphism of the extended group")
    n = _perm_order(f_action)
    desc = group_structure_label(g_group)
    if ns > 1:
        desc = f"{desc}:{group_structure_label(s_group)}"
    return ExtendedComponentGroup(abar=abar, f_action=f_action, n=n, description=desc)


def _perm_order(perm) -> int:
    n = 1
    cur = list(perm)
    ident = list(range(len(perm)))
    while cur != ident:
        cur = [perm[i] for i in cur]
        n += 1
        if n > 10000:
            raise InvariantError("permutation order runaway")
    return n


# ---------------------------------------------------------------------------
# twisted classes of the extended group

def mbar(ext: ExtendedComponentGroup, rng=None) -> list[MbarElement]:
    """Twisted-conjugation classes of the extended group, with packet sizes.

    With an rng, the orbits are computed around a random translation point
    and mapped back; the result is identical by the translation equivariance
    of twisted conjugation, which this exercises.
    """
    abar = ext.abar
    f = ext.f_action
    if rng is None or abar.order == 1:
        orbits = abar.twisted_orbits(f)
        centralizer_of = lambda x: abar.twisted_centralizer(x, f)
    else:
        a = rng.randrange(abar.order)
        a_inv = abar.inverse[a]
        f2 = [abar.mul(abar.mul(a, f[b]), a_inv) for b in range(abar.order)]
        shifted = abar.twisted_orbits(f2)
        orbits = []
        for orb in shifted:
            orbits.append(tuple(sorted(abar.mul(x, a) for x in orb)))
        orbits.sort(key=lambda c: c[0])
        centralizer_of = lambda x: abar.twisted_centralizer(abar.mul(x, a_inv), f2)

    out = []
    for orb in orbits:
        x = min(orb, key=lambda i: abar.labels[i])
        cz = abar.subgroup(centralizer_of(x))
        out.append(MbarElement(x=x, x_label=abar.labels[x],
                               x_class_size=len(orb), centralizer=cz,
                               irr_count=cz.class_count()))
    out.sort(key=lambda e: e.x_label)
    return out


# ---------------------------------------------------------------------------
# assembly

def spectral_strata(spec: GroupSpec, rng=None) -> list[SpectralStratum]:
    _require_connected(spec)
    strata = []
    for ssc in enumerate_ss_classes(spec, rng=rng):
        geo = _StratumGeometry(spec, ssc)
        for pair in special_pairs(spec, ssc, geo=geo, rng=rng):
            ext = extended_group(spec, pair, geo=geo)
            strata.append(SpectralStratum(ss=ssc, pair=pair, ext=ext,
                                          elements=mbar(ext, rng=rng)))
    return strata


def parameters(spec: GroupSpec, rng=None) -> list[FiniteLParameter]:
    out = []
    for st in spectral_strata(spec, rng=rng):
        for el in st.elements:
            out.append(FiniteLParameter(
                ss_label=st.ss.label(),
                class_label=st.pair.class_label(),
                x_label=el.x_label,
                packet_group_label=group_structure_label(el.centralizer),
                packet_size=el.irr_count,
                normal_form="sl2",
                monodromy_label=st.pair.class_label(),
            ))
    return out


def total_count(spec: GroupSpec, rng=None) -> int:
    return sum(st.total for st in spectral_strata(spec, rng=rng))


def sl2_wd_convert(param: FiniteLParameter) -> FiniteLParameter:
    """Swap between the two normal forms of a parameter.

    In the sl2 form the monodromy is carried by the class label; in the
    grouped form the unipotent part is recorded as a nilpotent label ("0"
    when the class is trivial) and the square root of q is the positive one
    by convention.  The conversion is an involution and touches nothing that
    packet data depend on.
    """
    if param.normal_form == "sl2":
        trivial = all(part == "1" for part in param.monodromy_label.split(","))
        nil = "0" if trivial else param.monodromy_label
        return FiniteLParameter(
            ss_label=param.ss_label, class_label=param.class_label,
            x_label=param.x_label, packet_group_label=param.packet_group_label,
            packet_size=param.packet_size, normal_form="wd",
            monodromy_label=nil)
    return FiniteLParameter(
        ss_label=param.ss_label, class_label=param.class_label,
        x_label=param.x_label, packet_group_label=param.packet_group_label,
        packet_size=param.packet_size, normal_form="sl2",
        monodromy_label=param.class_label)
