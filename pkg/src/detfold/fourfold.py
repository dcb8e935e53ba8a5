"""Fiber quadrics of the projection from the plane P, the base locus of the
net of conics, assembly of Sing(X), rank-2 fiber splitting into couples of
planes, and an exhaustive finite-field oracle for independent verification.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .algebra import (
    MultiPoly,
    PrimeField,
    QQ,
    QuadExt,
    VARS_X,
    VARS_XU,
    kernel_rank_det,
    matrix_rank,
    nullspace,
)
from .curves import SingClassification, bivar_gcd, classify_singularities, plane_solutions
from .detrep import (
    SymDetRep,
    derived_equations,
    embed_fiber_vector,
    gram_rank_kernel,
    p3_forms,
)
from .errors import ConsistencyError, InputError, Rejection
from .points import ProjPoint, sorted_points



@dataclass(frozen=True)
class FiberReport:
    point: ProjPoint
    rank: int
    kind: str  # smooth-quadric | cone | plane-pair
    singular_locus: tuple  # () / (vertex,) / (line point, line point)
    conic_rank: int
    vertex_in_p: bool | None
    line_in_p: bool | None


def fiber_analysis(rep: SymDetRep, p: ProjPoint) -> FiberReport:
    field = rep.field
    gram, rank, _det, kernel = gram_rank_kernel(rep, p)
    conic_rank = matrix_rank([row[:3] for row in gram[:3]], field)
    if rank == 4:
        return FiberReport(p, 4, "smooth-quadric", (), conic_rank, None, None)
    if rank == 3:
        vertex = embed_fiber_vector(p, kernel[0], field)
        in_p = not any(vertex.coords[:3])
        return FiberReport(p, 3, "cone", (vertex,), conic_rank, in_p, None)
    pts = tuple(embed_fiber_vector(p, v, field) for v in kernel)
    line_in_p = all(not any(pt.coords[:3]) for pt in pts)
    return FiberReport(p, 2, "plane-pair", pts, conic_rank, None, line_in_p)


# ---------------------------------------------------------------------------
# Splitting a rank-2 fiber into its couple of planes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Plane:
    """Projective 2-plane in P^5 given by three independent linear forms."""

    forms: tuple  # 3 rows of 6 scalars
    field: object

    def basis(self) -> list:
        return nullspace([list(f) for f in self.forms], 6, self.field)

    def contains_point(self, pt: ProjPoint) -> bool:
        return all(
            not sum((c * x for c, x in zip(f, pt.coords)), self.field.zero())
            for f in self.forms
        )


@dataclass(frozen=True)
class PlanePair:
    point: ProjPoint
    planes: tuple  # two Plane values over `field`
    field: object  # base field or quadratic extension
    disc: object | None  # adjoined non-square, None for a base-field split
    degenerate: bool = False  # one member is the projection plane P itself


def split_rank2_fiber(rep: SymDetRep, p: ProjPoint, derived=None) -> PlanePair:
    """Write the rank-2 fiber quadric over p as a product of two planes.

    Splits over the base field when the reduced binary form's discriminant is
    a square, otherwise over the quadratic extension by that discriminant.
    Both planes are verified to lie on the fourfold by substitution.
    """
    base = rep.field
    gram, rank, _det, _kern = gram_rank_kernel(rep, p)
    if rank != 2:
        raise Rejection(f"fiber at {p} has rank {rank}, not 2; no couple of planes there")

    idx = _nonsingular_principal_pair(gram, base)
    i, j = idx
    a2 = [[gram[i][i], gram[i][j]], [gram[j][i], gram[j][j]]]
    det2 = a2[0][0] * a2[1][1] - a2[0][1] * a2[1][0]
    inv = [
        [a2[1][1] / det2, -a2[0][1] / det2],
        [-a2[1][0] / det2, a2[0][0] / det2],
    ]
    # Q(v) = L(v)^T A2^{-1} L(v) with L = rows i,j of the Gram matrix
    li = list(gram[i])
    lj = list(gram[j])
    a = inv[0][0]
    b = inv[0][1]
    c = inv[1][1]
    disc = b * b - a * c
    sq = base.sqrt(disc)
    if sq is not None:
        fld = base
        s = sq
        lift = lambda v: v
    else:
        fld = QuadExt(base, disc)
        s = fld.root()
        lift = fld.coerce
    # factor a z1^2 + 2b z1 z2 + c z2^2 into two linear forms in (z1, z2)
    av, bv, cv = lift(a), lift(b), lift(c)
    if av:
        f1 = ([fld.one(), (bv - s) / av], av)
        f2 = ([fld.one(), (bv + s) / av], fld.one())
    elif cv:
        f1 = ([(bv - s) / cv, fld.one()], cv)
        f2 = ([(bv + s) / cv, fld.one()], fld.one())
    else:
        f1 = ([fld.one(), fld.zero()], bv + bv)
        f2 = ([fld.zero(), fld.one()], fld.one())
    planes = []
    for coeffs, _scale in (f1, f2):
        # linear form on (u1,u2,u3,t): coeffs[0]*L_i + coeffs[1]*L_j
        lin4 = [coeffs[0] * lift(li[k]) + coeffs[1] * lift(lj[k]) for k in range(4)]
        planes.append(_plane_from_fiber_form(p, lin4, fld))
    # with an identically-zero conic block the fiber quadric contains P
    # itself; flag the pair instead of treating it as an internal error
    conic_rank = matrix_rank([row[:3] for row in gram[:3]], base)
    pair = PlanePair(
        point=p,
        planes=tuple(planes),
        field=fld,
        disc=None if sq is not None else disc,
        degenerate=(conic_rank == 0),
    )
    _verify_pair(rep, pair, derived)
    return pair


def _nonsingular_principal_pair(gram, field):
    for i in range(4):
        for j in range(i + 1, 4):
            d = gram[i][i] * gram[j][j] - gram[i][j] * gram[j][i]
            if d:
                return (i, j)
    raise ConsistencyError("rank-2 symmetric matrix without invertible principal 2x2 block")


def _plane_from_fiber_form(p: ProjPoint, lin4, fld) -> Plane:
    """Extend [alpha.u, beta*t] on the fiber 3-space to a plane in P^5."""
    base_forms = p3_forms(p, p.field)
    k = next(i for i, c in enumerate(p.coords) if c)
    zero = fld.zero()
    third = [zero] * 6
    third[3], third[4], third[5] = lin4[0], lin4[1], lin4[2]
    third[k] = third[k] + lin4[3]  # t equals x_k on the canonical fiber chart
    forms = [tuple(fld.coerce(c) for c in f) for f in base_forms]
    forms.append(tuple(third))
    return Plane(forms=tuple(forms), field=fld)


def _verify_pair(rep: SymDetRep, pair: PlanePair, derived=None) -> None:
    if derived is None:
        derived = derived_equations(rep)
    F = derived.fourfold
    fld = pair.field
    for plane in pair.planes:
        if _is_plane_p(plane, fld) and not pair.degenerate:
            raise ConsistencyError(f"fiber plane over {pair.point} coincides with the plane P")
        basis = plane.basis()
        if len(basis) != 3:
            raise ConsistencyError("plane forms are not independent")
        if not _poly_vanishes_on_span(F, basis, fld):
            raise ConsistencyError(f"claimed plane over {pair.point} is not inside the fourfold")
    rows = [list(f) for f in pair.planes[0].forms] + [list(f) for f in pair.planes[1].forms]
    if matrix_rank(rows, fld) != 4:
        raise ConsistencyError("planes of a couple must meet along a line")


def _is_plane_p(plane: Plane, fld) -> bool:
    # P = {x1=x2=x3=0}: its forms span exactly the first three coordinates
    rows = [list(f) for f in plane.forms] + [
        [fld.one() if i == k else fld.zero() for i in range(6)] for k in range(3)
    ]
    return matrix_rank(rows, fld) == 3


def _poly_vanishes_on_span(F: MultiPoly, basis: list, fld) -> bool:
    svars = ("s1", "s2", "s3")
    target = MultiPoly.zero(fld, svars)
    s = [MultiPoly.variable(fld, svars, v) for v in svars]
    mapping = {}
    for k, xv in enumerate(VARS_XU):
        expr = MultiPoly.zero(fld, svars)
        for t, vec in enumerate(basis):
            if vec[k]:
                expr = expr + s[t].scale(vec[k])
        mapping[xv] = expr
    return F.substitute(mapping, target=target).is_zero


# ---------------------------------------------------------------------------
# Base locus of the net of conics
# ---------------------------------------------------------------------------


def net_conics(rep: SymDetRep) -> list[MultiPoly]:
    """The three conics u^T G(e_k) u spanning the net, as polynomials in u."""
    field = rep.field
    uvars = ("u1", "u2", "u3")
    out = []
    for k, xv in enumerate(VARS_X):
        terms: dict = {}
        for i in range(3):
            for j in range(3):
                cof = rep.entry(i, j).terms.get(
                    tuple(1 if t == k else 0 for t in range(3))
                )
                if cof is None or not cof:
                    continue
                e = [0, 0, 0]
                e[i] += 1
                e[j] += 1
                key = tuple(e)
                terms[key] = terms.get(key, field.zero()) + cof
        out.append(MultiPoly(field, uvars, {e: c for e, c in terms.items() if c}))
    return out


def base_locus(rep: SymDetRep, field=None, derived=None):
    """Common zeros in P of the net of conics; at most 3 points for valid input."""
    if field is None:
        field = rep.field
    work = rep if rep.field == field else _reduce(rep, field)
    if derived is None:
        derived = derived_equations(work)
    if derived.d_cubic.is_zero:
        raise Rejection("the cubic D vanishes identically; the net of conics is degenerate")
    conics = [c for c in net_conics(work) if not c.is_zero]
    if len(conics) < 2:
        raise Rejection("net of conics is degenerate: base locus is not finite")
    g = _relabel_u_to_x(conics[0], field)
    for c in conics[1:]:
        g = _conic_common_factor(g, c, field)
        if g.degree() == 0:
            break
    if g.degree() != 0:
        raise Rejection("net of conics shares a component: base locus is one-dimensional")
    relabeled = [_relabel_u_to_x(c, field) for c in conics]
    sol = plane_solutions(relabeled, field)
    pts = [ProjPoint(field, p.coords, "u") for p in sol.points]
    if len(pts) > 3:
        raise Rejection(
            f"base locus has {len(pts)} points; a valid associated pair allows at most 3"
        )
    if len(pts) == 3 and matrix_rank([list(p.coords) for p in pts], field) != 3:
        raise Rejection("three collinear base points; not a valid associated pair")
    return pts, sol.complete


def _conic_common_factor(a: MultiPoly, b: MultiPoly, field) -> MultiPoly:
    ax = _relabel_u_to_x(a, field)
    bx = _relabel_u_to_x(b, field)
    # common factor must show up in some affine chart or be x3 itself
    g = bivar_gcd(ax.substitute({"x3": 1}), bx.substitute({"x3": 1}))
    if g.degree() == 0:
        x3 = MultiPoly.variable(field, VARS_X, "x3")
        if x3.divides(ax) and x3.divides(bx):
            return x3
    return g


def _relabel_u_to_x(p: MultiPoly, field) -> MultiPoly:
    return MultiPoly(field, VARS_X, dict(p.terms))


def _reduce(rep: SymDetRep, field) -> SymDetRep:
    from .detrep import validate_rep

    entries = [[rep.entry(i, j).map_field(field) for j in range(4)] for i in range(4)]
    return validate_rep(entries, field)


# ---------------------------------------------------------------------------
# Assembly and verification of Sing(X)
# ---------------------------------------------------------------------------


@dataclass
class SingularLocusX:
    cone_vertices: list
    base_points: list  # embedded in P^5 (points of the plane P)
    all_double: bool
    zero_dimensional: bool
    smooth: bool
    bounds_ok: bool
    base_complete: bool
    classification: SingClassification

    @property
    def points(self) -> list:
        return sorted_points(self.cone_vertices + self.base_points)


def singular_locus_X(
    rep: SymDetRep, field=None, components=None, classification=None
) -> SingularLocusX:
    if field is None:
        field = rep.field
    work = rep if rep.field == field else _reduce(rep, field)
    derived = derived_equations(work)
    if classification is None:
        classification = classify_singularities(work, field, components=components, derived=derived)
    vertices = []
    for record in classification.records:
        if record.on_d:
            continue
        if record.rank != 3:
            raise ConsistencyError(
                f"point {record.point} off D must have a rank-3 fiber, found {record.rank}"
            )
        rpt = fiber_analysis(work, record.point)
        vertex = rpt.singular_locus[0]
        if rpt.vertex_in_p:
            raise ConsistencyError(f"cone vertex over {record.point} sits inside P")
        vertices.append(vertex)
    bpts, b_complete = base_locus(work, field, derived=derived)
    embedded_b = [
        ProjPoint(field, (field.zero(),) * 3 + p.coords, "p5") for p in bpts
    ]
    F = derived.fourfold
    grads = {v: F.diff(v) for v in VARS_XU}
    all_double = True
    for pt in vertices + embedded_b:
        if F.evaluate(pt.coords):
            raise ConsistencyError(f"assembled point {pt} does not lie on the fourfold")
        for v, g in grads.items():
            if g.evaluate(pt.coords):
                raise ConsistencyError(f"assembled point {pt} is not singular (dF/d{v} != 0)")
        if not _has_nonzero_quadratic_part(F, pt, field):
            all_double = False
    n_sc = len(classification.s_c)
    n_sing = len(vertices) + len(embedded_b)
    bounds_ok = n_sc <= n_sing <= n_sc + 3 and len(bpts) <= 3
    smooth = (
        n_sing == 0
        and classification.s_c_certified
        and b_complete
    )
    return SingularLocusX(
        cone_vertices=sorted_points(vertices),
        base_points=sorted_points(embedded_b),
        all_double=all_double,
        zero_dimensional=True,
        smooth=smooth,
        bounds_ok=bounds_ok,
        base_complete=b_complete,
        classification=classification,
    )


def _has_nonzero_quadratic_part(F: MultiPoly, pt: ProjPoint, field) -> bool:
    k = next(i for i, c in enumerate(pt.coords) if c)
    evars = tuple(f"e{i}" for i in range(1, 6))
    target = MultiPoly.zero(field, evars)
    mapping = {}
    t = 0
    for i, xv in enumerate(VARS_XU):
        if i == k:
            mapping[xv] = field.one()
        else:
            mapping[xv] = MultiPoly.constant(field, evars, pt.coords[i]) + MultiPoly.variable(
                field, evars, evars[t]
            )
            t += 1
    local = F.substitute(mapping, target=target)
    return any(sum(e) == 2 and c for e, c in local.terms.items())


# ---------------------------------------------------------------------------
# Exhaustive finite-field oracle
# ---------------------------------------------------------------------------


def brute_force_oracle(rep: SymDetRep, q: int) -> list[ProjPoint]:
    """All points of P^5(F_q) where the fourfold and its six partials vanish.

    Scans the (q^6-1)/(q-1) canonical representatives exactly once, stratified
    by x-part; returns canonically sorted points.
    """
    if q**5 > 10**9:
        raise InputError(f"enumeration budget exceeded: {q}^5 > 10^9")
    gf = PrimeField(q)
    work = rep if (isinstance(rep.field, PrimeField) and rep.field.q == q) else _reduce(rep, gf)
    derived = derived_equations(work)
    F = derived.fourfold
    polys = [F] + [F.diff(v) for v in VARS_XU]
    int_polys = [[(c.v, e) for e, c in p.terms.items()] for p in polys]

    found: list[tuple] = []

    # stratum x = 0 (the plane P): F and the u-partials vanish identically
    # there, so only the three x-partials constrain, evaluated on u-points.
    xparts = [ip for ip in int_polys[1:4]]
    for ucoords in _p2_reps(q):
        ok = True
        for terms in xparts:
            acc = 0
            for c, e in terms:
                if e[0] or e[1] or e[2]:
                    continue
                acc += c * pow(ucoords[0], e[3], q) * pow(ucoords[1], e[4], q) * pow(ucoords[2], e[5], q)
            if acc % q:
                ok = False
                break
        if ok:
            found.append((0, 0, 0) + ucoords)

    # strata with x != 0: canonical reps have leading x-coordinate 1, u free
    mons, grids = _u_grid(q)
    for xc in _p2_reps(q):
        uforms = []
        for terms in int_polys:
            coeffs: dict = {}
            for c, e in terms:
                v = c * pow(xc[0], e[0], q) * pow(xc[1], e[1], q) * pow(xc[2], e[2], q) % q
                if v:
                    key = e[3:]
                    coeffs[key] = (coeffs.get(key, 0) + v) % q
            uforms.append({k: v for k, v in coeffs.items() if v})
        idx = np.arange(q**3)
        for uf in uforms:
            if idx.size == 0:
                break
            vals = np.zeros(idx.size, dtype=np.int64)
            for key, v in uf.items():
                vals += v * grids[key][idx]
            idx = idx[(vals % q) == 0]
        for flat in idx:
            u3 = int(flat) % q
            u2 = (int(flat) // q) % q
            u1 = int(flat) // (q * q)
            found.append(tuple(xc) + (u1, u2, u3))

    pts = [ProjPoint(gf, [gf.from_int(c) for c in coords], "p5") for coords in found]
    return sorted_points(pts)


def _p2_reps(q: int) -> list[tuple[int, int, int]]:
    reps = [(1, b, c) for b in range(q) for c in range(q)]
    reps += [(0, 1, c) for c in range(q)]
    reps.append((0, 0, 1))
    return reps


_U_GRID_CACHE: dict = {}


def _u_grid(q: int):
    if q in _U_GRID_CACHE:
        return _U_GRID_CACHE[q]
    rng = np.arange(q, dtype=np.int64)
    u1 = np.repeat(rng, q * q)
    u2 = np.tile(np.repeat(rng, q), q)
    u3 = np.tile(rng, q * q)
    grids = {}
    for e1 in range(3):
        for e2 in range(3):
            for e3 in range(3):
                if e1 + e2 + e3 <= 2:
                    grids[(e1, e2, e3)] = (u1**e1 * u2**e2 * u3**e3) % q
    mons = list(grids)
    _U_GRID_CACHE[q] = (mons, grids)
    return mons, grids


def assembly_points_mod_q(rep: SymDetRep, q: int, components=None) -> list[ProjPoint]:
    """Sing(X)(F_q) assembled from the rank stratification, for oracle comparison."""
    gf = PrimeField(q)
    comps = None
    if components is not None:
        comps = [c.map_field(gf) if c.field != gf else c for c in components]
    locus = singular_locus_X(rep, gf, components=comps)
    return locus.points


def oracle_matches_assembly(rep: SymDetRep, q: int, components=None) -> tuple[bool, list, list]:
    oracle = brute_force_oracle(rep, q)
    assembled = assembly_points_mod_q(rep, q, components=components)
    return (
        {p.coords for p in oracle} == {p.coords for p in assembled},
        oracle,
        assembled,
    )


# ---------------------------------------------------------------------------
# Couples of planes and their mutual intersections
# ---------------------------------------------------------------------------


@dataclass
class CouplesReport:
    pairs: list
    within_ok: bool  # each couple meets itself in a line
    cross_ok: bool  # planes from distinct couples meet in single points
    cross_points: dict  # (i, j, a, b) -> ProjPoint for base-field computable meets
    notes: list = dc_field(default_factory=list)


def couples_and_intersections(
    rep: SymDetRep, field=None, components=None, classification=None
) -> CouplesReport:
    if field is None:
        field = rep.field
    work = rep if rep.field == field else _reduce(rep, field)
    derived = derived_equations(work)
    if classification is None:
        classification = classify_singularities(work, field, components=components, derived=derived)
    pts = sorted_points(classification.s_theta)
    pairs = [split_rank2_fiber(work, p, derived=derived) for p in pts]
    notes = []
    within_ok = True  # verified inside split_rank2_fiber
    cross_ok = True
    cross_points = {}
    for i in range(len(pairs)):
        if pairs[i].degenerate:
            continue
        for j in range(i + 1, len(pairs)):
            if pairs[j].degenerate:
                continue
            ok, extracted = _cross_check(work, pairs[i], pairs[j], field)
            if not ok:
                cross_ok = False
            for key, pt in extracted.items():
                cross_points[(i, j) + key] = pt
    if any(pr.disc is not None for pr in pairs):
        notes.append("some couples split only over a quadratic extension")
    n_degen = sum(1 for pr in pairs if pr.degenerate)
    if n_degen:
        notes.append(
            f"{n_degen} rank-2 fiber(s) have an identically-zero conic block: "
            "the fiber quadric contains the projection plane P itself and is "
            "excluded from cross-intersection checks"
        )
    return CouplesReport(
        pairs=pairs,
        within_ok=within_ok,
        cross_ok=cross_ok,
        cross_points=cross_points,
        notes=notes,
    )


def _cross_check(rep: SymDetRep, pa: PlanePair, pb: PlanePair, field):
    """Planes from distinct couples must meet in exactly one point.

    Both cross planes sit inside spans of P with distinct base points, which
    intersect exactly in P; so the meets are controlled by the restricted
    conics u^T G(p) u, and zero-dimensionality is exactly 'no shared linear
    factor' of those two conics.  When both couples are base-field split the
    points themselves are extracted by linear algebra.
    """
    conic_a = _restricted_conic(rep, pa.point)
    conic_b = _restricted_conic(rep, pb.point)
    g = _conic_common_factor(conic_a, conic_b, field)
    ok = g.degree() == 0
    extracted = {}
    if pa.field == pb.field:
        for ia, plane_a in enumerate(pa.planes):
            for ib, plane_b in enumerate(pb.planes):
                rows = [list(f) for f in plane_a.forms] + [list(f) for f in plane_b.forms]
                ns = nullspace(rows, 6, pa.field)
                if len(ns) != 1:
                    ok = False
                    continue
                extracted[(ia, ib)] = ProjPoint(pa.field, ns[0], "p5")
    return ok, extracted


def _restricted_conic(rep: SymDetRep, p: ProjPoint) -> MultiPoly:
    field = rep.field
    uvars = ("u1", "u2", "u3")
    terms: dict = {}
    for i in range(3):
        for j in range(3):
            v = rep.entry(i, j).evaluate(p.coords)
            if not v:
                continue
            e = [0, 0, 0]
            e[i] += 1
            e[j] += 1
            key = tuple(e)
            terms[key] = terms.get(key, field.zero()) + v
    return MultiPoly(field, uvars, {e: c for e, c in terms.items() if c})
