"""Singularity analysis of plane curves: locating singular points over the
rationals (resultant elimination) or a prime field (exhaustive scan),
certifying nodes, and classifying the singular points of a discriminant
sextic by fiber rank and membership in the auxiliary cubic D.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .algebra import MultiPoly, PrimeField, VARS_X, resultant, unipoly
from .detrep import SymDetRep, derived_equations, gram_rank_kernel
from .errors import ConsistencyError, InputError, Rejection
from .points import ProjPoint, sorted_points

_LOCAL_VARS = ("e1", "e2")


@dataclass(frozen=True)
class PlaneCurve:
    poly: MultiPoly
    components: tuple | None = None  # optional factorization, multiplicity 1 each

    def __post_init__(self):
        if self.components is not None:
            prod = MultiPoly.constant(self.poly.field, self.poly.vars, 1)
            for c in self.components:
                prod = prod * c
            if not _proportional(prod, self.poly):
                raise Rejection("component product does not equal the curve equation")
            for i, a in enumerate(self.components):
                for b in self.components[i + 1 :]:
                    if _proportional(a, b):
                        raise Rejection("repeated component; curve is not reduced")


def _proportional(a: MultiPoly, b: MultiPoly) -> bool:
    if a.is_zero or b.is_zero:
        return a.is_zero and b.is_zero
    ea, ca = a.lead()
    eb, cb = b.lead()
    if ea != eb:
        return False
    return a.scale(cb / ca) == b


# ---------------------------------------------------------------------------
# Solving small homogeneous systems on the projective plane
# ---------------------------------------------------------------------------


@dataclass
class PlaneSolutions:
    points: list
    complete: bool
    unresolved: int  # total degree of eliminant factors without rational roots


def plane_solutions(polys: list[MultiPoly], field) -> PlaneSolutions:
    """Common zeros in P^2 of homogeneous polynomials over field.

    Over a prime field the scan is exhaustive and always complete.  Over the
    rationals, resultant elimination finds every rational solution; genuinely
    irrational solutions are tallied in `unresolved` and flip `complete`.
    A positive-dimensional solution set raises Rejection.
    """
    polys = [p for p in polys if not p.is_zero]
    if not polys:
        raise Rejection("empty system: solution set is the whole plane")
    for p in polys:
        if p.degree() == 0:
            return PlaneSolutions([], True, 0)
    if isinstance(field, PrimeField):
        return _plane_solutions_fq(polys, field)
    return _plane_solutions_qq(polys, field)


def _plane_solutions_fq(polys, field) -> PlaneSolutions:
    pts = []
    q = field.q
    one = field.one()
    reps = [(one, field.from_int(b), field.from_int(c)) for b in range(q) for c in range(q)]
    reps += [(field.zero(), one, field.from_int(c)) for c in range(q)]
    reps.append((field.zero(), field.zero(), one))
    for coords in reps:
        if all(not p.evaluate(coords) for p in polys):
            pts.append(ProjPoint(field, coords, "x"))
    return PlaneSolutions(sorted_points(pts), True, 0)


def _to_unicoeffs(p: MultiPoly, var: str) -> list:
    idx = p.vars.index(var)
    out = [p.field.zero()] * (p.degree_in(var) + 1 if not p.is_zero else 0)
    for e, c in p.terms.items():
        if any(k > 0 for i, k in enumerate(e) if i != idx):
            raise InputError(f"polynomial not univariate in {var}")
        out[e[idx]] = c
    return unipoly.trim(out)


def _plane_solutions_qq(polys, field) -> PlaneSolutions:
    pts: set = set()
    complete = True
    unresolved = 0

    # chart x3 = 1
    aff = [p.substitute({"x3": 1}) for p in polys]
    aff = [p for p in aff if not p.is_zero]
    if not aff:
        raise Rejection("system vanishes identically on a chart (positive-dimensional)")
    if not any(p.degree() == 0 for p in aff):
        got = _affine_chart_solutions(aff, polys, field)
        pts.update(got.points)
        complete = complete and got.complete
        unresolved += got.unresolved

    # line x3 = 0
    line = [p.substitute({"x3": 0}) for p in polys]
    line = [p for p in line if not p.is_zero]
    if not line:
        raise Rejection("system vanishes identically on the line x3=0 (positive-dimensional)")
    if not any(p.degree() == 0 for p in line):
        one, zero = field.one(), field.zero()
        if all(not p.evaluate((one, zero, zero)) for p in polys):
            pts.add(ProjPoint(field, (one, zero, zero), "x"))
        uni = [_to_unicoeffs(p.substitute({"x2": 1}), "x1") for p in line]
        uni = [u for u in uni if u]
        g = uni[0]
        for u in uni[1:]:
            g = unipoly.gcd_poly(g, u, field)
        if unipoly.deg(g) > 0:
            roots, cof, comp = unipoly.rational_roots([Fraction(c) for c in g])
            unresolved += cof
            complete = complete and comp and cof == 0
            for r in roots:
                cand = (field.coerce(r), one, zero)
                if all(not p.evaluate(cand) for p in polys):
                    pts.add(ProjPoint(field, cand, "x"))
    return PlaneSolutions(sorted_points(pts), complete, unresolved)


def _affine_chart_solutions(aff, originals, field) -> PlaneSolutions:
    """Rational solutions of a bivariate system in the chart x3 = 1."""
    pts = []
    complete = True
    unresolved = 0
    with_x2 = [p for p in aff if p.involves("x2")]
    without = [p for p in aff if not p.involves("x2")]

    elim: list[list] = []
    for p in without:
        elim.append(_to_unicoeffs(p, "x1"))
    if len(with_x2) >= 2:
        for i in range(len(with_x2)):
            if len(elim) >= 3:
                break
            for j in range(i + 1, len(with_x2)):
                r = resultant(with_x2[i], with_x2[j], "x2")
                if not r.is_zero:
                    elim.append(_to_unicoeffs(r, "x1"))
                    if len(elim) >= 3:
                        break
    if not elim:
        raise Rejection(
            "elimination degenerated: every eliminant vanished "
            "(curve not reduced or solution set positive-dimensional)"
        )
    g = elim[0]
    for u in elim[1:]:
        g = unipoly.gcd_poly(g, u, field)
    if unipoly.deg(g) < 0 or (unipoly.deg(g) == 0):
        if unipoly.deg(g) < 0:
            raise Rejection("elimination degenerated: identically zero eliminant")
        return PlaneSolutions([], True, 0)

    roots, cof, comp = unipoly.rational_roots([Fraction(c) for c in g])
    unresolved += cof
    complete = comp and cof == 0
    one = field.one()
    for a in sorted(roots):
        av = field.coerce(a)
        if not with_x2:
            raise Rejection("solution set contains a vertical line (positive-dimensional)")
        specials = []
        for p in with_x2:
            u = _to_unicoeffs(p.substitute({"x1": av}), "x2")
            if u:
                specials.append(u)
        if not specials:
            raise Rejection("solution set contains a vertical line (positive-dimensional)")
        h = specials[0]
        for u in specials[1:]:
            h = unipoly.gcd_poly(h, u, field)
        if unipoly.deg(h) < 0:
            raise Rejection("solution set contains a vertical line (positive-dimensional)")
        if unipoly.deg(h) == 0:
            continue
        broots, bcof, bcomp = unipoly.rational_roots([Fraction(c) for c in h])
        unresolved += bcof
        complete = complete and bcomp and bcof == 0
        for b in sorted(broots):
            cand = (av, field.coerce(b), one)
            if all(not p.evaluate(cand) for p in originals):
                pts.append(ProjPoint(field, cand, "x"))
    return PlaneSolutions(pts, complete, unresolved)


# ---------------------------------------------------------------------------
# Reducedness (squarefree) testing
# ---------------------------------------------------------------------------


def _bivar_content_pp(p: MultiPoly, main: str, aux: str):
    """Content (univariate in aux) and primitive part of p seen in (main)."""
    coeffs = p.coeffs_in(main)
    uni = [_to_unicoeffs(c, aux) for c in coeffs]
    field = p.field
    cont: list = []
    for u in uni:
        if u:
            cont = unipoly.gcd_poly(cont, u, field) if cont else unipoly.monic(list(u))
    return cont, uni


def _uni_to_poly(u: list, var: str, field) -> MultiPoly:
    vars = VARS_X
    idx = vars.index(var)
    terms = {}
    for k, c in enumerate(u):
        if c:
            e = [0, 0, 0]
            e[idx] = k
            terms[tuple(e)] = c
    return MultiPoly(field, vars, terms)


def bivar_gcd(f: MultiPoly, g: MultiPoly, main: str = "x1", aux: str = "x2") -> MultiPoly:
    """GCD of two bivariate polynomials (x3-free) via a primitive PRS."""
    field = f.field
    if f.is_zero:
        return g
    if g.is_zero:
        return f
    if not f.involves(main) and not g.involves(main):
        a = unipoly.gcd_poly(_to_unicoeffs(f, aux), _to_unicoeffs(g, aux), field)
        return _uni_to_poly(a, aux, field)
    if not f.involves(main) or not g.involves(main):
        free, other = (f, g) if not f.involves(main) else (g, f)
        cont, _ = _bivar_content_pp(other, main, aux)
        a = unipoly.gcd_poly(_to_unicoeffs(free, aux), cont, field)
        return _uni_to_poly(a, aux, field)

    cf, _ = _bivar_content_pp(f, main, aux)
    cg, _ = _bivar_content_pp(g, main, aux)
    ccont = unipoly.gcd_poly(cf, cg, field)

    a, b = f, g
    if a.degree_in(main) < b.degree_in(main):
        a, b = b, a
    a = _primitive_in(a, main, aux)
    b = _primitive_in(b, main, aux)
    while not b.is_zero and b.involves(main):
        r = _pseudo_rem(a, b, main)
        a, b = b, _primitive_in(r, main, aux) if not r.is_zero else r
    if b.is_zero:
        gc = a
    elif not b.involves(main):
        # a nonzero remainder free of main kills any main-dependent common part
        gc = MultiPoly.constant(field, f.vars, 1)
    else:
        gc = b
    return gc * _uni_to_poly(ccont if ccont else [field.one()], aux, field)


def _primitive_in(p: MultiPoly, main: str, aux: str) -> MultiPoly:
    cont, _ = _bivar_content_pp(p, main, aux)
    if unipoly.deg(cont) <= 0:
        return p
    q = p.try_divide(_uni_to_poly(cont, aux, p.field))
    if q is None:
        raise ConsistencyError("content division failed")
    return q


def _pseudo_rem(f: MultiPoly, g: MultiPoly, main: str) -> MultiPoly:
    df, dg = f.degree_in(main), g.degree_in(main)
    lead_g = g.coeffs_in(main)[dg]
    r = f
    while not r.is_zero and r.degree_in(main) >= dg:
        dr = r.degree_in(main)
        lead_r = r.coeffs_in(main)[dr]
        shift = MultiPoly.variable(r.field, r.vars, main) ** (dr - dg)
        r = r * lead_g - g * shift * lead_r
    return r


def is_reduced_curve(h: MultiPoly) -> bool:
    """Squarefree test for a plane curve equation (any field, char > degree)."""
    if h.is_zero:
        return False
    ex3 = min(e[2] for e in h.terms)
    if ex3 >= 2:
        return False
    chart = h.substitute({"x3": 1})
    if chart.degree() == 0:
        return True  # h = c * x3^(0 or 1)
    g1 = bivar_gcd(chart, chart.diff("x1"))
    g2 = bivar_gcd(g1, chart.diff("x2"))
    return g2.degree() == 0


# ---------------------------------------------------------------------------
# Singular points and node certification
# ---------------------------------------------------------------------------


def singular_points(curve: PlaneCurve, field) -> PlaneSolutions:
    """Singular points of a reduced plane curve over the given field."""
    h = curve.poly if curve.poly.field == field else curve.poly.map_field(field)
    if not is_reduced_curve(h):
        raise Rejection("curve is not reduced (square factor detected)")
    if curve.components is not None and not isinstance(field, PrimeField):
        return _singular_points_factored(curve, field)
    grads = [h.diff(v) for v in VARS_X]
    sol = plane_solutions([h] + grads, field)
    for p in sol.points:
        if h.evaluate(p.coords):
            raise ConsistencyError(f"claimed singular point {p} is not on the curve")
    return sol


def _singular_points_factored(curve: PlaneCurve, field) -> PlaneSolutions:
    comps = [c if c.field == field else c.map_field(field) for c in curve.components]
    pts: set = set()
    complete = True
    unresolved = 0
    for i in range(len(comps)):
        for j in range(i + 1, len(comps)):
            sol = plane_solutions([comps[i], comps[j]], field)
            pts.update(sol.points)
            complete = complete and sol.complete
            unresolved += sol.unresolved
        ci = comps[i]
        grads = [ci.diff(v) for v in VARS_X]
        if all(g.is_zero or g.degree() == 0 for g in grads):
            if any(not g.is_zero for g in grads):
                continue  # smooth linear form, no internal singular points
        sol = plane_solutions([ci] + [g for g in grads], field)
        pts.update(sol.points)
        complete = complete and sol.complete
        unresolved += sol.unresolved
    return PlaneSolutions(sorted_points(pts), complete, unresolved)


def local_quadratic_form(h: MultiPoly, p: ProjPoint):
    """(value, gradient-part, (A,B,C)) of h at p in the chart of its leading 1."""
    field = h.field
    k = next(i for i, c in enumerate(p.coords) if c)
    others = [i for i in range(3) if i != k]
    e1 = MultiPoly.variable(field, _LOCAL_VARS, "e1")
    e2 = MultiPoly.variable(field, _LOCAL_VARS, "e2")
    target = MultiPoly.zero(field, _LOCAL_VARS)
    mapping = {VARS_X[k]: field.one()}
    mapping[VARS_X[others[0]]] = MultiPoly.constant(field, _LOCAL_VARS, p.coords[others[0]]) + e1
    mapping[VARS_X[others[1]]] = MultiPoly.constant(field, _LOCAL_VARS, p.coords[others[1]]) + e2
    local = h.substitute(mapping, target=target)
    val = local.terms.get((0, 0), field.zero())
    lin = [local.terms.get((1, 0), field.zero()), local.terms.get((0, 1), field.zero())]
    quad = (
        local.terms.get((2, 0), field.zero()),
        local.terms.get((1, 1), field.zero()),
        local.terms.get((0, 2), field.zero()),
    )
    return val, lin, quad


def is_node(curve: PlaneCurve | MultiPoly, p: ProjPoint) -> bool:
    """True iff the curve has an ordinary double point (node) at p."""
    h = curve.poly if isinstance(curve, PlaneCurve) else curve
    val, lin, quad = local_quadratic_form(h, p)
    if val or any(lin):
        raise Rejection(f"point {p} is not a singular point of the curve")
    a, b, c = quad
    disc = b * b - a * c * h.field.from_int(4)
    return bool(disc)


# ---------------------------------------------------------------------------
# Classification of discriminant-sextic singularities
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SingRecord:
    point: ProjPoint
    rank: int
    on_d: bool
    node_certified: bool


@dataclass
class SingClassification:
    field: object
    records: list
    complete: bool
    unresolved: int
    s_c_certified: bool  # S_C determination is exact even if points are missing
    notes: list = dc_field(default_factory=list)

    @property
    def sing_c(self):
        return [r.point for r in self.records]

    @property
    def s_theta(self):
        return [r.point for r in self.records if r.rank == 2]

    @property
    def s_theta_tilde(self):
        return [r.point for r in self.records if r.on_d]

    @property
    def s_c(self):
        return [r.point for r in self.records if not r.on_d]


def classify_singularities(
    rep: SymDetRep, field, components=None, derived=None
) -> SingClassification:
    """Locate Sing(C), certify nodality, and split into the rank/D strata."""
    if derived is None:
        derived = derived_equations(rep)
    work_rep = rep
    sextic = derived.sextic
    d_cubic = derived.d_cubic
    if rep.field != field:
        work_rep = _reduce_rep(rep, field)
        sextic = sextic.map_field(field)
        d_cubic = d_cubic.map_field(field)
    if components is not None:
        components = [c if c.field == field else c.map_field(field) for c in components]
    curve = PlaneCurve(sextic, tuple(components) if components is not None else None)
    scan = singular_points(curve, field)

    records = []
    for p in scan.points:
        if not is_node(sextic, p):
            raise Rejection(f"singular point {p} is not a node; the sextic is not nodal")
        _gram, rank, _det, _basis = gram_rank_kernel(work_rep, p)
        if rank == 4:
            raise ConsistencyError(f"full-rank fiber at claimed singular point {p}")
        on_d = not d_cubic.evaluate(p.coords)
        if rank == 2 and not on_d:
            raise ConsistencyError(
                f"rank-2 fiber at {p} must lie on the cubic D (minors all vanish)"
            )
        records.append(SingRecord(point=p, rank=rank, on_d=on_d, node_certified=True))

    s_c_certified = scan.complete
    notes = []
    if not scan.complete and components is not None:
        s_c_certified = _certify_s_c(components, d_cubic, field)
        if s_c_certified:
            notes.append("unlisted singular points certified to lie on D by divisibility")
    if not scan.complete:
        notes.append(f"singular-point list incomplete over {field.name}: "
                     f"{scan.unresolved} solutions live in extensions")
    return SingClassification(
        field=field,
        records=records,
        complete=scan.complete,
        unresolved=scan.unresolved,
        s_c_certified=s_c_certified,
        notes=notes,
    )


def _certify_s_c(components, d_cubic, field) -> bool:
    """True when every potentially-missing singular point provably lies on D.

    Sufficient condition per intersection pair / internal locus: one involved
    component divides the cubic D, so its whole zero set is on D.
    """
    comps = [c if c.field == field else c.map_field(field) for c in components]
    dc = d_cubic
    divides = [dc.is_zero or dc.try_divide(c) is not None for c in comps]
    for i in range(len(comps)):
        for j in range(i + 1, len(comps)):
            sol = plane_solutions([comps[i], comps[j]], field)
            if (not sol.complete or sol.unresolved) and not (divides[i] or divides[j]):
                return False
        grads = [comps[i].diff(v) for v in VARS_X]
        if all(g.is_zero or g.degree() == 0 for g in grads) and any(not g.is_zero for g in grads):
            continue
        sol = plane_solutions([comps[i]] + grads, field)
        if (not sol.complete or sol.unresolved) and not divides[i]:
            return False
    return True


def _reduce_rep(rep: SymDetRep, field) -> SymDetRep:
    from .detrep import validate_rep

    entries = [[rep.entry(i, j).map_field(field) for j in range(4)] for i in range(4)]
    return validate_rep(entries, field)


def component_genera(config: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """(degree, geometric genus) per component from (degree, node count)."""
    out = []
    for d, nodes in config:
        g = (d - 1) * (d - 2) // 2 - nodes
        if g < 0:
            raise Rejection(f"degree-{d} component cannot carry {nodes} nodes")
        out.append((d, g))
    return out


def all_components_rational(config: list[tuple[int, int]]) -> bool:
    return all(g == 0 for _, g in component_genera(config))
