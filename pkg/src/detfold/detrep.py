"""Symmetric 4x4 determinantal representations and their derived equations.

The matrix has linear forms in the upper-left 3x3 block, quadrics down the
last column/row, and a cubic in the corner.  Its determinant is a plane
sextic; the same data assembles a cubic fourfold containing the plane
P = {x1=x2=x3=0}, with the fiber coordinates (u1,u2,u3,t) embedded into P^5
by (u:t) -> (t*a, t*b, t*c, u1, u2, u3) over p = (a:b:c).
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import MultiPoly, VARS_X, VARS_XU, kernel_rank_det, poly_matrix_det
from .errors import ConsistencyError, Rejection
from .points import ProjPoint

# degree required of entry (i, j); zero entries are allowed anywhere
def _expected_degree(i: int, j: int) -> int:
    if i < 3 and j < 3:
        return 1
    if i == 3 and j == 3:
        return 3
    return 2


@dataclass(frozen=True)
class SymDetRep:
    field: object
    entries: tuple  # 4x4 tuple of tuples of MultiPoly in x1,x2,x3

    def entry(self, i: int, j: int) -> MultiPoly:
        return self.entries[i][j]

    def linear_block(self) -> list[list[MultiPoly]]:
        return [[self.entries[i][j] for j in range(3)] for i in range(3)]

    def quadric_column(self) -> list[MultiPoly]:
        return [self.entries[i][3] for i in range(3)]

    def cubic_corner(self) -> MultiPoly:
        return self.entries[3][3]


def validate_rep(entries, field) -> SymDetRep:
    """Check symmetry, the (1,1,1;2;3) degree profile, and det != 0."""
    if len(entries) != 4 or any(len(r) != 4 for r in entries):
        raise Rejection("matrix must be 4x4")
    for i in range(4):
        for j in range(4):
            e = entries[i][j]
            if e.vars != VARS_X:
                raise Rejection(f"entry ({i+1},{j+1}) must be a polynomial in x1,x2,x3")
            if e.field != field:
                raise Rejection(f"entry ({i+1},{j+1}) lies in the wrong field")
            if not e.is_zero:
                if not e.is_homogeneous():
                    raise Rejection(f"entry ({i+1},{j+1}) is not homogeneous")
                want = _expected_degree(i, j)
                if e.degree() != want:
                    raise Rejection(
                        f"entry ({i+1},{j+1}) has degree {e.degree()}, expected {want}"
                    )
    for i in range(4):
        for j in range(i + 1, 4):
            if entries[i][j] != entries[j][i]:
                raise Rejection(
                    f"matrix is not symmetric: entry ({i+1},{j+1}) differs from ({j+1},{i+1})"
                )
    det = poly_matrix_det([list(row) for row in entries])
    if det.is_zero:
        raise Rejection("determinant vanishes identically; the discriminant sextic is not a curve")
    return SymDetRep(field=field, entries=tuple(tuple(row) for row in entries))


@dataclass(frozen=True)
class DerivedEquations:
    sextic: MultiPoly  # det M, degree 6 in x
    d_cubic: MultiPoly  # det of the linear 3x3 block, degree 3 in x
    fourfold: MultiPoly  # F, degree 3 in x,u


def derived_equations(rep: SymDetRep) -> DerivedEquations:
    sextic = poly_matrix_det([list(row) for row in rep.entries])
    d_cubic = poly_matrix_det(rep.linear_block())
    field = rep.field
    F = MultiPoly.zero(field, VARS_XU)
    u = [MultiPoly.variable(field, VARS_XU, n) for n in ("u1", "u2", "u3")]
    for i in range(3):
        for j in range(3):
            lij = _lift_x(rep.entry(i, j), field)
            if not lij.is_zero:
                F = F + lij * u[i] * u[j]
    for k in range(3):
        qk = _lift_x(rep.entry(k, 3), field)
        if not qk.is_zero:
            F = F + qk.scale(2) * u[k]
    F = F + _lift_x(rep.cubic_corner(), field)
    _check_fourfold_shape(F, rep)
    return DerivedEquations(sextic=sextic, d_cubic=d_cubic, fourfold=F)


def _lift_x(p: MultiPoly, field) -> MultiPoly:
    return MultiPoly(field, VARS_XU, {e + (0, 0, 0): c for e, c in p.terms.items()})


def _check_fourfold_shape(F: MultiPoly, rep: SymDetRep) -> None:
    # F restricted to the plane x=0 must vanish; restricted to u=0 it is f.
    for e in F.terms:
        if e[0] + e[1] + e[2] == 0:
            raise ConsistencyError("fourfold equation does not contain the plane x1=x2=x3=0")
    u_free = {e[:3]: c for e, c in F.terms.items() if e[3] + e[4] + e[5] == 0}
    if u_free != rep.cubic_corner().terms:
        raise ConsistencyError("fourfold equation does not restrict to the corner cubic on u=0")


def fiber_gram(rep: SymDetRep, p: ProjPoint) -> list[list]:
    """Gram matrix of the fiber quadric Q_p in coordinates (u1,u2,u3,t)."""
    if p.space != "x":
        raise Rejection("fiber points live in the plane of the discriminant curve")
    vals = p.coords
    gram = [[rep.entry(i, j).evaluate(vals) for j in range(4)] for i in range(4)]
    rank, _det, _ = kernel_rank_det(gram, rep.field)
    if rank <= 1:
        raise Rejection(
            f"fiber Gram matrix at {p} has rank {rank} <= 1; "
            "not a valid determinantal representation"
        )
    return gram


def gram_rank_kernel(rep: SymDetRep, p: ProjPoint):
    gram = fiber_gram(rep, p)
    rank, det, basis = kernel_rank_det(gram, rep.field)
    return gram, rank, det, basis


def embed_fiber_vector(p: ProjPoint, vec, field) -> ProjPoint:
    """Send (u1,u2,u3,t) over p=(a:b:c) to (t*a : t*b : t*c : u1 : u2 : u3)."""
    u1, u2, u3, t = (field.coerce(v) for v in vec)
    a, b, c = p.coords
    return ProjPoint(field, (t * a, t * b, t * c, u1, u2, u3), "p5")


def p3_forms(p: ProjPoint, field) -> list[list]:
    """Two linear forms on P^5 cutting out the span of P and p."""
    a, b, c = p.coords
    zero, one = field.zero(), field.one()
    if a:
        return [
            [b, -a, zero, zero, zero, zero],
            [c, zero, -a, zero, zero, zero],
        ]
    if b:
        return [
            [one, zero, zero, zero, zero, zero],
            [zero, c, -b, zero, zero, zero],
        ]
    return [
        [one, zero, zero, zero, zero, zero],
        [zero, one, zero, zero, zero, zero],
    ]
