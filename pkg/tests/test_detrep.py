import random

import pytest

from detfold.algebra import QQ, MultiPoly, PrimeField, VARS_X, parse_poly
from detfold.detrep import (
    derived_equations,
    embed_fiber_vector,
    fiber_gram,
    gram_rank_kernel,
    validate_rep,
)
from detfold.errors import Rejection
from detfold.examples import build_example
from detfold.points import ProjPoint


def _p(s, f=QQ):
    return parse_poly(s, VARS_X, f)


def _z(f=QQ):
    return MultiPoly.zero(f, VARS_X)


def _diag(*entries):
    z = _z()
    m = [[z] * 4 for _ in range(4)]
    for i, e in enumerate(entries):
        m[i] = list(m[i])
        m[i][i] = e
    return [list(r) for r in m]


class TestValidate:
    def test_diagonal_line_product_valid(self):
        rep = build_example("ex42ii").rep
        assert rep.entry(3, 3).degree() == 3

    def test_asymmetry_rejected(self):
        z = _z()
        m = [[z, _p("x1"), z, z], [_p("x2"), z, z, z], [z, z, _p("x3"), z], [z, z, z, _p("x1^3")]]
        with pytest.raises(Rejection, match="symmetric"):
            validate_rep(m, QQ)

    def test_zero_determinant_rejected(self):
        with pytest.raises(Rejection, match="determinant"):
            validate_rep(_diag(_p("x1"), _p("x2"), _p("x3"), _z()), QQ)

    def test_degree_profile_rejected(self):
        bad = _diag(_p("x1^2"), _p("x2"), _p("x3"), _p("x1^3"))
        with pytest.raises(Rejection, match="degree"):
            validate_rep(bad, QQ)
        bad2 = _diag(_p("x1"), _p("x2"), _p("x3"), _p("x1"))
        with pytest.raises(Rejection, match="degree"):
            validate_rep(bad2, QQ)


class TestDerived:
    def test_ex42ii_equations(self):
        ex = build_example("ex42ii")
        der = derived_equations(ex.rep)
        l4, l5, l6 = (_p(t) for t in ("x1 + x2 + x3", "x1 + 2*x2 + 3*x3", "x1 + 3*x2 + 2*x3"))
        assert der.sextic == _p("x1") * _p("x2") * _p("x3") * l4 * l5 * l6
        assert der.d_cubic == _p("x1*x2*x3")
        from detfold.algebra import VARS_XU

        F = parse_poly("x1*u1^2 + x2*u2^2 + x3*u3^2", VARS_XU, QQ)
        corner = l4 * l5 * l6
        lifted = MultiPoly(QQ, VARS_XU, {e + (0, 0, 0): c for e, c in corner.terms.items()})
        assert der.fourfold == F + lifted

    def test_ex42i_equations(self):
        ex = build_example("ex42i")
        der = derived_equations(ex.rep)
        f = _p("x1^3 + x2^3 + x3^3")
        assert der.sextic == (_p("x1*x2*x3") * f).scale(2)
        assert der.d_cubic == _p("2*x1*x2*x3")
        from detfold.algebra import VARS_XU

        expected = parse_poly(
            "2*x1*u1*u2 + 2*x2*u1*u3 + 2*x3*u2*u3 + x1^3 + x2^3 + x3^3", VARS_XU, QQ
        )
        assert der.fourfold == expected

    def test_prop44_equations(self):
        ex = build_example("prop44")
        der = derived_equations(ex.rep)
        f = _p("x1^3 + x2^3 + x3^3")
        assert der.sextic == -(_p("x1*x2*x3") * f)
        assert der.d_cubic == _p("x1*x2*x3")
        from detfold.algebra import VARS_XU

        expected = parse_poly(
            "x1*u1^2 + x2*u2^2 + x3*u3^2 - x1^3 - x2^3 - x3^3", VARS_XU, QQ
        )
        assert der.fourfold == expected

    def test_plane_and_corner_restrictions(self):
        for name in ("ex42i", "ex42ii", "prop44", "rmk31"):
            ex = build_example(name)
            der = derived_equations(ex.rep)
            for e in der.fourfold.terms:
                assert e[0] + e[1] + e[2] > 0  # vanishes on the plane x=0
            corner = {e[:3]: c for e, c in der.fourfold.terms.items() if sum(e[3:]) == 0}
            assert corner == ex.rep.cubic_corner().terms


class TestFiberGram:
    def test_prop44_rank2_point(self):
        ex = build_example("prop44")
        g = fiber_gram(ex.rep, ProjPoint(QQ, (0, 0, 1), "x"))
        assert g == [[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, -1]]

    def test_prop44_off_curve(self):
        ex = build_example("prop44")
        _, rank, det, _ = gram_rank_kernel(ex.rep, ProjPoint(QQ, (1, 1, 1), "x"))
        assert rank == 4 and det == -3

    def test_ex42ii_rank3_point(self):
        ex = build_example("ex42ii")
        g, rank, _, basis = gram_rank_kernel(ex.rep, ProjPoint(QQ, (1, -2, 1), "x"))
        assert rank == 3
        assert basis == [[0, 0, 0, 1]]

    def test_det_commutes_with_evaluation(self):
        rng = random.Random(2)
        gf = PrimeField(11)
        for name in ("ex42ii", "prop44"):
            ex = build_example(name)
            der = derived_equations(ex.rep)
            sext = der.sextic.map_field(gf)
            for _ in range(100):
                coords = tuple(gf.from_int(rng.randrange(11)) for _ in range(3))
                if not any(coords):
                    continue
                p = ProjPoint(gf, coords, "x")
                from detfold.curves import _reduce_rep

                _, _, det, _ = gram_rank_kernel(_reduce_rep(ex.rep, gf), p)
                assert det == sext.evaluate(p.coords)

    def test_conic_block_matches_d_cubic(self):
        ex = build_example("ex42ii")
        der = derived_equations(ex.rep)
        rng = random.Random(8)
        for _ in range(20):
            coords = tuple(rng.randrange(-5, 6) for _ in range(3))
            if not any(coords):
                continue
            p = ProjPoint(QQ, coords, "x")
            g = fiber_gram(ex.rep, p)
            block = [row[:3] for row in g[:3]]
            det3 = (
                block[0][0] * (block[1][1] * block[2][2] - block[1][2] * block[2][1])
                - block[0][1] * (block[1][0] * block[2][2] - block[1][2] * block[2][0])
                + block[0][2] * (block[1][0] * block[2][1] - block[1][1] * block[2][0])
            )
            assert det3 == der.d_cubic.evaluate(p.coords)

    def test_embed_fiber_vector(self):
        p = ProjPoint(QQ, (1, -2, 1), "x")
        v = embed_fiber_vector(p, (0, 0, 0, 1), QQ)
        assert v == ProjPoint(QQ, (1, -2, 1, 0, 0, 0), "p5")
