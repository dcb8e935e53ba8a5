import random
from fractions import Fraction

import pytest

from detfold.algebra import QQ, PrimeField, VARS_X, field_from_name, resultant
from detfold.curves import PlaneCurve, singular_points
from detfold.errors import InputError, Rejection, ToolError
from detfold.examples import EXAMPLE_NAMES, build_example
from detfold.report import analyze


def _smoothness_certificate(fa):
    """Integer whose prime non-divisors q keep the cubic smooth mod q.

    Combines the binary resultant of the two x1-eliminants of the partials,
    leading coefficients guarding degree drops, and a witness value at the
    point the eliminants cannot see.  None when the construction degenerates.
    """
    g = [fa.diff(v) for v in VARS_X]
    if any(p.is_zero or not p.involves("x1") for p in g):
        return None
    cert = 1
    for p in g:
        lead = p.coeffs_in("x1")[p.degree_in("x1")]
        if len(lead.terms) != 1 or (0, 0, 0) not in lead.terms:
            return None
        cert *= int(lead.terms[(0, 0, 0)])
    try:
        r1 = resultant(g[0], g[1], "x1")
        r2 = resultant(g[0], g[2], "x1")
    except ToolError:
        return None
    for r in (r1, r2):
        if r.is_zero or not r.involves("x2"):
            return None
        lead = r.coeffs_in("x2")[r.degree_in("x2")]
        if len(lead.terms) != 1:
            return None
        cert *= int(Fraction(next(iter(lead.terms.values()))))
    final = resultant(r1, r2, "x2")
    if final.is_zero or len(final.terms) != 1:
        return None
    cert *= int(Fraction(next(iter(final.terms.values()))))
    corner = next((int(Fraction(p.evaluate((1, 0, 0)))) for p in g if p.evaluate((1, 0, 0))), None)
    if corner is None:
        return None
    cert *= corner
    return cert if cert else None


@pytest.mark.parametrize("name", EXAMPLE_NAMES)
def test_expected_highlights_reproduce(name):
    ex = build_example(name)
    for field_name, table in ex.expected.items():
        field = field_from_name(field_name)
        report = analyze(ex.rep, field, components=ex.components)
        actual = report.to_json_dict()
        for key, (want, _source) in table.items():
            assert actual[key] == want, f"{name} over {field_name}: {key}"


def test_unknown_example_rejected():
    with pytest.raises(InputError):
        build_example("nope")


class TestProp44Membership:
    def test_identity_accepted(self):
        ex = build_example("prop44")
        assert ex.params["A"] == "1,0,0,0,1,0,0,0,1"
        assert ex.extra["ns2_couples"] == 12 and ex.extra["ns2_classes"] == 25

    def test_zero_matrix_rejected(self):
        with pytest.raises(Rejection, match="vanishes"):
            build_example("prop44", {"A": "0,0,0,0,0,0,0,0,0"})

    def test_singular_cubic_rejected(self):
        # one zero row: the cubic misses one squared form and degenerates
        with pytest.raises(Rejection):
            build_example("prop44", {"A": "0,0,0,0,1,0,0,0,1"})

    def test_membership_stable_mod_prime(self):
        # accepted members stay visibly smooth mod q whenever q does not
        # divide the discriminant certificate extracted from the eliminants
        rng = random.Random(42)
        checked = 0
        tried = 0
        valid_prime_checks = 0
        while checked < 50 and tried < 400:
            tried += 1
            entries = [rng.randrange(-3, 4) for _ in range(9)]
            spec = ",".join(str(c) for c in entries)
            try:
                ex = build_example("prop44", {"A": spec})
            except Rejection:
                continue
            checked += 1
            fa = (-1) * ex.components[3]
            cert = _smoothness_certificate(fa)
            if cert is None:
                continue
            for q in (11, 13, 17, 19):
                if cert % q == 0:
                    continue
                gf = PrimeField(q)
                scan = singular_points(PlaneCurve(fa.map_field(gf)), gf)
                assert scan.points == [], f"A={spec} mod {q}"
                valid_prime_checks += 1
        assert checked == 50
        assert valid_prime_checks > 100

    def test_section_plane_recorded(self):
        ex = build_example("prop44")
        forms = ex.extra["section_plane_forms"]
        assert len(forms) == 3
        assert forms[0] == (-1, 0, 0, 1, 0, 0)


class TestEx42iValidation:
    def test_default_accepted(self):
        ex = build_example("ex42i")
        assert len(ex.components) == 4

    def test_cubic_through_node_rejected(self):
        # x1^3 + x2^3 vanishes at the coordinate point (0:0:1)
        with pytest.raises(Rejection, match="coordinate point"):
            build_example("ex42i", {"f": "x1^3 + x2^3"})

    def test_tangent_cubic_rejected(self):
        # restricted to x1=0 the cubic is (x2 - x3)^2 (x2 + x3): a double root
        # away from the coordinate points, i.e. a tangency
        with pytest.raises(Rejection, match="tangent"):
            build_example("ex42i", {"f": "x1^3 + x2^3 - x2^2*x3 - x2*x3^2 + x3^3"})

    def test_sing_x_count_is_s_c_plus_three(self):
        # holds for any accepted cubic, singular or not
        for f in ("x1^3 + x2^3 + x3^3", "x1^3 + 2*x2^3 + 3*x3^3 + x1*x2*x3"):
            ex = build_example("ex42i", {"f": f})
            rpt = analyze(ex.rep, QQ, components=ex.components, with_couples=False)
            if rpt.s_c_certified:
                assert len(rpt.sing_x) == len(rpt.s_c) + 3


class TestEx43Fermat:
    def test_default_q17(self):
        ex = build_example("ex43_fermat")
        assert ex.params["q"] == "17"
        omega, i = ex.extra["omega"], ex.extra["i"]
        assert (omega * omega) % 17 == i
        assert (i * i) % 17 == 16  # i^2 = -1

    def test_wrong_residue_class_rejected(self):
        with pytest.raises(Rejection, match="mod 8"):
            build_example("ex43_fermat", {"q": "7"})

    def test_alternative_prime(self):
        ex = build_example("ex43_fermat", {"q": "41"})
        assert ex.compatible_primes == (41,)


class TestRmk31:
    def test_matrix_as_printed(self):
        ex = build_example("rmk31")
        # derived determinant recorded; differs from the named cubic by a sign
        from detfold.detrep import derived_equations

        d = derived_equations(ex.rep).d_cubic
        assert str(d) == "-x1^3 - x1^2*x3 + x2^2*x3"
