"""Explicit verifier: intersection location, candidate enumeration, counting."""

import pytest
import sympy

from hirzebruch.errors import (

    FixtureError,
    IrrationalIntersectionPoint,
    SharedComponentError,
    TangentialContact,
    TriplePoint,
    UnsupportedCandidateError,
)
from hirzebruch.lattice import DivisorClass, SurfaceModel
from hirzebruch.verifier import (
    BinaryForm,
    ExplicitConfig,
    compute_N,
    enumerate_candidates,
    exceptional_section,
    is_hyper_bitangent,
    make_curve,
    negative_section,
    verify_bound,
    x,
    y,
)

from fixtures import (
    f1_two_lines_conic_config,
    f2_three_sections_config,
    product_surface_33_config,
    product_surface_bitangent_diagonal_config,
    product_surface_three_diagonal_config,
)

t = sympy.Symbol("t")
S0 = SurfaceModel(0)
S1 = SurfaceModel(1)
S2 = SurfaceModel(2)

# -- curve validation -------------------------------------------------------------

def test_make_curve_checks_bidegree_on_product_surface():
    with pytest.raises(FixtureError):
        make_curve(DivisorClass(S0, 1, 1), x - 1)  # y-degree 0, not 1
    make_curve(DivisorClass(S0, 1, 0), x - 1)

def test_make_curve_checks_plane_degree_and_multiplicity_on_f1():
    bp = (0, 0)
    with pytest.raises(FixtureError):
        make_curve(DivisorClass(S1, 1, 1), x + y - 1, bp)  # degree 1, not 2
    with pytest.raises(FixtureError):
        make_curve(DivisorClass(S1, 1, 1), y**2 - x**2, bp)  # multiplicity 2 at the center, not 1
    make_curve(DivisorClass(S1, 1, 1), y - x**2 - x, bp)

def test_make_curve_checks_degree_profile_on_f2():
    with pytest.raises(FixtureError):
        make_curve(DivisorClass(S2, 1, 0), 1 + x**3 * y)  # x-degree 3 exceeds v + 2
    with pytest.raises(FixtureError):
        # every coefficient strictly below its profile bound: a fiber hides at infinity
        make_curve(DivisorClass(S2, 1, 1), 1 + x**2 * y)
    make_curve(DivisorClass(S2, 1, 0), 1 + x * y)  # the constant term attains its bound
    make_curve(DivisorClass(S2, 1, 0), 1 + (x**2 - 1) * y)

def test_make_curve_rejects_unsupported_index():
    with pytest.raises(FixtureError):
        make_curve(DivisorClass(SurfaceModel(3), 1, 0), 1 + x**3 * y)

def test_make_curve_rejects_repeated_factors():
    with pytest.raises(FixtureError):
        make_curve(DivisorClass(S0, 2, 2), sympy.expand((x * y - 1) ** 2))

# -- configuration validation --------------------------------------------------------

def test_config_rejects_shared_component():
    a = make_curve(DivisorClass(S0, 1, 1), x * y - 1)
    b = make_curve(DivisorClass(S0, 1, 1), x * y - 1)
    c = make_curve(DivisorClass(S0, 1, 1), y - x)
    with pytest.raises(SharedComponentError):
        ExplicitConfig([a, b, c])

def test_config_rejects_tangential_contact():
    a = make_curve(DivisorClass(S0, 1, 1), x * y - 1)
    b = make_curve(DivisorClass(S0, 1, 1), x + y - 2)  # tangent to a at (1, 1)
    c = make_curve(DivisorClass(S0, 1, 1), y - x + 5)
    with pytest.raises(TangentialContact):
        ExplicitConfig([a, b, c])

def test_config_rejects_triple_point():
    a = make_curve(DivisorClass(S0, 1, 1), x * y - 1)
    b = make_curve(DivisorClass(S0, 1, 1), y - x)
    c = make_curve(DivisorClass(S0, 1, 1), y - 2 * x + 1)  # passes through (1, 1) too
    with pytest.raises(TriplePoint):
        ExplicitConfig([a, b, c])

def test_config_rejects_unlocatable_intersections():
    a = make_curve(DivisorClass(S0, 1, 1), x * y - 1)
    b = make_curve(DivisorClass(S0, 1, 1), y - x - 1)  # meets a at irrational points
    c = make_curve(DivisorClass(S0, 1, 1), y - x + 5)
    with pytest.raises(IrrationalIntersectionPoint):
        ExplicitConfig([a, b, c])

def test_config_rejects_shared_direction_at_blowup_point():
    bp = (0, 0)
    a = make_curve(DivisorClass(S1, 1, 1), y - x**2 - x, bp)
    b = make_curve(DivisorClass(S1, 1, 1), y - 2 * x**2 - x, bp)  # same tangent y = x
    c = make_curve(DivisorClass(S1, 1, 0), x + y - 3, bp)
    with pytest.raises(TangentialContact):
        ExplicitConfig([a, b, c])

# -- intersection set N ----------------------------------------------------------------

def test_compute_n_matches_pairing_on_all_fixtures():
    for build in (
        product_surface_three_diagonal_config,
        f1_two_lines_conic_config,
        f2_three_sections_config,
    ):
        cfg = build()
        assert len(compute_N(cfg)) == cfg.numeric.n_count()

def test_compute_n_points_of_the_diagonal_fixture():
    cfg = product_surface_three_diagonal_config()
    points = {(lp.pair, lp.point) for lp in compute_N(cfg)}
    from fractions import Fraction as F

    assert ((1, 2), (F(1), F(1))) in points
    assert ((1, 2), (F(-1), F(-1))) in points
    assert ((1, 3), (F(2), F(1, 2))) in points
    assert ((1, 3), (F(15, 77), F(77, 15))) in points
    assert ((2, 3), (F(3), F(3))) in points
    assert ((2, 3), (F(50, 19), F(50, 19))) in points

# -- hyper-bitangency counting ------------------------------------------------------------

def test_ruling_through_crossing_of_small_components_is_hyper_bitangent():
    cfg = product_surface_three_diagonal_config()
    ruling = make_curve(DivisorClass(S0, 1, 0), x - 1)
    result = is_hyper_bitangent(ruling, cfg)
    assert result.count == 2
    assert result.is_hyper_bitangent

def test_ruling_through_crossing_of_large_components_is_excluded():
    cfg = product_surface_33_config()
    # the hyperbola factors of B3 cross the vertical x = 1 of B1 at rational points
    ruling = make_curve(DivisorClass(S0, 0, 1), y - sympy.Rational(89, 9))
    result = is_hyper_bitangent(ruling, cfg)
    assert result.count >= 3
    assert not result.is_hyper_bitangent

def test_candidate_equal_to_component_is_rejected():
    cfg = product_surface_three_diagonal_config()
    with pytest.raises(SharedComponentError):
        is_hyper_bitangent(make_curve(DivisorClass(S0, 1, 1), x * y - 1), cfg)

def test_reducible_candidate_is_rejected():
    cfg = product_surface_three_diagonal_config()
    with pytest.raises(UnsupportedCandidateError):
        is_hyper_bitangent(make_curve(DivisorClass(S0, 1, 1), x * y), cfg)

def test_unsupported_candidate_class_is_rejected():
    cfg = product_surface_three_diagonal_config()
    squarish = make_curve(DivisorClass(S0, 2, 2), sympy.expand((x * y - 2) * (y - x + 1)))
    with pytest.raises(UnsupportedCandidateError):
        is_hyper_bitangent(squarish, cfg)

def test_exceptional_section_count_on_f1_fixture():
    cfg = f1_two_lines_conic_config()
    result = is_hyper_bitangent(exceptional_section(S1, (0, 0)), cfg)
    # only the conic passes through the blow-up point, with a single direction
    assert result.count == 1
    assert result.is_hyper_bitangent

def test_conic_candidate_on_f1_fixture():
    cfg = f1_two_lines_conic_config()
    conic = make_curve(DivisorClass(S1, 1, 1), y - x**2 - 3 * x, (0, 0))
    result = is_hyper_bitangent(conic, cfg)
    # two conjugate points on each line, one point at infinity shared with B3
    assert result.count == 5
    assert not result.is_hyper_bitangent

def test_exceptional_section_counts_distinct_directions():
    # two curves through the center with different tangents meet the
    # exceptional line at two different points; a third with a repeated
    # direction adds nothing new
    from sympy import Rational

    from hirzebruch.verifier import _pullback_e1

    bp = (Rational(0), Rational(0))
    e_section = exceptional_section(S1, bp)
    first = make_curve(DivisorClass(S1, 1, 1), y - x**2 - x, bp)
    second = make_curve(DivisorClass(S1, 1, 1), y**2 + 18 * y + 6 * x + 7 * x * y, bp)
    form = _pullback_e1(e_section, first, bp).multiply(_pullback_e1(e_section, second, bp))
    assert form.degree == 2
    assert form.distinct_root_count() == 2
    same_direction = make_curve(DivisorClass(S1, 1, 1), y - 3 * x**2 - x, bp)
    form = form.multiply(_pullback_e1(e_section, same_direction, bp))
    assert form.distinct_root_count() == 2  # direction y = x repeats


def test_negative_section_disjoint_from_boundary_is_hyper_bitangent():
    cfg = f2_three_sections_config()
    result = is_hyper_bitangent(negative_section(S2), cfg)
    assert result.count == 0
    assert result.is_hyper_bitangent

def test_negative_section_counts_section_crossings_on_f2():
    # a (1,3)-class curve meets y = 0 in its three roots
    curve = make_curve(
        DivisorClass(S2, 1, 3), sympy.expand((x - 7) * (x - 8) * (x - 9) + (x**5 + 1) * y)
    )
    from hirzebruch.verifier import _pullback_e2

    form = _pullback_e2(negative_section(S2), curve)
    assert form.degree == 3
    assert form.distinct_root_count() == 3

def test_witnesses_are_reported_for_rational_points():
    cfg = product_surface_three_diagonal_config()
    ruling = make_curve(DivisorClass(S0, 1, 0), x - 1)
    result = is_hyper_bitangent(ruling, cfg)
    from fractions import Fraction as F

    assert (F(1), F(1)) in result.witnesses
    assert (F(1), F(73, 11)) in result.witnesses

# -- binary forms ------------------------------------------------------------------------

def test_binary_form_counts_infinity_roots():
    form = BinaryForm(sympy.Integer(5), 2)  # c * s^2: a double root at infinity
    assert form.distinct_root_count() == 1
    form = BinaryForm(sympy.expand((t - 1) ** 2 * (t + 2)), 4)
    assert form.distinct_root_count() == 3  # {1, -2, infinity}
    assert form.has_infinity_root()

def test_binary_form_exact_division():
    num = BinaryForm(sympy.expand(t**2 * (t - 3)), 5)
    den = BinaryForm(t**2, 2)
    quo = num.divide_exact(den)
    assert quo.degree == 3
    assert sympy.expand(quo.poly - (t - 3)) == 0

# -- enumeration ----------------------------------------------------------------------------

def test_enumeration_lists_two_rulings_per_intersection_point():
    for build in (product_surface_three_diagonal_config, product_surface_33_config):
        cfg = build()
        rulings = [c for c in enumerate_candidates(cfg) if c.label == "ruling"]
        assert len(rulings) == 2 * len(compute_N(cfg))

def test_enumeration_includes_tangency_family_only_with_small_component():
    cfg = product_surface_33_config()
    assert all(c.label != "tangency" for c in enumerate_candidates(cfg))

def test_enumeration_on_f1_lists_section_fibers_and_lines():
    cfg = f1_two_lines_conic_config()
    candidates = enumerate_candidates(cfg)
    assert sum(1 for c in candidates if c.is_exceptional_section()) == 1
    fibers = [c for c in candidates if c.label == "fiber"]
    assert len(fibers) == len(compute_N(cfg))
    lines = [c for c in candidates if c.label == "line"]
    assert 1 <= len(lines) <= 10  # pairs of N-points, lines through the center dropped

# -- end-to-end comparisons -------------------------------------------------------------------

def test_verify_bound_on_diagonal_fixture():
    cfg = product_surface_three_diagonal_config()
    record = verify_bound(cfg)
    assert record.within_bound
    assert record.covered_bound == 24
    assert record.found_count == 12  # every ruling through a crossing point
    statuses = {v.status for v in record.verdicts}
    assert statuses <= {"hyper-bitangent", "excluded", "shares-component"}

def test_one_small_component_gates_the_tangency_family():
    from fixtures import product_surface_one_diagonal_config

    cfg = product_surface_one_diagonal_config()
    assert cfg.numeric.n_count() == 4 + 4 + 8
    candidates = enumerate_candidates(cfg)
    rulings = [c for c in candidates if c.label == "ruling"]
    assert len(rulings) == 2 * 16
    tangency = [c for c in candidates if c.label == "tangency"]
    # one pair of crossing points per candidate: at most (B1.B2)(B1.B3) of them
    assert len(tangency) <= 4 * 4
    record = verify_bound(cfg)
    assert record.within_bound
    assert record.covered_bound == 2 * 16 + 4 * 4
    assert record.case_label == "F0-one-(1,1)"


def test_tangency_enumeration_finds_the_bitangent_diagonal():
    cfg = product_surface_bitangent_diagonal_config()
    diagonal = make_curve(DivisorClass(S0, 1, 1), y - x)
    result = is_hyper_bitangent(diagonal, cfg)
    assert result.count == 2
    assert result.is_hyper_bitangent
    candidates = enumerate_candidates(cfg)
    assert any(c.label == "tangency" for c in candidates)
    record = verify_bound(cfg)
    assert diagonal.key() in {c.key() for c in record.found}
    assert record.found_count == 16
    assert record.covered_bound == 24
    assert record.within_bound

def test_squarefree_count_matches_rational_root_location_when_all_roots_rational():
    # a ruling whose boundary points are all rational and affine: the
    # squarefree degree count must equal the number of located witnesses
    cfg = product_surface_33_config()
    ruling = make_curve(DivisorClass(S0, 0, 1), y - sympy.Rational(89, 9))
    result = is_hyper_bitangent(ruling, cfg)
    assert result.count == 8
    assert len(result.witnesses) == 8

def test_resolution_chain_multiplicities_match_sequence():
    from hirzebruch.germs import PlaneCurveGerm, multiplicity_sequence, resolution_chain

    for text in ("y^2 - x^3", "y^2 - x^5", "y^3 - x^10", "y^4 - x^11"):
        germ = PlaneCurveGerm(text)
        nodes = resolution_chain(germ)
        seq = multiplicity_sequence(germ)
        assert tuple(node.multiplicity for node in nodes) == seq.entries
        assert nodes[0].chart == "origin"
        assert all(node.chart in ("x", "y") for node in nodes[1:])

def test_verify_bound_on_33_fixture_finds_nothing():
    cfg = product_surface_33_config()
    record = verify_bound(cfg)
    assert len(compute_N(cfg)) == 54
    assert record.found_count == 0
    assert record.covered_bound == 2 * 54
    assert record.within_bound

def test_verify_bound_on_f1_fixture():
    cfg = f1_two_lines_conic_config()
    record = verify_bound(cfg, gamma=2**15 * 35)
    assert record.covered_bound == 1 + 5 + 10
    assert record.found_count == 10
    assert record.within_bound

def test_verify_bound_on_f2_fixture():
    cfg = f2_three_sections_config()
    record = verify_bound(cfg)
    assert record.covered_bound == 19
    assert record.found_count == 7  # the disjoint negative section plus six fibers
    assert record.within_bound

def test_found_candidates_recheck_idempotently():
    for build in (
        product_surface_three_diagonal_config,
        f1_two_lines_conic_config,
        f2_three_sections_config,
    ):
        cfg = build()
        record = verify_bound(cfg)
        for curve in record.found:
            assert is_hyper_bitangent(curve, cfg).is_hyper_bitangent
