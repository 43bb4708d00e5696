import pytest

from ratgauge.cohomology import (
    PI0_SYMBOL,
    AlgebraKind,
    FreeGradedAlgebra,
    cohomology_B_star,
    cohomology_B_tilde,
    cohomology_BG,
    cohomology_for,
    cohomology_full_gauge,
    cohomology_G,
    cohomology_gauge_identity,
    minimal_model,
    MinimalModel,
)
from ratgauge.graded import SpaceTag
from ratgauge.homotopy import ranks_gauge
from ratgauge.liegroups import parse_group_spec

SU2 = parse_group_spec("SU(2)")
SU3 = parse_group_spec("SU(3)")
E8 = parse_group_spec("E8")


@pytest.mark.parametrize("b2", [1, 2, 5, 22])
def test_su2_algebras(b2):
    gauge = cohomology_gauge_identity(SU2, b2)
    assert gauge.kind is AlgebraKind.EXTERIOR and dict(gauge.generators) == {1: b2, 3: 1}
    bt = cohomology_B_tilde(SU2, b2)
    assert bt.kind is AlgebraKind.POLYNOMIAL and dict(bt.generators) == {2: b2}
    bs = cohomology_B_star(SU2, b2)
    assert bs.kind is AlgebraKind.POLYNOMIAL and dict(bs.generators) == {2: b2, 4: 1}


@pytest.mark.parametrize("b2", [0, 1, 3, 22])
def test_e8_totals(b2):
    gauge = cohomology_gauge_identity(E8, b2)
    assert dict(gauge.generators) == dict(ranks_gauge(E8, b2))
    assert gauge.num_generators == 8 * b2 + 15
    assert cohomology_B_tilde(E8, b2).num_generators == 8 * b2 + 7
    assert cohomology_B_star(E8, b2).num_generators == 8 * b2 + 15


def test_su3_b2_zero():
    # degree formula with exponents {2, 3}: j=1 <- pi_5, j=3 <- pi_3, j=5 <- pi_5
    a = cohomology_gauge_identity(SU3, 0)
    assert dict(a.generators) == {1: 1, 3: 1, 5: 1}
    assert a.num_generators == 2 * 2 - 1


def test_su2_b_tilde_trivial():
    a = cohomology_B_tilde(SU2, 0)
    assert a.is_trivial and a.kind is AlgebraKind.POLYNOMIAL and a.num_generators == 0


def test_bg():
    assert dict(cohomology_BG(SU2).generators) == {4: 1}
    assert dict(cohomology_BG(E8).generators) == {d: 1 for d in (4, 16, 24, 28, 36, 40, 48, 60)}
    assert cohomology_BG(E8).num_generators == E8.rank


@pytest.mark.parametrize("b2", [0, 1, 2, 7])
@pytest.mark.parametrize("text", ["SU(2)", "E8", "SU(3) x Sp(2)", "Spin(8)"])
def test_tensor_identity(text, b2):
    g = parse_group_spec(text)
    assert sorted(cohomology_B_star(g, b2).degrees()) == sorted(
        cohomology_B_tilde(g, b2).degrees() + cohomology_BG(g).degrees()
    )
    assert cohomology_B_star(g, b2) == cohomology_B_tilde(g, b2) @ cohomology_BG(g)


def test_hopf_for_group():
    a = cohomology_G(E8)
    assert a.kind is AlgebraKind.EXTERIOR
    assert a.total_dimension() == 2**8
    assert sum(a.degrees()) == 248


def test_cohomology_for_aliases():
    assert cohomology_for(SpaceTag.GAUGE_TILDE, E8, 2) == cohomology_gauge_identity(E8, 2)
    assert cohomology_for(SpaceTag.B_TILDE_STAR, E8, 2) == cohomology_B_tilde(E8, 2)


class TestFreeGradedAlgebra:
    def test_kinds(self):
        assert FreeGradedAlgebra({3: 1}).kind is AlgebraKind.EXTERIOR
        assert FreeGradedAlgebra({2: 2}).kind is AlgebraKind.POLYNOMIAL
        assert FreeGradedAlgebra({1: 1, 2: 1}).kind is AlgebraKind.MIXED_FREE

    def test_dimensions(self):
        assert FreeGradedAlgebra({1: 3, 3: 1}).total_dimension() == 16
        assert FreeGradedAlgebra({2: 1}).total_dimension() is None
        assert FreeGradedAlgebra({}).total_dimension() == 1

    def test_from_degrees(self):
        assert FreeGradedAlgebra.from_degrees([2, 2, 4]) == FreeGradedAlgebra({2: 2, 4: 1})

    def test_validation(self):
        with pytest.raises(ValueError):
            FreeGradedAlgebra({0: 1})
        with pytest.raises(ValueError):
            FreeGradedAlgebra({2: -1})


class TestMinimalModel:
    def test_polynomial(self):
        m = minimal_model(FreeGradedAlgebra({2: 1}))
        assert m.algebra == FreeGradedAlgebra({2: 1}) and not m.differential and m.is_formal

    def test_b_star_su2(self):
        m = minimal_model(cohomology_B_star(SU2, 1))
        assert m.algebra.degrees() == [2, 4] and not m.differential

    def test_exterior(self):
        m = minimal_model(FreeGradedAlgebra({3: 1}))
        assert m.algebra.degrees() == [3] and not m.differential

    def test_nonzero_differential_rejected(self):
        with pytest.raises(ValueError):
            MinimalModel(FreeGradedAlgebra({2: 1}), {"x": "y"})


class TestDirectSum:
    def test_e8_connected(self):
        d = cohomology_full_gauge(E8, 3)
        assert d.copies == 1 and d.copies_label == "1"
        assert d.summand == cohomology_gauge_identity(E8, 3)

    def test_su2_symbolic(self):
        d = cohomology_full_gauge(SU2, 3)
        assert d.copies is None and d.copies_label == PI0_SYMBOL

    def test_su4(self):
        d = cohomology_full_gauge(parse_group_spec("SU(4)"), 3)
        assert d.copies == 1
        # exponents {2,3,4}: j=1: 3+1, j=3: 3+1+1, j=5: 3+1, j=7: 1
        assert dict(d.summand.generators) == {1: 4, 3: 5, 5: 4, 7: 1}
        assert d.summand.num_generators == (3 + 2) * 3 - 1
