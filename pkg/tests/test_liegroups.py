import pytest

from ratgauge.liegroups import (
    Family,
    GroupSpec,
    GroupSyntaxError,
    RankOutOfRange,
    SimpleFactor,
    UnsupportedGroup,
    center_order,
    dimension,
    exponents,
    parse_group_spec,
    pi4_is_trivial,
    rank,
    rational_homotopy,
    render_group_spec,
    simple_factors,
)
from oracles import sun_center_order

E8_EXPONENTS = (2, 8, 12, 14, 18, 20, 24, 30)


def factor(family, n=0):
    (f,) = simple_factors(family, n)
    return f


class TestParse:
    def test_e8(self):
        assert parse_group_spec("E8") == GroupSpec((factor(Family.E8),))

    def test_sp1_is_su2(self):
        assert parse_group_spec("Sp(1)") == parse_group_spec("SU(2)")
        assert parse_group_spec("Sp(1)").factors[0].display_name == "Sp(1)"

    def test_product(self):
        g = parse_group_spec("SU(2)xE8")
        assert [f.cartan_label for f in g.factors] == ["A1", "E8"]

    @pytest.mark.parametrize(
        "text, labels",
        [
            ("Spin(3)", ["A1"]),
            ("Spin(4)", ["A1", "A1"]),
            ("Spin(5)", ["C2"]),
            ("Spin(6)", ["A3"]),
            ("Spin(7)", ["B3"]),
            ("Spin(8)", ["D4"]),
            ("Sp(2)", ["C2"]),
            ("su(3) * G2", ["A2", "G2"]),
            ("  E6 x e7 ", ["E6", "E7"]),
            ("SU(2)^3", ["A1", "A1", "A1"]),
            ("Spin(4)^2 x F4", ["A1", "A1", "A1", "A1", "F4"]),
            ("SPIN(10)", ["D5"]),
        ],
    )
    def test_canonicalization(self, text, labels):
        assert [f.cartan_label for f in parse_group_spec(text).factors] == labels

    @pytest.mark.parametrize("text", ["U(3)", "U(1)", "SO(5)", "SO(3)", "PSU(3)", "PU(2)", "PSp(2)", "PSO(8)", "T^2", "T", "SU(3)/Z3", "SU(2) x U(1)"])
    def test_unsupported(self, text):
        with pytest.raises(UnsupportedGroup, match="simply connected|semisimple"):
            parse_group_spec(text)

    @pytest.mark.parametrize("text", ["SU(1)", "SU(0)", "Spin(1)", "Spin(2)", "Sp(0)"])
    def test_rank_out_of_range(self, text):
        with pytest.raises(RankOutOfRange):
            parse_group_spec(text)

    @pytest.mark.parametrize("text", ["", "SU(3", "SU3", "E9", "G2(2)", "SU(2)xx E8", "x", "SU(2)^0", "A3", "Spin", "SU(-2)", "SU(2)+E8"])
    def test_syntax_errors(self, text):
        with pytest.raises(GroupSyntaxError):
            parse_group_spec(text)

    def test_errors_are_value_errors(self):
        with pytest.raises(ValueError):
            parse_group_spec("U(3)")

    @pytest.mark.parametrize("text", ["SU(5)", "Spin(9) x Sp(3)", "E8 x E8", "G2 x F4 x SU(2)", "Spin(12)"])
    def test_render_roundtrip(self, text):
        g = parse_group_spec(text)
        assert parse_group_spec(render_group_spec(g)) == g
        assert render_group_spec(parse_group_spec(render_group_spec(g))) == render_group_spec(g)


class TestFactorData:
    def test_exponents_su2(self):
        assert exponents(parse_group_spec("SU(2)")) == (2,)

    def test_exponents_e8(self):
        assert exponents(parse_group_spec("E8")) == E8_EXPONENTS

    def test_exponents_spin8(self):
        exps = exponents(parse_group_spec("Spin(8)"))
        assert exps == (2, 4, 4, 6)
        assert sum(2 * k - 1 for k in exps) == 28 == dimension(parse_group_spec("Spin(8)"))

    def test_rank_dimension(self):
        assert rank(parse_group_spec("E8")) == 8
        assert dimension(parse_group_spec("SU(3)")) == 8
        assert dimension(parse_group_spec("E8")) == 248

    @pytest.mark.parametrize("n", [2, 3, 4, 7])
    def test_center_su(self, n):
        assert center_order(parse_group_spec(f"SU({n})")) == sun_center_order(n)

    def test_center_product(self):
        assert center_order(parse_group_spec("SU(3) x E6 x Spin(8)")) == 3 * 3 * 4

    @pytest.mark.parametrize("n", range(1, 9))
    def test_pi4_sp(self, n):
        assert pi4_is_trivial(parse_group_spec(f"Sp({n})")) is False

    @pytest.mark.parametrize(
        "text, expected",
        [
            ("E8", True), ("E6", True), ("G2", True), ("F4", True), ("E7", True),
            ("SU(2)", False), ("SU(3)", True), ("SU(9)", True),
            ("Spin(5)", False), ("Spin(6)", True), ("Spin(7)", True), ("Spin(11)", True),
            ("SU(3) x Sp(2)", False), ("SU(3) x E8", True),
        ],
    )
    def test_pi4(self, text, expected):
        assert pi4_is_trivial(parse_group_spec(text)) is expected

    def test_noncanonical_factor_rejected(self):
        with pytest.raises(RankOutOfRange):
            SimpleFactor(Family.B, 2)
        with pytest.raises(RankOutOfRange):
            SimpleFactor(Family.E8, 7)

    def test_empty_group(self):
        with pytest.raises(GroupSyntaxError):
            GroupSpec(())


class TestRationalHomotopy:
    def test_su2(self):
        assert rational_homotopy(parse_group_spec("SU(2)")) == {3: 1}

    def test_e8(self):
        assert rational_homotopy(parse_group_spec("E8")) == {
            3: 1, 15: 1, 23: 1, 27: 1, 35: 1, 39: 1, 47: 1, 59: 1,
        }

    def test_spin8(self):
        assert rational_homotopy(parse_group_spec("Spin(8)")) == {3: 1, 7: 2, 11: 1}

    def test_product_adds(self):
        assert rational_homotopy(parse_group_spec("SU(2) x SU(3)")) == {3: 2, 5: 1}
