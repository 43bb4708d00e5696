import io
import json

import pytest

from ratgauge import verify
from ratgauge.cli import run
from ratgauge.graded import GradedRanks, SpaceTag
from ratgauge.liegroups import parse_group_spec
from ratgauge.report import Report, build_report, render_report
from oracles import count_monomials

REPORT_KEYS = {"group", "b2", "space", "homotopy_ranks", "algebra", "connectivity", "poincare", "caveats"}


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


class TestCompute:
    def test_su2_b_star_text(self):
        code, out, _ = cli("compute", "--group", "SU(2)", "--b2", "5", "--space", "b-star", "--format", "text")
        assert code == 0
        assert "H* polynomial, 6 generators" in out
        rows = [line.split() for line in out.splitlines() if line.strip().startswith(("2 ", "4 "))]
        assert ["2", "5"] in rows and ["4", "1"] in rows

    def test_u3_rejected(self):
        code, out, err = cli("compute", "--group", "U(3)", "--b2", "1", "--space", "b-tilde")
        assert code == 1 and out == ""
        assert "simply connected" in err

    @pytest.mark.parametrize("group", ["SO(5)", "PSU(3)"])
    def test_other_unsupported(self, group):
        assert cli("compute", "--group", group, "--b2", "1", "--space", "gauge")[0] == 1

    def test_e8_json_series(self):
        code, out, _ = cli("compute", "--group", "E8", "--b2", "3", "--space", "gauge", "--series", "30", "--format", "json")
        assert code == 0
        d = json.loads(out)
        assert set(d) == REPORT_KEYS
        assert d["algebra"]["total"] == 39 and d["algebra"]["kind"] == "exterior"
        degrees = [j for j, c in d["algebra"]["generators"] for _ in range(c)]
        assert d["poincare"] == count_monomials(degrees, 30)
        assert d["connectivity"] == "connected" and d["caveats"] == []

    @pytest.mark.parametrize(
        "argv",
        [
            ["compute", "--group", "E8", "--b2", "-1", "--space", "gauge"],
            ["compute", "--group", "E8", "--b2", "x", "--space", "gauge"],
            ["compute", "--group", "E8", "--b2", "1", "--space", "nope"],
            ["compute", "--group", "E8", "--b2", "1"],
            ["compute", "--group", "SU(3", "--b2", "1", "--space", "gauge"],
            ["compute", "--group", "SU(1)", "--b2", "1", "--space", "gauge"],
            [],
        ],
    )
    def test_input_errors_exit_1(self, argv):
        code, _, err = cli(*argv)
        assert code == 1 and "error" in err

    def test_check_passes(self):
        code, _, err = cli("compute", "--group", "E8", "--b2", "3", "--space", "b-star", "--check")
        assert code == 0 and "passed" in err

    def test_check_failure_exit_2(self, monkeypatch):
        real = verify.ranks_B_tilde

        def broken(g, base, tag=SpaceTag.B_TILDE):
            entries = dict(real(g, base))
            entries[2] = entries.get(2, 0) + 1
            return GradedRanks(entries, tag)

        monkeypatch.setattr(verify, "ranks_B_tilde", broken)
        code, _, err = cli("compute", "--group", "SU(2)", "--b2", "1", "--space", "gauge", "--check")
        assert code == 2 and "[fail]" in err

    def test_max_degree_truncates(self):
        code, out, _ = cli("compute", "--group", "E8", "--b2", "1", "--space", "gauge", "--format", "json", "--max-degree", "20")
        d = json.loads(out)
        assert code == 0 and all(j <= 20 for j, _ in d["homotopy_ranks"])
        assert d["algebra"]["total"] == sum(c for _, c in d["algebra"]["generators"])

    def test_alias_explicit(self):
        _, out, _ = cli("compute", "--group", "G2", "--b2", "1", "--space", "gauge-tilde")
        assert "rationally identical to gauge" in out
        _, out, _ = cli("compute", "--group", "G2", "--b2", "1", "--space", "b-tilde-star")
        assert "rationally identical to b-tilde" in out


class TestTables:
    def test_json_all_spaces(self):
        code, out, _ = cli("tables", "--group", "SU(2)", "--b2", "2", "--format", "json")
        assert code == 0
        reports = [Report.from_dict(d) for d in json.loads(out)]
        assert [r.space for r in reports] == [t.value for t in SpaceTag]

    def test_latex(self):
        code, out, _ = cli("tables", "--group", "SU(2)", "--b2", "2", "--format", "latex")
        assert code == 0 and len(out.strip().splitlines()) == len(SpaceTag)


def test_selftest_command():
    code, out, _ = cli("selftest", "--max-degree", "20")
    assert code == 0 and out.strip().endswith("checks passed")


class TestRender:
    def test_latex_su2_gauge(self):
        r = build_report(parse_group_spec("SU(2)"), 4, "gauge")
        tex = render_report(r, "latex")
        assert r"\wedge (z_1,\ldots ,z_{b_2}, w)" in tex
        assert r"\deg z_i = 1" in tex and r"\deg w = 3" in tex

    def test_latex_su2_b_star(self):
        tex = render_report(build_report(parse_group_spec("SU(2)"), 4, "b-star"), "latex")
        assert r"\mathbb{Q}[x_1,\ldots ,x_{b_2}, y]" in tex and r"\deg y = 4" in tex

    def test_latex_trivial(self):
        tex = render_report(build_report(parse_group_spec("SU(2)"), 0, "b-tilde"), "latex")
        assert tex.endswith(r"= \mathbb{Q}")

    def test_text_trivial(self):
        text = render_report(build_report(parse_group_spec("SU(2)"), 0, "b-tilde"), "text")
        assert "H* = Q (trivial)" in text

    def test_e8_b_tilde_json(self):
        d = json.loads(render_report(build_report(parse_group_spec("E8"), 3, "b-tilde"), "json"))
        assert len(d["algebra"]["generators"]) == 15
        assert d["algebra"]["total"] == 8 * 3 + 7

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            render_report(build_report(parse_group_spec("E8"), 1, "g"), "yaml")

    @pytest.mark.parametrize("space", [t.value for t in SpaceTag])
    @pytest.mark.parametrize("group, b2", [("SU(2)", 3), ("E8 x Sp(2)", 1), ("Spin(7)", 0)])
    def test_json_roundtrip_and_text_numbers(self, group, b2, space):
        r = build_report(parse_group_spec(group), b2, space, series=12)
        assert Report.from_json(render_report(r, "json")) == r
        text = render_report(r, "text")
        for j, rank in r.homotopy_ranks:
            assert f"  {j:>4}  {rank:>8}" in text
        for d, c in r.algebra.generators:
            assert f"  {d:>6}  {c:>6}" in text
        assert " ".join(map(str, r.poincare)) in text

    @pytest.mark.parametrize(
        "group, n_caveats",
        [("E8", 0), ("SU(4)", 0), ("SU(2)", 1), ("Sp(3)", 1), ("E8 x E7", 1), ("SU(2) x E8", 2)],
    )
    def test_caveats(self, group, n_caveats):
        r = build_report(parse_group_spec(group), 1, "gauge")
        assert len(r.caveats) == n_caveats

    def test_report_invariants(self):
        r = build_report(parse_group_spec("SU(3) x E6"), 2, "b-star")
        assert [j for j, _ in r.homotopy_ranks] == sorted(j for j, _ in r.homotopy_ranks)
        assert r.algebra.total == sum(c for _, c in r.algebra.generators)
        assert r.algebra.total == (2 + 2) * 8 - 2
