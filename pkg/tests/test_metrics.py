"""Metric definitions against goldens, oracles, and algebraic identities."""

from hypothesis import given

from adg_metrics.adg import build_adg, select_from, transitive_closure, untyped
from adg_metrics.metrics import (
    compute_report,
    m_global,
    m_global_star,
    m_most_affected,
    m_most_affected_star,
    m_total,
    m_total_star,
    report_from_adg,
)
from adg_metrics.parser import parse

from .naive import naive_metrics
from .strategies import architectures

PIPELINE = """\
architecture Pipeline {
  component Producer { port p : out; complexity 4; }
  component Filter   { port i : in; port o : out; complexity 7; }
  component Consumer { port c : in; complexity 2; }
  attach Producer.p -> Filter.i;
  attach Filter.o -> Consumer.c;
}
"""


class TestPipelineGoldens:
    def report(self):
        return compute_report(parse(PIPELINE))

    def test_m_t(self):
        assert self.report().m_t == 3

    def test_m_t_by_kind(self):
        assert self.report().m_t_by_kind == {"shared": 0, "flow": 3, "constrained": 0}

    def test_m_g(self):
        assert self.report().m_g == 16

    def test_m_t_star(self):
        assert self.report().m_t_star == 6

    def test_m_g_star(self):
        assert self.report().m_g_star == 19

    def test_m_s_with_ties(self):
        report = self.report()
        assert report.m_s == 1
        assert report.m_s_witnesses == ("Filter.i", "Filter.o", "Consumer.c")

    def test_m_s_star_single_witness(self):
        report = self.report()
        assert report.m_s_star == 3
        assert report.m_s_star_witnesses == ("Consumer.c",)

    def test_defaults_off_collapses_closure(self):
        report = compute_report(parse(PIPELINE), default_internal=False)
        assert (report.m_t, report.m_t_star) == (2, 2)


class TestDegenerateCases:
    def test_empty_architecture_all_zero(self):
        report = compute_report(parse("architecture A {}"))
        assert report.m_t == report.m_g == report.m_t_star == report.m_g_star == 0
        assert report.m_s == report.m_s_star == 0
        assert report.m_s_witnesses == report.m_s_star_witnesses == ()

    def test_arcless_vertices_all_witness(self):
        report = compute_report(
            parse("architecture A { component C { port io : inout; complexity 3; } }")
        )
        assert (report.m_s, report.m_s_witnesses) == (0, ("C.io",))
        assert (report.m_g, report.m_g_star) == (3, 3)

    def test_portless_components_still_count_complexity(self):
        report = compute_report(
            parse("architecture A { component C { complexity 5; } }")
        )
        assert (report.m_t, report.m_g) == (0, 5)


class TestOperationLevel:
    def test_individual_operations_agree_with_report(self):
        arch = parse(PIPELINE)
        adg = build_adg(arch)
        complexities = [c.complexity for c in arch.components]
        report = report_from_adg(adg, complexities)
        assert m_total(adg) == report.m_t
        assert m_global(adg, complexities) == report.m_g
        assert m_total_star(adg) == report.m_t_star
        assert m_global_star(adg, complexities) == report.m_g_star
        assert m_most_affected(adg) == (report.m_s, report.m_s_witnesses)
        assert m_most_affected_star(adg) == (report.m_s_star, report.m_s_star_witnesses)

    def test_compute_report_equals_report_from_adg(self):
        arch = parse(PIPELINE)
        adg = build_adg(arch)
        assert compute_report(arch) == report_from_adg(
            adg, [c.complexity for c in arch.components]
        )


class TestProperties:
    @given(architectures())
    def test_matches_naive_oracle(self, arch):
        for default_internal in (True, False):
            report = compute_report(arch, default_internal)
            want = naive_metrics(arch, default_internal)
            assert report.m_t == want["m_t"]
            assert report.m_t_by_kind == want["m_t_by_kind"]
            assert report.m_g == want["m_g"]
            assert report.m_t_star == want["m_t_star"]
            assert report.m_g_star == want["m_g_star"]
            assert (report.m_s, report.m_s_witnesses) == (
                want["m_s"],
                want["m_s_witnesses"],
            )
            assert (report.m_s_star, report.m_s_star_witnesses) == (
                want["m_s_star"],
                want["m_s_star_witnesses"],
            )

    @given(architectures())
    def test_algebraic_identities(self, arch):
        report = compute_report(arch)
        assert report.m_g - report.m_t == report.m_g_star - report.m_t_star
        assert report.m_s <= report.m_s_star
        assert report.m_t_star >= len(untyped(build_adg(arch)))
        assert report.m_t == sum(report.m_t_by_kind.values())

    @given(architectures())
    def test_fanout_sum_equals_untyped_size(self, arch):
        adg = build_adg(arch)
        relation = untyped(adg)
        assert sum(len(select_from(relation, v)) for v in adg.vertices) == len(relation)

    @given(architectures())
    def test_witnesses_in_canonical_vertex_order(self, arch):
        adg = build_adg(arch)
        report = compute_report(arch)
        index = adg.vertex_index()
        for witnesses in (report.m_s_witnesses, report.m_s_star_witnesses):
            positions = [index[w] for w in witnesses]
            assert positions == sorted(positions)

    @given(architectures())
    def test_closure_of_closure_changes_nothing(self, arch):
        adg = build_adg(arch)
        closure = transitive_closure(untyped(adg))
        assert transitive_closure(closure) == closure
