"""Figure rendering: files exist, are PNGs, and carry the right labels."""

from pathlib import Path

from adg_metrics.cli import run
from adg_metrics.figures import kind_breakdown_figure, metrics_figure, save_report_figures
from adg_metrics.metrics import compute_report
from adg_metrics.parser import parse

CORPUS = Path(__file__).parent / "corpus"
PNG_MAGIC = b"\x89PNG\r\n\x1a\n"


def pipeline_report():
    return compute_report(parse((CORPUS / "pipeline.adl").read_text()))


class TestFigures:
    def test_save_writes_both_pngs(self, tmp_path):
        target = tmp_path / "figs"
        paths = save_report_figures(pipeline_report(), "Pipeline", str(target))
        assert [Path(p).name for p in paths] == ["metrics.png", "dependence_kinds.png"]
        for path in paths:
            data = Path(path).read_bytes()
            assert data.startswith(PNG_MAGIC) and len(data) > 1000

    def test_metrics_figure_labels(self):
        fig = metrics_figure(pipeline_report(), "Pipeline")
        ax = fig.axes[0]
        assert "Pipeline" in ax.get_title()
        assert [t.get_text() for t in ax.get_xticklabels()] == [
            "M_T",
            "M_G",
            "M'_T",
            "M'_G",
            "M_S",
            "M'_S",
        ]

    def test_kind_figure_bars_match_counts(self):
        report = pipeline_report()
        fig = kind_breakdown_figure(report, "Pipeline")
        heights = [patch.get_height() for patch in fig.axes[0].patches]
        assert heights == [0, 3, 0]

    def test_cli_figures_flag(self, tmp_path, capsys):
        target = tmp_path / "out"
        code = run(
            ["analyze", str(CORPUS / "pipeline.adl"), "--figures", str(target)]
        )
        capsys.readouterr()
        assert code == 0
        assert (target / "metrics.png").read_bytes().startswith(PNG_MAGIC)
        assert (target / "dependence_kinds.png").read_bytes().startswith(PNG_MAGIC)
