import xml.etree.ElementTree as ET
from pathlib import Path

import pytest

from zetadim.spectra import circle_dirac, torus_dirac
from zetadim.specdim import LambdaGrid, detect_plateau, dimension_curve
from zetadim.svg import render_svg

NS = "{http://www.w3.org/2000/svg}"
GOLDEN = Path(__file__).parent / "golden" / "two_curves.svg"
ALLOWED = {"svg", "g", "polyline", "line", "text", "path"}


def _golden_svg():
    grid = LambdaGrid(0.05, 2000.0, 64)
    curves = [dimension_curve(circle_dirac(200), grid), dimension_curve(torus_dirac(2, 30), grid)]
    reports = [detect_plateau(c) for c in curves]
    return render_svg(curves, plateaus=reports, comments=["config.test=golden"])


def test_one_curve_200_vertices():
    curve = dimension_curve(circle_dirac(1000))
    root = ET.fromstring(render_svg([curve]))
    lines = root.findall(f".//{NS}polyline")
    assert len(lines) == 1
    assert len(lines[0].get("points").split()) == 200


def test_two_curves_two_legend_entries():
    curves = [dimension_curve(circle_dirac(100)), dimension_curve(torus_dirac(2, 20))]
    root = ET.fromstring(render_svg(curves))
    assert len(root.findall(f".//{NS}polyline")) == 2
    legend = root.find(f".//{NS}g[@id='legend']")
    assert [t.text for t in legend.findall(f"{NS}text")] == ["circle:100", "torus:2:20"]


def test_only_allowed_elements_and_decade_ticks():
    curve = dimension_curve(circle_dirac(100))
    root = ET.fromstring(render_svg([curve]))
    assert {el.tag[len(NS):] for el in root.iter()} <= ALLOWED
    ticks = [t.text for t in root.find(f".//{NS}g[@id='xticks']").findall(f"{NS}text")]
    assert ticks == ["1e-2", "1e-1", "1e0", "1e1", "1e2", "1e3"]


def test_comments_are_safe():
    curve = dimension_curve(circle_dirac(100))
    text = render_svg([curve], comments=["a--b", "x"])
    ET.fromstring(text)
    assert "<!-- a- -b -->" in text


def test_labels_escaped():
    curve = dimension_curve(circle_dirac(100))
    root = ET.fromstring(render_svg([curve], labels=["N < 10 & more"]))
    assert root.find(f".//{NS}g[@id='legend']/{NS}text").text == "N < 10 & more"


def test_empty_rejected():
    with pytest.raises(ValueError):
        render_svg([])


def test_golden_file():
    assert _golden_svg() == GOLDEN.read_text(encoding="utf-8")


if __name__ == "__main__":
    GOLDEN.write_text(_golden_svg(), encoding="utf-8")
