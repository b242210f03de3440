import io
import json

import pytest

from nonconvex import serialize as ser
from nonconvex.cli import EXIT_ALPHA, EXIT_INPUT, EXIT_OK, EXIT_VERIFY, main
from nonconvex.decompose import theorem_D
from nonconvex.errors import InvalidInput
from nonconvex.gallery import NAMES, gallery
from nonconvex.geom import Segment, pt
from nonconvex.region import normalize

from conftest import F, square


def run(argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, io.StringIO(stdin), out, err)
    return code, out.getvalue(), err.getvalue()


def pipe(*stages, stdin=""):
    text = stdin
    code = 0
    for argv in stages:
        code, text, _ = run(argv, text)
    return code, text

# ---------------------------------------------------------------- serialize


def test_rationals():
    assert ser.q(F(-3, 6)) == "-1/2"
    assert ser.parse_q("2/4") == F(1, 2)
    assert ser.parse_q(3) == 3
    for bad in (0.5, True, "x", None):
        with pytest.raises(InvalidInput):
            ser.parse_q(bad)


def test_instance_round_trip():
    X = normalize(square(), [pt(F(1, 2), F(1, 3)), Segment(pt(0, 0), pt(1, 0), "open")])
    d = ser.instance_to_dict(X)
    Y, W = ser.instance_from_dict(json.loads(ser.dumps(d)))
    assert Y.features == X.features and Y.components == X.components and W is None


def test_disconnected_instance_round_trip():
    X = normalize([square(), square(3, 0)])
    Y, _ = ser.instance_from_dict(ser.instance_to_dict(X))
    assert len(Y.components) == 2


def test_decomposition_round_trip():
    g = gallery("ex3")
    dec = theorem_D(g.X)
    d = ser.decomposition_to_dict(dec, g.X)
    back = ser.decomposition_from_dict(json.loads(ser.dumps(d)))
    assert [c.base for c in back.cells] == [c.base for c in dec.cells]
    assert [c.exclusions for c in back.cells] == [c.exclusions for c in dec.cells]
    assert back.case_tag == dec.case_tag

# ---------------------------------------------------------------- CLI


def cross():
    """Square with a plus sign removed; three quadrants are pairwise invisible."""
    return normalize(square(0, 0, 6), [Segment(pt(1, 3), pt(5, 3)), Segment(pt(3, 1), pt(3, 5))])


def test_gallery_decompose_verify_pipeline():
    code, text = pipe(["gallery", "ex3"], ["decompose", "-"], ["verify", "-"])
    assert code == EXIT_OK and json.loads(text)["ok"] is True


def test_verify_detects_tampering():
    code, text = pipe(["gallery", "ex3"], ["decompose", "-"])
    doc = json.loads(text)
    doc["cells"] = doc["cells"][:-1]
    code, out, _ = run(["verify", "-"], json.dumps(doc))
    assert code == EXIT_VERIFY and json.loads(out)["ok"] is False


def test_malformed_json_is_input_error():
    code, _, err = run(["analyze", "-"], "{not json")
    assert code == EXIT_INPUT and "malformed" in err


def test_float_coordinates_rejected():
    code, _, _ = run(["analyze", "-"], json.dumps({"polygon": [[0.0, 0], [1, 0], [0, 1]]}))
    assert code == EXIT_INPUT


def test_unknown_subcommand_is_input_error():
    assert run(["frobnicate"])[0] == EXIT_INPUT


def test_triple_exits_alpha():
    X = cross()
    text = ser.dumps(ser.instance_to_dict(X))
    code, out, _ = run(["decompose", "-"], text)
    assert code == EXIT_ALPHA
    doc = json.loads(out)
    assert doc["error"] == "alpha_refuted" and doc["certificate"]["kind"] == "clique"


def test_explicit_triple_bound_exits_alpha():
    X = cross()
    W = [pt(4, 4), pt(2, 4), pt(2, 2)]
    code, out, _ = run(["bound", "-"], ser.dumps(ser.instance_to_dict(X, W)))
    assert code == EXIT_ALPHA and json.loads(out)["bounds"]["alpha"] >= 3


@pytest.mark.parametrize("name", [n for n in NAMES if n != "ex6"])
def test_analyze_route(name):
    code, text = pipe(["gallery", name], ["analyze", "-"])
    assert code == EXIT_OK
    assert json.loads(text)["route"] == gallery(name).expected["route"]


def test_bound_sector_certificate():
    code, text = pipe(["gallery", "ex6"], ["bound", "-", "--density", "1", "--budget", "0"])
    doc = json.loads(text)
    assert doc["bounds"]["gamma"] >= 6


def test_render_deterministic(tmp_path):
    code, dec = pipe(["gallery", "ex5"], ["decompose", "-"])
    a = run(["render", "-"], dec)[1]
    b = run(["render", "-"], dec)[1]
    assert a == b and a.startswith("<?xml") and 'id="cells"' in a
    out = tmp_path / "x.svg"
    assert run(["render", "-", "-o", str(out)], dec)[0] == EXIT_OK
    assert out.read_text() == a


def test_fuzz_command():
    code, text, _ = run(["fuzz", "--cases", "5", "--seed", "3"])
    assert code == EXIT_OK and json.loads(text)["cases"] == 5
