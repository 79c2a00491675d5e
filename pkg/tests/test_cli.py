import json
from fractions import Fraction
from pathlib import Path

import pytest

from monoloj import io
from monoloj.arith import rat
from monoloj.cli import main
from monoloj.closure import closure_generators
from monoloj.exponent import loj_ideal
from monoloj.geometry import MonomialIdeal, newton_polyhedron

DATA = Path(__file__).resolve().parent.parent / "data"
IDEALS = sorted((DATA / "ideals").glob("*.json"))


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out.strip(), err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_documented_examples(capsys):
    assert run(capsys, "loj", "--a", DATA / "ideals/diag_2_7_3.json", "--b", DATA / "ideals/m3.json")[:2] == (0, "7")
    code, out, _ = run(capsys, "theta", "--ideal", DATA / "ideals/m2_cubed.json")
    assert code == 0 and out.splitlines() == ["1", "rigid: true"]
    code, payload = run_json(capsys, "family", "analyze", DATA / "families/ex97.json")
    assert code == 0 and payload["walls"] == ["1/3"]
    assert run(capsys, "family", "walls", DATA / "families/ex97.json")[1] == "1/3"


def test_plain_outputs(capsys):
    x45 = DATA / "ideals/x4_x2y3_y5.json"
    m2 = DATA / "ideals/m2.json"
    assert run(capsys, "loj", "--a", x45, "--b", m2)[1] == "5"
    assert run(capsys, "member", x45, "--point", "1,4")[1] == "true"
    assert run(capsys, "member", x45, "--point", "0,4")[1] == "false"
    assert run(capsys, "contain", "--a", x45, "--b", m2, "--q", "5")[1] == "true"
    assert run(capsys, "contain", "--a", x45, "--b", m2, "--q", "4")[1] == "false"
    assert run(capsys, "lct", "--ideal", DATA / "ideals/x2y3.json")[1] == "5/6"
    assert run(capsys, "mixed", "--i", DATA / "ideals/x2y3.json", "--j", m2)[1] == "1 2 6"
    assert run(capsys, "milnor", "--exponents", "3,4")[1] == "mu=6 L=3"
    assert run(capsys, "infinity-min", DATA / "infinity/table_zero.json")[1] == "0"
    assert run(capsys, "infinity-min", DATA / "infinity/table_one.json")[1] == "1"
    assert run(capsys, "infinity-check", DATA / "infinity/xy.json")[1] == "nondegenerate"
    assert run(capsys, "infinity-check", DATA / "infinity/x_plus_y_twice.json")[1] == "degenerate at w=[1, 1]"
    assert run(capsys, "infinity-check", DATA / "infinity/x_plus_y_x_minus_y.json")[1] == "nondegenerate"
    code, out, _ = run(capsys, "sharpness", "--valuations", "1,1;1,2")
    assert code == 0 and out.endswith("ok=true")
    code, out, _ = run(capsys, "loj", "--a", DATA / "filtrations/linear_a.json", "--b", DATA / "filtrations/linear_b.json")
    assert (code, out) == (0, "6/5")


def test_exit_codes(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"dim": 2, "gens": [[1, -1]]}')
    assert run(capsys, "facets", bad)[0] == 2
    assert run(capsys, "facets", tmp_path / "missing.json")[0] == 2
    broken = tmp_path / "broken.json"
    broken.write_text("{not json")
    assert run(capsys, "closure", broken)[0] == 2
    assert run(capsys, "member", DATA / "ideals/m2.json", "--point", "1,a")[0] == 2
    assert run(capsys, "milnor", "--exponents", "1,3")[0] == 2
    big = tmp_path / "m5.json"
    big.write_text(json.dumps(io.ideal_to_json(MonomialIdeal.maximal(5))))
    assert run(capsys, "facets", big)[0] == 3
    lf = tmp_path / "lf3.json"
    lf.write_text(json.dumps({"kind": "linear", "dim": 3, "constraints": [{"w": [1, 1, 1], "c": "2"}]}))
    code, out, _ = run(capsys, "loj", "--a", lf, "--b", DATA / "ideals/m3.json")
    assert code == 3 and out == "2 (lower bound)"
    with pytest.raises(SystemExit):
        main(["no-such-command"])


def test_json_round_trip(capsys):
    for path in IDEALS:
        ideal = io.ideal_from_json(io.load_json(path))
        _, payload = run_json(capsys, "closure", path)
        assert io.ideal_from_json(payload) == closure_generators(ideal)
        _, payload = run_json(capsys, "facets", path)
        poly = newton_polyhedron(ideal)
        assert [tuple(rat(c) for c in v) for v in payload["vertices"]] == list(poly.vertices)
        assert [(tuple(f["normal"]), rat(f["offset"])) for f in payload["facets"]] == \
            [(f.normal, f.offset) for f in poly.facets]
        if ideal.is_m_primary():
            _, payload = run_json(capsys, "loj", "--a", path, "--b", path)
            expected = loj_ideal(ideal, ideal)
            assert rat(payload["value"]) == expected.value == 1
            assert [tuple(u) for u in payload["maximizers"]] == list(expected.maximizers)
    _, payload = run_json(capsys, "family", "analyze", DATA / "families/ex97.json")
    spec = io.family_from_json(io.load_json(DATA / "families/ex97.json"))
    assert io.family_from_json(io.family_to_json(spec)) == spec
    assert rat(payload["L0"]) == Fraction(12, 7) and rat(payload["L1"]) == Fraction(5, 4)
    assert payload["inv_L_affine"] is False
    _, payload = run_json(capsys, "contain", "--a", DATA / "ideals/x4_x2y3_y5.json", "--b", DATA / "ideals/m2.json",
                          "--q", "4")
    assert payload["witness"]["monomial"] == [0, 4] and rat(payload["witness"]["deficit"]) == 4


def test_verify_on_corpus(capsys):
    m2, m3 = DATA / "ideals/m2.json", DATA / "ideals/m3.json"
    for path in IDEALS:
        ideal = io.ideal_from_json(io.load_json(path))
        if not ideal.is_m_primary():
            continue
        m = m2 if ideal.dim == 2 else m3
        code, payload = run_json(capsys, "loj", "--a", path, "--b", m, "--verify")
        assert code == 0 and payload["verify"]["agree"], path
        code, payload = run_json(capsys, "lct", "--ideal", path, "--verify")
        assert code == 0 and payload["verify"]["agree"], path
        point = ",".join(["1"] * ideal.dim)
        code, payload = run_json(capsys, "member", path, "--point", point, "--verify")
        assert code == 0 and payload["verify"]["agree"], path
        code, payload = run_json(capsys, "contain", "--a", path, "--b", m, "--q", "2", "--p", "1", "--verify")
        assert code == 0 and payload["verify"]["agree"], path
        if ideal.dim == 2:
            code, payload = run_json(capsys, "mixed", "--i", path, "--j", m2, "--verify")
            assert code == 0 and payload["verify"]["agree"], path


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest", "--seed", "3", "--count", "25")
    assert code == 0 and out == "25/25 passed"
    # deterministic under a fixed seed
    assert run(capsys, "selftest", "--seed", "3", "--count", "25", "--json")[1] == \
        run(capsys, "selftest", "--seed", "3", "--count", "25", "--json")[1]
