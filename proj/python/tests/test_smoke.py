from pathlib import Path

import pytest

import gspline

DATA = Path(__file__).resolve().parents[2] / "tests" / "data"


def test_path_ideal_and_build():
    g = gspline.load(DATA / "path10.json")
    assert gspline.path_ideal(g, ["u", "v1", "v2", "v3", "v4", "v5", "w"]) == "⟨2⟩"
    s = gspline.build(g, "u", "w", 64, method="path")
    assert s["values"]["u"] == 64 and s["values"]["w"] == 0
    assert gspline.verify(s) == "valid"


def test_known_labelings_verify():
    for name in ["path10_known_spline.json", "tree_known_spline.json", "cycle11_known_spline.json"]:
        assert gspline.verify(DATA / name) == "valid"


def test_cycle_intersection_and_crt():
    g = gspline.load(DATA / "cycle11.json")
    assert gspline.intersection(g, "u", "w") == "⟨2⟩"
    assert len(gspline.paths(g, "u", "w")) == 2
    s = gspline.build(g, "u", "w", 48, method="crt")
    assert s["values"]["u"] - s["values"]["w"] == 48


def test_bowtie_pasting_holds():
    r = gspline.pasting_check(DATA / "bowtie.json", "z", "u", "w")
    assert r["verdict"] == "holds"
    assert (r["lhs"], r["rhs"]) == ("⟨1⟩", "⟨1⟩")


def test_zx_witness_confirmed():
    r = gspline.witness_check(DATA / "zx_pasted_cycles.json", "x+3", degree_bound=6)
    assert r["outcome"] == "confirmed"
    assert gspline.witness_check(DATA / "zx_pasted_cycles.json", "0")["outcome"] == "rejected"


def test_brute_force_over_z6():
    r = gspline.udp_brute(DATA / "cycle_z6.json")
    assert r["verdict"] == "holds"
    assert r["splines"] > 0


def test_transport_mirror():
    src = gspline.load(DATA / "zx_pasted_cycles.json")
    dst = gspline.load(DATA / "zx_pasted_cycles_mirror.json")
    iso = gspline.load(DATA / "zx_mirror_iso.json")
    assert gspline.verify_iso(src, dst, iso)[0] == "valid"
    rho = {"graph": src, "values": {
        "u": "x^2+6x-9", "a": "x^2+3x-9", "b": "x^2+2x-9", "z": "x^2-9", "c": "x+3", "d": "x-3", "w": "0"}}
    assert gspline.verify(rho) == "valid"
    gamma = gspline.transport(rho, dst, iso)
    assert gspline.verify(gamma) == "valid"
    assert gamma["values"]["u"] == [-9, -6, 1]


def test_errors_carry_codes():
    g = gspline.load(DATA / "path10.json")
    with pytest.raises(gspline.GsplineError) as e:
        gspline.intersection(g, "u", "nope")
    assert gspline.error_code(e.value) == "UnknownVertex"


def test_cli_entry():
    code, out, _ = gspline.run_cli(["intersect", str(DATA / "cycle11.json")])
    assert (code, out) == (0, "⟨2⟩\n")
