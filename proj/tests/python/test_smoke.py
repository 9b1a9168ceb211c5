"""Smoke tests for the kfam Python module. Runs under pytest or as a script."""

import json
import os
import pathlib
import sys
import tempfile

import kfam

FIXTURES = pathlib.Path(os.environ.get("KFAM_FIXTURES", pathlib.Path(__file__).parents[1] / "fixtures"))


def test_constructions_and_tau():
    f = kfam.c3(10, 4)
    assert len(f) == 61
    assert kfam.is_intersecting(f)
    assert kfam.covering_number(f)["tau"] == 3
    assert kfam.covering_number(kfam.t2(4, 7))["tau"] == 2
    assert kfam.size_c3(10, 4) == 61
    assert [1, 2, 3, 4] in kfam.t2(4, 7)


def test_big_integers_are_python_ints():
    assert kfam.binom(100, 50) == 100891344545564193334812497256
    assert kfam.hm_size(7, 3) == 13
    assert kfam.f_of_z(9, 3, 4, 2) == kfam.size_f2prime(9, 3, 4)
    assert kfam.count_hitting_sets(kfam.t2(4, 7), 2) == 13


def test_canonical_and_shift():
    a = kfam.Family(3, [[1, 2], [1, 3]])
    b = kfam.Family(3, [[2, 3], [2, 1]])
    assert kfam.canonical_form(a) == kfam.canonical_form(b)
    f = kfam.Family(7, [[1, 2, 3], [1, 2, 4], [3, 4, 5]])
    g = kfam.shift_family(f, 1, 3)
    assert len(g) == len(f)
    assert kfam.covering_number(g)["tau"] < kfam.covering_number(f)["tau"]


def test_errors_map_to_python_exceptions():
    for call in (lambda: kfam.c3(8, 4), lambda: kfam.shift_family(kfam.t2(4, 7), 2, 1)):
        try:
            call()
        except ValueError:
            pass
        else:
            raise AssertionError("expected ValueError")
    try:
        kfam.enumerate_minimal_tau2(13, 3)
    except RuntimeError:
        pass
    else:
        raise AssertionError("expected RuntimeError")


def test_oracles():
    r = kfam.max_intersecting_tau(7, 3, 3, all_optima=True)
    assert r["optimum"] == 10 and len(r["witnesses"]) == 7
    lem = kfam.lemmin_oracle(8, 4, 4, intersecting_only=True)
    assert lem["best"] == kfam.f_of_z(8, 4, 4, 3) + 3
    assert lem["argmax"] == [kfam.canonical_form(kfam.t2(4, 8))]
    assert all(len(h) <= 5 for h in kfam.enumerate_minimal_tau2(10, 4))


def test_peel_spread_switch():
    t = kfam.peel(kfam.c3(9, 4))
    assert t["coverage_holds"] and t["layer_bounds_hold"]
    spread, violator = kfam.is_r_spread(kfam.full_star(7, 3, 4), "3/2")
    assert not spread and violator == [4]
    s = kfam.switch_pipeline(kfam.c3(10, 4))
    assert s["completed"] and s["family"] == kfam.c3(10, 4)
    assert kfam.certify_grid("fprime3-gap", "k=4..6;s=4..k;m=k+s..k+s+2")["failed"] == 0


def test_io_and_cli():
    f = kfam.parse_family((FIXTURES / "t2_k4.fam").read_text())
    assert f == kfam.t2(4, 7)
    assert kfam.parse_family(kfam.format_family(f)) == f
    code, out, _ = kfam.run_cli(["tau", str(FIXTURES / "c3_n10_k4.fam")])
    assert code == 0 and json.loads(out)["results"]["tau"] == 3
    with tempfile.TemporaryDirectory() as d:
        path = os.path.join(d, "c3.fam")
        code, _, _ = kfam.run_cli(["construct", "c3", "--n", "9", "--k", "4", "-o", path])
        assert code == 0
        assert kfam.parse_family(pathlib.Path(path).read_text()) == kfam.c3(9, 4)
    code, _, err = kfam.run_cli(["construct", "c3", "--n", "8", "--k", "4"])
    assert code == 2 and err


if __name__ == "__main__":
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for t in tests:
        t()
        print("ok", t.__name__)
    print(f"{len(tests)} python smoke tests passed")
    sys.exit(0)
