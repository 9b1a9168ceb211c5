"""Regenerates the fixture corpus under tests/fixtures from the kfam module.

Usage: PYTHONPATH=build/python python3 tools/make_fixtures.py [tests/fixtures]
"""

import pathlib
import sys

import kfam


def write(path, family, header=None):
    text = kfam.format_family(family)
    if header:
        text = header + "\n" + text
    path.write_text(text)


def main():
    out = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "tests/fixtures")
    out.mkdir(parents=True, exist_ok=True)

    for k in range(3, 7):
        write(out / f"t2_k{k}.fam", kfam.t2(k, 2 * k - 1))

    for n, k in [(7, 3), (8, 3), (9, 3), (9, 4), (10, 4), (11, 5)]:
        write(out / f"c3_n{n}_k{k}.fam", kfam.c3(n, k))

    ok, text, _ = kfam.run_cli(["search", "shiftdrop", "--n", "7", "--k", "3"])
    if ok != 0:
        raise SystemExit("shift witness search failed")
    import json

    w = json.loads(text)["results"]
    fam = kfam.Family(w["family"]["n"], w["family"]["members"])
    write(out / "shift_witness.fam", fam, f"# shift i={w['i']} j={w['j']}")

    lem = out / "lemmin"
    lem.mkdir(exist_ok=True)
    cases = [(m, 4, 4, True) for m in (8, 9, 10)]
    cases += [(m, s, k, False) for s in (3, 4) for k in (4, 5) for m in range(k + s, k + s + 3)]
    for m, s, k, inter in cases:
        res = kfam.lemmin_oracle(m, s, k, inter)
        for idx, h in enumerate(res["argmax"]):
            tag = "int" if inter else "all"
            write(lem / f"m{m}_s{s}_k{k}_{tag}_{idx}.fam", h, f"# best={res['best']}")


if __name__ == "__main__":
    main()
