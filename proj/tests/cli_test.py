#!/usr/bin/env python3
"""End-to-end checks of the command-line interface."""

import json
import os
import subprocess
import sys
import tempfile

CLI = sys.argv[1] if len(sys.argv) > 1 else "build/tools/ising"
failures = 0


def run(args, expect_code=0):
    global failures
    proc = subprocess.run([CLI] + args, capture_output=True, text=True)
    if proc.returncode != expect_code:
        print(f"FAIL {' '.join(args)}: exit {proc.returncode} != {expect_code}\n"
              f"  stderr: {proc.stderr.strip()}")
        failures += 1
        return None
    return proc.stdout.strip()


def check(label, got, want):
    global failures
    if got != want:
        print(f"FAIL {label}:\n  got  {got}\n  want {want}")
        failures += 1
    else:
        print(f"pass {label}")


with tempfile.TemporaryDirectory() as tmp:
    k2 = os.path.join(tmp, "k2.json")
    with open(k2, "w") as f:
        f.write('{"n":2,"edges":[[0,1]]}')
    k3 = os.path.join(tmp, "k3.json")
    with open(k3, "w") as f:
        f.write('{"n":3,"edges":[[0,1],[1,2],[0,2]]}')

    # Byte-exact bivariate output.
    check("compute --bivariate k2", run(["compute", "--bivariate", k2]),
          '{"vars":["t","y"],"terms":[[[1,0],"1"],[[0,1],"2"],[[1,2],"1"]]}')

    # Trivariate coefficients sum to 2^n at (1,1,1).
    out = json.loads(run(["compute", k2]))
    assert out["vars"] == ["x", "y", "z"]
    total = sum(int(c) for _, c in out["terms"])
    check("compute k2 total", total, 4)

    # Point evaluation.
    out = json.loads(run(["compute", "--eval", "2,3,5", k2]))
    check("compute --eval", out["value"], "29")

    # Constrained sum: forcing both endpoints of the edge leaves t y^2.
    out = json.loads(run(["compute", "--constrain", "0,1", "", k2]))
    check("compute --constrain", out["terms"], [[[1, 2], "1"]])

    # One endpoint in, one out: the edge crosses, leaving plain y.
    out = json.loads(run(["compute", "--constrain", "0", "1", k2]))
    check("compute --constrain split", out["terms"], [[[0, 1], "1"]])

    # Max cut, byte-exact.
    check("maxcut k3", run(["maxcut", k3]), '{"maxcut":2,"count":6}')

    # Gadget emission round-trips through compute.
    lad = run(["gadget", "L", "--height", "2"])
    g = json.loads(lad)
    check("gadget L counts", (g["n"], len(g["edges"])), (5, 8))

    phi = json.loads(run(["gadget", "phi", "--set", "1,3,4"]))
    check("gadget phi n", phi["n"], 13)

    r = json.loads(run(["gadget", "R", "--graph", k2, "--l", "1", "--q", "2"]))
    check("gadget R counts", (r["n"], len(r["edges"])), (46, 72))

    # k-expression pipeline.
    kexpr = os.path.join(tmp, "k2.kexpr")
    with open(kexpr, "w") as f:
        f.write("e(1,2,u(v(1),v(2)))")
    out = json.loads(run(["cwdp", "--kexpr", kexpr, "--project"]))
    want = json.loads(run(["compute", k2]))
    check("cwdp --project equals compute", out, want)

    # Verification suites: discovery, one passing id, unknown-id usage error.
    ids = json.loads(run(["verify", "list"]))
    check("verify list has maxcut", "maxcut" in ids, True)
    out = json.loads(run(["verify", "lemma-3.2"]))
    check("verify lemma-3.2", out[0]["pass"], True)
    run(["verify", "lemma-9.9"], expect_code=2)

    # The exclude-B convention drops the forced vertices from the y-count.
    out = json.loads(run(["compute", "--constrain", "0,1", "", "--exclude-b", k2]))
    check("compute --exclude-b", out["terms"], [[[1, 0], "1"]])

    # Reductions.
    out = json.loads(run(["reduce", "--point", "2,3", "--graph", k2, "--pipeline", "y"]))
    check("reduce y polynomial", out["polynomial"]["terms"],
          [[[0], "2"], [[1], "2"], [[2], "2"]])
    check("reduce y budget", out["certificate"]["max_query_vertices"] <= 22, True)

    out = json.loads(run(["reduce", "--point", "2,1", "--graph", k3, "--pipeline", "t"]))
    check("reduce t polynomial", out["polynomial"]["terms"], [[[1], "6"], [[3], "2"]])

    # delta = -1 goes through the pendant transform.
    out = json.loads(run(["reduce", "--point", "3,-1", "--graph", k2, "--pipeline", "t"]))
    check("reduce t pendant route", out["polynomial"]["terms"], [[[0], "2"], [[1], "2"]])
    check("reduce t pendant budget", out["certificate"]["max_query_vertices"], 8)

    # Digit-indexed family pool via --m0/--delta-param.
    k1 = os.path.join(tmp, "k1.json")
    with open(k1, "w") as f:
        f.write('{"n":1,"edges":[]}')
    out = json.loads(run(["reduce", "--point", "2,3", "--graph", k1, "--pipeline", "y",
                          "--m0", "2", "--delta-param", "2", "--qprime", "2"]))
    check("reduce y family pool", out["certificate"]["families"], [[4, 6], [2, 8]])
    check("reduce y family poly", out["polynomial"]["terms"], [[[0], "1"], [[1], "1"]])

    out = json.loads(run(["reduce", "--point", "0,5", "--graph", k3, "--pipeline", "special"]))
    check("reduce special K3 gamma=0", out["value"], "0")

    k4 = os.path.join(tmp, "k4.json")
    with open(k4, "w") as f:
        f.write('{"n":4,"edges":[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]}')
    out = json.loads(run(["reduce", "--point", "2,3,5", "--graph", k4, "--pipeline", "grid"]))
    want = json.loads(run(["compute", "--bivariate", k4]))
    check("reduce grid recovers K4", out["polynomial"], want)

    out = json.loads(run(["reduce", "--point", "2", "--pipeline", "hfamily", "--qprime", "4",
                          "--graph", k2]))
    check("reduce hfamily certificate", all(out["certificate"].values()), True)

    # Usage errors exit with 2.
    run(["compute", os.path.join(tmp, "missing.json")], expect_code=2)
    badpoint = run(["reduce", "--point", "1,0", "--graph", k2, "--pipeline", "y"],
                   expect_code=2)

print(f"{failures} failures")
sys.exit(1 if failures else 0)
