#!/usr/bin/env python3
"""qhopf smoke test: run on YOUR machine to confirm everything boots.

    python smoke_test.py

It imports the whole package (FastAPI server + CLI), builds the smallest
twisted double, transmutes and bosonises it, and prints a clear PASS/FAIL.
If this prints ALL CHECKS PASSED, the install is healthy.
"""
import sys
import time

OK, FAIL = "  [PASS]", "  [FAIL]"
problems = []


def check(name, fn):
    try:
        msg = fn()
        print(f"{OK} {name}: {msg}")
    except Exception as e:
        print(f"{FAIL} {name}: {e}")
        problems.append(name)


def t_imports():
    import server  # noqa  (pulls in the package, fastapi, everything)
    return "server + qhopf import cleanly"


def t_double():
    from qhopf import presets
    from qhopf.constructions import verify_structure
    H = presets.double("z2").algebra
    rep = verify_structure(H, "smoke")
    if not rep["passed"]:
        raise RuntimeError(f"{H.name} failed {[k for k, c in rep['checks'].items() if c['failed']]}")
    return f"{H.name} (dim {H.dim}) passes {len(rep['checks'])} identities"


def t_pipeline():
    from qhopf import presets
    from qhopf.bosonise import bosonise
    from qhopf.quasihopf import verify_quasibialgebra
    from qhopf.transmute import transmute
    H = presets.double("z2").algebra
    Hbar = transmute(H, verify=True)
    bos = bosonise(Hbar, verify=False)
    rep = verify_quasibialgebra(bos.result)
    if not rep["passed"]:
        raise RuntimeError("bosonisation is not a quasi-bialgebra")
    return f"{Hbar.name} -> {bos.result.name} (dim {bos.result.dim})"


if __name__ == "__main__":
    print("\n=== qhopf smoke test ===")
    t0 = time.time()
    check("imports", t_imports)
    check("twisted double", t_double)
    check("transmute + bosonise", t_pipeline)
    print(f"\nFinished in {time.time()-t0:.1f}s")
    if problems:
        print("RESULT:  SOME CHECKS FAILED ->", ", ".join(problems))
        sys.exit(1)
    print("RESULT:  ALL CHECKS PASSED")
