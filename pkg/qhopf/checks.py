# qhopf/checks.py: verification reports, sampling policy and the check runner.
#
# A report is a plain dict:
#   {"name": str, "passed": bool,
#    "checks": {identity: {"checked": int, "failed": int, "unit": str}},
#    "violations": [{"identity", "witness", "lhs", "rhs"}, ...]}
# so it serializes to JSON as-is for the CLI and the API.
import logging
from concurrent.futures import ThreadPoolExecutor

import numpy as np
import pandas as pd

from qhopf import config
from qhopf.errors import VerificationError
from qhopf.scalars import Scalar

log = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Report construction
# ---------------------------------------------------------------------------

def new_report(name, **meta):
    report = {"name": name, "passed": True, "checks": {}, "violations": []}
    report.update(meta)
    return report


def record(report, identity, ok, witness=None, lhs=None, rhs=None, unit="cases"):
    """Count one evaluation of `identity`; keep the witness when it fails."""
    check = report["checks"].setdefault(identity, {"checked": 0, "failed": 0, "unit": unit})
    check["checked"] += 1
    if ok:
        return True
    check["failed"] += 1
    report["passed"] = False
    if len(report["violations"]) < config.MAX_WITNESSES:
        report["violations"].append({
            "identity": identity,
            "witness": render(witness),
            "lhs": render(lhs),
            "rhs": render(rhs),
        })
    return False


def compare(report, identity, lhs, rhs, witness=None, unit="cases"):
    """record() with lhs == rhs; tensors are narrowed to the first differing entry."""
    if lhs == rhs:
        return record(report, identity, True, unit=unit)
    if hasattr(lhs, "first_difference") and hasattr(rhs, "legs"):
        lhs, rhs = lhs.first_difference(rhs)
    return record(report, identity, False, witness, lhs, rhs, unit)


def merge(name, reports, **meta):
    """Fold sub-reports into one; identities are prefixed by the sub-report name."""
    out = new_report(name, **meta)
    out["parts"] = []
    for rep in reports:
        out["parts"].append(rep["name"])
        out["passed"] = out["passed"] and rep["passed"]
        for identity, counts in rep["checks"].items():
            out["checks"][f"{rep['name']}: {identity}"] = dict(counts)
        for v in rep["violations"]:
            if len(out["violations"]) < config.MAX_WITNESSES:
                out["violations"].append(dict(v, identity=f"{rep['name']}: {v['identity']}"))
    return out


def require(report, exc_type=VerificationError, message=None):
    """Raise exc_type carrying the report unless it passed."""
    if not report["passed"]:
        failed = [k for k, c in report["checks"].items() if c["failed"]]
        raise exc_type(message or f"{report['name']} failed: {', '.join(failed)}", report)
    return report


def render(value):
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    if isinstance(value, Scalar):
        return str(value)
    if hasattr(value, "render"):
        return value.render()
    if isinstance(value, dict):
        return {str(k): render(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [render(v) for v in value]
    if isinstance(value, np.integer):
        return int(value)
    return str(value)


# ---------------------------------------------------------------------------
# Tables
# ---------------------------------------------------------------------------

def summary_table(report):
    rows = [
        {"identity": identity, "checked": c["checked"], "failed": c["failed"],
         "unit": c.get("unit", "cases")}
        for identity, c in report["checks"].items()
    ]
    df = pd.DataFrame(rows, columns=["identity", "checked", "failed", "unit"])
    if not df.empty:
        df["agreement_pct"] = (100.0 * (df["checked"] - df["failed"]) / df["checked"]).round(2)
    return df


def format_report(report):
    lines = [f"{report['name']}: {'PASS' if report['passed'] else 'FAIL'}"]
    for identity, c in report["checks"].items():
        ok = c["checked"] - c["failed"]
        lines.append(f"  {identity}: {ok}/{c['checked']} {c.get('unit', 'cases')} pass")
    for v in report["violations"]:
        lines.append(f"  ! {v['identity']} at {v['witness']}: {v['lhs']} != {v['rhs']}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# Sampling
# ---------------------------------------------------------------------------

def basis_tuples(dim, arity, samples=None, seed=None, exhaustive_dim=None):
    """All index tuples when dim is small enough, otherwise seeded random ones."""
    limit = config.EXHAUSTIVE_DIM if exhaustive_dim is None else exhaustive_dim
    if dim <= limit:
        return np.ndindex(*([dim] * arity))
    rng = np.random.default_rng(config.SEED if seed is None else seed)
    count = samples or config.SAMPLES
    return (tuple(int(i) for i in row) for row in rng.integers(0, dim, size=(count, arity)))


def is_exhaustive(dim, exhaustive_dim=None):
    return dim <= (config.EXHAUSTIVE_DIM if exhaustive_dim is None else exhaustive_dim)


def grid_tuples(dims, exhaustive, samples=None, seed=None):
    """Index tuples over ranges of different sizes: all of them, or seeded random ones."""
    dims = tuple(int(d) for d in dims)
    if exhaustive:
        return np.ndindex(*dims)
    rng = np.random.default_rng(config.SEED if seed is None else seed)
    count = samples or config.SAMPLES
    cols = [rng.integers(0, d, size=count) for d in dims]
    return (tuple(int(c[k]) for c in cols) for k in range(count))


# ---------------------------------------------------------------------------
# Runner
# ---------------------------------------------------------------------------

def run_checks(tasks, threads=None):
    """Run (name, fn) pairs concurrently; a crashing check becomes a failed report."""

    def _run(task):
        name, fn = task
        try:
            return fn()
        except VerificationError as exc:
            return exc.report or _crashed(name, exc)
        except Exception as exc:  # noqa: BLE001
            log.exception("check %s crashed", name)
            return _crashed(name, exc)

    workers = max(1, threads or config.THREADS)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run, tasks))


def _crashed(name, exc):
    rep = new_report(name)
    record(rep, "completed", False, witness=type(exc).__name__, lhs=str(exc))
    return rep
