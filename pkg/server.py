# server.py: qhopf HTTP backend (FastAPI)
# Local deploy: python run.py  → serves http://127.0.0.1:8377/api/docs
import asyncio
from typing import Any, Dict, Optional

import numpy as np
from fastapi import Body, FastAPI, HTTPException
from fastapi.responses import JSONResponse

from qhopf import __version__, config, presets
from qhopf.checks import summary_table
from qhopf.cli import OBJECTS, _build, _verify_object
from qhopf.errors import QHopfError
from qhopf.serialize import structure_from_json, structure_to_json
from qhopf.suites import SUITES, run_suite, suites_for

app = FastAPI(title=f"qhopf {__version__}", docs_url="/api/docs")

config.setup_logging()

# ----------------------------------------------------------------------------
# Report cache keyed by (preset, suites, seed); suites are deterministic
# ----------------------------------------------------------------------------
_report_cache: Dict[tuple, Any] = {}


def clean_json(obj):
    """numpy scalars and tuples to plain JSON values."""
    if isinstance(obj, dict):
        return {str(k): clean_json(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [clean_json(v) for v in obj]
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    return obj


def ok(data):
    return JSONResponse(clean_json(data))


class _Args:
    """The attribute bag the CLI builders read."""

    def __init__(self, preset=None, group=None, cocycle=None, rfun=None, verify=True, seed=None):
        self.preset, self.group, self.cocycle, self.rfun = preset, group, cocycle, rfun
        self.no_verify = not verify
        self.seed = config.SEED if seed is None else seed


def _agreement(report):
    out = []
    for info in report.get("informational", []):
        table = summary_table(info)
        out.append({"name": info["name"], "rows": table.to_dict(orient="records")})
    return out


# ============================ catalogue ============================

@app.get("/api/presets")
def list_presets():
    return ok({
        "presets": [
            {"name": p.name, "description": p.description, "kphi": p.has_kphi, "octonion": p.octonion,
             "suites": list(suites_for(p.name))}
            for p in presets.ALL_PRESETS.values()
        ],
        "suites": sorted(SUITES),
        "objects": list(OBJECTS),
    })


@app.get("/api/structure/{preset}/{obj}")
def structure(preset: str, obj: str):
    if preset not in presets.ALL_PRESETS:
        raise HTTPException(404, f"unknown preset {preset}")
    if obj not in OBJECTS:
        raise HTTPException(404, f"unknown object {obj}")
    try:
        return ok(structure_to_json(_build(obj, _Args(preset=preset, verify=False))))
    except QHopfError as exc:
        raise HTTPException(400, str(exc)) from exc


# ============================ verification ============================

@app.post("/api/suite")
async def suite(payload: dict = Body(...)):
    """Run suites on a preset; identical requests are served from the cache."""
    preset = payload.get("preset")
    if not preset:
        raise HTTPException(400, "preset required")
    names = tuple(payload.get("suites") or ())
    seed = int(payload.get("seed", config.SEED))
    key = (preset, names, seed)
    if key not in _report_cache:
        try:
            report = await asyncio.to_thread(run_suite, preset, names or None, seed)
        except QHopfError as exc:
            raise HTTPException(400, str(exc)) from exc
        _report_cache[key] = {"report": report, "agreement": _agreement(report)}
    return ok(_report_cache[key])


@app.post("/api/verify")
async def verify(payload: dict = Body(...), seed: Optional[int] = None):
    """Verify a structure dump posted as the request body."""
    try:
        obj = structure_from_json(payload)
        report = await asyncio.to_thread(_verify_object, obj, _Args(seed=seed))
    except QHopfError as exc:
        raise HTTPException(400, str(exc)) from exc
    return ok(report)


@app.get("/api/health")
def health():
    return ok({"ok": True, "version": __version__, "threads": config.THREADS, "seed": config.SEED})
