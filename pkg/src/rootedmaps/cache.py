"""On-disk cache of computed tables.

One canonical JSON document per directory. All big integers and rationals
are decimal strings; keys are sorted and no insignificant whitespace is
written, so loading and re-saving an unchanged table set reproduces the
file byte for byte.
"""

from __future__ import annotations

import json
import os
import tempfile
from fractions import Fraction
from pathlib import Path

from . import asymptotics
from .arith import PartialFractionForm, UniPoly
from .errors import RootedMapsError
from .genus_series import GenusSeries
from .recurrences import RecurrenceEngine

SCHEMA_VERSION = 1
FILENAME = "rootedmaps-cache.json"


class CacheError(RootedMapsError):
    pass


def _form_to_json(form: PartialFractionForm) -> dict:
    return {
        "poly": [str(c) for c in form.poly.coeffs],
        "poles": [[a, k, str(c)] for (a, k), c in sorted(form.poles.items())],
    }


def _form_from_json(doc: dict) -> PartialFractionForm:
    poly = UniPoly([Fraction(c) for c in doc["poly"]])
    poles = {(int(a), int(k)): Fraction(c) for a, k, c in doc["poles"]}
    return PartialFractionForm(poly, poles)


def build_document(engine: RecurrenceEngine, series: GenusSeries) -> dict:
    state = engine.export_state()
    forms = series.export_state()
    return {
        "schemaVersion": SCHEMA_VERSION,
        "tables": {
            "Q": [[str(v) for v in row] for row in state["Q"]],
            "Qpoly": [[[str(c) for c in poly] for poly in row] for row in state["Qpoly"]],
            "M": {
                "frontier": state["m_frontier"],
                "entries": {f"{g}:{i}:{j}": str(v) for (g, i, j), v in state["M"].items()},
            },
            "R_g": {str(g): _form_to_json(f) for g, f in forms.items()},
            "tau": [str(t) for t in asymptotics.tau_table()],
        },
    }


def apply_document(doc: dict, engine: RecurrenceEngine, series: GenusSeries) -> None:
    version = doc.get("schemaVersion")
    if version != SCHEMA_VERSION:
        raise CacheError(f"cache schema version {version!r} does not match {SCHEMA_VERSION}")
    t = doc["tables"]
    m_entries = {}
    for key, v in t["M"]["entries"].items():
        g, i, j = (int(x) for x in key.split(":"))
        m_entries[(g, i, j)] = int(v)
    engine.import_state({
        "Q": [[int(v) for v in row] for row in t["Q"]],
        "Qpoly": [[[int(c) for c in poly] for poly in row] for row in t["Qpoly"]],
        "M": m_entries,
        "m_frontier": int(t["M"]["frontier"]),
    })
    series.import_state({int(g): _form_from_json(f) for g, f in t["R_g"].items()})
    asymptotics.load_tau_table([Fraction(x) for x in t["tau"]])


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=True) + "\n"


def load(directory: str | os.PathLike, engine: RecurrenceEngine, series: GenusSeries) -> bool:
    """Seed the tables from ``directory``; returns False when no cache exists yet."""
    path = Path(directory) / FILENAME
    if not path.exists():
        return False
    try:
        doc = json.loads(path.read_text(encoding="ascii"))
    except (OSError, ValueError) as exc:
        raise CacheError(f"cannot read cache {path}: {exc}") from exc
    apply_document(doc, engine, series)
    return True


def save(directory: str | os.PathLike, engine: RecurrenceEngine, series: GenusSeries) -> Path:
    """Write the cache atomically (temporary file, then rename)."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    text = dumps(build_document(engine, series))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".cache-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, directory / FILENAME)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return directory / FILENAME
