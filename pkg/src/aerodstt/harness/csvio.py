"""Deterministic CSV / JSON writers for experiment outputs.

Each CSV starts with a single `# config_hash=...` comment line followed
by a header row whose column names carry units. Floats are written with
repr (shortest round-trip form) so fixed inputs give bit-identical files.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np


def fmt(v) -> str:
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (float, np.floating)):
        return repr(float(v))
    if isinstance(v, np.integer):
        return str(int(v))
    return str(v)


def write_csv(path, header: list[str], rows, config_hash: str):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="\n") as fh:
        fh.write(f"# config_hash={config_hash}\n")
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(fmt(v) for v in row) + "\n")
    return str(path)


def write_json(path, payload: dict, config_hash: str):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    payload = {"config_hash": config_hash, **payload}
    with open(path, "w", newline="\n") as fh:
        json.dump(payload, fh, indent=1, sort_keys=True)
        fh.write("\n")
    return str(path)
