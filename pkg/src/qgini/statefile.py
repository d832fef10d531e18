"""Reading and writing states as JSON documents.

A state file holds one of:

    {"dim": d, "kind": "pure", "amplitudes": [[re, im], ...]}        d pairs
    {"dim": d, "kind": "density", "entries": [[[re, im], ...], ...]} d rows of d pairs

Numbers are written with 17 significant digits, so a save/load cycle
reproduces every IEEE double exactly. Loading validates the document shape
(:class:`InvalidStateFile`) and then the physics invariants through the
ordinary :class:`StateVector` / density-matrix validation.
"""

import json
import os

import numpy as np

from qgini.errors import InvalidStateFile
from qgini.qsystem import DensityMatrix, StateVector, validate_density
from qgini.serialize import to_json

_KINDS = ("pure", "density")


def _pair(z: complex) -> list:
    return [float(z.real), float(z.imag)]


def dumps_state(state) -> str:
    """Serialize a StateVector or DensityMatrix to JSON text."""
    if isinstance(state, StateVector):
        doc = {
            "dim": state.dim,
            "kind": "pure",
            "amplitudes": [_pair(z) for z in state.amplitudes],
        }
    elif isinstance(state, DensityMatrix):
        doc = {
            "dim": state.dim,
            "kind": "density",
            "entries": [[_pair(z) for z in row] for row in state.entries],
        }
    else:
        raise TypeError(f"cannot serialize {type(state).__name__} as a state file")
    return to_json(doc) + "\n"


def loads_state(text: str):
    """Parse state-file text into a StateVector or DensityMatrix."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidStateFile(f"state file is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise InvalidStateFile("state file must hold a JSON object")
    try:
        dim = doc["dim"]
        kind = doc["kind"]
    except KeyError as exc:
        raise InvalidStateFile(f"state file is missing the {exc.args[0]!r} field") from exc
    if not isinstance(dim, int) or isinstance(dim, bool):
        raise InvalidStateFile(f"dim must be an integer, got {dim!r}")
    if kind not in _KINDS:
        raise InvalidStateFile(f"kind must be one of {_KINDS}, got {kind!r}")
    if kind == "pure":
        amplitudes = _complex_list(doc.get("amplitudes"), dim, "amplitudes")
        return StateVector(amplitudes)
    rows = doc.get("entries")
    if not isinstance(rows, list) or len(rows) != dim:
        raise InvalidStateFile(f"entries must be a list of {dim} rows")
    entries = np.array([_complex_list(row, dim, "entries row") for row in rows])
    return validate_density(entries)


def _complex_list(items, dim: int, what: str) -> np.ndarray:
    if not isinstance(items, list) or len(items) != dim:
        raise InvalidStateFile(f"{what} must be a list of {dim} [re, im] pairs")
    out = np.empty(dim, dtype=np.complex128)
    for i, pair in enumerate(items):
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in pair)
        ):
            raise InvalidStateFile(f"{what}[{i}] must be a [re, im] pair of numbers")
        out[i] = complex(pair[0], pair[1])
    return out


def save_state_file(path, state) -> None:
    """Write a state to `path` as JSON."""
    with open(os.fspath(path), "w", encoding="utf-8") as fh:
        fh.write(dumps_state(state))


def load_state_file(path):
    """Read a state file and return the validated StateVector or DensityMatrix."""
    with open(os.fspath(path), "r", encoding="utf-8") as fh:
        return loads_state(fh.read())
