"""JSON file formats for frames, matrices, vectors, and reports.

Complex scalars are encoded as [re, im] pairs so the files are trivial to
produce and consume from any other language. Frames are stored as
{"dim": d, "vectors": [[[re, im], ...], ...]} in index order; matrices as
{"rows": r, "cols": c, "entries": [[re, im], ...]} row-major; vectors are
single-column matrices. Writes are atomic (temp file + rename).
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import is_dataclass

import numpy as np

from .errors import ParseError
from .frames import Frame, make_frame
from .linalg import as_complex_matrix, as_complex_vector

__all__ = [
    "frame_to_obj",
    "frame_from_obj",
    "matrix_to_obj",
    "matrix_from_obj",
    "vector_to_obj",
    "vector_from_obj",
    "report_to_obj",
    "load_json",
    "dump_json",
    "dumps_json",
]


def _pair(z: complex) -> list[float]:
    return [float(z.real), float(z.imag)]


def _from_pair(p) -> complex:
    if not (isinstance(p, (list, tuple)) and len(p) == 2):
        raise ParseError(f"expected a [re, im] pair, got {p!r}")
    try:
        return complex(float(p[0]), float(p[1]))
    except (TypeError, ValueError) as exc:
        raise ParseError(f"non-numeric complex pair {p!r}") from exc


def frame_to_obj(f: Frame) -> dict:
    return {
        "dim": f.dim,
        "vectors": [[_pair(z) for z in f.matrix[:, k]] for k in range(f.size)],
    }


def frame_from_obj(obj) -> Frame:
    try:
        dim = int(obj["dim"])
        vectors = [[_from_pair(p) for p in vec] for vec in obj["vectors"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed frame object: {exc}") from exc
    return make_frame(dim, vectors)


def matrix_to_obj(m) -> dict:
    m = as_complex_matrix(m)
    return {
        "rows": m.shape[0],
        "cols": m.shape[1],
        "entries": [_pair(z) for z in m.reshape(-1)],
    }


def matrix_from_obj(obj) -> np.ndarray:
    try:
        rows = int(obj["rows"])
        cols = int(obj["cols"])
        entries = [_from_pair(p) for p in obj["entries"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed matrix object: {exc}") from exc
    if rows < 1 or cols < 1 or len(entries) != rows * cols:
        raise ParseError(
            f"matrix declares {rows}x{cols} but carries {len(entries)} entries"
        )
    return np.array(entries, dtype=np.complex128).reshape(rows, cols)


def vector_to_obj(v) -> dict:
    v = as_complex_vector(v)
    return matrix_to_obj(v.reshape(-1, 1))


def vector_from_obj(obj) -> np.ndarray:
    m = matrix_from_obj(obj)
    if 1 not in m.shape:
        raise ParseError(f"expected a vector (one row or one column), got {m.shape}")
    return m.reshape(-1)


def _jsonable(value):
    if isinstance(value, np.ndarray):
        if value.ndim == 1:
            return vector_to_obj(value)
        return matrix_to_obj(value)
    if isinstance(value, (np.floating, np.integer)):
        return value.item()
    if isinstance(value, complex):
        return _pair(value)
    if is_dataclass(value) and not isinstance(value, type):
        return report_to_obj(value)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def report_to_obj(report) -> dict:
    """Serialize a report dataclass: booleans stay booleans, residuals stay
    floats, arrays become matrix/vector objects, nested reports recurse."""
    out = {}
    for name in report.__dataclass_fields__:
        out[name] = _jsonable(getattr(report, name))
    return out


def load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON in {path}: {exc}") from exc


def dumps_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def dump_json(obj, path) -> None:
    """Write JSON atomically: the target never holds a partial document."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(dumps_json(obj))
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise
