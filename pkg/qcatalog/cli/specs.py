"""JSON documents describing states and observables

A complex number is written ``[re, im]`` (a bare real number is also accepted) and a
matrix is a row-major nested list. Examples::

    {"amplitudes": [[0.7071067811865476, 0], [0.7071067811865476, 0]]}
    {"basis": 1, "dim": 3}
    {"matrix": [[1, 0], [0, -1]]}
    {"name": "spin", "theta": 1.5707963267948966}
"""
import json
import os

import numpy as np

from ..exceptions import MalformedSpecError
from ..hilbert.observables import Observable, spectral_decompose
from ..hilbert.operators import create_observable, is_observable
from ..hilbert.states import StateVector

__all__ = ["load_document", "parse_complex", "parse_state", "parse_observable"]


def load_document(spec):
    """``spec`` may be a parsed document, a JSON string or the path of a JSON file."""
    if isinstance(spec, (dict, list)):
        return spec
    if not isinstance(spec, str) or not spec.strip():
        raise MalformedSpecError(f"Expected a JSON document or file path, but got {spec!r}.")
    if os.path.isfile(spec):
        with open(spec, "r", encoding="utf-8") as f:
            text = f.read()
    else:
        text = spec
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedSpecError(f"Invalid JSON in {spec!r}: {e}") from e


def parse_complex(value):
    if isinstance(value, bool):
        raise MalformedSpecError(f"Expected a number, but got {value!r}.")
    if isinstance(value, (int, float)):
        return complex(value)
    if isinstance(value, list) and len(value) == 2 and all(isinstance(v, (int, float)) for v in value):
        return complex(value[0], value[1])
    raise MalformedSpecError(f"Expected a number or an [re, im] pair, but got {value!r}.")


def parse_state(spec) -> StateVector:
    doc = load_document(spec)
    if isinstance(doc, list):
        doc = {"amplitudes": doc}
    if not isinstance(doc, dict):
        raise MalformedSpecError(f"A state document must be an object, but got {type(doc).__name__}.")
    try:
        if "basis" in doc:
            return StateVector.basis(int(doc["dim"]), int(doc["basis"]))
        amplitudes = doc["amplitudes"]
    except KeyError as e:
        raise MalformedSpecError(f"State document is missing the key {e}.") from e
    if not isinstance(amplitudes, list) or not amplitudes:
        raise MalformedSpecError("'amplitudes' must be a non-empty list.")
    vec = np.array([parse_complex(v) for v in amplitudes], dtype=np.complex128)
    return StateVector(vec, normalize=bool(doc.get("normalize", False)))


def parse_observable(spec) -> Observable:
    doc = load_document(spec)
    if isinstance(doc, list):
        doc = {"matrix": doc}
    if not isinstance(doc, dict):
        raise MalformedSpecError(f"An observable document must be an object, but got {type(doc).__name__}.")
    if "name" in doc:
        kwargs = {k: v for k, v in doc.items() if k != "name"}
        if not is_observable(doc["name"]):
            raise MalformedSpecError(f"Unknown observable {doc['name']}")
        try:
            return create_observable(doc["name"], **kwargs)
        except TypeError as e:
            raise MalformedSpecError(f"Bad arguments for observable {doc['name']}: {e}") from e
    if "matrix" not in doc:
        raise MalformedSpecError("Observable document needs either 'name' or 'matrix'.")
    rows = doc["matrix"]
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) and len(r) == len(rows) for r in rows):
        raise MalformedSpecError("'matrix' must be a square row-major nested list.")
    return spectral_decompose(np.array([[parse_complex(v) for v in r] for r in rows], dtype=np.complex128))
