"""JSON state files.

Schema::

    {"dA": int, "dB": int, "kind": "density" | "pure", "data": [[re, im], ...]}

``data`` holds the ``dA*dB`` amplitudes of a pure state, or the ``(dA*dB)**2``
entries of a density matrix flattened row-major, each as a ``[re, im]`` pair.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .errors import StateError
from .states import BipartiteDims, DensityMatrix, PureState, validate_density


class StateFormatError(StateError):
    pass


def state_to_dict(state: PureState | DensityMatrix) -> dict:
    if isinstance(state, PureState):
        kind, flat = "pure", state.amplitudes
    elif isinstance(state, DensityMatrix):
        kind, flat = "density", state.matrix.reshape(-1)
    else:
        raise TypeError(f"cannot serialize {type(state).__name__}")
    return {
        "dA": state.dims.dA,
        "dB": state.dims.dB,
        "kind": kind,
        "data": [[float(z.real), float(z.imag)] for z in flat],
    }


def state_from_dict(obj) -> PureState | DensityMatrix:
    if not isinstance(obj, dict):
        raise StateFormatError("state file must contain a JSON object")
    missing = {"dA", "dB", "kind", "data"} - obj.keys()
    if missing:
        raise StateFormatError(f"missing fields: {sorted(missing)}")
    dA, dB, kind = obj["dA"], obj["dB"], obj["kind"]
    if not all(isinstance(v, int) and not isinstance(v, bool) for v in (dA, dB)):
        raise StateFormatError("dA and dB must be integers")
    dims = BipartiteDims(dA, dB)
    try:
        pairs = np.asarray(obj["data"], dtype=float)
    except (TypeError, ValueError) as exc:
        raise StateFormatError(f"data must be a list of [re, im] pairs: {exc}") from None
    if pairs.ndim != 2 or pairs.shape[1] != 2:
        raise StateFormatError("data must be a list of [re, im] pairs")
    flat = pairs[:, 0] + 1j * pairs[:, 1]
    if kind == "pure":
        return PureState(dims, flat)
    if kind == "density":
        n = dims.total
        if flat.size != n * n:
            raise StateFormatError(f"density data needs {n * n} entries, got {flat.size}")
        return validate_density(flat.reshape(n, n), dims)
    raise StateFormatError(f"kind must be 'pure' or 'density', got {kind!r}")


def as_density(state: PureState | DensityMatrix) -> DensityMatrix:
    return state.projector() if isinstance(state, PureState) else state


def dumps_state(state) -> str:
    return json.dumps(state_to_dict(state))


def loads_state(text: str):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StateFormatError(f"invalid JSON: {exc}") from None
    return state_from_dict(obj)


def save_state(path, state) -> None:
    Path(path).write_text(dumps_state(state) + "\n")


def load_state(path):
    return loads_state(Path(path).read_text())
