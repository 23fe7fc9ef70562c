"""JSON circuit documents, amplitude reports and sweep CSV files.

Circuit document::

    {"modes": 3, "phi": 1.0, "input": [1, 1, 0],
     "elements": [{"type": "bs", "modes": [1, 3], "theta": 0.785398},
                  {"type": "ps", "mode": 2, "theta": 0.1}]}

Modes are 1-based, angles in radians. Basis-state keys in reports print mode 1
leftmost. Floats are written with ``repr`` precision, so a report read back
reproduces its amplitudes bit for bit.
"""

from __future__ import annotations

import csv
import io
import json
import math
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .exceptions import DocumentError, InvalidArgumentError
from .fock import BasisState, FockVector, basis_label, parse_label
from .optics import Circuit, OpticalElement

SWEEP_HEADER = ("phi", "ep_invariants", "ep_formula", "abs_diff")


@dataclass
class CircuitDocument:
    circuit: Circuit
    input: BasisState


def _number(value, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise DocumentError(f"{where}: expected a number, got {value!r}")
    if not math.isfinite(value):
        raise DocumentError(f"{where}: must be finite")
    return float(value)


def _integer(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(f"{where}: expected an integer, got {value!r}")
    return value


def parse_document(data: Union[str, dict], phi_override: Optional[float] = None) -> CircuitDocument:
    """Validate a circuit document given as JSON text or an already-decoded dict."""
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise DocumentError("document root must be a JSON object")
    for key in ("modes", "input", "elements"):
        if key not in data:
            raise DocumentError(f"{key}: missing required field")

    m = _integer(data["modes"], "modes")
    if m < 1:
        raise DocumentError("modes: must be at least 1")
    phi = _number(data.get("phi", 0.0), "phi") if phi_override is None else float(phi_override)
    if not 0.0 <= phi <= math.pi:
        raise DocumentError(f"phi: must lie in [0, pi], got {phi}")

    bits = data["input"]
    if not isinstance(bits, list) or len(bits) != m:
        raise DocumentError(f"input: expected a list of {m} occupations")
    for k, b in enumerate(bits):
        if isinstance(b, bool) or b not in (0, 1):
            raise DocumentError(f"input[{k}]: occupation must be 0 or 1, got {b!r}")

    if not isinstance(data["elements"], list):
        raise DocumentError("elements: expected a list")
    elements = []
    for k, raw in enumerate(data["elements"]):
        where = f"elements[{k}]"
        if not isinstance(raw, dict):
            raise DocumentError(f"{where}: expected an object")
        kind = raw.get("type")
        theta = _number(raw.get("theta"), f"{where}.theta")
        if kind == "ps":
            mode = _integer(raw.get("mode"), f"{where}.mode")
            if not 1 <= mode <= m:
                raise DocumentError(f"{where}.mode: {mode} outside 1..{m}")
            elements.append(OpticalElement.ps(mode, theta))
        elif kind == "bs":
            pair = raw.get("modes")
            if not isinstance(pair, list) or len(pair) != 2:
                raise DocumentError(f"{where}.modes: expected [i, j]")
            i = _integer(pair[0], f"{where}.modes[0]")
            j = _integer(pair[1], f"{where}.modes[1]")
            if not 1 <= i < j <= m:
                raise DocumentError(f"{where}.modes: need 1 <= i < j <= {m}, got [{i}, {j}]")
            elements.append(OpticalElement.bs(i, j, theta))
        else:
            raise DocumentError(f"{where}.type: expected 'ps' or 'bs', got {kind!r}")
    return CircuitDocument(Circuit(m, phi, elements), tuple(bits))


def load_document(path: Union[str, Path], phi_override: Optional[float] = None) -> CircuitDocument:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc.strerror}") from None
    return parse_document(text, phi_override)


def document_dict(circuit: Circuit, bits: Sequence[int]) -> dict:
    elements = []
    for e in circuit.elements:
        if e.kind == "ps":
            elements.append({"type": "ps", "mode": e.modes[0], "theta": e.theta})
        else:
            elements.append({"type": "bs", "modes": list(e.modes), "theta": e.theta})
    return {"modes": circuit.m, "phi": circuit.phi, "input": list(bits), "elements": elements}


def amplitude_report(v: FockVector, engine: str, phi: float) -> dict:
    order = sorted(v.amplitudes, reverse=True)
    return {
        "modes": v.m,
        "phi": phi,
        "engine": engine,
        "norm": v.norm(),
        "amplitudes": {basis_label(b): [v[b].real, v[b].imag] for b in order},
    }


def dumps_report(report: dict) -> str:
    return json.dumps(report, indent=2)


def read_amplitudes(report: Union[str, dict]) -> Dict[str, complex]:
    if isinstance(report, str):
        report = json.loads(report)
    return {k: complex(re_, im) for k, (re_, im) in report["amplitudes"].items()}


def report_vector(report: Union[str, dict]) -> FockVector:
    amps = read_amplitudes(report)
    m = len(next(iter(amps))) if amps else 0
    return FockVector(m, {parse_label(k): a for k, a in amps.items()})


_ANGLE = re.compile(r"^([+-]?(?:\d+\.?\d*|\.\d+)?)\*?pi(?:/(\d+\.?\d*))?$")


def parse_angle(token: str) -> float:
    """Parse '0.5', 'pi', '-pi/2', '3pi/4' or '3*pi/4'."""
    token = token.strip().lower()
    try:
        return float(token)
    except ValueError:
        pass
    match = _ANGLE.match(token)
    if not match:
        raise InvalidArgumentError(f"cannot parse angle {token!r}")
    coeff, denom = match.groups()
    if coeff in ("", "+"):
        factor = 1.0
    elif coeff == "-":
        factor = -1.0
    else:
        factor = float(coeff)
    return factor * math.pi / (float(denom) if denom else 1.0)


def parse_grid(spec: str) -> List[float]:
    """'start:stop:count' -> count evenly spaced points, endpoints included (count >= 2)."""
    parts = spec.split(":")
    if len(parts) != 3:
        raise InvalidArgumentError(f"grid must look like start:stop:count, got {spec!r}")
    start, stop = parse_angle(parts[0]), parse_angle(parts[1])
    try:
        count = int(parts[2])
    except ValueError:
        raise InvalidArgumentError(f"grid count must be an integer, got {parts[2]!r}") from None
    if count < 2:
        raise InvalidArgumentError(f"grid needs at least 2 points, got {count}")
    step = (stop - start) / (count - 1)
    return [start + k * step for k in range(count - 1)] + [stop]


def sweep_csv(rows: Iterable[Tuple[float, float, float, float]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SWEEP_HEADER)
    for row in rows:
        writer.writerow([repr(float(x)) for x in row])
    return buf.getvalue()


def read_sweep_csv(text: str) -> List[Dict[str, float]]:
    return [{k: float(v) for k, v in row.items()} for row in csv.DictReader(io.StringIO(text))]
