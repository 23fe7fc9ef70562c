"""Command-line interface.

    anyon-optics run circuit.json [--engine exact] [--phi 1.0] [--output out.json]
    anyon-optics sweep-phi --grid 0:pi:50 [--output sweep.csv]
    anyon-optics sample circuit.json --shots 1000 --seed 1
    anyon-optics decompose --phi pi [--max-len 5] [--tabulated-bs13]
    anyon-optics verify [--level quick]

Exit codes: 0 success, 1 validation error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

import numpy as np

from . import __version__
from .documents import (
    amplitude_report,
    document_dict,
    dumps_report,
    load_document,
    parse_angle,
    parse_grid,
    sweep_csv,
)
from .encoded import c_phi_reference, search_decomposition, tabulated_cphi_matrix
from .entangling import ep_formula, local_invariants
from .exceptions import AnyonOpticsError, ConsistencyError, InvalidArgumentError
from .fock import AlgebraConfig, basis_label
from .optics import ENGINES, run_circuit
from .verify import run_verification

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_VERIFY_FAILED = 2

NORM_TOL = 1e-8

log = logging.getLogger("anyon_optics")


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        Path(output).write_text(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def cmd_run(args) -> int:
    doc = load_document(args.file, args.phi)
    out = run_circuit(doc.circuit, doc.input, args.engine)
    _emit(dumps_report(amplitude_report(out, args.engine, doc.circuit.phi)), args.output)
    return EXIT_OK


def sweep_rows(grid: List[float]):
    for phi in grid:
        ep = local_invariants(c_phi_reference(phi).encoded_matrix).ep
        formula = ep_formula(phi)
        yield phi, ep, formula, abs(ep - formula)


def cmd_sweep_phi(args) -> int:
    grid = parse_grid(args.grid)
    _emit(sweep_csv(sweep_rows(grid)).rstrip("\n"), args.output)
    return EXIT_OK


def sample_counts(amplitudes: dict, shots: int, seed: Optional[int]) -> dict:
    """Draw ``shots`` Fock-basis outcomes with probabilities |amplitude|^2."""
    if shots < 1:
        raise InvalidArgumentError(f"shots must be at least 1, got {shots}")
    labels = sorted(amplitudes, reverse=True)
    probs = np.array([abs(amplitudes[k]) ** 2 for k in labels])
    if abs(probs.sum() - 1.0) > NORM_TOL:
        raise ConsistencyError(f"state norm^2 is {probs.sum():.12f}, expected 1")
    rng = np.random.default_rng(seed)
    counts = rng.multinomial(shots, probs / probs.sum())
    return {k: int(c) for k, c in zip(labels, counts) if c}


def cmd_sample(args) -> int:
    doc = load_document(args.file, args.phi)
    out = run_circuit(doc.circuit, doc.input, args.engine)
    counts = sample_counts({basis_label(b): a for b, a in out.items()}, args.shots, args.seed)
    _emit(json.dumps({"shots": args.shots, "seed": args.seed, "counts": counts}, indent=2), args.output)
    return EXIT_OK


def cmd_decompose(args) -> int:
    phi = parse_angle(args.phi)
    cfg = AlgebraConfig(4, phi)
    if args.target:
        raw = json.loads(Path(args.target).read_text())
        target = np.array([[complex(*entry) for entry in row] for row in raw])
    else:
        target = tabulated_cphi_matrix(phi)
    result = search_decomposition(target, max_len=args.max_len, cfg=cfg,
                                  tabulated_bs13=args.tabulated_bs13)
    doc = document_dict(result.circuit, (1, 0, 1, 0))
    report = {"found": result.found, "residual": result.residual, "circuit": doc, "notes": result.notes}
    _emit(json.dumps(report, indent=2), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    checks = run_verification(args.level)
    lines = []
    for check in checks:
        lines.append(check.line())
        lines.extend(f"    {note}" for note in check.notes)
    failed = [c for c in checks if not c.passed]
    lines.append(f"{len(checks) - len(failed)}/{len(checks)} checks passed")
    _emit("\n".join(lines), args.output)
    return EXIT_VERIFY_FAILED if failed else EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="anyon-optics", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def circuit_args(p):
        p.add_argument("file", help="circuit document (JSON)")
        p.add_argument("--engine", choices=ENGINES, default="analytic")
        p.add_argument("--phi", type=float, default=None, help="override the document's phi (radians)")

    p = sub.add_parser("run", help="simulate a circuit document and print amplitudes")
    circuit_args(p)
    p.add_argument("--output")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("sweep-phi", help="entangling power of C(phi) over a phi grid (CSV)")
    p.add_argument("--grid", default="0:pi:50", help="start:stop:count, e.g. 0:pi:50")
    p.add_argument("--output")
    p.set_defaults(func=cmd_sweep_phi)

    p = sub.add_parser("sample", help="sample Fock-basis measurement outcomes")
    circuit_args(p)
    p.add_argument("--shots", type=int, default=1000)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--output")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("decompose", help="search beam-splitter sequences for a 6x6 window gate")
    p.add_argument("--phi", default="pi", help="statistical angle; accepts e.g. 1.0, pi/2")
    p.add_argument("--target", help="JSON 6x6 matrix of [re, im] pairs (default: C(phi))")
    p.add_argument("--max-len", type=int, default=5)
    p.add_argument("--tabulated-bs13", action="store_true",
                   help="use the published BS13 matrix instead of the exact one")
    p.add_argument("--output")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--level", choices=("quick", "full"), default="full")
    p.add_argument("--output")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # usage errors, --help, --version
        return exc.code if isinstance(exc.code, int) else EXIT_INVALID
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (AnyonOpticsError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
