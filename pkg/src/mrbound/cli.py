"""Command-line interface.

Subcommands
-----------
table         regenerate one of the benchmark tables (1: atomic units with
              matched/legacy/numerical columns; 2, 3: molecular eV columns)
spectrum      enumerate bound states for one parameter set
compare       closed-form vs. shooting-solver energies with per-row deltas
wavefunction  sample one normalized radial wavefunction

Exit codes: 0 success, 1 empty result / unbound state, 2 usage error,
3 numeric failure.  CSV output is byte-stable: fixed column order, fixed
decimal counts (7 for atomic units, 8 for eV), LF line endings.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from . import numerov
from .centrifugal import CASES, solve_coefficients
from .potential import PotentialParams
from .spectrum import (
    QuantumState,
    UnboundStateError,
    energy_level,
    enumerate_bound_states,
)
from .tables import (
    TABLE1_ALPHAS,
    TABLE23_ALPHA_LABELS,
    TABLE23_ALPHAS,
    TABLE_MOLECULES,
    table_cells,
)
from .units import (
    UnitSystem,
    energy_scale_eV,
    get_molecule,
    parse_constants_file,
    table_energy_eV,
)
from .wavefunction import radial_wavefunction

EXIT_OK = 0
EXIT_EMPTY = 1
EXIT_USAGE = 2
EXIT_NUMERIC = 3

_AU_FMT = "{:.7f}"
_EV_FMT = "{:.8f}"


class UsageError(ValueError):
    """Semantic flag error detected after argparse."""


def _fmt(value, fmt: str) -> str:
    return "" if value is None else fmt.format(value)


def _emit_csv(header: list[str], rows: list[list[str]], stream) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def _emit_json(command: str, parameters: dict, rows: list[dict], stream, summary=None) -> None:
    doc = {"schema_version": 1, "command": command, "parameters": parameters, "rows": rows}
    if summary is not None:
        doc["summary"] = summary
    json.dump(doc, stream, indent=2, sort_keys=True)
    stream.write("\n")


def _unit_system(args) -> UnitSystem:
    if getattr(args, "constants_file", None):
        return parse_constants_file(Path(args.constants_file))
    return UnitSystem()


def _resolve_A(raw: str, b: float) -> float:
    """A flag value: a number, or the literal '2b' meaning twice the active b."""
    if raw.strip().lower() == "2b":
        return 2.0 * b
    try:
        return float(raw)
    except ValueError:
        raise UsageError(f"--A expects a number or the literal '2b', got {raw!r}") from None


def _problem_from_args(args) -> tuple[PotentialParams, object]:
    if args.inv_b <= 0:
        raise UsageError("--inv-b must be positive")
    b = 1.0 / args.inv_b
    scheme = solve_coefficients(args.scheme)
    p = PotentialParams(A=_resolve_A(args.A, b), alpha=args.alpha, b=b)
    return p, scheme


def cmd_table(args, stream=None) -> int:
    stream = stream or sys.stdout
    if args.which == 1:
        return _table1(args, stream)
    return _table23(args, stream)


def _table1(args, stream) -> int:
    matched = solve_coefficients("case1")
    legacy = solve_coefficients("legacy")
    rows_csv, rows_json = [], []
    for alpha in TABLE1_ALPHAS:
        for cell in table_cells(1):
            b = 1.0 / cell.inv_b
            p = PotentialParams(A=2.0 * b, alpha=alpha, b=b)
            e_matched = -energy_level(p, cell.state, matched).energy
            e_legacy = -energy_level(p, cell.state, legacy).energy
            try:
                hint = energy_level(p, cell.state, matched).energy
                e_numeric = -numerov.solve_with_hint(p, cell.state, hint, scheme=None).energy
            except (numerov.BracketError, numerov.ConvergenceError) as exc:
                raise RuntimeError(f"numeric solve failed for {cell.state.label}: {exc}")
            rows_csv.append(
                [
                    cell.state.label,
                    f"{cell.inv_b:.3f}",
                    f"{alpha:g}",
                    _fmt(e_matched, _AU_FMT),
                    _fmt(e_legacy, _AU_FMT),
                    _fmt(e_numeric, _AU_FMT),
                ]
            )
            rows_json.append(
                {
                    "state_label": cell.state.label,
                    "n": cell.state.n,
                    "l": cell.state.l,
                    "inv_b": cell.inv_b,
                    "alpha": alpha,
                    "units": "au",
                    "energy_matched": e_matched,
                    "energy_legacy": e_legacy,
                    "energy_numeric": e_numeric,
                }
            )
    if args.format == "csv":
        _emit_csv(
            ["state", "inv_b", "alpha", "minus_E_matched", "minus_E_legacy", "minus_E_numeric"],
            rows_csv,
            stream,
        )
    else:
        _emit_json("table", {"which": 1}, rows_json, stream)
    return EXIT_OK


def _table23(args, stream) -> int:
    u = _unit_system(args)
    matched = solve_coefficients("case1")
    rows_csv, rows_json = [], []
    for mol_name in TABLE_MOLECULES[args.which]:
        mol = get_molecule(mol_name)
        for alpha, alpha_label in zip(TABLE23_ALPHAS, TABLE23_ALPHA_LABELS):
            for cell in table_cells(args.which):
                e_ev = table_energy_eV(mol, cell.state, alpha, cell.inv_b, matched, u)
                rows_csv.append(
                    [
                        mol_name,
                        cell.state.label,
                        f"{cell.inv_b:.3f}",
                        alpha_label,
                        _fmt(e_ev, _EV_FMT),
                    ]
                )
                rows_json.append(
                    {
                        "state_label": cell.state.label,
                        "n": cell.state.n,
                        "l": cell.state.l,
                        "inv_b": cell.inv_b,
                        "alpha": alpha_label,
                        "molecule": mol_name,
                        "units": "eV",
                        "energy_analytic": e_ev,
                    }
                )
    if args.format == "csv":
        _emit_csv(
            ["molecule", "state", "inv_b", "alpha", "binding_eV"], rows_csv, stream
        )
    else:
        _emit_json("table", {"which": args.which}, rows_json, stream)
    return EXIT_OK


def _spectrum_rows(args):
    p, scheme = _problem_from_args(args)
    pairs = enumerate_bound_states(p, scheme, args.l_max)
    if args.units == "ev":
        if not args.molecule:
            raise UsageError("--units ev requires --molecule")
        u = _unit_system(args)
        mol = get_molecule(args.molecule)
        # the dimensionless level is E / (hbar^2/2 mu b^2); rescale to eV
        # with b read in picometers
        factor = energy_scale_eV(mol, p.b, u) / p.energy_scale
    else:
        factor = 1.0
    return p, scheme, pairs, factor


def cmd_spectrum(args, stream=None) -> int:
    stream = stream or sys.stdout
    p, scheme, pairs, factor = _spectrum_rows(args)
    fmt = _EV_FMT if args.units == "ev" else _AU_FMT
    unit_name = "eV" if args.units == "ev" else "au"
    rows_csv, rows_json = [], []
    for st, sol in pairs:
        energy = sol.energy * factor
        rows_csv.append(
            [st.label, str(st.n), str(st.l), _fmt(energy, fmt), unit_name]
        )
        rows_json.append(
            {
                "state_label": st.label,
                "n": st.n,
                "l": st.l,
                "alpha": p.alpha,
                "scheme": scheme.name,
                "units": unit_name,
                "energy_analytic": energy,
            }
        )
    if args.format == "csv":
        _emit_csv(["state", "n", "l", "energy", "units"], rows_csv, stream)
    else:
        _emit_json(
            "spectrum",
            {"alpha": p.alpha, "A": p.A, "inv_b": args.inv_b, "scheme": scheme.name},
            rows_json,
            stream,
        )
    return EXIT_OK if pairs else EXIT_EMPTY


def cmd_compare(args, stream=None) -> int:
    stream = stream or sys.stdout
    p, scheme, pairs, factor = _spectrum_rows(args)
    if not pairs:
        return EXIT_EMPTY
    numeric_scheme = scheme if args.numeric == "approximated" else None
    fmt = _EV_FMT if args.units == "ev" else _AU_FMT
    unit_name = "eV" if args.units == "ev" else "au"
    rows_csv, rows_json = [], []
    any_failed = False
    max_delta = 0.0
    for st, sol in pairs:
        analytic = sol.energy * factor
        try:
            res = numerov.solve_with_hint(p, st, sol.energy, scheme=numeric_scheme)
            numeric = res.energy * factor
            delta = analytic - numeric
            max_delta = max(max_delta, abs(delta))
            err = None
        except (numerov.BracketError, numerov.ConvergenceError) as exc:
            numeric = delta = None
            err = str(exc)
            any_failed = True
        rows_csv.append(
            [
                st.label,
                str(st.n),
                str(st.l),
                _fmt(analytic, fmt),
                _fmt(numeric, fmt),
                _fmt(delta, fmt if args.units == "ev" else "{:.10f}"),
                unit_name,
                err or "",
            ]
        )
        rows_json.append(
            {
                "state_label": st.label,
                "n": st.n,
                "l": st.l,
                "alpha": p.alpha,
                "scheme": scheme.name,
                "units": unit_name,
                "energy_analytic": analytic,
                "energy_numeric": numeric,
                "delta": delta,
                "error": err,
            }
        )
    summary = {"max_abs_delta": max_delta, "failed_rows": sum(r["error"] is not None for r in rows_json)}
    if args.format == "csv":
        _emit_csv(
            ["state", "n", "l", "analytic", "numeric", "delta", "units", "error"],
            rows_csv,
            stream,
        )
        stream.write(f"# max |delta| = {max_delta:.3e}\n")
    else:
        _emit_json(
            "compare",
            {
                "alpha": p.alpha,
                "A": p.A,
                "inv_b": args.inv_b,
                "scheme": scheme.name,
                "numeric": args.numeric,
            },
            rows_json,
            stream,
            summary=summary,
        )
    return EXIT_EMPTY if any_failed else EXIT_OK


def _parse_grid(spec: str):
    import numpy as np

    parts = spec.split(":")
    if len(parts) != 3:
        raise UsageError("--grid expects min:max:count")
    try:
        lo, hi = float(parts[0]), float(parts[1])
        count = int(parts[2])
    except ValueError:
        raise UsageError(f"bad --grid value {spec!r}") from None
    if count < 1 or lo <= 0 or (count > 1 and hi <= lo):
        raise UsageError("--grid needs 0 < min < max and count >= 1")
    if count == 1:
        return np.array([lo])
    return np.linspace(lo, hi, count)


def cmd_wavefunction(args, stream=None) -> int:
    stream = stream or sys.stdout
    p, scheme = _problem_from_args(args)
    st = QuantumState.from_label(args.state)
    grid = _parse_grid(args.grid)
    rf = radial_wavefunction(p, st, scheme, grid)
    if args.format == "csv":
        stream.write(f"# state = {st.label} (n={st.n}, l={st.l})\n")
        stream.write(f"# norm_constant = {rf.norm_constant:.12e}\n")
        stream.write(f"# epsilon_prime = {rf.epsilon_prime:.12e}\n")
        stream.write(f"# Lambda = {rf.Lambda:.12e}\n")
        stream.write(f"# nodes = {rf.node_count()}\n")
        stream.write("r,R\n")
        for r, v in rf.samples:
            stream.write(f"{r:.10e},{v:.10e}\n")
    else:
        _emit_json(
            "wavefunction",
            {"alpha": p.alpha, "A": p.A, "inv_b": args.inv_b, "scheme": scheme.name},
            [
                {
                    "state_label": st.label,
                    "n": st.n,
                    "l": st.l,
                    "norm_constant": rf.norm_constant,
                    "epsilon_prime": rf.epsilon_prime,
                    "Lambda": rf.Lambda,
                    "nodes": rf.node_count(),
                    "r": [r for r, _ in rf.samples],
                    "values": [v for _, v in rf.samples],
                }
            ],
            stream,
        )
    return EXIT_OK


def _add_problem_flags(sub):
    sub.add_argument("--alpha", type=float, required=True)
    sub.add_argument("--inv-b", type=float, required=True, dest="inv_b")
    sub.add_argument("--A", default="2b", help="coupling; a number or the literal '2b'")
    sub.add_argument("--scheme", choices=CASES, default="case1")
    sub.add_argument("--format", choices=("csv", "json"), default="csv")
    sub.add_argument("--constants-file", default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mrbound",
        description="Bound states of the Manning-Rosen potential.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    t = subs.add_parser("table", help="regenerate a benchmark table")
    t.add_argument("--which", type=int, choices=(1, 2, 3), required=True)
    t.add_argument("--format", choices=("csv", "json"), default="csv")
    t.add_argument("--constants-file", default=None)
    t.set_defaults(func=cmd_table)

    s = subs.add_parser("spectrum", help="list bound states")
    _add_problem_flags(s)
    s.add_argument("--l-max", type=int, default=4, dest="l_max")
    s.add_argument("--units", choices=("au", "ev"), default="au")
    s.add_argument("--molecule", default=None)
    s.set_defaults(func=cmd_spectrum)

    c = subs.add_parser("compare", help="analytic vs shooting-solver energies")
    _add_problem_flags(c)
    c.add_argument("--l-max", type=int, default=4, dest="l_max")
    c.add_argument("--units", choices=("au", "ev"), default="au")
    c.add_argument("--molecule", default=None)
    c.add_argument("--numeric", choices=("exact", "approximated"), default="approximated")
    c.set_defaults(func=cmd_compare)

    w = subs.add_parser("wavefunction", help="sample a radial wavefunction")
    _add_problem_flags(w)
    w.add_argument("--state", required=True, help="spectroscopic label, e.g. 2p")
    w.add_argument("--grid", required=True, help="min:max:count (same length unit as b)")
    w.set_defaults(func=cmd_wavefunction)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (UsageError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UnboundStateError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EMPTY
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ArithmeticError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
