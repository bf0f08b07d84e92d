"""Command-line interface: instance reports, built-in tables, self-verification.

Configs are JSON documents with a fixed schema (see :class:`InstanceConfig`);
unknown fields are rejected with the offending field path.  Exit codes:
0 success, 1 verification or check mismatch, 2 input error, 3 guard
violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from .bundles import BundleSpec, VirtualPair
from .chow import product_of_projective_spaces, projective_space
from .invariants import (
    GuardError,
    Instance,
    InvariantReport,
    build_report,
)
from .verify import run_all

_AMBIENT_KINDS = ("projective_space", "product")


class ConfigError(ValueError):
    """A config document violates the schema; the message carries a field path."""


@dataclass
class InstanceConfig:
    """Declarative description of one instance.

    ``dims`` lists the dimensions of the projective factors; every
    multidegree row has one integer per factor.  ``E`` and ``F`` must have
    the same number of rows (the matrix size of the morphism).
    """

    ambient_kind: str
    dims: list[int]
    e_rows: list[list[int]]
    f_rows: list[list[int]]
    polarization: list[int] | None = None
    assume_general: bool = True
    allow_non_cy_c2: bool = False

    def to_dict(self) -> dict:
        doc = {
            "ambient": {"kind": self.ambient_kind, "dims": list(self.dims)},
            "E": [list(r) for r in self.e_rows],
            "F": [list(r) for r in self.f_rows],
            "flags": {
                "assume_general": self.assume_general,
                "allow_non_cy_c2": self.allow_non_cy_c2,
            },
        }
        if self.polarization is not None:
            doc["polarization"] = list(self.polarization)
        return doc


def _expect(condition: bool, path: str, message: str) -> None:
    if not condition:
        raise ConfigError(f"{path}: {message}")


def _int_list(value, path: str) -> list[int]:
    _expect(isinstance(value, list) and value, path, "expected a nonempty list")
    out = []
    for i, item in enumerate(value):
        _expect(
            isinstance(item, int) and not isinstance(item, bool),
            f"{path}[{i}]",
            "expected an integer",
        )
        out.append(item)
    return out


def _rows(value, path: str, width: int) -> list[list[int]]:
    _expect(isinstance(value, list) and value, path, "expected a nonempty list")
    rows = []
    for i, row in enumerate(value):
        entries = _int_list(row, f"{path}[{i}]")
        _expect(
            len(entries) == width,
            f"{path}[{i}]",
            f"expected {width} entries, one per projective factor",
        )
        rows.append(entries)
    return rows


def parse_config(doc) -> InstanceConfig:
    """Validate a decoded JSON document against the config schema."""
    _expect(isinstance(doc, dict), "<root>", "expected an object")
    unknown = set(doc) - {"ambient", "E", "F", "polarization", "flags"}
    _expect(not unknown, sorted(unknown)[0] if unknown else "", "unknown field")
    for required in ("ambient", "E", "F"):
        _expect(required in doc, required, "missing required field")

    ambient = doc["ambient"]
    _expect(isinstance(ambient, dict), "ambient", "expected an object")
    unknown = set(ambient) - {"kind", "dims"}
    _expect(
        not unknown,
        f"ambient.{sorted(unknown)[0]}" if unknown else "",
        "unknown field",
    )
    _expect("kind" in ambient, "ambient.kind", "missing required field")
    _expect("dims" in ambient, "ambient.dims", "missing required field")
    kind = ambient["kind"]
    _expect(
        kind in _AMBIENT_KINDS,
        "ambient.kind",
        f"expected one of {_AMBIENT_KINDS}",
    )
    dims = _int_list(ambient["dims"], "ambient.dims")
    _expect(
        all(d >= 1 for d in dims), "ambient.dims", "factor dimensions must be >= 1"
    )
    if kind == "projective_space":
        _expect(len(dims) == 1, "ambient.dims", "projective_space takes one dimension")
    _expect(sum(dims) >= 4, "ambient.dims", "total dimension must be at least 4")

    e_rows = _rows(doc["E"], "E", len(dims))
    f_rows = _rows(doc["F"], "F", len(dims))
    _expect(
        len(e_rows) == len(f_rows),
        "F",
        f"expected {len(e_rows)} rows to match E",
    )
    _expect(len(e_rows) >= 2, "E", "the morphism matrix must be at least 2 x 2")

    polarization = None
    if "polarization" in doc:
        polarization = _int_list(doc["polarization"], "polarization")
        _expect(
            len(polarization) == len(dims),
            "polarization",
            f"expected {len(dims)} entries, one per projective factor",
        )

    assume_general = True
    allow_non_cy_c2 = False
    if "flags" in doc:
        flags = doc["flags"]
        _expect(isinstance(flags, dict), "flags", "expected an object")
        unknown = set(flags) - {"assume_general", "allow_non_cy_c2"}
        _expect(
            not unknown,
            f"flags.{sorted(unknown)[0]}" if unknown else "",
            "unknown field",
        )
        if "assume_general" in flags:
            _expect(
                isinstance(flags["assume_general"], bool),
                "flags.assume_general",
                "expected a boolean",
            )
            assume_general = flags["assume_general"]
        if "allow_non_cy_c2" in flags:
            _expect(
                isinstance(flags["allow_non_cy_c2"], bool),
                "flags.allow_non_cy_c2",
                "expected a boolean",
            )
            allow_non_cy_c2 = flags["allow_non_cy_c2"]

    return InstanceConfig(
        ambient_kind=kind,
        dims=dims,
        e_rows=e_rows,
        f_rows=f_rows,
        polarization=polarization,
        assume_general=assume_general,
        allow_non_cy_c2=allow_non_cy_c2,
    )


def load_config(path: str) -> InstanceConfig:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            doc = json.load(handle)
    except OSError as exc:
        raise ConfigError(f"<file>: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"<file>: invalid JSON ({exc})") from exc
    return parse_config(doc)


def instance_from_config(config: InstanceConfig) -> Instance:
    if config.ambient_kind == "projective_space":
        space = projective_space(config.dims[0])
    else:
        space = product_of_projective_spaces(config.dims)
    pair = VirtualPair(
        BundleSpec.sum_of_line_bundles(space, config.e_rows),
        BundleSpec.sum_of_line_bundles(space, config.f_rows),
    )
    polarization = None
    if config.polarization is not None:
        polarization = space.degree_one(config.polarization)
    return Instance(space, pair, polarization)


# -- rendering ---------------------------------------------------------------


def _bundle_str(rows: list[list[int]]) -> str:
    if rows and len(rows[0]) == 1:
        return "O(" + ", ".join(str(row[0]) for row in rows) + ")"
    return " + ".join("O(" + ",".join(str(d) for d in row) + ")" for row in rows)


def _ambient_str(config: InstanceConfig) -> str:
    return " x ".join(f"P^{d}" for d in config.dims)


def _pairing_label(k: int, dim: int) -> str:
    bits = []
    l_power = dim - 1 - k
    if l_power:
        bits.append("L" if l_power == 1 else f"L^{l_power}")
    if k:
        bits.append("H" if k == 1 else f"H^{k}")
    return ".".join(bits)


def report_to_dict(config: InstanceConfig, report: InvariantReport) -> dict:
    doc = {
        "instance": config.to_dict(),
        "dim": report.dim,
        "rank": report.rank,
        "calabi_yau": report.calabi_yau,
        "ih_milnor_number": report.ih_milnor,
        "euler_smooth": report.euler_smooth,
        "euler_ih": report.euler_ih,
        "euler_resolution": report.euler_resolution,
        "warnings": list(report.warnings),
    }
    if report.singular_degree is not None:
        doc["singular_degree"] = report.singular_degree
    if report.odp_count is not None:
        doc["odp_count"] = report.odp_count
    if report.intersection_numbers is not None:
        doc["intersection_numbers"] = {
            _pairing_label(k, report.dim): value
            for k, value in enumerate(report.intersection_numbers)
        }
    if report.c2_against_polarization is not None:
        doc["c2.H"] = report.c2_against_polarization
        doc["c2.L"] = report.c2_against_tautological
    return doc


def render_report(config: InstanceConfig, report: InvariantReport) -> str:
    lines = [
        f"ambient:            {_ambient_str(config)}  (dim {report.dim})",
        f"E:                  {_bundle_str(config.e_rows)}",
        f"F:                  {_bundle_str(config.f_rows)}",
        f"matrix size:        {report.rank} x {report.rank}",
        f"calabi-yau:         {'yes' if report.calabi_yau else 'no'}",
    ]
    if report.singular_degree is not None:
        lines.append(f"singular degree:    {report.singular_degree}")
    if report.odp_count is not None:
        lines.append(f"ODP count:          {report.odp_count}")
    lines.append(f"ih milnor number:   {report.ih_milnor}")
    lines.append(f"euler (smooth):     {report.euler_smooth}")
    lines.append(f"euler (IH) = euler (resolution): {report.euler_ih}")
    if report.intersection_numbers is not None:
        pairs = ", ".join(
            f"{_pairing_label(k, report.dim)} = {value}"
            for k, value in enumerate(report.intersection_numbers)
        )
        lines.append(f"intersection numbers: {pairs}")
    if report.c2_against_polarization is not None:
        lines.append(
            f"c2 pairings:        c2.H = {report.c2_against_polarization}, "
            f"c2.L = {report.c2_against_tautological}"
        )
    for warning in report.warnings:
        lines.append(f"note: {warning}")
    return "\n".join(lines) + "\n"


# -- built-in tables ----------------------------------------------------------

# Reference values for the built-in instances; `table --check` recomputes
# every number and compares.


def _config(dims, e_rows, f_rows, polarization=None) -> InstanceConfig:
    return parse_config(
        {
            "ambient": {
                "kind": "projective_space" if len(dims) == 1 else "product",
                "dims": list(dims),
            },
            "E": e_rows,
            "F": f_rows,
            **({"polarization": polarization} if polarization else {}),
        }
    )


_TABLE1_COLUMNS = ("L^3", "L^2.H", "L.H^2", "H^3", "L.c2", "H.c2", "ODPs")

TABLE1 = {
    "title": "Intersection numbers of the nodal quintic threefold",
    "config": _config(
        [4], [[-1], [-1], [-1], [-2]], [[0], [0], [0], [0]], polarization=[1]
    ),
    "expected": (2, 7, 9, 5, 44, 50, 46),
}

TABLE2 = {
    "title": "Nodal quartic threefolds from square matrices",
    "rows": [
        {"e": [[0], [0]], "f": [[1], [3]], "odps": 9},
        {"e": [[-1], [0]], "f": [[1], [2]], "odps": 12},
        {"e": [[0], [0], [0]], "f": [[1], [1], [2]], "odps": 17},
        {"e": [[0], [0]], "f": [[2], [2]], "odps": 16},
        {"e": [[0], [0], [0], [0]], "f": [[1], [1], [1], [1]], "odps": 20},
    ],
}


def _table1_values() -> tuple[int, ...]:
    config = TABLE1["config"]
    report = build_report(
        instance_from_config(config), allow_non_cy_c2=config.allow_non_cy_c2
    )
    numbers = report.intersection_numbers
    return (
        numbers[0],
        numbers[1],
        numbers[2],
        numbers[3],
        report.c2_against_tautological,
        report.c2_against_polarization,
        report.odp_count,
    )


def _table2_values() -> list[int]:
    out = []
    for row in TABLE2["rows"]:
        config = _config([4], row["e"], row["f"])
        report = build_report(instance_from_config(config))
        out.append(report.odp_count)
    return out


def _format_table(headers: list[str], rows: list[list[str]]) -> str:
    widths = [
        max(len(str(h)), *(len(r[i]) for r in rows)) for i, h in enumerate(headers)
    ]
    def fmt(row):
        return "  ".join(str(c).ljust(w) for c, w in zip(row, widths)).rstrip()
    lines = [fmt(headers)]
    lines.append("-" * len(lines[0]))
    lines.extend(fmt(r) for r in rows)
    return "\n".join(lines) + "\n"


# -- commands -----------------------------------------------------------------


def cmd_report(args) -> int:
    config = load_config(args.config)
    report = build_report(
        instance_from_config(config),
        allow_non_cy_c2=config.allow_non_cy_c2,
        assume_general=config.assume_general,
    )
    if args.json:
        print(json.dumps(report_to_dict(config, report), indent=2, sort_keys=True))
    else:
        print(render_report(config, report), end="")
    return 0


def cmd_table(args) -> int:
    if args.name == "table1":
        values = _table1_values()
        expected = TABLE1["expected"]
        rows = [[str(v) for v in values]]
        text = _format_table(list(_TABLE1_COLUMNS), rows)
        doc = {
            "name": "table1",
            "columns": list(_TABLE1_COLUMNS),
            "rows": [list(values)],
        }
        mismatches = [
            f"{col}: computed {got}, expected {want}"
            for col, got, want in zip(_TABLE1_COLUMNS, values, expected)
            if got != want
        ]
    else:
        values = _table2_values()
        expected = [row["odps"] for row in TABLE2["rows"]]
        headers = ["E -> F", "ODPs"]
        rows = [
            [f"{_bundle_str(row['e'])} -> {_bundle_str(row['f'])}", str(got)]
            for row, got in zip(TABLE2["rows"], values)
        ]
        text = _format_table(headers, rows)
        doc = {
            "name": "table2",
            "columns": headers,
            "rows": [[r[0], got] for r, got in zip(rows, values)],
        }
        mismatches = [
            f"row {i + 1}: computed {got}, expected {want}"
            for i, (got, want) in enumerate(zip(values, expected))
            if got != want
        ]
    if args.json:
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print(text, end="")
    if args.check:
        if mismatches:
            for line in mismatches:
                print(f"check failed: {line}", file=sys.stderr)
            return 1
        if not args.json:
            print("check passed: all values match the reference data")
    return 0


def cmd_verify(args) -> int:
    results = run_all(depth=args.depth, seed=args.seed)
    width = max(len(r.name) for r in results)
    failed = False
    for result in results:
        status = "ok" if result.passed else "FAIL"
        print(f"{result.name.ljust(width)}  {result.cases:4d} cases  {status}")
        for message in result.failures:
            failed = True
            print(f"  {message}", file=sys.stderr)
    print("verification failed" if failed else "all suites passed")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="detcalc",
        description=(
            "Exact invariants of determinantal hypersurfaces: singular-point "
            "counts, Euler characteristics, and intersection numbers on the "
            "small resolution."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_report = sub.add_parser("report", help="evaluate a JSON instance config")
    p_report.add_argument("config", help="path to the config file")
    p_report.add_argument(
        "--json", action="store_true", help="emit a JSON document instead of text"
    )
    p_report.set_defaults(func=cmd_report)

    p_table = sub.add_parser("table", help="reproduce a built-in table")
    p_table.add_argument("name", choices=("table1", "table2"))
    p_table.add_argument(
        "--check",
        action="store_true",
        help="compare against the embedded reference values; exit 1 on mismatch",
    )
    p_table.add_argument("--json", action="store_true")
    p_table.set_defaults(func=cmd_table)

    p_verify = sub.add_parser("verify", help="run the cross-module property suites")
    p_verify.add_argument(
        "--depth",
        type=int,
        default=4,
        help="bound on partition weights and bundle ranks (default 4)",
    )
    p_verify.add_argument("--seed", type=int, default=2024)
    p_verify.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except GuardError as exc:
        print(f"guard violation: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
