"""Command-line surface: realize / analyze / zeta / census / certify.

Reports go to standard output as deterministic JSON (keys sorted, any
integer beyond 2^53 rendered as a decimal string so interchange stays
bit-exact) or as plain text carrying the same information.  Matrix files
are JSON objects {"dim": n, "rows": [[...], ...]}; Dold classes are JSON
maps with string keys; readers accept big integers in either numeric or
string form.  No configuration files, no environment variables.

Stable exit codes:

    0  success
    1  usage or input parse error
    2  unrealizable target set
    3  strict-mode mismatch between requested and achieved data
    4  matrix is not quasi-unipotent
    5  model validation failure (dimension/genus or form check)
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path
from typing import Any, Dict, Optional

from .arith import DoldClass
from .census import census
from .exactmat import (
    DimensionMismatch,
    IntMatrix,
    charpoly,
    is_antisymplectic,
    is_symplectic,
)
from .lefschetz import (
    FormViolation,
    HomologyModel,
    SurfaceKind,
    algebraic_periods,
    lefschetz_numbers_from_charpoly,
    periodic_point_certificate,
)
from .polycyc import NotQuasiUnipotent, cyclotomic_factorization
from .realize import Mode, SurfaceModel, OddTargetUnrealizable, realize_target
from .zeta import (
    ZetaFactorization,
    canonicalize,
    format_factors,
    mper_from_factorization,
    parse_factors,
    series_expand,
    zeta_from_dold,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_UNREALIZABLE = 2
EXIT_STRICT = 3
EXIT_NOT_QUASI_UNIPOTENT = 4
EXIT_MODEL = 5

_JSON_INT_LIMIT = 2 ** 53


class _UsageError(Exception):
    pass


class _InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 1 on usage errors, not argparse's 2
        raise _UsageError(message)


def _jsonable(value: Any) -> Any:
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return value if -_JSON_INT_LIMIT <= value <= _JSON_INT_LIMIT else str(value)
    if isinstance(value, float):
        return value
    if isinstance(value, (list, tuple)):
        return [_jsonable(x) for x in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    return value


def _text_lines(key: str, value: Any, indent: int) -> list[str]:
    pad = "  " * indent
    if isinstance(value, dict):
        lines = [f"{pad}{key}:"]
        for k in sorted(value, key=str):
            lines.extend(_text_lines(str(k), value[k], indent + 1))
        return lines
    if isinstance(value, (list, tuple)):
        if all(not isinstance(x, (dict, list, tuple)) for x in value):
            return [f"{pad}{key}: [" + " ".join(str(x) for x in value) + "]"]
        lines = [f"{pad}{key}:"]
        for i, x in enumerate(value):
            lines.extend(_text_lines(f"[{i}]", x, indent + 1))
        return lines
    return [f"{pad}{key}: {value}"]


def _emit(report: Dict[str, Any], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(_jsonable(report), sort_keys=True, indent=2))
    else:
        lines = []
        for key in sorted(report):
            lines.extend(_text_lines(key, report[key], 0))
        print("\n".join(lines))


def _parse_int(value: Any) -> int:
    if isinstance(value, bool):
        raise _InputError("booleans are not integers")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return int(value)
        except ValueError as exc:
            raise _InputError(f"{value!r} is not an integer") from exc
    raise _InputError(f"{value!r} is not an integer")


def _load_json(path: str) -> Any:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise _InputError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise _InputError(f"{path} is not valid JSON: {exc}") from exc


def _load_matrix(path: str) -> IntMatrix:
    data = _load_json(path)
    if not isinstance(data, dict) or "dim" not in data or "rows" not in data:
        raise _InputError(f'{path} must be an object {{"dim": n, "rows": [[...]]}}')
    dim = _parse_int(data["dim"])
    rows = data["rows"]
    if not isinstance(rows, list) or len(rows) != dim:
        raise _InputError(f"{path}: expected {dim} rows")
    parsed = []
    for row in rows:
        if not isinstance(row, list) or len(row) != dim:
            raise _InputError(f"{path}: every row must have {dim} entries")
        parsed.append([_parse_int(x) for x in row])
    return IntMatrix(parsed)


def _load_dold(source: str) -> DoldClass:
    """Accept either a path to a JSON map or an inline JSON object."""
    if Path(source).exists():
        data = _load_json(source)
    else:
        stripped = source.strip()
        if not stripped.startswith("{"):
            raise _InputError(f"{source!r} is neither a file nor an inline JSON object")
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise _InputError(f"inline Dold map is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise _InputError("a Dold class must be a JSON object of period -> coefficient")
    coeffs = {}
    for k, v in data.items():
        n = _parse_int(k)
        if n < 1:
            raise _InputError(f"period {k!r} is not a positive integer")
        coeffs[n] = _parse_int(v)
    return DoldClass(coeffs)


def _matrix_payload(matrix: IntMatrix) -> Dict[str, Any]:
    return {"dim": matrix.dim, "rows": [list(row) for row in matrix.rows]}


def _dold_payload(d: DoldClass) -> Dict[str, int]:
    return {str(n): a for n, a in d.items()}


def _certificates_payload(d: DoldClass) -> list[Dict[str, Any]]:
    return [
        {
            "period": rec.period,
            "guarantee": rec.guarantee,
            "periods": list(rec.periods),
            "statement": rec.statement,
        }
        for rec in periodic_point_certificate(d)
    ]


def _form_checks_payload(model: HomologyModel) -> Optional[Dict[str, bool]]:
    if model.kind is SurfaceKind.NONORIENTABLE:
        return None
    return {
        "symplectic": is_symplectic(model.matrix),
        "antisymplectic": is_antisymplectic(model.matrix),
    }


def _analysis_payload(model: HomologyModel, bound: Optional[int]) -> tuple[Dict[str, Any], bool]:
    """Shared report body for realize/analyze; returns (payload, quasi_unipotent)."""
    cp = charpoly(model.matrix)
    report: Dict[str, Any] = {
        "kind": model.kind.value,
        "genus": model.genus,
        "matrix": _matrix_payload(model.matrix),
        "charpoly": list(cp.coeffs),
        "form_checks": _form_checks_payload(model),
    }
    try:
        mults = cyclotomic_factorization(cp)
    except NotQuasiUnipotent as exc:
        n_max = bound if bound is not None else 12
        lefschetz = lefschetz_numbers_from_charpoly(model.kind, cp, n_max)
        report.update(
            {
                "quasi_unipotent": False,
                "residual_factor": list(exc.residual.coeffs),
                "cyclotomic_factorization": None,
                "lefschetz": lefschetz,
                "dold": None,
                "algebraic_periods": None,
                "ap_odd": None,
                "mper_l": None,
                "odd_lefschetz_vanish": None,
                "certificates": [],
            }
        )
        return report, False
    n_max = bound if bound is not None else 2 * math.lcm(1, *mults)
    lefschetz = lefschetz_numbers_from_charpoly(model.kind, cp, n_max)
    dold = algebraic_periods(model)
    odd_periods = [n for n in dold.support() if n % 2]
    report.update(
        {
            "quasi_unipotent": True,
            "cyclotomic_factorization": {str(d): m for d, m in sorted(mults.items())},
            "lefschetz": lefschetz,
            "dold": _dold_payload(dold),
            "algebraic_periods": list(dold.support()),
            "ap_odd": odd_periods,
            "mper_l": odd_periods,
            "certificates": _certificates_payload(dold),
        }
    )
    if model.kind is SurfaceKind.REVERSING:
        report["odd_lefschetz_vanish"] = all(
            lefschetz[l - 1] == 0 for l in range(1, n_max + 1, 2)
        )
    else:
        report["odd_lefschetz_vanish"] = None
    return report, True


def _model_report(sm: SurfaceModel) -> Dict[str, Any]:
    report, _ = _analysis_payload(sm.model, bound=None)
    report.update(
        {
            "mode": sm.mode.value if sm.mode is not None else None,
            "target": list(sm.target),
            # recomputed by _analysis_payload; nothing cached crosses here
            "achieved": report["algebraic_periods"],
            "pieces": [
                {"n": p.n, "tau": p.tau, "copies": p.copies} for p in sm.pieces
            ],
            "flags": list(sm.flags),
        }
    )
    return report


def _cmd_realize(args) -> int:
    try:
        elements = [int(part) for part in args.set.split(",") if part]
    except ValueError:
        raise _UsageError(f"--set {args.set!r} is not a comma-separated list of integers")
    if not elements or any(n < 1 for n in elements):
        raise _UsageError("--set needs a nonempty list of positive integers")
    kind = SurfaceKind(args.kind)
    try:
        sm = realize_target(set(elements), kind, mode=Mode(args.mode))
    except OddTargetUnrealizable as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNREALIZABLE
    _emit(_model_report(sm), args.format)
    if args.strict and set(sm.achieved.support()) != set(sm.target):
        print(
            "error: strict mode, achieved periods "
            f"{sorted(sm.achieved.support())} differ from target {list(sm.target)}",
            file=sys.stderr,
        )
        return EXIT_STRICT
    return EXIT_OK


def _build_model(matrix: IntMatrix, kind: SurfaceKind, genus: int, strict: bool):
    """HomologyModel or an exit code (5) with a message on stderr."""
    try:
        return HomologyModel(kind, matrix, genus, strict=strict)
    except (DimensionMismatch, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return None
    except FormViolation as exc:
        print(f"error: strict form check failed: {exc}", file=sys.stderr)
        return None


def _cmd_analyze(args) -> int:
    if args.max_iter is not None and args.max_iter < 1:
        raise _UsageError("--max-iter must be positive")
    matrix = _load_matrix(args.matrix)
    kind = SurfaceKind(args.kind)
    model = _build_model(matrix, kind, args.genus, strict=not args.no_strict)
    if model is None:
        return EXIT_MODEL
    report, quasi_unipotent = _analysis_payload(model, bound=args.max_iter)
    _emit(report, args.format)
    return EXIT_OK if quasi_unipotent else EXIT_NOT_QUASI_UNIPOTENT


def _cmd_zeta(args) -> int:
    if (args.dold is None) == (args.factors is None):
        raise _UsageError("exactly one of --dold or --factors is required")
    if args.dold is not None:
        factorization = zeta_from_dold(_load_dold(args.dold))
    else:
        try:
            factorization = parse_factors(args.factors)
        except ValueError as exc:
            raise _UsageError(str(exc))
    report: Dict[str, Any] = {
        "factors": [
            {"delta": f.delta, "r": f.r, "m": f.m} for f in factorization.factors
        ],
        "factors_compact": format_factors(factorization),
    }
    if args.canonicalize:
        report["canonical"] = {str(k): e for k, e in canonicalize(factorization).items()}
    if args.series is not None:
        if args.series < 1:
            raise _UsageError("--series needs a positive truncation order")
        report["series"] = series_expand(factorization, args.series)
    if args.mper:
        report["mper"] = sorted(mper_from_factorization(factorization))
    _emit(report, args.format)
    return EXIT_OK


def _cmd_census(args) -> int:
    if args.genus < 1:
        raise _UsageError("--genus must be at least 1")
    if args.limit is not None and args.limit < 0:
        raise _UsageError("--limit must be nonnegative")
    correspondence = args.correspondence if args.list_partitions else None
    rep = census(args.genus, correspondence=correspondence, limit=args.limit)
    report: Dict[str, Any] = {
        "genus": rep.genus,
        "exact_count": rep.exact_count,
        "hardy_ramanujan_estimate": rep.hr_estimate,
        "ratio": rep.ratio,
        "statement": rep.statement,
    }
    if rep.sample_dold_classes is not None:
        report["correspondence"] = correspondence
        report["partitions"] = [
            {"partition": p.as_list(), "dold": _dold_payload(d)}
            for p, d in rep.sample_dold_classes
        ]
    _emit(report, args.format)
    return EXIT_OK


def _cmd_certify(args) -> int:
    if (args.dold is None) == (args.matrix is None):
        raise _UsageError("exactly one of --dold or --matrix is required")
    if args.dold is not None:
        dold = _load_dold(args.dold)
        report: Dict[str, Any] = {"dold": _dold_payload(dold)}
    else:
        if args.kind is None or args.genus is None:
            raise _UsageError("--matrix needs --kind and --genus")
        matrix = _load_matrix(args.matrix)
        model = _build_model(matrix, SurfaceKind(args.kind), args.genus, strict=not args.no_strict)
        if model is None:
            return EXIT_MODEL
        try:
            dold = algebraic_periods(model)
        except NotQuasiUnipotent as exc:
            print(f"error: not quasi-unipotent: residual {exc.residual}", file=sys.stderr)
            return EXIT_NOT_QUASI_UNIPOTENT
        report = {
            "kind": model.kind.value,
            "genus": model.genus,
            "dold": _dold_payload(dold),
        }
    report["certificates"] = _certificates_payload(dold)
    _emit(report, args.format)
    return EXIT_OK


def _add_format(parser) -> None:
    parser.add_argument(
        "--format", choices=["json", "text"], default="json", help="output format"
    )


def build_parser() -> _Parser:
    parser = _Parser(
        prog="algperiods",
        description="Exact algebraic periods of surface homology models",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    realize_p = sub.add_parser(
        "realize", help="construct a model whose algebraic periods are a given set"
    )
    realize_p.add_argument("--set", required=True, metavar="N1,N2,...", help="target period set")
    realize_p.add_argument(
        "--kind", required=True, choices=["preserving", "reversing", "nonorientable"]
    )
    realize_p.add_argument(
        "--mode",
        choices=["faithful", "corrected"],
        default="corrected",
        help="reversing case only: faithful follows the literal doubled construction",
    )
    realize_p.add_argument(
        "--strict", action="store_true", help="exit 3 if achieved periods differ from the target"
    )
    _add_format(realize_p)

    analyze_p = sub.add_parser("analyze", help="full analysis of a matrix model")
    analyze_p.add_argument("--matrix", required=True, metavar="FILE")
    analyze_p.add_argument(
        "--kind", required=True, choices=["preserving", "reversing", "nonorientable"]
    )
    analyze_p.add_argument("--genus", required=True, type=int)
    analyze_p.add_argument(
        "--no-strict", action="store_true", help="skip the symplectic/antisymplectic form check"
    )
    analyze_p.add_argument(
        "--max-iter",
        type=int,
        default=None,
        metavar="N",
        help="length of the printed Lefschetz sequence (default: twice the lcm of orders)",
    )
    _add_format(analyze_p)

    zeta_p = sub.add_parser("zeta", help="manipulate zeta-function factorizations")
    zeta_p.add_argument("--dold", metavar="FILE|JSON", help="Dold class as a JSON map")
    zeta_p.add_argument(
        "--factors", metavar="STRING", help='factor string, e.g. "+,3,2;-,1,-1"'
    )
    zeta_p.add_argument("--canonicalize", action="store_true")
    zeta_p.add_argument("--series", type=int, default=None, metavar="N")
    zeta_p.add_argument("--mper", action="store_true")
    _add_format(zeta_p)

    census_p = sub.add_parser("census", help="partition census at a given genus")
    census_p.add_argument("--genus", required=True, type=int)
    census_p.add_argument("--list-partitions", action="store_true")
    census_p.add_argument(
        "--correspondence", choices=["orientable", "nonorientable"], default="orientable"
    )
    census_p.add_argument("--limit", type=int, default=None, metavar="K")
    _add_format(census_p)

    certify_p = sub.add_parser("certify", help="periodic-point guarantees from a Dold class")
    certify_p.add_argument("--dold", metavar="FILE|JSON")
    certify_p.add_argument("--matrix", metavar="FILE")
    certify_p.add_argument("--kind", choices=["preserving", "reversing", "nonorientable"])
    certify_p.add_argument("--genus", type=int, default=None)
    certify_p.add_argument("--no-strict", action="store_true")
    _add_format(certify_p)

    return parser


_COMMANDS = {
    "realize": _cmd_realize,
    "analyze": _cmd_analyze,
    "zeta": _cmd_zeta,
    "census": _cmd_census,
    "certify": _cmd_certify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except _InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
