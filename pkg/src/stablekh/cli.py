"""Command-line front end.

Reports are emitted as text (human-oriented) or JSON. The JSON form is byte
stable: keys sorted, compact separators, no floats, no timestamps unless
asked, and integers beyond 2^53 rendered as decimal strings so downstream
parsers with 64-bit doubles cannot corrupt them.
"""

from __future__ import annotations

import argparse
import json
import sys
from datetime import datetime, timezone

from .abelian import cokernel
from .algebras import (
    elem_abelian_group_algebra,
    exterior,
    from_file,
    nakayama,
    truncated_poly,
)
from .cluster import parity_check, phantom_verdict
from .crosscheck import DEFAULT_SEED, run_suites
from .errors import StablekhError
from .ktheory import (
    FiniteFieldSpec,
    phantom_scan,
    quillen_k,
    stable_kh,
    symbolic_cone,
)
from .shiftmat import exterior_shift_matrix, koszul_column, verify_snf_factorization
from .zmatrix import ZMatrix

_INT_LIMIT = 2**53

_QUILLEN_NOTE = (
    "Quillen: K_0(F_q) = Z; K_{2i-1}(F_q) = Z/(q^i - 1) and K_{2i}(F_q) = 0 "
    "for i >= 1; homotopy K-theory of a finite field agrees with K-theory"
)
_CONE_NOTE = (
    "every A1-homotopy invariant of the stable category is the cone of the "
    "Cartan matrix acting on n_simples copies of the invariant of the base"
)
_K0_NOTE = (
    "degree-0 group = cokernel of the Cartan matrix "
    "(the Grothendieck group of the stable category)"
)
_SOCLE_NOTE = (
    "beyond paper: Gorenstein parameter from the socle-degree rule "
    "(generators in degree 1)"
)
_AMBIGUITY_NOTE = (
    "flagged degrees report the split direct-sum candidate; the extension "
    "in the defining exact sequence is not determined"
)


def _jsonify(value):
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return str(value) if abs(value) > _INT_LIMIT else value
    if isinstance(value, dict):
        return {k: _jsonify(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonify(v) for v in value]
    raise TypeError(f"unexpected report value {value!r}")


def _matrix_lists(m: ZMatrix) -> list[list[int]]:
    return [list(row) for row in m.to_lists()]


def _emit(report: dict, args) -> None:
    if args.timestamps:
        report = dict(report)
        report["timestamp"] = datetime.now(timezone.utc).isoformat()
    if args.format == "json":
        payload = (
            json.dumps(_jsonify(report), sort_keys=True, separators=(",", ":"))
            + "\n"
        )
    else:
        payload = _render_text(report)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


def _emit_error(code: str, message: str) -> None:
    obj = {"error": {"code": code, "message": message}}
    sys.stdout.write(json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n")


# -- text rendering --------------------------------------------------------


def _text_value(key, value, indent, lines):
    pad = "  " * indent
    if isinstance(value, dict):
        lines.append(f"{pad}{key}:")
        for k, v in value.items():
            _text_value(k, v, indent + 1, lines)
    elif isinstance(value, list) and value and isinstance(value[0], dict):
        lines.append(f"{pad}{key}:")
        for item in value:
            flat = "  ".join(f"{k}={_scalar(v)}" for k, v in item.items())
            lines.append(f"{pad}  - {flat}")
    elif isinstance(value, list):
        lines.append(f"{pad}{key}: {_scalar(value)}")
    else:
        lines.append(f"{pad}{key}: {_scalar(value)}")


def _scalar(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "none"
    if isinstance(v, dict):
        return json.dumps(_jsonify(v), sort_keys=True, separators=(",", ":"))
    if isinstance(v, list):
        return "[" + ", ".join(_scalar(x) for x in v) + "]"
    return str(v)


def _render_text(report: dict) -> str:
    lines = [f"command: {report['command']}"]
    for k, v in report["inputs"].items():
        lines.append(f"  {k}: {_scalar(v)}")
    results = report["results"]
    if isinstance(results, list):
        lines.append("results:")
        if not results:
            lines.append("  (empty)")
        for item in results:
            flat = "  ".join(f"{k}={_scalar(v)}" for k, v in item.items())
            lines.append(f"  - {flat}")
    else:
        lines.append("results:")
        for k, v in results.items():
            if k == "groups":
                lines.append("  groups:")
                for g in v:
                    flag = "  (ambiguous: split candidate)" if g.get("ambiguous") else ""
                    label = "KH" if "ambiguous" in g else "K"
                    lines.append(f"    {label}_{g['i']} = {g['group']}{flag}")
            elif k == "notes":
                lines.append("  notes:")
                for note in v:
                    lines.append(f"    {note}")
            else:
                _text_value(k, v, 1, lines)
    notes = report.get("provenance_notes", [])
    if notes:
        lines.append("provenance:")
        for note in notes:
            lines.append(f"  - {note}")
    if "timestamp" in report:
        lines.append(f"timestamp: {report['timestamp']}")
    return "\n".join(lines) + "\n"


# -- subcommand handlers ---------------------------------------------------


def _base_spec(args) -> FiniteFieldSpec | None:
    if args.base_q is None:
        return None
    return FiniteFieldSpec.from_prime_power(args.base_q)


def _group_entry(degree: int, group, ambiguous: bool) -> dict:
    return {"i": degree, "group": str(group), "ambiguous": ambiguous}


def _algebra_results(algebra, base, max_degree: int) -> tuple[dict, list[str]]:
    cone = symbolic_cone(algebra)
    results = {
        "algebra": algebra.as_document(),
        "symbolic_cone": {
            "matrix": _matrix_lists(cone.matrix),
            "rank": cone.rank,
            "template": cone.template,
        },
    }
    notes = [_CONE_NOTE, _K0_NOTE]
    if base is None:
        results["base"] = None
        results["groups"] = [_group_entry(0, cokernel(algebra.cartan), False)]
        notes.append(
            "no base field given: the cone presentation and the degree-0 "
            "group are field-independent; pass --base-q for higher degrees"
        )
    else:
        res = stable_kh(algebra, base, max_degree)
        results["base"] = {"q": base.q, "p": base.p, "exponent": base.exponent}
        results["groups"] = [
            _group_entry(g.degree, g.group, g.ambiguous) for g in res.groups
        ]
        notes.append(_QUILLEN_NOTE)
        if any(g.ambiguous for g in res.groups):
            notes.append(_AMBIGUITY_NOTE)
    if algebra.family in ("truncated_poly", "nakayama", "tensor",
                          "elem_abelian_group_algebra"):
        notes.append(_SOCLE_NOTE)
    return results, notes


def _cmd_exterior(args):
    algebra = exterior(args.generators)
    results, notes = _algebra_results(algebra, _base_spec(args), args.max_degree)
    return {
        "command": "exterior",
        "inputs": {
            "generators": args.generators,
            "base_q": args.base_q,
            "max_degree": args.max_degree,
        },
        "results": results,
        "provenance_notes": notes,
    }


def _cmd_group_algebra(args):
    algebra = elem_abelian_group_algebra(args.p, args.r)
    results, notes = _algebra_results(algebra, _base_spec(args), args.max_degree)
    return {
        "command": "group-algebra",
        "inputs": {
            "p": args.p,
            "r": args.r,
            "base_q": args.base_q,
            "max_degree": args.max_degree,
        },
        "results": results,
        "provenance_notes": notes,
    }


def _cmd_truncated(args):
    algebra = truncated_poly(args.m)
    results, notes = _algebra_results(algebra, _base_spec(args), args.max_degree)
    return {
        "command": "truncated",
        "inputs": {
            "m": args.m,
            "base_q": args.base_q,
            "max_degree": args.max_degree,
        },
        "results": results,
        "provenance_notes": notes,
    }


def _cmd_nakayama(args):
    algebra = nakayama(args.n, args.length)
    results, notes = _algebra_results(algebra, _base_spec(args), args.max_degree)
    return {
        "command": "nakayama",
        "inputs": {
            "n": args.n,
            "length": args.length,
            "base_q": args.base_q,
            "max_degree": args.max_degree,
        },
        "results": results,
        "provenance_notes": notes,
    }


def _cmd_algebra_file(args):
    algebra = from_file(args.path)
    results, notes = _algebra_results(algebra, _base_spec(args), args.max_degree)
    return {
        "command": "algebra-file",
        "inputs": {
            "path": args.path,
            "base_q": args.base_q,
            "max_degree": args.max_degree,
        },
        "results": results,
        "provenance_notes": notes,
    }


def _cmd_cluster(args):
    rep = phantom_verdict(args.n)
    results = {
        "n": rep.n,
        "matrix": _matrix_lists(rep.matrix),
        "determinant": rep.determinant,
        "is_phantom": rep.is_phantom,
        "k0_cokernel": str(rep.k0_cokernel),
        "notes": list(rep.notes),
    }
    if args.scan_to is not None:
        rows = parity_check(args.scan_to)
        results["scan"] = [
            {
                "n": r.n,
                "determinant": r.determinant,
                "recurrence": r.recurrence,
                "expected": r.expected,
                "is_phantom": r.determinant in (1, -1),
            }
            for r in rows
        ]
    notes = [
        "cluster-category cone matrix: negative inverse translate minus the identity",
        "determinant parity: 1 for even n, 0 for odd, confirmed against the "
        "first-column expansion recurrence d_n = -d_{n-1} + 1",
    ]
    return {
        "command": "cluster",
        "inputs": {"n": args.n, "scan_to": args.scan_to},
        "results": results,
        "provenance_notes": notes,
    }


def _cmd_kgroups(args):
    base = FiniteFieldSpec.from_prime_power(args.q)
    groups = [
        {"i": i, "group": str(quillen_k(base, i))}
        for i in range(args.max_degree + 1)
    ]
    return {
        "command": "kgroups",
        "inputs": {"q": args.q, "max_degree": args.max_degree},
        "results": {"q": args.q, "groups": groups},
        "provenance_notes": [_QUILLEN_NOTE],
    }


def _cmd_phi(args):
    g = args.generators
    m = exterior_shift_matrix(g)
    results = {
        "generators": g,
        "convention": "negative twist: -1 diagonal, -1 subdiagonal, "
        "Koszul signed-binomial last column",
        "koszul_column": list(koszul_column(g).psi),
        "matrix": _matrix_lists(m),
        "determinant": m.det(),
    }
    notes = [
        "Koszul resolution of the residue field gives the signed binomial "
        "multiplicities in the last column",
        "|det| = algebra dimension 2^generators",
    ]
    if args.verify_snf:
        v = verify_snf_factorization(m, ZMatrix(((2**g,),)))
        results["verify_snf"] = {
            "ok": v.ok,
            "shift_diagonal": list(v.shift_diagonal),
            "cartan_diagonal": list(v.cartan_diagonal),
            "expected_diagonal": list(v.expected_diagonal),
        }
        notes.append(
            "Smith normal form of the shift matrix = identity padding "
            "followed by the Cartan invariant factors"
        )
    return {
        "command": "phi",
        "inputs": {"generators": g, "verify_snf": args.verify_snf},
        "results": results,
        "provenance_notes": notes,
    }


def _cmd_phantom_scan(args):
    algebras = [(path, from_file(path)) for path in args.paths]
    entries = phantom_scan(a for _, a in algebras)
    results = [
        {
            "path": path,
            "algebra": entry.algebra.as_document(),
            "determinant": entry.determinant,
            "is_phantom": entry.is_phantom,
        }
        for (path, _), entry in zip(algebras, entries)
    ]
    return {
        "command": "phantom-scan",
        "inputs": {"paths": list(args.paths)},
        "results": results,
        "provenance_notes": [
            "unit Cartan determinant makes the cone an equivalence: every "
            "A1-homotopy invariant of the stable category vanishes"
        ],
    }


def _cmd_verify(args):
    summaries = run_suites(args.suite, args.seed)
    results = [
        {
            "suite": s.suite,
            "samples": s.samples,
            "mismatches": s.mismatches,
            "seed": s.seed,
            "ok": s.ok,
        }
        for s in summaries
    ]
    report = {
        "command": "verify",
        "inputs": {"suite": args.suite, "seed": args.seed},
        "results": results,
        "provenance_notes": [
            "independent oracles: minor-gcd divisor chains, exhaustive mod-m "
            "enumeration, composition-series recount"
        ],
    }
    bad = [s.suite for s in summaries if not s.ok]
    return report, bad


# -- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )
    common.add_argument("--out", metavar="PATH", help="write the report to PATH")
    common.add_argument(
        "--timestamps",
        action="store_true",
        help="include a UTC timestamp (breaks byte determinism)",
    )

    base_opts = argparse.ArgumentParser(add_help=False)
    base_opts.add_argument(
        "--base-q",
        type=int,
        metavar="Q",
        help="prime-power order of the base field (omit for symbolic output)",
    )
    base_opts.add_argument(
        "--max-degree", type=int, default=5, metavar="D", help="top KH degree"
    )

    parser = argparse.ArgumentParser(
        prog="stablekh",
        description="Exact invariants of stable module and cluster categories.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "exterior", parents=[common, base_opts], help="exterior algebra family"
    )
    p.add_argument("--generators", type=int, required=True)
    p.set_defaults(handler=_cmd_exterior)

    p = sub.add_parser(
        "group-algebra",
        parents=[common, base_opts],
        help="elementary abelian p-group algebra",
    )
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(handler=_cmd_group_algebra)

    p = sub.add_parser(
        "truncated", parents=[common, base_opts], help="truncated polynomial algebra"
    )
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(handler=_cmd_truncated)

    p = sub.add_parser(
        "nakayama", parents=[common, base_opts], help="self-injective Nakayama algebra"
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--length", type=int, required=True)
    p.set_defaults(handler=_cmd_nakayama)

    p = sub.add_parser(
        "algebra-file",
        parents=[common, base_opts],
        help="algebra from a JSON descriptor file",
    )
    p.add_argument("path")
    p.set_defaults(handler=_cmd_algebra_file)

    p = sub.add_parser(
        "cluster", parents=[common], help="type-A cluster category verdicts"
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--scan-to", type=int, metavar="N", help="also scan 2..N")
    p.set_defaults(handler=_cmd_cluster)

    p = sub.add_parser(
        "kgroups", parents=[common], help="K-groups of a finite field"
    )
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--max-degree", type=int, required=True)
    p.set_defaults(handler=_cmd_kgroups)

    p = sub.add_parser(
        "phi", parents=[common], help="exact shift matrix for exterior algebras"
    )
    p.add_argument("--generators", type=int, required=True)
    p.add_argument("--verify-snf", action="store_true")
    p.set_defaults(handler=_cmd_phi)

    p = sub.add_parser(
        "phantom-scan",
        parents=[common],
        help="flag algebras with unit Cartan determinant",
    )
    p.add_argument("paths", nargs="*", metavar="PATH")
    p.set_defaults(handler=_cmd_phantom_scan)

    p = sub.add_parser(
        "verify", parents=[common], help="cross-check kernels against oracles"
    )
    p.add_argument(
        "--suite",
        choices=("snf", "modkernel", "nakayama", "all"),
        required=True,
    )
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(handler=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        outcome = args.handler(args)
    except StablekhError as exc:
        _emit_error(exc.code, str(exc))
        return 1
    except FileNotFoundError as exc:
        _emit_error("file_not_found", str(exc.filename or exc))
        return 1
    if isinstance(outcome, tuple):
        report, bad = outcome
        _emit(report, args)
        if bad:
            _emit_error(
                "internal_inconsistency",
                f"oracle mismatch in suite(s): {', '.join(bad)}",
            )
            return 1
        return 0
    _emit(outcome, args)
    return 0


if __name__ == "__main__":
    sys.exit(main())
