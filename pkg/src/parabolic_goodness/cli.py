"""Command-line front end.

Input is one JSON document read from ``--input`` (a path, or ``-`` for stdin)::

    {"genus": 1, "weights": [2, 2], "alpha": {"rank": 2, "flags": [[1], [1]]}}

Each entry of ``flags`` has length ``w_i - 1``, so a point with ``w_i = 1``
takes an empty list.  The ``euler`` subcommand reads ``{"weights", "a", "b"}``
with ``a`` and ``b`` shaped like ``alpha``.

Exit codes: 0 ok, 1 bad input, 2 internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Sequence

from .core import (
    DimVector,
    ParabolicError,
    WeightType,
    euler_form,
    iter_grid,
    nontrivial_points,
    ZeroRank,
    q,
    sym_form,
    validate,
)
from .decomp import Decomposition, decompositions
from .dims import StackDims, nilpotent_objective, pairs_objective, stack_dims
from .goodness import SCALAR_AUT_DIM, Classification, decide

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2


class InputError(Exception):
    pass


class ConsistencyError(Exception):
    pass


@dataclass(frozen=True)
class ProblemSpec:
    genus: int
    weight_type: WeightType
    alpha: DimVector

    @classmethod
    def from_dict(cls, doc: dict, need_genus: bool = True) -> ProblemSpec:
        if not isinstance(doc, dict):
            raise InputError("input must be a JSON object")
        try:
            genus = doc["genus"] if need_genus else doc.get("genus", 0)
            wt = _parse_weights(doc.get("weights", []))
            alpha = _parse_vector(doc["alpha"], wt)
        except KeyError as exc:
            raise InputError(f"missing field {exc}") from None
        if not isinstance(genus, int) or isinstance(genus, bool) or genus < 0:
            raise InputError(f"genus must be a nonnegative integer, got {genus!r}")
        return cls(genus, wt, alpha)

    def to_dict(self) -> dict:
        return {
            "genus": self.genus,
            "weights": list(self.weight_type.weights),
            "alpha": self.alpha.to_dict(),
        }


def _parse_weights(doc) -> WeightType:
    if not isinstance(doc, list) or not all(isinstance(w, int) and not isinstance(w, bool) for w in doc):
        raise InputError(f"weights must be a list of integers, got {doc!r}")
    return WeightType(tuple(doc))


def _parse_vector(doc, wt: WeightType) -> DimVector:
    if not isinstance(doc, dict):
        raise InputError("a dimension vector must be an object with 'rank' and 'flags'")
    rank = doc.get("rank")
    flags = doc.get("flags", [])
    if not isinstance(rank, int) or isinstance(rank, bool):
        raise InputError(f"rank must be an integer, got {rank!r}")
    if not isinstance(flags, list) or not all(isinstance(r, list) for r in flags):
        raise InputError("flags must be a list of lists")
    for row in flags:
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in row):
            raise InputError(f"flag entries must be integers: {row!r}")
    return validate(rank, flags, wt)


def _read_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from None


def _witness(d: Decomposition | None):
    return None if d is None else d.to_list()


def build_report(spec: ProblemSpec) -> dict:
    """Dimensions and verdict for one problem, cross-checked against each other."""
    a, g = spec.alpha, spec.genus
    if a.rank < 1:
        raise ZeroRank("dimension vector must have positive rank")
    dims = stack_dims(a, g)
    verdict = decide(a, g)
    _check_consistency(spec, dims, verdict)
    return {
        **spec.to_dict(),
        "dim_bun": dims.dim_bun,
        "dim_nilp": dims.dim_nilp.value,
        "dim_pairs": dims.dim_pairs.value,
        "dim_inertia_excess": dims.dim_inertia_excess.value,
        "verdict": verdict.classification.value,
        "margin": verdict.margin,
        "witness": _witness(verdict.witness),
    }


def _check_consistency(spec: ProblemSpec, dims: StackDims, verdict) -> None:
    a, g = spec.alpha, spec.genus
    for name, res, objective in (
        ("dim_nilp", dims.dim_nilp, nilpotent_objective),
        ("dim_pairs", dims.dim_pairs, pairs_objective),
        ("dim_inertia_excess", dims.dim_inertia_excess, pairs_objective),
    ):
        if res.witness is None:
            continue
        if res.witness.total() != a:
            raise ConsistencyError(f"{name} witness does not sum to alpha")
        value = objective(res.witness, g)
        if value != res.value:
            raise ConsistencyError(f"{name} witness evaluates to {value}, reported {res.value}")
    excess = dims.dim_inertia_excess.value
    expected = None if excess is None else excess - SCALAR_AUT_DIM - dims.dim_bun
    if verdict.margin != expected:
        raise ConsistencyError(f"margin {verdict.margin} disagrees with dimensions ({expected})")
    if verdict.classification is not Classification.from_margin(verdict.margin):
        raise ConsistencyError("classification disagrees with margin")


def _fmt(x) -> str:
    return "-" if x is None else str(x)


def _print_table(rows: Sequence[tuple[str, object]]) -> None:
    width = max(len(k) for k, _ in rows)
    for key, value in rows:
        print(f"{key:<{width}}  {value}")


def _witness_str(parts) -> str:
    if parts is None:
        return "-"
    vecs = [f"({p['rank']};{','.join(str(r) for r in p['flags'])})".replace(" ", "") for p in parts]
    return "{" + ", ".join(vecs) + "}"


def cmd_decide(args) -> int:
    spec = ProblemSpec.from_dict(_read_json(args.input))
    report = build_report(spec)
    if args.format == "json":
        print(json.dumps(report))
    else:
        _print_table(
            [
                ("genus", report["genus"]),
                ("weights", report["weights"]),
                ("alpha", str(spec.alpha)),
                ("verdict", report["verdict"]),
                ("margin", _fmt(report["margin"])),
                ("witness", _witness_str(report["witness"])),
            ]
        )
    return EXIT_OK


def cmd_dims(args) -> int:
    spec = ProblemSpec.from_dict(_read_json(args.input))
    report = build_report(spec)
    if args.format == "json":
        keys = ("genus", "weights", "alpha", "dim_bun", "dim_nilp", "dim_pairs", "dim_inertia_excess")
        print(json.dumps({k: report[k] for k in keys}))
    else:
        _print_table(
            [
                ("bun", report["dim_bun"]),
                ("nilp", report["dim_nilp"]),
                ("pairs", report["dim_pairs"]),
                ("inertia-excess", _fmt(report["dim_inertia_excess"])),
            ]
        )
    return EXIT_OK


def cmd_decomps(args) -> int:
    spec = ProblemSpec.from_dict(_read_json(args.input), need_genus=False)
    stream = decompositions(spec.alpha, args.min_parts, args.max_parts)
    for d in stream:
        if args.format == "json":
            print(json.dumps({"t": d.t, "parts": d.to_list()}))
        else:
            print(d)
    return EXIT_OK


def cmd_euler(args) -> int:
    doc = _read_json(args.input)
    if not isinstance(doc, dict) or "a" not in doc or "b" not in doc:
        raise InputError("euler input needs 'weights', 'a' and 'b'")
    wt = _parse_weights(doc.get("weights", []))
    a, b = _parse_vector(doc["a"], wt), _parse_vector(doc["b"], wt)
    out = {"euler": euler_form(a, b), "sym": sym_form(a, b), "q_a": q(a), "q_b": q(b)}
    if args.format == "json":
        print(json.dumps(out))
    else:
        print(out["euler"])
    return EXIT_OK


def _parse_genus_list(text: str) -> list[int]:
    try:
        values = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"bad genus list {text!r}") from None
    if not values or any(g < 0 for g in values):
        raise InputError(f"genus list must be nonempty and nonnegative: {text!r}")
    return sorted(set(values))


def remark38_violation(a: DimVector, g: int, cls: Classification) -> str | None:
    """Why a scan instance contradicts the genus-regime claims, or None."""
    n = nontrivial_points(a)
    if g >= 2 and cls is not Classification.ALMOST_VERY_GOOD:
        return "genus >= 2 but not almost very good"
    if g == 1 and n >= 2 and cls is not Classification.ALMOST_VERY_GOOD:
        return "genus 1 with two nontrivial flag points but not almost very good"
    if g == 1 and n >= 1 and not cls.almost_good:
        return "genus 1 with a nontrivial flag point but not almost good"
    return None


def scan(max_rank: int, max_points: int, max_flag_len: int, genera: Sequence[int]):
    """Yield ``(genus, alpha, verdict)`` over the bounded grid in canonical order."""
    for a in iter_grid(max_rank, max_points, max_flag_len):
        for g in genera:
            yield g, a, decide(a, g)


def cmd_scan(args) -> int:
    if args.max_rank < 1:
        raise InputError("--max-rank must be >= 1")
    if args.max_points < 0 or args.max_flag_len < 1:
        raise InputError("--max-points must be >= 0 and --max-flag-len >= 1")
    genera = _parse_genus_list(args.genus)
    counts = {g: {c.value: 0 for c in Classification} for g in genera}
    violations = []
    for g, a, v in scan(args.max_rank, args.max_points, args.max_flag_len, genera):
        counts[g][v.classification.value] += 1
        why = remark38_violation(a, g, v.classification) if args.assert_remark38 else None
        if why:
            violations.append((g, a, why))
        if args.list and (args.verdict is None or args.verdict == v.classification.value):
            if args.format == "json":
                row = {
                    "genus": g,
                    "weights": list(a.weight_type.weights),
                    "alpha": a.to_dict(),
                    "verdict": v.classification.value,
                    "margin": v.margin,
                }
                print(json.dumps(row))
            else:
                print(f"g={g:<2} w={list(a.weight_type.weights)!s:<12} {a!s:<24} {v.classification.value:<18} {_fmt(v.margin)}")
    if args.format == "json":
        print(json.dumps({"summary": {str(g): c for g, c in counts.items()}, "violations": len(violations)}))
    else:
        header = ["genus"] + [c.value for c in Classification] + ["total"]
        print("  ".join(f"{h:>18}" for h in header))
        for g, c in counts.items():
            cells = [str(g)] + [str(c[k.value]) for k in Classification] + [str(sum(c.values()))]
            print("  ".join(f"{x:>18}" for x in cells))
    for g, a, why in violations:
        print(f"VIOLATION g={g} w={list(a.weight_type.weights)} alpha={a}: {why}", file=sys.stderr)
    if args.assert_remark38:
        if violations:
            return EXIT_INTERNAL
        print("genus-regime assertions: pass", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parabolic-goodness",
        description="Almost good / almost very good checks for moduli stacks of parabolic bundles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_input=True):
        if with_input:
            p.add_argument("--input", default="-", help="JSON file, or - for stdin (default)")
        p.add_argument("--format", choices=("human", "json"), default="human")

    common(sub.add_parser("decide", help="classify one dimension vector"))
    common(sub.add_parser("dims", help="print the stack dimensions"))
    p = sub.add_parser("decomps", help="list decompositions into positive-rank parts")
    common(p)
    p.add_argument("--min-parts", type=int, default=1)
    p.add_argument("--max-parts", type=int, default=None)
    common(sub.add_parser("euler", help="evaluate the Euler form <a, b>"))

    p = sub.add_parser(
        "scan",
        help="classify every vector within bounds",
        description=(
            "Enumerate every weight type and positive-rank dimension vector within the bounds "
            "and classify each for the listed genera. A flag point is nontrivial when some "
            "stored entry lies strictly between 0 and the rank."
        ),
    )
    common(p, with_input=False)
    p.add_argument("--max-rank", type=int, default=3)
    p.add_argument("--max-points", type=int, default=2)
    p.add_argument("--max-flag-len", type=int, default=2)
    p.add_argument("--genus", default="0,1,2,3", help="comma-separated genera")
    p.add_argument("--verdict", choices=[c.value for c in Classification], default=None,
                   help="with --list, only show instances with this verdict")
    p.add_argument("--list", action="store_true", help="print every instance")
    p.add_argument(
        "--assert-remark38",
        action="store_true",
        help=(
            "exit 2 unless: every g >= 2 instance is almost very good; every g = 1 instance "
            "with a nontrivial flag point is almost good; every g = 1 instance with two "
            "nontrivial flag points is almost very good"
        ),
    )
    return parser


COMMANDS = {
    "decide": cmd_decide,
    "dims": cmd_dims,
    "decomps": cmd_decomps,
    "euler": cmd_euler,
    "scan": cmd_scan,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (InputError, ParabolicError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ConsistencyError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
