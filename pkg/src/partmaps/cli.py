"""Command-line front end.

Examples::

    partmaps check -p "0,1|2" -f "2,2,0" --predicate sigma
    partmaps count --profile "2:2" --set S
    partmaps enumerate -p "0,1|2" --set Sigma --format json
    partmaps quotient -p "0,1|2"
    partmaps character -p "0,1|2" -f "2,2,0"
    partmaps find-partition -f "1,0,3,2,4" --verify
    partmaps verify --n-max 5

Exit codes: 0 success or predicate true, 1 predicate false (or a failed
verification), 2 input error, 3 work guard exceeded.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from math import factorial

from .core import (
    DEFAULT_GUARD,
    GuardExceededError,
    ParseError,
    PartitionProfile,
    SetPartition,
    Transformation,
    format_partition,
    format_transformation,
    parse_partition,
    parse_transformation,
    profile_of,
)
from .counting import (
    count_sigma_grouped,
    count_sigma_idempotents,
    count_t,
    count_units,
)
from .cycles import find_preserved_partition, preserved_m_partition_exists
from .enumeration import chi_classes, iter_idempotents, iter_sigma, iter_t, iter_units
from .membership import (
    character,
    in_sigma,
    in_units,
    is_e_star_preserving,
    is_idempotent,
    preserves,
    sigma_idempotent_via_blocks,
    sigma_via_character,
    sigma_via_topology,
)
from .verification import run_verification

PREDICATES = (
    "preserves",
    "sigma",
    "sigma-character",
    "sigma-topology",
    "estar",
    "units",
    "idempotent",
    "sigma-idempotent",
)

SETS = ("T", "Sigma", "S", "E-Sigma", "E-T")


def _infer_n_from_map(text: str) -> int:
    return text.count(",") + 1


def _infer_n_from_partition(text: str) -> int:
    points = []
    for chunk in text.split("|"):
        for tok in chunk.split(","):
            tok = tok.strip()
            if not tok:
                continue
            try:
                points.append(int(tok))
            except ValueError:
                raise ParseError(f"invalid point {tok!r}") from None
    if not points:
        raise ParseError("empty partition text")
    return max(points) + 1


def _load_partition(text: str, n: int | None = None) -> SetPartition:
    if n is None:
        n = _infer_n_from_partition(text)
    return parse_partition(text, n)


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload))


def _emit_csv(rows: list[list[str]]) -> None:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerows(rows)


def _apply_predicate(name: str, f: Transformation, p: SetPartition | None) -> bool:
    if name == "idempotent":
        return is_idempotent(f)
    assert p is not None
    table = {
        "preserves": preserves,
        "sigma": in_sigma,
        "sigma-character": sigma_via_character,
        "sigma-topology": sigma_via_topology,
        "estar": is_e_star_preserving,
        "units": in_units,
        "sigma-idempotent": sigma_idempotent_via_blocks,
    }
    return table[name](f, p)


def _false_reason(name: str, f: Transformation, p: SetPartition | None) -> str:
    if name == "idempotent":
        return "map differs from its own square"
    assert p is not None
    if not preserves(f, p):
        idx = p.block_index
        for i, block in enumerate(p.blocks):
            hit = {idx[f.images[x]] for x in block}
            if len(hit) > 1:
                return f"block {i} splits across blocks {sorted(hit)}"
    if name in ("sigma", "sigma-character", "sigma-topology", "estar"):
        idx = p.block_index
        hit = {idx[y] for y in f.images}
        missed = [j for j in range(p.m) if j not in hit]
        if missed:
            return f"image misses block {missed[0]}"
        return "character map is not injective"
    if name == "units":
        if not f.is_bijection():
            return "map is not a bijection"
        return "a block restriction is not onto its codomain block"
    if name == "sigma-idempotent":
        return "a block restriction is not an idempotent selfmap"
    return ""


def cmd_check(args: argparse.Namespace) -> int:
    f = parse_transformation(args.map, _infer_n_from_map(args.map))
    p = None
    if args.predicate != "idempotent":
        if args.partition is None:
            raise ParseError(f"predicate {args.predicate!r} needs a partition (-p)")
        p = _load_partition(args.partition, f.n)
    elif args.partition is not None:
        p = _load_partition(args.partition, f.n)
    result = _apply_predicate(args.predicate, f, p)
    if args.format == "json":
        payload = {
            "command": "check",
            "predicate": args.predicate,
            "map": format_transformation(f),
            "partition": format_partition(p) if p is not None else None,
            "result": result,
        }
        if p is not None and preserves(f, p):
            payload["character"] = str(character(f, p))
        if not result:
            payload["reason"] = _false_reason(args.predicate, f, p)
        _emit_json(payload)
    elif args.format == "csv":
        _emit_csv([["predicate", "result"], [args.predicate, str(result).lower()]])
    else:
        print("true" if result else "false")
    return 0 if result else 1


def _parse_profile(text: str) -> PartitionProfile:
    entries = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        size_s, sep, mult_s = chunk.partition(":")
        if not sep:
            raise ParseError(f"invalid profile entry {chunk!r}, expected size:multiplicity")
        try:
            entries.append((int(size_s), int(mult_s)))
        except ValueError:
            raise ParseError(f"invalid profile entry {chunk!r}") from None
    try:
        return PartitionProfile(tuple(entries))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def cmd_count(args: argparse.Namespace) -> int:
    if (args.partition is None) == (args.profile is None):
        raise ParseError("give exactly one of -p/--partition and --profile")
    if args.partition is not None:
        profile = profile_of(_load_partition(args.partition))
    else:
        profile = _parse_profile(args.profile)
    if args.set == "T":
        value = count_t(profile)
    elif args.set == "Sigma":
        value = count_sigma_grouped(profile, guard=args.guard)
    elif args.set == "S":
        value = count_units(profile)
    else:  # E-Sigma; E-T has no formula and is rejected by the parser
        value = count_sigma_idempotents(profile)
    if args.format == "json":
        _emit_json(
            {
                "command": "count",
                "set": args.set,
                "profile": ",".join(f"{s}:{c}" for s, c in profile.entries),
                "count": str(value),
            }
        )
    elif args.format == "csv":
        _emit_csv([["set", "count"], [args.set, str(value)]])
    else:
        print(value)
    return 0


def _member_stream(p: SetPartition, set_name: str, strategy: str, guard: int):
    if set_name == "T":
        return iter_t(p, strategy, guard)
    if set_name == "Sigma":
        return iter_sigma(p, strategy, guard)
    if set_name == "S":
        return iter_units(p, strategy, guard)
    if set_name == "E-Sigma":
        return iter_idempotents(p, "sigma", strategy, guard)
    return iter_idempotents(p, "t", strategy, guard)


def cmd_enumerate(args: argparse.Namespace) -> int:
    p = _load_partition(args.partition)
    stream = _member_stream(p, args.set, args.strategy, args.guard)
    maps: list[Transformation] = []
    truncated = False
    for f in stream:
        if args.limit is not None and len(maps) == args.limit:
            truncated = True
            break
        maps.append(f)
    if args.format == "json":
        _emit_json(
            {
                "command": "enumerate",
                "set": args.set,
                "partition": format_partition(p),
                "maps": [format_transformation(f) for f in maps],
                "total": len(maps),
                "truncated": truncated,
            }
        )
    elif args.format == "csv":
        header = [f"x{i}" for i in range(p.n)]
        _emit_csv([header] + [[str(y) for y in f.images] for f in maps])
    else:
        for f in maps:
            print(format_transformation(f))
        suffix = " (truncated)" if truncated else ""
        print(f"# total: {len(maps)}{suffix}")
    return 0


def cmd_quotient(args: argparse.Namespace) -> int:
    p = _load_partition(args.partition)
    classes = chi_classes(p, guard=args.guard)
    expected = factorial(p.m)
    total = sum(cls.size for cls in classes)
    sigma_count = count_sigma_grouped(profile_of(p), guard=args.guard)
    consistent = len(classes) == expected and total == sigma_count
    if args.format == "json":
        _emit_json(
            {
                "command": "quotient",
                "partition": format_partition(p),
                "classes": [
                    {
                        "character": str(cls.character),
                        "size": str(cls.size),
                        "representative": format_transformation(cls.representative),
                    }
                    for cls in classes
                ],
                "class_count": len(classes),
                "expected_class_count": expected,
                "total": str(total),
                "sigma_count": str(sigma_count),
                "consistent": consistent,
            }
        )
    elif args.format == "csv":
        rows = [["character", "size"]]
        rows += [[str(cls.character), str(cls.size)] for cls in classes]
        _emit_csv(rows)
    else:
        for cls in classes:
            print(f"{cls.character} {cls.size}")
        print(
            f"# classes: {len(classes)} (expected {expected}), total: {total}, "
            f"sigma: {sigma_count}, consistent: {str(consistent).lower()}"
        )
    return 0 if consistent else 1


def cmd_character(args: argparse.Namespace) -> int:
    f = parse_transformation(args.map, _infer_n_from_map(args.map))
    p = _load_partition(args.partition, f.n)
    chi = character(f, p)
    if args.format == "json":
        _emit_json(
            {
                "command": "character",
                "map": format_transformation(f),
                "partition": format_partition(p),
                "character": str(chi),
                "surjective": chi.is_surjective(),
                "injective": chi.is_injective(),
            }
        )
    elif args.format == "csv":
        _emit_csv([["character"], [str(chi)]])
    else:
        print(chi)
    return 0


def cmd_find_partition(args: argparse.Namespace) -> int:
    f = parse_transformation(args.map, _infer_n_from_map(args.map))
    if args.m is not None:
        _, witness = preserved_m_partition_exists(f, args.m)
    else:
        witness = find_preserved_partition(f)
    verified = None
    if witness is not None and args.verify:
        if f.is_bijection():
            verified = in_units(f, witness)
        else:
            verified = preserves(f, witness)
    if args.format == "json":
        _emit_json(
            {
                "command": "find-partition",
                "map": format_transformation(f),
                "m": args.m,
                "partition": format_partition(witness) if witness is not None else None,
                "verified": verified,
            }
        )
    else:
        print("none" if witness is None else format_partition(witness))
    if witness is None:
        return 1
    if verified is False:
        print("error: witness failed the membership re-check", file=sys.stderr)
        return 1
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    results = run_verification(args.n_max, guard=args.guard)
    all_passed = all(r.passed for r in results)
    if args.format == "json":
        _emit_json(
            {
                "command": "verify",
                "n_max": args.n_max,
                "checks": [
                    {"name": r.name, "passed": r.passed, "cases": r.cases, "detail": r.detail}
                    for r in results
                ],
                "all_passed": all_passed,
            }
        )
    elif args.format == "csv":
        rows = [["name", "passed", "cases"]]
        rows += [[r.name, str(r.passed).lower(), str(r.cases)] for r in results]
        _emit_csv(rows)
    else:
        for r in results:
            mark = "PASS" if r.passed else "FAIL"
            print(f"[{mark}] {r.name}: {r.detail}")
        print(f"# {'all checks passed' if all_passed else 'SOME CHECKS FAILED'}")
    return 0 if all_passed else 1


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("lines", "json", "csv"), default="lines", help="output format"
    )
    common.add_argument(
        "--guard",
        type=int,
        default=DEFAULT_GUARD,
        help="cap on candidate maps an operation may visit",
    )
    common.add_argument("--limit", type=int, default=None, help="truncate enumerations")

    parser = argparse.ArgumentParser(
        prog="partmaps",
        description="Transformations of a finite set that preserve a set partition.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", parents=[common], help="evaluate a membership predicate")
    p_check.add_argument("-p", "--partition", help='partition text, e.g. "0,1|2"')
    p_check.add_argument("-f", "--map", required=True, help='image table, e.g. "2,2,0"')
    p_check.add_argument("--predicate", choices=PREDICATES, required=True)
    p_check.set_defaults(func=cmd_check)

    p_count = sub.add_parser("count", parents=[common], help="exact cardinality of a member set")
    p_count.add_argument("-p", "--partition")
    p_count.add_argument("--profile", help='size:multiplicity pairs, e.g. "2:1,1:1"')
    p_count.add_argument("--set", choices=("T", "Sigma", "S", "E-Sigma"), required=True)
    p_count.set_defaults(func=cmd_count)

    p_enum = sub.add_parser("enumerate", parents=[common], help="list the members of a set")
    p_enum.add_argument("-p", "--partition", required=True)
    p_enum.add_argument("--set", choices=SETS, required=True)
    p_enum.add_argument("--strategy", choices=("brute", "constructive"), default="constructive")
    p_enum.set_defaults(func=cmd_enumerate)

    p_quot = sub.add_parser(
        "quotient", parents=[common], help="character classes of Sigma with sizes"
    )
    p_quot.add_argument("-p", "--partition", required=True)
    p_quot.set_defaults(func=cmd_quotient)

    p_char = sub.add_parser(
        "character", parents=[common], help="induced map on block indices"
    )
    p_char.add_argument("-p", "--partition", required=True)
    p_char.add_argument("-f", "--map", required=True)
    p_char.set_defaults(func=cmd_character)

    p_find = sub.add_parser(
        "find-partition", parents=[common], help="nontrivial partition preserved by a map"
    )
    p_find.add_argument("-f", "--map", required=True)
    p_find.add_argument("-m", type=int, default=None, help="require exactly m blocks (full cycles)")
    p_find.add_argument("--verify", action="store_true", help="re-check membership before printing")
    p_find.set_defaults(func=cmd_find_partition)

    p_verify = sub.add_parser(
        "verify", parents=[common], help="run the cross-validation harness"
    )
    p_verify.add_argument("--n-max", type=int, required=True, dest="n_max")
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GuardExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
