"""Command-line front end.

Every command emits one JSON report document on stdout (schema
"hallkit-report v1") and exits 0 when the check passed, 1 when a mathematical
check failed, and 2 on usage or input errors. `--pretty` renders the report
as text instead; `--no-timing` drops timing fields so reports are
byte-reproducible.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import enumeration
from .constructions import (
    as_group,
    check_pairs_embedding,
    conjugation_action,
    cyclic_group,
    hall_embedding,
    hall_factorization,
    power_semigroup,
    project_to_hall,
    semidirect_product,
    symmetric_group_table,
)
from .relations import (
    Relation,
    compose,
    emit_relmat,
    is_hall,
    parse_relmat,
    permutations_lex,
    reflexive_relations,
)
from .semigroups import (
    check_homomorphism,
    find_division,
    green_summary,
    is_block_group,
    parse_cayley,
)

SCHEMA = "hallkit-report v1"


def parse_relation_file(path: str) -> Relation:
    try:
        text = open(path, encoding="utf-8").read()
    except OSError as exc:
        raise ValueError(f"{path}: {exc.strerror or exc}") from None
    try:
        return parse_relmat(text)
    except ValueError as exc:
        raise ValueError(f"{path}: {exc}") from None


def parse_cayley_file(path: str):
    try:
        text = open(path, encoding="utf-8").read()
    except OSError as exc:
        raise ValueError(f"{path}: {exc.strerror or exc}") from None
    try:
        return parse_cayley(text)
    except ValueError as exc:
        raise ValueError(f"{path}: {exc}") from None


def _load_group(spec: str):
    kind, sep, arg = spec.partition(":")
    if not sep:
        raise ValueError(f"group spec {spec!r} must look like cyclic:<m>, symmetric:<n> or file:<path>")
    if kind == "cyclic":
        return cyclic_group(int(arg))
    if kind == "symmetric":
        return symmetric_group_table(int(arg))
    if kind == "file":
        return as_group(parse_cayley_file(arg))
    raise ValueError(f"unknown group kind {kind!r}")


def _labels(semi, indices):
    return [semi.labels[i] for i in indices]


def _cmd_check_hall(args):
    r = parse_relation_file(args.relation)
    witness = is_hall(r)
    results = {
        "dim": r.dim,
        "hall": witness is not None,
        "witness": list(witness.one_based()) if witness else None,
    }
    if witness is not None:
        return results, "pass", []
    return results, "fail", ["no permutation is contained in the relation"]


def _cmd_compose(args):
    r = parse_relation_file(args.left)
    s = parse_relation_file(args.right)
    out = compose(r, s)
    return {"dim": out.dim, "relation": emit_relmat(out)}, "pass", []


def _cmd_analyze(args):
    semi = parse_cayley_file(args.cayley)
    green = green_summary(semi)
    block, pair = is_block_group(semi)
    results = {
        "size": semi.size,
        "identity": semi.labels[semi.identity] if semi.identity is not None else None,
        "idempotents": _labels(semi, green.idempotent_indices),
        "r_classes": [_labels(semi, c) for c in green.r_classes],
        "l_classes": [_labels(semi, c) for c in green.l_classes],
        "j_classes": [_labels(semi, c) for c in green.j_classes],
        "is_j_trivial": all(len(c) == 1 for c in green.j_classes),
        "is_block_group": block,
        "block_group_witness": _labels(semi, pair) if pair else None,
    }
    return results, "pass", []


def _cmd_power_group(args):
    group = _load_group(args.group)
    power, _masks = power_semigroup(group.base)
    block, pair = is_block_group(power)
    results = {
        "group": args.group,
        "group_order": group.size,
        "power_order": power.size,
        "is_block_group": block,
        "witness": _labels(power, pair) if pair else None,
    }
    if block:
        return results, "pass", []
    return results, "fail", [f"idempotent pair {results['witness']}"]


def _cmd_embed(args):
    group = _load_group(args.group)
    table = hall_embedding(group)
    injective, multiplicative, pairs = check_pairs_embedding(group, table)
    results = {
        "group": args.group,
        "group_order": group.size,
        "subsets": len(table),
        "injective": injective,
        "multiplicative": multiplicative,
        "pairs_checked": pairs,
    }
    if injective and multiplicative:
        return results, "pass", []
    witnesses = []
    if not injective:
        witnesses.append("two subsets map to the same relation")
    if not multiplicative:
        witnesses.append("some product of images differs from the image of the product")
    return results, "fail", witnesses


def _cmd_semidirect(args):
    n = args.n
    action = conjugation_action(n)
    sd, sd_pairs = semidirect_product(action.target, action.group, action)
    hall, hall_elems = enumeration.materialize_hall(n)
    refl_elems = list(reflexive_relations(n))
    perms = permutations_lex(n)
    index = {r: i for i, r in enumerate(hall_elems)}
    mapping = tuple(index[project_to_hall(refl_elems[mi], perms[gi])] for (mi, gi) in sd_pairs)
    hom = check_homomorphism(mapping, sd, hall)
    roundtrip = all(project_to_hall(*hall_factorization(s)) == s for s in hall_elems)
    results = {
        "n": n,
        "semidirect_order": sd.size,
        "hall_order": hall.size,
        "homomorphism": hom.is_homomorphism,
        "surjective": hom.surjective,
        "factorization_roundtrip": roundtrip,
    }
    if hom.is_homomorphism and hom.surjective and roundtrip:
        return results, "pass", []
    return results, "fail", ["projection onto the Hall monoid failed a check"]


def _cmd_count_hall(args):
    workers = args.workers
    if workers is None:
        workers = int(os.environ.get("HALLKIT_WORKERS", "1"))
    report = enumeration.count_hall(args.n, workers)
    results = {
        "n": report.n,
        "total_hall": report.total_hall,
        "total_reflexive": report.total_reflexive,
        "idempotent_hall": report.idempotent_hall,
        "idempotents_all_reflexive": report.idempotents_all_reflexive,
    }
    if not args.no_timing:
        results["elapsed_seconds"] = round(report.elapsed_seconds, 6)
    return results, "pass", []


def _cmd_campaign(args):
    start = time.perf_counter()
    report = enumeration.verification_campaign(args.n)
    results = {
        "n": report.n,
        "checks": [
            {
                "name": c.name,
                "passed": c.passed,
                "details": c.details,
                "witnesses": list(c.witnesses),
            }
            for c in report.checks
        ],
    }
    if not args.no_timing:
        results["elapsed_seconds"] = round(time.perf_counter() - start, 6)
    if report.passed:
        return results, "pass", []
    return results, "fail", [c.name for c in report.checks if not c.passed]


def _cmd_divide(args):
    source = parse_cayley_file(args.source)
    target = parse_cayley_file(args.target)
    witness = find_division(source, target, max_generators=args.max_generators)
    if witness is None:
        note = (
            f"no witness within bounds (generator subsets up to size {args.max_generators});"
            " absence within bounds is not a proof of non-division"
        )
        return {"found": False, "note": note}, "fail", [note]
    sub = witness.subsemigroup
    results = {
        "found": True,
        "generators": _labels(target, witness.generator_indices),
        "subsemigroup": list(sub.labels),
        "mapping": {sub.labels[i]: source.labels[v] for i, v in enumerate(witness.mapping)},
    }
    return results, "pass", []


def _render_pretty(report):
    lines = [f"{report['command']}: {report['status']}"]
    for key, value in sorted(report["inputs"].items()):
        lines.append(f"  input {key} = {value}")

    def emit(prefix, value):
        if isinstance(value, dict):
            for k in sorted(value):
                emit(f"{prefix}{k}.", value[k])
        elif isinstance(value, list):
            lines.append(f"  {prefix[:-1]} = {json.dumps(value)}")
        else:
            lines.append(f"  {prefix[:-1]} = {value}")

    emit("", report["results"])
    for w in report["witnesses"]:
        lines.append(f"  witness: {w}")
    return "\n".join(lines) + "\n"


def _build_parser():
    parser = argparse.ArgumentParser(prog="hallkit", description=__doc__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="render a text report instead of JSON")
    common.add_argument("--no-timing", action="store_true", help="omit timing fields from the report")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-hall", parents=[common], help="find a contained permutation")
    p.add_argument("relation")
    p.set_defaults(handler=_cmd_check_hall, echo=lambda a: {"relation": a.relation})

    p = sub.add_parser("compose", parents=[common], help="relation product of two files")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(handler=_cmd_compose, echo=lambda a: {"left": a.left, "right": a.right})

    p = sub.add_parser("analyze", parents=[common], help="Green's classes and structure checks")
    p.add_argument("cayley")
    p.set_defaults(handler=_cmd_analyze, echo=lambda a: {"cayley": a.cayley})

    p = sub.add_parser("power-group", parents=[common], help="power semigroup block-group check")
    p.add_argument("--group", required=True)
    p.set_defaults(handler=_cmd_power_group, echo=lambda a: {"group": a.group})

    p = sub.add_parser("embed", parents=[common], help="subset-to-relation embedding check")
    p.add_argument("--group", required=True)
    p.set_defaults(handler=_cmd_embed, echo=lambda a: {"group": a.group})

    p = sub.add_parser("semidirect", parents=[common], help="semidirect product surjection check")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=_cmd_semidirect, echo=lambda a: {"n": a.n})

    p = sub.add_parser("count-hall", parents=[common], help="stream-count Hall matrices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(
        handler=_cmd_count_hall,
        echo=lambda a: {
            "n": a.n,
            "workers": a.workers if a.workers is not None
            else int(os.environ.get("HALLKIT_WORKERS", "1")),
        },
    )

    p = sub.add_parser("campaign", parents=[common], help="run the verification campaign")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=_cmd_campaign, echo=lambda a: {"n": a.n})

    p = sub.add_parser("divide", parents=[common], help="bounded division witness search")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--max-generators", type=int, default=3)
    p.set_defaults(
        handler=_cmd_divide,
        echo=lambda a: {"source": a.source, "target": a.target, "max_generators": a.max_generators},
    )
    return parser


def dispatch(argv):
    """Run one command; returns (report dict or None, exit code)."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return None, 2 if exc.code else 0
    report = {
        "schema": SCHEMA,
        "command": args.command,
        "inputs": args.echo(args),
    }
    try:
        results, status, witnesses = args.handler(args)
    except ValueError as exc:
        report["results"] = {}
        report["status"] = "error"
        report["witnesses"] = [str(exc)]
        return report, 2
    report["results"] = results
    report["status"] = status
    report["witnesses"] = witnesses
    return report, 0 if status == "pass" else 1


def render(report, pretty: bool = False) -> str:
    if pretty:
        return _render_pretty(report)
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def main(argv=None):
    if argv is None:
        argv = sys.argv[1:]
    report, code = dispatch(argv)
    if report is not None:
        sys.stdout.write(render(report, pretty="--pretty" in argv))
    sys.exit(code)


if __name__ == "__main__":
    main()
