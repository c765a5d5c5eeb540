"""Command line front end.

Exit codes: 0 success, 1 unreadable document, 2 failed precondition or
validation, 3 a theorem-guaranteed property did not hold. On failure the
message and a JSON witness go to stderr and nothing is written to --out.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Callable, Optional, Sequence

from catalog.fixtures import CATALOG, fixture
from cli import render
from cli.documents import Job, dumps, job_document, load_json, parse_job
from core.config import config
from core.errors import DocumentError, GradedLieError, InvariantViolation, PreconditionError
from grading.certificates import check_lemma1, check_lemma2_all
from grading.duality import action_to_grading, grading_to_action
from grading.grading import Grading, trivial_grading
from grading.simplicity import is_graded_simple
from groups.finite_group import cyclic
from structure.decomposition import graded_simple_decomposition
from structure.levi import homogeneous_levi, radical_gradedness
from structure.report import StructureReport, certify_report, homogeneous_doc, theorem1_report, vector_doc

logger = logging.getLogger(__name__)

Result = tuple[str, dict]


def _read_job(path: str) -> Job:
    """A job document, or a result document whose embedded job is re-ingested."""
    raw = load_json(path)
    if isinstance(raw, dict) and isinstance(raw.get("job"), dict):
        raw = raw["job"]
    return parse_job(raw)


def _grading(job: Job) -> Grading:
    """The job's grading; an ungraded algebra gets the trivial grading by the one-element group."""
    if job.grading is not None:
        return job.grading
    return trivial_grading(job.algebra, cyclic(1))


def _wrap(command: str, job_doc: dict, result: dict) -> dict:
    return {"command": command, "job": job_doc, "result": result}


def _vectors(space) -> list:
    return [vector_doc(v) for v in space.basis]


# -------------------- commands --------------------

def cmd_validate(args) -> Result:
    job = _read_job(args.file)
    grading = _grading(job)
    commutative, _ = grading.support_is_commutative()
    result = {
        "valid": True,
        "dim": job.algebra.dim,
        "group": grading.group.label,
        "support": [g.name for g in grading.support()],
        "support_commutative": commutative,
        "generated_subgroup_order": len(grading.generated_support_subgroup()),
    }
    return "valid\n" + render.grading_summary(grading), _wrap("validate", job_document(job.algebra, grading), result)


def cmd_support(args) -> Result:
    job = _read_job(args.file)
    grading = _grading(job)
    commutative, pair = grading.support_is_commutative()
    result = {
        "support": [g.name for g in grading.support()],
        "commutative": commutative,
        "noncommuting_pair": [pair[0].name, pair[1].name] if pair else None,
        "generated_subgroup_order": len(grading.generated_support_subgroup()),
    }
    return render.support(grading), _wrap("support", job_document(job.algebra, grading), result)


def cmd_radical(args) -> Result:
    job = _read_job(args.file)
    grading = _grading(job)
    space, certificate = radical_gradedness(grading)
    result = {
        "basis": _vectors(space.subspace),
        "components": {g.name: _vectors(part) for g, part in sorted(space.components.items())},
        "certificate": certificate.to_document(),
    }
    return render.radical(space, certificate), _wrap("radical", job_document(job.algebra, grading), result)


def cmd_levi(args) -> Result:
    job = _read_job(args.file)
    grading = _grading(job)
    space, certificate = homogeneous_levi(grading)
    result = {
        "basis": [homogeneous_doc(v, g) for v, g in certificate.basis],
        "certificate": certificate.to_document(),
    }
    return render.levi(grading, certificate), _wrap("levi", job_document(job.algebra, grading), result)


def cmd_decompose(args) -> Result:
    job = _read_job(args.file)
    grading = _grading(job)
    items = graded_simple_decomposition(grading)
    result = {
        "blocks": [
            {
                "support": [g.name for g in b.support],
                "dim": b.dim,
                "count": b.count,
                "labels": b.labels,
                "isomorphism": b.isomorphism,
                "basis": _vectors(b.ideal.subspace),
            }
            for b in items
        ]
    }
    return render.blocks(items), _wrap("decompose", job_document(job.algebra, grading), result)


def cmd_graded_simple(args) -> Result:
    job = _read_job(args.file)
    grading = _grading(job)
    answer, reason = is_graded_simple(grading)
    text = f"graded simple: {'yes' if answer else 'no'} ({reason})"
    return text, _wrap("graded-simple", job_document(job.algebra, grading),
                       {"graded_simple": answer, "reason": reason})


def cmd_lemma_check(args) -> Result:
    job = _read_job(args.file)
    grading = _grading(job)
    chains = check_lemma1(grading, args.max_chain)
    products = check_lemma2_all(grading)
    result = {"chains": chains.to_document(), "ideal_products": [c.to_document() for c in products]}
    return render.lemma(chains, products), _wrap("lemma-check", job_document(job.algebra, grading), result)


def cmd_dualize(args) -> Result:
    job = _read_job(args.file)
    if job.grading is None:
        raise PreconditionError("dualize needs a grading")
    family = grading_to_action(job.grading)
    result = {"characters": [chi.name for chi in family.dual], "group": family.group.label}
    return render.family(family), _wrap("dualize", job_document(job.algebra, family=family), result)


def cmd_grade(args) -> Result:
    job = _read_job(args.file)
    if job.family is None:
        raise PreconditionError("grade needs an automorphism family")
    grading = action_to_grading(job.algebra, job.family)
    result = {
        "fibers": {
            g.name: [grading.algebra.names[i] for i in grading.fiber_indices(g)] for g in grading.support()
        },
        "rebased": grading.algebra is not job.algebra,
    }
    return render.grading_summary(grading), _wrap("grade", job_document(grading.algebra, grading), result)


def cmd_report(args) -> Result:
    job = _read_job(args.file)
    grading = _grading(job)
    result: StructureReport = theorem1_report(grading)
    return render.report(result), _wrap("report", job_document(job.algebra, grading), result.to_document())


def cmd_certify(args) -> Result:
    raw = load_json(args.file)
    if not isinstance(raw, dict) or not isinstance(raw.get("job"), dict) or not isinstance(raw.get("result"), dict):
        raise DocumentError("certify expects the JSON output of the report command", args.file)
    job = parse_job(raw["job"])
    ok, failures = certify_report(_grading(job), raw["result"])
    if not ok:
        raise InvariantViolation("report failed certification", {"failures": failures})
    return "report certified", _wrap("certify", raw["job"], {"certified": True})


def cmd_catalog_list(args) -> Result:
    entries = []
    lines = []
    for name, build in CATALOG.items():
        item = build()
        entries.append({
            "name": name,
            "dim": item.algebra.dim,
            "group": item.group.label,
            "description": item.description,
        })
        lines.append(f"{name:22} dim {item.algebra.dim:3}  {item.group.label:28} {item.description}")
    return "\n".join(lines), {"command": "catalog list", "fixtures": entries}


def cmd_catalog_emit(args) -> Result:
    item = fixture(args.name, args.seed)
    doc = job_document(item.algebra, item.grading)
    return dumps(doc), doc


# -------------------- parser --------------------

def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the machine-readable document")
    common.add_argument("--out", metavar="PATH", help="also write the machine-readable document to PATH")
    common.add_argument("--max-group-order", type=_positive, metavar="K",
                        help="largest group order accepted (default from configuration, 64)")
    common.add_argument("-v", "--verbose", action="count", default=0, help="log progress to stderr")

    parser = argparse.ArgumentParser(prog="gradedlie", description="Lie algebras graded by finite groups")
    sub = parser.add_subparsers(dest="command", required=True)

    simple: list[tuple[str, Callable, str]] = [
        ("validate", cmd_validate, "check the grading containments"),
        ("support", cmd_support, "support of the grading and its commutativity"),
        ("radical", cmd_radical, "solvable radical with its graded components"),
        ("levi", cmd_levi, "Levi subalgebra with a homogeneous basis"),
        ("decompose", cmd_decompose, "graded-simple blocks of a semisimple graded algebra"),
        ("graded-simple", cmd_graded_simple, "decide graded simplicity"),
        ("dualize", cmd_dualize, "automorphisms given by the characters of an abelian grading"),
        ("grade", cmd_grade, "grading from a family of automorphisms"),
        ("report", cmd_report, "radical, Levi subalgebra and graded-simple blocks"),
        ("certify", cmd_certify, "re-check a report produced with --json"),
    ]
    for name, handler, help_text in simple:
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("file", help="job document (JSON)")
        p.set_defaults(handler=handler)

    p = sub.add_parser("lemma-check", parents=[common], help="chain commutation and ideal product certificates")
    p.add_argument("file", help="job document (JSON)")
    p.add_argument("--max-chain", type=_positive, default=None, metavar="M",
                   help="longest degree chain to enumerate (default 3)")
    p.set_defaults(handler=cmd_lemma_check)

    catalog = sub.add_parser("catalog", help="built-in graded algebras")
    catalog_sub = catalog.add_subparsers(dest="catalog_command", required=True)
    p = catalog_sub.add_parser("list", parents=[common], help="list the catalog")
    p.set_defaults(handler=cmd_catalog_list)
    p = catalog_sub.add_parser("emit", parents=[common], help="print a catalog entry as a job document")
    p.add_argument("name", choices=sorted(CATALOG))
    p.add_argument("--seed", type=int, default=None, help="scramble through a seeded degree-preserving map")
    p.set_defaults(handler=cmd_catalog_emit)
    return parser


def _configure_logging(verbose: int):
    if verbose >= 2:
        level = logging.DEBUG
    elif verbose == 1:
        level = logging.INFO
    else:
        level = getattr(logging, config.log_level, logging.WARNING)
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s", force=True)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose)
    if args.max_group_order is not None:
        config.set("groups.max_order", args.max_group_order)
    try:
        text, document = args.handler(args)
        if args.out:
            try:
                Path(args.out).write_text(dumps(document) + "\n", encoding="utf-8")
            except OSError as exc:
                raise DocumentError(f"cannot write output: {exc}", args.out) from exc
    except GradedLieError as exc:
        print(f"error: {exc.message}", file=sys.stderr)
        print(json.dumps({"error": type(exc).__name__, "witness": exc.witness}, default=str), file=sys.stderr)
        return exc.exit_code
    print(dumps(document) if args.json else text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
