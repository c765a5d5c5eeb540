"""Plain-text rendering of analysis results for the terminal."""

from __future__ import annotations

from typing import Any, Sequence

from grading.certificates import ChainCertificate, IdealProductCertificate
from grading.duality import ActionFamily
from grading.grading import GradedSubspace, Grading
from groups.finite_group import GroupElement
from linalg.scalars import format_scalar
from structure.decomposition import GradedSimpleBlock
from structure.levi import LeviCertificate, RadicalCertificate
from structure.report import StructureReport


def _names(elements: Sequence[GroupElement]) -> str:
    return "{" + ", ".join(g.name for g in elements) + "}"


def vector(v: Sequence[Any], names: Sequence[str]) -> str:
    """Linear combination of basis names, e.g. "2*e - h"."""
    terms = []
    for c, name in zip(v, names):
        if not c:
            continue
        text = format_scalar(c)
        if isinstance(text, dict):
            text = f"({c})"
        if text == "1":
            terms.append(name)
        elif text == "-1":
            terms.append(f"-{name}")
        else:
            terms.append(f"{text}*{name}")
    if not terms:
        return "0"
    return " + ".join(terms).replace("+ -", "- ")


def grading_summary(grading: Grading) -> str:
    algebra = grading.algebra
    lines = [f"{algebra.label}: dimension {algebra.dim}, graded by {grading.group.label}"]
    for g in grading.support():
        members = [algebra.names[i] for i in grading.fiber_indices(g)]
        lines.append(f"  L_{g.name} = span({', '.join(members)})")
    return "\n".join(lines)


def support(grading: Grading) -> str:
    elements = grading.support()
    commutative, pair = grading.support_is_commutative()
    generated = grading.generated_support_subgroup()
    lines = [f"Supp L = {_names(elements)}"]
    if commutative:
        lines.append("support is commutative")
    else:
        lines.append(f"support is not commutative: {pair[0].name}*{pair[1].name} != {pair[1].name}*{pair[0].name}")
    lines.append(f"generated subgroup has order {len(generated)} of {grading.group.order}")
    return "\n".join(lines)


def graded_subspace(title: str, space: GradedSubspace) -> str:
    names = space.grading.algebra.names
    lines = [f"{title}: dimension {space.dim}"]
    for v, g in space.homogeneous_basis():
        lines.append(f"  [{g.name}] {vector(v, names)}")
    return "\n".join(lines)


def radical(space: GradedSubspace, certificate: RadicalCertificate) -> str:
    text = graded_subspace("radical", space)
    parts = ", ".join(f"{k}: {v}" for k, v in certificate.components.items()) or "none"
    return f"{text}\n  components by degree: {parts}\n  ideal: {certificate.ideal}, solvable: {certificate.solvable}"


def levi(grading: Grading, certificate: LeviCertificate) -> str:
    names = grading.algebra.names
    lines = [f"Levi subalgebra: dimension {len(certificate.basis)} ({certificate.path} path, "
             f"{certificate.stages} stage(s))"]
    for v, g in certificate.basis:
        lines.append(f"  [{g.name}] {vector(v, names)}")
    lines.append(
        f"  homogeneous: {certificate.homogeneous}, meets radical in 0: {certificate.meets_radical_trivially}, "
        f"closed: {certificate.closed}, semisimple: {certificate.semisimple}"
    )
    return "\n".join(lines)


def blocks(items: Sequence[GradedSimpleBlock]) -> str:
    if not items:
        return "no graded-simple blocks"
    lines = [f"{len(items)} graded-simple block(s)"]
    for k, block in enumerate(items, start=1):
        labels = ", ".join(x or "?" for x in block.labels) or "?"
        lines.append(
            f"  block {k}: dimension {block.dim}, support {_names(block.support)}, "
            f"{block.count} simple summand(s) [{labels}], isomorphism certificate: {block.isomorphism}"
        )
    return "\n".join(lines)


def lemma(chains: ChainCertificate, products: Sequence[IdealProductCertificate]) -> str:
    lines = [
        f"chains up to length {chains.max_chain} over {{{', '.join(chains.support)}}}: "
        f"{chains.chains_examined} products, {chains.nonzero_chains} nonzero, all with commuting degrees"
    ]
    if not products:
        lines.append("no noncommuting pairs in the support")
    for cert in products:
        lines.append(
            f"[Id(L_{cert.g.name}), Id(L_{cert.h.name})] = 0 with ideal dimensions "
            f"{cert.ideal_g.dim} and {cert.ideal_h.dim}"
        )
    return "\n".join(lines)


def family(items: ActionFamily) -> str:
    names = items.algebra.names
    lines = [f"{len(items.maps)} automorphism(s) indexed by characters of {items.group.label}"]
    for chi in items.dual:
        m = items.maps.get(chi)
        if m is None:
            continue
        images = [f"{names[j]} -> {vector(m.column(j), names)}" for j in range(m.cols)]
        lines.append(f"  {chi.name}: " + "; ".join(images))
    return "\n".join(lines)


def report(result: StructureReport) -> str:
    return "\n".join([
        grading_summary(result.grading),
        radical(result.radical, result.radical_certificate),
        levi(result.grading, result.levi_certificate),
        blocks(result.blocks),
    ])
