"""Command line front end.

Reads a group or presentation descriptor, runs the requested analyses in a
fixed order and writes a JSON, CSV or text report.  Exit status: 0 when every
requested check passes, 1 on a verification failure, 2 on bad input and 3
when a size cap is hit.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence

from . import __version__
from . import derivations as dv
from .action import ActionGroupoid
from .complex import (
    DEFAULT_MAX_ROWS,
    SizeLimitError,
    boundary,
    canonical_representative,
    component_count,
    lift_two_character,
    verify_exactness,
    x0_space,
    x1_space,
    x2_space,
)
from .groups import (
    DEFAULT_MAX_ORDER,
    GroupSizeError,
    GroupValidationError,
    group_from_descriptor,
    named_group,
)
from .presented import PresentationError, PresentedGroupoid, presentation_from_descriptor

SCHEMA_VERSION = "1.0"
ANALYSES = ("complex", "exactness", "derivations", "bracket-table", "ideal", "iso", "lift")
GROUP_ONLY = frozenset({"derivations", "bracket-table", "ideal", "iso"})

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_SIZE = 0, 1, 2, 3


class InputError(Exception):
    pass


class SizeCapError(Exception):
    pass


def _q(x: Fraction) -> str:
    return str(x)


def _vectors(vs) -> List[List[str]]:
    return [[_q(x) for x in v] for v in vs]


def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"parse error in {path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def load_source(group: Optional[str], presentation: Optional[str], max_order: int):
    """Return ``(source, input_echo)``; the source is a GroupTable or PresentedGroupoid."""
    try:
        if presentation is not None:
            desc = _load_json(presentation)
            pres = presentation_from_descriptor(desc)
            return pres, {"kind": "presentation", "path": os.path.basename(presentation), "descriptor": desc}
        if os.path.isfile(group):
            desc = _load_json(group)
            g = group_from_descriptor(desc, max_order)
            return g, {"kind": "group", "path": os.path.basename(group), "descriptor": desc}
        g = named_group(group, max_order)
        return g, {"kind": "group", "descriptor": {"kind": "named", "name": group}}
    except GroupSizeError as exc:
        raise SizeCapError(str(exc)) from None
    except (GroupValidationError, PresentationError) as exc:
        raise InputError(str(exc)) from None


def inner_sign_metadata() -> dict:
    """Outcome of the sign check on ``a = (12)`` in S3, recorded in every report."""
    s3 = named_group("S3")
    gpd = ActionGroupoid(s3)
    a = s3.element("(12)")
    return {
        "convention": dv.INNER_CONVENTION,
        "probe": {"group": "S3", "element": "(12)"},
        "candidates": dv.resolve_inner_sign(gpd, a),
        "pair_orientation": dv.PAIR_ORIENTATION,
    }


# -- analyses ----------------------------------------------------------------------


def _complex(src, ctx) -> dict:
    x0 = x0_space(src)
    x1 = x1_space(src, ctx.max_rows)
    x2 = x2_space(src, ctx.max_rows)
    out = {
        "dims": [x0.dim, x1.dim, x2.dim],
        "coordinates": [len(x0.coordinates), len(x1.coordinates), len(x2.coordinates)],
        "components": component_count(src),
    }
    if ctx.emit_bases:
        out["bases"] = {
            "x1": {"coordinates": list(x1.coordinates), "basis": _vectors(x1.space.basis)},
            "x2": {"coordinates": list(x2.coordinates), "basis": _vectors(x2.space.basis)},
        }
    return out


def _exactness(src, ctx) -> dict:
    rep = verify_exactness(src, ctx.max_rows)
    if not rep.verdict:
        bad = [c.component for c in rep.components if not c.exact]
        ctx.fail("exactness", f"components not exact: {bad}")
    return rep.to_dict()


def _derivations(src, ctx) -> dict:
    g = src.group
    der = dv.derivation_space(g, ctx.max_rows)
    lie = dv.lie_structure(g, src)
    x1 = x1_space(src, ctx.max_rows).space
    q = dv.outer_quotient(g, src)
    round_trip = True
    for d in dv.derivation_basis(g):
        c = dv.char_from_derivation(d, src)
        if dv.derivation_from_char(c).vector() != d.vector() or c.values not in x1:
            round_trip = False
    kernel = dv.inner_map_kernel(g)
    out = {
        "der_dim": der.dim,
        "x1_dim": x1.dim,
        "inner_dim": lie.inner.dim,
        "weak_inner_dim": lie.weak_inner.dim,
        "outer_dim": q.dim,
        "inner_map_kernel_dim": kernel.dim,
        "dims_match": der.dim == x1.dim,
        "round_trip": round_trip,
    }
    if ctx.emit_bases:
        out["bases"] = {
            "derivations": _vectors(der.basis),
            "inner": _vectors(lie.inner.basis),
            "weak_inner": _vectors(lie.weak_inner.basis),
            "inner_map_kernel": _vectors(kernel.basis),
        }
    if not out["dims_match"]:
        ctx.fail("derivations", "dim Der differs from dim X1")
    if not round_trip:
        ctx.fail("derivations", "character round trip is not the identity")
    return out


def _bracket_table(src, ctx) -> dict:
    table = dv.point_bracket_table(src)
    ok = all(row["verified"] for row in table)
    if not ok:
        ctx.fail("bracket-table", "point bracket differs from chi^ab - chi^ba")
    return {"generators": list(src.group.labels), "table": table, "verified": ok}


def _ideal(src, ctx) -> dict:
    rep = dv.verify_ideal(src.group, src)
    if not rep.verdict:
        ctx.fail("ideal", "weak-inner ideal check failed")
    return rep.to_dict()


def _iso(src, ctx) -> dict:
    rep = dv.verify_quotient_isomorphism(src.group, src)
    if not rep.verdict:
        ctx.fail("iso", "quotient isomorphism check failed")
    return rep.to_dict()


def _lift(src, ctx) -> dict:
    x1 = x1_space(src, ctx.max_rows).space
    x2 = x2_space(src, ctx.max_rows).space
    phi2 = boundary(2, src)
    cx_chosen = _chosen_coordinates(src)
    lifts_ok = True
    for v in x2.basis:
        lifted = lift_two_character(src, v)
        if phi2(lifted) != tuple(v) or any(lifted[k] for k in cx_chosen):
            lifts_ok = False
    canon_ok = True
    for chi in x1.basis:
        rep = canonical_representative(src, chi)
        if phi2(rep) != phi2(chi) or any(rep[k] for k in cx_chosen):
            canon_ok = False
    if not lifts_ok:
        ctx.fail("lift", "phi2 of the lift differs from the input")
    if not canon_ok:
        ctx.fail("lift", "canonical representative is not tree-vanishing")
    return {"x2_basis_size": x2.dim, "round_trip": lifts_ok, "canonical_vanishes": canon_ok}


def _chosen_coordinates(src) -> List[int]:
    if isinstance(src, ActionGroupoid):
        return sorted(src.spanning_set)
    return sorted(src.tree_edges)


RUNNERS: Dict[str, Callable] = {
    "complex": _complex,
    "exactness": _exactness,
    "derivations": _derivations,
    "bracket-table": _bracket_table,
    "ideal": _ideal,
    "iso": _iso,
    "lift": _lift,
}


class _Context:
    def __init__(self, max_rows: int, emit_bases: bool):
        self.max_rows = max_rows
        self.emit_bases = emit_bases
        self.failures: List[dict] = []

    def fail(self, analysis: str, message: str) -> None:
        self.failures.append({"analysis": analysis, "message": message})


def parse_analyses(text: str) -> List[str]:
    wanted = [a.strip() for a in text.split(",") if a.strip()]
    if not wanted:
        raise InputError("at least one analysis is required")
    unknown = [a for a in wanted if a not in ANALYSES]
    if unknown:
        raise InputError(f"unknown analyses {unknown}; choose from {', '.join(ANALYSES)}")
    return [a for a in ANALYSES if a in wanted]


def run(source, echo: dict, analyses: Sequence[str], max_rows: int = DEFAULT_MAX_ROWS,
        max_order: int = DEFAULT_MAX_ORDER, emit_bases: bool = False) -> dict:
    """Run ``analyses`` on ``source`` and return the report dictionary."""
    if max_rows <= 0 or max_order <= 0:
        raise InputError("size caps must be positive")
    if isinstance(source, PresentedGroupoid):
        bad = [a for a in analyses if a in GROUP_ONLY]
        if bad:
            raise InputError(f"analyses {bad} need a group, not a presentation")
        src = source
        summary = {"objects": len(source.objects), "edges": len(source.edges), "relations": len(source.relations)}
    else:
        src = ActionGroupoid(source)
        summary = {
            "name": source.name,
            "order": source.order,
            "classes": len(source.conjugacy),
            "labels": list(source.labels),
        }
    ctx = _Context(max_rows, emit_bases)
    results = {}
    timing = {}
    start = time.perf_counter()
    for name in analyses:
        t0 = time.perf_counter()
        try:
            results[name] = RUNNERS[name](src, ctx)
        except SizeLimitError as exc:
            raise SizeCapError(str(exc)) from None
        timing[name] = round(time.perf_counter() - t0, 6)
    timing["total"] = round(time.perf_counter() - start, 6)
    return {
        "schema_version": SCHEMA_VERSION,
        "tool": {"name": "chargroupoid", "version": __version__},
        "input": {**echo, "summary": summary},
        "config": {"analyses": list(analyses), "max_rows": max_rows, "max_order": max_order, "emit_bases": emit_bases},
        "metadata": {"inner_sign": inner_sign_metadata()},
        "results": results,
        "failures": ctx.failures,
        "ok": not ctx.failures,
        "timing": timing,
    }


def without_timing(report: dict) -> dict:
    return {k: v for k, v in report.items() if k != "timing"}


# -- rendering ---------------------------------------------------------------------

CSV_FIELDS = ("source", "x0_dim", "x1_dim", "x2_dim", "components", "exact",
              "der_dim", "inner_dim", "weak_inner_dim", "outer_dim")


def source_name(report: dict) -> str:
    inp = report["input"]
    return inp["summary"].get("name") or inp.get("path") or inp["descriptor"].get("name", "")


def render_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def render_csv(report: dict) -> str:
    res = report["results"]
    row = {"source": source_name(report)}
    if "complex" in res:
        row.update(x0_dim=res["complex"]["dims"][0], x1_dim=res["complex"]["dims"][1],
                   x2_dim=res["complex"]["dims"][2], components=res["complex"]["components"])
    if "exactness" in res:
        row["exact"] = str(res["exactness"]["verdict"]).lower()
    if "derivations" in res:
        d = res["derivations"]
        row.update(der_dim=d["der_dim"], inner_dim=d["inner_dim"],
                   weak_inner_dim=d["weak_inner_dim"], outer_dim=d["outer_dim"])
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    w.writeheader()
    w.writerow(row)
    return buf.getvalue()


def render_text(report: dict) -> str:
    lines = [f"source: {source_name(report)}"]
    res = report["results"]
    if "complex" in res:
        lines.append("dims (X0, X1, X2): ({}, {}, {})".format(*res["complex"]["dims"]))
    if "exactness" in res:
        e = res["exactness"]
        lines.append(f"exactness: {'pass' if e['verdict'] else 'FAIL'} over {len(e['components'])} components")
    if "derivations" in res:
        d = res["derivations"]
        lines.append(f"derivations: dim {d['der_dim']}, inner {d['inner_dim']}, "
                     f"weak inner {d['weak_inner_dim']}, outer {d['outer_dim']}")
    for name in ("bracket-table", "ideal", "iso", "lift"):
        if name in res:
            r = res[name]
            ok = r.get("verdict", r.get("verified", r.get("round_trip")))
            if name == "lift":
                ok = r["round_trip"] and r["canonical_vanishes"]
            lines.append(f"{name}: {'pass' if ok else 'FAIL'}")
    lines.append(f"inner sign: {report['metadata']['inner_sign']['convention']}")
    for f in report["failures"]:
        lines.append(f"failure [{f['analysis']}]: {f['message']}")
    lines.append("ok" if report["ok"] else "FAILED")
    return "\n".join(lines) + "\n"


RENDERERS = {"json": render_json, "csv": render_csv, "text": render_text}


# -- entry point ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="chargroupoid",
        description="Character complex of the action groupoid of a finite group, or of a presented groupoid, "
                    "and the derivations of the group algebra.",
    )
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--group", help="named group (C4, S3, D4, Q8, A4, ...) or path to a JSON group descriptor")
    src.add_argument("--presentation", help="path to a JSON presentation descriptor")
    p.add_argument("--analyses", default="complex,exactness",
                   help=f"comma separated subset of {','.join(ANALYSES)} (default: complex,exactness)")
    p.add_argument("--format", choices=sorted(RENDERERS), default="json")
    p.add_argument("--emit-bases", action="store_true", help="include basis vectors in the JSON report")
    p.add_argument("--max-rows", type=int, default=DEFAULT_MAX_ROWS, help="cap on constraint rows")
    p.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER, help="cap on group order")
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        analyses = parse_analyses(args.analyses)
        if args.max_rows <= 0 or args.max_order <= 0:
            raise InputError("size caps must be positive")
        source, echo = load_source(args.group, args.presentation, args.max_order)
        report = run(source, echo, analyses, args.max_rows, args.max_order, args.emit_bases)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SizeCapError as exc:
        print(f"size cap: {exc}", file=sys.stderr)
        return EXIT_SIZE
    text = RENDERERS[args.format](report)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if report["ok"] else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
