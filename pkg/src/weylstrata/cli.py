"""Command-line interface.

Every invocation runs exactly one subcommand and writes a single result
envelope to standard output: {"status": "ok"|"error", "payload": ...,
"diagnostics": [...]}.  The JSON shape is described in
data/envelope.schema.json.  Exit codes: 0 success, 1 domain error,
2 usage error, 3 consistency failure (a recorded claim was falsified).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .atlas import ATLAS_ENV_VAR, Atlas, exc_group_from_name, load_atlas, m_of_class, parse_carter
from .classical import (
    EigenOrbit,
    GroupDescriptor,
    OrbitKind,
    SpectralDatum,
    classify,
    enumerate_strata,
    positive_roots,
    series_from_name,
)
from .errors import ConsistencyError, DomainError
from .jordan import LabeledPartition, family_from_name, invert_bijection
from .partitions import Bipartition, Partition, n_invariant
from .verify import check_names, run_suite
from .weyl import (
    SignedCycleType,
    WeylSeries,
    WeylType,
    fixed_space_dim,
    stratum_of_class,
    weyl_series_from_name,
)

_CLASSICAL_LETTERS = {"A", "B", "C", "D"}


def _series_for_cli(name: str, dimension: int):
    # bare "SO" picks the odd or even series from the dimension
    if name.strip().lower() == "so":
        return series_from_name("SO_odd" if dimension % 2 else "SO_even")
    return series_from_name(name)


def _parse_int_list(text: str) -> tuple[int, ...]:
    entries = [piece.strip() for piece in text.split(",")]
    entries = [piece for piece in entries if piece]
    try:
        return tuple(int(piece) for piece in entries)
    except ValueError:
        raise DomainError(f"expected comma-separated integers, got {text!r}", code="bad_document")


def _read_document(path: str) -> dict:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, "r", encoding="utf-8") as handle:
                text = handle.read()
        except OSError as err:
            raise DomainError(f"cannot read {path}: {err}", code="io_error")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise DomainError(f"input is not valid JSON: {err}", code="bad_document")
    if not isinstance(doc, dict):
        raise DomainError("input document must be a JSON object", code="bad_document")
    return doc


def _group_from_doc(doc: dict) -> GroupDescriptor:
    if not isinstance(doc, dict) or "series" not in doc or "N" not in doc:
        raise DomainError('group must be {"series": ..., "N": ..., "char"?: ...}', code="bad_document")
    series = series_from_name(str(doc["series"]))
    dimension = doc["N"]
    char = doc.get("char", 0)
    if not isinstance(dimension, int) or not isinstance(char, int):
        raise DomainError("group N and char must be integers", code="bad_document")
    return GroupDescriptor(series, dimension, char)


def _orbit_from_doc(doc: dict) -> EigenOrbit:
    if not isinstance(doc, dict):
        raise DomainError("each orbit must be a JSON object", code="bad_document")
    missing = {"id", "kind", "parts"} - set(doc)
    if missing:
        raise DomainError(f"orbit is missing {sorted(missing)}", code="bad_document")
    kind_name = str(doc["kind"]).strip().lower()
    try:
        kind = OrbitKind(kind_name)
    except ValueError:
        raise DomainError(f"unknown orbit kind {doc['kind']!r}", code="bad_document")
    parts = doc["parts"]
    if not isinstance(parts, list) or not all(isinstance(p, int) for p in parts):
        raise DomainError("orbit parts must be a list of integers", code="bad_document")
    if "labels" in doc and doc["labels"] is not None:
        raw_labels = doc["labels"]
        if not isinstance(raw_labels, dict):
            raise DomainError("orbit labels must be an object", code="bad_document")
        try:
            labels = {int(k): int(v) for k, v in raw_labels.items()}
        except (TypeError, ValueError):
            raise DomainError("orbit labels must map integers to bits", code="bad_document")
        jordan = LabeledPartition(parts, labels)
    else:
        jordan = Partition(parts)
    return EigenOrbit(str(doc["id"]), kind, jordan)


def _group_payload(group: GroupDescriptor) -> dict:
    return {"series": group.series.value, "N": group.dimension, "char": group.characteristic}


def _stratum_payload(result) -> dict:
    payload = {
        "stratum": {"parts": list(result.bp)},
        "n_invariant": result.n_invariant,
        "class_dim": result.class_dim,
        "springer_dim": result.springer_dim,
        "pair_degenerate": result.pair_degenerate,
    }
    return payload


def _cmd_classify(args) -> tuple[dict, list[str]]:
    doc = _read_document(args.input)
    if "group" not in doc or "orbits" not in doc:
        raise DomainError('document must have "group" and "orbits"', code="bad_document")
    if not isinstance(doc["orbits"], list):
        raise DomainError('"orbits" must be a list', code="bad_document")
    group = _group_from_doc(doc["group"])
    datum = SpectralDatum(group, [_orbit_from_doc(o) for o in doc["orbits"]])
    result = classify(datum)
    payload = {"group": _group_payload(group)}
    payload.update(_stratum_payload(result))
    diagnostics = []
    if result.pair_degenerate:
        diagnostics.append("stratum label is fixed by the even orthogonal pair symmetry")
    return payload, diagnostics


_WEYL_GROUP_FOR_DIMS = {
    # dimensions of strata come from the algebraic group with this Weyl group
    WeylSeries.A: lambda rank: GroupDescriptor(series_from_name("GL"), rank + 1),
    WeylSeries.B: lambda rank: GroupDescriptor(series_from_name("Sp"), 2 * rank),
    WeylSeries.D: lambda rank: GroupDescriptor(series_from_name("SO_even"), 2 * rank),
}


def _cmd_phi(args) -> tuple[dict, list[str]]:
    name = args.group.strip()
    diagnostics: list[str] = []
    if name.upper() in _CLASSICAL_LETTERS:
        if args.rank is None:
            raise DomainError("classical series need --rank", code="bad_rank")
        if args.rep is not None:
            raise DomainError("--rep applies only to exceptional groups", code="bad_rep")
        series = weyl_series_from_name(name)
        if name.upper() == "C":
            diagnostics.append("series C shares its signed cycle classes with series B")
        wt = WeylType(series, args.rank)
        if series is WeylSeries.A:
            cls = Partition(_parse_int_list(args.class_label))
            if sum(cls) != args.rank + 1:
                raise DomainError(
                    f"series A rank {args.rank} classes are partitions of {args.rank + 1}",
                    code="bad_class",
                )
        else:
            cls = SignedCycleType.parse(args.class_label)
        bp = stratum_of_class(wt, cls)
        group = _WEYL_GROUP_FOR_DIMS[series](args.rank)
        n_inv = n_invariant(bp, group.rank_half)
        payload = {
            "weyl": {"series": series.value, "rank": args.rank},
            "class": str(cls) if series is not WeylSeries.A else ",".join(map(str, cls)),
            "group": _group_payload(group),
            "stratum": {"parts": list(bp)},
            "n_invariant": n_inv,
            "class_dim": 2 * positive_roots(group) - 2 * n_inv,
            "fixed_space_dim": fixed_space_dim(wt, cls),
        }
        return payload, diagnostics
    group = exc_group_from_name(name)
    if args.rank is not None:
        raise DomainError("--rank applies only to classical series", code="bad_rank")
    atlas = _atlas_for(args)
    hint = atlas.rep_from_string(group, args.rep) if args.rep is not None else None
    label = parse_carter(args.class_label)
    rep = atlas.rep_of_class(group, args.class_label, rep_hint=hint)
    payload = {
        "group": group,
        "class": label.raw,
        "d": rep.d,
        "n": rep.n,
        "star": rep.star,
        "synthetic_id": rep.synthetic_id,
        "display": atlas.format_rep(rep),
        "class_dim": atlas.class_dim(rep),
        "fixed_space_dim": m_of_class(group, args.class_label),
        "fiber": [c.raw for c in atlas.fiber(group, rep)],
        "cross_section": atlas.cross_section(group, rep).raw,
        "note": atlas.note(group, rep),
    }
    return payload, diagnostics


def _cmd_enumerate(args) -> tuple[dict, list[str]]:
    group = GroupDescriptor(_series_for_cli(args.series, args.dimension), args.dimension, args.char)
    strata = enumerate_strata(group)
    rows = []
    for result in strata:
        row = {"parts": list(result.bp)}
        row.update(
            {
                "n_invariant": result.n_invariant,
                "class_dim": result.class_dim,
                "springer_dim": result.springer_dim,
                "pair_degenerate": result.pair_degenerate,
            }
        )
        rows.append(row)
    payload = {"group": _group_payload(group), "count": len(rows), "strata": rows}
    return payload, []


def _cmd_tables(args) -> tuple[dict, list[str]]:
    atlas = _atlas_for(args)
    group = exc_group_from_name(args.group)
    rows = atlas.rows(group)
    if args.char is not None:
        keep = set(atlas.strata_for_characteristic(group, args.char))
        rows = tuple(row for row in rows if row.rep in keep)
    if args.rep is not None:
        wanted = atlas.rep_from_string(group, args.rep)
        rows = tuple(row for row in rows if row.rep == wanted)
    if args.class_label is not None:
        canon = parse_carter(args.class_label).raw
        rows = tuple(row for row in rows if canon in {c.raw for c in row.classes})
    payload = {
        "group": group,
        "checksum": atlas.checksum(),
        "count": len(rows),
        "rows": [
            {
                "display": atlas.format_rep(row.rep),
                "d": row.rep.d,
                "n": row.rep.n,
                "star": row.rep.star,
                "synthetic_id": row.rep.synthetic_id,
                "class_dim": atlas.class_dim(row.rep),
                "classes": [c.raw for c in row.classes],
                "cross_section": atlas.cross_section(group, row.rep).raw,
                "note": row.note,
            }
            for row in rows
        ],
    }
    return payload, []


def _cmd_verify(args) -> tuple[dict, list[str], int]:
    names = check_names() if args.suite == "all" else (args.suite,)
    if args.data_file is not None:
        # checks load the atlas themselves; route the override through the env var
        saved = os.environ.get(ATLAS_ENV_VAR)
        os.environ[ATLAS_ENV_VAR] = os.path.abspath(args.data_file)
        try:
            results = run_suite(names)
        finally:
            if saved is None:
                os.environ.pop(ATLAS_ENV_VAR, None)
            else:
                os.environ[ATLAS_ENV_VAR] = saved
    else:
        results = run_suite(names)
    payload = {
        "passed": all(r.passed for r in results),
        "results": [
            {
                "name": r.name,
                "passed": r.passed,
                "seconds": round(r.seconds, 6),
                "budget": r.budget,
                "detail": r.detail,
            }
            for r in results
        ],
    }
    status = 0 if payload["passed"] else 3
    return payload, [], status


def _cmd_invert(args) -> tuple[dict, list[str]]:
    family = family_from_name(args.family)
    target = Bipartition(_parse_int_list(args.target))
    preimage = invert_bijection(family, args.N, target)
    payload = {"family": family.value, "N": args.N, "target": list(target)}
    if isinstance(preimage, LabeledPartition):
        payload["parts"] = list(preimage.parts)
        payload["labels"] = {str(v): bit for v, bit in sorted(preimage.labels)}
    else:
        payload["parts"] = list(preimage)
    return payload, []


def _atlas_for(args) -> Atlas:
    return load_atlas(args.data_file)


def _emit(envelope: dict, fmt: str, renderer=None) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(envelope, sort_keys=True, indent=2) + "\n")
        return
    if envelope["status"] == "error":
        err = envelope["payload"]
        sys.stdout.write(f"error [{err['code']}]: {err['message']}\n")
    elif renderer is not None:
        sys.stdout.write(renderer(envelope["payload"]))
    else:
        sys.stdout.write(json.dumps(envelope["payload"], sort_keys=True, indent=2) + "\n")
    for note in envelope["diagnostics"]:
        sys.stdout.write(f"# {note}\n")


def _parts_text(parts) -> str:
    return ",".join(map(str, parts)) if parts else "()"


def _render_stratum(payload: dict) -> str:
    lines = [
        f"stratum      {_parts_text(payload['stratum']['parts'])}",
        f"n-invariant  {payload['n_invariant']}",
        f"class dim    {payload['class_dim']}",
    ]
    if "springer_dim" in payload:
        lines.append(f"springer dim {payload['springer_dim']}")
    if payload.get("pair_degenerate") is not None:
        lines.append(f"degenerate   {payload['pair_degenerate']}")
    if "fixed_space_dim" in payload:
        lines.append(f"fixed space  {payload['fixed_space_dim']}")
    return "\n".join(lines) + "\n"


def _render_phi_exceptional(payload: dict) -> str:
    lines = [
        f"class        {payload['class']}",
        f"rep          {payload['display']}",
        f"class dim    {payload['class_dim']}",
        f"fixed space  {payload['fixed_space_dim']}",
        f"fiber        {', '.join(payload['fiber'])}",
        f"cross sec    {payload['cross_section']}",
    ]
    if payload["note"]:
        lines.append(f"note         {payload['note']}")
    return "\n".join(lines) + "\n"


def _render_phi(payload: dict) -> str:
    if "d" in payload:
        return _render_phi_exceptional(payload)
    return _render_stratum(payload)


def _render_enumerate(payload: dict) -> str:
    width = max((len(_parts_text(row["parts"])) for row in payload["strata"]), default=7)
    width = max(width, len("stratum"))
    lines = [f"{'stratum':<{width}}  {'n':>3}  {'dim':>4}"]
    for row in payload["strata"]:
        lines.append(
            f"{_parts_text(row['parts']):<{width}}  {row['n_invariant']:>3}  {row['class_dim']:>4}"
        )
    lines.append(f"{payload['count']} strata")
    return "\n".join(lines) + "\n"


def _render_tables(payload: dict) -> str:
    lines = []
    for row in payload["rows"]:
        star = f" *{row['star']}" if row["star"] else ""
        note = f"  [{row['note']}]" if row["note"] else ""
        lines.append(
            f"{row['display']:<10} dim {row['class_dim']:>3}{star:<4} "
            f"classes: {', '.join(row['classes'])}{note}"
        )
    lines.append(f"{payload['count']} rows ({payload['group']}, checksum {payload['checksum'][:12]})")
    return "\n".join(lines) + "\n"


def _render_verify(payload: dict) -> str:
    lines = []
    for row in payload["results"]:
        verdict = "PASS" if row["passed"] else "FAIL"
        timing = f"{row['seconds']:.3f}s"
        if row["budget"] is not None:
            timing += f" (budget {row['budget']:g}s)"
        lines.append(f"{verdict} {row['name']} [{timing}]: {row['detail']}")
    lines.append("all checks passed" if payload["passed"] else "verification FAILED")
    return "\n".join(lines) + "\n"


def _render_invert(payload: dict) -> str:
    text = f"parts  {_parts_text(payload['parts'])}\n"
    if payload.get("labels"):
        bits = ", ".join(f"{v}:{bit}" for v, bit in payload["labels"].items())
        text += f"labels {bits}\n"
    return text


_RENDERERS = {
    "classify": _render_stratum,
    "phi": _render_phi,
    "enumerate": _render_enumerate,
    "tables": _render_tables,
    "verify": _render_verify,
    "invert": _render_invert,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="json",
                        help="output format (default json)")
    common.add_argument("--data-file", default=None, metavar="PATH",
                        help="override the packaged strata table file")

    parser = argparse.ArgumentParser(
        prog="weylstrata",
        description="Stratifications of classical and exceptional groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common],
                       help="classify a spectral datum into its stratum")
    p.add_argument("input", help="path to a JSON spectral datum, or - for stdin")

    p = sub.add_parser("phi", parents=[common],
                       help="map a Weyl conjugacy class to its stratum")
    p.add_argument("--group", required=True,
                   help="A, B, C, D (with --rank) or G2, F4, E6, E7, E8")
    p.add_argument("--rank", type=int, default=None, help="rank for classical series")
    p.add_argument("--class", dest="class_label", required=True,
                   help="class name: partition '3,1' (A), signed cycles '3,1;2' (B/C/D), "
                        "or a class label like 'D_7(a_1)'")
    p.add_argument("--rep", default=None,
                   help="representation hint 'd_n[*r][#k]' when the class name is ambiguous")

    p = sub.add_parser("enumerate", parents=[common],
                       help="enumerate the strata of a classical group")
    p.add_argument("--series", required=True, help="GL, Sp, SO, SO_odd or SO_even")
    p.add_argument("--dimension", type=int, required=True, help="size N of the group GL_N/Sp_N/SO_N")
    p.add_argument("--char", type=int, default=0, help="field characteristic (default 0)")

    p = sub.add_parser("tables", parents=[common],
                       help="dump rows of the exceptional strata table")
    p.add_argument("--group", required=True, help="G2, F4, E6, E7 or E8")
    p.add_argument("--char", type=int, default=None,
                   help="keep only strata with unipotent classes in this characteristic")
    p.add_argument("--rep", default=None, help="keep only the row for this representation")
    p.add_argument("--class", dest="class_label", default=None,
                   help="keep only rows containing this class")
    p.add_argument("--raw", action="store_true",
                   help="write the table file bytes verbatim and exit")

    p = sub.add_parser("verify", parents=[common],
                       help="run the recorded verification checks")
    p.add_argument("--suite", default="all", choices=("all",) + check_names(),
                   help="which check to run (default all)")

    p = sub.add_parser("invert", parents=[common],
                       help="find the preimage of a stratum under a family bijection")
    p.add_argument("--family", required=True,
                   help="Z1, Z2, Z1P, Z2P or a family name like symplectic_char2")
    p.add_argument("--N", type=int, required=True, help="weight of the preimage")
    p.add_argument("--target", required=True, help="bipartition entries, e.g. '2,0,1'")

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "tables" and args.raw:
        sys.stdout.write(_atlas_for(args).text)
        return 0
    status = 0
    try:
        if args.command == "classify":
            payload, diagnostics = _cmd_classify(args)
        elif args.command == "phi":
            payload, diagnostics = _cmd_phi(args)
        elif args.command == "enumerate":
            payload, diagnostics = _cmd_enumerate(args)
        elif args.command == "tables":
            payload, diagnostics = _cmd_tables(args)
        elif args.command == "verify":
            payload, diagnostics, status = _cmd_verify(args)
        else:
            payload, diagnostics = _cmd_invert(args)
        envelope = {"status": "ok", "payload": payload, "diagnostics": diagnostics}
    except DomainError as err:
        envelope = {
            "status": "error",
            "payload": {"code": err.code or "domain_error", "message": str(err)},
            "diagnostics": [],
        }
        status = 1
    except ConsistencyError as err:
        code = getattr(err, "code", None)
        envelope = {
            "status": "error",
            "payload": {"code": code or "consistency_error", "message": str(err)},
            "diagnostics": [],
        }
        status = 3
    _emit(envelope, args.format, _RENDERERS.get(args.command))
    return status


if __name__ == "__main__":
    sys.exit(main())
