"""Deterministic JSON and CSV rendering of library values.

Every rational crosses the boundary as an exact string: ``str(Fraction)``,
which is ``"p/q"`` for non-integers and a bare integer otherwise, and
parses back losslessly. JSON never carries decimals. CSV adds one decimal
column per rational column, named with an ``_approx`` suffix to mark it as
a display-only approximation. Key order inside every payload is fixed, so
identical requests render byte-identical reports.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Any, Mapping, Sequence

from . import __version__
from .cantor import GapRecord, LevelSet
from .intervals import Interval, IntervalSet
from .quotient import (
    Certificate,
    CertificateKind,
    GapWitness,
    PairWitness,
    QuotientCover,
    ScaleWitness,
    SearchExhausted,
)
from .verify import VerificationReport

SCHEMA_VERSION = 1
TOOL_NAME = "cantorvis"


def rational_str(value: Fraction) -> str:
    return str(value)


def rational_approx(value: Fraction) -> str:
    # display-only: correctly rounded double, shortest repr
    return repr(float(value))


def _input_value(value: Any) -> Any:
    if isinstance(value, Fraction):
        return rational_str(value)
    return value


def interval_payload(itv: Interval) -> dict:
    return {"lo": rational_str(itv.lo), "hi": rational_str(itv.hi)}


def parse_interval(obj: Mapping[str, str]) -> Interval:
    return Interval(Fraction(obj["lo"]), Fraction(obj["hi"]))


def interval_set_payload(s: IntervalSet) -> list[dict]:
    return [interval_payload(p) for p in s.parts]


def parse_interval_set(objs: Sequence[Mapping[str, str]]) -> IntervalSet:
    return IntervalSet(tuple(parse_interval(obj) for obj in objs))


def level_set_payload(ls: LevelSet) -> dict:
    return {
        "kind": "level_set",
        "lambda": rational_str(ls.params.ratio),
        "variant": ls.variant.value,
        "rank": ls.rank,
        "part_count": len(ls.intervals),
        "parts": interval_set_payload(ls.intervals),
    }


def gap_list_payload(records: Sequence[GapRecord], ratio: Fraction) -> dict:
    return {
        "kind": "gap_list",
        "lambda": rational_str(ratio),
        "step": records[0].step if records else None,
        "gap_count": len(records),
        "gaps": [
            {
                "step": rec.step,
                "index": rec.index,
                "lo": rational_str(rec.lo),
                "hi": rational_str(rec.hi),
            }
            for rec in records
        ],
    }


def squared_level_set_payload(s: IntervalSet, ratio: Fraction, rank: int) -> dict:
    return {
        "kind": "squared_level_set",
        "lambda": rational_str(ratio),
        "rank": rank,
        "part_count": len(s),
        "parts": interval_set_payload(s),
    }


def quotient_cover_payload(cover: QuotientCover) -> dict:
    return {
        "kind": "quotient_cover",
        "lambda": rational_str(cover.params.ratio),
        "domain": cover.domain.value,
        "rank": cover.rank,
        "part_count": len(cover.intervals),
        "parts": interval_set_payload(cover.intervals),
    }


def window_cover_payload(
    s: IntervalSet, ratio: Fraction, rank: int, window: Interval
) -> dict:
    return {
        "kind": "quotient_outer_cover",
        "lambda": rational_str(ratio),
        "rank": rank,
        "window": interval_payload(window),
        "part_count": len(s),
        "parts": interval_set_payload(s),
    }


def _witness_payload(witness) -> dict:
    if isinstance(witness, ScaleWitness):
        return {
            "type": "scale",
            "index": witness.index,
            "lo": rational_str(witness.scaled_base.lo),
            "hi": rational_str(witness.scaled_base.hi),
        }
    if isinstance(witness, PairWitness):
        return {
            "type": "pair",
            "x1": rational_str(witness.x1),
            "x2": rational_str(witness.x2),
            "rank": witness.rank,
        }
    if isinstance(witness, GapWitness):
        return {
            "type": "gap",
            "rank": witness.rank,
            "gap_lo": rational_str(witness.gap.lo),
            "gap_hi": rational_str(witness.gap.hi),
            "scale_lo": witness.scale_lo,
            "scale_hi": witness.scale_hi,
        }
    if isinstance(witness, SearchExhausted):
        return {"type": "exhausted", "max_rank": witness.max_rank}
    raise TypeError(f"unknown witness type {type(witness).__name__}")


def certificate_payload(cert: Certificate, slope: Fraction) -> dict:
    return {
        "kind": "certificate",
        "slope": rational_str(slope),
        "classification": cert.kind.value,
        "exact": True,
        "witness": _witness_payload(cert.witness),
    }


def parse_certificate(obj: Mapping[str, Any]) -> Certificate:
    kind = CertificateKind(obj["classification"])
    w = obj["witness"]
    wtype = w["type"]
    if wtype == "scale":
        witness = ScaleWitness(
            w["index"], Interval(Fraction(w["lo"]), Fraction(w["hi"]))
        )
    elif wtype == "pair":
        witness = PairWitness(Fraction(w["x1"]), Fraction(w["x2"]), w["rank"])
    elif wtype == "gap":
        witness = GapWitness(
            w["rank"],
            Interval(Fraction(w["gap_lo"]), Fraction(w["gap_hi"])),
            w["scale_lo"],
            w["scale_hi"],
        )
    elif wtype == "exhausted":
        witness = SearchExhausted(w["max_rank"])
    else:
        raise ValueError(f"unknown witness type {wtype!r}")
    return Certificate(kind, witness)


def verification_payload(report: VerificationReport) -> dict:
    return {
        "kind": "verification_report",
        "check": report.check_name,
        "inputs": {key: _input_value(val) for key, val in report.inputs.items()},
        "pass": report.passed,
        "conditions": [
            {
                "label": row.label,
                "lhs": rational_str(row.lhs),
                "rhs": rational_str(row.rhs),
                "holds": row.holds,
            }
            for row in report.details
        ],
    }


def envelope(request_echo: Mapping[str, Any], result: Mapping[str, Any]) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "tool": TOOL_NAME,
        "tool_version": __version__,
        "exactness": "exact-rational",
        "request": dict(request_echo),
        "result": dict(result),
    }


def to_json(doc: Mapping[str, Any]) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _csv_text(header: list[str], rows: list[list[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def interval_set_csv(s: IntervalSet) -> str:
    rows = [
        [
            rational_str(p.lo),
            rational_str(p.hi),
            rational_approx(p.lo),
            rational_approx(p.hi),
        ]
        for p in s.parts
    ]
    return _csv_text(["lo", "hi", "lo_approx", "hi_approx"], rows)


def gap_list_csv(records: Sequence[GapRecord]) -> str:
    rows = [
        [
            str(rec.step),
            str(rec.index),
            rational_str(rec.lo),
            rational_str(rec.hi),
            rational_approx(rec.lo),
            rational_approx(rec.hi),
        ]
        for rec in records
    ]
    return _csv_text(
        ["step", "index", "lo", "hi", "lo_approx", "hi_approx"], rows
    )


def verification_csv(report: VerificationReport) -> str:
    rows = [
        [
            row.label,
            rational_str(row.lhs),
            rational_str(row.rhs),
            rational_approx(row.lhs),
            rational_approx(row.rhs),
            str(row.holds).lower(),
        ]
        for row in report.details
    ]
    return _csv_text(
        ["label", "lhs", "rhs", "lhs_approx", "rhs_approx", "holds"], rows
    )


def certificate_csv(cert: Certificate, slope: Fraction) -> str:
    payload = certificate_payload(cert, slope)
    rows = [["slope", payload["slope"]], ["classification", payload["classification"]]]
    rows.extend([f"witness_{key}", str(val)] for key, val in payload["witness"].items())
    return _csv_text(["field", "value"], rows)
