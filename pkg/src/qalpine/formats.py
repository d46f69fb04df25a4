"""Document encoding for reports, series and matchings.

Integers are written as decimal strings so that arbitrarily large
coefficients survive any JSON reader.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Any

from .alpine import IdentityReport, IdentityRow
from .bijection import MatchReport, SignedTerm
from .partitions import RRCheck
from .polyring import Poly


def poly_to_doc(p: Poly) -> dict[str, Any]:
    doc: dict[str, Any] = {"coeffs": [str(c) for c in p.coeffs]}
    if p.trunc is not None:
        doc["trunc"] = p.trunc
    return doc


def poly_from_doc(doc: dict[str, Any]) -> Poly:
    return Poly([int(c) for c in doc["coeffs"]], doc.get("trunc"))


def _value_to_doc(v):
    return poly_to_doc(v) if isinstance(v, Poly) else str(v)


def _value_from_doc(d):
    return poly_from_doc(d) if isinstance(d, dict) else int(d)


def report_to_doc(report: IdentityReport) -> dict[str, Any]:
    return {
        "identity": report.kind,
        "max_n": report.max_n,
        "rows": [
            {
                "n": row.n,
                "sum": _value_to_doc(row.sum_value),
                "rec": _value_to_doc(row.recurrence_value),
                "equal": row.equal,
            }
            for row in report.per_n
        ],
        "all_pass": report.all_pass,
    }


def report_from_doc(doc: dict[str, Any]) -> IdentityReport:
    rows = [
        IdentityRow(r["n"], _value_from_doc(r["sum"]), _value_from_doc(r["rec"]), r["equal"])
        for r in doc["rows"]
    ]
    return IdentityReport(doc["identity"], doc["max_n"], rows)


def term_to_doc(t: SignedTerm, mirrored: bool = False) -> dict[str, Any]:
    return {"lambda": t.lam, "path": "".join(t.path), "sign": t.sign, "weight": t.weight(mirrored)}


def term_from_doc(doc: dict[str, Any], n: int) -> SignedTerm:
    return SignedTerm(n, doc["lambda"], tuple(doc["path"]))


def matching_to_doc(report: MatchReport, full: bool = False, mirrored: bool = False) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "n": report.n,
        "total_terms": report.total_terms,
        "pair_count": report.pair_count,
        "fixed_count": report.fixed_count,
        "lambda_shifts": report.lambda_shifts,
        "encoding": "A-before-B" if mirrored else "B-before-A",
        "violations": report.violations,
        "all_pass": report.ok,
    }
    if full:
        doc["pairs"] = [[term_to_doc(a, mirrored), term_to_doc(b, mirrored)] for a, b in report.pairs]
        doc["fixed"] = [term_to_doc(t, mirrored) for t in report.fixed]
    return doc


def matching_from_doc(doc: dict[str, Any]) -> MatchReport:
    """Rebuild a report; pairs and fixed terms only if the document has them."""
    n = doc["n"]
    report = MatchReport(
        n,
        violations=list(doc["violations"]),
        lambda_shifts=list(doc["lambda_shifts"]),
        total_terms=doc["total_terms"],
    )
    report.pairs = [(term_from_doc(a, n), term_from_doc(b, n)) for a, b in doc.get("pairs", [])]
    report.fixed = [term_from_doc(t, n) for t in doc.get("fixed", [])]
    return report


def rr_to_doc(variant: int, degree: int, check: RRCheck) -> dict[str, Any]:
    return {
        "variant": variant,
        "degree": degree,
        "sum_side": poly_to_doc(check.sum_side),
        "product_side": poly_to_doc(check.product_side),
        "equal": check.equal,
        "all_pass": check.equal,
    }


def rr_from_doc(doc: dict[str, Any]) -> RRCheck:
    return RRCheck(doc["equal"], poly_from_doc(doc["sum_side"]), poly_from_doc(doc["product_side"]))


def dump_json(doc: Any) -> str:
    return json.dumps(doc, indent=2) + "\n"


def dump_csv(header: list[str], rows: list[list[Any]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def coeff_field(p: Poly) -> str:
    """Space-separated coefficients, lowest degree first (CSV cells)."""
    return " ".join(str(c) for c in p.coeffs)
