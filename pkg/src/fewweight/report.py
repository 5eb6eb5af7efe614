"""JSON, CSV and text renderings of specs, enumerators and verdicts.

Field elements are written as their integer discrete-log index, or the
string ``"0"`` for zero (so zero and alpha^0 = 1 never collide); ring
elements are ``[a, b]`` pairs of such tokens.  JSON output uses sorted keys
so identical inputs give byte-identical documents.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Iterable

from .analysis import AccessStructure, TheoremReport, WeightEnumerator
from .charsums import PredictedDistribution
from .construction import CodeSpec, RingCode
from .ring import RingElem

SCHEMA_VERSION = 1


def number(x):
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return x


def ring_token(x: RingElem) -> list[str]:
    return [x.field.to_token(x.a), x.field.to_token(x.b)]


def rows_json(rows: Iterable[tuple]) -> list[dict]:
    return [{"weight": number(w), "frequency": int(f)} for w, f in rows]


def spec_json(spec: CodeSpec) -> dict:
    F = spec.field
    return {
        "p": spec.p,
        "m": spec.m,
        "N": spec.N,
        "N1": spec.N1,
        "N2": spec.N2,
        "n": spec.n,
        "length": spec.length,
        "gray_length": 2 * spec.length,
        "modulus": list(F.modulus),
        "alpha": list(F.coeffs(F.alpha)),
        "D": [F.to_token(d) for d in spec.D],
    }


def enumerator_json(e: WeightEnumerator) -> dict:
    return {"kind": e.kind, "total": e.total, "rows": rows_json(e.rows)}


def predicted_json(pd: PredictedDistribution) -> dict:
    out = {
        "case_tag": pd.case_tag,
        "rows": rows_json(pd.rows),
        "total": pd.total,
        "hypotheses": [{"condition": c, "holds": ok} for c, ok in pd.hypothesis_report],
    }
    if pd.bounds is not None:
        out["bounds"] = {k: number(v) for k, v in pd.bounds.items()}
    if pd.extra:
        out["extra"] = dict(pd.extra)
    return out


def _details_json(details: dict) -> dict:
    out = {}
    for key, value in details.items():
        if key == "witness" and value is not None:
            value = [ring_token(x) for x in value]
        out[key] = number(value)
    return out


def theorem_json(r: TheoremReport) -> dict:
    return {
        "theorem": r.theorem_id,
        "hypotheses": [{"condition": c, "holds": ok} for c, ok in r.hypothesis_report],
        "predicted": predicted_json(r.predicted) if r.predicted else None,
        "observed": enumerator_json(r.observed) if r.observed else None,
        "verdict": r.verdict,
        "details": _details_json(r.details),
    }


def access_json(s: AccessStructure, include_sets: bool = False) -> dict:
    return s.as_json(include_sets)


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def enumerator_csv(rows: Iterable[tuple]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["weight", "frequency"])
    for weight, freq in rows:
        w.writerow([number(weight), freq])
    return buf.getvalue()


def text_table(rows: Iterable[tuple], title: str = "") -> str:
    rows = [(str(number(w)), str(f)) for w, f in rows]
    width = max([len("Weight")] + [len(w) for w, _ in rows])
    lines = [title] if title else []
    lines.append(f"{'Weight'.ljust(width)} | Frequency")
    lines.append(f"{'-' * width}-+-{'-' * 9}")
    lines += [f"{w.ljust(width)} | {f}" for w, f in rows]
    return "\n".join(lines) + "\n"


def codewords_csv(code: RingCode) -> str:
    """One row per codeword in canonical order; each entry written as ``a+bu`` over F_p."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    for _, A, B in code.blocks():
        for ra, rb in zip(A, B):
            w.writerow([f"{a}+{b}u" for a, b in zip(ra.tolist(), rb.tolist())])
    return buf.getvalue()


def gray_csv(code: RingCode) -> str:
    from .ring import gray_arrays

    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    for _, A, B in code.blocks():
        for row in gray_arrays(A, B, code.spec.p):
            w.writerow(row.tolist())
    return buf.getvalue()


def sweep_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    fields = ["p", "m", "N", "N2", "case_tag", "verdict", "error"]
    w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({k: r.get(k, "") for k in fields})
    return buf.getvalue()


def sweep_text(rows: list[dict]) -> str:
    fields = ["p", "m", "N", "N2", "case_tag", "verdict", "error"]
    table = [fields] + [[str(r.get(k, "") if r.get(k) is not None else "") for k in fields] for r in rows]
    widths = [max(len(row[i]) for row in table) for i in range(len(fields))]
    return "".join(
        " | ".join(cell.ljust(wd) for cell, wd in zip(row, widths)).rstrip() + "\n" for row in table
    )
