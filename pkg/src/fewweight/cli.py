"""Command-line front end.

Exit codes: 0 success, 2 invalid parameters, 3 some applicable theorem
was refuted, 4 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from . import report
from .analysis import THEOREMS, Analyzer, ashikhmin_barg, massey_access_structure, sss_classify
from .charsums import predict_distribution
from .construction import DEFAULT_BUDGET, build_code, derive_spec
from .errors import BudgetExceeded, FewWeightError
from .field import build_field, is_prime

EXIT_OK, EXIT_INVALID, EXIT_REFUTED, EXIT_BUDGET = 0, 2, 3, 4


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    p: int
    m: int
    N: int
    modulus: Optional[list[int]] = None
    budget: int = DEFAULT_BUDGET
    output_format: str = "json"
    theorems: Optional[list[str]] = None
    wmax_dual: int = 2

    def validate(self) -> None:
        if not is_prime(self.p) or self.p == 2:
            raise ConfigError(f"p must be an odd prime (got {self.p})")
        if self.m < 1:
            raise ConfigError(f"m must be positive (got {self.m})")
        q = self.p**self.m
        if self.N < 1 or (q - 1) % self.N:
            raise ConfigError(f"N does not divide p^m - 1 ({self.N} does not divide {q - 1})")
        if self.modulus is not None and len(self.modulus) != self.m + 1:
            raise ConfigError(f"modulus needs m + 1 = {self.m + 1} coefficients, lowest degree first")
        for t in self.theorems or ():
            if t not in THEOREMS:
                raise ConfigError(f"unknown theorem {t!r}; choose from {', '.join(THEOREMS)}")
        if self.wmax_dual not in (1, 2, 3):
            raise ConfigError("--wmax-dual must be 1, 2 or 3")

    def spec(self):
        return derive_spec(build_field(self.p, self.m, self.modulus), self.N)


def construct_doc(cfg: RunConfig) -> dict:
    return {"schema": report.SCHEMA_VERSION, "spec": report.spec_json(cfg.spec())}


def analyze(cfg: RunConfig) -> tuple[dict, int]:
    """Run every check for one (p, m, N); returns the report and its exit code."""
    spec = cfg.spec()
    an = Analyzer(spec, cfg.budget, cfg.wmax_dual)
    theorem_ids = cfg.theorems or list(THEOREMS)
    verdicts = [an.verify(t) for t in theorem_ids]

    lee = an.lee
    nonzero = lee.nonzero_weights
    all_min, witness = an.minimality
    d_dual = an.dual_distance
    gray = an.code.gray_matrix()
    access = massey_access_structure(gray, code_name="Phi(C(m,p,N))")
    doc = {
        "schema": report.SCHEMA_VERSION,
        "spec": report.spec_json(spec),
        "image": an.image,
        "lee_enumerator": report.enumerator_json(lee),
        "cd_enumerator": report.enumerator_json(an.hamming_cd),
        "prediction": report.predicted_json(predict_distribution(spec)),
        "theorems": [report.theorem_json(r) for r in verdicts],
        "griesmer": an.griesmer,
        "dual_distance": {"wmax": cfg.wmax_dual, "value": d_dual},
        "minimality": {
            "all_minimal": all_min,
            "witness": [report.ring_token(x) for x in witness] if witness else None,
            "ashikhmin_barg": ashikhmin_barg(min(nonzero), max(nonzero), spec.p) if nonzero else None,
        },
        "secret_sharing": {
            "classification_from_dual_distance": sss_classify(d_dual) if d_dual else None,
            "access_structure": report.access_json(access),
        },
    }
    code = EXIT_REFUTED if any(r.verdict == "refuted" for r in verdicts) else EXIT_OK
    return doc, code


def sweep(tuples: Sequence[tuple[int, int, int]], budget: int = DEFAULT_BUDGET,
          wmax_dual: int = 2) -> list[dict]:
    rows = []
    for p, m, N in tuples:
        row = {"p": p, "m": m, "N": N, "N2": None, "case_tag": None, "verdict": None, "error": None}
        try:
            cfg = RunConfig(p, m, N, budget=budget, wmax_dual=wmax_dual)
            cfg.validate()
            spec = cfg.spec()
            row["N2"] = spec.N2
            row["case_tag"] = predict_distribution(spec).case_tag
            an = Analyzer(spec, budget, wmax_dual)
            verdicts = {an.verify(t).verdict for t in THEOREMS}
            if "refuted" in verdicts:
                row["verdict"] = "refuted"
            elif "confirmed" in verdicts:
                row["verdict"] = "confirmed"
            else:
                row["verdict"] = "not-applicable"
        except (FewWeightError, ConfigError) as exc:
            row["error"] = f"{type(exc).__name__}: {exc}"
        rows.append(row)
    return rows


def sweep_tuples(ps: Sequence[int], ms: Sequence[int], Ns: Optional[Sequence[int]]) -> list[tuple[int, int, int]]:
    out = []
    for p in ps:
        for m in ms:
            q = p**m
            candidates = Ns if Ns else [d for d in range(1, q) if (q - 1) % d == 0]
            out.extend((p, m, N) for N in candidates)
    return out


# -- argument parsing -------------------------------------------------------

def _int_list(text: str) -> list[int]:
    return [int(t) for t in text.replace(",", " ").split()]


def _add_common(sp: argparse.ArgumentParser, single: bool = True) -> None:
    if single:
        sp.add_argument("--p", type=int, required=True)
        sp.add_argument("--m", type=int, required=True)
        sp.add_argument("--N", type=int, required=True)
        sp.add_argument("--modulus", type=_int_list, default=None,
                        help="m+1 comma-separated coefficients, lowest degree first")
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sp.add_argument("--format", dest="output_format", choices=("json", "csv", "text"), default="json")
    sp.add_argument("--theorems", type=lambda s: s.split(","), default=None)
    sp.add_argument("--wmax-dual", type=int, default=2)
    sp.add_argument("--out", default=None, help="write output to FILE instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fewweight", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    _add_common(sub.add_parser("construct", help="print N1, N2, n, |L|, modulus and D"))
    _add_common(sub.add_parser("analyze", help="enumerate, predict and verify one code"))
    exp = sub.add_parser("export", help="dump the codeword matrix or its Gray image as CSV")
    _add_common(exp)
    exp.add_argument("--what", choices=("codewords", "gray"), default="codewords")
    sw = sub.add_parser("sweep", help="one verdict row per (p, m, N)")
    sw.add_argument("--p", type=_int_list, required=True)
    sw.add_argument("--m", type=_int_list, required=True)
    sw.add_argument("--N", type=_int_list, default=None, help="default: every divisor of p^m - 1")
    _add_common(sw, single=False)
    return parser


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _render_analysis(doc: dict, fmt: str) -> str:
    rows = [(r["weight"], r["frequency"]) for r in doc["lee_enumerator"]["rows"]]
    if fmt == "json":
        return report.dumps(doc)
    if fmt == "csv":
        return report.enumerator_csv(rows)
    s = doc["spec"]
    table = report.text_table(rows, f"Lee weight distribution of C({s['m']}, {s['p']}, {s['N']})")
    verdicts = "".join(f"Theorem {t['theorem']}: {t['verdict']}\n" for t in doc["theorems"])
    return table + "\n" + verdicts


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "sweep":
            rows = sweep(sweep_tuples(args.p, args.m, args.N), args.budget, args.wmax_dual)
            fmt = args.output_format
            text = (report.dumps({"schema": report.SCHEMA_VERSION, "rows": rows}) if fmt == "json"
                    else report.sweep_csv(rows) if fmt == "csv" else report.sweep_text(rows))
            _emit(text, args.out)
            return EXIT_REFUTED if any(r["verdict"] == "refuted" for r in rows) else EXIT_OK

        cfg = RunConfig(args.p, args.m, args.N, args.modulus, args.budget,
                        args.output_format, args.theorems, args.wmax_dual)
        cfg.validate()
        if args.command == "construct":
            doc = construct_doc(cfg)
            if cfg.output_format == "json":
                _emit(report.dumps(doc), args.out)
            else:
                _emit("".join(f"{k}: {v}\n" for k, v in doc["spec"].items()), args.out)
            return EXIT_OK
        if args.command == "export":
            code = build_code(cfg.spec(), cfg.budget)
            _emit(report.codewords_csv(code) if args.what == "codewords" else report.gray_csv(code), args.out)
            return EXIT_OK
        doc, status = analyze(cfg)
        _emit(_render_analysis(doc, cfg.output_format), args.out)
        return status
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except BudgetExceeded as exc:
        print(f"error: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except FewWeightError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
