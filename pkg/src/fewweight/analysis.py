"""Empirical enumerators, theorem verdicts, dual distance, minimal codewords, secret sharing."""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Literal, Optional

import numpy as np

from .charsums import (
    PredictedDistribution,
    griesmer_check,
    parity_condition,
    predict_CD_distribution,
    predict_distribution,
    semiprimitive_conditions,
    semiprimitive_witness,
    theorem49_bounds,
    theorem49_conditions,
)
from .construction import DEFAULT_BUDGET, CodeSpec, RingCode, build_CD, build_code
from .errors import BudgetExceeded, HypothesisFailed, UnknownTheorem
from .ring import RingElem, lee_weight_arrays

THEOREMS = ("2.2", "4.4", "4.5", "4.7", "4.9", "4.10", "5.2", "5.3")


@dataclass
class WeightEnumerator:
    rows: list[tuple[int, int]]
    total: int
    kind: Literal["lee", "hamming"]

    @classmethod
    def from_counts(cls, counts: Counter, kind) -> "WeightEnumerator":
        rows = sorted((int(w), int(f)) for w, f in counts.items() if f)
        return cls(rows, sum(f for _, f in rows), kind)

    def as_dict(self) -> dict[int, int]:
        return dict(self.rows)

    @property
    def nonzero_weights(self) -> list[int]:
        return [w for w, _ in self.rows if w]


def enumerate_weights(spec: CodeSpec, kind: str = "lee", budget: int = DEFAULT_BUDGET,
                      code: Optional[RingCode] = None) -> WeightEnumerator:
    """Lee enumerator of C(m, p, N) over all a, or Hamming enumerator of C_D over all b."""
    if kind == "hamming":
        if spec.q > budget:
            raise BudgetExceeded(f"{spec.q} evaluations exceed budget {budget}")
        weights = np.count_nonzero(build_CD(spec), axis=1)
        return WeightEnumerator.from_counts(Counter(weights.tolist()), "hamming")
    if kind != "lee":
        raise ValueError(f"unknown enumerator kind {kind!r}")
    code = code or build_code(spec, budget)
    counts: Counter = Counter()
    for _, A, B in code.blocks():
        counts.update(lee_weight_arrays(A, B, spec.p).tolist())
    return WeightEnumerator.from_counts(counts, "lee")


# -- dual distance ------------------------------------------------------------

def _ring_lee_weight(alpha: int, beta: int, p: int) -> int:
    return int(beta != 0) + int((alpha + beta) % p != 0)


def dual_lee_distance_upto(spec: CodeSpec, wmax: int, budget: int = DEFAULT_BUDGET) -> Optional[int]:
    """Smallest Lee weight of a nonzero dual vector supported on at most ``wmax`` coordinates.

    Each coordinate x and nonzero r in R contributes the syndrome of r*e_x
    against Ev of the F_p-basis 1, alpha, ..., alpha^(m-1), u, ..., alpha^(m-1)u.
    A vector is dual iff its syndromes sum to zero, so supports of size two
    and three are found by matching negated syndromes in a hash table.
    Returns None when no such dual vector exists.
    """
    if wmax not in (1, 2, 3):
        raise ValueError("wmax must be 1, 2 or 3")
    from .construction import eval_arrays

    F, p, m = spec.field, spec.p, spec.m
    basis = [RingElem(F, p**i, 0) for i in range(m)] + [RingElem(F, 0, p**i) for i in range(m)]
    evs = [eval_arrays(spec, e) for e in basis]
    A = np.stack([ev[0] for ev in evs], axis=1)  # (|L|, 2m)
    B = np.stack([ev[1] for ev in evs], axis=1)
    values = [(al, be) for al in range(p) for be in range(p) if al or be]
    n_entries = spec.length * len(values)
    if wmax == 3 and n_entries**2 // 2 > budget:
        raise BudgetExceeded(f"support-3 dual search needs {n_entries ** 2 // 2} pair lookups")

    entries = []  # (lee weight, coordinate, syndrome)
    for al, be in values:
        syn = np.concatenate([(A * al) % p, (A * be + B * al) % p], axis=1).astype(np.int64)
        w = _ring_lee_weight(al, be, p)
        for x in range(spec.length):
            entries.append((w, x, syn[x]))

    best: Optional[int] = None

    def improve(w: int) -> None:
        nonlocal best
        if best is None or w < best:
            best = w

    for w, _, s in entries:
        if not s.any():
            improve(w)
    if wmax == 1:
        return best

    by_key: dict[bytes, list[tuple[int, int]]] = defaultdict(list)
    for w, x, s in entries:
        by_key[s.tobytes()].append((w, x))
    for group in by_key.values():
        group.sort()
    for w, x, s in entries:
        for w2, x2 in by_key.get(((-s) % p).tobytes(), ()):
            if x2 != x:
                improve(w + w2)
                break
    if wmax == 2:
        return best

    for i, (w1, x1, s1) in enumerate(entries):
        for w2, x2, s2 in entries[i + 1:]:
            if x2 == x1:
                continue
            for w3, x3 in by_key.get(((-(s1 + s2)) % p).tobytes(), ()):
                if x3 != x1 and x3 != x2:
                    improve(w1 + w2 + w3)
                    break
    return best


# -- minimal codewords ------------------------------------------------------

def _support_int(row: np.ndarray) -> int:
    return int.from_bytes(np.packbits(row != 0).tobytes(), "big")


def minimal_codewords(spec: CodeSpec, code: Optional[RingCode] = None,
                      budget: int = DEFAULT_BUDGET) -> tuple[bool, Optional[tuple[RingElem, RingElem]]]:
    """Whether every nonzero codeword of the Gray image is minimal.

    Covering means strict support inclusion, so scalar multiples (equal
    supports) never count against minimality.  On failure the witness is
    (a, a') with supp Phi(Ev(a)) strictly containing supp Phi(Ev(a')).
    """
    if spec.q**4 > budget:
        raise BudgetExceeded(f"pairwise cover check over {spec.q ** 2} codewords exceeds budget")
    code = code or build_code(spec, budget)
    gray = code.gray_matrix()
    F = spec.field
    order = F.ordered_elements
    supports: dict[int, int] = {}
    for idx, row in enumerate(gray):
        s = _support_int(row)
        if s:
            supports.setdefault(s, idx)
    items = sorted(supports.items(), key=lambda kv: bin(kv[0]).count("1"))

    def label(idx: int) -> RingElem:
        return RingElem(F, int(order[idx // spec.q]), int(order[idx % spec.q]))

    for i, (sx, ix) in enumerate(items):
        for sy, iy in items[:i]:
            if sx & sy == sy and sx != sy:
                return False, (label(ix), label(iy))
    return True, None


def ashikhmin_barg(w0: int, winf: int, q: int) -> bool:
    """Sufficient condition w0/winf > (q-1)/q, in integer arithmetic."""
    return q * w0 > (q - 1) * winf


# -- secret sharing -----------------------------------------------------------

@dataclass
class AccessStructure:
    minimal_access_sets: list[tuple[int, ...]]
    dictators: list[int]
    classification: str
    truncated: bool = False
    code_name: str = ""

    def as_json(self, include_sets: bool = True) -> dict:
        out = {
            "code": self.code_name,
            "classification": self.classification,
            "dictators": self.dictators,
            "num_minimal_access_sets": len(self.minimal_access_sets),
            "truncated": self.truncated,
        }
        if include_sets:
            out["minimal_access_sets"] = [list(s) for s in self.minimal_access_sets]
        return out


def massey_access_structure(code: np.ndarray, cap: int = 10_000, code_name: str = "") -> AccessStructure:
    """Minimal coalitions of Massey's scheme read off a p-ary code with secret at coordinate 0.

    ``code`` holds one codeword per row (the whole code, not a basis).
    Coalitions are supports, minus coordinate 0, of codewords that are
    nonzero at coordinate 0; only the inclusion-minimal ones are kept.
    """
    code = np.asarray(code)
    if code.ndim != 2:
        raise ValueError("code must be a 2-d array of codewords")
    n = code.shape[1]
    if code.shape[0] * n > DEFAULT_BUDGET * 16:
        raise BudgetExceeded("code too large to enumerate")
    candidates = set()
    for row in code:
        if n and row[0] != 0:
            s = _support_int(row[1:]) if n > 1 else 0
            if s:
                candidates.add(s)
    # bit i of the packed support (from the left) is coordinate i+1
    width = ((n - 1 + 7) // 8) * 8

    def members(s: int) -> tuple[int, ...]:
        return tuple(i + 1 for i in range(n - 1) if (s >> (width - 1 - i)) & 1)

    minimal: list[int] = []
    truncated = False
    for s in sorted(candidates, key=lambda v: (bin(v).count("1"), v)):
        if any(t & s == t for t in minimal):
            continue
        if len(minimal) >= cap:
            truncated = True
            break
        minimal.append(s)

    sets = sorted(members(s) for s in minimal)
    if sets:
        common = set(sets[0]).intersection(*sets[1:])
    else:
        common = set()
    dictators = sorted(common)
    counts = Counter(i for s in sets for i in s)
    if not sets:
        classification = "unclassified"
    elif dictators:
        classification = "dictatorial"
    elif len({counts.get(i, 0) for i in range(1, n)}) == 1:
        classification = "democratic"
    else:
        classification = "unclassified"
    return AccessStructure(sets, dictators, classification, truncated, code_name)


def sss_classify(dual_distance: int) -> str:
    if dual_distance < 1:
        raise ValueError("dual distance must be positive")
    if dual_distance >= 3:
        return "democratic"
    if dual_distance == 2:
        return "dictatorial"
    return "unclassified"


# -- theorem verdicts ---------------------------------------------------------

@dataclass
class TheoremReport:
    theorem_id: str
    hypothesis_report: list[tuple[str, bool]]
    predicted: Optional[PredictedDistribution]
    observed: Optional[WeightEnumerator]
    verdict: Literal["confirmed", "refuted", "not-applicable"]
    details: dict = field(default_factory=dict)


class Analyzer:
    """Lazily computed, shared artefacts for one code (one enumeration per quantity)."""

    def __init__(self, spec: CodeSpec, budget: int = DEFAULT_BUDGET, wmax_dual: int = 2):
        self.spec = spec
        self.budget = budget
        self.wmax_dual = wmax_dual

    @cached_property
    def code(self) -> RingCode:
        return build_code(self.spec, self.budget)

    @cached_property
    def lee(self) -> WeightEnumerator:
        return enumerate_weights(self.spec, "lee", self.budget, code=self.code)

    @cached_property
    def hamming_cd(self) -> WeightEnumerator:
        return enumerate_weights(self.spec, "hamming", self.budget)

    @cached_property
    def image(self) -> dict:
        return self.code.image_report()

    @cached_property
    def dual_distance(self) -> Optional[int]:
        return dual_lee_distance_upto(self.spec, self.wmax_dual, self.budget)

    @cached_property
    def minimality(self) -> tuple[bool, Optional[tuple[RingElem, RingElem]]]:
        return minimal_codewords(self.spec, self.code, self.budget)

    @cached_property
    def griesmer(self) -> dict:
        spec = self.spec
        length = 2 * spec.length
        dim = self.image["gray_dimension"]
        d = min(self.lee.nonzero_weights, default=0)
        if dim is None or d == 0:
            return {"length": length, "dimension": dim, "distance": d, "sum": None, "equality": False}
        total, eq = griesmer_check(length, dim, d, spec.p)
        return {"length": length, "dimension": dim, "distance": d, "sum": total, "equality": eq}

    def verify(self, theorem_id: str) -> TheoremReport:
        handler = getattr(self, "_thm_" + theorem_id.replace(".", "_"), None)
        if theorem_id not in THEOREMS or handler is None:
            raise UnknownTheorem(theorem_id)
        return handler()

    # two-Lee-weight family hypotheses shared by 4.4, 4.5, 4.7 and 5.2
    def _two_weight_hyps(self) -> list[tuple[str, bool]]:
        return [("N2 = 1", self.spec.N2 == 1), parity_condition(self.spec)]

    @staticmethod
    def _applicable(hyps) -> bool:
        return all(ok for _, ok in hyps)

    def _na(self, tid, hyps, predicted=None) -> TheoremReport:
        return TheoremReport(tid, hyps, predicted, None, "not-applicable")

    def _thm_4_4(self) -> TheoremReport:
        hyps = self._two_weight_hyps()
        if not self._applicable(hyps):
            return self._na("4.4", hyps)
        pred = predict_distribution(self.spec)
        ok = pred.rows == self.lee.rows
        return TheoremReport("4.4", hyps, pred, self.lee, "confirmed" if ok else "refuted")

    def _thm_4_5(self) -> TheoremReport:
        hyps = self._two_weight_hyps()
        if not self._applicable(hyps):
            return self._na("4.5", hyps)
        d = self.dual_distance
        return TheoremReport("4.5", hyps, None, None, "confirmed" if d == 2 else "refuted",
                             {"dual_lee_distance": d, "wmax": self.wmax_dual, "claimed": 2})

    def _thm_4_7(self) -> TheoremReport:
        hyps = self._two_weight_hyps()
        if not self._applicable(hyps):
            return self._na("4.7", hyps)
        g = self.griesmer
        ok = g["equality"] and g["dimension"] == 2 * self.spec.m
        return TheoremReport("4.7", hyps, None, self.lee, "confirmed" if ok else "refuted", dict(g))

    def _thm_4_9(self) -> TheoremReport:
        hyps = theorem49_conditions(self.spec)
        if not self._applicable(hyps):
            return self._na("4.9", hyps)
        bounds = theorem49_bounds(self.spec)
        pred = PredictedDistribution("BoundsOnly", [], hyps, self.spec.q**2, bounds=bounds)
        nonzero = self.lee.nonzero_weights
        d = min(nonzero)
        cap_ok = len(nonzero) <= bounds["max_nonzero_weights"]
        # m odd gives an irrational lower bound; compare with a small slack
        lower = bounds["d_lower"]
        lower_ok = d >= lower if isinstance(lower, Fraction) else d >= lower - 1e-9
        ok = cap_ok and lower_ok and d <= bounds["d_upper"]
        return TheoremReport("4.9", hyps, pred, self.lee, "confirmed" if ok else "refuted",
                             {"distance": d, "nonzero_weight_count": len(nonzero)})

    def _thm_4_10(self) -> TheoremReport:
        hyps, case = semiprimitive_conditions(self.spec)
        if not self._applicable(hyps):
            return self._na("4.10", hyps)
        pred = predict_distribution(self.spec)
        ok = pred.rows == self.lee.rows
        return TheoremReport("4.10", hyps, pred, self.lee, "confirmed" if ok else "refuted")

    def _thm_2_2(self) -> TheoremReport:
        try:
            pred = predict_CD_distribution(self.spec)
        except HypothesisFailed:
            hyps, _ = semiprimitive_conditions(self.spec)
            return self._na("2.2", hyps)
        ok = pred.rows == self.hamming_cd.rows
        return TheoremReport("2.2", pred.hypothesis_report, pred, self.hamming_cd,
                             "confirmed" if ok else "refuted")

    def _minimality_report(self, tid, hyps) -> TheoremReport:
        if not self._applicable(hyps):
            return self._na(tid, hyps)
        all_min, witness = self.minimality
        details = {"all_minimal": all_min}
        if witness:
            details["witness"] = witness
        return TheoremReport(tid, hyps, None, self.lee, "confirmed" if all_min else "refuted", details)

    def _thm_5_2(self) -> TheoremReport:
        return self._minimality_report("5.2", self._two_weight_hyps())

    def _thm_5_3(self) -> TheoremReport:
        spec = self.spec
        p, m, N2 = spec.p, spec.m, spec.N2
        hyps = [("m even", m % 2 == 0)]
        hyps.append(("2 < N2 < p^(m/2 - 1)", m % 2 == 0 and 2 < N2 and N2 * p < p ** (m // 2)))
        witness = semiprimitive_witness(p, N2, m) if m % 2 == 0 else None
        hyps.append(("exists k: p^k = -1 (mod N2), 2k | m", witness is not None))
        if witness:
            k, t = witness
            hyps.append(("N2 even and p, t, (p^k+1)/N2 odd",
                         N2 % 2 == 0 and t % 2 == 1 and ((p**k + 1) // N2) % 2 == 1))
        return self._minimality_report("5.3", hyps)


def verify_theorem(spec: CodeSpec, theorem_id: str, analyzer: Optional[Analyzer] = None) -> TheoremReport:
    if theorem_id not in THEOREMS:
        raise UnknownTheorem(theorem_id)
    return (analyzer or Analyzer(spec)).verify(theorem_id)
