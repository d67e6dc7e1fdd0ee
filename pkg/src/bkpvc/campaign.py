"""Randomised campaigns checking the lower bounds against exact solutions."""
from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .bounds import lower_bound
from .errors import InvalidParams
from .generators import gen_directed_extremal, gen_random, gen_undirected_extremal
from .io import dumps_forest
from .solver import solve


@dataclass(frozen=True)
class TrialRecord:
    kind: str
    n: int
    k: int
    trial: int
    seed: str
    source: str  # "random" or "extremal-<i>"
    psi_b: int
    bound_exact: str
    bound_ceiling: int
    gap: str
    violation: bool


@dataclass
class CampaignReport:
    records: list[TrialRecord] = field(default_factory=list)

    @property
    def trials(self) -> int:
        return len(self.records)

    @property
    def violations(self) -> int:
        return sum(r.violation for r in self.records)

    @property
    def min_gap(self) -> Optional[Fraction]:
        if not self.records:
            return None
        return min(Fraction(r.gap) for r in self.records)

    def summary(self) -> dict:
        g = self.min_gap
        return {
            "summary": True,
            "trials": self.trials,
            "violations": self.violations,
            "min_gap": None if g is None else str(g),
        }

    def to_jsonl(self) -> str:
        lines = [json.dumps(asdict(r), sort_keys=True) for r in self.records]
        lines.append(json.dumps(self.summary(), sort_keys=True))
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        names = list(TrialRecord.__dataclass_fields__)
        w = csv.DictWriter(buf, fieldnames=names, lineterminator="\n")
        w.writeheader()
        for r in self.records:
            w.writerow(asdict(r))
        return buf.getvalue()


class TrialFailed(RuntimeError):
    """A trial raised; carries what is needed to replay it."""

    def __init__(self, message: str, forest_json: str, seed: str):
        super().__init__(message)
        self.forest_json = forest_json
        self.seed = seed


def _run_trial(job):
    kind, n, k, t, seed, source, forest = job
    if forest is None:
        forest = gen_random(kind, n, seed, component_bias=_bias(seed))
    try:
        value = solve(forest, k).value
        bound = lower_bound(kind, n, k)
    except Exception as exc:  # noqa: BLE001 - any failure must be replayable
        raise TrialFailed(f"{type(exc).__name__}: {exc}", dumps_forest(forest), seed) from exc
    gap = Fraction(value) - bound.exact
    return TrialRecord(kind, n, k, t, seed, source, value, str(bound.exact),
                       bound.ceiling, str(gap), value < bound.ceiling or value > n)


def _bias(seed: str) -> float:
    # spread component counts across trials without a second RNG stream
    return (sum(seed.encode()) % 5) / 10


def run_campaign(kind: str, n_values: Sequence[int], k_values: Sequence[int],
                 trials_per_cell: int, seed: int, include_extremal: bool = False,
                 jobs: int = 1) -> CampaignReport:
    if kind not in ("directed", "undirected"):
        raise InvalidParams(f"unknown forest kind {kind!r}")
    n_values, k_values = list(n_values), list(k_values)
    if not n_values or not k_values or trials_per_cell < 1:
        raise InvalidParams("campaign ranges must be non-empty and trials >= 1")
    n_min = 1 if kind == "directed" else 2
    if min(n_values) < n_min:
        raise InvalidParams(f"{kind} bound needs n >= {n_min}")
    if min(k_values) < 2:
        raise InvalidParams("k must be >= 2")

    work = []
    for n in n_values:
        for k in k_values:
            for t in range(trials_per_cell):
                work.append((kind, n, k, t, f"{seed}/{kind}/{n}/{k}/{t}", "random", None))
            if include_extremal:
                offset = 0 if kind == "directed" else 1
                if (n - offset) % k == 0 and (n - offset) // k % 2 == 1:
                    i = ((n - offset) // k + 1) // 2
                    gen = gen_directed_extremal if kind == "directed" else gen_undirected_extremal
                    work.append((kind, n, k, trials_per_cell, f"{seed}/extremal",
                                 f"extremal-{i}", gen(i, k)))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_run_trial, work, chunksize=64))
    else:
        records = [_run_trial(job) for job in work]
    return CampaignReport(records)
