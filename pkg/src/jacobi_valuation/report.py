"""Prime search, parameter sweeps and report serialization (JSON / CSV)."""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

import numpy as np

from . import __version__
from .errors import ParameterError
from .ff import build_field_ctx, check_ell_f, derive_param_set
from .theorems import verify

TOOL = "jacobi-valuation"


def find_primes(ell: int, f: int, q_min: int, q_max: int) -> list[int]:
    """Primes q in [q_min, q_max] with q == 1 (mod ell*f), ascending."""
    if q_max < 2 or q_max < q_min:
        return []
    sieve = np.ones(q_max + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, int(q_max ** 0.5) + 1):
        if sieve[p]:
            sieve[p * p::p] = False
    n = ell * f
    return [int(q) for q in np.flatnonzero(sieve) if q >= q_min and q % n == 1]


@dataclass
class SweepSpec:
    ell: int
    f: int
    q_min: int
    q_max: int
    g_override: int | None = None
    k_cap: int | None = None
    jobs: int = 1
    format: str = "json"

    def __post_init__(self):
        check_ell_f(self.ell, self.f)
        if self.q_min > self.q_max:
            raise ParameterError(f"q_min={self.q_min} > q_max={self.q_max}")
        if self.k_cap is None:
            self.k_cap = self.ell
        if self.k_cap < 1:
            raise ParameterError(f"k_cap must be >= 1, got {self.k_cap}")
        if self.format not in ("json", "csv"):
            raise ParameterError(f"unknown format {self.format!r}")

    def header(self) -> dict:
        # jobs is omitted: it must not change the report bytes
        spec = asdict(self)
        spec.pop("jobs")
        return {"tool": TOOL, "version": __version__, "spec": spec}


def verify_case(ell: int, f: int, q: int, g: int | None = None, k_cap: int | None = None) -> dict:
    ctx = build_field_ctx(q, g)
    params = derive_param_set(ctx, ell, f)
    return verify(ctx, params, k_cap).to_dict()


def _verify_args(args):
    return verify_case(*args)


def run_sweep(spec: SweepSpec) -> list[dict]:
    primes = find_primes(spec.ell, spec.f, spec.q_min, spec.q_max)
    tasks = [(spec.ell, spec.f, q, spec.g_override, spec.k_cap) for q in primes]
    if spec.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=spec.jobs) as pool:
            rows = list(pool.map(_verify_args, tasks, chunksize=4))
    else:
        rows = [_verify_args(t) for t in tasks]
    rows.sort(key=lambda r: r["q"])
    return rows


def row_ok(row: dict) -> bool:
    return (all(r["agree"] for r in row["thm15"]) and row["thm16"]["agree"]
            and all(row["checks"].values()))


def flatten_row(row: dict) -> dict:
    """One column per leaf of the JSON row."""
    out = {}
    for key, val in row.items():
        if key == "thm15":
            for r in val:
                for leaf in ("cond1", "cond2", "cond3", "agree"):
                    out[f"thm15_k{r['k']}_{leaf}"] = r[leaf]
        elif key == "thm16":
            for leaf, v in val.items():
                out[f"thm16_{leaf}"] = v
        elif key == "checks":
            for leaf, v in val.items():
                out[f"check_{leaf}"] = v
        else:
            out[key] = val
    return out


def _csv_cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def render_json(header: dict, rows: list[dict]) -> str:
    return json.dumps({"header": header, "rows": rows}, indent=2) + "\n"


def render_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    flat = [flatten_row(r) for r in rows]
    columns = list(flat[0]) if flat else ["ell", "f", "q", "g", "val_floor"]
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for r in flat:
        writer.writerow([_csv_cell(r.get(c, "")) for c in columns])
    return buf.getvalue()


def render(fmt: str, header: dict, rows: list[dict]) -> str:
    return render_json(header, rows) if fmt == "json" else render_csv(rows)
