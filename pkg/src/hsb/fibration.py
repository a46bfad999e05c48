"""The double fibration on the discrete spectrum of G'/H'.

Every spherical quadruple H in G, G' in G with L' between H' and G' carries
two projections of Disc(G'/H'): kappa1 sends a constituent to the unique
member of Disc(G/H) whose restriction contains it, kappa2 to the unique
member of Disc(L'/H') it contains with H'-invariants.  Both are computed by
brute-force branching; rows that cannot be settled within the scan bound are
reported as inconclusive rather than guessed.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from pathlib import Path

from .catalog import CATALOG_VERSION, QuadrupleRecord
from .characters import branch
from .errors import DomainError, InvariantViolationError
from .lattice import Weight, weyl_dimension
from .spectra import check_multiplicity_free, disc_series


@dataclass(frozen=True)
class FibrationRow:
    theta: Weight
    pi: Weight | None  # None when the scan bound was insufficient
    tau: Weight

    @property
    def inconclusive(self) -> bool:
        return self.pi is None


@dataclass(frozen=True)
class FibrationTable:
    record_key: str
    bound: int
    pi_bound: int
    rows: tuple[FibrationRow, ...]

    def row_for(self, theta: Weight) -> FibrationRow:
        for row in self.rows:
            if row.theta == theta:
                return row
        raise DomainError(f"{theta} is not in the enumerated spectrum")

    def fiber_over_pi(self, pi: Weight) -> tuple[Weight, ...]:
        return tuple(r.theta for r in self.rows if r.pi == pi)

    def fiber_over_tau(self, tau: Weight) -> tuple[Weight, ...]:
        return tuple(r.theta for r in self.rows if r.tau == tau)


def _require_computable(rec: QuadrupleRecord) -> None:
    if not rec.spherical:
        raise DomainError(f"record {rec.key} is not spherical")
    rec.embedding("HpinGp")  # raises UnsupportedRecordError when not computable


def kappa1(theta: Weight, rec: QuadrupleRecord, bound: int) -> Weight | None:
    """The unique pi in Disc(G/H) within the bound containing theta, else None.

    Scans the spectrum in increasing first-coordinate order and asserts that
    at most one member contains theta (multiplicity one).
    """
    _require_computable(rec)
    spec_gh = disc_series(rec.embedding("HinG"), bound)
    emb = rec.embedding("GpinG")
    hits = []
    for pi, _ in spec_gh:
        m = branch(pi, emb).mult(theta)
        if m == 1:
            hits.append(pi)
        elif m > 1:
            raise InvariantViolationError(
                f"{theta} occurs with multiplicity {m} in {pi}|: "
                "multiplicity-free hypothesis violated"
            )
    if len(hits) > 1:
        raise InvariantViolationError(
            f"{theta} is contained in several spectrum members {hits}"
        )
    return hits[0] if hits else None


def kappa2(theta: Weight, rec: QuadrupleRecord) -> Weight:
    """The unique tau in Disc(L'/H') contained in theta restricted to L'."""
    _require_computable(rec)
    dec = branch(theta, rec.embedding("LpinGp"))
    hp_in_lp = rec.embedding("HpinLp")
    taus = []
    for w, m in dec:
        d = disc_invariant(w, hp_in_lp)
        if d >= 1:
            taus.append((w, m, d))
    if len(taus) != 1 or taus[0][1] != 1 or taus[0][2] != 1:
        raise InvariantViolationError(
            f"kappa2 uniqueness fails for {theta} over {rec.key}: {taus} "
            "(wrong embedding matrix?)"
        )
    return taus[0][0]


def disc_invariant(w: Weight, emb) -> int:
    from .characters import invariant_multiplicity

    return invariant_multiplicity(w, emb)


def double_fibration(
    rec: QuadrupleRecord,
    bound: int,
    pi_bound: int | None = None,
    cache_dir: str | os.PathLike | None = None,
) -> FibrationTable:
    """One row (theta, kappa1(theta), kappa2(theta)) per spectrum member.

    ``bound`` truncates Disc(G'/H'); the kappa1 scan runs over Disc(G/H) up
    to ``pi_bound`` (default 2*bound + 2).  With ``cache_dir`` set, tables
    are stored on disk keyed by (record, bounds, catalog version).
    """
    _require_computable(rec)
    if pi_bound is None:
        pi_bound = 2 * bound + 2
    if cache_dir is not None:
        cached = _cache_load(cache_dir, rec, bound, pi_bound)
        if cached is not None:
            return cached
    spec = disc_series(rec.embedding("HpinGp"), bound)
    if not check_multiplicity_free(spec):
        raise InvariantViolationError(
            f"Disc(G'/H') for {rec.key} is not multiplicity-free within bound {bound}"
        )
    rows = []
    for theta, _ in spec:
        pi = kappa1(theta, rec, pi_bound)
        tau = kappa2(theta, rec)
        rows.append(FibrationRow(theta=theta, pi=pi, tau=tau))
    table = FibrationTable(record_key=rec.key, bound=bound, pi_bound=pi_bound, rows=tuple(rows))
    if cache_dir is not None:
        _cache_store(cache_dir, table)
    return table


def verify_fibration(table: FibrationTable, rec: QuadrupleRecord) -> bool:
    """Re-verify the two multiplicity-one conditions by independent branch calls."""
    gp_in_g = rec.embedding("GpinG")
    lp_in_gp = rec.embedding("LpinGp")
    for row in table.rows:
        if row.pi is None:
            continue
        if branch(row.pi, gp_in_g).mult(row.theta) != 1:
            return False
        if branch(row.theta, lp_in_gp).mult(row.tau) != 1:
            return False
    return True


def fiber_dimension_check(pi: Weight, rec: QuadrupleRecord, bound: int) -> bool | None:
    """Does the kappa1-fiber over pi fill out its dimension within the bound?

    Returns True/False when all constituents of pi restricted to G' lie
    within the bound, None (inconclusive) otherwise.
    """
    _require_computable(rec)
    gp = rec.embedding("GpinG")
    dec = branch(pi, gp)
    total = 0
    conclusive = True
    for theta, m in dec:
        if m != 1:
            raise InvariantViolationError(
                f"{theta} occurs with multiplicity {m} in {pi}|: not multiplicity-free"
            )
        if theta.twice[0] > 2 * bound:
            conclusive = False
            continue
        total += weyl_dimension(theta, gp.target)
    if not conclusive:
        return None
    return total == weyl_dimension(pi, gp.source)


# ---------------------------------------------------------------------------
# disk cache
# ---------------------------------------------------------------------------


def default_cache_dir() -> Path:
    env = os.environ.get("HSB_CACHE")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "hsb"


def _cache_path(cache_dir, rec: QuadrupleRecord, bound: int, pi_bound: int) -> Path:
    safe = rec.key.replace(":", "_").replace(",", "_").replace("=", "")
    return Path(cache_dir) / f"fibration-{safe}-b{bound}-p{pi_bound}-v{CATALOG_VERSION}.json"


def _cache_load(cache_dir, rec, bound, pi_bound) -> FibrationTable | None:
    path = _cache_path(cache_dir, rec, bound, pi_bound)
    if not path.exists():
        return None
    try:
        data = json.loads(path.read_text("utf-8"))
        if data.get("catalogVersion") != CATALOG_VERSION:
            return None
        rows = tuple(
            FibrationRow(
                theta=Weight.parse(r["theta"]),
                pi=Weight.parse(r["pi"]) if r["pi"] is not None else None,
                tau=Weight.parse(r["tau"]),
            )
            for r in data["rows"]
        )
        return FibrationTable(
            record_key=data["record"], bound=data["bound"], pi_bound=data["piBound"], rows=rows
        )
    except (OSError, ValueError, KeyError):
        return None


def _cache_store(cache_dir, table: FibrationTable) -> None:
    path = _cache_path_from_table(cache_dir, table)
    path.parent.mkdir(parents=True, exist_ok=True)
    payload = {
        "catalogVersion": CATALOG_VERSION,
        "record": table.record_key,
        "bound": table.bound,
        "piBound": table.pi_bound,
        "rows": [
            {
                "theta": str(r.theta),
                "pi": str(r.pi) if r.pi is not None else None,
                "tau": str(r.tau),
            }
            for r in table.rows
        ],
    }
    path.write_text(json.dumps(payload, indent=1, sort_keys=True) + "\n", "utf-8")


def _cache_path_from_table(cache_dir, table: FibrationTable) -> Path:
    safe = table.record_key.replace(":", "_").replace(",", "_").replace("=", "")
    return (
        Path(cache_dir)
        / f"fibration-{safe}-b{table.bound}-p{table.pi_bound}-v{CATALOG_VERSION}.json"
    )
