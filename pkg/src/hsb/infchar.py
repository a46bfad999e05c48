"""Eigenvalue-level arithmetic for the invariant-operator subalgebras.

Operators are represented only by the scalars they take on irreducible
constituents; verifying a ring relation means checking an affine identity on
those scalar families, exactly.  The transfer maps nu_tau send the
eigenvalue parameter of the overgroup picture to the infinitesimal character
of the subgroup constituents; per-record parameter dictionaries (which
highest weight carries which scalar) live here as data.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .catalog import QuadrupleRecord, gl_variant
from .errors import DomainError, InvariantViolationError, UnsupportedRecordError
from .fibration import FibrationTable, double_fibration
from .lattice import (
    InfCharClass,
    Weight,
    build_root_system,
    casimir_eigenvalue,
    infchar_class,
    infchar_equal,
    infinitesimal_character,
    product_system,
)

_B4 = build_root_system("B", 4)


def _as_int(value, what: str) -> int:
    f = Fraction(value)
    if f.denominator != 1:
        raise DomainError(f"{what} must be an integer-valued rational, got {value}")
    return int(f)


def nu_tau_so16(lam, k: int) -> InfCharClass:
    """Transfer map for the sphere-over-sphere row: (lam, k+5, k+3, k+1)/2 mod W(B4)."""
    lam = _as_int(lam, "lambda")
    if k < 0:
        raise DomainError("k must be nonnegative")
    return infchar_class(Weight.halves(lam, k + 5, k + 3, k + 1), _B4)


def nu_tau_gl(lam: Sequence, k_tuple: Sequence[int], k0, n: int) -> InfCharClass:
    """Transfer map for the GL-over-Sp family, over gl(2n+1) coordinates.

    Builds (lam_1/2, ..., lam_n/2, k_1+n-1, k_2+n-3, ..., k_n-n+1, k0).
    """
    if len(lam) != n or len(k_tuple) != n:
        raise DomainError(f"expected {n} lambda entries and {n} k entries")
    if any(k_tuple[i] < k_tuple[i + 1] for i in range(n - 1)):
        raise DomainError("k-tuple must be non-increasing")
    entries2 = [_as_int(x, "lambda entry") for x in lam]  # lam_i / 2, doubled
    entries2 += [2 * (k_tuple[i] + n - 1 - 2 * i) for i in range(n)]
    entries2.append(2 * _as_int(k0, "k0"))
    rs = product_system([("A", 2 * n)])
    return infchar_class(Weight(entries2), rs)


def powersum_scalar(nu, k: int) -> Fraction:
    """Sum of k-th powers of the entries of a rational vector."""
    if isinstance(nu, Weight):
        entries = nu.coords
    elif isinstance(nu, InfCharClass):
        entries = nu.representative.coords
    else:
        entries = [Fraction(x) for x in nu]
    return sum((Fraction(x) ** k for x in entries), Fraction(0))


# ---------------------------------------------------------------------------
# per-record parameter dictionaries
# ---------------------------------------------------------------------------


def _rank_one_lambda(pi: Weight, ambient_dim: int) -> Fraction:
    """Eigenvalue parameter of a sphere harmonic: j + (N-2)/2."""
    return Fraction(pi.twice[0], 2) + Fraction(ambient_dim - 2, 2)


def _gl_lambda_vector(pi: Weight, n: int) -> tuple[int, ...]:
    """Parameter of the Sp-spherical representation (a1,a1,...,a_{n+1},a_{n+1})."""
    coords = pi.twice
    a = []
    for i in range(n + 1):
        if coords[2 * i] != coords[2 * i + 1] or coords[2 * i] % 2:
            raise InvariantViolationError(f"{pi} is not of the doubled Sp-spherical form")
        a.append(coords[2 * i] // 2)
    return tuple(2 * (a[i] + n + 2 - 2 * (i + 1)) for i in range(n + 1))


@dataclass(frozen=True)
class HCParamRule:
    """How a record's Disc(G/H) members map to eigenvalue parameters.

    kind "rank-one-sphere": scalar lambda = j + (N-2)/2 on harmonics H^j(R^N);
    kind "gl-powersum": vector lambda_i = 2(a_i + n + 2 - 2i) on doubled
    highest weights of the GL-over-Sp family.
    """

    record_id: str
    kind: str
    param: int  # N for rank-one, n for gl-powersum

    def eigenvalue(self, pi: Weight):
        if self.kind == "rank-one-sphere":
            return _rank_one_lambda(pi, self.param)
        if self.kind == "gl-powersum":
            return _gl_lambda_vector(pi, self.param)
        raise UnsupportedRecordError(f"unknown rule kind {self.kind!r}")


def hc_rule_for(rec: QuadrupleRecord) -> HCParamRule:
    if rec.id == "vi":
        return HCParamRule("vi", "rank-one-sphere", 16)
    if rec.id == "i":
        n = dict(rec.params)["n"]
        return HCParamRule("i", "rank-one-sphere", 2 * n + 2)
    if rec.id == "iv-gl":
        n = dict(rec.params)["n"]
        return HCParamRule("iv-gl", "gl-powersum", n)
    raise UnsupportedRecordError(f"no eigenvalue-parameter rule for record {rec.key}")


def _nu_for_row(rec: QuadrupleRecord, tau: Weight, lam) -> InfCharClass:
    if rec.id == "vi":
        # tau = (k,k,k,k)/2; lam is the scalar sphere parameter
        k = tau.twice[0]
        return nu_tau_so16(lam, k)
    if rec.id == "i":
        n = dict(rec.params)["n"]
        m = Fraction(tau.twice[-1], 2)  # the U(1)-factor weight
        lam = Fraction(lam)
        entries2 = [_as_int(lam + m, "lambda+m")]
        entries2 += [(n - 2) - 2 * i for i in range(n - 1)]
        entries2.append(-_as_int(lam - m, "lambda-m"))
        rs = product_system([("A", n)])
        return infchar_class(Weight(entries2), rs)
    if rec.id == "iv-gl":
        n = dict(rec.params)["n"]
        # tau's U(2n)-part is (k1,k1,...,kn,kn); the final slot of the
        # transfer formula is pinned by the trace condition k0 = lam_{n+1}/2,
        # resolved against the brute-force fibration (the raw U(1)-weight of
        # tau differs from it)
        ks = []
        for i in range(n):
            if tau.twice[2 * i] != tau.twice[2 * i + 1] or tau.twice[2 * i] % 2:
                raise InvariantViolationError(f"{tau} is not of the doubled form")
            ks.append(tau.twice[2 * i] // 2)
        k0 = Fraction(lam[n], 2)
        return nu_tau_gl(lam[:n], tuple(ks), k0, n)
    raise UnsupportedRecordError(f"no transfer map for record {rec.key}")


def verify_theorem_C(
    rec: QuadrupleRecord, bound: int, table: FibrationTable | None = None
) -> list[tuple[Weight, bool]]:
    """Check infchar(theta) = nu_tau(lambda) on every conclusive fibration row."""
    rule = hc_rule_for(rec)
    if table is None:
        table = double_fibration(rec, bound)
    gp_sys = rec.group("Gp").system
    out = []
    for row in table.rows:
        if row.pi is None:
            continue
        lam = rule.eigenvalue(row.pi)
        lhs = infinitesimal_character(row.theta, gp_sys)
        rhs = _nu_for_row(rec, row.tau, lam)
        out.append((row.theta, infchar_equal(lhs, rhs)))
    return out


# ---------------------------------------------------------------------------
# affine-relation discovery
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RelationReport:
    """Result of solving p = a*r + b*q + c over a family of scalar samples."""

    coefficients: tuple[Fraction, Fraction, Fraction] | None
    samples: tuple[tuple[Fraction, Fraction, Fraction], ...]
    residuals: tuple[Fraction, ...]
    exact: bool
    indeterminate: bool = False
    nullity: int = 0


def discover_affine_relation(samples: Sequence[tuple]) -> RelationReport:
    """Exact rational solve of p = a*r + b*q + c over (p, q, r) samples.

    Requires at least five samples.  Degenerate sample sets are reported as
    indeterminate with the dimension of the solution space, never guessed.
    """
    if len(samples) < 5:
        raise DomainError("need at least 5 samples in general position")
    rows = [
        (Fraction(r), Fraction(q), Fraction(1), Fraction(p)) for p, q, r in samples
    ]
    # Gaussian elimination on the 3-column system [r q 1 | p]
    work = [list(row) for row in rows]
    pivots: list[int] = []
    row_at = 0
    for col in range(3):
        pivot = next((i for i in range(row_at, len(work)) if work[i][col] != 0), None)
        if pivot is None:
            continue
        work[row_at], work[pivot] = work[pivot], work[row_at]
        pr = work[row_at]
        for i in range(len(work)):
            if i != row_at and work[i][col] != 0:
                f = work[i][col] / pr[col]
                for j in range(col, 4):
                    work[i][j] -= f * pr[j]
        pivots.append(col)
        row_at += 1
    rank = len(pivots)
    if rank < 3:
        return RelationReport(
            coefficients=None,
            samples=tuple((p, q, r) for r, q, _, p in rows),
            residuals=(),
            exact=False,
            indeterminate=True,
            nullity=3 - rank,
        )
    sol = [Fraction(0)] * 3
    for i, col in enumerate(pivots):
        sol[col] = work[i][3] / work[i][col]
    a, b, c = sol
    residuals = tuple(p - (a * r + b * q + c) for r, q, _, p in rows)
    exact = all(res == 0 for res in residuals)
    return RelationReport(
        coefficients=(a, b, c),
        samples=tuple((p, q, r) for r, q, _, p in rows),
        residuals=residuals,
        exact=exact,
    )


def relation_samples(
    rec: QuadrupleRecord, bound: int, table: FibrationTable | None = None
) -> list[tuple[Fraction, Fraction, Fraction]]:
    """Scalar triples (p, q, r) for the record's operator generators.

    Row (vi) pairs the three Casimir scalars; row (i) pairs the overgroup
    Casimir with the squared fiber weight and the power-sum scalar of the
    constituent's infinitesimal character.
    """
    if table is None:
        table = double_fibration(rec, bound)
    gp_sys = rec.group("Gp").system
    out = []
    if rec.id == "vi":
        g_sys = rec.group("G").system
        lp_sys = rec.group("Lp").system
        for row in table.rows:
            if row.pi is None:
                continue
            out.append(
                (
                    casimir_eigenvalue(row.pi, g_sys),
                    casimir_eigenvalue(row.tau, lp_sys),
                    casimir_eigenvalue(row.theta, gp_sys),
                )
            )
        return out
    if rec.id == "i":
        g_sys = rec.group("G").system
        for row in table.rows:
            if row.pi is None:
                continue
            m = Fraction(row.tau.twice[-1], 2)
            nu = infinitesimal_character(row.theta, gp_sys).representative
            out.append(
                (casimir_eigenvalue(row.pi, g_sys), m * m, powersum_scalar(nu, 2))
            )
        return out
    raise UnsupportedRecordError(f"no relation-sample rule for record {rec.key}")


# ---------------------------------------------------------------------------
# GL-family power-sum relations
# ---------------------------------------------------------------------------


def verify_gl_relations(n: int, bound: int, kmax: int | None = None) -> list[tuple[int, bool]]:
    """Check the power-sum identities on the GL-over-Sp fibration at size n.

    For every matched triple (pi, tau, theta) with parameters lambda, mu, nu,
    the k-th identity is sum(lambda^k) + sum(mu^k) = 2^k sum(nu^k); the k=1
    entry also requires sum(lambda) - mu0 = sum(nu) with mu0 the raw
    U(1)-weight of tau.  Returns (k, holds-on-every-triple) pairs.
    """
    if n < 1 or n > 2:
        raise UnsupportedRecordError("GL-family relations are desk-scale: n in {1, 2}")
    if kmax is None:
        kmax = 2 * n + 1
    rec = gl_variant(n)
    table = double_fibration(rec, bound, pi_bound=bound)
    gp_sys = rec.group("Gp").system
    triples = []
    for row in table.rows:
        if row.pi is None:
            raise InvariantViolationError(
                f"kappa1 inconclusive for {row.theta}; raise the bound"
            )
        lam = _gl_lambda_vector(row.pi, n)  # doubled entries
        mu2 = []
        for i in range(n):
            if row.tau.twice[2 * i] != row.tau.twice[2 * i + 1] or row.tau.twice[2 * i] % 2:
                raise InvariantViolationError(f"{row.tau} is not of the doubled form")
            k_i = row.tau.twice[2 * i] // 2
            mu2.append(2 * (k_i + n - 1 - 2 * i))
        mu0 = Fraction(row.tau.twice[-1], 2)
        nu = infinitesimal_character(row.theta, gp_sys).representative
        triples.append((lam, tuple(mu2), mu0, nu))
    results = []
    for k in range(1, kmax + 1):
        ok = True
        for lam, mu_vals, mu0, nu in triples:
            lhs = sum(Fraction(x) ** k for x in lam) + sum(
                Fraction(x) ** k for x in mu_vals
            )
            rhs = (2**k) * powersum_scalar(nu, k)
            if lhs != rhs:
                ok = False
                break
            if k == 1:
                lam_sum = sum(Fraction(x) for x in lam)
                if lam_sum - mu0 != powersum_scalar(nu, 1):
                    ok = False
                    break
        results.append((k, ok))
    return results
