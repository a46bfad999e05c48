"""Weight multiplicities and branching through exact projection matrices.

Two independent routes compute restrictions to a subgroup:

* :func:`branch` runs Klimyk's alternating-dominance method over the
  projected weight system (singular shifted terms cancel in pairs);
* :func:`restriction_oracle` projects the full weight system and greedily
  peels dominant weights using target weight systems.

They must agree; the test suite checks this on an exhaustive grid.  Weight
multiplicities come from Freudenthal's recursion and are stored on dominant
weights only (every other multiplicity is a Weyl-orbit lookup).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product as _cartesian
from typing import Iterator, Sequence

from .errors import (
    DomainError,
    InvariantViolationError,
    ResourceLimitError,
)
from .lattice import (
    RootSystem,
    Twice,
    Weight,
    _add,
    _sub,
    dot4,
    weyl_dimension,
)

# Above this many weights, invariant counting switches from the Klimyk route
# to the projection-peel route whenever the matrix shape lets the peel skip
# orbit expansion entirely.
KLIMYK_WORK_CAP = 4_000

ORACLE_WEIGHT_LIMIT = 1_000_000


# ---------------------------------------------------------------------------
# Freudenthal weight multiplicities
# ---------------------------------------------------------------------------


@lru_cache(maxsize=8192)
def _dominant_mults(rs: RootSystem, hw2: Twice) -> dict[Twice, int]:
    """Multiplicities of all dominant weights of the irreducible V(hw)."""
    cands = rs.dominant_candidates_twice(hw2)
    rho2 = rs.rho2
    hw_shift = _add(hw2, rho2)
    c_top = dot4(hw_shift, hw_shift)
    # descending pairing with rho orders candidates from hw downwards
    cands.sort(key=lambda t: dot4(t, rho2), reverse=True)
    specs = rs._root_specs
    mult: dict[Twice, int] = {hw2: 1}
    box = max(abs(t) for t in hw2) if hw2 else 0
    mget = mult.get
    single = len(rs.blocks) == 1
    fam = rs.blocks[0][0] if single else None
    canon_generic = rs.canon_twice
    is_d = fam == "D"
    raw: dict[Twice, int] = {hw2: 1}  # per-rep cache keyed on raw vectors
    rget = raw.get
    for mu in cands:
        if mu == hw2:
            continue
        mu_shift = _add(mu, rho2)
        denom = c_top - dot4(mu_shift, mu_shift)
        num = 0
        neg0 = sum(1 for x in mu if x < 0) & 1
        for i, ci, j, cj in specs:
            v = list(mu)
            vi = v[i]
            vj = v[j]
            neg = neg0
            while True:
                if vi < 0:
                    neg ^= 1
                vi += ci
                if vi > box or -vi > box:
                    break
                if vi < 0:
                    neg ^= 1
                v[i] = vi
                if cj:
                    if vj < 0:
                        neg ^= 1
                    vj += cj
                    if vj > box or -vj > box:
                        break
                    if vj < 0:
                        neg ^= 1
                    v[j] = vj
                key_raw = tuple(v)
                m = rget(key_raw, -1)
                if m < 0:
                    # canonicalize: sorted absolute values, family-adjusted
                    if fam == "A":
                        key = tuple(sorted(v, reverse=True))
                    elif single:
                        b = sorted(map(abs, v), reverse=True)
                        if is_d and neg and b[-1]:
                            b[-1] = -b[-1]
                        key = tuple(b)
                    else:
                        key = canon_generic(key_raw)
                    m = mget(key, 0)
                    raw[key_raw] = m
                if not m:
                    break
                num += m * (vi * ci + vj * cj)
        if num:
            q, r = divmod(2 * num, denom)
            if r:
                raise InvariantViolationError("Freudenthal recursion produced a non-integer")
            mult[mu] = q
    return mult


class WeightMultiplicityMap:
    """Exact weight system of an irreducible, keyed on dominant weights.

    Multiplicity of an arbitrary weight is a canonicalization lookup;
    ``items()`` iterates the full system orbit by orbit.
    """

    def __init__(self, hw: Weight, rs: RootSystem):
        if not rs.is_dominant(hw) or not rs.is_weight_twice(hw.twice):
            raise DomainError(f"{hw} is not a dominant weight of {rs.name}")
        self.hw = hw
        self.rs = rs
        self._dom = _dominant_mults(rs, hw.twice)

    def mult(self, w: Weight) -> int:
        self.rs.check_rank(w)
        return self._dom.get(self.rs.canon_twice(w.twice), 0)

    def dominant_items(self) -> list[tuple[Weight, int]]:
        return [(Weight(t), m) for t, m in sorted(self._dom.items(), reverse=True)]

    def items(self) -> Iterator[tuple[Weight, int]]:
        for t, m in sorted(self._dom.items(), reverse=True):
            for w in self.rs.orbit_twice(t):
                yield Weight(w), m

    def as_dict(self) -> dict[Weight, int]:
        return {w: m for w, m in self.items()}

    def total_mass(self) -> int:
        return sum(m * self.rs.orbit_size(t) for t, m in self._dom.items())

    def weight_count(self) -> int:
        """Number of distinct weights in the system."""
        return sum(self.rs.orbit_size(t) for t in self._dom)


def weight_multiplicities(hw: Weight, rs: RootSystem) -> WeightMultiplicityMap:
    """Complete weight system of V(hw) with exact multiplicities."""
    return WeightMultiplicityMap(hw, rs)


def _weight_count(rs: RootSystem, hw2: Twice) -> int:
    return sum(rs.orbit_size(t) for t in _dominant_mults(rs, hw2))


# ---------------------------------------------------------------------------
# embeddings
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EmbeddingSpec:
    """A subgroup inclusion, given by its exact weight-restriction matrix.

    ``matrix2`` holds 2x the rational matrix, row-major, as integers
    (target rank x source rank).  ``source_spin`` marks sources whose
    half-integral weights label genuine representations (Spin groups).
    """

    name: str
    source: RootSystem
    target: RootSystem
    matrix2: tuple[tuple[int, ...], ...]
    source_spin: bool = False

    def __post_init__(self):
        if len(self.matrix2) != self.target.rank:
            raise DomainError(f"embedding {self.name}: wrong number of matrix rows")
        for row in self.matrix2:
            if len(row) != self.source.rank:
                raise DomainError(f"embedding {self.name}: wrong matrix row length")

    @property
    def matrix(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(tuple(Fraction(e, 2) for e in row) for row in self.matrix2)

    def project_twice(self, w2: Twice) -> Twice:
        out = []
        for row in self.matrix2:
            s = 0
            for c, x in zip(row, w2):
                if c:
                    s += c * x
            if s & 1:
                raise InvariantViolationError(
                    f"embedding {self.name} maps a weight outside the half-integral lattice"
                )
            out.append(s >> 1 if s >= 0 else -((-s) >> 1))
        return tuple(out)

    def project(self, w: Weight) -> Weight:
        self.source.check_rank(w)
        return Weight(self.project_twice(w.twice))

    def validate_lattice(self) -> None:
        """Image of every source root must have denominator dividing 2."""
        for root in self.source.positive_roots:
            img = self.project_twice(root.twice)  # raises on failure
            if not self.target.is_weight_twice(img):
                raise InvariantViolationError(
                    f"embedding {self.name}: root image {img} outside target lattice"
                )


def identity_embedding(rs: RootSystem, name: str = "id", source_spin: bool = False) -> EmbeddingSpec:
    rows = tuple(
        tuple(2 if i == j else 0 for j in range(rs.rank)) for i in range(rs.rank)
    )
    return EmbeddingSpec(name=name, source=rs, target=rs, matrix2=rows, source_spin=source_spin)


@dataclass(frozen=True)
class IrrepMultiset:
    """A decomposition into irreducibles of the target system.

    Entries are (highest weight, multiplicity), sorted descending in the
    lexicographic order of the canonical highest weights.
    """

    entries: tuple[tuple[Weight, int], ...]
    system: RootSystem

    def mult(self, hw: Weight) -> int:
        for w, m in self.entries:
            if w == hw:
                return m
        return 0

    def weights(self) -> tuple[Weight, ...]:
        return tuple(w for w, _ in self.entries)

    def total_dimension(self) -> int:
        return sum(m * weyl_dimension(w, self.system) for w, m in self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)


def _sorted_entries(acc: dict[Twice, int], tgt: RootSystem) -> tuple[tuple[Weight, int], ...]:
    out = [(Weight(t), m) for t, m in acc.items() if m]
    out.sort(key=lambda e: e[0].twice, reverse=True)
    return tuple(out)


# ---------------------------------------------------------------------------
# Klimyk branching
# ---------------------------------------------------------------------------


@lru_cache(maxsize=4096)
def _branch_cached(hw2: Twice, emb: EmbeddingSpec) -> IrrepMultiset:
    src, tgt = emb.source, emb.target
    dom = _dominant_mults(src, hw2)
    rho2t = tgt.rho2
    acc: dict[Twice, int] = {}
    signed_canon = tgt.signed_canon_twice
    rows = emb.matrix2
    n_t = tgt.rank
    for mu, m in dom.items():
        for w2 in src.orbit_twice(mu):
            vals = []
            ok = True
            for r in range(n_t):
                s = 0
                row = rows[r]
                for c, x in zip(row, w2):
                    if c:
                        s += c * x
                s += rho2t[r] * 2
                if s & 1:
                    ok = False
                    break
                vals.append(s // 2)
            if not ok:
                raise InvariantViolationError(
                    f"embedding {emb.name} maps a weight outside the half-integral lattice"
                )
            canon, sign = signed_canon(tuple(vals))
            if sign:
                key = canon
                acc[key] = acc.get(key, 0) + m * sign
    out: dict[Twice, int] = {}
    for key, m in acc.items():
        if m == 0:
            continue
        hw_t = _sub(key, rho2t)
        if m < 0 or not tgt.is_dominant_twice(hw_t) or not tgt.is_weight_twice(hw_t):
            raise InvariantViolationError(
                f"Klimyk resolution failed for {Weight(hw2)} through {emb.name}"
            )
        out[hw_t] = m
    return IrrepMultiset(entries=_sorted_entries(out, tgt), system=tgt)


def branch(hw: Weight, emb: EmbeddingSpec) -> IrrepMultiset:
    """Exact decomposition of V(hw) restricted through the embedding."""
    src = emb.source
    src.check_rank(hw)
    if not src.is_weight_twice(hw.twice) or not src.is_dominant_twice(hw.twice):
        raise DomainError(f"{hw} is not a dominant weight of {src.name}")
    return _branch_cached(hw.twice, emb)


# ---------------------------------------------------------------------------
# projection + peel (the independent oracle, also the large-system fallback)
# ---------------------------------------------------------------------------


@lru_cache(maxsize=512)
def _signed_permutation_spec(emb: EmbeddingSpec) -> tuple[tuple[int, int], ...] | None:
    """Detect matrices that are signed coordinate permutations.

    Returns, per target row, (source column, sign); None if not of this shape.
    """
    used = set()
    spec = []
    for row in emb.matrix2:
        nz = [(j, c) for j, c in enumerate(row) if c]
        if len(nz) != 1 or abs(nz[0][1]) != 2 or nz[0][0] in used:
            return None
        used.add(nz[0][0])
        spec.append((nz[0][0], 1 if nz[0][1] > 0 else -1))
    return tuple(spec)


@lru_cache(maxsize=512)
def _drop_tail_spec(emb: EmbeddingSpec) -> int | None:
    """Detect single-block B/C/D -> B/C drop-last-coordinates projections.

    Returns the number of dropped trailing coordinates, or None.
    """
    src, tgt = emb.source, emb.target
    if len(src.blocks) != 1 or len(tgt.blocks) != 1:
        return None
    if src.blocks[0][0] == "A" or tgt.blocks[0][0] not in ("B", "C"):
        return None
    k = tgt.rank
    for r, row in enumerate(emb.matrix2):
        for j, c in enumerate(row):
            if (c != 0) != (j == r) or (c and c != 2):
                return None
    return src.rank - k


def _projected_dominant_map(hw2: Twice, emb: EmbeddingSpec) -> dict[Twice, int]:
    """Multiplicities of the projected weight system at target-dominant points."""
    src, tgt = emb.source, emb.target
    dom = _dominant_mults(src, hw2)
    proj: dict[Twice, int] = {}

    drop = _drop_tail_spec(emb)
    if drop == 1:
        # images (u, t): u is the sorted nonnegative head, t the dropped value
        src_fam = src.blocks[0][0]
        for mu, m in dom.items():
            values = sorted({abs(x) for x in mu}, reverse=True)
            counts: dict[int, int] = {}
            for x in mu:
                counts[abs(x)] = counts.get(abs(x), 0) + 1
            for v in values:
                head = []
                for val in values:
                    c = counts[val] - (1 if val == v else 0)
                    head.extend([val] * c)
                u = tuple(head)
                if not tgt.is_dominant_twice(u):
                    continue
                for sign in (1, -1):
                    if v == 0 and sign < 0:
                        continue
                    if sign < 0 and src_fam == "D" and 0 not in counts:
                        continue  # odd sign pattern not in the D-orbit
                    proj[u] = proj.get(u, 0) + m
            # B/C sources always admit both signs; handled above
        return proj

    perm = _signed_permutation_spec(emb)
    if perm is not None and len(perm) == src.rank:
        # bijective signed permutation: enumerate signed variants of each
        # dominant source weight whose rearrangement is target-dominant
        for mu, m in dom.items():
            seen: set[Twice] = set()
            for w2 in src.orbit_twice(mu):
                u = tuple(s * w2[j] for j, s in perm)
                if u in seen:
                    continue
                if tgt.is_dominant_twice(u):
                    seen.add(u)
                    proj[u] = proj.get(u, 0) + m
        return proj

    for mu, m in dom.items():
        for w2 in src.orbit_twice(mu):
            u = emb.project_twice(w2)
            if tgt.is_dominant_twice(u):
                proj[u] = proj.get(u, 0) + m
    return proj


def _peel(proj: dict[Twice, int], tgt: RootSystem) -> dict[Twice, int]:
    """Greedy peeling of a target-dominant multiplicity table.

    Peeling only subtracts at dominance-lower weights, so one descending
    pass in (height, lexicographic) order visits every highest weight.
    """
    rho2t = tgt.rho2
    out: dict[Twice, int] = {}
    remaining = dict(proj)
    order = sorted(remaining, key=lambda t: (dot4(t, rho2t), t), reverse=True)
    for u in order:
        m = remaining.get(u, 0)
        if m == 0:
            continue
        if m < 0 or not tgt.is_weight_twice(u):
            raise InvariantViolationError("projection peel failed; invalid embedding data")
        tdm = _dominant_mults(tgt, u)
        for v, mv in tdm.items():
            nv = remaining.get(v, 0) - m * mv
            if nv:
                remaining[v] = nv
            else:
                remaining.pop(v, None)
        out[u] = m
    if any(remaining.values()):
        raise InvariantViolationError("projection peel left residual weights")
    return out


def restriction_oracle(
    hw: Weight, emb: EmbeddingSpec, weight_limit: int = ORACLE_WEIGHT_LIMIT
) -> IrrepMultiset:
    """Brute-force restriction: project the weight system, peel dominants.

    Same contract as :func:`branch`, by a different algorithm; intended for
    cross-validation.  Raises a resource error when the weight system
    exceeds ``weight_limit`` and no projection shortcut applies.
    """
    src, tgt = emb.source, emb.target
    src.check_rank(hw)
    if not src.is_weight_twice(hw.twice) or not src.is_dominant_twice(hw.twice):
        raise DomainError(f"{hw} is not a dominant weight of {src.name}")
    needs_expansion = _drop_tail_spec(emb) != 1 and _signed_permutation_spec(emb) is None
    if needs_expansion and _weight_count(src, hw.twice) > weight_limit:
        raise ResourceLimitError(
            f"weight system of {hw} exceeds {weight_limit} entries"
        )
    proj = _projected_dominant_map(hw.twice, emb)
    peeled = _peel(proj, tgt)
    return IrrepMultiset(entries=_sorted_entries(peeled, tgt), system=tgt)


def _zero_image_feasible(hw2: Twice, emb: EmbeddingSpec) -> bool:
    """Cheap necessary condition for invariants: some weight must project to 0.

    Only decided for drop-tail and signed-permutation matrices; other shapes
    conservatively return True.
    """
    src = emb.source
    if _signed_permutation_spec(emb) is not None and emb.target.rank == src.rank:
        return src.dominance_leq_twice((0,) * src.rank, hw2)
    if _drop_tail_spec(emb) == 1:
        box = max(abs(t) for t in hw2) if hw2 else 0
        zero_head = (0,) * (src.rank - 1)
        for t in range(0, box + 1, 2):
            if src.dominance_leq_twice(src.canon_twice(zero_head + (t,)), hw2):
                return True
            if t and src.dominance_leq_twice(src.canon_twice(zero_head + (-t,)), hw2):
                return True
        return False
    return True


def invariant_multiplicity(hw: Weight, emb: EmbeddingSpec) -> int:
    """Dimension of the subgroup-invariant vectors in V(hw).

    Equals the multiplicity of the trivial constituent of the restriction.
    Computed through :func:`branch`; very large weight systems fall back to
    the projection-peel route, which computes the same decomposition without
    expanding Weyl orbits (the two routes are cross-checked in the tests).
    """
    src = emb.source
    src.check_rank(hw)
    if not src.is_weight_twice(hw.twice) or not src.is_dominant_twice(hw.twice):
        raise DomainError(f"{hw} is not a dominant weight of {src.name}")
    if not _zero_image_feasible(hw.twice, emb):
        return 0
    zero = (0,) * emb.target.rank
    fast_shape = _drop_tail_spec(emb) == 1 or _signed_permutation_spec(emb) is not None
    if not fast_shape or _weight_count(src, hw.twice) <= KLIMYK_WORK_CAP:
        dec = _branch_cached(hw.twice, emb)
        for w, m in dec.entries:
            if w.twice == zero:
                return m
        return 0
    proj = _projected_dominant_map(hw.twice, emb)
    peeled = _peel(proj, emb.target)
    return peeled.get(zero, 0)
