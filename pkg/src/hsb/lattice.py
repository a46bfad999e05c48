"""Exact root-system and Weyl-orbit arithmetic in epsilon-coordinates.

Weights are rational vectors whose entries are integers or half-integers.
They are stored as integer numerators over the fixed denominator 2 (the
``twice`` tuple), so orbit computations hash and compare exactly; nothing in
this module touches floating point.

Classical families A, B, C, D are supported, together with finite products
(needed for subgroups such as U(n)xU(1) or Sp(n)xSp(1)).  Type A is carried
in gl-style coordinates: ``build_root_system("A", n)`` describes gl(n+1) and
its weights have n+1 coordinates.  A rank-0 A-factor (a bare U(1), one
coordinate, no roots) is allowed inside products.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from functools import lru_cache
from itertools import product as _cartesian
from typing import Iterable, Iterator, Sequence

from .errors import (
    ConfigurationError,
    DimensionMismatchError,
    DomainError,
)

Twice = tuple[int, ...]

_FAMILIES = ("A", "B", "C", "D")


def _twice_of(value) -> int:
    """Convert a rational with denominator dividing 2 to its doubled integer."""
    if isinstance(value, int):
        return 2 * value
    if isinstance(value, str):
        value = Fraction(value)
    if isinstance(value, Fraction):
        doubled = value * 2
        if doubled.denominator != 1:
            raise DomainError(f"weight entry {value} is not integral or half-integral")
        return int(doubled)
    raise DomainError(f"cannot interpret {value!r} as a weight entry")


class Weight:
    """A rational weight vector with entries in (1/2)Z.

    Immutable and hashable; arithmetic is exact.  ``twice`` holds the doubled
    integer coordinates, ``coords`` exposes them as Fractions.
    """

    __slots__ = ("twice",)

    def __init__(self, twice: Iterable[int]):
        object.__setattr__(self, "twice", tuple(int(t) for t in twice))

    @classmethod
    def of(cls, *coords) -> "Weight":
        return cls(_twice_of(c) for c in coords)

    @classmethod
    def from_coords(cls, coords: Sequence) -> "Weight":
        return cls(_twice_of(c) for c in coords)

    @classmethod
    def halves(cls, *numerators: int) -> "Weight":
        """Weight with coordinates numerators/2."""
        return cls(numerators)

    @classmethod
    def zero(cls, rank: int) -> "Weight":
        return cls((0,) * rank)

    @classmethod
    def parse(cls, text: str) -> "Weight":
        """Parse a comma-separated list of rationals, e.g. ``"1,1/2,-3"``."""
        parts = [p.strip() for p in text.split(",") if p.strip()]
        if not parts:
            raise DomainError(f"empty weight string {text!r}")
        return cls(_twice_of(Fraction(p)) for p in parts)

    @property
    def rank(self) -> int:
        return len(self.twice)

    @property
    def coords(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(t, 2) for t in self.twice)

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(a + b for a, b in zip(self.twice, other.twice, strict=True))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(a - b for a, b in zip(self.twice, other.twice, strict=True))

    def __neg__(self) -> "Weight":
        return Weight(-a for a in self.twice)

    def dot(self, other: "Weight") -> Fraction:
        return Fraction(dot4(self.twice, other.twice), 4)

    def is_zero(self) -> bool:
        return not any(self.twice)

    def __eq__(self, other) -> bool:
        return isinstance(other, Weight) and self.twice == other.twice

    def __lt__(self, other: "Weight") -> bool:
        return self.twice < other.twice

    def __hash__(self) -> int:
        return hash(self.twice)

    def __repr__(self) -> str:
        return f"Weight({format_weight(self)})"

    def __str__(self) -> str:
        return format_weight(self)


def format_weight(w: Weight) -> str:
    """Render a weight as comma-separated rationals ("a" or "a/2")."""
    parts = []
    for t in w.twice:
        parts.append(str(t // 2) if t % 2 == 0 else f"{t}/2")
    return ",".join(parts)


def dot4(a: Twice, b: Twice) -> int:
    """Four times the standard inner product of two twice-vectors."""
    return sum(x * y for x, y in zip(a, b))


def _add(a: Twice, b: Twice) -> Twice:
    return tuple(x + y for x, y in zip(a, b))


def _sub(a: Twice, b: Twice) -> Twice:
    return tuple(x - y for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# per-block helpers (operate on twice-coordinate lists)
# ---------------------------------------------------------------------------


def _sort_desc_parity(vals: list[int]) -> tuple[list[int], int]:
    """Sort descending, returning (sorted, parity of the sorting permutation)."""
    arr = list(vals)
    inv = 0
    for i in range(1, len(arr)):
        x = arr[i]
        j = i - 1
        while j >= 0 and arr[j] < x:
            arr[j + 1] = arr[j]
            j -= 1
            inv += 1
        arr[j + 1] = x
    return arr, inv & 1


def _block_dominant(fam: str, v: Sequence[int]) -> bool:
    m = len(v)
    if fam == "A":
        return all(v[i] >= v[i + 1] for i in range(m - 1))
    if fam in ("B", "C"):
        return all(v[i] >= v[i + 1] for i in range(m - 1)) and v[-1] >= 0
    # D: non-increasing with the last entry allowed negative
    if any(v[i] < v[i + 1] for i in range(m - 2)):
        return False
    return m < 2 or v[m - 2] >= abs(v[m - 1])


def _block_canon(fam: str, v: Sequence[int]) -> tuple[int, ...]:
    if fam == "A":
        return tuple(sorted(v, reverse=True))
    a = sorted((abs(x) for x in v), reverse=True)
    if fam == "D":
        neg = sum(1 for x in v if x < 0)
        # a zero coordinate absorbs an odd sign; otherwise flip the smallest
        if neg & 1 and a[-1] != 0:
            a[-1] = -a[-1]
    return tuple(a)


def _block_signed_canon(fam: str, v: Sequence[int]) -> tuple[tuple[int, ...] | None, int]:
    """Canonical chamber representative with the det of the Weyl element.

    Returns (None, 0) when v lies on a reflection wall.
    """
    if fam == "A":
        arr, par = _sort_desc_parity(list(v))
        for i in range(len(arr) - 1):
            if arr[i] == arr[i + 1]:
                return None, 0
        return tuple(arr), -1 if par else 1
    neg = 0
    a = []
    for x in v:
        if x < 0:
            neg += 1
            a.append(-x)
        else:
            a.append(x)
    arr, par = _sort_desc_parity(a)
    for i in range(len(arr) - 1):
        if arr[i] == arr[i + 1]:
            return None, 0
    if fam in ("B", "C"):
        if arr[-1] == 0:
            return None, 0
        sign = -1 if (par + neg) & 1 else 1
        return tuple(arr), sign
    # D: walls are |v_i| = |v_j| only; dets of allowed elements reduce to the
    # permutation parity (sign flips come in pairs)
    if neg & 1 and arr[-1] != 0:
        arr[-1] = -arr[-1]
    return tuple(arr), -1 if par else 1


def _multiset_perms(vals: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Distinct permutations of a small multiset."""
    n = len(vals)
    items = sorted(set(vals), reverse=True)
    counts = {v: 0 for v in items}
    for v in vals:
        counts[v] += 1
    out = [0] * n

    def rec(i: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield tuple(out)
            return
        for v in items:
            if counts[v]:
                counts[v] -= 1
                out[i] = v
                yield from rec(i + 1)
                counts[v] += 1

    return rec(0)


def _block_orbit(fam: str, v: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """All distinct vectors in the block Weyl orbit of v."""
    if fam == "A":
        yield from _multiset_perms(tuple(v))
        return
    zeros = sum(1 for x in v if x == 0)
    pos: dict[int, int] = {}
    for x in v:
        if x != 0:
            pos[abs(x)] = pos.get(abs(x), 0) + 1
    values = sorted(pos, reverse=True)
    # D-orbits without a zero coordinate preserve the sign parity of v
    parity = sum(1 for x in v if x < 0) & 1 if fam == "D" and zeros == 0 else None
    splits = [range(pos[val] + 1) for val in values]
    for ks in _cartesian(*splits):
        if parity is not None and sum(ks) & 1 != parity:
            continue
        signed = [0] * zeros
        for val, k in zip(values, ks):
            signed.extend([val] * (pos[val] - k))
            signed.extend([-val] * k)
        yield from _multiset_perms(signed)


def _block_orbit_size(fam: str, v: Sequence[int]) -> int:
    counts: dict[int, int] = {}
    for x in v:
        key = x if fam == "A" else abs(x)
        counts[key] = counts.get(key, 0) + 1
    perms = factorial(len(v))
    for c in counts.values():
        perms //= factorial(c)
    if fam == "A":
        return perms
    zeros = sum(1 for x in v if x == 0)
    nonzero = len(v) - zeros
    if nonzero == 0:
        return perms
    if fam == "D" and zeros == 0:
        return perms * (1 << (nonzero - 1))
    return perms * (1 << nonzero)


# ---------------------------------------------------------------------------
# RootSystem
# ---------------------------------------------------------------------------


class RootSystem:
    """A classical root system (or finite product of them) in epsilon-coordinates.

    ``rank`` is the number of coordinates; for an A-factor this is the Lie
    rank plus one (gl-style).  ``positive_roots`` and ``rho`` follow the
    standard conventions: B_n has roots e_i +- e_j and e_i, C_n has
    e_i +- e_j and 2 e_i, D_n has e_i +- e_j, A_n (gl-style) has e_i - e_j.
    """

    __slots__ = (
        "factors",
        "blocks",
        "rank",
        "rho",
        "rho2",
        "positive_roots",
        "_root_specs",
        "name",
        "family",
    )

    def __init__(self, factors: tuple[tuple[str, int], ...]):
        self.factors = factors
        blocks = []
        lo = 0
        for fam, r in factors:
            width = r + 1 if fam == "A" else r
            blocks.append((fam, lo, lo + width))
            lo += width
        self.blocks = tuple(blocks)
        self.rank = lo
        self.name = "x".join(f"{fam}{r}" for fam, r in factors)
        self.family = factors[0][0] if len(factors) == 1 else None

        roots: list[Twice] = []
        specs: list[tuple[int, int, int, int]] = []
        for fam, b_lo, b_hi in blocks:
            m = b_hi - b_lo
            for i in range(b_lo, b_hi):
                for j in range(i + 1, b_hi):
                    r = [0] * self.rank
                    r[i], r[j] = 2, -2
                    roots.append(tuple(r))
                    specs.append((i, 2, j, -2))
                    if fam in ("B", "C", "D"):
                        r = [0] * self.rank
                        r[i], r[j] = 2, 2
                        roots.append(tuple(r))
                        specs.append((i, 2, j, 2))
            if fam == "B":
                for i in range(b_lo, b_hi):
                    r = [0] * self.rank
                    r[i] = 2
                    roots.append(tuple(r))
                    specs.append((i, 2, i, 0))
            elif fam == "C":
                for i in range(b_lo, b_hi):
                    r = [0] * self.rank
                    r[i] = 4
                    roots.append(tuple(r))
                    specs.append((i, 4, i, 0))
        self._root_specs = tuple(specs)
        rho2 = [0] * self.rank
        for r in roots:
            for i, c in enumerate(r):
                rho2[i] += c
        self.rho2 = tuple(c // 2 for c in rho2)
        self.rho = Weight(self.rho2)
        self.positive_roots = tuple(Weight(r) for r in roots)

    # -- basic predicates ---------------------------------------------------

    def check_rank(self, w: Weight) -> None:
        if w.rank != self.rank:
            raise DimensionMismatchError(
                f"weight of length {w.rank} used with {self.name} (rank {self.rank})"
            )

    def is_weight_twice(self, v: Twice) -> bool:
        """Entries integral per block; half-integral allowed for B/D blocks."""
        for fam, lo, hi in self.blocks:
            parities = {t & 1 for t in v[lo:hi]}
            if fam in ("B", "D"):
                if len(parities) > 1:
                    return False
            else:
                if parities - {0}:
                    return False
        return True

    def is_dominant_twice(self, v: Twice) -> bool:
        return all(_block_dominant(fam, v[lo:hi]) for fam, lo, hi in self.blocks)

    def is_dominant(self, w: Weight) -> bool:
        self.check_rank(w)
        return self.is_dominant_twice(w.twice)

    def canon_twice(self, v: Twice) -> Twice:
        out: list[int] = []
        for fam, lo, hi in self.blocks:
            out.extend(_block_canon(fam, v[lo:hi]))
        return tuple(out)

    def signed_canon_twice(self, v: Twice) -> tuple[Twice | None, int]:
        out: list[int] = []
        sign = 1
        for fam, lo, hi in self.blocks:
            part, s = _block_signed_canon(fam, v[lo:hi])
            if s == 0:
                return None, 0
            sign *= s
            out.extend(part)
        return tuple(out), sign

    # -- orbits -------------------------------------------------------------

    def orbit_twice(self, v: Twice) -> Iterator[Twice]:
        """All distinct elements of the Weyl orbit of v."""
        if len(self.blocks) == 1:
            fam, lo, hi = self.blocks[0]
            yield from _block_orbit(fam, v[lo:hi])
            return
        parts = [list(_block_orbit(fam, v[lo:hi])) for fam, lo, hi in self.blocks]
        for combo in _cartesian(*parts):
            flat: list[int] = []
            for piece in combo:
                flat.extend(piece)
            yield tuple(flat)

    def orbit_size(self, v: Twice) -> int:
        size = 1
        for fam, lo, hi in self.blocks:
            size *= _block_orbit_size(fam, v[lo:hi])
        return size

    # -- dominance order ----------------------------------------------------

    def dominance_leq_twice(self, mu: Twice, hw: Twice) -> bool:
        """True iff hw - mu is a nonnegative integer combination of simple roots."""
        for fam, lo, hi in self.blocks:
            m = hi - lo
            d = [hw[i] - mu[i] for i in range(lo, hi)]
            if any(t & 1 for t in d):
                return False
            s = 0
            if fam == "A":
                for k in range(m - 1):
                    s += d[k]
                    if s < 0:
                        return False
                if s + d[m - 1] != 0:
                    return False
            elif fam == "B":
                for k in range(m):
                    s += d[k]
                    if s < 0:
                        return False
            elif fam == "C":
                for k in range(m):
                    s += d[k]
                    if s < 0:
                        return False
                if (s // 2) % 2:
                    return False
            else:  # D
                for k in range(m - 1):
                    s += d[k]
                    if k < m - 2 and s < 0:
                        return False
                last = d[m - 1]
                if s - last < 0 or s + last < 0:
                    return False
                if ((s + last) // 2) % 2:
                    return False
        return True

    # -- dominant weight enumeration ----------------------------------------

    def dominant_candidates_twice(self, hw: Twice) -> list[Twice]:
        """All dominant weights mu <= hw in the weight lattice coset of hw.

        These are exactly the dominant weights of the irreducible with
        highest weight hw.
        """
        per_block: list[list[tuple[int, ...]]] = []
        for fam, lo, hi in self.blocks:
            per_block.append(_block_candidates(fam, tuple(hw[lo:hi])))
        if len(per_block) == 1:
            return [tuple(p) for p in per_block[0]]
        out = []
        for combo in _cartesian(*per_block):
            flat: list[int] = []
            for piece in combo:
                flat.extend(piece)
            out.append(tuple(flat))
        return out

    def dominant_upto_twice(self, bound: int, spin: bool) -> list[Twice]:
        """Dominant weights with every first block coordinate <= bound.

        For A-blocks (gl coordinates, where entries may be negative) the
        enumeration additionally floors coordinates at -bound.  ``spin``
        admits the half-integral lattice on B/D blocks.  The result is
        sorted by (first coordinate, then lexicographic).
        """
        b2 = 2 * bound
        odd_top = b2 - 1  # largest odd twice-value below the bound
        per_block: list[list[tuple[int, ...]]] = []
        for fam, lo, hi in self.blocks:
            m = hi - lo
            opts: list[tuple[int, ...]] = []
            if fam == "A":
                opts.extend(_nonincreasing(m, -b2, b2, 2))
            elif fam in ("B", "C"):
                opts.extend(_nonincreasing(m, 0, b2, 2))
                if spin and fam == "B":
                    opts.extend(_nonincreasing(m, 1, odd_top, 2))
            else:  # D
                base = list(_nonincreasing(m, 0, b2, 2))
                if spin:
                    base.extend(_nonincreasing(m, 1, odd_top, 2))
                for t in base:
                    opts.append(t)
                    if t[-1] > 0 and (m < 2 or t[-2] >= t[-1]):
                        opts.append(t[:-1] + (-t[-1],))
            per_block.append(opts)
        if len(per_block) == 1:
            out = [tuple(p) for p in per_block[0]]
        else:
            out = []
            for combo in _cartesian(*per_block):
                flat: list[int] = []
                for piece in combo:
                    flat.extend(piece)
                out.append(tuple(flat))
        out.sort(key=lambda t: (t[0], t))
        return out

    def count_dominant_upto(self, bound: int, spin: bool) -> int:
        total = 1
        for fam, lo, hi in self.blocks:
            m = hi - lo
            b2 = 2 * bound
            if fam == "A":
                n_vals = 2 * bound + 1
                total *= _binom(n_vals + m - 1, m)
            elif fam in ("B", "C"):
                c = _binom(bound + m, m)
                if spin and fam == "B":
                    c += _binom(bound + m - 1, m)
                total *= c
            else:
                c = _binom(bound + m, m) * 2  # crude upper bound with signs
                if spin:
                    c += _binom(bound + m - 1, m) * 2
                total *= c
        return total

    def __eq__(self, other) -> bool:
        return isinstance(other, RootSystem) and self.factors == other.factors

    def __hash__(self) -> int:
        return hash(self.factors)

    def __repr__(self) -> str:
        return f"RootSystem({self.name})"


def _binom(n: int, k: int) -> int:
    from math import comb

    return comb(n, k) if n >= k >= 0 else 0


def _nonincreasing(length: int, lo2: int, hi2: int, step: int) -> Iterator[tuple[int, ...]]:
    """Non-increasing tuples of twice-values in [lo2, hi2] stepping by `step`."""
    out = [0] * length

    def rec(i: int, cap: int) -> Iterator[tuple[int, ...]]:
        if i == length:
            yield tuple(out)
            return
        v = cap
        while v >= lo2:
            out[i] = v
            yield from rec(i + 1, v)
            v -= step
        return

    yield from rec(0, hi2)


def _block_candidates(fam: str, hw: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Dominant mu <= hw within one block (twice-coordinates)."""
    m = len(hw)
    pref = [0] * (m + 1)
    for i, t in enumerate(hw):
        pref[i + 1] = pref[i] + t
    out: list[tuple[int, ...]] = []
    cur = [0] * m

    if fam == "A":
        hi, lo, total = hw[0], hw[-1], pref[m]

        def rec_a(i: int, prev: int, run: int) -> None:
            if i == m:
                if run == total:
                    out.append(tuple(cur))
                return
            rem = m - i - 1
            v = min(prev, hi)
            while v >= lo:
                nrun = run + v
                if nrun <= pref[i + 1] and nrun + rem * lo <= total <= nrun + rem * v:
                    cur[i] = v
                    rec_a(i + 1, v, nrun)
                v -= 2

        rec_a(0, hi, 0)
        return out

    parity = hw[0] & 1
    floor = parity  # 0 for integral, 1 for half-integral entries

    if fam in ("B", "C"):

        def rec_bc(i: int, prev: int, run: int) -> None:
            if i == m:
                if fam == "C" and ((pref[m] - run) // 2) % 2:
                    return
                out.append(tuple(cur))
                return
            v = min(prev, hw[0])
            while v >= floor:
                nrun = run + v
                if nrun <= pref[i + 1]:
                    cur[i] = v
                    rec_bc(i + 1, v, nrun)
                v -= 2

        rec_bc(0, hw[0], 0)
        return out

    # D: first m-1 coordinates non-increasing >= |last|
    def rec_d(i: int, prev: int, run: int) -> None:
        if i == m - 1:
            s_head = pref[m - 1] - run
            v = prev
            while v >= floor:
                for last in ((v, -v) if v else (0,)):
                    d_last = hw[m - 1] - last
                    if d_last & 1:
                        continue
                    if s_head - d_last < 0 or s_head + d_last < 0:
                        continue
                    if ((s_head + d_last) // 2) % 2:
                        continue
                    cur[m - 1] = last
                    out.append(tuple(cur))
                v -= 2
            return
        v = min(prev, hw[0])
        while v >= floor:
            nrun = run + v
            if i < m - 2:
                if nrun <= pref[i + 1]:
                    cur[i] = v
                    rec_d(i + 1, v, nrun)
            else:
                cur[i] = v
                rec_d(i + 1, v, nrun)
            v -= 2

    if m == 1:
        raise ConfigurationError("D_1 is not supported")
    rec_d(0, hw[0], 0)
    return out


# ---------------------------------------------------------------------------
# public constructors and operations
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _make_system(factors: tuple[tuple[str, int], ...]) -> RootSystem:
    return RootSystem(factors)


def build_root_system(family: str, rank: int) -> RootSystem:
    """Construct a classical root system.

    ``family`` is one of "A", "B", "C", "D".  For A the system is gl(rank+1)
    in rank+1 coordinates.  rank >= 1 always; rank >= 2 for D (D_1 rejected).
    """
    if family not in _FAMILIES:
        raise ConfigurationError(f"unsupported family {family!r} (expected A/B/C/D)")
    if not isinstance(rank, int) or rank < 1:
        raise ConfigurationError(f"unsupported rank {rank!r} for family {family}")
    if family == "D" and rank < 2:
        raise ConfigurationError("D_1 is degenerate and rejected; use rank >= 2")
    return _make_system(((family, rank),))


def product_system(parts: Sequence) -> RootSystem:
    """Product of root systems (or (family, rank) pairs, rank 0 allowed for A)."""
    factors: list[tuple[str, int]] = []
    for p in parts:
        if isinstance(p, RootSystem):
            factors.extend(p.factors)
            continue
        fam, r = p
        if fam not in _FAMILIES:
            raise ConfigurationError(f"unsupported family {fam!r}")
        if not isinstance(r, int) or r < 0 or (fam != "A" and r < 1) or (fam == "D" and r < 2):
            raise ConfigurationError(f"unsupported factor ({fam}, {r})")
        factors.append((fam, r))
    if not factors:
        raise ConfigurationError("empty product")
    return _make_system(tuple(factors))


def parse_system(name: str) -> RootSystem:
    """Parse names like "B4", "A2" or products "A1xA0"."""
    parts = []
    for token in name.split("x"):
        token = token.strip()
        if len(token) < 2 or token[0].upper() not in _FAMILIES or not token[1:].isdigit():
            raise ConfigurationError(f"cannot parse root-system name {name!r}")
        parts.append((token[0].upper(), int(token[1:])))
    return product_system(parts)


def dominant_representative(w: Weight, rs: RootSystem) -> Weight:
    """The unique dominant-chamber representative of the Weyl orbit of w."""
    rs.check_rank(w)
    return Weight(rs.canon_twice(w.twice))


def weyl_orbit(w: Weight, rs: RootSystem) -> list[Weight]:
    """The full Weyl orbit of w, as a list of distinct weights."""
    rs.check_rank(w)
    return [Weight(t) for t in rs.orbit_twice(w.twice)]


def _require_dominant_weight(hw: Weight, rs: RootSystem) -> None:
    rs.check_rank(hw)
    if not rs.is_weight_twice(hw.twice):
        raise DomainError(f"{hw} is not in the weight lattice of {rs.name}")
    if not rs.is_dominant_twice(hw.twice):
        raise DomainError(f"{hw} is not dominant for {rs.name}")


def weyl_dimension(hw: Weight, rs: RootSystem):
    """Dimension of the irreducible with highest weight hw (exact integer)."""
    _require_dominant_weight(hw, rs)
    shifted = _add(hw.twice, rs.rho2)
    dim = Fraction(1)
    for root in rs.positive_roots:
        dim *= Fraction(dot4(shifted, root.twice), dot4(rs.rho2, root.twice))
    if dim.denominator != 1:
        raise DomainError(f"Weyl dimension of {hw} over {rs.name} is not integral")
    return int(dim)


def casimir_eigenvalue(hw: Weight, rs: RootSystem) -> Fraction:
    """Casimir scalar <hw, hw + 2 rho> under the epsilon-coordinate form."""
    rs.check_rank(hw)
    if not rs.is_dominant_twice(hw.twice):
        raise DomainError(f"{hw} is not dominant for {rs.name}")
    return Fraction(dot4(hw.twice, hw.twice) + 2 * dot4(hw.twice, rs.rho2), 4)


@dataclass(frozen=True)
class InfCharClass:
    """A Weyl-orbit class of a rational vector, by its canonical representative."""

    representative: Weight
    system: RootSystem

    def __str__(self) -> str:
        return f"[{self.representative}] over {self.system.name}"


def infchar_class(vector: Weight, rs: RootSystem) -> InfCharClass:
    """Canonicalize an arbitrary vector into its Weyl-orbit class."""
    rs.check_rank(vector)
    return InfCharClass(Weight(rs.canon_twice(vector.twice)), rs)


def infinitesimal_character(hw: Weight, rs: RootSystem) -> InfCharClass:
    """The class of hw + rho modulo the Weyl group."""
    rs.check_rank(hw)
    if not rs.is_dominant_twice(hw.twice):
        raise DomainError(f"{hw} is not dominant for {rs.name}")
    return infchar_class(Weight(_add(hw.twice, rs.rho2)), rs)


def infchar_equal(a: InfCharClass, b: InfCharClass) -> bool:
    if a.system != b.system:
        raise DomainError(
            f"cannot compare infinitesimal characters over {a.system.name} and {b.system.name}"
        )
    return a.representative == b.representative
