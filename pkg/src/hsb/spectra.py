"""Discrete spectra of compact homogeneous pairs.

For compact G/H the discrete series are exactly the irreducibles with a
nonzero H-invariant vector (Frobenius reciprocity), so the spectrum is a
purely combinatorial enumeration: dominant weights with first coordinate up
to a bound, each tested for invariants through the embedding.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .characters import EmbeddingSpec, invariant_multiplicity
from .errors import DomainError, ResourceLimitError
from .lattice import Weight

# candidate-grid ceiling for a single enumeration call
ENUMERATION_LIMIT = 300_000


@dataclass(frozen=True)
class DiscSpectrum:
    """Truncated discrete spectrum of a compact pair.

    Entries are (highest weight, invariant dimension), covering exactly the
    dominant weights with first coordinate <= bound (for gl-style factors the
    coordinates are also floored at -bound), in increasing
    (first coordinate, lexicographic) order.
    """

    embedding: EmbeddingSpec
    bound: int
    entries: tuple[tuple[Weight, int], ...]

    def weights(self) -> tuple[Weight, ...]:
        return tuple(w for w, _ in self.entries)

    def invariant_dim(self, w: Weight) -> int:
        for hw, d in self.entries:
            if hw == w:
                return d
        return 0

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)


@lru_cache(maxsize=256)
def _disc_series_cached(emb: EmbeddingSpec, bound: int) -> DiscSpectrum:
    src = emb.source
    if src.count_dominant_upto(bound, emb.source_spin) > ENUMERATION_LIMIT:
        largest = bound
        while largest > 0 and src.count_dominant_upto(largest, emb.source_spin) > ENUMERATION_LIMIT:
            largest -= 1
        raise ResourceLimitError(
            f"bound {bound} for {emb.name} is infeasible; largest feasible bound is {largest}",
            largest_completed_bound=largest,
        )
    entries = []
    for hw2 in src.dominant_upto_twice(bound, emb.source_spin):
        hw = Weight(hw2)
        d = invariant_multiplicity(hw, emb)
        if d >= 1:
            entries.append((hw, d))
    return DiscSpectrum(embedding=emb, bound=bound, entries=tuple(entries))


def disc_series(emb: EmbeddingSpec, bound: int) -> DiscSpectrum:
    """Complete truncated spectrum of the pair described by the embedding."""
    if bound < 0:
        raise DomainError("bound must be nonnegative")
    return _disc_series_cached(emb, bound)


def check_multiplicity_free(ds: DiscSpectrum) -> bool:
    """True iff every enumerated invariant dimension equals one."""
    return all(d == 1 for _, d in ds.entries)


def harmonic_dim(ambient_dim: int, degree: int) -> int:
    """Dimension of the degree-j spherical harmonics on R^N."""
    if ambient_dim < 2 or degree < 0:
        raise DomainError("harmonic_dim needs N >= 2 and degree >= 0")
    second = comb(ambient_dim + degree - 3, degree - 2) if degree >= 2 else 0
    return comb(ambient_dim + degree - 1, degree) - second
