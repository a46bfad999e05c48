"""Parameter bookkeeping for the noncompact side of the branching picture.

The noncompact facts themselves (which representations exist, their
infinitesimal characters, the discrete-series classification of the rank-one
spin group) enter as axioms; everything this module computes is the exact
Weyl-orbit matching that pins the branching law, plus the K-type sets that
feed it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, InvariantViolationError
from .infchar import nu_tau_so16
from .lattice import Weight, build_root_system, infchar_class, infchar_equal

_B4 = build_root_system("B", 4)
_D4 = build_root_system("D", 4)

# facts imported from the source analysis, not computed here
NONCOMPACT_AXIOMS = (
    "Disc(SO(8,8)/SO(8,7)) consists of the representations pi_lambda, lambda >= 1",
    "pi_lambda has infinitesimal character (lambda,6,5,4,3,2,1,0)",
    "discrete series of Spin(1,8) are classified by (b, epsilon) with "
    "b1 >= b2 >= b3 >= b4 >= 1",
)


@dataclass(frozen=True)
class XiSet:
    """Pairs (m, n) with m - n >= mu, m - n = mu mod 2, m <= bound."""

    mu: int
    bound: int
    pairs: tuple[tuple[int, int], ...]

    def __contains__(self, pair: tuple[int, int]) -> bool:
        m, n = pair
        return m >= 0 and n >= 0 and m - n >= self.mu and (m - n - self.mu) % 2 == 0

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self):
        return len(self.pairs)


def xi_set(mu: int, bound: int) -> XiSet:
    if mu < 0 or bound < 0:
        raise DomainError("mu and bound must be nonnegative")
    pairs = tuple(
        (m, n)
        for m in range(bound + 1)
        for n in range(m + 1)
        if m - n >= mu and (m - n - mu) % 2 == 0
    )
    return XiSet(mu=mu, bound=bound, pairs=pairs)


@dataclass(frozen=True)
class DiscreteSeriesParam:
    """A discrete-series label (b, epsilon) of the rank-one spin group.

    b1 >= b2 >= b3 >= b4 >= 1, entries all integral or all half-integral.
    """

    b: Weight
    epsilon: int

    def __post_init__(self):
        if self.epsilon not in (1, -1):
            raise DomainError("epsilon must be +1 or -1")
        t = self.b.twice
        if len(t) != 4:
            raise DomainError("b must have four coordinates")
        if len({x & 1 for x in t}) != 1:
            raise DomainError("b must be all integral or all half-integral")
        if not (t[0] >= t[1] >= t[2] >= t[3] >= 1):
            raise DomainError("b must satisfy b1 >= b2 >= b3 >= b4 >= 1")

    @property
    def blattner(self) -> Weight:
        t = self.b.twice
        return Weight((t[0], t[1], t[2], self.epsilon * t[3]))


def theta_kl(k: int, l: int) -> DiscreteSeriesParam:
    """The discrete series with b = (k,k,k,l)/2 and epsilon = +."""
    if not (k >= l >= 2 and (k - l) % 2 == 0):
        raise DomainError("need k >= l >= 2 with k = l mod 2")
    return DiscreteSeriesParam(b=Weight.halves(k, k, k, l), epsilon=1)


def hc_parameter(p: DiscreteSeriesParam) -> Weight:
    """(b1 + 5/2, b2 + 3/2, b3 + 1/2, b4 - 1/2)."""
    t = p.b.twice
    return Weight((t[0] + 5, t[1] + 3, t[2] + 1, t[3] - 1))


def ktype_set_Z(b: Weight, bound) -> list[Weight]:
    """All mu in Z^4 + b interlacing b, with mu1 <= bound.

    Interlacing: mu1 >= b1 >= mu2 >= b2 >= mu3 >= b3 >= mu4 >= b4.
    """
    t = b.twice
    if not (t[0] >= t[1] >= t[2] >= t[3]):
        raise DomainError("b must be non-increasing")
    bound2 = int(Fraction(bound) * 2)
    out = []
    for m1 in range(t[0], bound2 + 1, 2):
        for m2 in range(t[1], t[0] + 1, 2):
            for m3 in range(t[2], t[1] + 1, 2):
                for m4 in range(t[3], t[2] + 1, 2):
                    out.append(Weight((m1, m2, m3, m4)))
    return out


def contains_tau_k(p: DiscreteSeriesParam, k: int) -> bool:
    """Whether the (k,k,k,k)/2 K-type occurs: epsilon = + and b = (k,k,k,l)/2."""
    if p.epsilon != 1:
        return False
    t = p.b.twice
    if not (t[0] == t[1] == t[2] == k):
        return False
    l = t[3]
    return 2 <= l <= k and (k - l) % 2 == 0


def pi_lambda_ktypes(lam: int, bound: int) -> list[tuple[Weight, Weight]]:
    """K-types of the overgroup representation: harmonic pairs over Xi(lambda+1)."""
    if lam < 1:
        raise DomainError("lambda must be a positive integer")
    out = []
    for m, n in xi_set(lam + 1, bound):
        out.append(
            (
                Weight((2 * m, 0, 0, 0)),
                Weight((2 * n, 0, 0, 0)),
            )
        )
    return out


def solve_branching_so88(lam: int, k_bound: int) -> list[DiscreteSeriesParam]:
    """Derive the branching of pi_lambda by Weyl-orbit matching.

    For each admissible k the solver scans l in {2,...,k} with l = k mod 2
    and keeps exactly those whose Harish-Chandra parameter lies in the
    W(B4)-orbit of (lambda, k+5, k+3, k+1)/2; the matching equation must
    pin a unique l for every k, else the run signals an arithmetic bug.
    """
    if lam < 1:
        raise DomainError("lambda must be a positive integer")
    out = []
    for k in range(lam + 1, k_bound + 1):
        if (k - (lam + 1)) % 2:
            continue
        target = nu_tau_so16(lam, k)
        sols = []
        for l in range(2, k + 1):
            if (k - l) % 2:
                continue
            cand = theta_kl(k, l)
            if infchar_equal(infchar_class(hc_parameter(cand), _B4), target):
                sols.append(cand)
        if len(sols) != 1:
            raise InvariantViolationError(
                f"orbit matching found {len(sols)} solutions for k={k}, lambda={lam}"
            )
        out.append(sols[0])
    return out
