"""Parameter arithmetic for the srg(n, k, 1, 2) family."""
import logging
import math
from dataclasses import dataclass

import sympy

from .graph_utils import Graph, SrgParams, is_srg

logger = logging.getLogger(__name__)

LAMBDA = 1
MU = 2


class FamilyError(ValueError):
    """Valency that cannot belong to an srg(n, k, 1, 2)."""


class HostNotInFamilyError(ValueError):
    """Host graph is not an srg(n, k, 1, 2)."""


@dataclass(frozen=True)
class FamilyParams:
    k: int
    n: int

    @property
    def edges(self) -> int:
        return self.n * self.k // 2


@dataclass(frozen=True)
class Spectrum:
    """Restricted eigenvalues r > s of the adjacency matrix and their multiplicities f, g."""
    k: int
    n: int
    r: sympy.Expr
    s: sympy.Expr
    f: sympy.Expr
    g: sympy.Expr

    @property
    def integral(self) -> bool:
        return all(bool(m.is_integer) and bool(m >= 0) for m in (self.f, self.g))


def order_from_valency(k: int) -> int:
    """n = 1 + k + k(k-2)/2. Each edge lies in exactly one triangle, so k is even."""
    if not isinstance(k, int) or isinstance(k, bool):
        raise FamilyError(f"Valency must be an integer, got {k!r}")
    if k < 2:
        raise FamilyError(f"Valency {k} is too small (need k >= 2)")
    if k % 2:
        raise FamilyError(f"Valency {k} is odd; neighborhoods are perfect matchings so k must be even")
    return 1 + k + k * (k - 2) // 2


def family_params(k: int) -> FamilyParams:
    return FamilyParams(k, order_from_valency(k))


def eigenvalue_multiplicities(k: int) -> Spectrum:
    n = order_from_valency(k)
    root = sympy.sqrt(4 * k - 7)
    r = (-1 + root) / 2
    s = (-1 - root) / 2
    skew = sympy.Integer(2 * k - (n - 1)) / root
    f = (n - 1 - skew) / 2
    g = (n - 1 + skew) / 2
    return Spectrum(k, n, r, s, f, g)


def admissible_valencies(limit: int) -> list:
    """Even k in 4..limit with 4k-7 a perfect square and integral eigenvalue multiplicities."""
    found = []
    for k in range(4, limit + 1, 2):
        d = 4 * k - 7
        if math.isqrt(d) ** 2 != d:
            continue
        if eigenvalue_multiplicities(k).integral:
            found.append(k)
        else:
            logger.debug(f"k={k}: 4k-7={d} is a square but multiplicities are fractional")
    return found


def check_family(g: Graph) -> SrgParams:
    """Return the host parameters, raising HostNotInFamilyError unless lambda=1 and mu=2."""
    params = is_srg(g)
    if params is None:
        raise HostNotInFamilyError(f"Host on {g.order} vertices is not strongly regular")
    if (params.lam, params.mu) != (LAMBDA, MU):
        raise HostNotInFamilyError(
            f"Host is srg{params.as_tuple()}, expected lambda={LAMBDA}, mu={MU}"
        )
    return params
