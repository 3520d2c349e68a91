"""Closed-form values for infinite families and ordinal class membership.

Nothing here builds an infinite graph.  The S family, the spider ``T_omega``
with one leg of every finite length, and the Polat-type graphs are described
by their capture-time ordinal (``eta``), CR-ordinal (``rho``) and, where
known, a text description of the optimal cop starts.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple, Union

from .ordinal import (
    OMEGA,
    ONE,
    Ordinal,
    OrdinalLike,
    add,
    as_ordinal,
    is_limit,
    split,
)

__all__ = [
    "SFamily",
    "TOmega",
    "PolatGeneralized",
    "FamilySpec",
    "FamilyReport",
    "eta_of_S",
    "rho_of_S",
    "tomega_report",
    "eta_tomega_vertex",
    "rho_polat_generalized",
    "in_lambda_T",
    "in_upsilon",
    "tree_rho_from_eta",
    "family_report",
    "S_GRAPH_INDEX_LIMIT",
]

# largest finite index for which generate("s:n") is considered reasonable
S_GRAPH_INDEX_LIMIT = 12


@dataclass(frozen=True)
class SFamily:
    index: Ordinal

    def __post_init__(self):
        object.__setattr__(self, "index", as_ordinal(self.index))
        if self.index < 1:
            raise ValueError("S family index must be >= 1")


@dataclass(frozen=True)
class TOmega:
    pass


@dataclass(frozen=True)
class PolatGeneralized:
    i: int
    j: int

    def __post_init__(self):
        if self.i < 1 or self.j < 1:
            raise ValueError("generalized Polat parameters must be >= 1")


FamilySpec = Union[SFamily, TOmega, PolatGeneralized]


@dataclass(frozen=True)
class FamilyReport:
    """``eta`` is ``None`` when no closed form is known for the family member."""

    eta: Optional[Ordinal]
    rho: Ordinal
    theta_description: str

    def __post_init__(self):
        assert self.eta is None or self.eta <= self.rho


def _require_positive(alpha: Ordinal):
    if alpha.is_zero:
        raise ValueError("S family index must be >= 1")


def eta_of_S(alpha: OrdinalLike) -> Ordinal:
    """Capture-time ordinal of S_alpha: the predecessor for successors, alpha itself for limits."""
    alpha = as_ordinal(alpha)
    _require_positive(alpha)
    if is_limit(alpha):
        return alpha
    limit_part, finite_part = split(alpha)
    return add(limit_part, finite_part - 1)


def rho_of_S(alpha: OrdinalLike) -> Ordinal:
    alpha = as_ordinal(alpha)
    _require_positive(alpha)
    if alpha.is_finite:
        n = int(alpha) - 1
        return Ordinal.from_int(max(2 * n - 1, 0))
    return add(eta_of_S(alpha), OMEGA)


def tomega_report() -> FamilyReport:
    return FamilyReport(
        eta=OMEGA,
        rho=add(OMEGA, OMEGA),
        theta_description="r and all depth-1 vertices x_{i,1}",
    )


def eta_tomega_vertex(vertex: Union[str, Tuple[int, int]]) -> Ordinal:
    """Capture-time ordinal of a vertex of ``T_omega``.

    ``vertex`` is ``"root"`` (or ``"r"``) or a pair ``(i, j)`` naming the
    vertex at depth ``j`` on the leg of length ``i``.
    """
    if vertex in ("root", "r"):
        return OMEGA
    i, j = vertex
    if not 0 < j <= i:
        raise ValueError(f"need 0 < j <= i, got i={i}, j={j}")
    return add(OMEGA, j - 1)


def rho_polat_generalized(i: int, j: int) -> Ordinal:
    """``w + i`` for a single graph (``j == 1``), else ``w*j + (i + j)``."""
    if i < 1 or j < 1:
        raise ValueError("i and j must be >= 1")
    if j == 1:
        return add(OMEGA, i)
    return add(Ordinal.omega_power(ONE, j), i + j)


def _is_tree_limit_sum(a: Ordinal) -> bool:
    # lambda + w with lambda a nonzero limit: ends in a w^1 term, and is not w itself
    return bool(a.terms) and a.terms[-1][0] == ONE and a != OMEGA


def in_lambda_T(a: OrdinalLike) -> bool:
    """Membership in the class of CR-ordinals of cop-win trees."""
    a = as_ordinal(a)
    return a.is_finite or _is_tree_limit_sum(a)


def in_upsilon(a: OrdinalLike) -> bool:
    """Membership in {w*i + (i+j)} together with the limit sums lambda + w."""
    a = as_ordinal(a)
    if a.is_finite or _is_tree_limit_sum(a):
        return True
    if a.leading_exponent > ONE:
        return False
    limit_part, k = split(a)
    i = limit_part.terms[0][1] if limit_part.terms else 0
    return k >= i


def tree_rho_from_eta(
    eta: OrdinalLike, finite_radius: bool, diameter_if_finite: Optional[int] = None
) -> Ordinal:
    eta = as_ordinal(eta)
    if finite_radius:
        if not eta.is_finite or diameter_if_finite is None:
            raise ValueError("finite radius needs a finite eta and the diameter")
        return Ordinal.from_int(diameter_if_finite)
    if eta.is_finite:
        raise ValueError("infinite radius implies an infinite eta")
    return add(eta, OMEGA)


def family_report(spec: FamilySpec) -> FamilyReport:
    if isinstance(spec, TOmega):
        return tomega_report()
    if isinstance(spec, SFamily):
        if spec.index == 1:
            theta = "the single vertex r_1"
        else:
            theta = "contains the root r_alpha"
        return FamilyReport(eta_of_S(spec.index), rho_of_S(spec.index), theta)
    if isinstance(spec, PolatGeneralized):
        rho = rho_polat_generalized(spec.i, spec.j)
        if (spec.i, spec.j) == (1, 1):
            return FamilyReport(OMEGA, rho, "X and z")
        return FamilyReport(None, rho, "not determined")
    raise TypeError(f"unknown family spec {spec!r}")
