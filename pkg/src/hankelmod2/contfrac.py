"""Continued fractions expanded into exact truncated power series.

S-fractions carry one linear coefficient per level,
1/(1 - c0 z/(1 - c1 z/(1 - ...))); J-fractions carry a linear and a
quadratic one, 1/(1 - s0 z - t0 z^2/(1 - s1 z - ...)).  Expansion is
bottom-up with the tail set to 1, which cannot disturb coefficients below
the guaranteed order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .closedform import T_int, favard_st
from .exactring import TruncatedSeries
from .seq import grs_r


class InsufficientDepthError(ValueError):
    pass


@dataclass(frozen=True)
class CFSpec:
    """A finite continued fraction: shape "s" or "j" plus its coefficients."""

    shape: str
    linear: tuple[Fraction, ...]  # c_n (s-shape) or s_n (j-shape)
    quadratic: tuple[Fraction, ...] = ()  # t_n, j-shape only

    def __post_init__(self):
        if self.shape not in ("s", "j"):
            raise ValueError(f"unknown shape {self.shape!r}")
        if self.depth < 1:
            raise ValueError("depth must be at least 1")
        if self.shape == "j" and len(self.quadratic) != len(self.linear):
            raise ValueError("j-shape needs matching s and t coefficient lists")
        if self.shape == "s" and self.quadratic:
            raise ValueError("s-shape takes no quadratic coefficients")

    @classmethod
    def s_fraction(cls, coefficients: Sequence[Fraction | int]) -> "CFSpec":
        return cls("s", tuple(Fraction(c) for c in coefficients))

    @classmethod
    def j_fraction(
        cls, s: Sequence[Fraction | int], t: Sequence[Fraction | int]
    ) -> "CFSpec":
        return cls("j", tuple(Fraction(c) for c in s), tuple(Fraction(c) for c in t))

    @property
    def depth(self) -> int:
        return len(self.linear)

    def required_depth(self, order: int) -> int:
        return order if self.shape == "s" else (order + 1) // 2


def cf_expand(spec: CFSpec, order: int) -> TruncatedSeries:
    """Expand the fraction to a series mod z**order."""
    need = spec.required_depth(order)
    if spec.depth < need:
        raise InsufficientDepthError(
            f"depth {spec.depth} cannot guarantee order {order} (need {need})"
        )
    one = TruncatedSeries.one(order)
    g = one
    if spec.shape == "s":
        for c in reversed(spec.linear[:need]):
            g = (one - g.scale(c).shift(1)).inverse()
        return g
    for s, t in reversed(list(zip(spec.linear[:need], spec.quadratic[:need]))):
        g = (one - TruncatedSeries([0, s], order) - g.scale(t).shift(2)).inverse()
    return g


def target_series(order: int, alternating: bool = False) -> TruncatedSeries:
    """sum_k (+-1)^k z^(2^k - 1) mod z**order."""
    if order < 1:
        raise ValueError("order must be positive")
    coeffs = [Fraction(0)] * order
    k = 0
    while (1 << k) - 1 < order:
        coeffs[(1 << k) - 1] = Fraction(-1 if alternating and k & 1 else 1)
        k += 1
    return TruncatedSeries(coeffs, order)


IDENTITIES = ("eq217", "eq228", "eq08")


def verify_identity(which: str, order: int) -> bool:
    """Coefficientwise check of one of the three fraction identities.

    eq217: S-fraction with c_n = T_n equals sum_k z^(2^k-1).
    eq228: J-fraction with the Favard (s_n, t_n) equals the same series.
    eq08:  S-fraction with c_n = -r(n) r(n+2) (the 1/(1 + ...) arrangement
           rewritten with negated coefficients) equals the alternating sum.
    """
    if order > 128:
        raise ValueError("identity checks are guarded to order <= 128")
    if which == "eq217":
        spec = CFSpec.s_fraction([T_int(k) for k in range(order)])
        return cf_expand(spec, order) == target_series(order)
    if which == "eq228":
        pairs = [favard_st(k) for k in range((order + 1) // 2)]
        spec = CFSpec.j_fraction([s for s, _ in pairs], [t for _, t in pairs])
        return cf_expand(spec, order) == target_series(order)
    if which == "eq08":
        spec = CFSpec.s_fraction([-grs_r(k) * grs_r(k + 2) for k in range(order)])
        return cf_expand(spec, order) == target_series(order, alternating=True)
    raise ValueError(f"unknown identity {which!r}")
