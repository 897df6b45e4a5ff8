"""Reproducible random generators for the property suites.

Randomness comes from SplitMix64 (Steele/Lea/Flood), implemented with
pure integer arithmetic so identical seeds give bit-identical output on
every platform.  Constants: increment 0x9E3779B97F4A7C15, mixers
0xBF58476D1CE4E5B9 and 0x94D049BB133111EB, shifts 30/27/31.

Automorphism supply: a random algebra generically has no automorphisms,
so instead we draw a signed permutation P of exact order m and average a
random product over the cyclic group generated by P.  The averaged
product is P-equivariant by construction, which is exactly what the
twist-construction theorems need.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iter_product
from math import lcm

from .algebra import HomAlgebra, yau_twist
from .linear import BilinearMap, LinearMap, Vector, compose, eval_bilinear
from .report import PreconditionFailed

_MASK = (1 << 64) - 1


class InfeasibleOrder(ValueError):
    """No signed permutation of the requested exact order exists in this dimension."""


class SplitMix64:
    """64-bit SplitMix64 stream; integer-only, platform independent."""

    __slots__ = ("state",)

    def __init__(self, seed: int) -> None:
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Draw in [0, n); modulo bias is irrelevant here, determinism is not."""
        return self.next_u64() % n

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


_DENOMINATORS = (1, 2, 3)


def random_scalar(rng: SplitMix64, bound: int) -> Fraction:
    num = rng.below(2 * bound + 1) - bound if bound > 0 else 0
    den = _DENOMINATORS[rng.below(len(_DENOMINATORS))]
    return Fraction(num, den)


def random_vector(rng: SplitMix64, dim: int, bound: int = 9) -> Vector:
    return Vector(random_scalar(rng, bound) for _ in range(dim))


@dataclass(frozen=True)
class GenConfig:
    """Deterministic generator parameters; equal configs give identical output."""

    dim: int
    seed: int
    coeff_bound: int = 3
    twist_order: int = 1

    def __post_init__(self) -> None:
        if not 2 <= self.dim <= 6:
            raise ValueError("dim must be in [2, 6]")
        if self.coeff_bound < 0:
            raise ValueError("coeff_bound must be nonnegative")
        if self.twist_order < 1:
            raise ValueError("twist_order must be positive")


# Distinct substream tags so the tensor and the twisting map drawn from one
# seed do not share random draws.
_TENSOR_TAG = 0x7E72
_MAP_TAG = 0x3A90


def random_bilinear(cfg: GenConfig) -> BilinearMap:
    rng = SplitMix64(cfg.seed ^ _TENSOR_TAG)
    n = cfg.dim
    return BilinearMap([[[random_scalar(rng, cfg.coeff_bound) for _ in range(n)]
                         for _ in range(n)] for _ in range(n)])


def _partitions(n: int, maximum: int | None = None):
    """All partitions of n as descending tuples."""
    if n == 0:
        yield ()
        return
    maximum = n if maximum is None else min(maximum, n)
    for first in range(maximum, 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def _feasible_cycle_plans(dim: int, order: int) -> list:
    """Cycle plans (length, signed) whose signed orders have lcm == order.

    A length-L cycle with positive sign product has order L; with
    negative sign product it has order 2L.
    """
    plans = []
    for partition in _partitions(dim):
        for signs in iter_product((False, True), repeat=len(partition)):
            orders = [2 * length if neg else length
                      for length, neg in zip(partition, signs)]
            if lcm(*orders) == order:
                plans.append(tuple(zip(partition, signs)))
    return plans


def random_finite_order_map(cfg: GenConfig) -> LinearMap:
    """Signed permutation matrix of exact order cfg.twist_order.

    Cycle structure and signs are drawn from the feasible plans for
    (dim, order); raises InfeasibleOrder when there are none, e.g.
    dim 2 with order 3.
    """
    rng = SplitMix64(cfg.seed ^ _MAP_TAG)
    plans = _feasible_cycle_plans(cfg.dim, cfg.twist_order)
    if not plans:
        raise InfeasibleOrder(
            f"no signed permutation of order {cfg.twist_order} in dimension {cfg.dim}")
    plan = plans[rng.below(len(plans))]
    indices = list(range(cfg.dim))
    rng.shuffle(indices)
    zero = Fraction(0)
    cols = [[zero] * cfg.dim for _ in range(cfg.dim)]
    pos = 0
    for length, negative in plan:
        cycle = indices[pos:pos + length]
        pos += length
        signs = [1 if rng.below(2) == 0 else -1 for _ in range(length - 1)]
        parity = 1
        for s in signs:
            parity *= s
        signs.append(-parity if negative else parity)
        for t in range(length):
            src = cycle[t]
            dst = cycle[(t + 1) % length]
            cols[src][dst] = Fraction(signs[t])
    return LinearMap.from_columns([Vector(col) for col in cols])


def equivariant_average(mu: BilinearMap, p: LinearMap, m: int) -> BilinearMap:
    """Average mu over the cyclic group of p: the result commutes with p.

    mu'(x, y) = (1/m) sum_{k<m} p^{-k}( mu(p^k x, p^k y) ), so
    mu'(p x, p y) = p mu'(x, y) holds identically; p is an automorphism
    of the averaged product.  Requires p^m = id.
    """
    if p.power(m) != LinearMap.identity(p.dim):
        raise PreconditionFailed("map does not satisfy p^m = id")
    n = mu.dim
    powers = [LinearMap.identity(n)]
    for _ in range(m - 1):
        powers.append(compose(p, powers[-1]))
    inv_m = Fraction(1, m)
    tensor = []
    for i in range(n):
        plane = []
        for j in range(n):
            acc = Vector.zero(n)
            for k in range(m):
                pk, pk_inv = powers[k], powers[(m - k) % m]
                acc = acc + pk_inv.apply(eval_bilinear(mu, pk.column(i), pk.column(j)))
            plane.append(acc.scale(inv_m).coords)
        tensor.append(plane)
    return BilinearMap(tensor)


def random_multiplicative_hom_algebra(cfg: GenConfig) -> HomAlgebra:
    """Random product, averaged to make a random finite-order twist an
    automorphism, then Yau-twisted: the result is always multiplicative."""
    mu = random_bilinear(cfg)
    p = random_finite_order_map(cfg)
    averaged = equivariant_average(mu, p, cfg.twist_order)
    return yau_twist(averaged, p)
