"""Binary Hom-algebras: a bilinear product plus a linear twisting map.

No identity is assumed at construction; everything (associativity,
Hom-associativity, multiplicativity, flexibility, alternativity) is a
computed verdict.  Since every checked identity is multilinear, an
exhaustive sweep over basis tuples decides it for all vectors.
"""

from __future__ import annotations

from typing import Optional, Sequence, Tuple

from .linear import (
    BilinearMap,
    LinearMap,
    TrilinearMap,
    Vector,
    _check_dims,
    compose,
    eval_bilinear,
    invert,
    nullspace,
    solve_unique,
)
from .report import CheckReport, Witness, all_hold, sweep


class NotMorphism(ValueError):
    """The map fails a required (endo)morphism check; carries the witness."""

    def __init__(self, message: str, report: Optional[CheckReport] = None) -> None:
        super().__init__(message)
        self.report = report


class NoUnit(ValueError):
    """The designated element is not a two-sided unit."""


class NotInvertibleElement(ValueError):
    """No unique two-sided inverse exists for the element."""


class NotInNucleus(ValueError):
    """The element (or its inverse) fails the nucleus membership conditions."""


def default_names(dim: int) -> Tuple[str, ...]:
    return tuple(f"e{i + 1}" for i in range(dim))


class HomAlgebra:
    """Triple (A, mul, twist) on a finite basis; twist defaults to identity."""

    __slots__ = ("mul", "twist", "basis_names")

    def __init__(self, mul: BilinearMap, twist: Optional[LinearMap] = None,
                 basis_names: Optional[Sequence[str]] = None) -> None:
        if twist is None:
            twist = LinearMap.identity(mul.dim)
        _check_dims(mul.dim, twist.dim)
        self.mul = mul
        self.twist = twist
        names = tuple(basis_names) if basis_names is not None else default_names(mul.dim)
        if len(names) != mul.dim:
            raise ValueError("basis_names length must equal the dimension")
        self.basis_names = names

    @property
    def dim(self) -> int:
        return self.mul.dim

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, HomAlgebra) and self.mul == other.mul
                and self.twist == other.twist and self.basis_names == other.basis_names)

    def __repr__(self) -> str:
        return f"HomAlgebra(dim={self.dim}, basis={self.basis_names})"


def commutator(h: HomAlgebra, x: Vector, y: Vector) -> Vector:
    """mul(x, y) - mul(y, x); skew-symmetric by construction."""
    return eval_bilinear(h.mul, x, y) - eval_bilinear(h.mul, y, x)


def commutator_tensor(h: HomAlgebra) -> BilinearMap:
    n = h.dim
    c = h.mul.c
    return BilinearMap._raw(tuple(
        tuple(tuple(c[i][j][k] - c[j][i][k] for k in range(n)) for j in range(n))
        for i in range(n)))


def associator(mul: BilinearMap, x: Vector, y: Vector, z: Vector,
               twist: Optional[LinearMap] = None) -> Vector:
    """mul(mul(x, y), twist(z)) - mul(twist(x), mul(y, z)).

    With the default identity twist this is the classical associator;
    with a twist it is the Hom-associator of (A, mul, twist).
    """
    if twist is None:
        tz, tx = z, x
    else:
        tz, tx = twist.apply(z), twist.apply(x)
    return (eval_bilinear(mul, eval_bilinear(mul, x, y), tz)
            - eval_bilinear(mul, tx, eval_bilinear(mul, y, z)))


def hom_associator(h: HomAlgebra, x: Vector, y: Vector, z: Vector) -> Vector:
    return associator(h.mul, x, y, z, h.twist)


def _associator_on_basis(mul: BilinearMap, twist: Optional[LinearMap],
                         i: int, j: int, k: int) -> Vector:
    ei = Vector.basis(mul.dim, i)
    ek = Vector.basis(mul.dim, k)
    tz = ek if twist is None else twist.column(k)
    tx = ei if twist is None else twist.column(i)
    return (eval_bilinear(mul, mul.on_basis(i, j), tz)
            - eval_bilinear(mul, tx, mul.on_basis(j, k)))


def hom_associator_tensor(h: HomAlgebra) -> TrilinearMap:
    """All Hom-associator values on basis triples, packed as a rank-4 tensor."""
    return TrilinearMap.from_basis_values(
        h.dim, lambda i, j, k: _associator_on_basis(h.mul, h.twist, i, j, k))


def associator_tensor(mul: BilinearMap) -> TrilinearMap:
    """Classical (identity-twist) associator tensor of a bare product."""
    return TrilinearMap.from_basis_values(
        mul.dim, lambda i, j, k: _associator_on_basis(mul, None, i, j, k))


def is_hom_associative(h: HomAlgebra) -> CheckReport:
    zero = Vector.zero(h.dim)
    return sweep("hom_associative", h.dim, 3,
                 lambda i, j, k: (_associator_on_basis(h.mul, h.twist, i, j, k), zero))


def is_associative(h: HomAlgebra) -> CheckReport:
    """Classical associativity of the product; the twist is ignored."""
    zero = Vector.zero(h.dim)
    return sweep("associative", h.dim, 3,
                 lambda i, j, k: (_associator_on_basis(h.mul, None, i, j, k), zero))


def endomorphism_report(mul: BilinearMap, a: LinearMap,
                        prop: str = "multiplicative") -> CheckReport:
    """Does a(mul(e_i, e_j)) equal mul(a(e_i), a(e_j)) on all basis pairs?"""
    _check_dims(mul.dim, a.dim)
    return sweep(prop, mul.dim, 2, lambda i, j: (
        a.apply(mul.on_basis(i, j)),
        eval_bilinear(mul, a.column(i), a.column(j))))


def is_multiplicative(h: HomAlgebra) -> CheckReport:
    return endomorphism_report(h.mul, h.twist)


# Ternary-tensor shape predicates, shared with the Hom-Akivis layer.  The
# flexible and alternative laws are quadratic as stated ("t(x,y,x) = 0",
# "t vanishes on equal arguments") but over a characteristic-0 field they
# are equivalent to the linearized sign identities checked here, which are
# multilinear and therefore decided by basis sweeps.

def flexible_report(t: TrilinearMap, prop: str = "hom_flexible") -> CheckReport:
    rep = sweep(prop, t.dim, 3,
                lambda i, j, k: (t.on_basis(i, j, k), -t.on_basis(k, j, i)))
    if not rep.holds:
        return rep
    # diagonal cross-check of the quadratic form t(x, y, x) = 0
    zero = Vector.zero(t.dim)
    for i in range(t.dim):
        for j in range(t.dim):
            val = t.on_basis(i, j, i)
            if val != zero:
                return CheckReport(prop, False, Witness((i, j, i), val, zero))
    return rep


def left_alternative_report(t: TrilinearMap, prop: str = "left_hom_alternative") -> CheckReport:
    return sweep(prop, t.dim, 3,
                 lambda i, j, k: (t.on_basis(i, j, k), -t.on_basis(j, i, k)))


def right_alternative_report(t: TrilinearMap, prop: str = "right_hom_alternative") -> CheckReport:
    return sweep(prop, t.dim, 3,
                 lambda i, j, k: (t.on_basis(i, j, k), -t.on_basis(i, k, j)))


_SIGNED_PERMS = (
    ((0, 1, 2), 1), ((1, 0, 2), -1), ((0, 2, 1), -1),
    ((1, 2, 0), 1), ((2, 0, 1), 1), ((2, 1, 0), -1),
)


def alternative_report(t: TrilinearMap, prop: str = "hom_alternative") -> CheckReport:
    """Full alternation: t at every permuted triple equals sign * t."""
    def sides(i: int, j: int, k: int):
        idx = (i, j, k)
        base = t.on_basis(i, j, k)
        for perm, sign in _SIGNED_PERMS[1:]:
            permuted = t.on_basis(*(idx[p] for p in perm))
            expected = base if sign == 1 else -base
            if permuted != expected:
                return permuted, expected
        return base, base

    return sweep(prop, t.dim, 3, sides)


def is_hom_flexible(h: HomAlgebra) -> CheckReport:
    return flexible_report(hom_associator_tensor(h))


def is_hom_alternative(h: HomAlgebra) -> CheckReport:
    return alternative_report(hom_associator_tensor(h))


def yau_twist(mul: BilinearMap, alpha: LinearMap,
              basis_names: Optional[Sequence[str]] = None) -> HomAlgebra:
    """Twist a product along an endomorphism: (A, mul) -> (A, alpha . mul, alpha).

    The endomorphism property is checked and the result is then
    guaranteed multiplicative.  Only when alpha is also invertible does
    non-associativity of mul force non-Hom-associativity of the result.
    """
    rep = endomorphism_report(mul, alpha, prop="endomorphism")
    if not rep.holds:
        raise NotMorphism("twisting map is not an endomorphism of the product", rep)
    return HomAlgebra(mul.postcompose(alpha), alpha, basis_names)


def untwist(h: HomAlgebra) -> BilinearMap:
    """Recover the product whose Yau twist along h.twist is h.mul.

    Requires an invertible twist; returns twist^-1 . mul, so that
    ``yau_twist(untwist(h), h.twist).mul == h.mul`` exactly.
    """
    return h.mul.postcompose(invert(h.twist))


def check_hom_algebra_morphism(f: LinearMap, h: HomAlgebra, g: HomAlgebra) -> CheckReport:
    """f preserves the products and intertwines the twists (f . a_h = a_g . f)."""
    _check_dims(f.dim, h.dim, g.dim)
    rep = sweep("hom_algebra_morphism", h.dim, 2, lambda i, j: (
        f.apply(h.mul.on_basis(i, j)),
        eval_bilinear(g.mul, f.column(i), f.column(j))))
    if not rep.holds:
        return rep
    return sweep("hom_algebra_morphism", h.dim, 1, lambda j: (
        f.apply(h.twist.column(j)),
        g.twist.apply(f.column(j))))


def _nucleus_rows(mul: BilinearMap, slot: int) -> list:
    """Linear conditions on u from associators with u in the given slot."""
    n = mul.dim
    rows = []
    for j in range(n):
        for k in range(n):
            cols = []
            for m in range(n):
                if slot == 0:
                    cols.append(_associator_on_basis(mul, None, m, j, k))
                elif slot == 1:
                    cols.append(_associator_on_basis(mul, None, j, m, k))
                else:
                    cols.append(_associator_on_basis(mul, None, j, k, m))
            for comp in range(n):
                rows.append([cols[m].coords[comp] for m in range(n)])
    return rows


def nucleus_basis(mul: BilinearMap) -> list[Vector]:
    """Basis of the nucleus: elements that associate with all pairs in all slots.

    Computed as the exact null space of the stacked linear system over
    basis pairs; deterministic basis from the reduced echelon form.
    """
    rows = []
    for slot in (0, 1, 2):
        rows.extend(_nucleus_rows(mul, slot))
    return nullspace(rows, mul.dim)


def _in_nucleus(mul: BilinearMap, u: Vector) -> bool:
    n = mul.dim
    zero = Vector.zero(n)
    for j in range(n):
        ej = Vector.basis(n, j)
        for k in range(n):
            ek = Vector.basis(n, k)
            if associator(mul, u, ej, ek) != zero:
                return False
            if associator(mul, ej, u, ek) != zero:
                return False
            if associator(mul, ej, ek, u) != zero:
                return False
    return True


def _left_mul_map(mul: BilinearMap, u: Vector) -> LinearMap:
    return LinearMap.from_columns(
        [eval_bilinear(mul, u, Vector.basis(mul.dim, j)) for j in range(mul.dim)])


def _right_mul_map(mul: BilinearMap, u: Vector) -> LinearMap:
    return LinearMap.from_columns(
        [eval_bilinear(mul, Vector.basis(mul.dim, j), u) for j in range(mul.dim)])


def inner_twist(mul: BilinearMap, one: Vector, u: Vector,
                basis_names: Optional[Sequence[str]] = None) -> HomAlgebra:
    """Conjugation twist x -> (u x) u^-1 for a nuclear invertible u.

    Requires: ``one`` is a two-sided unit, u has a unique two-sided
    inverse, and both u and u^-1 lie in the nucleus.  The resulting
    Hom-algebra multiplies by (x, y) -> (u (x y)) u^-1 and is
    multiplicative.
    """
    n = _check_dims(mul.dim, one.dim, u.dim)
    for i in range(n):
        ei = Vector.basis(n, i)
        if eval_bilinear(mul, one, ei) != ei or eval_bilinear(mul, ei, one) != ei:
            raise NoUnit(f"designated element is not a two-sided unit (fails at e_{i})")
    try:
        left_inv = solve_unique(_left_mul_map(mul, u), one)
        right_inv = solve_unique(_right_mul_map(mul, u), one)
    except Exception as exc:
        raise NotInvertibleElement("element has no unique inverse") from exc
    if left_inv != right_inv:
        raise NotInvertibleElement("left and right inverses differ")
    u_inv = left_inv
    if not _in_nucleus(mul, u):
        raise NotInNucleus("element is not in the nucleus")
    if not _in_nucleus(mul, u_inv):
        raise NotInNucleus("inverse is not in the nucleus")

    def conjugate(x: Vector) -> Vector:
        return eval_bilinear(mul, eval_bilinear(mul, u, x), u_inv)

    twist = LinearMap.from_columns([conjugate(Vector.basis(n, j)) for j in range(n)])
    twisted = BilinearMap._raw(tuple(
        tuple(conjugate(mul.on_basis(i, j)).coords for j in range(n))
        for i in range(n)))
    return HomAlgebra(twisted, twist, basis_names)
