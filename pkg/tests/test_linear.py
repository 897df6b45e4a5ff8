from fractions import Fraction

import pytest

from homakivis import (
    BilinearMap,
    DimensionMismatch,
    LinearMap,
    NotInvertible,
    SplitMix64,
    TrilinearMap,
    Vector,
    build_myung5,
    build_sl2,
    compose,
    eval_bilinear,
    eval_trilinear,
    hom_associator_tensor,
    invert,
    nullspace,
    random_scalar,
    random_vector,
)


def test_scalar_arithmetic_is_exact_and_reduced():
    a = Fraction(2, 4)
    assert (a.numerator, a.denominator) == (1, 2)
    assert a + (-a) == 0
    assert a * (1 / a) == 1
    assert Fraction(1, 3) + Fraction(1, 6) == Fraction(1, 2)


def test_vector_basics():
    v = Vector([1, Fraction(1, 2), "2/3"])
    assert v.dim == 3
    assert v + v == Vector([2, 1, Fraction(4, 3)])
    assert (v - v).is_zero()
    assert -v == v.scale(-1)
    assert 2 * v == Vector([2, 1, Fraction(4, 3)])
    assert Vector.basis(3, 1) == Vector([0, 1, 0])
    with pytest.raises(DimensionMismatch):
        v + Vector([1, 2])


def test_linear_map_apply_and_columns():
    m = LinearMap([[1, 2], [3, 4]])
    assert m.column(0) == Vector([1, 3])
    assert m.apply(Vector([1, 0])) == Vector([1, 3])
    assert m.apply(Vector([1, 1])) == Vector([3, 7])
    assert LinearMap.from_columns([Vector([1, 3]), Vector([2, 4])]) == m


def test_compose_identity_law():
    a = LinearMap([[1, 2], [0, 1]])
    ident = LinearMap.identity(2)
    assert compose(ident, a) == a
    assert compose(a, ident) == a


def test_sl2_twist_is_an_involution():
    # the twist swaps u and w and negates v, so its square fixes the basis
    alpha = build_sl2().twist
    assert compose(alpha, alpha).is_identity()
    assert alpha.apply(Vector([0, -1, 0])) == Vector([0, 1, 0])


def test_compose_agrees_with_apply_on_random_maps():
    rng = SplitMix64(11)
    for _ in range(25):
        dim = 2 + rng.below(4)
        a = LinearMap([[random_scalar(rng, 5) for _ in range(dim)] for _ in range(dim)])
        b = LinearMap([[random_scalar(rng, 5) for _ in range(dim)] for _ in range(dim)])
        x = random_vector(rng, dim)
        assert compose(a, b).apply(x) == a.apply(b.apply(x))


def test_invert_identity_and_involution():
    assert invert(LinearMap.identity(4)).is_identity()
    alpha = build_sl2().twist
    assert invert(alpha) == alpha


def test_invert_rejects_singular_twist():
    # the dim-5 example twist kills a basis vector, so it has no inverse
    with pytest.raises(NotInvertible):
        invert(build_myung5().twist)


def test_invert_roundtrip_on_random_invertible_maps():
    rng = SplitMix64(23)
    found = 0
    while found < 15:
        dim = 2 + rng.below(4)
        a = LinearMap([[random_scalar(rng, 4) for _ in range(dim)] for _ in range(dim)])
        try:
            inv = invert(a)
        except NotInvertible:
            continue
        found += 1
        assert compose(a, inv).is_identity()
        assert compose(inv, a).is_identity()


def _expand_bilinear(b, x, y):
    # oracle: explicit double summation over basis expansions
    total = Vector.zero(b.dim)
    for i in range(b.dim):
        for j in range(b.dim):
            coeff = x.coords[i] * y.coords[j]
            total = total + Vector(b.c[i][j]).scale(coeff)
    return total


def _expand_trilinear(t, x, y, z):
    total = Vector.zero(t.dim)
    for i in range(t.dim):
        for j in range(t.dim):
            for k in range(t.dim):
                coeff = x.coords[i] * y.coords[j] * z.coords[k]
                total = total + Vector(t.d[i][j][k]).scale(coeff)
    return total


def test_eval_bilinear_on_the_dim5_table():
    m5 = build_myung5()
    e1, e2 = Vector.basis(5, 0), Vector.basis(5, 1)
    assert eval_bilinear(m5.mul, e1, e2) == Vector([0, 0, 0, Fraction(1, 2), 1])


def test_eval_bilinear_zero_and_scaling():
    m5 = build_myung5()
    zero = Vector.zero(5)
    rng = SplitMix64(5)
    y = random_vector(rng, 5)
    assert eval_bilinear(m5.mul, zero, y).is_zero()
    x = random_vector(rng, 5)
    lam = Fraction(7, 3)
    assert eval_bilinear(m5.mul, x.scale(lam), y) == eval_bilinear(m5.mul, x, y).scale(lam)


def test_eval_trilinear_zero_tensor():
    t = TrilinearMap.zero(3)
    rng = SplitMix64(9)
    args = [random_vector(rng, 3) for _ in range(3)]
    assert eval_trilinear(t, *args).is_zero()


def test_hom_associator_tensor_entry_of_dim5_example():
    # as(e3, e4, e4) = (e3 e4) a(e4) - a(e3) (e4 e4) = -1/4 e3
    t = hom_associator_tensor(build_myung5())
    expected = Vector([0, 0, Fraction(-1, 4), 0, 0])
    assert t.on_basis(2, 3, 3) == expected
    e3, e4 = Vector.basis(5, 2), Vector.basis(5, 3)
    assert eval_trilinear(t, e3, e4, e4) == expected


def test_eval_agrees_with_expansion_oracle_on_200_random_instances():
    rng = SplitMix64(2024)
    for trial in range(200):
        dim = 2 + trial % 5  # dims 2..6
        b = BilinearMap([[[random_scalar(rng, 3) for _ in range(dim)]
                          for _ in range(dim)] for _ in range(dim)])
        t = TrilinearMap([[[[random_scalar(rng, 2) for _ in range(dim)]
                            for _ in range(dim)] for _ in range(dim)]
                          for _ in range(dim)])
        x, y, z = (random_vector(rng, dim) for _ in range(3))
        assert eval_bilinear(b, x, y) == _expand_bilinear(b, x, y)
        assert eval_trilinear(t, x, y, z) == _expand_trilinear(t, x, y, z)


def test_trilinearity_in_each_slot():
    rng = SplitMix64(77)
    t = TrilinearMap([[[[random_scalar(rng, 3) for _ in range(3)]
                        for _ in range(3)] for _ in range(3)] for _ in range(3)])
    x, x2, y, z = (random_vector(rng, 3) for _ in range(4))
    lam = Fraction(-5, 2)
    left = eval_trilinear(t, x + x2.scale(lam), y, z)
    right = eval_trilinear(t, x, y, z) + eval_trilinear(t, x2, y, z).scale(lam)
    assert left == right
    assert eval_trilinear(t, x, y + y, z) == eval_trilinear(t, x, y, z).scale(2)
    assert eval_trilinear(t, x, y, z.scale(lam)) == eval_trilinear(t, x, y, z).scale(lam)


def test_nullspace_simple_cases():
    # x + y = 0 over dim 2: one-dimensional kernel
    basis = nullspace([[Fraction(1), Fraction(1)]], 2)
    assert len(basis) == 1
    v = basis[0]
    assert v.coords[0] + v.coords[1] == 0
    assert nullspace([[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]], 2) == []
    full = nullspace([[Fraction(0), Fraction(0)]], 2)
    assert len(full) == 2


def test_nullspace_matches_sympy_on_random_matrices():
    sympy = pytest.importorskip("sympy")
    rng = SplitMix64(404)
    for _ in range(20):
        nrows, ncols = 2 + rng.below(4), 2 + rng.below(4)
        rows = [[random_scalar(rng, 2) for _ in range(ncols)] for _ in range(nrows)]
        ours = nullspace(rows, ncols)
        theirs = sympy.Matrix([[sympy.Rational(x) for x in row] for row in rows]).nullspace()
        assert len(ours) == len(theirs)
        for v in ours:
            image = [sum(row[c] * v.coords[c] for c in range(ncols)) for row in rows]
            assert all(x == 0 for x in image)


def test_bilinear_skew_detection():
    sl2 = build_sl2()
    assert sl2.mul.is_skew()
    assert not build_myung5().mul.is_skew()
