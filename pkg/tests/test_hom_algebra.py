from fractions import Fraction
from itertools import product

import pytest

from homakivis import (
    BilinearMap,
    HomAlgebra,
    LinearMap,
    NoUnit,
    NotInNucleus,
    NotInvertible,
    NotInvertibleElement,
    NotMorphism,
    SplitMix64,
    Vector,
    associator,
    build_mat2,
    build_myung5,
    build_myung5_twisted,
    build_octonions,
    build_param3,
    build_sl2,
    check_hom_algebra_morphism,
    commutator,
    commutator_tensor,
    eval_bilinear,
    hom_associator,
    hom_associator_tensor,
    inner_twist,
    is_associative,
    is_hom_alternative,
    is_hom_associative,
    is_hom_flexible,
    is_multiplicative,
    nucleus_basis,
    random_vector,
    untwist,
    yau_twist,
)

HALF = Fraction(1, 2)


def dim1_associative():
    return HomAlgebra(BilinearMap([[[Fraction(1)]]]))


def zero_algebra(dim=3):
    return HomAlgebra(BilinearMap.zero(dim))


# --- commutator ---

def test_commutator_of_dim5_pair():
    m5 = build_myung5()
    e1, e2 = Vector.basis(5, 0), Vector.basis(5, 1)
    assert commutator(m5, e1, e2) == Vector([0, 0, 0, 1, 0])


def test_commutator_is_alternating():
    m5 = build_myung5()
    rng = SplitMix64(3)
    for _ in range(10):
        x = random_vector(rng, 5)
        assert commutator(m5, x, x).is_zero()
        y = random_vector(rng, 5)
        assert commutator(m5, x, y) == -commutator(m5, y, x)


# Independently transcribed nonzero entries of the commutator table of the
# dim-5 algebra: the remaining 17 of the 25 pairs must vanish.
STAR_TABLE = {
    (0, 1): (0, 0, 0, 1, 0), (1, 0): (0, 0, 0, -1, 0),
    (0, 3): (1, 0, 0, 0, 0), (3, 0): (-1, 0, 0, 0, 0),
    (1, 3): (0, -1, 0, 0, 0), (3, 1): (0, 1, 0, 0, 0),
    (2, 3): (0, 0, 1, 0, 0), (3, 2): (0, 0, -1, 0, 0),
}


def test_commutator_reproduces_the_full_star_table():
    m5 = build_myung5()
    for i in range(5):
        for j in range(5):
            expected = Vector([Fraction(c) for c in STAR_TABLE.get((i, j), (0,) * 5)])
            got = commutator(m5, Vector.basis(5, i), Vector.basis(5, j))
            assert got == expected, (i, j)


# --- Hom-associator ---

def test_hom_associator_param3_values():
    p3 = build_param3(1, 2)
    u, v, w = (Vector.basis(3, i) for i in range(3))
    # mu(mu(u,v), a(w)) = a^2 b v and mu(a(u), mu(v,w)) = a b^2 w
    first = eval_bilinear(p3.mul, eval_bilinear(p3.mul, u, v), p3.twist.apply(w))
    second = eval_bilinear(p3.mul, p3.twist.apply(u), eval_bilinear(p3.mul, v, w))
    assert first == Vector([0, 2, 0])
    assert second == Vector([0, 0, 4])
    assert hom_associator(p3, u, v, w) == Vector([0, 2, -4])


def test_hom_associator_vanishes_for_zero_multiplication():
    h = zero_algebra()
    rng = SplitMix64(8)
    args = [random_vector(rng, 3) for _ in range(3)]
    assert hom_associator(h, *args).is_zero()


def test_hom_associator_star_example():
    # (e3 * e4) * a(e4) = -e3 while a(e3) * (e4 e4) = 0
    from homakivis import build_kuzmin5
    k5 = build_kuzmin5()
    e3, e4 = Vector.basis(5, 2), Vector.basis(5, 3)
    lhs = eval_bilinear(k5.mul, eval_bilinear(k5.mul, e3, e4), k5.twist.apply(e4))
    assert lhs == Vector([0, 0, -1, 0, 0])
    assert eval_bilinear(k5.mul, k5.twist.apply(e3),
                         eval_bilinear(k5.mul, e4, e4)).is_zero()
    assert hom_associator(k5, e3, e4, e4) == Vector([0, 0, -1, 0, 0])


def test_hom_associator_tensor_matches_direct_evaluation():
    from homakivis import eval_trilinear, random_bilinear, GenConfig
    rng = SplitMix64(314)
    for seed in range(5):
        cfg = GenConfig(dim=3, seed=seed, coeff_bound=3)
        h = HomAlgebra(random_bilinear(cfg),
                       LinearMap([[1, 1, 0], [0, 1, 0], [0, 0, 2]]))
        t = hom_associator_tensor(h)
        for _ in range(10):
            x, y, z = (random_vector(rng, 3) for _ in range(3))
            assert eval_trilinear(t, x, y, z) == hom_associator(h, x, y, z)


def test_hom_associator_tensor_zero_for_associative_identity_twist():
    mul, _ = build_mat2()
    t = hom_associator_tensor(HomAlgebra(mul))
    assert not list(t.entries())


# --- predicates ---

def test_param3_is_not_hom_associative():
    rep = is_hom_associative(build_param3(1, 2))
    assert not rep.holds
    # first failing triple in lexicographic order
    assert rep.witness.indices == (0, 0, 1)
    # the witness replays: re-evaluating the identity reproduces the gap
    p3 = build_param3(1, 2)
    args = [Vector.basis(3, i) for i in rep.witness.indices]
    assert hom_associator(p3, *args) == rep.witness.lhs - rep.witness.rhs
    assert rep.witness.lhs != rep.witness.rhs


def test_zero_algebra_is_hom_associative():
    assert is_hom_associative(zero_algebra()).holds


def test_sl2_hom_associativity_fails_at_the_known_triple():
    sl2 = build_sl2()
    assert not is_hom_associative(sl2).holds
    u, w = Vector.basis(3, 0), Vector.basis(3, 2)
    # [[u,w], a(w)] = [v, u] = 2u while [a(u), [w,w]] = 0
    lhs = eval_bilinear(sl2.mul, eval_bilinear(sl2.mul, u, w), sl2.twist.apply(w))
    assert lhs == Vector([2, 0, 0])
    assert eval_bilinear(sl2.mul, sl2.twist.apply(u),
                         eval_bilinear(sl2.mul, w, w)).is_zero()


def test_param3_is_not_associative():
    rep = is_associative(build_param3(1, 2))
    assert not rep.holds
    # the (v,v,w) triple shows it: mu(mu(v,v),w) = abw vs mu(v,mu(v,w)) = b^2 w
    p3 = build_param3(1, 2)
    v, w = Vector.basis(3, 1), Vector.basis(3, 2)
    assert associator(p3.mul, v, v, w) == Vector([0, 0, -2])


def test_dim1_identity_twist_algebra():
    h = dim1_associative()
    assert is_associative(h).holds
    assert is_hom_associative(h).holds
    assert is_multiplicative(h).holds


def test_param3_multiplicativity_is_computed_not_assumed():
    rep = is_multiplicative(build_param3(1, 2))
    assert not rep.holds
    assert rep.witness.indices == (0, 1)
    # a(mu(u,v)) = a^2 w while mu(a(u), a(v)) = a^2 b w
    assert rep.witness.lhs == Vector([0, 0, 1])
    assert rep.witness.rhs == Vector([0, 0, 2])


def test_myung5_twist_is_a_self_morphism():
    m5 = build_myung5()
    assert is_multiplicative(m5).holds
    # exhaustive independent check of all 25 pairs
    for i, j in product(range(5), repeat=2):
        lhs = m5.twist.apply(m5.mul.on_basis(i, j))
        rhs = eval_bilinear(m5.mul, m5.twist.column(i), m5.twist.column(j))
        assert lhs == rhs


def test_myung5_is_not_hom_flexible_but_its_twist_is():
    # as(e1, e4, e1) = e5 breaks flexibility for the untwisted product
    m5 = build_myung5()
    rep = is_hom_flexible(m5)
    assert not rep.holds
    e1, e4 = Vector.basis(5, 0), Vector.basis(5, 3)
    assert hom_associator(m5, e1, e4, e1) == Vector([0, 0, 0, 0, 1])
    assert is_hom_flexible(build_myung5_twisted()).holds


def test_zero_algebra_is_flexible_and_alternative():
    h = zero_algebra()
    assert is_hom_flexible(h).holds
    assert is_hom_alternative(h).holds


def test_twisted_octonions_are_hom_alternative():
    from homakivis import build_octonions_twisted
    assert is_hom_alternative(build_octonions_twisted()).holds


def test_flexible_linearized_verdict_matches_quadratic_sampling():
    # the linearized basis verdict must agree with as(x,y,x) = 0 at vectors
    rng = SplitMix64(55)
    for h in (build_myung5(), build_myung5_twisted(), build_sl2()):
        verdict = is_hom_flexible(h).holds
        sampled = all(
            hom_associator(h, x, y, x).is_zero()
            for x, y in ((random_vector(rng, h.dim), random_vector(rng, h.dim))
                         for _ in range(50)))
        assert verdict == sampled


# --- Yau twist / untwist ---

def test_yau_twist_of_sl2():
    sl2 = build_sl2()
    h = yau_twist(sl2.mul, sl2.twist, sl2.basis_names)
    u, v = Vector.basis(3, 0), Vector.basis(3, 1)
    # mu_a(u, v) = a([u,v]) = a(-2u) = -2w
    assert eval_bilinear(h.mul, u, v) == Vector([0, 0, -2])
    assert is_multiplicative(h).holds


def test_yau_twist_with_identity_is_a_no_op():
    sl2 = build_sl2()
    h = yau_twist(sl2.mul, LinearMap.identity(3))
    assert h.mul == sl2.mul
    assert h.twist.is_identity()


def test_yau_twist_rejects_non_endomorphisms():
    sl2 = build_sl2()
    bad = LinearMap([[1, 0, 0], [1, 0, 0], [0, 0, 0]])  # u->u+v, v,w->0
    with pytest.raises(NotMorphism) as info:
        yau_twist(sl2.mul, bad)
    assert info.value.report is not None
    assert not info.value.report.holds


def test_yau_twist_outputs_are_multiplicative(suite100):
    assert all(is_multiplicative(h).holds for h in suite100)


def test_untwist_round_trip():
    sl2 = build_sl2()
    twisted = yau_twist(sl2.mul, sl2.twist)
    recovered = untwist(twisted)
    assert recovered == sl2.mul
    assert yau_twist(recovered, sl2.twist).mul == twisted.mul


def test_untwist_identity_twist_returns_mul():
    m5 = build_myung5()
    h = HomAlgebra(m5.mul)
    assert untwist(h) == m5.mul


def test_untwist_requires_invertible_twist():
    with pytest.raises(NotInvertible):
        untwist(build_myung5())


def test_twist_associator_invariant(suite100):
    # as_twisted(x,y,z) = a(assoc(a x, a y, a z)) for Yau twists
    for h in suite100[:25]:
        mu = untwist(h)
        t = hom_associator_tensor(h)
        al = h.twist
        n = h.dim
        for i, j, k in product(range(n), repeat=3):
            rhs = al.apply(associator(mu, al.column(i), al.column(j), al.column(k)))
            assert t.on_basis(i, j, k) == rhs


def test_bijective_twist_hom_associative_iff_associative(suite100):
    for h in suite100[:25]:
        plain = HomAlgebra(untwist(h))
        assert is_hom_associative(h).holds == is_associative(plain).holds


# --- morphism check ---

def test_identity_is_a_morphism():
    sl2 = build_sl2()
    assert check_hom_algebra_morphism(LinearMap.identity(3), sl2, sl2).holds


def test_twist_is_a_self_morphism_of_myung5():
    m5 = build_myung5()
    assert check_hom_algebra_morphism(m5.twist, m5, m5).holds


def test_non_morphism_map_reported_with_witness():
    sl2 = build_sl2()
    bad = LinearMap.from_columns([
        Vector([1, 0, 0]), Vector([1, 0, 0]), Vector([0, 0, 0])])
    rep = check_hom_algebra_morphism(bad, sl2, sl2)
    assert not rep.holds
    assert rep.witness is not None


# --- nucleus ---

def test_nucleus_of_associative_algebra_is_everything():
    mul, _ = build_mat2()
    assert len(nucleus_basis(mul)) == 4


def test_nucleus_of_sl2_is_trivial():
    assert nucleus_basis(build_sl2().mul) == []


def test_nucleus_of_myung5_is_the_central_line():
    basis = nucleus_basis(build_myung5().mul)
    assert [v.coords for v in basis] == [tuple(Fraction(c) for c in (0, 0, 0, 0, 1))]
    # every basis vector of the nucleus associates with all pairs in all slots
    mul = build_myung5().mul
    for u in basis:
        for j, k in product(range(5), repeat=2):
            ej, ek = Vector.basis(5, j), Vector.basis(5, k)
            assert associator(mul, u, ej, ek).is_zero()
            assert associator(mul, ej, u, ek).is_zero()
            assert associator(mul, ej, ek, u).is_zero()


# --- inner twist ---

def test_inner_twist_by_the_unit_is_trivial():
    mul, one = build_mat2()
    h = inner_twist(mul, one, one)
    assert h.twist.is_identity()
    assert h.mul == mul


def test_inner_twist_by_diag_1_2():
    mul, one = build_mat2()
    u = Vector([1, 0, 0, 2])  # diag(1, 2)
    h = inner_twist(mul, one, u)
    assert is_multiplicative(h).holds
    assert is_hom_associative(h).holds
    # conjugation scales the off-diagonal matrix units: E12 -> E12/2, E21 -> 2 E21
    assert h.twist.column(1) == Vector([0, HALF, 0, 0])
    assert h.twist.column(2) == Vector([0, 0, 2, 0])


def test_inner_twist_rejects_singular_elements():
    mul, one = build_mat2()
    with pytest.raises(NotInvertibleElement):
        inner_twist(mul, one, Vector([1, 0, 0, 0]))  # E11 has no inverse


def test_inner_twist_rejects_non_nuclear_elements():
    oct_mul = build_octonions()
    one = Vector.basis(8, 0)
    with pytest.raises(NotInNucleus):
        inner_twist(oct_mul, one, Vector.basis(8, 1))


def test_inner_twist_rejects_a_fake_unit():
    mul, _ = build_mat2()
    with pytest.raises(NoUnit):
        inner_twist(mul, Vector([1, 0, 0, 0]), Vector([1, 0, 0, 1]))


# --- basis sweeps decide identities for all vectors ---

def test_basis_verdicts_agree_with_random_vector_evaluation():
    rng = SplitMix64(99)
    for h in (build_sl2(), build_myung5(), build_param3(1, 2)):
        n = h.dim
        verdict = is_hom_associative(h).holds
        sampled = all(
            hom_associator(h, *(random_vector(rng, n) for _ in range(3))).is_zero()
            for _ in range(50))
        assert verdict == sampled
        mverdict = is_multiplicative(h).holds
        msampled = all(
            (lambda x, y: h.twist.apply(eval_bilinear(h.mul, x, y))
             == eval_bilinear(h.mul, h.twist.apply(x), h.twist.apply(y)))
            (random_vector(rng, n), random_vector(rng, n))
            for _ in range(50))
        assert mverdict == msampled
