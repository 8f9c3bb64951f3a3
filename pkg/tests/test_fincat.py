"""Table-level checks for finite categories, functors, and enumeration."""

import pytest
from hypothesis import given, strategies as st

from monocentre.config import GuardConfig, SizeGuardExceeded
from monocentre.fincat import (
    FinCategory, Functor, NatTransf,
    validate_category, validate_functor, validate_nat_transf,
    discrete_category, terminal_category, empty_category, walking_arrow,
    product_category, coproduct_category, full_subcategory,
    enumerate_functors, enumerate_nat_transfs, functor_category,
    curry, uncurry, evaluation_functor,
    identity_functor, constant_functor, vertical_compose,
    check_equivalence,
)


def group_category(table):
    """One-object category whose endomorphisms are a finite group.

    table[g][f] is the product; composition g . f multiplies in that order.
    """
    n = len(table)
    comp = {(g, f): table[g][f] for g in range(n) for f in range(n)}
    return FinCategory(1, (0,) * n, (0,) * n, (0,), comp)


Z2_TABLE = ((0, 1), (1, 0))
Z3_TABLE = ((0, 1, 2), (1, 2, 0), (2, 0, 1))


def chaotic_category(n):
    """Exactly one morphism between every ordered pair of objects."""
    pairs = [(a, b) for a in range(n) for b in range(n)]
    mor_of = {p: i for i, p in enumerate(pairs)}
    src = tuple(a for a, _ in pairs)
    dst = tuple(b for _, b in pairs)
    ident = tuple(mor_of[(a, a)] for a in range(n))
    comp = {}
    for g, (b1, c) in enumerate(pairs):
        for f, (a, b2) in enumerate(pairs):
            if b1 == b2:
                comp[(g, f)] = mor_of[(a, c)]
    return FinCategory(n, src, dst, ident, comp)


class TestValidation:
    def test_basic_shapes_are_valid(self):
        for cat in (empty_category(), terminal_category(), discrete_category(3),
                    walking_arrow(), group_category(Z2_TABLE), group_category(Z3_TABLE),
                    chaotic_category(3)):
            assert validate_category(cat) == []

    def test_missing_composite_is_reported(self):
        cat = walking_arrow()
        comp = dict(cat.compose_map)
        del comp[(1, 2)]
        bad = FinCategory(2, cat.mor_src, cat.mor_dst, cat.identity, comp)
        report = validate_category(bad)
        assert any("missing" in line for line in report)

    def test_wrong_identity_is_reported(self):
        bad = FinCategory(1, (0, 0), (0, 0), (1,), {(0, 0): 0, (0, 1): 1, (1, 0): 1, (1, 1): 0})
        assert validate_category(bad)

    def test_out_of_range_ids_reported_not_raised(self):
        bad = FinCategory(2, (0, 5), (0, 1), (0, 1), {})
        report = validate_category(bad)
        assert any("out-of-range" in line for line in report)

    @given(st.integers(0, 8), st.integers(0, 2))
    def test_corrupting_one_group_composite_is_caught(self, k, delta):
        """Overwrite one entry of the Z3 table with a wrong value."""
        cat = group_category(Z3_TABLE)
        g, f = divmod(k, 3)
        good = cat.compose_map[(g, f)]
        bad_val = (good + 1 + delta % 2) % 3
        comp = dict(cat.compose_map)
        comp[(g, f)] = bad_val
        bad = FinCategory(1, cat.mor_src, cat.mor_dst, cat.identity, comp)
        assert validate_category(bad) != []


class TestFunctorsAndTransfs:
    def test_identity_functor_is_valid(self):
        cat = group_category(Z3_TABLE)
        assert validate_functor(identity_functor(cat)) == []

    def test_functor_endpoint_violation(self):
        wa = walking_arrow()
        F = Functor(wa, wa, (0, 1), (0, 1, 0))  # sends the arrow to id0
        assert validate_functor(F)

    def test_nat_transf_validation(self):
        z2 = group_category(Z2_TABLE)
        idf = identity_functor(z2)
        ok = NatTransf(idf, idf, (0,))
        assert validate_nat_transf(ok) == []
        # component s: naturality s.f = f.s holds since Z2 is abelian
        assert validate_nat_transf(NatTransf(idf, idf, (1,))) == []

    def test_vertical_composition(self):
        z2 = group_category(Z2_TABLE)
        idf = identity_functor(z2)
        s = NatTransf(idf, idf, (1,))
        assert vertical_compose(s, s).components == (0,)


class TestEnumeration:
    def test_functors_from_walking_arrow_to_discrete(self):
        fs = enumerate_functors(walking_arrow(), discrete_category(2))
        # the arrow must collapse, so exactly the two constant choices
        assert len(fs) == 2
        assert all(validate_functor(F) == [] for F in fs)

    def test_group_endofunctors_are_homomorphisms(self):
        z2 = group_category(Z2_TABLE)
        fs = enumerate_functors(z2, z2)
        assert len(fs) == 2  # trivial and identity
        z3 = group_category(Z3_TABLE)
        assert len(enumerate_functors(z3, z3)) == 3  # x -> 0, x, 2x

    def test_endofunctors_of_walking_arrow(self):
        wa = walking_arrow()
        fs = enumerate_functors(wa, wa)
        assert len(fs) == 3  # constant 0, constant 1, identity
        for F in fs:
            assert validate_functor(F) == []

    def test_nat_transf_enumeration_matches_validation(self):
        z2 = group_category(Z2_TABLE)
        trivial, ident = enumerate_functors(z2, z2)
        assert trivial.mor_map == (0, 0)
        assert enumerate_nat_transfs(trivial, ident) == []
        assert len(enumerate_nat_transfs(ident, ident)) == 2

    def test_budget_guard_trips(self):
        cfg = GuardConfig().raised(max_branch=3)
        with pytest.raises(SizeGuardExceeded):
            enumerate_functors(discrete_category(3), discrete_category(3), cfg)

    def test_functor_category_discrete(self):
        fc = functor_category(discrete_category(2), discrete_category(2))
        assert fc.category.n_objects == 4
        assert fc.category.n_morphisms == 4
        assert validate_category(fc.category) == []

    def test_functor_category_of_group(self):
        fc = functor_category(group_category(Z2_TABLE), group_category(Z2_TABLE))
        assert fc.category.n_objects == 2
        # no transfs between the trivial and identity homomorphism, two each way round
        assert fc.category.n_morphisms == 4
        assert validate_category(fc.category) == []
        for eta in fc.transfs:
            assert validate_nat_transf(eta) == []

    def test_functor_category_walking_arrow(self):
        fc = functor_category(walking_arrow(), walking_arrow())
        assert fc.category.n_objects == 3
        assert validate_category(fc.category) == []


class TestProductsCoproducts:
    def test_product_tables(self):
        wa = walking_arrow()
        prod = product_category(wa, wa)
        assert prod.category.n_objects == 4
        assert prod.category.n_morphisms == 9
        assert validate_category(prod.category) == []
        assert validate_functor(prod.proj_left) == []
        assert validate_functor(prod.proj_right) == []

    def test_pairing(self):
        wa = walking_arrow()
        prod = product_category(wa, wa)
        diag = prod.pair(identity_functor(wa), identity_functor(wa))
        assert validate_functor(diag) == []
        assert diag.then(prod.proj_left) == identity_functor(wa)
        assert diag.then(prod.proj_right) == identity_functor(wa)

    def test_coproduct(self):
        z2 = group_category(Z2_TABLE)
        cop = coproduct_category(z2, walking_arrow())
        assert cop.category.n_objects == 3
        assert cop.category.n_morphisms == 5
        assert validate_category(cop.category) == []
        assert validate_functor(cop.inj_left) == []
        assert validate_functor(cop.inj_right) == []

    def test_full_subcategory(self):
        wa = walking_arrow()
        sub = full_subcategory(wa, [1])
        assert sub.category.n_objects == 1
        assert sub.category.n_morphisms == 1
        assert validate_functor(sub.inclusion) == []


class TestCurryEvaluation:
    def test_curry_uncurry_round_trip(self):
        wa = walking_arrow()
        prod = product_category(wa, wa)
        fc = functor_category(wa, wa)
        H = prod.proj_left
        K = curry(H, prod, fc)
        assert validate_functor(K) == []
        back = uncurry(K, prod, fc)
        assert back.obj_map == H.obj_map and back.mor_map == H.mor_map

    def test_evaluation_is_a_functor(self):
        fc = functor_category(walking_arrow(), walking_arrow())
        ev = evaluation_functor(fc)
        assert validate_functor(ev.functor) == []

    def test_evaluation_agrees_with_application(self):
        fc = functor_category(walking_arrow(), walking_arrow())
        ev = evaluation_functor(fc)
        wa = walking_arrow()
        for fi, F in enumerate(fc.functors):
            for a in wa.objects:
                assert ev.functor.obj_map[ev.product.obj_id(fi, a)] == F.obj_map[a]


class TestEquivalence:
    def test_identity_is_equivalence(self):
        rep = check_equivalence(identity_functor(walking_arrow()))
        assert rep.is_equivalence

    def test_terminal_into_chaotic_is_equivalence(self):
        """A non-bijective equivalence: the point into the chaotic pair."""
        t = terminal_category()
        ch = chaotic_category(2)
        F = Functor(t, ch, (0,), (ch.id_of(0),))
        rep = check_equivalence(F)
        assert rep.is_equivalence
        assert rep.summary() == "equivalence"

    def test_point_into_walking_arrow_is_not(self):
        wa = walking_arrow()
        F = constant_functor(terminal_category(), wa, 0)
        rep = check_equivalence(F)
        assert not rep.essentially_surjective
        assert any("essential surjectivity" in w for w in rep.witnesses)

    def test_collapse_is_not_faithful(self):
        z2 = group_category(Z2_TABLE)
        t = terminal_category()
        F = Functor(z2, t, (0,), (0, 0))
        rep = check_equivalence(F)
        assert not rep.faithful
