import pytest
from hypothesis import given, settings, strategies as st

from monocentre.config import GuardConfig, SizeGuardExceeded
from monocentre.fincat import (
    FinCategory, Functor, NatTransf, terminal_category, empty_category,
    discrete_category, walking_arrow, check_equivalence,
)
from monocentre.monoidal import (
    Z2, Z3, Z4, S3, discrete_group_monoidal, chain_poset_monoidal,
    one_object_z2_monoidal, relabel_monoidal,
)
from monocentre.centre import (
    CentrePiece, check_centre_piece, check_centre_piece_morphism,
    enumerate_half_braidings, compute_centre, factor_through_centre,
    enumerate_centre_pieces, check_birepresentation, pointwise_monoidal,
    transport_along_power, check_cp_preserves_coproducts,
)


def canonical_piece(Z, ms, idx=0):
    """Wrap one computed centre object as a piece over the terminal category."""
    o = Z.objects[idx]
    pt = terminal_category()
    u = Functor(pt, ms.base, (o.a,), (ms.base.id_of(o.a),))
    return CentrePiece(u, ms, {(0, x): o.gamma[x] for x in ms.base.objects})


# -- centre sizes against the group-theoretic count -----------------------

@pytest.mark.parametrize("table,size", [(Z2, 2), (Z3, 3), (Z4, 4), (S3, 1)])
def test_group_centre_sizes(table, size):
    Z = compute_centre(discrete_group_monoidal(table))
    assert Z.category.n_objects == size
    assert Z.category.n_morphisms == size       # discrete base, discrete centre
    assert Z.all_passed, Z.certificate_lines()


def test_half_braiding_exists_iff_central_s3():
    ms = discrete_group_monoidal(S3)
    counts = [len(enumerate_half_braidings(ms, a)) for a in range(6)]
    assert counts == [1, 0, 0, 0, 0, 0]


def test_poset_centre_is_whole_category():
    for n in (2, 3):
        ms = chain_poset_monoidal(n)
        Z = compute_centre(ms)
        assert Z.category.n_objects == ms.base.n_objects
        assert Z.category.n_morphisms == ms.base.n_morphisms
        assert check_equivalence(Z.projection.functor).is_equivalence
        assert Z.all_passed, Z.certificate_lines()


def test_one_object_z2_centre():
    # multiplicativity forces the component to the identity, but both
    # endomorphisms of the carrier are central morphisms
    Z = compute_centre(one_object_z2_monoidal())
    assert Z.category.n_objects == 1
    assert Z.category.n_morphisms == 2
    assert Z.all_passed, Z.certificate_lines()


def test_unit_law_is_derived_not_imposed():
    for ms in (discrete_group_monoidal(Z4), chain_poset_monoidal(3),
               one_object_z2_monoidal()):
        Z = compute_centre(ms)
        assert Z.unit_violations == ()


def test_empty_input_degenerates():
    # an empty base cannot carry a unit object, so the degenerate case is
    # entered before any structure is consulted
    from monocentre.monoidal import MonoidalStructure
    ms = MonoidalStructure(empty_category(), (), {}, 0, {}, (), ())
    Z = compute_centre(ms)
    assert Z.category.n_objects == 0
    assert Z.all_passed


def test_guards_trip():
    with pytest.raises(SizeGuardExceeded):
        compute_centre(discrete_group_monoidal(Z4), GuardConfig(max_objects=2))


@settings(max_examples=20, deadline=None)
@given(st.permutations(range(4)))
def test_centre_size_invariant_under_relabelling(perm):
    ms = discrete_group_monoidal(Z4)
    rl = relabel_monoidal(ms, tuple(perm), tuple(perm))
    Z = compute_centre(rl.monoidal)
    assert Z.category.n_objects == 4
    assert Z.all_passed


# -- piece validation and the corrupted-component control -----------------

def test_canonical_piece_passes():
    ms = discrete_group_monoidal(Z3)
    Z = compute_centre(ms)
    assert check_centre_piece(canonical_piece(Z, ms, 1)) == []


def test_corrupted_component_rejected_with_witness():
    ms = one_object_z2_monoidal()
    pt = terminal_category()
    u = Functor(pt, ms.base, (0,), (ms.base.id_of(0),))
    bad = CentrePiece(u, ms, {(0, 0): 1})   # the flip endomorphism
    report = check_centre_piece(bad)
    assert report
    assert "multiplicativity fails at (s=0, x=0, y=0)" in report


def test_missing_component_reported():
    ms = discrete_group_monoidal(Z2)
    pt = terminal_category()
    u = Functor(pt, ms.base, (0,), (ms.base.id_of(0),))
    report = check_centre_piece(CentrePiece(u, ms, {(0, 0): 0}))
    assert any("missing" in line for line in report)


def test_piece_morphism_condition():
    ms = chain_poset_monoidal(2)
    cp = enumerate_centre_pieces(terminal_category(), ms)
    # pieces are ordered by carrier; hom(0, 1) in the poset is the single
    # non-identity arrow and it is a morphism of pieces
    p0, p1 = cp.pieces
    arrow = ms.base.hom(p0.u.obj_map[0], p1.u.obj_map[0])[0]
    sigma = NatTransf(p0.u, p1.u, (arrow,))
    assert check_centre_piece_morphism(sigma, p0, p1) == []


# -- the centre piece category and its universal property -----------------

def test_cp_counts_frozen():
    z2 = discrete_group_monoidal(Z2)
    assert enumerate_centre_pieces(terminal_category(), z2).category.n_objects == 2
    assert enumerate_centre_pieces(empty_category(), z2).category.n_objects == 1
    cp = enumerate_centre_pieces(discrete_category(2), z2)
    assert cp.category.n_objects == 4
    assert cp.category.n_morphisms == 4
    cpw = enumerate_centre_pieces(walking_arrow(), z2)
    assert cpw.category.n_objects == 2
    assert cpw.category.n_morphisms == 2


@pytest.mark.parametrize("U", [terminal_category(), discrete_category(2), walking_arrow()])
@pytest.mark.parametrize("ms", [discrete_group_monoidal(Z2), chain_poset_monoidal(2)])
def test_birepresentation_is_equivalence(U, ms):
    rep = check_birepresentation(U, ms)
    assert rep.verdict == "equivalence", rep.equivalence.summary()
    assert rep.left_objects == rep.equivalence.functor.src.n_objects


def test_factor_through_centre_recovers_projection():
    ms = discrete_group_monoidal(Z3)
    Z = compute_centre(ms)
    p = canonical_piece(Z, ms, 2)
    F = factor_through_centre(p, Z)
    assert Z.objects[F.obj_map[0]].a == p.u.obj_map[0]
    assert F.then(Z.projection.functor) == p.u


def test_factor_rejects_non_piece():
    ms = one_object_z2_monoidal()
    pt = terminal_category()
    u = Functor(pt, ms.base, (0,), (ms.base.id_of(0),))
    bad = CentrePiece(u, ms, {(0, 0): 1})
    with pytest.raises(ValueError):
        factor_through_centre(bad)


# -- transport along powers ------------------------------------------------

def projection_piece(ms):
    Z = compute_centre(ms)
    gamma = {(i, x): o.gamma[x]
             for i, o in enumerate(Z.objects) for x in ms.base.objects}
    return CentrePiece(Z.projection.functor, ms, gamma)


def test_pointwise_monoidal_is_monoidal():
    from monocentre.fincat import functor_category
    from monocentre.monoidal import validate_monoidal
    ms = discrete_group_monoidal(Z2)
    fc = functor_category(discrete_category(2), ms.base)
    msq = pointwise_monoidal(fc, ms)
    assert validate_monoidal(msq) == []
    assert fc.functors[msq.unit].obj_map == (0, 0)


def test_transport_discrete_two_over_z2():
    report = transport_along_power(discrete_category(2),
                                   projection_piece(discrete_group_monoidal(Z2)))
    assert report.transported_report == ()
    assert report.strong_monoidal_report == ()
    assert report.equivalence.is_equivalence, report.equivalence.summary()
    assert report.ok


def test_transport_terminal_is_identity_shaped():
    report = transport_along_power(terminal_category(),
                                   projection_piece(discrete_group_monoidal(Z3)))
    assert report.ok
    assert report.comparison.src.n_objects == report.comparison.dst.n_objects == 3


# -- coproduct preservation -------------------------------------------------

@pytest.mark.parametrize("U,V,ms", [
    (terminal_category(), terminal_category(), discrete_group_monoidal(Z2)),
    (terminal_category(), empty_category(), discrete_group_monoidal(Z2)),
    (discrete_category(2), discrete_category(2), chain_poset_monoidal(2)),
])
def test_cp_sends_coproducts_to_products(U, V, ms):
    rep = check_cp_preserves_coproducts(U, V, ms)
    assert rep.verdict == "equivalence", rep.equivalence.summary()
    assert rep.left_objects == rep.right_objects


def test_cp_coproduct_counts_poset_case():
    rep = check_cp_preserves_coproducts(discrete_category(2), discrete_category(2),
                                        chain_poset_monoidal(2))
    assert rep.left_objects == 16
    assert rep.comparison.src.n_morphisms == 81
