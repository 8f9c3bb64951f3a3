"""Coherence checking on the fixture monoidal structures."""

import pytest

from monocentre.fincat import Functor, validate_category
from monocentre.monoidal import (
    MonoidalStructure, validate_monoidal, check_pentagon_triangle,
    BraidingDatum, check_braiding, identity_braiding,
    StrongMonoidalFunctor, check_strong_monoidal, identity_strong_monoidal,
    strict_cells_functor,
    discrete_group_monoidal, chain_poset_monoidal, one_object_z2_monoidal,
    relabel_monoidal, group_table_report,
    Z2, Z3, Z4, S3,
)


def all_fixtures():
    return [discrete_group_monoidal(t) for t in (Z2, Z3, Z4, S3)] + [
        chain_poset_monoidal(2), chain_poset_monoidal(3), one_object_z2_monoidal()]


class TestGroupTables:
    def test_s3_is_a_group(self):
        assert group_table_report(S3) == []
        assert len(S3) == 6

    def test_s3_nonabelian(self):
        assert any(S3[a][b] != S3[b][a] for a in range(6) for b in range(6))

    def test_magma_rejected(self):
        bad = ((0, 1), (1, 1))
        assert group_table_report(bad)
        with pytest.raises(ValueError):
            discrete_group_monoidal(bad)

    def test_rock_paper_scissors_rejected(self):
        # idempotent, commutative, not associative
        t = ((0, 1, 0), (1, 1, 2), (0, 2, 2))
        assert any("associative" in line for line in group_table_report(t))


class TestCoherence:
    def test_all_fixtures_valid(self):
        for ms in all_fixtures():
            assert validate_category(ms.base) == []
            assert validate_monoidal(ms) == []

    def test_broken_pentagon_detected(self):
        ms = one_object_z2_monoidal(broken_pentagon=True)
        report = check_pentagon_triangle(ms)
        assert any("pentagon" in line for line in report)

    def test_broken_pentagon_still_structurally_sound(self):
        # the corruption is purely coherence-level: naturality survives
        ms = one_object_z2_monoidal(broken_pentagon=True)
        from monocentre.monoidal import _structural_report, _naturality_report
        assert _structural_report(ms) == []
        assert _naturality_report(ms) == []

    def test_poset_unitors_line_up(self):
        ms = chain_poset_monoidal(4)
        for a in ms.base.objects:
            assert ms.tensor_obj(ms.unit, a) == a
            assert ms.tensor_obj(a, ms.unit) == a

    def test_missing_tensor_entry_reported(self):
        ms = discrete_group_monoidal(Z2)
        tmor = dict(ms.tensor_mor_table)
        del tmor[(1, 1)]
        broken = MonoidalStructure(ms.base, ms.tensor_obj_table, tmor, ms.unit,
                                   ms.alpha_table, ms.lam_table, ms.rho_table)
        assert any("missing" in line for line in validate_monoidal(broken))


class TestBraiding:
    def test_identity_braiding_on_abelian(self):
        for table in (Z2, Z3, Z4):
            ms = discrete_group_monoidal(table)
            assert check_braiding(identity_braiding(ms)) == []

    def test_identity_braiding_on_poset(self):
        ms = chain_poset_monoidal(3)
        assert check_braiding(identity_braiding(ms)) == []

    def test_s3_tensor_not_symmetric(self):
        ms = discrete_group_monoidal(S3)
        with pytest.raises(ValueError):
            identity_braiding(ms)

    def test_wrong_component_caught(self):
        ms = one_object_z2_monoidal()
        # c = s at the single pair: naturality asks s.(f tensor g) = (g tensor f).s,
        # fine since abelian; hexagons ask s = s.s = id, so they fail
        br = BraidingDatum(ms, {(0, 0): 1})
        report = check_braiding(br)
        assert any("hexagon" in line for line in report)


class TestStrongMonoidal:
    def test_identity_functor_passes(self):
        for ms in all_fixtures():
            assert check_strong_monoidal(identity_strong_monoidal(ms)) == []

    def test_group_hom_as_strict_functor(self):
        ms = discrete_group_monoidal(Z2)
        F = Functor(ms.base, ms.base, (0, 1), (0, 1))
        assert check_strong_monoidal(strict_cells_functor(F, ms, ms)) == []

    def test_non_homomorphism_swap_fails(self):
        ms = discrete_group_monoidal(Z4)
        # swap g and g^2 (indices 1, 2), keep 0 and 3: not a homomorphism
        F = Functor(ms.base, ms.base, (0, 2, 1, 3), (0, 2, 1, 3))
        report = check_strong_monoidal(strict_cells_functor(F, ms, ms))
        assert report != []

    def test_inversion_on_z4_is_monoidal(self):
        ms = discrete_group_monoidal(Z4)
        F = Functor(ms.base, ms.base, (0, 3, 2, 1), (0, 3, 2, 1))
        assert check_strong_monoidal(strict_cells_functor(F, ms, ms)) == []


class TestRelabelling:
    def test_relabelled_copy_is_valid_and_iso(self):
        ms = discrete_group_monoidal(Z3)
        out = relabel_monoidal(ms, (2, 0, 1), (2, 0, 1))
        assert validate_monoidal(out.monoidal) == []
        assert check_strong_monoidal(out.iso) == []
        assert out.monoidal.unit == 2

    def test_relabel_poset(self):
        ms = chain_poset_monoidal(2)
        perm_obj = (1, 0)
        # morphisms of the 2-chain: (0,0), (0,1), (1,1) in id order
        perm_mor = (2, 1, 0)
        out = relabel_monoidal(ms, perm_obj, perm_mor)
        assert validate_monoidal(out.monoidal) == []
        assert check_strong_monoidal(out.iso) == []
