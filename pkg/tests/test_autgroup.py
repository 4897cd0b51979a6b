from typing import Callable, Set

import pytest

from gext_lab.autgroup.automorphism import Automorphism, certify, generators, numeric_automorphisms
from gext_lab.autgroup.group import AutGroup, automorphisms, closure, enumerate_subgroups, is_normal, orbit
from gext_lab.autgroup.subfield import fixed_field, fixing_subgroup, is_g_stable, restriction_map
from gext_lab.config import RunConfig
from gext_lab.helpers.errors import GextError, NotGStable, PrecisionCapExceeded, SubgroupCapExceeded
from gext_lab.tower.tower import FieldTower


def _assert_valid_table(group: AutGroup) -> None:
    n = group.order
    for row in group.table:
        assert sorted(row) == list(range(n))
    assert group.table[0] == list(range(n))
    for a in range(n):
        assert group.table[a][group.inverses[a]] == 0


class TestAutomorphismGroup:
    @pytest.mark.parametrize(
        ["name", "order"],
        [("t1", 2), ("t2", 1), ("t3", 4), ("t4", 3), ("t6", 4), ("t7", 6), ("t8", 2), ("t9", 1)],
    )
    def test_group_orders(self, tower: Callable[[str], FieldTower], config: RunConfig, name: str, order: int) -> None:
        group = automorphisms(tower(name), config)
        assert group.order == order
        assert group[0].is_identity()
        _assert_valid_table(group)

    @pytest.mark.slow
    def test_s3_is_found(self, tower: Callable[[str], FieldTower], config: RunConfig) -> None:
        group = automorphisms(tower("t5"), config)
        assert group.order == 6
        _assert_valid_table(group)
        commutes = all(group.table[a][b] == group.table[b][a] for a in range(6) for b in range(6))
        assert not commutes

    def test_klein_four(self, t3: FieldTower, config: RunConfig) -> None:
        group = automorphisms(t3, config)
        assert all(group.table[g][g] == 0 for g in range(4))
        s, t = generators(t3)
        assert {(sigma.apply(s), sigma.apply(t)) for sigma in group.elements} == {
            (s, t),
            (-s, t),
            (s, -t),
            (-s, -t),
        }

    def test_cyclic_cubic_roots(self, t4: FieldTower, config: RunConfig) -> None:
        group = automorphisms(t4, config)
        a = t4.L.gen
        assert {sigma.images[0] for sigma in group.elements} == {a, a**2 - 2, 2 - a - a**2}

    def test_frobenius_powers(self, t6: FieldTower, config: RunConfig) -> None:
        group = automorphisms(t6, config)
        a = t6.L.gen
        assert {sigma.images[0] for sigma in group.elements} == {a, a**2, a**4, a**8}

    def test_relative_frobenius(self, t8: FieldTower, config: RunConfig) -> None:
        group = automorphisms(t8, config)
        r = t8.L.gen
        assert group[1].images[0] == r**9
        assert group[1].apply(t8.lift(t8.K.gen)) == t8.lift(t8.K.gen)

    def test_numeric_search_is_recorded(self, t1: FieldTower, config: RunConfig) -> None:
        automorphisms(t1, config)
        assert any("certified exactly" in a for a in t1.assumptions)

    def test_precision_cap_with_uncertified_candidates(self, t1: FieldTower) -> None:
        tight = RunConfig(max_denominator=1, precision=128, precision_cap=128)
        with pytest.raises(PrecisionCapExceeded, match="uncertified candidates remain at 128 bits"):
            numeric_automorphisms(t1, tight)

    def test_cap_surfaces_through_group_search(self, t4: FieldTower) -> None:
        with pytest.raises(PrecisionCapExceeded):
            automorphisms(t4, RunConfig(max_denominator=1, precision=128, precision_cap=128))

    def test_certify_rejects_non_roots(self, t1: FieldTower) -> None:
        s = t1.L.gen
        assert certify(t1, [-s])
        assert not certify(t1, [t1.lift(2)])

    def test_automorphism_needs_one_image_per_generator(self, t3: FieldTower) -> None:
        with pytest.raises(ValueError):
            Automorphism(t3, [t3.generator(0)])

    def test_missing_identity_is_an_error(self, t1: FieldTower) -> None:
        with pytest.raises(GextError):
            AutGroup(t1, [Automorphism(t1, [-t1.L.gen])])

    def test_orbit(self, t3: FieldTower, config: RunConfig) -> None:
        group = automorphisms(t3, config)
        s, t = generators(t3)
        assert len(orbit(group, s + t)) == 4
        assert orbit(group, s * t * 0 + 5) == [t3.lift(5)]


class TestSubgroups:
    @pytest.mark.parametrize(
        ["name", "count", "normal"],
        [("t1", 2, 2), ("t2", 1, 1), ("t3", 5, 5), ("t4", 2, 2), ("t6", 3, 3), ("t7", 4, 4), ("t9", 1, 1)],
    )
    def test_lattice_sizes(
        self, tower: Callable[[str], FieldTower], config: RunConfig, name: str, count: int, normal: int
    ) -> None:
        group = automorphisms(tower(name), config)
        subgroups = enumerate_subgroups(group, config.subgroup_cap)
        assert len(subgroups) == count
        assert sum(H.normal for H in subgroups) == normal
        assert subgroups[0].elements == (0,)
        assert subgroups[-1].elements == tuple(range(group.order))

    @pytest.mark.slow
    def test_s3_lattice(self, tower: Callable[[str], FieldTower], config: RunConfig) -> None:
        group = automorphisms(tower("t5"), config)
        subgroups = enumerate_subgroups(group, config.subgroup_cap)
        assert [H.order for H in subgroups] == [1, 2, 2, 2, 3, 6]
        assert [H.normal for H in subgroups] == [True, False, False, False, True, True]

    def test_subgroups_are_closed(self, t3: FieldTower, config: RunConfig) -> None:
        group = automorphisms(t3, config)
        for H in enumerate_subgroups(group, config.subgroup_cap):
            members: Set[int] = set(H.elements)
            assert closure(group, H.elements) == frozenset(members)
            assert is_normal(group, members) == H.normal

    def test_cap(self, t3: FieldTower, config: RunConfig) -> None:
        group = automorphisms(t3, config)
        with pytest.raises(SubgroupCapExceeded):
            enumerate_subgroups(group, 3)


class TestFixedFields:
    def test_degrees_reverse_orders(self, t3: FieldTower, config: RunConfig) -> None:
        group = automorphisms(t3, config)
        for H in enumerate_subgroups(group, config.subgroup_cap):
            handle = fixed_field(group, H, config)
            assert handle.degree * H.order == t3.degree
            assert handle.minpoly.degree == handle.degree
            assert fixing_subgroup(group, handle) == H.elements

    def test_whole_group_fixes_ground(self, t6: FieldTower, config: RunConfig) -> None:
        group = automorphisms(t6, config)
        top = enumerate_subgroups(group, config.subgroup_cap)[-1]
        handle = fixed_field(group, top, config)
        assert handle.degree == 1
        assert handle.contains(t6.lift(1))
        assert not handle.contains(t6.L.gen)

    def test_quadratic_subfield_of_gf16(self, t6: FieldTower, config: RunConfig) -> None:
        group = automorphisms(t6, config)
        middle = enumerate_subgroups(group, config.subgroup_cap)[1]
        handle = fixed_field(group, middle, config)
        assert handle.degree == 2
        assert all(group[h].apply(handle.primitive) == handle.primitive for h in middle.elements)

    def test_pure_cubic_has_trivial_fixing(self, t2: FieldTower, config: RunConfig) -> None:
        group = automorphisms(t2, config)
        (H,) = enumerate_subgroups(group, config.subgroup_cap)
        handle = fixed_field(group, H, config)
        assert handle.degree == 3
        assert is_g_stable(group, handle)


class TestRestriction:
    def test_klein_four_restrictions(self, t3: FieldTower, config: RunConfig) -> None:
        group = automorphisms(t3, config)
        for H in enumerate_subgroups(group, config.subgroup_cap):
            handle = fixed_field(group, H, config)
            result = restriction_map(group, handle, config)
            assert result.homomorphism
            assert result.surjective
            assert result.kernel_matches
            assert result.kernel == H.elements
            assert result.gamma_group.order == handle.degree

    @pytest.mark.slow
    def test_unstable_subfield_is_refused(self, tower: Callable[[str], FieldTower], config: RunConfig) -> None:
        t5 = tower("t5")
        group = automorphisms(t5, config)
        subgroups = enumerate_subgroups(group, config.subgroup_cap)
        cubic = fixed_field(group, subgroups[1], config)
        assert not is_g_stable(group, cubic)
        with pytest.raises(NotGStable):
            restriction_map(group, cubic, config)
