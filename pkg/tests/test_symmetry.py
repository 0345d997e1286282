"""Automorphism search: prescribed actions, full groups, relabeling behavior."""

import random

import pytest

from walkup import (CapacityError, Complex, DomainError, catalog,
                    automorphism_group, group_closure, group_elements,
                    is_automorphism, verify_aut_equality)
from walkup.catalog import presentation
from walkup.construct import orbit_shift_permutation
from walkup.generators import random_stacked_ball, standard_sphere
from walkup.symmetry import compose, inverse, permutation_order

RELABEL_SEED = 90125


def random_permutation(n, rng):
    p = list(range(n))
    rng.shuffle(p)
    return tuple(p)


class TestIsAutomorphism:
    def test_identity(self):
        K = catalog.get("B5_26")
        assert is_automorphism(K, tuple(range(K.num_vertices)))

    def test_shift_on_41_vertex_complex(self):
        K = catalog.get("A5_41")
        shift = tuple((i + 1) % 41 for i in range(41))
        assert is_automorphism(K, shift)

    def test_any_transposition_on_simplex_boundary(self):
        S = standard_sphere(4)
        p = list(range(6))
        p[0], p[3] = p[3], p[0]
        assert is_automorphism(S, tuple(p))

    def test_non_automorphism(self):
        K = catalog.get("A5_21")
        p = list(range(21))
        p[0], p[1] = p[1], p[0]
        assert not is_automorphism(K, tuple(p))

    def test_length_mismatch_raises(self):
        with pytest.raises(DomainError):
            is_automorphism(standard_sphere(2), (0, 1, 2))

    def test_non_bijection_raises(self):
        with pytest.raises(DomainError):
            is_automorphism(standard_sphere(2), (0, 0, 1, 2))


class TestAutomorphismGroup:
    def test_expected_orders(self):
        for name in ("A5_21", "B5_21", "B5_26", "A5_41",
                     "M4_21", "N4_21", "N4_26", "M4_41"):
            desc = automorphism_group(catalog.get(name))
            want = catalog.expected(name)
            assert desc.order == want.aut_order, name
            assert desc.structure == want.aut_structure, name

    def test_simplex_boundary_full_symmetric_group(self):
        desc = automorphism_group(standard_sphere(4))
        assert desc.order == 720
        assert desc.structure is None  # not cyclic

    def test_generators_are_automorphisms_and_generate(self):
        for name in ("B5_26", "M4_21"):
            K = catalog.get(name)
            desc = automorphism_group(K)
            for g in desc.generators:
                assert is_automorphism(K, g)
            assert len(group_closure(desc.generators, K.num_vertices)) \
                == desc.order

    def test_every_reported_element_is_an_automorphism(self):
        for K in (catalog.get("A5_21"), standard_sphere(3)):
            for p in group_elements(K):
                assert is_automorphism(K, p)

    def test_known_non_cyclic_group_orders(self):
        from walkup.generators import cross_polytope_boundary
        # signed axis permutations: 2^d * d!
        assert automorphism_group(cross_polytope_boundary(3)).order == 48
        assert automorphism_group(cross_polytope_boundary(4)).order == 384
        # interchangeable components: order 3! * 3! * 2
        two = Complex([(0, 1, 2), (3, 4, 5)])
        assert automorphism_group(two).order == 72
        # dihedral symmetry of the square
        c4 = Complex([(0, 1), (1, 2), (2, 3), (0, 3)])
        assert automorphism_group(c4).order == 8

    def test_prescribed_orbit_generator_is_found(self):
        for name in ("A5_21", "B5_21", "B5_26", "A5_41"):
            K = catalog.get(name)
            shift = orbit_shift_permutation(presentation(name))
            assert is_automorphism(K, shift)
            assert shift in group_elements(K)

    def test_capacity_guard(self):
        big = random_stacked_ball(2, 70, seed=0)
        dense = big.relabeled({v: i for i, v in enumerate(big.vertices)})
        with pytest.raises(CapacityError):
            automorphism_group(dense)

    def test_non_dense_ids_rejected(self):
        K = Complex([(0, 2, 3)])
        with pytest.raises(DomainError):
            automorphism_group(K)

    def test_trivial_group(self):
        # a star with arms of pairwise different lengths has no symmetry
        K = Complex([(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6)])
        desc = automorphism_group(K)
        assert desc.order == 1
        assert desc.structure == "Z_1"
        assert desc.generators == ()

    def test_determinism_across_recomputation(self):
        K = catalog.get("B5_26")
        first = automorphism_group(K).to_dict()
        automorphism_group.cache_clear()
        second = automorphism_group(K).to_dict()
        assert first == second


class TestRelabeling:
    def test_order_invariant_under_relabeling(self):
        rng = random.Random(RELABEL_SEED)
        K = catalog.get("A5_21")
        base = automorphism_group(K).order
        for _ in range(5):
            q = random_permutation(21, rng)
            moved = K.relabeled(q)
            assert automorphism_group(moved).order == base

    def test_conjugation_of_element_sets(self):
        rng = random.Random(RELABEL_SEED + 1)
        K = catalog.get("A5_21")
        elements = group_elements(K)
        q = random_permutation(21, rng)
        moved = K.relabeled(q)
        conjugated = {compose(q, compose(p, inverse(q))) for p in elements}
        assert group_elements(moved) == conjugated

    def test_small_complex_conjugation(self):
        rng = random.Random(RELABEL_SEED + 2)
        S = standard_sphere(2)
        elements = group_elements(S)
        assert len(elements) == 24
        q = random_permutation(4, rng)
        assert group_elements(S.relabeled(q)) == \
            {compose(q, compose(p, inverse(q))) for p in elements}


class TestAutEquality:
    def test_equality_for_all_catalog_five_complexes(self, five_complexes):
        for K in five_complexes.values():
            assert verify_aut_equality(K)

    def test_easy_inclusion(self, five_complexes):
        for K in five_complexes.values():
            boundary_elements = group_elements(K.boundary_complex())
            assert group_elements(K) <= boundary_elements

    def test_dimension_guard(self):
        with pytest.raises(DomainError):
            verify_aut_equality(standard_sphere(3))


class TestPermutationHelpers:
    def test_order_and_inverse(self):
        p = (1, 2, 0, 4, 3)
        assert permutation_order(p) == 6
        assert compose(p, inverse(p)) == (0, 1, 2, 3, 4)
