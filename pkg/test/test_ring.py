import itertools

import pytest

from conftest import cyclic_ideals
from ring_graphs.errors import CapExceededError, DomainError
from ring_graphs.limits import Limits
from ring_graphs.ring import (
    Ideal,
    RingSpec,
    annihilator,
    annihilator_oracle,
    classify,
    crt_decomposition,
    crt_image,
    enumerate_ideals,
    ideal_elements,
    ideal_sum,
    intersect,
    intersect_oracle,
    is_comultiplication,
    is_contained,
    is_coreduced,
    is_coreduced_oracle,
    is_maximal,
    is_minimal,
    is_prime_ideal,
    is_prime_ideal_oracle,
    is_second,
    is_second_oracle,
    is_sum_of_two_fields,
    is_sum_of_two_minimal,
    maximal_ideals,
    maximal_ideals_by_scan,
    minimal_ideals,
    minimal_ideals_by_scan,
    permute_components,
    ring_elements,
    second_ideals,
    second_socle,
    sum_oracle,
    vertices,
)
from ring_graphs.ring import _element_table
from ring_graphs.theorems import product_family

SMALL_CYCLIC = [RingSpec.cyclic(n) for n in range(2, 121)]
SMALL_PRODUCTS = product_family(64)


class TestRingSpec:
    @pytest.mark.parametrize(
        ("spec", "components"),
        [("24", (24,)), ("4x2x9", (4, 2, 9)), (" 12 ", (12,)), ("2x2", (2, 2))],
    )
    def test_parse(self, spec, components):
        assert RingSpec.parse(spec).components == components

    @pytest.mark.parametrize("spec", ["", "4x", "x4", "1", "4x1", "abc", "0", "-4", "4*2"])
    def test_parse_rejects(self, spec):
        with pytest.raises(DomainError):
            RingSpec.parse(spec)

    def test_str_round_trips_the_spec(self):
        assert str(RingSpec.parse("4x2x9")) == "4x2x9"

    def test_order_and_identity_ideals(self):
        ring = RingSpec.parse("4x9")
        assert ring.order == 36
        assert ring.zero == Ideal((4, 9))
        assert ring.unit == Ideal((1, 1))
        assert not ring.is_cyclic

    def test_ideal_normalizes_generators(self):
        ring = RingSpec.cyclic(24)
        assert ring.ideal(16) == Ideal((8,))
        assert ring.ideal(0) == ring.zero
        with pytest.raises(DomainError):
            ring.ideal(2, 3)

    def test_render(self):
        assert Ideal((6,)).render() == "<6>"
        assert Ideal((2, 1, 9)).render() == "(2,1,9)"


class TestLattice:
    def test_enumerate_cyclic(self):
        assert enumerate_ideals(RingSpec.cyclic(12)) == cyclic_ideals(12, 1, 2, 3, 4, 6, 12)

    def test_vertices(self):
        assert vertices(RingSpec.cyclic(12)) == cyclic_ideals(12, 2, 3, 4, 6)
        assert vertices(RingSpec.parse("2x2")) == [Ideal((1, 2)), Ideal((2, 1))]
        assert vertices(RingSpec.cyclic(7)) == []

    def test_enumeration_is_sorted_and_complete(self):
        ring = RingSpec.parse("4x2x9")
        ideals = enumerate_ideals(ring)
        assert ideals == sorted(set(ideals))
        assert len(ideals) == 3 * 2 * 3

    def test_ideal_count_cap(self):
        with pytest.raises(CapExceededError) as exc_info:
            enumerate_ideals(RingSpec.cyclic(12), Limits(ideal_count=5))
        assert exc_info.value.cap_name == "ideal_count"
        assert exc_info.value.value == 6

    def test_operations_on_z24(self):
        ring = RingSpec.cyclic(24)
        two, three, four, six, eight = cyclic_ideals(24, 2, 3, 4, 6, 8)
        assert intersect(ring, four, six) == ring.ideal(12)
        assert ideal_sum(ring, four, six) == two
        assert annihilator(ring, eight) == three
        assert is_contained(eight, four)
        assert not is_contained(four, eight)

    def test_operations_on_product(self):
        ring = RingSpec.parse("4x6")
        first, second = Ideal((2, 3)), Ideal((4, 2))
        assert intersect(ring, first, second) == Ideal((4, 6))
        assert ideal_sum(ring, first, second) == Ideal((2, 1))
        assert annihilator(ring, first) == Ideal((2, 2))

    def test_lattice_laws(self):
        for ring in (RingSpec.cyclic(72), RingSpec.parse("4x6")):
            ideals = enumerate_ideals(ring)
            for a, b in itertools.product(ideals, repeat=2):
                meet, join = intersect(ring, a, b), ideal_sum(ring, a, b)
                assert meet == intersect(ring, b, a)
                assert join == ideal_sum(ring, b, a)
                assert is_contained(meet, a) and is_contained(a, join)
                assert intersect(ring, a, join) == a
                assert ideal_sum(ring, a, meet) == a

    def test_annihilator_laws(self):
        for ring in (RingSpec.cyclic(360), RingSpec.parse("8x3x9")):
            ideals = enumerate_ideals(ring)
            for a in ideals:
                assert annihilator(ring, annihilator(ring, a)) == a
            for a, b in itertools.product(ideals, repeat=2):
                assert annihilator(ring, ideal_sum(ring, a, b)) == intersect(
                    ring, annihilator(ring, a), annihilator(ring, b)
                )
                if is_contained(a, b):
                    assert is_contained(annihilator(ring, b), annihilator(ring, a))

    def test_finite_rings_are_comultiplication(self):
        assert is_comultiplication(RingSpec.cyclic(24))
        assert is_comultiplication(RingSpec.parse("4x2x9"))


class TestPredicates:
    @pytest.mark.parametrize(
        ("n", "seconds"),
        [(24, [8, 12]), (12, [4, 6]), (30, [6, 10, 15]), (16, [8]), (4, [2])],
    )
    def test_second_ideals_of_z_n(self, n, seconds):
        assert second_ideals(RingSpec.cyclic(n)) == cyclic_ideals(n, *seconds)

    def test_second_on_product(self):
        ring = RingSpec.parse("4x3")
        assert is_second(ring, Ideal((2, 3)))
        assert is_second(ring, Ideal((4, 1)))
        assert not is_second(ring, Ideal((1, 3)))
        assert not is_second(ring, Ideal((2, 1)))
        assert not is_second(ring, ring.zero)

    def test_field_is_second_over_itself(self):
        ring = RingSpec.cyclic(7)
        assert is_second(ring, ring.unit)
        assert is_second_oracle(ring, ring.unit)
        assert second_ideals(ring) == []

    def test_prime_ideals(self):
        ring = RingSpec.cyclic(12)
        assert [d for d in (1, 2, 3, 4, 6, 12) if is_prime_ideal(ring, ring.ideal(d))] == [2, 3]
        assert is_prime_ideal(RingSpec.cyclic(5), RingSpec.cyclic(5).zero)
        assert is_prime_ideal(RingSpec.parse("2x3"), Ideal((1, 3)))
        assert not is_prime_ideal(RingSpec.parse("2x3"), Ideal((2, 3)))

    def test_minimal_and_maximal(self):
        ring = RingSpec.cyclic(24)
        assert minimal_ideals(ring) == cyclic_ideals(24, 8, 12)
        assert maximal_ideals(ring) == cyclic_ideals(24, 2, 3)
        assert is_minimal(ring, ring.ideal(12))
        assert not is_minimal(ring, ring.ideal(4))
        assert is_maximal(ring, ring.ideal(3))
        assert minimal_ideals(RingSpec.cyclic(7)) == []
        assert not is_minimal(RingSpec.cyclic(7), RingSpec.cyclic(7).unit)

    def test_minimal_and_maximal_match_scans(self):
        for ring in SMALL_CYCLIC + SMALL_PRODUCTS:
            assert minimal_ideals(ring) == minimal_ideals_by_scan(ring)
            assert maximal_ideals(ring) == maximal_ideals_by_scan(ring)

    def test_minimal_ideals_are_second(self):
        for ring in SMALL_CYCLIC + SMALL_PRODUCTS:
            for ideal in minimal_ideals(ring):
                assert is_second(ring, ideal)

    @pytest.mark.parametrize(("n", "socle"), [(24, 4), (30, 1), (7, 7), (12, 2), (16, 8), (36, 6)])
    def test_second_socle(self, n, socle):
        ring = RingSpec.cyclic(n)
        assert second_socle(ring) == ring.ideal(socle)

    def test_coreduced(self):
        assert is_coreduced(RingSpec.cyclic(30))
        assert not is_coreduced(RingSpec.cyclic(12))
        assert is_coreduced(RingSpec.parse("2x3x5"))
        assert not is_coreduced(RingSpec.parse("2x4"))

    def test_sum_of_two_minimal(self):
        assert is_sum_of_two_minimal(RingSpec.cyclic(6))
        assert is_sum_of_two_minimal(RingSpec.parse("2x3"))
        assert not is_sum_of_two_minimal(RingSpec.cyclic(12))
        assert not is_sum_of_two_minimal(RingSpec.cyclic(30))
        assert not is_sum_of_two_minimal(RingSpec.cyclic(8))

    def test_sum_of_two_fields(self):
        assert is_sum_of_two_fields(RingSpec.cyclic(15))
        assert is_sum_of_two_fields(RingSpec.parse("2x2"))
        assert not is_sum_of_two_fields(RingSpec.cyclic(12))

    def test_classify(self):
        ring = RingSpec.cyclic(12)
        flags = classify(ring, ring.ideal(6)).to_dict()
        assert flags == {
            "ideal": "<6>",
            "zero": False,
            "unit": False,
            "second": True,
            "prime": False,
            "minimal": True,
            "maximal": False,
        }


class TestOracles:
    def test_second_and_prime_match_oracle(self):
        for ring in SMALL_CYCLIC + SMALL_PRODUCTS:
            for ideal in enumerate_ideals(ring):
                assert is_second(ring, ideal) == is_second_oracle(ring, ideal), (ring, ideal)
                assert is_prime_ideal(ring, ideal) == is_prime_ideal_oracle(ring, ideal), (ring, ideal)

    def test_coreduced_matches_oracle(self):
        for ring in SMALL_CYCLIC + SMALL_PRODUCTS:
            assert is_coreduced(ring) == is_coreduced_oracle(ring), ring

    def test_annihilator_matches_oracle(self):
        for ring in [RingSpec.cyclic(n) for n in (12, 36, 60, 64)] + SMALL_PRODUCTS:
            for ideal in enumerate_ideals(ring):
                assert annihilator_oracle(ring, ideal) == ideal_elements(ring, annihilator(ring, ideal))

    def test_meet_and_join_match_oracle(self):
        for ring in (RingSpec.cyclic(36), RingSpec.parse("4x6"), RingSpec.parse("2x2x2")):
            ideals = enumerate_ideals(ring)
            for a, b in itertools.product(ideals, repeat=2):
                assert intersect(ring, a, b) == intersect_oracle(ring, a, b)
                assert ideal_sum(ring, a, b) == sum_oracle(ring, a, b)

    def test_element_table_rows_follow_enumeration(self):
        for ring in (RingSpec.cyclic(12), RingSpec.parse("2x3x4")):
            table, _, _ = _element_table(ring)
            assert [tuple(row) for row in table.tolist()] == list(ring_elements(ring))
            assert not table.flags.writeable

    @pytest.mark.parametrize("spec", ["720", "960", "997", "2x2x2x2x2", "4x4x8"])
    def test_oracles_on_large_rings(self, spec):
        ring = RingSpec.parse(spec)
        for ideal in enumerate_ideals(ring):
            assert is_second(ring, ideal) == is_second_oracle(ring, ideal), ideal
            assert is_prime_ideal(ring, ideal) == is_prime_ideal_oracle(ring, ideal), ideal
        assert is_coreduced(ring) == is_coreduced_oracle(ring)

    def test_oracle_order_cap(self):
        ring = RingSpec.cyclic(64)
        with pytest.raises(CapExceededError):
            is_second_oracle(ring, ring.ideal(32), Limits(oracle_order=32))

    @pytest.mark.slow
    def test_oracles_on_full_range(self):
        rings = [RingSpec.cyclic(n) for n in range(2, 1001)] + product_family(1024)
        for ring in rings:
            for ideal in enumerate_ideals(ring):
                assert is_second(ring, ideal) == is_second_oracle(ring, ideal), (ring, ideal)
                assert is_prime_ideal(ring, ideal) == is_prime_ideal_oracle(ring, ideal), (ring, ideal)
            assert is_coreduced(ring) == is_coreduced_oracle(ring), ring


class TestRingMaps:
    def test_crt_decomposition(self):
        assert crt_decomposition(360).components == (8, 9, 5)
        assert crt_decomposition(7).components == (7,)

    def test_crt_image(self):
        decomposed = crt_decomposition(12)
        assert crt_image(decomposed, Ideal((2,))) == Ideal((2, 1))
        assert crt_image(decomposed, Ideal((6,))) == Ideal((2, 3))
        assert crt_image(decomposed, Ideal((12,))) == decomposed.zero
        with pytest.raises(DomainError):
            crt_image(decomposed, Ideal((2, 1)))

    def test_crt_image_is_a_lattice_isomorphism(self):
        ring = RingSpec.cyclic(360)
        decomposed = crt_decomposition(360)
        images = {ideal: crt_image(decomposed, ideal) for ideal in enumerate_ideals(ring)}
        assert sorted(images.values()) == enumerate_ideals(decomposed)
        for a, b in itertools.combinations(enumerate_ideals(ring), 2):
            assert images[intersect(ring, a, b)] == intersect(decomposed, images[a], images[b])
            assert images[ideal_sum(ring, a, b)] == ideal_sum(decomposed, images[a], images[b])

    def test_permute_components(self):
        ring = RingSpec.parse("2x4")
        permuted, mapping = permute_components(ring, (1, 0))
        assert permuted.components == (4, 2)
        assert mapping[Ideal((1, 2))] == Ideal((2, 1))
        assert sorted(mapping.values()) == enumerate_ideals(permuted)
        with pytest.raises(DomainError):
            permute_components(ring, (0, 0))
