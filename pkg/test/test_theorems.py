import pytest

from conftest import cyclic_edges
from constant import ClaimStatus, GraphKind
from ring_graphs import builders
from ring_graphs.arith import is_prime
from ring_graphs.builders import build_sii
from ring_graphs.common_utils import parse_claim_list
from ring_graphs.errors import DomainError, UnknownClaimError
from ring_graphs.limits import Limits
from ring_graphs.ring import RingSpec
from ring_graphs.theorems import (
    CLAIMS,
    Citation,
    ClaimResult,
    claim_ids,
    cyclic_family,
    expected_figure,
    golden_rings,
    product_family,
    ring_family,
    sweep,
    verify_claim,
)
from ring_graphs.theorems._figures import evaluate_label, shape_of

EXPECTED_CLAIMS = [
    "D-sii",
    "E-star",
    "P-girth-a",
    "P-girth-b",
    "R-sub",
    "R-euler",
    "T-univ",
    "R-socle",
    "C-socle",
    "T-isol",
    "T-comp",
    "C-comp-Zn",
    "E-noncomplete",
    "T-disc-Zn",
    "T-conn",
    "C-comult",
    "T-pis-conn",
    "T-girth3",
    "C-edge-sec",
    "T-count",
    "C-2k",
    "T-dom",
    "R-dom-strict",
    "P-iso-rings",
    "P-ann-adj",
    "T-ann-iso",
    "C-ann-iso-Zn",
    "E-fig",
]


def verify(claim_id, spec, limits=None):
    ring = RingSpec.parse(spec)
    return verify_claim(claim_id, ring) if limits is None else verify_claim(claim_id, ring, limits)


class TestRegistry:
    def test_every_claim_is_registered(self):
        assert set(EXPECTED_CLAIMS) <= set(claim_ids())
        assert "E-int" in claim_ids()
        assert claim_ids() == list(CLAIMS)

    def test_unknown_claim(self):
        with pytest.raises(UnknownClaimError):
            verify("X-none", "12")

    def test_failure_needs_a_witness(self):
        with pytest.raises(DomainError):
            ClaimResult("T-conn", "12", ClaimStatus.FAIL)

    def test_integers_are_out_of_scope(self):
        for spec in ("12", "7", "2x2"):
            result = verify("E-int", spec)
            assert result.status is ClaimStatus.SKIPPED
            assert result.reason == "infinite vertex set"

    def test_cyclic_only_claims_skip_products(self):
        result = verify("T-disc-Zn", "2x3")
        assert result.status is ClaimStatus.SKIPPED
        assert result.reason == "cyclic rings only"

    def test_fields_have_nothing_to_check(self):
        result = verify("T-conn", "7")
        assert result.status is ClaimStatus.SKIPPED
        assert result.reason == "no vertices"

    def test_result_to_dict(self):
        assert verify("T-disc-Zn", "15").to_dict() == {
            "claim": "T-disc-Zn",
            "ring": "15",
            "status": "pass",
            "witness": None,
            "reason": None,
            "notes": [],
            "citation": {"items": ["2.799"], "quote": "disconnected if and only if n=pq"},
        }

    def test_deterministic(self):
        ring = RingSpec.cyclic(72)
        for claim_id in claim_ids():
            assert verify_claim(claim_id, ring).to_dict() == verify_claim(claim_id, ring).to_dict()

    def test_every_numbered_item_has_a_claim(self):
        covered = {}
        for claim_id, claim_obj in CLAIMS.items():
            for item in claim_obj.citation.items:
                covered.setdefault(item, []).append(claim_id)
        for item in [f"2.{i}" for i in range(1, 20)]:
            assert item in covered, item
        assert covered["2.1"] == ["D-sii"]
        assert covered["2.5"] == ["T-isol", "T-pis-conn"]
        assert covered["2.17"] == ["T-ann-iso"]
        assert all(claim_obj.citation.quote for claim_obj in CLAIMS.values())

    def test_citation_needs_items_and_quote(self):
        with pytest.raises(DomainError):
            Citation((), "quote")
        with pytest.raises(DomainError):
            Citation(("2.1",), "")


def ideal_named(ring, name):
    return ring.ideal(int(name.strip("<>")))


class TestBrokenGraph:
    """Claims checked against an SII graph built from a wrong second-ideal test."""

    @pytest.fixture(autouse=True)
    def nonzero_is_second(self, monkeypatch):
        monkeypatch.setattr(builders, "is_second", lambda ring, ideal: ideal != ring.zero)

    def test_definition_fails(self):
        ring = RingSpec.cyclic(16)
        result = verify_claim("D-sii", ring)
        assert result.status is ClaimStatus.FAIL
        assert result.witness["adjacent"] is True
        assert result.witness["intersection_second"] is False
        a, b = (ideal_named(ring, name) for name in result.witness["pair"])
        assert build_sii(ring).are_adjacent(a, b)

    def test_star_fails(self):
        ring = RingSpec.cyclic(16)
        result = verify_claim("E-star", ring)
        assert result.status is ClaimStatus.FAIL
        assert result.witness["center"] == "<8>"
        assert ["<2>", "<4>"] in result.witness["stray_edges"]
        graph = build_sii(ring)
        for edge in result.witness["stray_edges"]:
            assert "<8>" not in edge
            assert graph.are_adjacent(*(ideal_named(ring, name) for name in edge))

    def test_completeness_fails(self):
        ring = RingSpec.cyclic(16)
        result = verify_claim("T-comp", ring)
        assert result.status is ClaimStatus.FAIL
        assert result.witness["complete"] is True
        assert build_sii(ring).is_complete()
        assert result.witness["minimal"] == ["<8>"]
        assert result.witness["non_second_not_maximal"] == ["<4>"]

    @pytest.mark.parametrize("n", [24, 36])
    def test_annihilator_isomorphism_fails(self, n):
        ring = RingSpec.cyclic(n)
        result = verify_claim("T-ann-iso", ring)
        assert result.status is ClaimStatus.FAIL
        images = [ideal_named(ring, name) for name in result.witness["images"]]
        assert build_sii(ring).are_adjacent(*images) != result.witness["adjacent_in_source"]


class TestClaims:
    @pytest.mark.parametrize("spec", ["16", "24", "36", "30", "2x4", "2x2x2", "3x9"])
    def test_adjacency_matches_element_level_definition(self, spec):
        assert verify("D-sii", spec).status is ClaimStatus.PASS

    @pytest.mark.parametrize("spec", ["15", "6", "12", "30", "36"])
    def test_disconnected_exactly_at_semiprimes(self, spec):
        assert verify("T-disc-Zn", spec).status is ClaimStatus.PASS

    def test_sum_of_two_minimal_ideals_is_disconnected(self):
        assert verify("T-conn", "2x2").status is ClaimStatus.PASS

    def test_figure_of_z36(self):
        result = verify("E-fig", "36")
        assert result.status is ClaimStatus.PASS
        assert result.notes == ("pis: 12 edges matched", "sii: 12 edges matched")

    def test_figure_of_z12_has_no_pis_drawing(self):
        assert verify("E-fig", "12").notes == ("sii: 4 edges matched",)

    def test_no_figure_for_other_shapes(self):
        result = verify("E-fig", "60")
        assert result.status is ClaimStatus.SKIPPED
        assert result.reason == "no drawing for this ring shape"

    def test_star(self):
        assert verify("E-star", "16").status is ClaimStatus.PASS
        assert verify("E-star", "12").reason == "not a prime power"

    def test_triangles(self):
        assert verify("P-girth-a", "30").status is ClaimStatus.PASS
        assert verify("P-girth-a", "210").status is ClaimStatus.PASS
        assert verify("P-girth-b", "24").status is ClaimStatus.PASS
        assert verify("P-girth-b", "120").status is ClaimStatus.PASS
        assert verify("P-girth-b", "36").status is ClaimStatus.SKIPPED

    def test_non_induced_pair(self):
        result = verify("R-sub", "24")
        assert result.status is ClaimStatus.PASS
        assert result.notes == ("non-induced pair <3>, <6>",)

    def test_socle_converse_reading(self):
        result = verify("C-socle", "12")
        assert result.status is ClaimStatus.PASS
        assert len(result.notes) == 1
        assert result.notes[0].startswith("literal converse fails")

    def test_socle_self_pair(self):
        result = verify("R-socle", "16")
        assert result.status is ClaimStatus.PASS
        assert result.notes == ("self-pair excluded",)
        assert verify("R-socle", "30").reason == "coreduced"

    @pytest.mark.parametrize(("spec", "status"), [("30", "pass"), ("36", "pass"), ("210", "pass"), ("6", "skipped")])
    def test_eulerian(self, spec, status):
        result = verify("R-euler", spec)
        assert result.status.value == status
        if status == "skipped":
            assert result.reason == "edgeless"

    def test_eulerian_records_prime_count(self):
        assert verify("R-euler", "30").notes == ("3 distinct prime factors",)

    def test_domination(self):
        for spec in ("12", "30", "24", "36", "2x2", "4x2x9"):
            assert verify("T-dom", spec).status is ClaimStatus.PASS, spec
        assert verify("R-dom-strict", "30").status is ClaimStatus.PASS
        assert verify("R-dom-strict", "105").status is ClaimStatus.PASS

    def test_domination_capped(self):
        result = verify("T-dom", "30", Limits(domination_vertices=3))
        assert result.status is ClaimStatus.CAPPED
        assert "domination_vertices" in result.reason

    def test_ring_isomorphisms(self):
        assert verify("P-iso-rings", "12").notes == ("explicit map onto SII(4x3) verified",)
        assert verify("P-iso-rings", "2x4").notes == ("explicit map onto SII(4x2) verified",)
        assert verify("P-iso-rings", "16").reason == "single prime-power component"

    def test_annihilator_claims(self):
        for spec in ("24", "36", "2x2", "4x2", "2x3x4"):
            for claim_id in ("P-ann-adj", "T-ann-iso"):
                assert verify(claim_id, spec).status is ClaimStatus.PASS, (claim_id, spec)
        assert verify("C-ann-iso-Zn", "72").status is ClaimStatus.PASS


class TestFigures:
    def test_golden_rings(self):
        assert golden_rings() == [24, 36, 30, 12, 18]

    def test_shape_assignment(self):
        assert shape_of(18) == ("p2q", {"p": 3, "q": 2})
        assert shape_of(24) == ("p3q", {"p": 2, "q": 3})
        assert shape_of(30) == ("pqr", {"p": 2, "q": 3, "r": 5})
        assert shape_of(60) == (None, {})

    def test_z18_instance(self):
        expected_vertices, expected_edges = expected_figure(18, GraphKind.SII)
        assert expected_edges == cyclic_edges(18, [(9, 3), (3, 2), (3, 6), (2, 6)])
        assert len(expected_vertices) == 4
        assert expected_figure(18, GraphKind.PIS) is None

    def test_evaluate_label(self):
        assert evaluate_label("p^2q", {"p": 2, "q": 3}) == 12
        assert evaluate_label("pqr", {"p": 2, "q": 3, "r": 5}) == 30
        with pytest.raises(DomainError):
            evaluate_label("p2x", {"p": 2})
        with pytest.raises(DomainError):
            evaluate_label("r", {"p": 2})

    @pytest.mark.parametrize("n", [54, 40, 100, 42, 20, 225])
    def test_templates_generalize(self, n):
        assert verify("E-fig", str(n)).status is ClaimStatus.PASS


class TestFamilies:
    def test_cyclic_family(self):
        assert [str(ring) for ring in cyclic_family(5)] == ["2", "3", "4", "5"]
        with pytest.raises(DomainError):
            cyclic_family(1)

    def test_product_family(self):
        assert {str(ring) for ring in product_family(16)} == {
            "2x2",
            "2x2x2",
            "2x2x2x2",
            "2x2x3",
            "2x2x4",
            "2x3",
            "2x4",
            "2x5",
            "2x7",
            "2x8",
            "3x3",
            "3x4",
            "3x5",
            "4x4",
        }

    def test_ring_family_is_sorted_and_unique(self):
        rings = ring_family(6, 8, [RingSpec.parse("2x2"), RingSpec.parse("9")])
        assert [str(ring) for ring in rings] == ["2", "3", "2x2", "4", "5", "2x3", "6", "2x2x2", "2x4", "9"]

    def test_ring_family_rejects_small_nmax_with_products(self):
        with pytest.raises(DomainError):
            ring_family(1, 16)


class TestClaimList:
    def test_registry_order(self):
        assert parse_claim_list("T-conn, T-isol", claim_ids()) == ["T-isol", "T-conn"]

    def test_all(self):
        assert parse_claim_list("all", claim_ids()) == claim_ids()

    def test_duplicates(self):
        assert parse_claim_list("T-conn,T-conn", claim_ids()) == ["T-conn"]

    def test_empty(self):
        with pytest.raises(DomainError):
            parse_claim_list(" , ", claim_ids())


class TestSweep:
    def test_rejects_empty_family_and_unknown_ids(self):
        with pytest.raises(DomainError):
            sweep(None, [])
        with pytest.raises(UnknownClaimError):
            sweep(["X-none"], cyclic_family(4))

    def test_order_and_tallies(self):
        report = sweep(["T-conn", "T-isol"], ring_family(6, 4))
        assert [(r.ring, r.claim_id) for r in report.results][:4] == [
            ("2", "T-isol"),
            ("2", "T-conn"),
            ("3", "T-isol"),
            ("3", "T-conn"),
        ]
        assert report.ring_count == 6
        assert sum(report.summary.values()) == 12
        assert report.tallies["T-conn"]["skipped"] == 3

    def test_parallel_matches_serial(self):
        rings = ring_family(30, 16)
        assert sweep(None, rings, jobs=2).to_dict() == sweep(None, rings, jobs=1).to_dict()

    def test_no_failures_on_small_family(self):
        report = sweep(None, ring_family(60, 64))
        assert report.failures == []
        capped = {result.claim_id for result in report.results if result.status is ClaimStatus.CAPPED}
        assert capped <= {"T-dom"}

    def test_completeness_exactly_at_small_prime_powers(self):
        report = sweep(["C-comp-Zn"], cyclic_family(300))
        assert report.failures == []
        assert report.summary["skipped"] == sum(1 for n in range(2, 301) if is_prime(n))

    def test_disconnected_exactly_at_semiprimes(self):
        report = sweep(["T-disc-Zn", "T-conn"], cyclic_family(300))
        assert report.failures == []
        assert report.tallies["T-disc-Zn"]["pass"] == sum(1 for n in range(2, 301) if not is_prime(n))

    @pytest.mark.slow
    def test_full_claim_sweep(self):
        report = sweep(None, ring_family(200, 256), jobs=4)
        assert report.failures == []
        capped = {result.claim_id for result in report.results if result.status is ClaimStatus.CAPPED}
        assert capped <= {"T-dom"}

    @pytest.mark.slow
    def test_cyclic_suites_to_2000(self):
        ids = ["C-comp-Zn", "T-disc-Zn", "T-conn", "C-ann-iso-Zn", "R-euler", "T-girth3", "T-count", "C-2k"]
        report = sweep(ids, cyclic_family(2000), jobs=4)
        assert report.failures == []
