from typing import Any, Callable, Dict

import pytest
from pytest_mock import MockFixture

from gext_lab.config import RunConfig
from gext_lab.exactcore.poly import from_integers
from gext_lab.exactcore.scalar import RationalField
from gext_lab.galoislab import checks, controller
from gext_lab.galoislab.context import GaloisContext
from gext_lab.galoislab.groupiso import element_orders, find_isomorphism, quotient_table, subtable
from gext_lab.galoislab.verdict import Status, TheoremVerdict, failed, passed, skipped
from gext_lab.helpers.errors import GextError, TheoremViolation
from gext_lab.models.api_spec import THEOREM_LABELS, emit_json
from gext_lab.tower.tower import FieldTower

Z4 = [[(a + b) % 4 for b in range(4)] for a in range(4)]
KLEIN = [[a ^ b for b in range(4)] for a in range(4)]

OK = (Status.PASS, Status.PROBABILISTIC_PASS)


class TestVerdict:
    def test_fail_needs_a_witness(self) -> None:
        with pytest.raises(ValueError):
            TheoremVerdict("double-centralizer", Status.FAIL)

    def test_failed_carries_witness(self) -> None:
        verdict = failed("double-centralizer", {"dimension": 3})
        assert verdict.failed
        assert verdict.witness == {"dimension": 3}

    def test_skipped_keeps_reason(self) -> None:
        verdict = skipped("orbit-minpoly", "not a G-extension")
        assert verdict.status is Status.SKIPPED
        assert verdict.detail == "not a G-extension"
        assert not verdict.failed

    def test_probabilistic_pass(self) -> None:
        assert passed("simple-subalgebras", probabilistic=True).status.value == "PROBABILISTIC-PASS"
        assert passed("simple-subalgebras").status.value == "PASS"


class TestGroupIsomorphism:
    def test_element_orders(self) -> None:
        assert element_orders(Z4) == [1, 4, 2, 4]
        assert element_orders(KLEIN) == [1, 2, 2, 2]

    def test_cyclic_is_not_klein(self) -> None:
        assert find_isomorphism(Z4, KLEIN) is None

    def test_relabelled_cyclic_group(self) -> None:
        relabel = [0, 3, 2, 1]
        permuted = [[relabel[Z4[relabel[a]][relabel[b]]] for b in range(4)] for a in range(4)]
        iso = find_isomorphism(Z4, permuted)
        assert iso is not None
        for a in range(4):
            for b in range(4):
                assert iso[Z4[a][b]] == permuted[iso[a]][iso[b]]

    def test_quotient_by_subgroup_of_order_two(self) -> None:
        quotient = quotient_table(Z4, [0, 2])
        assert quotient == [[0, 1], [1, 0]]

    def test_subtable(self) -> None:
        assert subtable(Z4, [0, 2]) == [[0, 1], [1, 0]]
        assert find_isomorphism(quotient_table(KLEIN, [0, 1]), subtable(Z4, [0, 2])) == [0, 1]


class TestChecks:
    @pytest.mark.parametrize("name", ["t1", "t3", "t4", "t6", "t8", "t9"])
    def test_always_checks_hold(self, context: Callable[[str], GaloisContext], name: str) -> None:
        ctx = context(name)
        for theorem_id, check in controller.ALWAYS:
            verdict = check(ctx)
            assert verdict.theorem_id == theorem_id
            assert verdict.status in OK, verdict.witness

    @pytest.mark.parametrize("name", ["t1", "t3", "t4", "t6", "t8", "t9"])
    def test_galois_checks_hold(self, context: Callable[[str], GaloisContext], name: str) -> None:
        ctx = context(name)
        assert ctx.galois
        for theorem_id, check in controller.GALOIS_ONLY:
            verdict = check(ctx)
            assert verdict.theorem_id == theorem_id
            assert verdict.status in OK, verdict.witness

    def test_pure_cubic_is_not_galois(self, context: Callable[[str], GaloisContext]) -> None:
        ctx = context("t2")
        assert not ctx.galois
        assert ctx.skew.dim == 3
        verdict = checks.is_g_extension(ctx)
        assert verdict.status is Status.PASS
        assert verdict.detail.startswith("not a G-extension")
        for _, check in controller.ALWAYS:
            assert check(ctx).status in OK

    @pytest.mark.parametrize(["name", "count"], [("t3", 5), ("t4", 2), ("t6", 3)])
    def test_correspondence_counts(self, context: Callable[[str], GaloisContext], name: str, count: int) -> None:
        verdict = checks.galois_correspondence(context(name))
        assert verdict.detail == f"{count} subgroups ↔ {count} subfields, order-reversing"

    @pytest.mark.slow
    def test_s3_correspondence(self, context: Callable[[str], GaloisContext]) -> None:
        ctx = context("t5")
        assert checks.galois_correspondence(ctx).detail == "6 subgroups ↔ 6 subfields, order-reversing"
        assert checks.galois_subfield_correspondence(ctx).detail == "3 Galois subfields ↔ 3 normal subgroups"
        assert checks.stable_skew_subalgebras(ctx).status is Status.PASS
        assert checks.restriction_sequence(ctx).status is Status.PASS

    @pytest.mark.slow
    def test_gf64_correspondence(self, context: Callable[[str], GaloisContext]) -> None:
        ctx = context("t7")
        assert checks.galois_correspondence(ctx).detail == "4 subgroups ↔ 4 subfields, order-reversing"
        assert checks.subfield_subalgebra_bijection(ctx).status is Status.PASS

    def test_orbit_minpoly(self, t3: FieldTower, config: RunConfig) -> None:
        ctx = GaloisContext(t3, config)
        theta = t3.generator(0) + t3.generator(1)
        assert checks.orbit_minpoly(ctx.group, theta) == from_integers(RationalField(), [1, 0, -10, 0, 1])

    def test_orbit_minpoly_of_ground_element(self, t8: FieldTower, config: RunConfig) -> None:
        ctx = GaloisContext(t8, config)
        poly = checks.orbit_minpoly(ctx.group, t8.lift(t8.K.gen))
        assert poly.degree == 1
        assert poly.field is t8.K

    def test_quotient_isomorphism(self, context: Callable[[str], GaloisContext]) -> None:
        ctx = context("t3")
        for i, H in enumerate(ctx.subgroups):
            evidence = checks.quotient_iso_check(ctx, i)
            assert evidence["kernel"] == list(H.elements)
            assert evidence["image_order"] == 4 // H.order
            assert len(evidence["isomorphism"]) == 4 // H.order

    def test_lattice_pairings(self, context: Callable[[str], GaloisContext]) -> None:
        ctx = context("t3")
        rows = controller.build_lattice(ctx)
        assert [(r.order, r.degree, r.skew_dim, r.centralizer_dim) for r in rows] == [
            (1, 4, 4, 4),
            (2, 2, 8, 8),
            (2, 2, 8, 8),
            (2, 2, 8, 8),
            (4, 1, 16, 16),
        ]


class TestController:
    def test_run_check_turns_violation_into_fail(self, mocker: MockFixture, context: Callable[[str], GaloisContext]) -> None:
        mock_logger = mocker.patch.object(controller, "logger")

        def broken(ctx: GaloisContext) -> TheoremVerdict:
            raise TheoremViolation("double-centralizer", "dimension mismatch", witness={"dimension": 3})

        verdict = controller.run_check("double-centralizer", broken, context("t1"))
        assert verdict.status is Status.FAIL
        assert verdict.witness == {"dimension": 3}
        assert mock_logger.warning.call_count == 1

    def test_run_check_turns_error_into_fail(self, context: Callable[[str], GaloisContext]) -> None:
        def broken(ctx: GaloisContext) -> TheoremVerdict:
            raise GextError("no conjugator")

        verdict = controller.run_check("noether-skolem", broken, context("t1"))
        assert verdict.failed
        assert verdict.witness == "no conjugator"
        assert verdict.detail == "GextError"

    def test_full_verify(self, t3: FieldTower, config: RunConfig) -> None:
        report = controller.full_verify(t3, config)
        assert not report.failed
        assert report.galois
        assert report.group_order == 4
        assert len(report.theorems) == len(controller.ALWAYS) + len(controller.GALOIS_ONLY)
        assert [v.theorem_id for v in report.theorems] == [i for i, _ in controller.ALWAYS + controller.GALOIS_ONLY]

    def test_full_verify_skips_galois_checks(self, t2: FieldTower, config: RunConfig) -> None:
        report = controller.full_verify(t2, config)
        assert not report.failed
        skipped_ids = {v.theorem_id for v in report.theorems if v.status is Status.SKIPPED}
        assert skipped_ids == {i for i, _ in controller.GALOIS_ONLY}
        assert all(v.detail == controller.NOT_GALOIS for v in report.theorems if v.status is Status.SKIPPED)

    def test_lattice_failure_fails_every_check(self, t3: FieldTower) -> None:
        report = controller.full_verify(t3, RunConfig(subgroup_cap=2))
        assert report.failed
        assert report.rows == []
        assert report.group_order == 4
        assert all(v.status is Status.FAIL and v.detail == "SubgroupCapExceeded" for v in report.theorems)

    def test_lattice_report_has_no_theorems(self, t4: FieldTower, config: RunConfig) -> None:
        report = controller.lattice_report(t4, config)
        assert report.theorems == []
        assert [row.degree for row in report.rows] == [3, 1]


class TestReport:
    def test_text_lines(self, t1: FieldTower, config: RunConfig) -> None:
        lines = controller.full_verify(t1, config).text_lines()
        assert lines[0] == "tower: base Q; s: ['-2/1', '0/1', '1/1']; ground Q"
        assert lines[1] == "G-extension: yes (|G| = 2)"
        assert any(line.startswith("PASS") and checks.NOETHER_SKOLEM in line for line in lines)
        assert any(line.startswith("assumption: ") for line in lines)

    def test_json_report(
        self,
        t3: FieldTower,
        config: RunConfig,
        assert_valid_report: Callable[[bytes], Dict[str, Any]],
        any: Any,
        any_string: Any,
    ) -> None:
        data = assert_valid_report(emit_json(controller.full_verify(t3, config)))
        assert data["theorems"][0] == {
            "id": checks.G_EXTENSION,
            "theorem": "Prop-A8May25",
            "status": "PASS",
            "detail": any_string,
        }
        assert data["subfields"][0] == {"subgroup_index": 0, "degree": 4, "minpoly": any, "primitive": any}
        assert data["galois"] is True
        assert data["group"]["order"] == 4
        assert [s["elements"] for s in data["subgroups"]][0] == [0]
        assert [f["degree"] for f in data["subfields"]] == [4, 2, 2, 2, 1]
        assert [p["skew_dim"] for p in data["pairings"]] == [4, 8, 8, 8, 16]
        assert all("witness" not in t for t in data["theorems"])
        assert data["config"]["random_seed"] == 1234

    def test_json_report_for_finite_field(
        self, t8: FieldTower, config: RunConfig, assert_valid_report: Callable[[bytes], Dict[str, Any]]
    ) -> None:
        data = assert_valid_report(emit_json(controller.full_verify(t8, config)))
        assert data["tower"]["ground"] == "i"
        assert data["subfields"][-1]["degree"] == 1

    def test_json_is_deterministic(self, tower: Callable[[str], FieldTower], config: RunConfig) -> None:
        first = emit_json(controller.full_verify(tower("t1"), config))
        second = emit_json(controller.full_verify(tower("t1"), config))
        assert first == second

    def test_json_carries_theorem_labels(
        self, t3: FieldTower, config: RunConfig, assert_valid_report: Callable[[bytes], Dict[str, Any]]
    ) -> None:
        data = assert_valid_report(emit_json(controller.full_verify(t3, config)))
        by_id = {t["id"]: t for t in data["theorems"]}
        assert by_id[checks.GALOIS_CORRESPONDENCE]["theorem"] == "Thm-1Jun25-3"
        assert by_id[checks.DOUBLE_CENTRALIZER]["theorem"] == "Thm-DCThm-1"
        assert "theorem" not in by_id[checks.SKEW_MULTIPLICATION]

    def test_every_label_names_a_scheduled_check(self) -> None:
        scheduled = {i for i, _ in controller.ALWAYS + controller.GALOIS_ONLY}
        assert set(THEOREM_LABELS) <= scheduled
