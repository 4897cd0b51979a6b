from typing import Callable, List, Tuple

from she_logging import logger

from gext_lab.config import RunConfig
from gext_lab.galoislab import checks
from gext_lab.galoislab.context import GaloisContext
from gext_lab.galoislab.verdict import TheoremVerdict, failed, skipped
from gext_lab.helpers.errors import GextError, TheoremViolation
from gext_lab.models.report import CorrespondenceReport, LatticeRow
from gext_lab.tower.tower import FieldTower

Check = Callable[[GaloisContext], TheoremVerdict]

NOT_GALOIS = "not a G-extension"

ALWAYS: List[Tuple[str, Check]] = [
    (checks.G_EXTENSION, checks.is_g_extension),
    (checks.FIXED_FIELD_GALOIS, checks.fixed_field_galois),
    (checks.SKEW_DIRECT_SUM, checks.skew_group_direct_sum),
    (checks.SKEW_MULTIPLICATION, checks.skew_group_multiplication),
    (checks.SKEW_CENTRAL_SIMPLE, checks.skew_group_central_simple),
    (checks.SKEW_MAXIMAL_SUBFIELD, checks.skew_group_maximal_subfield),
    (checks.SKEW_COMMUTANT, checks.skew_group_commutant),
    (checks.SKEW_BIMODULES, checks.skew_group_bimodules),
    (checks.MAXIMAL_SUBFIELD, checks.maximal_subfield),
    (checks.SKEW_SUBALGEBRAS, checks.skew_subalgebras),
    (checks.STABLE_SKEW_SUBALGEBRAS, checks.stable_skew_subalgebras),
    (checks.SUBALGEBRA_GROUP_RECOVERY, checks.subalgebra_group_recovery),
    (checks.DOUBLE_CENTRALIZER, checks.double_centralizer),
    (checks.CENTRALIZER_DIMENSION, checks.centralizer_dimension),
    (checks.SIMPLE_SUBALGEBRAS, checks.simple_subalgebras),
    (checks.CENTRALIZER_SIMPLE, checks.centralizer_simple),
    (checks.CENTRALIZER_BIJECTION, checks.centralizer_bijection),
    (checks.COMMUTANT_RECOVERS_SUBFIELD, checks.commutant_recovers_subfield),
    (checks.NOETHER_SKOLEM, checks.noether_skolem),
]

GALOIS_ONLY: List[Tuple[str, Check]] = [
    (checks.GALOIS_CORRESPONDENCE, checks.galois_correspondence),
    (checks.SUBALGEBRA_CORRESPONDENCE, checks.subfield_subalgebra_bijection),
    (checks.GALOIS_SUBFIELD_CORRESPONDENCE, checks.galois_subfield_correspondence),
    (checks.STABLE_SUBALGEBRA_CORRESPONDENCE, checks.stable_subalgebra_correspondence),
    (checks.NORMALITY_CRITERION, checks.normality_criterion),
    (checks.RELATIVE_G_EXTENSION, checks.relative_extension_check),
    (checks.ORBIT_MINPOLY, checks.orbit_minpoly_check),
    (checks.SPLITTING_FIELD, checks.splitting_check),
    (checks.RESTRICTION_SEQUENCE, checks.restriction_sequence),
]


def run_check(theorem_id: str, check: Check, ctx: GaloisContext) -> TheoremVerdict:
    try:
        verdict = check(ctx)
    except TheoremViolation as e:
        verdict = failed(theorem_id, e.witness if e.witness is not None else str(e), str(e))
    except GextError as e:
        verdict = failed(theorem_id, str(e), type(e).__name__)
    if verdict.failed:
        logger.warning(
            "Check %s failed: %s",
            theorem_id,
            verdict.detail,
            extra={"theorem_id": theorem_id, "witness": verdict.witness},
        )
    else:
        logger.debug("Check %s: %s", theorem_id, verdict.status.value)
    return verdict


def build_lattice(ctx: GaloisContext) -> List[LatticeRow]:
    L = ctx.tower.L
    rows = []
    for i, (H, handle, skew) in enumerate(zip(ctx.subgroups, ctx.subfields, ctx.crossed)):
        rows.append(
            LatticeRow(
                subgroup_index=i,
                elements=H.elements,
                normal=H.normal,
                degree=handle.degree,
                primitive=L.render(handle.primitive),
                minpoly=handle.minpoly.render(),
                skew_dim=skew.dim,
                centralizer_dim=ctx.centralizer(ctx.image(i)).dim,
            )
        )
    return rows


def _report(ctx: GaloisContext, rows: List[LatticeRow], theorems: List[TheoremVerdict]) -> CorrespondenceReport:
    return CorrespondenceReport(
        tower=ctx.tower.describe(),
        galois=ctx.galois,
        group_order=ctx.group.order,
        cayley=[list(row) for row in ctx.group.table],
        rows=rows,
        theorems=theorems,
        assumptions=list(ctx.tower.assumptions),
        config=ctx.config.to_dict(),
    )


def lattice_report(tower: FieldTower, config: RunConfig) -> CorrespondenceReport:
    """Lattices and pairings only, without theorem verdicts."""
    ctx = GaloisContext(tower, config)
    return _report(ctx, build_lattice(ctx), [])


def full_verify(tower: FieldTower, config: RunConfig) -> CorrespondenceReport:
    ctx = GaloisContext(tower, config)
    try:
        rows = build_lattice(ctx)
    except GextError as e:
        return _unfinished(ctx, e)
    theorems = [run_check(theorem_id, check, ctx) for theorem_id, check in ALWAYS]
    for theorem_id, check in GALOIS_ONLY:
        if ctx.galois:
            theorems.append(run_check(theorem_id, check, ctx))
        else:
            theorems.append(skipped(theorem_id, NOT_GALOIS))
    report = _report(ctx, rows, theorems)
    logger.info(
        "Verified tower of degree %d",
        ctx.n,
        extra={
            "tower_degree": ctx.n,
            "group_order": report.group_order,
            "galois": report.galois,
            "failed": [v.theorem_id for v in theorems if v.failed],
        },
    )
    return report


def _unfinished(ctx: GaloisContext, error: GextError) -> CorrespondenceReport:
    """Report for a tower whose group or lattice could not be computed."""
    logger.warning("Lattice computation failed: %s", error, extra={"tower_degree": ctx.n})
    theorems = [failed(theorem_id, str(error), type(error).__name__) for theorem_id, _ in ALWAYS + GALOIS_ONLY]
    group = ctx.__dict__.get("group")
    return CorrespondenceReport(
        tower=ctx.tower.describe(),
        galois=False if group is None else group.order == ctx.n,
        group_order=0 if group is None else group.order,
        cayley=[] if group is None else [list(row) for row in group.table],
        rows=[],
        theorems=theorems,
        assumptions=list(ctx.tower.assumptions),
        config=ctx.config.to_dict(),
    )
