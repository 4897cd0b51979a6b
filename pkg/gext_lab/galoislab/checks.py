"""One function per verified statement.

Each check reads what it needs from a :class:`GaloisContext` and returns a
single :class:`TheoremVerdict`.  Checks may raise ``GextError``; the
controller turns that into a FAIL for the check that raised.
"""
from typing import Any, Dict, List, Sequence, Tuple

from gext_lab.autgroup.group import AutGroup, orbit, subgroup_index
from gext_lab.autgroup.subfield import fixed_subspace, fixing_subgroup, is_g_stable, restriction_map
from gext_lab.csalg.conjugator import bimodule_hom_check, find_conjugator
from gext_lab.csalg.skew import (
    check_multiplication,
    g_stable_filter,
    group_part,
    is_g_stable_algebra,
)
from gext_lab.csalg.subalgebra import (
    PROBABILISTIC,
    Subalgebra,
    center,
    commutant_within,
    span_closure,
)
from gext_lab.exactcore.poly import DensePoly
from gext_lab.galoislab.context import GaloisContext
from gext_lab.galoislab.groupiso import find_isomorphism, quotient_table, subtable
from gext_lab.galoislab.verdict import TheoremVerdict, failed, passed
from gext_lab.helpers.errors import TheoremViolation
from gext_lab.tower.linalg import EchelonSpace

G_EXTENSION = "g-extension-criterion"
FIXED_FIELD_GALOIS = "fixed-field-galois"
SKEW_DIRECT_SUM = "skew-group-direct-sum"
SKEW_MULTIPLICATION = "skew-group-multiplication"
SKEW_CENTRAL_SIMPLE = "skew-group-central-simple"
SKEW_MAXIMAL_SUBFIELD = "skew-group-maximal-subfield"
SKEW_COMMUTANT = "skew-group-commutant"
SKEW_BIMODULES = "skew-group-bimodules"
MAXIMAL_SUBFIELD = "maximal-subfield"
SKEW_SUBALGEBRAS = "skew-subalgebras"
STABLE_SKEW_SUBALGEBRAS = "stable-skew-subalgebras"
SUBALGEBRA_GROUP_RECOVERY = "subalgebra-group-recovery"
DOUBLE_CENTRALIZER = "double-centralizer"
CENTRALIZER_DIMENSION = "centralizer-dimension"
SIMPLE_SUBALGEBRAS = "simple-subalgebras"
CENTRALIZER_SIMPLE = "centralizer-simple"
CENTRALIZER_BIJECTION = "centralizer-bijection"
COMMUTANT_RECOVERS_SUBFIELD = "commutant-recovers-subfield"
NOETHER_SKOLEM = "noether-skolem"
GALOIS_CORRESPONDENCE = "galois-correspondence"
SUBALGEBRA_CORRESPONDENCE = "subalgebra-correspondence"
GALOIS_SUBFIELD_CORRESPONDENCE = "galois-subfield-correspondence"
STABLE_SUBALGEBRA_CORRESPONDENCE = "stable-subalgebra-correspondence"
NORMALITY_CRITERION = "normality-criterion"
RELATIVE_G_EXTENSION = "relative-g-extension"
ORBIT_MINPOLY = "orbit-minpoly"
SPLITTING_FIELD = "splitting-field"
RESTRICTION_SEQUENCE = "restriction-sequence"


def is_g_extension(ctx: GaloisContext) -> TheoremVerdict:
    """|G| = [L:K] and dim L⋊G = dim E must agree."""
    order = ctx.group.order
    n = ctx.n
    skew_dim = ctx.skew.dim
    by_order = order == n
    by_dimension = skew_dim == n * n
    evidence = {"group_order": order, "degree": n, "skew_dim": skew_dim, "ambient_dim": n * n}
    if by_order != by_dimension:
        return failed(G_EXTENSION, evidence, "|G| = [L:K] and dim L⋊G = dim E disagree")
    label = "G-extension" if by_order else "not a G-extension"
    return passed(G_EXTENSION, f"{label}: |G| = {order}, [L:K] = {n}, dim L⋊G = {skew_dim}, dim E = {n * n}")


def fixed_field_galois(ctx: GaloisContext) -> TheoremVerdict:
    """L/L^G is a G-extension whatever K is."""
    group = ctx.group
    top = ctx.subfields[-1]
    fixing = fixing_subgroup(group, top)
    relative = ctx.n // top.degree
    if fixing != tuple(range(group.order)) or relative != group.order:
        return failed(
            FIXED_FIELD_GALOIS,
            {"fixing_subgroup": list(fixing), "relative_degree": relative, "group_order": group.order},
        )
    return passed(FIXED_FIELD_GALOIS, f"[L:L^G] = |G| = {group.order}")


def skew_group_direct_sum(ctx: GaloisContext) -> TheoremVerdict:
    skew = ctx.skew
    expected = ctx.n * (ctx.n // ctx.subfields[-1].degree)
    if skew.dim != expected:
        return failed(SKEW_DIRECT_SUM, {"dimension": skew.dim, "expected": expected})
    return passed(SKEW_DIRECT_SUM, f"dim L⋊G = {skew.dim} = [L:K]·[L:L^G]")


def skew_group_multiplication(ctx: GaloisContext) -> TheoremVerdict:
    check_multiplication(ctx.group)
    return passed(SKEW_MULTIPLICATION, "λg·μh = λ·g(μ)·gh on generators")


def skew_group_central_simple(ctx: GaloisContext) -> TheoremVerdict:
    """L⋊G is central simple over L^G."""
    algebra = ctx.skew.algebra
    fixed = ctx.image(len(ctx.subgroups) - 1)
    z = center(algebra)
    if z != fixed:
        return failed(SKEW_CENTRAL_SIMPLE, {"center_dim": z.dim, "fixed_field_degree": fixed.dim})
    verdict = ctx.simplicity(algebra)
    if not verdict.simple:
        return failed(SKEW_CENTRAL_SIMPLE, {"reason": verdict.reason})
    return passed(
        SKEW_CENTRAL_SIMPLE,
        f"center = L^G of degree {z.dim}; simple ({verdict.method})",
        probabilistic=verdict.method == PROBABILISTIC,
    )


def skew_group_maximal_subfield(ctx: GaloisContext) -> TheoremVerdict:
    """C_{L⋊G}(L) = L."""
    commutant = commutant_within(ctx.skew.algebra, ctx.generator_matrices, "C_{L⋊G}(L)")
    if commutant != ctx.field_image:
        return failed(SKEW_MAXIMAL_SUBFIELD, {"commutant_dim": commutant.dim, "degree": ctx.n})
    return passed(SKEW_MAXIMAL_SUBFIELD, f"C_(L⋊G)(L) = L, dimension {ctx.n}")


def skew_group_commutant(ctx: GaloisContext) -> TheoremVerdict:
    """The endomorphisms of L commuting with L⋊G are exactly L^G."""
    commutant = ctx.centralizer(ctx.skew.algebra)
    fixed = ctx.image(len(ctx.subgroups) - 1)
    if commutant != fixed:
        return failed(SKEW_COMMUTANT, {"commutant_dim": commutant.dim, "fixed_field_degree": fixed.dim})
    return passed(SKEW_COMMUTANT, f"End_(L⋊G)(L) = L^G, dimension {fixed.dim}")


def skew_group_bimodules(ctx: GaloisContext) -> TheoremVerdict:
    """The components L·g are pairwise non-isomorphic simple L-bimodules."""
    order = ctx.group.order
    dims = [[bimodule_hom_check(ctx.skew, g, h)[1] for h in range(order)] for g in range(order)]
    identity = [[int(g == h) for h in range(order)] for g in range(order)]
    if dims != identity:
        return failed(SKEW_BIMODULES, {"dimensions": dims})
    return passed(SKEW_BIMODULES, f"Hom(Lg, Lh) has dimension δ(g, h) over L for all {order * order} pairs")


def maximal_subfield(ctx: GaloisContext) -> TheoremVerdict:
    """C_E(L) = L."""
    commutant = ctx.centralizer(ctx.field_image)
    if commutant != ctx.field_image:
        return failed(MAXIMAL_SUBFIELD, {"centralizer_dim": commutant.dim, "degree": ctx.n})
    return passed(MAXIMAL_SUBFIELD, f"C_E(L) = L, dimension {ctx.n}")


def skew_subalgebras(ctx: GaloisContext) -> TheoremVerdict:
    """One algebra L⋊H per subgroup, and C_{L⋊G}(L^H) = L⋊H."""
    algebras = ctx.crossed
    skew = ctx.skew.algebra
    for i, (H, A) in enumerate(zip(ctx.subgroups, algebras)):
        if A.dim != ctx.n * H.order:
            return failed(SKEW_SUBALGEBRAS, {"subgroup_index": i, "dimension": A.dim, "expected": ctx.n * H.order})
        recovered = commutant_within(skew, ctx.image(i).basis)
        if recovered != A.algebra:
            return failed(
                SKEW_SUBALGEBRAS,
                {"subgroup_index": i, "commutant_dim": recovered.dim, "dimension": A.dim},
                "commutant of L^H in L⋊G differs from L⋊H",
            )
    if len({A.algebra for A in algebras}) != len(algebras):
        return failed(SKEW_SUBALGEBRAS, {"algebras": len(algebras)}, "two subgroups give the same algebra")
    dims = ", ".join(str(A.dim) for A in algebras)
    return passed(SKEW_SUBALGEBRAS, f"{len(algebras)} subalgebras of L⋊G containing L, dimensions {dims}")


def subalgebra_group_recovery(ctx: GaloisContext) -> TheoremVerdict:
    """(L⋊H) ∩ G = H."""
    for i, (H, A) in enumerate(zip(ctx.subgroups, ctx.crossed)):
        part = group_part(ctx.group, A.algebra)
        if part != H.elements:
            return failed(SUBALGEBRA_GROUP_RECOVERY, {"subgroup_index": i, "recovered": list(part)})
    return passed(SUBALGEBRA_GROUP_RECOVERY, f"A ∩ G = H for all {len(ctx.subgroups)} subgroups")


def stable_skew_subalgebras(ctx: GaloisContext) -> TheoremVerdict:
    """The G-stable algebras among the L⋊H are exactly those with H normal."""
    stable = g_stable_filter(ctx.group, list(zip(ctx.subgroups, ctx.crossed)))
    normal = sum(1 for H in ctx.subgroups if H.normal)
    if len(stable) != normal:
        return failed(STABLE_SKEW_SUBALGEBRAS, {"stable": len(stable), "normal": normal})
    return passed(STABLE_SKEW_SUBALGEBRAS, f"{normal} G-stable algebras, one per normal subgroup")


def _double_centralizer_inputs(ctx: GaloisContext) -> List[Subalgebra]:
    return [ctx.image(i) for i in range(len(ctx.subfields))] + [A.algebra for A in ctx.crossed]


def double_centralizer(ctx: GaloisContext) -> TheoremVerdict:
    inputs = _double_centralizer_inputs(ctx)
    for B in inputs:
        again = ctx.centralizer(ctx.centralizer(B))
        if again != B:
            return failed(DOUBLE_CENTRALIZER, {"algebra": B.provenance, "dimension": B.dim, "recovered_dim": again.dim})
    return passed(DOUBLE_CENTRALIZER, f"C_E(C_E(B)) = B for {len(inputs)} subalgebras")


def centralizer_dimension(ctx: GaloisContext) -> TheoremVerdict:
    inputs = _double_centralizer_inputs(ctx)
    total = ctx.n * ctx.n
    for B in inputs:
        C = ctx.centralizer(B)
        if B.dim * C.dim != total:
            return failed(CENTRALIZER_DIMENSION, {"algebra": B.provenance, "dimension": B.dim, "centralizer_dim": C.dim})
    return passed(CENTRALIZER_DIMENSION, f"dim B · dim C_E(B) = {total} for {len(inputs)} subalgebras")


def _all_simple(ctx: GaloisContext, theorem_id: str, algebras: Sequence[Subalgebra]) -> TheoremVerdict:
    probabilistic = False
    for A in algebras:
        verdict = ctx.simplicity(A)
        if not verdict.simple:
            return failed(theorem_id, {"algebra": A.provenance, "dimension": A.dim, "reason": verdict.reason})
        probabilistic = probabilistic or verdict.method == PROBABILISTIC
    return passed(theorem_id, f"{len(algebras)} algebras simple", probabilistic=probabilistic)


def simple_subalgebras(ctx: GaloisContext) -> TheoremVerdict:
    return _all_simple(ctx, SIMPLE_SUBALGEBRAS, [A.algebra for A in ctx.crossed])


def centralizer_simple(ctx: GaloisContext) -> TheoremVerdict:
    return _all_simple(ctx, CENTRALIZER_SIMPLE, [ctx.centralizer(B) for B in _double_centralizer_inputs(ctx)])


def centralizer_bijection(ctx: GaloisContext) -> TheoremVerdict:
    """M ↦ C_E(M) is injective, lands in algebras containing L and is
    inverted by B ↦ C_E(B)."""
    centralizers = []
    for i in range(len(ctx.subfields)):
        M = ctx.image(i)
        C = ctx.centralizer(M)
        if not ctx.field_image.issubset(C):
            return failed(CENTRALIZER_BIJECTION, {"subgroup_index": i}, "C_E(M) does not contain L")
        if ctx.centralizer(C) != M:
            return failed(CENTRALIZER_BIJECTION, {"subgroup_index": i}, "C_E(C_E(M)) differs from M")
        centralizers.append(C)
    distinct_fields = len({handle.space for handle in ctx.subfields})
    if len(set(centralizers)) != distinct_fields:
        return failed(
            CENTRALIZER_BIJECTION,
            {"subfields": distinct_fields, "centralizers": len(set(centralizers))},
            "distinct subfields share a centralizer",
        )
    return passed(CENTRALIZER_BIJECTION, f"{distinct_fields} subfields ↔ {distinct_fields} centralizers")


def commutant_recovers_subfield(ctx: GaloisContext) -> TheoremVerdict:
    """Z(C_E(M)) = M."""
    for i in range(len(ctx.subfields)):
        M = ctx.image(i)
        z = center(ctx.centralizer(M))
        if z != M:
            return failed(COMMUTANT_RECOVERS_SUBFIELD, {"subgroup_index": i, "center_dim": z.dim, "degree": M.dim})
    return passed(COMMUTANT_RECOVERS_SUBFIELD, f"Z(C_E(M)) = M for {len(ctx.subfields)} subfields")


def noether_skolem(ctx: GaloisContext) -> TheoremVerdict:
    """Every isomorphism M → g(M), μ ↦ g(μ), is inner in E."""
    tower = ctx.tower
    group = ctx.group
    found = 0
    for i, handle in enumerate(ctx.subfields):
        a = tower.left_mul_matrix(handle.primitive)
        source = ctx.image(i)
        for g in range(group.order):
            b = tower.left_mul_matrix(group[g].apply(handle.primitive))
            u = find_conjugator(ctx.K, ctx.n, [(a, b)], ctx.config.conjugator_budget, ctx.config.random_seed)
            u_inv = u.inverse()
            target = span_closure(ctx.K, ctx.n, [b])
            conjugated = Subalgebra(ctx.K, ctx.n, [u @ x @ u_inv for x in source.basis], verify=False)
            if conjugated != target:
                return failed(NOETHER_SKOLEM, {"subgroup_index": i, "group_element": g})
            found += 1
    return passed(NOETHER_SKOLEM, f"{found} conjugating units found and verified")


def galois_correspondence(ctx: GaloisContext) -> TheoremVerdict:
    """H ↦ L^H and M ↦ G(L/M) are mutually inverse and order-reversing."""
    group = ctx.group
    subgroups = ctx.subgroups
    subfields = ctx.subfields
    for i, (H, M) in enumerate(zip(subgroups, subfields)):
        back = fixing_subgroup(group, M)
        if back != H.elements:
            return failed(GALOIS_CORRESPONDENCE, {"subgroup_index": i, "recovered": list(back)}, "G(L/L^H) differs from H")
        if M.degree * H.order != ctx.n:
            return failed(GALOIS_CORRESPONDENCE, {"subgroup_index": i, "degree": M.degree}, "[L^H:K] differs from |G|/|H|")
        if fixed_subspace(group, back) != M.space:
            return failed(GALOIS_CORRESPONDENCE, {"subgroup_index": i}, "L^(G(L/M)) differs from M")
    if len({M.space for M in subfields}) != len(subfields):
        return failed(GALOIS_CORRESPONDENCE, {"subfields": len(subfields)}, "two subgroups share a fixed field")
    for i, H1 in enumerate(subgroups):
        for j, H2 in enumerate(subgroups):
            if (set(H1.elements) <= set(H2.elements)) != subfields[j].issubset(subfields[i]):
                return failed(GALOIS_CORRESPONDENCE, {"subgroups": [i, j]}, "correspondence is not order-reversing")
    count = len(subgroups)
    return passed(GALOIS_CORRESPONDENCE, f"{count} subgroups ↔ {count} subfields, order-reversing")


def subfield_subalgebra_bijection(ctx: GaloisContext) -> TheoremVerdict:
    """C_E(M) = L⋊G^M, and C_E(A) = L^(A∩G) for A = L⋊H."""
    group = ctx.group
    for i, handle in enumerate(ctx.subfields):
        fixing = fixing_subgroup(group, handle)
        j = subgroup_index(ctx.subgroups, fixing)
        if j is None:
            return failed(SUBALGEBRA_CORRESPONDENCE, {"subgroup_index": i, "fixing": list(fixing)}, "G^M is not in the lattice")
        if ctx.centralizer(ctx.image(i)) != ctx.crossed[j].algebra:
            return failed(SUBALGEBRA_CORRESPONDENCE, {"subgroup_index": i}, "C_E(M) differs from L⋊G^M")
    for i, A in enumerate(ctx.crossed):
        if ctx.centralizer(A.algebra) != ctx.image(i):
            return failed(SUBALGEBRA_CORRESPONDENCE, {"subgroup_index": i}, "C_E(L⋊H) differs from L^H")
        part = group_part(group, A.algebra)
        if fixed_subspace(group, part) != ctx.subfields[i].space:
            return failed(SUBALGEBRA_CORRESPONDENCE, {"subgroup_index": i, "group_part": list(part)}, "L^(A∩G) differs from L^H")
    count = len(ctx.subfields)
    return passed(SUBALGEBRA_CORRESPONDENCE, f"{count} subfields ↔ {count} subalgebras containing L")


def galois_subfield_correspondence(ctx: GaloisContext) -> TheoremVerdict:
    """For Γ = L^H: Γ/K Galois ⟺ g(Γ) = Γ for all g ⟺ H normal."""
    galois_count = 0
    for i, (H, handle) in enumerate(zip(ctx.subgroups, ctx.subfields)):
        stable = is_g_stable(ctx.group, handle)
        own_galois = ctx.gamma_group(i).order == handle.degree
        if not (stable == own_galois == H.normal):
            return failed(
                GALOIS_SUBFIELD_CORRESPONDENCE,
                {"subgroup_index": i, "stable": stable, "galois": own_galois, "normal": H.normal},
            )
        galois_count += int(H.normal)
    return passed(
        GALOIS_SUBFIELD_CORRESPONDENCE,
        f"{galois_count} Galois subfields ↔ {galois_count} normal subgroups",
    )


def stable_subalgebra_correspondence(ctx: GaloisContext) -> TheoremVerdict:
    """L⋊N ↦ C_E(L⋊N) pairs the G-stable algebras with the Galois subfields."""
    group = ctx.group
    pairs = 0
    for i, (H, A) in enumerate(zip(ctx.subgroups, ctx.crossed)):
        stable = is_g_stable_algebra(group, A)
        if stable != H.normal:
            return failed(STABLE_SUBALGEBRA_CORRESPONDENCE, {"subgroup_index": i, "stable": stable, "normal": H.normal})
        if not stable:
            continue
        if ctx.centralizer(A.algebra) != ctx.image(i) or not is_g_stable(group, ctx.subfields[i]):
            return failed(
                STABLE_SUBALGEBRA_CORRESPONDENCE,
                {"subgroup_index": i},
                "commutant of a G-stable algebra is not a G-stable subfield",
            )
        pairs += 1
    return passed(STABLE_SUBALGEBRA_CORRESPONDENCE, f"{pairs} G-stable algebras ↔ {pairs} Galois subfields")


def normality_criterion(ctx: GaloisContext) -> TheoremVerdict:
    """H normal ⟺ L^H is G-stable, and g(L^H) = L^(gHg⁻¹)."""
    group = ctx.group
    K = ctx.K
    for i, (H, handle) in enumerate(zip(ctx.subgroups, ctx.subfields)):
        if is_g_stable(group, handle) != H.normal:
            return failed(NORMALITY_CRITERION, {"subgroup_index": i, "normal": H.normal})
        for g in range(group.order):
            moved = EchelonSpace(K, ctx.n, [group[g].matrix.apply(row) for row in handle.space.rows()])
            conjugate = sorted({group.conjugate(g, h) for h in H.elements})
            if fixed_subspace(group, conjugate) != moved:
                return failed(NORMALITY_CRITERION, {"subgroup_index": i, "group_element": g}, "g(L^H) differs from L^(gHg⁻¹)")
    return passed(NORMALITY_CRITERION, f"checked {len(ctx.subgroups)} subgroups")


def relative_extension_check(ctx: GaloisContext) -> TheoremVerdict:
    """L/M is a G-extension with group G^M for every intermediate M."""
    group = ctx.group
    for i, handle in enumerate(ctx.subfields):
        pointwise = fixing_subgroup(group, handle)
        by_primitive = tuple(g for g in range(group.order) if group[g].apply(handle.primitive) == handle.primitive)
        relative = ctx.n // handle.degree
        if pointwise != by_primitive:
            return failed(
                RELATIVE_G_EXTENSION,
                {"subgroup_index": i, "fixing": list(pointwise), "fixing_primitive": list(by_primitive)},
            )
        if len(pointwise) != relative:
            return failed(RELATIVE_G_EXTENSION, {"subgroup_index": i, "order": len(pointwise), "relative_degree": relative})
    return passed(RELATIVE_G_EXTENSION, f"|G^M| = [L:M] for {len(ctx.subfields)} subfields")


def orbit_minpoly(group: AutGroup, l: Any) -> DensePoly:
    """∏_{l' ∈ Gl} (x − l') with its coefficients read back in K."""
    tower = group.tower
    L = tower.L
    x = DensePoly.x(L)
    product = DensePoly.constant(L, L.one)
    for y in orbit(group, l):
        product = product * (x - y)
    coeffs = []
    for c in product.coeffs:
        coords = tower.to_k_vector(c)
        if any(coords[1:]):
            raise TheoremViolation(
                ORBIT_MINPOLY, "orbit polynomial has a coefficient outside K", witness={"coefficient": L.render(c)}
            )
        coeffs.append(coords[0])
    return DensePoly(tower.K, coeffs)


def _sample_elements(ctx: GaloisContext) -> List[Tuple[str, Any]]:
    tower = ctx.tower
    gens = [tower.generator(tower.ground + i) for i in range(len(tower.upper_levels))]
    out = [(lvl.name, g) for lvl, g in zip(tower.upper_levels, gens)]
    if len(gens) > 1:
        total = tower.lift(0)
        for g in gens:
            total = total + g
        out.append(("+".join(lvl.name for lvl in tower.upper_levels), total))
    out.extend((f"primitive of L^H for H=#{i}", handle.primitive) for i, handle in enumerate(ctx.subfields))
    return out


def orbit_minpoly_check(ctx: GaloisContext) -> TheoremVerdict:
    """The orbit polynomial is the minimal polynomial, and is irreducible over K."""
    checked = 0
    for label, l in _sample_elements(ctx):
        poly = orbit_minpoly(ctx.group, l)
        oracle = ctx.tower.minpoly_of_element(l)
        if not poly.is_monic() or poly != oracle:
            return failed(ORBIT_MINPOLY, {"element": label, "orbit_poly": poly.render(), "minpoly": oracle.render()})
        if not ctx.irreducible(poly).irreducible:
            return failed(ORBIT_MINPOLY, {"element": label, "orbit_poly": poly.render()}, "orbit polynomial is reducible")
        checked += 1
    return passed(ORBIT_MINPOLY, f"orbit polynomial equals the minimal polynomial for {checked} elements")


def splitting_check(ctx: GaloisContext) -> TheoremVerdict:
    """Each generator's minimal polynomial over K splits into linear factors in L."""
    tower = ctx.tower
    L = tower.L
    for offset, level in enumerate(tower.upper_levels):
        theta = tower.generator(tower.ground + offset)
        minpoly = tower.minpoly_of_element(theta)
        roots = orbit(ctx.group, theta)
        if len(roots) != minpoly.degree:
            return failed(SPLITTING_FIELD, {"generator": level.name, "orbit_size": len(roots), "degree": minpoly.degree})
        lifted = minpoly.map_coeffs(tower.lift, L)
        for y in roots:
            if lifted(y):
                return failed(SPLITTING_FIELD, {"generator": level.name, "root": L.render(y)}, "orbit element is not a root")
        if orbit_minpoly(ctx.group, theta) != minpoly:
            return failed(SPLITTING_FIELD, {"generator": level.name}, "∏(x − θ') differs from the minimal polynomial")
    return passed(SPLITTING_FIELD, f"{len(tower.upper_levels)} generator polynomials split in L")


def quotient_iso_check(ctx: GaloisContext, index: int) -> Dict[str, Any]:
    """1 → G(L/Γ) → G → G(Γ/K) → 1 for Γ = L^N; returns the evidence or raises."""
    group = ctx.group
    handle = ctx.subfields[index]
    result = restriction_map(group, handle, ctx.config)
    evidence: Dict[str, Any] = {
        "subgroup_index": index,
        "kernel": list(result.kernel),
        "image_order": len(set(result.table)),
    }
    if not (result.homomorphism and result.kernel_matches and result.surjective):
        evidence.update(
            homomorphism=result.homomorphism, kernel_matches=result.kernel_matches, surjective=result.surjective
        )
        raise TheoremViolation(RESTRICTION_SEQUENCE, "restriction sequence is not exact", witness=evidence)
    if result.kernel != ctx.subgroups[index].elements:
        raise TheoremViolation(RESTRICTION_SEQUENCE, "kernel differs from G(L/Γ)", witness=evidence)
    quotient = quotient_table(group.table, result.kernel)
    image = sorted(set(result.table))
    iso = find_isomorphism(quotient, subtable(result.gamma_group.table, image))
    if iso is None:
        raise TheoremViolation(RESTRICTION_SEQUENCE, "G/G(L/Γ) is not isomorphic to G(Γ/K)", witness=evidence)
    evidence["isomorphism"] = iso
    return evidence


def restriction_sequence(ctx: GaloisContext) -> TheoremVerdict:
    checked = 0
    for i, H in enumerate(ctx.subgroups):
        if not H.normal:
            continue
        try:
            quotient_iso_check(ctx, i)
        except TheoremViolation as error:
            return failed(RESTRICTION_SEQUENCE, error.witness or str(error), str(error))
        checked += 1
    return passed(RESTRICTION_SEQUENCE, f"G(Γ/K) ≅ G/G(L/Γ) for {checked} Galois subfields")
