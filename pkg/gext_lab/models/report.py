from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple

from gext_lab.galoislab.verdict import Status, TheoremVerdict


@dataclass(frozen=True)
class LatticeRow:
    """One subgroup H with its partners L^H, L⋊H and C_E(L^H)."""

    subgroup_index: int
    elements: Tuple[int, ...]
    normal: bool
    degree: int
    primitive: Any
    minpoly: List[Any]
    skew_dim: int
    centralizer_dim: int

    @property
    def order(self) -> int:
        return len(self.elements)


@dataclass
class CorrespondenceReport:
    tower: Dict[str, Any]
    galois: bool
    group_order: int
    cayley: List[List[int]]
    rows: List[LatticeRow]
    theorems: List[TheoremVerdict] = field(default_factory=list)
    assumptions: List[str] = field(default_factory=list)
    config: Dict[str, Any] = field(default_factory=dict)

    @property
    def group(self) -> Dict[str, Any]:
        return {"order": self.group_order, "cayley": self.cayley}

    @property
    def subgroups(self) -> List[LatticeRow]:
        return self.rows

    @property
    def subfields(self) -> List[LatticeRow]:
        return self.rows

    @property
    def pairings(self) -> List[LatticeRow]:
        return self.rows

    @property
    def failed(self) -> bool:
        return any(v.status is Status.FAIL for v in self.theorems)

    def lattice_lines(self) -> List[str]:
        header = f"{'H':>3}  {'|H|':>4}  {'normal':<6}  {'[L^H:K]':>7}  {'dim L⋊H':>8}  {'dim C_E':>8}  minpoly of L^H"
        lines = [header]
        for row in self.rows:
            lines.append(
                f"{row.subgroup_index:>3}  {row.order:>4}  {('yes' if row.normal else 'no'):<6}  "
                f"{row.degree:>7}  {row.skew_dim:>8}  {row.centralizer_dim:>8}  {row.minpoly}"
            )
        return lines

    def text_lines(self, include_theorems: bool = True) -> List[str]:
        levels = ", ".join(f"{lvl['gen']}: {lvl['minpoly']}" for lvl in self.tower["levels"])
        lines = [
            f"tower: base {self.tower['base']}; {levels}; ground {self.tower['ground'] or self.tower['base']}",
            f"G-extension: {'yes' if self.galois else 'no'} (|G| = {self.group_order})",
            "",
        ]
        lines.extend(self.lattice_lines())
        if include_theorems:
            lines.append("")
            for verdict in self.theorems:
                lines.append(f"{verdict.status.value:<18}  {verdict.theorem_id:<34}  {verdict.detail}")
        if self.assumptions:
            lines.append("")
            lines.extend(f"assumption: {a}" for a in self.assumptions)
        return lines
