"""
Small-n report on the equality ex_k(n, Berge-F) = ex(n, K_k, F) for chi(F) > k

For each n the report tabulates the sandwich values and whether the
equality holds at that n, together with facts about F that decide which
known result covers it asymptotically:

- critical-edge:             F has a colour-critical edge
- critical-vertex:           F has a colour-critical vertex
- low-uniformity:            k <= 4
- chromatic-inequality:      the counting inequality is contradicted at (k, chi(F) - 1)
- critical-edge-components:  every (chi(F))-chromatic component has a critical edge;
                             then the exact value is N(K_k, K_{s-1} + T(n-s+1, r))

Nothing here is claimed for large n; the rows only record what was computed.
"""
import logging
from dataclasses import dataclass, field
from typing import List, Optional

from src.config import RunConfig
from src.errors import CapExceededError
from src.extremal import SandwichReport, Solver, verify_sandwich
from src.graph_core import Graph, join_turan_clique_count
from src.graph_io import to_graph6
from src.inequality import eq_check
from src.invariants import chromatic_number, critical_edges, critical_vertices, sigma

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HypothesisFacts:
    chi: int
    sigma: Optional[int]
    has_critical_vertex: bool
    has_critical_edge: bool
    degenerate: bool
    regimes: tuple

    def as_dict(self) -> dict:
        return {
            "chi": self.chi,
            "sigma": self.sigma,
            "has_critical_vertex": self.has_critical_vertex,
            "has_critical_edge": self.has_critical_edge,
            "degenerate": self.degenerate,
            "regimes": list(self.regimes),
        }


def component_prediction(n: int, k: int, forbidden: Graph) -> Optional[int]:
    """
    N(K_k, K_{s-1} + T(n-s+1, r)) when F's structure makes it the exact value

    r = chi(F) - 1 and s is the number of components of chromatic number r + 1;
    every such component must have a colour-critical edge, otherwise None.
    """
    r = chromatic_number(forbidden) - 1
    if r < 1:
        return None
    s = 0
    for component in forbidden.components():
        part = forbidden.induced(component)
        if chromatic_number(part) == r + 1:
            if not critical_edges(part):
                return None
            s += 1
    if s == 0 or n < s - 1:
        return None
    return join_turan_clique_count(s - 1, n, r, k)


def hypothesis_facts(forbidden: Graph, k: int) -> HypothesisFacts:
    chi = chromatic_number(forbidden)
    try:
        smallest_class: Optional[int] = sigma(forbidden)
    except CapExceededError:
        smallest_class = None
    has_vertex = bool(critical_vertices(forbidden))
    has_edge = bool(critical_edges(forbidden))
    degenerate = chi <= k
    regimes: List[str] = []
    if not degenerate:
        if has_edge:
            regimes.append("critical-edge")
        if has_vertex:
            regimes.append("critical-vertex")
        if k <= 4:
            regimes.append("low-uniformity")
        if eq_check(k, chi - 1).contradiction:
            regimes.append("chromatic-inequality")
        if component_prediction(forbidden.n, k, forbidden) is not None:
            regimes.append("critical-edge-components")
    return HypothesisFacts(chi, smallest_class, has_vertex, has_edge, degenerate, tuple(regimes))


@dataclass
class ConjectureRow:
    n: int
    sandwich: SandwichReport
    prediction: Optional[int]

    def as_dict(self) -> dict:
        row = self.sandwich.as_dict()
        row["component_prediction"] = self.prediction
        return row


@dataclass
class ConjectureReport:
    k: int
    forbidden: Graph
    facts: HypothesisFacts
    rows: List[ConjectureRow] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "k": self.k,
            "forbidden": to_graph6(self.forbidden),
            "facts": self.facts.as_dict(),
            "rows": [row.as_dict() for row in self.rows],
        }


def conjecture_report(
    n_max: int,
    k: int,
    forbidden: Graph,
    config: Optional[RunConfig] = None,
    solver: Optional[Solver] = None,
) -> ConjectureReport:
    """
    Sandwich rows for n = |V(F)|..n_max plus the hypothesis facts of F

    Args:
        n_max: Largest n tabulated
        k: Uniformity, >= 3
        forbidden: F
        config: Caps and workers; refused problems leave the row incomplete
        solver: Optional cached solver forwarded to verify_sandwich

    Returns:
        ConjectureReport
    """
    facts = hypothesis_facts(forbidden, k)
    if facts.degenerate:
        logger.warning("chi(F)=%d <= k=%d: the equality is not expected in this regime", facts.chi, k)
    report = ConjectureReport(k, forbidden, facts)
    for n in range(forbidden.n, n_max + 1):
        sandwich = verify_sandwich(n, k, forbidden, config, solver)
        prediction = component_prediction(n, k, forbidden) if not facts.degenerate else None
        report.rows.append(ConjectureRow(n, sandwich, prediction))
    return report
