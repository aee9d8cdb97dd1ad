"""
Exact evaluation of the clique-counting inequality

For k >= 3 and r >= k:

    LHS(k, r) = sum_{i=0}^{k-3} C(k-3, i) * C(r-k+3, k-1-i) * (1/2)^(k-1-i)
    RHS(k, r) = C(r-1, k-1)

When LHS < RHS the counting argument ends in a contradiction, which is the
case that settles the Berge-Turán number for that (k, r). Everything is done
in integers and fractions.Fraction; binomials come from a Pascal table and
C(a, b) = 0 whenever b < 0 or b > a.

Usage:
    report = eq_check(5, 5)
    assert report.lhs == report.rhs == 1 and not report.contradiction
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from src.errors import InvalidParameterError

logger = logging.getLogger(__name__)

RationalValue = Fraction


class PascalTable:
    """Rows of Pascal's triangle truncated to columns 0..width, grown on demand"""

    def __init__(self, width: int = 16):
        self.width = width
        self.rows: List[List[int]] = [[1] + [0] * width]

    def binomial(self, a: int, b: int) -> int:
        if a < 0 or b < 0 or b > a:
            return 0
        if b > self.width:
            self.width = max(b, 2 * self.width)
            self.rows = [[1] + [0] * self.width]
        while len(self.rows) <= a:
            last = self.rows[-1]
            self.rows.append([1] + [last[j - 1] + last[j] for j in range(1, self.width + 1)])
        return self.rows[a][b]


_pascal = PascalTable()


def binomial(a: int, b: int) -> int:
    return _pascal.binomial(a, b)


def format_rational(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class EquReport:
    k: int
    r: int
    lhs: RationalValue
    rhs: RationalValue
    terms: Tuple[RationalValue, ...]

    @property
    def holds(self) -> bool:
        return self.lhs >= self.rhs

    @property
    def contradiction(self) -> bool:
        return not self.holds

    def as_row(self) -> dict:
        return {
            "k": self.k,
            "r": self.r,
            "lhs": format_rational(self.lhs),
            "rhs": format_rational(self.rhs),
            "contradiction": self.contradiction,
        }


def eq_check(k: int, r: int) -> EquReport:
    """
    Both sides of the inequality for one (k, r)

    Args:
        k: Uniformity, >= 3
        r: chi(F) - 1, >= k

    Returns:
        EquReport with the individual LHS terms (index i = 0..k-3)
    """
    if k < 3:
        raise InvalidParameterError(f"the inequality needs k >= 3, got k={k}")
    if r < k:
        raise InvalidParameterError(f"the inequality needs r >= k, got k={k}, r={r}")
    terms = tuple(
        binomial(k - 3, i) * binomial(r - k + 3, k - 1 - i) * Fraction(1, 2 ** (k - 1 - i))
        for i in range(k - 2)
    )
    return EquReport(k, r, sum(terms, Fraction(0)), Fraction(binomial(r - 1, k - 1)), terms)


@dataclass(frozen=True)
class EquScan:
    k: int
    r_max: int
    reports: Tuple[EquReport, ...]

    @property
    def contradiction_rs(self) -> Tuple[int, ...]:
        return tuple(report.r for report in self.reports if report.contradiction)

    @property
    def threshold_r(self) -> Optional[int]:
        """Least r such that every scanned r' >= r gives a contradiction (None if the last one does not)"""
        threshold = None
        for report in reversed(self.reports):
            if not report.contradiction:
                break
            threshold = report.r
        return threshold


def scan_equ(k: int, r_max: int) -> EquScan:
    """Reports for r = k..r_max in increasing r; empty when r_max < k"""
    if k < 3:
        raise InvalidParameterError(f"the inequality needs k >= 3, got k={k}")
    scan = EquScan(k, r_max, tuple(eq_check(k, r) for r in range(k, r_max + 1)))
    logger.info(
        "scan k=%d up to r=%d: %d contradictions, threshold %s",
        k, r_max, len(scan.contradiction_rs), scan.threshold_r,
    )
    return scan
