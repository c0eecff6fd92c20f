"""Verification of the character identities tying together top-cohomology
duals, section characters, and boundary-restriction kernels.

The two sides of the main identity are computed by independent routes: the
left side sums starred top-cohomology characters over a Bruhat lower
interval, the right side is a single operator string shifted by e^rho.  A
report never fudges: passed is exact term-by-term equality of both sides.
"""

from __future__ import annotations

from dataclasses import dataclass

from .charring import CharElement
from .demazure import all_demazure_images, demazure_char, top_cohomology_char
from .rootsys import Weight, is_regular_dominant, weight_add, weight_sub
from .weyl import WeylElement, WeylGroup, lower_interval

VERIFICATION_REPORT_SCHEMA = {
    "type": "object",
    "required": ["tau", "lambda", "passed", "dim_lhs", "dim_rhs", "difference_terms"],
    "properties": {
        "tau": {"type": "array", "items": {"type": "integer"}},
        "lambda": {"type": "array", "items": {"type": "integer"}},
        "passed": {"type": "boolean"},
        "dim_lhs": {"type": "string", "pattern": "^-?[0-9]+$"},
        "dim_rhs": {"type": "string", "pattern": "^-?[0-9]+$"},
        "difference_terms": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["weight", "coeff"],
                "properties": {
                    "weight": {"type": "array", "items": {"type": "integer"}},
                    "coeff": {"type": "string", "pattern": "^-?[0-9]+$"},
                },
                "additionalProperties": False,
            },
        },
        "interval_size": {"type": "integer"},
    },
    "additionalProperties": False,
}


@dataclass
class VerificationReport:
    """Outcome of one identity check: both sides, their difference, and sizes."""

    lhs: CharElement
    rhs: CharElement
    difference: CharElement
    passed: bool
    dim_lhs: int
    dim_rhs: int
    interval_size: int
    per_w_terms: dict[tuple[int, ...], CharElement] | None = None

    def to_json_dict(self, tau: WeylElement, lam: Weight) -> dict:
        return {
            "tau": list(tau.word),
            "lambda": list(lam),
            "passed": self.passed,
            "dim_lhs": str(self.dim_lhs),
            "dim_rhs": str(self.dim_rhs),
            "difference_terms": [
                {"weight": list(mu), "coeff": str(c)}
                for mu, c in sorted(self.difference.terms.items())
            ],
            "interval_size": self.interval_size,
        }


def _require_regular_dominant(g: WeylGroup, lam: Weight) -> None:
    if not is_regular_dominant(g.datum, lam):
        raise ValueError(f"weight {list(lam)} is not regular dominant")


def starred_top_characters(g: WeylGroup, lam: Weight) -> list[CharElement]:
    """Duals of the top-cohomology characters for every w, indexed like g.elements."""
    _require_regular_dominant(g, lam)
    images = all_demazure_images(g, CharElement.monomial(tuple(-c for c in lam)))
    return [
        (v if g.elements[k].length % 2 == 0 else -v).star() for k, v in enumerate(images)
    ]


def theorem_lhs(
    g: WeylGroup, tau: WeylElement, lam: Weight, terms: list[CharElement] | None = None
) -> CharElement:
    """Sum of starred top-cohomology characters over the lower interval of tau.

    ``terms`` may carry precomputed values from ``starred_top_characters`` to
    share work across a sweep.
    """
    _require_regular_dominant(g, lam)
    total = CharElement.zero(g.datum.rank)
    for w in lower_interval(g, tau):
        total = total + (terms[w.index] if terms is not None else top_cohomology_char(g, w, lam).star())
    return total


def theorem_rhs(g: WeylGroup, tau: WeylElement, lam: Weight) -> CharElement:
    """e^rho times the section character of the (lam - rho)-bundle on tau."""
    _require_regular_dominant(g, lam)
    rho = g.datum.rho
    return CharElement.monomial(rho) * demazure_char(g, tau, weight_sub(lam, rho))


def verify_theorem(
    g: WeylGroup,
    tau: WeylElement,
    lam: Weight,
    keep_per_w: bool = False,
    terms: list[CharElement] | None = None,
) -> VerificationReport:
    """Check the summed-dual-characters identity for one (tau, lam)."""
    lhs = theorem_lhs(g, tau, lam, terms=terms)
    rhs = theorem_rhs(g, tau, lam)
    difference = lhs - rhs
    per_w = None
    if keep_per_w:
        shared = terms if terms is not None else starred_top_characters(g, lam)
        per_w = {w.word: shared[w.index] for w in lower_interval(g, tau)}
    return VerificationReport(
        lhs=lhs,
        rhs=rhs,
        difference=difference,
        passed=difference.is_zero(),
        dim_lhs=lhs.dimension(),
        dim_rhs=rhs.dimension(),
        interval_size=len(lower_interval(g, tau)),
        per_w_terms=per_w,
    )


def epsilon_char(g: WeylGroup, w: WeylElement, lam: Weight) -> CharElement:
    """Character of the boundary-restriction kernel on w, via the e^rho twist."""
    _require_regular_dominant(g, lam)
    minus_rho = tuple(-c for c in g.datum.rho)
    return CharElement.monomial(minus_rho) * top_cohomology_char(g, w, lam).star()


def verify_lemma31(g: WeylGroup, tau: WeylElement, lam: Weight) -> VerificationReport:
    """Check that the kernel characters over the interval sum to the section character."""
    _require_regular_dominant(g, lam)
    interval = lower_interval(g, tau)
    lhs = CharElement.zero(g.datum.rank)
    for w in interval:
        lhs = lhs + epsilon_char(g, w, lam)
    rhs = demazure_char(g, tau, weight_sub(lam, g.datum.rho))
    difference = lhs - rhs
    return VerificationReport(
        lhs=lhs,
        rhs=rhs,
        difference=difference,
        passed=difference.is_zero(),
        dim_lhs=lhs.dimension(),
        dim_rhs=rhs.dimension(),
        interval_size=len(interval),
    )


def sweep_verify_theorem(g: WeylGroup, lam: Weight) -> list[VerificationReport]:
    """Reports for every tau at one lam, sharing per-w work across the sweep.

    Left sides reuse one starred-top-character table; right sides reuse one
    table of operator images of e^{lam-rho}.  The two sides still follow
    their separate formula routes.
    """
    _require_regular_dominant(g, lam)
    rank = g.datum.rank
    terms = starred_top_characters(g, lam)
    sections = all_demazure_images(g, CharElement.monomial(weight_sub(lam, g.datum.rho)))
    e_rho = CharElement.monomial(g.datum.rho)
    reports = []
    for tau in g.elements:
        interval = lower_interval(g, tau)
        lhs = CharElement.zero(rank)
        for w in interval:
            lhs = lhs + terms[w.index]
        rhs = e_rho * sections[tau.index]
        difference = lhs - rhs
        reports.append(
            VerificationReport(
                lhs=lhs,
                rhs=rhs,
                difference=difference,
                passed=difference.is_zero(),
                dim_lhs=lhs.dimension(),
                dim_rhs=rhs.dimension(),
                interval_size=len(interval),
            )
        )
    return reports


def sweep_verify_lemma31(g: WeylGroup, lam: Weight) -> list[VerificationReport]:
    """Reports for every tau at one lam for the kernel-character sum identity."""
    _require_regular_dominant(g, lam)
    rank = g.datum.rank
    minus_rho = CharElement.monomial(tuple(-c for c in g.datum.rho))
    eps = [minus_rho * t for t in starred_top_characters(g, lam)]
    sections = all_demazure_images(g, CharElement.monomial(weight_sub(lam, g.datum.rho)))
    reports = []
    for tau in g.elements:
        interval = lower_interval(g, tau)
        lhs = CharElement.zero(rank)
        for w in interval:
            lhs = lhs + eps[w.index]
        rhs = sections[tau.index]
        difference = lhs - rhs
        reports.append(
            VerificationReport(
                lhs=lhs,
                rhs=rhs,
                difference=difference,
                passed=difference.is_zero(),
                dim_lhs=lhs.dimension(),
                dim_rhs=rhs.dimension(),
                interval_size=len(interval),
            )
        )
    return reports


def psi_character(w: WeylElement, chi_prime: Weight) -> Weight:
    """Serre-duality twist weight: rho + w(rho) - w(chi')."""
    rank = len(w.matrix)
    rho = (1,) * rank
    return weight_sub(weight_add(rho, w.apply(rho)), w.apply(chi_prime))


def chi_prime_identity(rank: int) -> Weight:
    """Canonical-twist weight forced for the identity element: 2*rho."""
    return (2,) * rank


def chi_prime_longest(rank: int) -> Weight:
    """Canonical-twist weight forced for the longest element: 0."""
    return (0,) * rank
