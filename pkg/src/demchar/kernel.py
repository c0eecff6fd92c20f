"""The joint kernel N of all Demazure operators: membership, the e^rho-twist
characterization, basis elements from summed top-cohomology characters, and a
greedy triangular decomposition into the full-group section-character basis.
"""

from __future__ import annotations

from .charring import CharElement, w_apply
from .demazure import all_demazure_images, demazure_char, demazure_step
from .rootsys import Weight, is_regular_dominant, root_coordinates, weight_add
from .weyl import WeylGroup

DECOMPOSITION_SCHEMA = {
    "type": "object",
    "required": ["coefficients"],
    "properties": {
        "coefficients": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["mu", "lambda", "coeff"],
                "properties": {
                    "mu": {"type": "array", "items": {"type": "integer"}},
                    "lambda": {"type": "array", "items": {"type": "integer"}},
                    "coeff": {"type": "string", "pattern": "^-?[0-9]+$"},
                },
                "additionalProperties": False,
            },
        },
    },
    "additionalProperties": False,
}


def in_kernel(g: WeylGroup, v: CharElement) -> bool:
    """True iff every simple-root Demazure operator annihilates v."""
    return all(demazure_step(g.datum, i, v).is_zero() for i in range(1, g.datum.rank + 1))


def is_demazure_invariant(g: WeylGroup, v: CharElement) -> bool:
    """True iff every simple-root Demazure operator fixes v."""
    return all(demazure_step(g.datum, i, v) == v for i in range(1, g.datum.rank + 1))


def kernel_basis_element(g: WeylGroup, lam: Weight) -> CharElement:
    """Sum over the whole group of the top-cohomology characters of -lam."""
    if not is_regular_dominant(g.datum, lam):
        raise ValueError(f"weight {list(lam)} is not regular dominant")
    images = all_demazure_images(g, CharElement.monomial(tuple(-c for c in lam)))
    total = CharElement.zero(g.datum.rank)
    for k, v in enumerate(images):
        total = total + (-v if g.elements[k].length % 2 else v)
    return total


def verify_characterization(g: WeylGroup, v: CharElement) -> bool:
    """Check the biconditional: v is in N iff e^rho * v is Demazure-invariant."""
    twisted = CharElement.monomial(g.datum.rho) * v
    return in_kernel(g, v) == is_demazure_invariant(g, twisted)


def _dominance_maximal(g: WeylGroup, terms: dict[Weight, int]) -> list[Weight]:
    # support weights with no other support weight strictly above them
    weights = sorted(terms)
    coords = {mu: root_coordinates(g.datum, mu) for mu in weights}
    maximal = []
    for mu in weights:
        cm = coords[mu]
        dominated = False
        for nu in weights:
            if nu == mu:
                continue
            delta = [a - b for a, b in zip(coords[nu], cm)]
            if all(x.denominator == 1 and x >= 0 for x in delta) and any(x > 0 for x in delta):
                dominated = True
                break
        if not dominated:
            maximal.append(mu)
    return maximal


def decompose(g: WeylGroup, v: CharElement, with_stats: bool = False):
    """Write e^rho * v as an integer combination of full-group section characters.

    Requires v in N.  Greedy triangular extraction: each round takes the
    dominance-maximal support weights of the running remainder (dominant by
    invariance), records their coefficients, and subtracts the matching
    section characters.  Returns {mu -> coefficient}; the basis element of N
    recovered at mu is the one attached to the weight mu + rho.
    """
    if not in_kernel(g, v):
        raise ValueError("element is not in the joint Demazure kernel")
    d = g.datum
    u = CharElement.monomial(d.rho) * v
    for i in range(1, d.rank + 1):
        s_i = g.elements[g.left_mult[g.identity][i - 1]]
        if w_apply(s_i, u) != u:
            raise RuntimeError(
                f"e^rho * v is not invariant under simple reflection {i}; "
                "kernel membership and invariance disagree"
            )
    coefficients: dict[Weight, int] = {}
    w0 = g.longest_element
    max_rounds = max(1, len(u.terms))
    rounds = 0
    processed: set[Weight] = set()
    while not u.is_zero():
        rounds += 1
        if rounds > max_rounds:
            raise RuntimeError("decomposition failed to terminate; internal inconsistency")
        for mu in _dominance_maximal(g, u.terms):
            if mu in processed:
                raise RuntimeError(f"weight {list(mu)} re-entered the support; internal inconsistency")
            if any(c < 0 for c in mu):
                raise RuntimeError(f"dominance-maximal weight {list(mu)} is not dominant")
            processed.add(mu)
            c = u.terms[mu]
            coefficients[mu] = c
            u = u - c * demazure_char(g, w0, mu)
    if with_stats:
        return coefficients, rounds
    return coefficients


def decomposition_to_json(g: WeylGroup, coefficients: dict[Weight, int]) -> dict:
    rho = g.datum.rho
    return {
        "coefficients": [
            {"mu": list(mu), "lambda": list(weight_add(mu, rho)), "coeff": str(c)}
            for mu, c in sorted(coefficients.items())
        ]
    }
