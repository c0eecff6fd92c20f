"""The character ring Z[X(T)]: sparse Laurent elements over the weight lattice.

A CharElement is a finitely supported map from weights to nonzero integers
(Python ints, so coefficients never overflow).  Values are immutable data:
every operation returns a fresh element, so sharing across threads and
parallel additive reductions are safe.
"""

from __future__ import annotations

from typing import Iterable, Literal, Mapping

from .rootsys import RootDatum, Weight, root_coordinates, weight_add, weight_neg

CHAR_ELEMENT_SCHEMA = {
    "type": "object",
    "required": ["rank", "terms"],
    "properties": {
        "rank": {"type": "integer", "minimum": 1},
        "terms": {
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
    },
    "additionalProperties": False,
}


class CharElement:
    """A sparse element of the group ring of the weight lattice."""

    def __init__(self, rank: int, terms: Mapping[Weight, int] | Iterable[tuple[Weight, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        self.rank = rank
        self.terms: dict[Weight, int] = {mu: c for mu, c in items if c}

    @classmethod
    def zero(cls, rank: int) -> "CharElement":
        return cls(rank)

    @classmethod
    def monomial(cls, lam: Weight) -> "CharElement":
        return cls(len(lam), {tuple(lam): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def dimension(self) -> int:
        """Sum of coefficients: additive under +, multiplicative under *."""
        return sum(self.terms.values())

    def support(self) -> list[Weight]:
        return sorted(self.terms)

    def coeff(self, mu: Weight) -> int:
        return self.terms.get(tuple(mu), 0)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, CharElement)
            and self.rank == other.rank
            and self.terms == other.terms
        )

    def __add__(self, other: "CharElement") -> "CharElement":
        self._check_rank(other)
        out = dict(self.terms)
        for mu, c in other.terms.items():
            out[mu] = out.get(mu, 0) + c
        return CharElement(self.rank, out)

    def __sub__(self, other: "CharElement") -> "CharElement":
        self._check_rank(other)
        out = dict(self.terms)
        for mu, c in other.terms.items():
            out[mu] = out.get(mu, 0) - c
        return CharElement(self.rank, out)

    def __neg__(self) -> "CharElement":
        return CharElement(self.rank, {mu: -c for mu, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return CharElement(self.rank, {mu: c * other for mu, c in self.terms.items()})
        self._check_rank(other)
        small, large = (self, other) if len(self.terms) <= len(other.terms) else (other, self)
        out: dict[Weight, int] = {}
        for mu, c in small.terms.items():
            for nu, e in large.terms.items():
                key = weight_add(mu, nu)
                out[key] = out.get(key, 0) + c * e
        return CharElement(self.rank, out)

    __rmul__ = __mul__

    def star(self) -> "CharElement":
        """Dual character: e^mu -> e^{-mu}."""
        return CharElement(self.rank, {weight_neg(mu): c for mu, c in self.terms.items()})

    def _check_rank(self, other: "CharElement") -> None:
        if self.rank != other.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")

    def to_json_dict(self) -> dict:
        return {
            "rank": self.rank,
            "terms": [{"weight": list(mu), "coeff": str(c)} for mu, c in sorted(self.terms.items())],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "CharElement":
        rank = int(data["rank"])
        terms = {}
        for item in data["terms"]:
            mu = tuple(int(x) for x in item["weight"])
            if len(mu) != rank:
                raise ValueError(f"weight {list(mu)} does not have rank {rank}")
            terms[mu] = int(item["coeff"])
        return cls(rank, terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mu, c in sorted(self.terms.items()):
            body = f"e{list(mu)}" if abs(c) == 1 else f"{abs(c)}*e{list(mu)}"
            parts.append(("- " if c < 0 else "+ ") + body)
        first = parts[0][2:] if parts[0].startswith("+ ") else "-" + parts[0][2:]
        return " ".join([first] + parts[1:])

    def __repr__(self) -> str:
        return f"CharElement(rank={self.rank}, terms={dict(sorted(self.terms.items()))})"


def zero(rank: int) -> CharElement:
    return CharElement.zero(rank)


def monomial(lam: Weight) -> CharElement:
    return CharElement.monomial(lam)


def add(u: CharElement, v: CharElement) -> CharElement:
    return u + v


def scale(n: int, v: CharElement) -> CharElement:
    return v * n


def mul(u: CharElement, v: CharElement) -> CharElement:
    return u * v


def star(v: CharElement) -> CharElement:
    return v.star()


def dimension(v: CharElement) -> int:
    return v.dimension()


def w_apply(w, v: CharElement) -> CharElement:
    """Push a character through a Weyl-group element: e^mu -> e^{w(mu)}."""
    out: dict[Weight, int] = {}
    for mu, c in v.terms.items():
        key = w.apply(mu)
        out[key] = out.get(key, 0) + c
    return CharElement(v.rank, out)


def extreme_weight(
    d: RootDatum, v: CharElement, direction: Literal["lowest", "highest"]
) -> Weight | None:
    """The dominance-least (or -greatest) weight of the support, if one exists.

    Returns None when the support has no such element (incomparable support);
    raises ValueError on the zero element.
    """
    if v.is_zero():
        raise ValueError("the zero element has no extreme weight")
    if direction not in ("lowest", "highest"):
        raise ValueError(f"direction must be 'lowest' or 'highest', got {direction!r}")
    weights = sorted(v.terms)
    coords = {mu: root_coordinates(d, mu) for mu in weights}
    heights = {mu: sum(coords[mu]) for mu in weights}
    sign = 1 if direction == "lowest" else -1
    best = min(weights, key=lambda mu: (sign * heights[mu], mu))
    if sum(1 for mu in weights if heights[mu] == heights[best]) > 1:
        return None
    cb = coords[best]
    for mu in weights:
        if mu == best:
            continue
        # for 'lowest' need best <= mu: mu - best a nonnegative integral combination
        delta = [a - b for a, b in zip(coords[mu], cb)]
        if sign < 0:
            delta = [-x for x in delta]
        if any(x.denominator != 1 or x < 0 for x in delta):
            return None
    return best
