from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable


@dataclass
class EnhancementPolynomial:
    """Formal sum ``sum coeff * var_1^e_1 ... var_k^e_k`` with positive coefficients."""

    variables: tuple[str, ...]
    terms: dict[tuple[int, ...], int] = field(default_factory=dict)

    def __post_init__(self):
        self.variables = tuple(self.variables)
        self.terms = {tuple(e): c for e, c in self.terms.items() if c}
        for e, c in self.terms.items():
            if len(e) != len(self.variables) or c < 0:
                raise ValueError(f"bad term {c} * {e}")

    @classmethod
    def from_exponents(cls, variables: Iterable[str], exponents: Iterable[tuple[int, ...]]):
        return cls(tuple(variables), dict(Counter(tuple(e) for e in exponents)))

    def add(self, exponent: tuple[int, ...], coeff: int = 1) -> None:
        if coeff:
            self.terms[tuple(exponent)] = self.terms.get(tuple(exponent), 0) + coeff

    def at_one(self) -> int:
        return sum(self.terms.values())

    def __eq__(self, other):
        if isinstance(other, EnhancementPolynomial):
            return self.variables == other.variables and self.terms == other.terms
        if isinstance(other, dict):
            return self.terms == {(k,) if isinstance(k, int) else tuple(k): v
                                  for k, v in other.items()}
        return NotImplemented

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp in sorted(self.terms):
            coeff = self.terms[exp]
            mono = "".join(v if e == 1 else f"{v}^{e}"
                           for v, e in zip(self.variables, exp) if e)
            parts.append(mono if coeff == 1 and mono else f"{coeff}{mono}")
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {"vars": list(self.variables),
                "terms": [{"exp": list(e), "coeff": c} for e, c in sorted(self.terms.items())]}

    @classmethod
    def from_json(cls, data: dict) -> "EnhancementPolynomial":
        return cls(tuple(data["vars"]), {tuple(t["exp"]): t["coeff"] for t in data["terms"]})
