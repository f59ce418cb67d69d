"""Homogeneous polynomials (forms) in x, y, z over an exact field."""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .exactfield import FieldElement, FieldSpec, to_string


@lru_cache(maxsize=None)
def monomials(d: int) -> tuple[tuple[int, int, int], ...]:
    """Degree-d exponent triples in descending lex order: x^d, x^(d-1)y, ..., z^d."""
    return tuple((a, b, d - a - b) for a in range(d, -1, -1) for b in range(d - a, -1, -1))


@lru_cache(maxsize=None)
def monomial_index(d: int) -> dict:
    return {e: i for i, e in enumerate(monomials(d))}


def falling(k: int, r: int) -> int:
    out = 1
    for i in range(r):
        out *= k - i
    return out


class Form:
    """A homogeneous form, stored sparsely as {exponent triple: coefficient}."""

    __slots__ = ("field", "degree", "terms")

    def __init__(self, field: FieldSpec, degree: int, terms: dict | None = None):
        self.field = field
        self.degree = degree
        self.terms = {}
        for e, c in (terms or {}).items():
            if sum(e) != degree:
                raise ValueError(f"monomial {e} is not of degree {degree}")
            c = field(c)
            if c:
                self.terms[tuple(e)] = c

    @classmethod
    def linear(cls, field, a, b, c) -> Form:
        return cls(field, 1, {(1, 0, 0): a, (0, 1, 0): b, (0, 0, 1): c})

    @classmethod
    def variables(cls, field) -> tuple[Form, Form, Form]:
        one = field.one()
        return (cls(field, 1, {(1, 0, 0): one}), cls(field, 1, {(0, 1, 0): one}),
                cls(field, 1, {(0, 0, 1): one}))

    @classmethod
    def from_vector(cls, field, degree: int, vec: Sequence[FieldElement]) -> Form:
        return cls(field, degree, {e: c for e, c in zip(monomials(degree), vec) if c})

    def to_vector(self) -> list[FieldElement]:
        zero = self.field.zero()
        return [self.terms.get(e, zero) for e in monomials(self.degree)]

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, Form) and self.degree == other.degree and self.terms == other.terms

    def __hash__(self):
        return hash((self.degree, frozenset(self.terms.items())))

    def __add__(self, other: Form) -> Form:
        if self.degree != other.degree:
            if not other:
                return self
            if not self:
                return other
            raise ValueError("cannot add forms of different degrees")
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return Form(self.field, self.degree, out)

    def __neg__(self) -> Form:
        return Form(self.field, self.degree, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: Form) -> Form:
        return self + (-other)

    def scale(self, c) -> Form:
        c = self.field(c)
        return Form(self.field, self.degree, {e: c * v for e, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Form):
            return self.scale(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                p = c1 * c2
                out[e] = out[e] + p if e in out else p
        return Form(self.field, self.degree + other.degree, out)

    __rmul__ = scale

    def __pow__(self, k: int) -> Form:
        result = Form(self.field, 0, {(0, 0, 0): 1})
        for _ in range(k):
            result = result * self
        return result

    def __call__(self, point: Sequence[FieldElement]) -> FieldElement:
        return self.evaluate(point)

    def evaluate(self, point: Sequence[FieldElement]) -> FieldElement:
        px, py, pz = (self.field(c) for c in point)
        powx, powy, powz = _powers(px, self.degree), _powers(py, self.degree), _powers(pz, self.degree)
        acc = self.field.zero()
        for (a, b, c), coef in self.terms.items():
            t = powx[a] * powy[b] * powz[c]
            if t:
                acc = acc + coef * t
        return acc

    def derivative(self, var: int, order: int = 1) -> Form:
        """Partial derivative with respect to x (0), y (1) or z (2)."""
        if order == 0:
            return self
        out = {}
        for e, c in self.terms.items():
            k = e[var]
            if k >= order:
                ne = list(e)
                ne[var] -= order
                out[tuple(ne)] = c * falling(k, order)
        return Form(self.field, max(self.degree - order, 0), out)

    def substitute(self, matrix: Sequence[Sequence[FieldElement]]) -> Form:
        """Return f(A * (x, y, z)^T) for a 3x3 matrix A."""
        lin = [Form.linear(self.field, *row) for row in matrix]
        pow_cache = [[Form(self.field, 0, {(0, 0, 0): 1})] for _ in range(3)]
        for v in range(3):
            for _ in range(self.degree):
                pow_cache[v].append(pow_cache[v][-1] * lin[v])
        out = Form(self.field, self.degree)
        for (a, b, c), coef in self.terms.items():
            out = out + (pow_cache[0][a] * pow_cache[1][b] * pow_cache[2][c]).scale(coef)
        return out

    def vanishing_order_at_least(self, point: Sequence[FieldElement], m: int) -> bool:
        """True if every partial derivative of total order < m vanishes at point."""
        for order in range(m):
            for a in range(order + 1):
                for b in range(order - a + 1):
                    c = order - a - b
                    g = self.derivative(0, a).derivative(1, b).derivative(2, c)
                    if g and g.evaluate(point):
                        return False
        return True

    def is_scalar_multiple_of(self, other: Form) -> bool:
        if self.degree != other.degree or not other:
            return False
        e0 = next(iter(other.terms))
        lam = self.terms.get(e0, self.field.zero()) / other.terms[e0]
        return self == other.scale(lam) if lam else not self

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in monomials(self.degree):
            if e in self.terms:
                mono = "*".join(f"{v}^{k}" if k > 1 else v for v, k in zip("xyz", e) if k)
                parts.append(f"({to_string(self.terms[e])})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)

    def __repr__(self):
        return f"Form(deg={self.degree}, terms={len(self.terms)})"


def _powers(x: FieldElement, d: int) -> list[FieldElement]:
    out = [x.field.one()]
    for _ in range(d):
        out.append(out[-1] * x)
    return out


def product(forms: Sequence[Form]) -> Form:
    it = iter(forms)
    out = next(it)
    for f in it:
        out = out * f
    return out
