"""Exact arithmetic in presented number fields and dense linear algebra over them.

A field is presented as a tower Q[g_1, ..., g_k] / (r_1, ..., r_k) where each
relation r_i is monic in g_i and only involves g_1, ..., g_i.  Elements are
stored as an integer numerator vector on the reduced monomial basis together
with one positive common denominator.  All big-integer work goes through gmpy2.
"""

from __future__ import annotations

import ast
import cmath
import itertools
import math
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Iterable, Sequence

import gmpy2
from gmpy2 import mpz

__all__ = [
    "FieldSpec",
    "FieldElement",
    "ExactMatrix",
    "FieldMismatchError",
    "cyclotomic_polynomial",
    "make_cyclotomic",
    "make_fermat_field",
    "nullspace",
    "rank",
    "row_basis",
    "to_string",
    "embed_numeric",
    "parse_element",
]

ZERO = mpz(0)
ONE = mpz(1)


class FieldMismatchError(ValueError):
    """Raised when elements of different fields are combined."""


# ---------------------------------------------------------------------------
# cyclotomic polynomials

def cyclotomic_polynomial(m: int) -> list[int]:
    """Integer coefficients of the m-th cyclotomic polynomial, lowest degree first.

    Computed as (x^m - 1) divided exactly by every Phi_d with d | m, d < m.
    """
    if m < 1:
        raise ValueError("m must be positive")
    return list(_cyclotomic(m))


@lru_cache(maxsize=None)
def _cyclotomic(m: int) -> tuple[int, ...]:
    num = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            num = _exact_divide_int_poly(num, list(_cyclotomic(d)))
    return tuple(num)


def _exact_divide_int_poly(num: list[int], den: list[int]) -> list[int]:
    # den is monic
    num = list(num)
    dd = len(den) - 1
    q = [0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c:
            q[k - dd] = c
            for i, di in enumerate(den):
                num[k - dd + i] -= c * di
    if any(num[:dd]):
        raise ArithmeticError("inexact polynomial division")
    return q


# ---------------------------------------------------------------------------

class FieldSpec:
    """A presented number field.

    ``relations`` maps each generator to a polynomial given as a dict from
    exponent tuples (one exponent per generator, in generator order) to
    rationals.  ``embedding`` assigns each generator a complex value used only
    for rendering.
    """

    def __init__(self, generators: Sequence[str], relations: Sequence[dict],
                 embedding: Sequence[complex] | None = None, label: str | None = None):
        self.generators = tuple(generators)
        k = len(self.generators)
        if len(relations) != k:
            raise ValueError("need exactly one relation per generator")
        rels = []
        self.gen_degrees = []
        for i, rel in enumerate(relations):
            rel = {tuple(e): Fraction(c) for e, c in rel.items() if c}
            for e in rel:
                if len(e) != k or any(e[j] for j in range(i + 1, k)):
                    raise ValueError(f"relation {i} involves later generators")
            d = max(e[i] for e in rel)
            lead = [c for e, c in rel.items() if e[i] == d]
            if d < 1 or len(lead) != 1 or any(e[i] == d and any(e[:i]) for e in rel):
                raise ValueError(f"relation {i} must be monic in {self.generators[i]}")
            lc = lead[0]
            rels.append({e: c / lc for e, c in rel.items()})
            self.gen_degrees.append(d)
        self.relations = tuple(rels)
        # g_i^{d_i} = sum of tail terms; integer coefficients when possible
        self._tails = []
        for i, rel in enumerate(rels):
            tail = [(e, -c) for e, c in sorted(rel.items()) if e[i] < self.gen_degrees[i]]
            if all(c.denominator == 1 for _, c in tail):
                tail = [(e, int(c)) for e, c in tail]
            self._tails.append(tail)
        self._memo = {}
        self.label = label
        self.embedding = tuple(embedding) if embedding is not None else None

        self.basis = sorted(itertools.product(*(range(d) for d in self.gen_degrees)))
        self.degree = len(self.basis)
        self._index = {e: i for i, e in enumerate(self.basis)}

        # product grid: exponents up to 2(d-1) per generator
        sizes = [2 * d - 1 for d in self.gen_degrees]
        strides = []
        s = 1
        for size in reversed(sizes):
            strides.append(s)
            s *= size
        strides.reverse()
        self._grid_size = s
        self._basis_grid = [sum(e * st for e, st in zip(b, strides)) for b in self.basis]
        # reduce every grid monomial to the basis, with a common integer denominator
        reductions = []
        tden = 1
        for cell in itertools.product(*(range(size) for size in sizes)):
            vec = [Fraction(v) for v in self._reduce_monomial(cell)]
            reductions.append(vec)
            for c in vec:
                tden = tden * c.denominator // math.gcd(tden, c.denominator)
        self._tden = mpz(tden)
        direct = {g: i for i, g in enumerate(self._basis_grid)}
        self._direct = [direct.get(cell) for cell in range(self._grid_size)]
        self._table = [
            [(k, mpz(c * tden)) for k, c in enumerate(vec) if c] for vec in reductions
        ]
        self._key = (self.generators, tuple(tuple(sorted(r.items())) for r in self.relations))

    def _reduce_monomial(self, e: tuple) -> list:
        """Coordinates of the monomial g^e on the reduced basis (memoized)."""
        memo = self._memo
        if e in memo:
            return memo[e]
        stack = [e]
        while stack:
            cur = stack[-1]
            if cur in memo:
                stack.pop()
                continue
            i = next((i for i in range(len(cur) - 1, -1, -1) if cur[i] >= self.gen_degrees[i]), None)
            if i is None:
                vec = [0] * self.degree
                vec[self._index[cur]] = 1
                memo[cur] = vec
                stack.pop()
                continue
            base = list(cur)
            base[i] -= self.gen_degrees[i]
            shifted = [tuple(b + t for b, t in zip(base, te)) for te, _ in self._tails[i]]
            missing = [m for m in shifted if m not in memo]
            if missing:
                stack.extend(missing)
                continue
            vec = [0] * self.degree
            for m, (_, c) in zip(shifted, self._tails[i]):
                for k, v in enumerate(memo[m]):
                    if v:
                        vec[k] += c * v
            memo[cur] = vec
            stack.pop()
        return memo[e]

    def _reduce_poly(self, poly: dict) -> list[Fraction]:
        vec = [Fraction(0)] * self.degree
        for e, c in poly.items():
            for k, v in enumerate(self._reduce_monomial(tuple(e))):
                if v:
                    vec[k] += c * v
        return vec

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        if self.label:
            return f"FieldSpec({self.label}, degree={self.degree})"
        return f"FieldSpec({', '.join(self.generators)}; degree={self.degree})"

    # -- element constructors -------------------------------------------

    def zero(self) -> FieldElement:
        return FieldElement(self, (ZERO,) * self.degree, ONE)

    def one(self) -> FieldElement:
        return self(1)

    def __call__(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatchError(f"{value!r} does not belong to {self!r}")
            return value
        q = Fraction(value)
        num = [ZERO] * self.degree
        num[0] = mpz(q.numerator)
        return FieldElement(self, tuple(num), mpz(q.denominator))

    def gen(self, name: str) -> FieldElement:
        i = self.generators.index(name)
        e = [0] * len(self.generators)
        e[i] = 1
        return self.from_poly({tuple(e): 1})

    def gens(self) -> tuple[FieldElement, ...]:
        return tuple(self.gen(g) for g in self.generators)

    def from_poly(self, poly: dict) -> FieldElement:
        vec = self._reduce_poly({tuple(e): Fraction(c) for e, c in poly.items()})
        return FieldElement.from_fractions(self, vec)

    def from_vector(self, coeffs: Sequence) -> FieldElement:
        return FieldElement.from_fractions(self, [Fraction(c) for c in coeffs])

    # -- raw integral arithmetic used by the hot loops -------------------

    def _mul_raw(self, a, b):
        """Product of two integer numerator vectors (result scaled by ``_tden``)."""
        conv = [ZERO] * self._grid_size
        bg = self._basis_grid
        nzb = [(bg[j], bj) for j, bj in enumerate(b) if bj]
        if not nzb:
            return None
        for i, ai in enumerate(a):
            if ai:
                gi = bg[i]
                for gj, bj in nzb:
                    conv[gi + gj] += ai * bj
        out = [ZERO] * self.degree
        direct = self._direct
        table = self._table
        tden = self._tden
        for cell, c in enumerate(conv):
            if c:
                d = direct[cell]
                if d is not None and tden == 1:
                    out[d] += c
                else:
                    for k, t in table[cell]:
                        out[k] += t * c
        return out

    def _mul_matrix(self, a) -> list[list[mpz]]:
        """Integer matrix (scaled by ``_tden``) of multiplication by ``a``."""
        cols = []
        for i in range(self.degree):
            e = [ZERO] * self.degree
            e[i] = ONE
            cols.append(self._mul_raw(a, e) or [ZERO] * self.degree)
        return [[cols[j][i] for j in range(self.degree)] for i in range(self.degree)]

    def _inverse_raw(self, a):
        """Return (w, d) with a^{-1} = w / d, w integral, d a positive integer.

        Solves (multiplication-by-a) x = 1 over Q by fraction-free elimination.
        """
        n = self.degree
        m = self._mul_matrix(a)
        aug = [row + [ONE if i == 0 else ZERO] for i, row in enumerate(m)]
        sol = _solve_integer_square(aug, n)
        if sol is None:
            raise ZeroDivisionError("element is not invertible (zero)")
        w, d = sol
        # undo the _tden scaling of the multiplication matrix
        w = [x * self._tden for x in w]
        g = reduce(gmpy2.gcd, w, d)
        if d < 0:
            g = -g
        return [gmpy2.divexact(x, g) for x in w], gmpy2.divexact(d, g)


def _solve_integer_square(aug, n):
    """Fraction-free solve of an n x (n+1) augmented integer system.

    Returns (x_numerators, common_denominator) or None when singular.
    """
    a = [list(r) for r in aug]
    divexact = gmpy2.divexact
    prev = ONE
    for k in range(n):
        p = next((i for i in range(k, n) if a[i][k]), None)
        if p is None:
            return None
        if p != k:
            a[k], a[p] = a[p], a[k]
        piv = a[k][k]
        rk = a[k][k + 1:]
        for i in range(k + 1, n):
            ri = a[i]
            f = ri[k]
            tail = ri[k + 1:]
            if prev == 1:
                if f:
                    new = [piv * x - f * y for x, y in zip(tail, rk)]
                else:
                    new = [piv * x for x in tail]
            elif f:
                new = [divexact(piv * x - f * y, prev) for x, y in zip(tail, rk)]
            else:
                new = [divexact(piv * x, prev) if x else x for x in tail]
            ri[k:] = [ZERO] + new
        prev = piv
    det = a[n - 1][n - 1]
    x = [ZERO] * n
    # x_i = det * y_i is integral by Cramer's rule
    for i in range(n - 1, -1, -1):
        row = a[i]
        s = det * row[n]
        for j in range(i + 1, n):
            if row[j]:
                s -= row[j] * x[j]
        x[i] = divexact(s, row[i])
    return x, det


class FieldElement:
    """Immutable element of a :class:`FieldSpec`, always fully reduced."""

    __slots__ = ("field", "num", "den", "_hash")

    def __init__(self, field: FieldSpec, num, den):
        g = reduce(gmpy2.gcd, num, den)
        if g != 1:
            num = tuple(gmpy2.divexact(x, g) for x in num)
            den = gmpy2.divexact(den, g)
        else:
            num = tuple(num)
        if den < 0:
            num = tuple(-x for x in num)
            den = -den
        self.field = field
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def from_fractions(cls, field: FieldSpec, vec: Sequence[Fraction]) -> FieldElement:
        den = mpz(1)
        for c in vec:
            den = gmpy2.lcm(den, c.denominator)
        num = tuple(mpz(c.numerator) * gmpy2.divexact(den, c.denominator) for c in vec)
        return cls(field, num, den)

    @classmethod
    def _from_raw(cls, field, num, den=ONE):
        return cls(field, num, den)

    def coefficients(self) -> list[Fraction]:
        return [Fraction(int(x), int(self.den)) for x in self.num]

    def is_zero(self) -> bool:
        return not any(self.num)

    def __bool__(self):
        return any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def _coerce(self, other) -> FieldElement:
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatchError(
                    f"cannot combine elements of {self.field!r} and {other.field!r}")
            return other
        if isinstance(other, (int, Fraction)) or hasattr(other, "__index__"):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return FieldElement(self.field, tuple(a + b for a, b in zip(self.num, other.num)), self.den)
        return FieldElement(
            self.field,
            tuple(a * other.den + b * self.den for a, b in zip(self.num, other.num)),
            self.den * other.den,
        )

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, tuple(-a for a in self.num), self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        f = self.field
        num = f._mul_raw(self.num, other.num)
        if num is None:
            return f.zero()
        return FieldElement(f, tuple(num), self.den * other.den * f._tden)

    __rmul__ = __mul__

    def inverse(self) -> FieldElement:
        if not self:
            raise ZeroDivisionError("division by zero in number field")
        if self.is_rational():
            num = [ZERO] * len(self.num)
            num[0] = self.den
            return FieldElement(self.field, tuple(num), self.num[0])
        w, d = self.field._inverse_raw(self.num)
        # (num/den)^{-1} = den * w / d
        return FieldElement(self.field, tuple(x * self.den for x in w), d)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coefficients()[0] == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def sort_key(self):
        return (tuple(int(x) for x in self.num), int(self.den))

    def __str__(self):
        return to_string(self)

    def __repr__(self):
        return f"<{to_string(self)}>"


def to_string(a: FieldElement) -> str:
    """Canonical serialization, e.g. ``(-1/2)*s^2 + 3``.

    Terms in descending total degree, ties broken by exponent tuple in
    generator order (largest first).
    """
    f = a.field
    terms = []
    for e, c in zip(f.basis, a.coefficients()):
        if c:
            terms.append((e, c))
    if not terms:
        return "0"
    terms.sort(key=lambda t: (sum(t[0]), t[0]), reverse=True)
    parts = []
    for e, c in terms:
        mono = "*".join(
            g if k == 1 else f"{g}^{k}" for g, k in zip(f.generators, e) if k
        )
        if c.denominator == 1 and c >= 0:
            coef = str(c.numerator)
        else:
            coef = f"({c})"
        if not mono:
            parts.append(coef)
        elif c == 1:
            parts.append(mono)
        else:
            parts.append(f"{coef}*{mono}")
    return " + ".join(parts)


def parse_element(field: FieldSpec, text: str) -> FieldElement:
    """Parse the canonical string form (or any polynomial expression in the generators)."""
    tree = ast.parse(text.replace("^", "**"), mode="eval")

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return field(node.value)
        if isinstance(node, ast.Name):
            if node.id not in field.generators:
                raise ValueError(f"unknown generator {node.id!r}")
            return field.gen(node.id)
        if isinstance(node, ast.UnaryOp):
            if isinstance(node.op, ast.USub):
                return -ev(node.operand)
            if isinstance(node.op, ast.UAdd):
                return ev(node.operand)
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                if not (isinstance(node.right, ast.Constant) and isinstance(node.right.value, int)):
                    raise ValueError("exponents must be integer literals")
                return ev(node.left) ** node.right.value
            lhs, rhs = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Add):
                return lhs + rhs
            if isinstance(node.op, ast.Sub):
                return lhs - rhs
            if isinstance(node.op, ast.Mult):
                return lhs * rhs
            if isinstance(node.op, ast.Div):
                return lhs / rhs
        raise ValueError(f"cannot parse field element: {text!r}")

    return ev(tree)


def embed_numeric(a: FieldElement, precision_hint: int = 53) -> complex:
    """Image of ``a`` under the field's designated complex embedding.

    Only double precision is supported; ``precision_hint`` is accepted for
    interface compatibility and ignored beyond that.
    """
    f = a.field
    if f.embedding is None:
        raise ValueError(f"{f!r} has no designated embedding")
    total = 0j
    for e, c in zip(f.basis, a.coefficients()):
        if c:
            term = complex(c)
            for g, k in zip(f.embedding, e):
                term *= g ** k
            total += term
    return total


# ---------------------------------------------------------------------------
# field constructors

def _totient(m: int) -> int:
    result, k, p = m, m, 2
    while p * p <= k:
        if k % p == 0:
            while k % p == 0:
                k //= p
            result -= result // p
        p += 1
    if k > 1:
        result -= result // k
    return result


@lru_cache(maxsize=None)
def make_cyclotomic(m: int) -> FieldSpec:
    """Q(zeta_m) presented by the m-th cyclotomic polynomial, generator ``zeta``."""
    if m < 1:
        raise ValueError("m must be >= 1")
    phi = _cyclotomic(m)
    rel = {(k,): c for k, c in enumerate(phi) if c}
    spec = FieldSpec(["zeta"], [rel], embedding=[cmath.exp(2j * cmath.pi / m)],
                     label=f"Q(zeta_{m})")
    spec.conductor = m
    return spec


@lru_cache(maxsize=None)
def make_fermat_field() -> FieldSpec:
    """Q(s, t) with s^3 + 2 = 0 and t^2 + t + 1 = 0 (s real, t = exp(2 pi i / 3))."""
    rel_s = {(3, 0): 1, (0, 0): 2}
    rel_t = {(0, 2): 1, (0, 1): 1, (0, 0): 1}
    return FieldSpec(
        ["s", "t"], [rel_s, rel_t],
        embedding=[-(2 ** (1 / 3)), cmath.exp(2j * cmath.pi / 3)],
        label="Q(s,t)",
    )


# ---------------------------------------------------------------------------
# dense linear algebra

class ExactMatrix:
    """Dense row-major matrix of elements of one field."""

    def __init__(self, field: FieldSpec, rows: Iterable[Sequence], ncols: int | None = None):
        self.field = field
        self.rows = [[field(x) for x in row] for row in rows]
        self.nrows = len(self.rows)
        if ncols is None:
            ncols = len(self.rows[0]) if self.rows else 0
        self.ncols = ncols
        for row in self.rows:
            if len(row) != ncols:
                raise ValueError("ragged matrix")

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def apply(self, vec: Sequence[FieldElement]) -> list[FieldElement]:
        out = []
        for row in self.rows:
            acc = self.field.zero()
            for a, b in zip(row, vec):
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return out


def _integral_rows(field: FieldSpec, rows) -> list[list]:
    """Scale each row by the lcm of its denominators; entries become raw mpz lists or None."""
    out = []
    for row in rows:
        den = ONE
        for x in row:
            if x.den != 1:
                den = gmpy2.lcm(den, x.den)
        raw = []
        for x in row:
            if x:
                s = gmpy2.divexact(den, x.den)
                raw.append([c * s for c in x.num])
            else:
                raw.append(None)
        # strip rational content so entries stay small
        g = ZERO
        for e in raw:
            if e is not None:
                for c in e:
                    g = gmpy2.gcd(g, c)
                    if g == 1:
                        break
            if g == 1:
                break
        if g > 1:
            raw = [None if e is None else [gmpy2.divexact(c, g) for c in e] for e in raw]
        out.append(raw)
    return out


def _echelon(field: FieldSpec, rows, ncols: int):
    """Fraction-free (Bareiss) forward elimination on integral rows.

    Pivot choice: first row (in current order) with a nonzero entry in the
    lowest column not yet processed.  Returns (echelon_rows, pivot_columns).
    """
    rows = [list(r) for r in rows]
    nrows = len(rows)
    pivots = []
    prev_inv = None  # (w, d) with previous pivot^{-1} = w/d
    r = 0
    mul = field._mul_raw
    tden = field._tden
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c] is not None), None)
        if p is None:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
        prow = rows[r]
        piv = prow[c]
        tail = [(j, prow[j]) for j in range(c + 1, ncols) if prow[j] is not None]
        for i in range(r + 1, nrows):
            row = rows[i]
            f = row[c]
            row[c] = None
            for j in range(c + 1, ncols):
                x = row[j]
                if x is not None:
                    row[j] = mul(piv, x)
            if f is not None:
                for j, y in tail:
                    t = mul(f, y)
                    x = row[j]
                    row[j] = [-v for v in t] if x is None else [a - b for a, b in zip(x, t)]
            if prev_inv is not None or tden != 1:
                w, d = prev_inv if prev_inv is not None else (None, ONE)
                dd = d * tden
                for j in range(c + 1, ncols):
                    x = row[j]
                    if x is not None:
                        if not any(x):
                            row[j] = None
                            continue
                        q = mul(x, w) if w is not None else x
                        row[j] = [gmpy2.divexact(v, dd) for v in q]
            else:
                for j in range(c + 1, ncols):
                    x = row[j]
                    if x is not None and not any(x):
                        row[j] = None
        pivots.append(c)
        prev_inv = field._inverse_raw(piv)
        r += 1
    return rows[:r], pivots


def rank(M: ExactMatrix) -> int:
    if M.nrows == 0 or M.ncols == 0:
        return 0
    _, pivots = _echelon(M.field, _integral_rows(M.field, M.rows), M.ncols)
    return len(pivots)


def nullspace(M: ExactMatrix) -> list[list[FieldElement]]:
    """Basis of {x : Mx = 0} in reduced echelon form.

    Vector k has a 1 in the k-th free column and 0 in every other free column,
    so the basis is unique and independent of elimination details.
    """
    field = M.field
    n = M.ncols
    if M.nrows == 0:
        ech, pivots = [], []
    else:
        ech, pivots = _echelon(field, _integral_rows(field, M.rows), n)
    pivset = set(pivots)
    free = [c for c in range(n) if c not in pivset]
    if not free:
        return []
    zero = field.zero()
    # pivot rows as field elements; entries are integral
    urows = [
        {j: FieldElement(field, tuple(x), ONE) for j, x in enumerate(row) if x is not None}
        for row in ech
    ]
    pinv = [urows[i][pivots[i]].inverse() for i in range(len(pivots))]
    basis = []
    for fcol in free:
        x = [zero] * n
        x[fcol] = field.one()
        for i in range(len(pivots) - 1, -1, -1):
            pc = pivots[i]
            acc = zero
            for j, u in urows[i].items():
                if j > pc and x[j]:
                    acc = acc + u * x[j]
            if acc:
                x[pc] = -acc * pinv[i]
        basis.append(x)
    return basis


def row_basis(M: ExactMatrix) -> list[list[FieldElement]]:
    """Basis of the row space: the nonzero rows of a fraction-free echelon form."""
    if M.nrows == 0 or M.ncols == 0:
        return []
    field = M.field
    ech, _ = _echelon(field, _integral_rows(field, M.rows), M.ncols)
    zero = field.zero()
    return [[zero if x is None else FieldElement(field, tuple(x), ONE) for x in row] for row in ech]
