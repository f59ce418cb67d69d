"""Graded pieces of ideals of (fat) points in the projective plane."""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Sequence

import gmpy2

from .exactfield import ExactMatrix, FieldElement, FieldSpec, nullspace, rank, row_basis
from .forms import Form, falling, monomials, product
from .projplane import ProjLine, ProjPoint, dedupe_projective


class IncompleteGeneratorsError(RuntimeError):
    """Generators are not known to be complete in the degrees a query needs."""


@dataclass
class FatPointScheme:
    field: FieldSpec
    points: list[ProjPoint]
    label: str = ""
    _pieces: dict = dc_field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        self.points = dedupe_projective(self.points)

    def __len__(self):
        return len(self.points)


@dataclass
class GradedPiece:
    degree: int
    multiplicity: int
    basis: list[list[FieldElement]]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def forms(self, field: FieldSpec) -> list[Form]:
        return [Form.from_vector(field, self.degree, v) for v in self.basis]


def _integral_coords(p: ProjPoint) -> list[FieldElement]:
    den = 1
    for c in p.coords:
        den = gmpy2.lcm(den, c.den)
    return [c * int(den) for c in p.coords]


def _chart(p: ProjPoint) -> int:
    if p.coords[2]:
        return 2
    return 0 if p.coords[0] else 1


def condition_rows(p: ProjPoint, m: int, d: int) -> list[list[FieldElement]]:
    """Rows expressing that a degree-d form vanishes to order >= m at p.

    In the chart where coordinate k is nonzero, every partial derivative in the
    two remaining variables of total order < m must vanish at p.  Rows are
    evaluated at an integral representative of p; each row is homogeneous in
    the representative, so rescaling p only rescales rows.
    """
    field = p.field
    coords = _integral_coords(p)
    k = _chart(p)
    u, v = [i for i in range(3) if i != k]
    pw = []
    for c in coords:
        powers = [field.one()]
        for _ in range(d):
            powers.append(powers[-1] * c)
        pw.append(powers)
    mons = monomials(d)
    zero = field.zero()
    rows = []
    for order in range(min(m, d + 1)):
        for a in range(order, -1, -1):
            b = order - a
            row = []
            for e in mons:
                if e[u] < a or e[v] < b:
                    row.append(zero)
                    continue
                scal = falling(e[u], a) * falling(e[v], b)
                val = pw[u][e[u] - a] * pw[v][e[v] - b] * pw[k][e[k]]
                row.append(val * scal if val else zero)
            rows.append(row)
    return rows


def condition_matrix(scheme: FatPointScheme, m: int, d: int) -> ExactMatrix:
    rows = []
    for p in scheme.points:
        rows.extend(condition_rows(p, m, d))
    return ExactMatrix(scheme.field, rows, ncols=len(monomials(d)))


def symbolic_piece(scheme: FatPointScheme, m: int, d: int) -> GradedPiece:
    """Degree-d forms vanishing to order >= m at every point of the scheme."""
    if m < 1 or d < 0:
        raise ValueError("need m >= 1 and d >= 0")
    key = (m, d)
    if key not in scheme._pieces:
        M = condition_matrix(scheme, m, d)
        scheme._pieces[key] = GradedPiece(d, m, nullspace(M))
    return scheme._pieces[key]


def vanishes_to_order(f: Form, points: Sequence[ProjPoint], m: int) -> bool:
    """Direct check: every partial derivative of f of order < m vanishes at every point."""
    partials = [f]
    layer = [f]
    for _ in range(m - 1):
        nxt = {}
        for g in layer:
            for v in range(3):
                h = g.derivative(v)
                if h:
                    nxt.setdefault(h, h)
        layer = list(nxt)
        partials.extend(layer)
    return all(not g.evaluate(p.coords) for p in points for g in partials)


def alpha(scheme: FatPointScheme, m: int = 1, d_max: int | None = None) -> int:
    """Least degree of a nonzero form vanishing to order >= m at every point."""
    if m < 1:
        raise ValueError("m must be >= 1")
    limit = d_max if d_max is not None else m * len(scheme) + 1
    for d in range(m, limit + 1):
        if symbolic_piece(scheme, m, d).dim:
            return d
    raise RuntimeError(f"no form of degree <= {limit} vanishes to order {m}")


def waldschmidt_estimate(scheme: FatPointScheme, m_max: int) -> Fraction:
    """min over m <= m_max of alpha(m)/m, an upper bound for the Waldschmidt constant."""
    if m_max < 1:
        raise ValueError("m_max must be >= 1")
    return min(Fraction(alpha(scheme, m), m) for m in range(1, m_max + 1))


@dataclass
class IdealSummary:
    hilbert_function: dict[int, int]
    alpha: int | None
    generator_degrees: list[int]
    complete: bool
    d_max: int
    n_points: int
    generators: dict[int, list[Form]] = dc_field(default_factory=dict, repr=False)
    pieces: dict[int, GradedPiece] = dc_field(default_factory=dict, repr=False)

    def generators_known_through(self, d: int) -> bool:
        return self.complete or d <= self.d_max

    def all_generators(self) -> list[Form]:
        return [g for d in sorted(self.generators) for g in self.generators[d]]


def _shift_products(forms: Sequence[Form]) -> list[Form]:
    x, y, z = Form.variables(forms[0].field) if forms else (None, None, None)
    return [v * f for f in forms for v in (x, y, z)]


def _span_rank(field: FieldSpec, forms: Sequence[Form], d: int) -> int:
    if not forms:
        return 0
    return rank(ExactMatrix(field, [f.to_vector() for f in forms], ncols=len(monomials(d))))


def _complement(field: FieldSpec, span: list[Form], candidates: list[Form], count: int, d: int) -> list[Form]:
    """Pick `count` candidates independent modulo span, greedily in order."""
    chosen: list[Form] = []
    base = _span_rank(field, span, d)
    for c in candidates:
        if len(chosen) == count:
            break
        r = _span_rank(field, span + chosen + [c], d)
        if r > base + len(chosen):
            chosen.append(c)
    return chosen


def is_complete(hf: dict[int, int], new: dict[int, int], n_points: int) -> bool:
    """Hilbert function at its final value in some degree d and no new generators in d+1, d+2.

    Once the points impose independent conditions in degree d, the ideal is
    generated in degrees <= d + 1, so the flag certifies completeness.
    """
    for d in sorted(hf):
        total = math.comb(d + 2, 2)
        if total >= n_points and hf[d] == total - n_points:
            if new.get(d + 1) == 0 and new.get(d + 2) == 0:
                return True
    return False


def minimal_generators(scheme: FatPointScheme, d_max: int, stop_when_complete: bool = False) -> IdealSummary:
    """Hilbert function and minimal generator degrees of the ideal of the points up to d_max."""
    if d_max < 1:
        raise ValueError("d_max must be >= 1")
    K = scheme.field
    hf: dict[int, int] = {}
    new: dict[int, int] = {}
    gens: dict[int, list[Form]] = {}
    pieces: dict[int, GradedPiece] = {}
    prev: list[Form] = []
    last = d_max
    for d in range(0, d_max + 1):
        piece = symbolic_piece(scheme, 1, d)
        pieces[d] = piece
        hf[d] = piece.dim
        forms = piece.forms(K)
        shifted = _shift_products(prev) if prev else []
        r = _span_rank(K, shifted, d)
        k = piece.dim - r
        new[d] = k
        if k:
            gens[d] = forms if not shifted else _complement(K, shifted, forms, k, d)
        prev = forms
        if stop_when_complete and is_complete(hf, new, len(scheme)):
            last = d
            break
    degrees = [d for d in sorted(gens) for _ in gens[d]]
    a = next((d for d in sorted(hf) if hf[d]), None)
    return IdealSummary(hf, a, degrees, is_complete(hf, new, len(scheme)), last, len(scheme), gens, pieces)


def generators_until_complete(scheme: FatPointScheme, d_limit: int) -> IdealSummary:
    return minimal_generators(scheme, d_limit, stop_when_complete=True)


def _ideal_piece(scheme: FatPointScheme, gens: IdealSummary, e: int) -> list[Form]:
    if e < 0:
        return []
    if e in gens.pieces:
        return gens.pieces[e].forms(scheme.field)
    return symbolic_piece(scheme, 1, e).forms(scheme.field)


def power_piece(scheme: FatPointScheme, k: int, d: int, gens: IdealSummary) -> GradedPiece:
    """Basis of the degree-d part of the k-th ordinary power of the ideal.

    Uses I^k = sum_i g_i * I^(k-1) over minimal generators g_i, so the
    generators must be known in every degree <= d - (k-1)*alpha.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    K = scheme.field
    if k == 1:
        return GradedPiece(d, 1, list(symbolic_piece(scheme, 1, d).basis))
    if gens.alpha is None:
        return GradedPiece(d, k, [])
    need = d - (k - 1) * gens.alpha
    if not gens.generators_known_through(need):
        raise IncompleteGeneratorsError(
            f"generators known through degree {gens.d_max} (complete={gens.complete}); degree {need} is needed"
        )
    span: list[Form] = []
    for e, gl in sorted(gens.generators.items()):
        if e > d:
            continue
        lower = power_piece(scheme, k - 1, d - e, gens).forms(K) if k > 2 else _ideal_piece(scheme, gens, d - e)
        span.extend(g * f for g in gl for f in lower)
    if not span:
        return GradedPiece(d, k, [])
    basis = row_basis(ExactMatrix(K, [f.to_vector() for f in span], ncols=len(monomials(d))))
    return GradedPiece(d, k, basis)


def in_span(field: FieldSpec, piece: GradedPiece, f: Form) -> bool:
    """Membership by rank comparison."""
    if f.degree != piece.degree:
        raise ValueError("degree mismatch")
    if not f:
        return True
    if not piece.basis:
        return False
    ncols = len(monomials(piece.degree))
    r = rank(ExactMatrix(field, piece.basis, ncols=ncols))
    return rank(ExactMatrix(field, list(piece.basis) + [f.to_vector()], ncols=ncols)) == r


def subspace_contained(field: FieldSpec, small: GradedPiece, big: GradedPiece) -> bool:
    if not small.basis:
        return True
    if not big.basis:
        return False
    ncols = len(monomials(small.degree))
    r = rank(ExactMatrix(field, big.basis, ncols=ncols))
    return rank(ExactMatrix(field, list(big.basis) + list(small.basis), ncols=ncols)) == r


def lines_product(field: FieldSpec, lines: Sequence[ProjLine]) -> Form:
    return product([Form.linear(field, *l.coords) for l in lines])


@dataclass
class ContainmentVerdict:
    scheme: str
    degree: int
    in_symbolic3: bool
    in_square: bool
    generators: list[int]
    complete: bool
    alpha: int | None
    symbolic3_dim: int | None = None
    symbolic3_spanned_by_product: bool | None = None

    @property
    def verdict(self) -> str:
        if self.in_symbolic3 and not self.in_square:
            return "NOT_CONTAINED"
        return "NOT_REFUTED"

    def to_json(self) -> dict:
        w = {"in_symbolic3": self.in_symbolic3, "in_square": self.in_square, "verdict": self.verdict}
        if self.symbolic3_dim is not None:
            w["symbolic3_dim"] = self.symbolic3_dim
            w["symbolic3_spanned_by_product"] = self.symbolic3_spanned_by_product
        return {
            "scheme": self.scheme,
            "alpha": {"m": 1, "value": self.alpha},
            "generators": self.generators,
            "complete": self.complete,
            "witness": w,
        }


def containment_witness(lines: Sequence[ProjLine], points: Sequence[ProjPoint], label: str = "",
                        dim_check: bool = False) -> ContainmentVerdict:
    """Test the product of the lines against the symbolic cube and the ordinary square."""
    lines = list(lines)
    field = lines[0].field
    scheme = FatPointScheme(field, list(points), label)
    F = lines_product(field, lines)
    deg = F.degree
    in3 = vanishes_to_order(F, scheme.points, 3)
    gens = generators_until_complete(scheme, deg)
    if gens.alpha is None:
        raise RuntimeError("ideal has no generators below the witness degree")
    need = deg - gens.alpha
    if not gens.generators_known_through(need):
        raise IncompleteGeneratorsError(f"generators incomplete below degree {need}")
    sq = power_piece(scheme, 2, deg, gens)
    in2 = in_span(field, sq, F)
    verdict = ContainmentVerdict(label, deg, in3, in2, gens.generator_degrees, gens.complete, gens.alpha)
    if dim_check:
        piece = symbolic_piece(scheme, 3, deg)
        verdict.symbolic3_dim = piece.dim
        verdict.symbolic3_spanned_by_product = piece.dim == 1 and piece.forms(field)[0].is_scalar_multiple_of(F)
    return verdict


@dataclass
class ContainmentRange:
    scheme: str
    upto: int
    holds: bool
    first_failure: int | None
    dims: dict[int, tuple[int, int | None]]  # d -> (dim symbolic cube, dim square or None if skipped)

    def to_json(self) -> dict:
        return {
            "scheme": self.scheme,
            "upto": self.upto,
            "holds": self.holds,
            "first_failure": self.first_failure,
            "dims": {str(d): {"symbolic3": a, "square": b} for d, a, b in
                     ((d, *v) for d, v in sorted(self.dims.items()))},
        }


def containment_up_to_degree(scheme: FatPointScheme, D: int) -> ContainmentRange:
    """Check (I^(3))_d inside (I^2)_d for every d <= D by subspace rank comparison."""
    field = scheme.field
    gens = None
    dims = {}
    for d in range(D + 1):
        s3 = symbolic_piece(scheme, 3, d)
        if not s3.dim:
            dims[d] = (0, None)
            continue
        if gens is None:
            gens = generators_until_complete(scheme, D)
        sq = power_piece(scheme, 2, d, gens)
        dims[d] = (s3.dim, sq.dim)
        if not subspace_contained(field, s3, sq):
            return ContainmentRange(scheme.label, D, False, d, dims)
    return ContainmentRange(scheme.label, D, True, None, dims)


def boroczky_scheme(config) -> FatPointScheme:
    from .configuration import triple_points
    return FatPointScheme(config.field, triple_points(config), f"boroczky:{config.n}")


def unique_form_check(config) -> bool:
    """dim (I^(3))_n = 1, spanned by the product of the lines, with the alternating sign."""
    from .symmetry import alternating_sign
    n = config.n
    if n % 6 or n < 12:
        raise ValueError("needs 6 | n and n >= 12")
    scheme = boroczky_scheme(config)
    piece = symbolic_piece(scheme, 3, n)
    if piece.dim != 1:
        return False
    F = lines_product(config.field, config.lines)
    G = piece.forms(config.field)[0]
    return G.is_scalar_multiple_of(F) and alternating_sign(F)
