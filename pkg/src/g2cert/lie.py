"""Lie algebras by structure constants and by matrix realization.

Covers brackets, Killing forms and Cartan's semisimplicity criterion,
derivation algebras of nonassociative algebras, so(p,q) of a symmetric form,
bracket-generated closures, centralizers, and bracket transporters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Optional, Sequence

from .errors import DegenerateFormError
from .linalg import (
    Matrix,
    Subspace,
    ZERO,
    ONE,
    _int_rref,
    kernel_basis,
    signature,
)
from .octonion import StructureConstantAlgebra


class LieAlgebra:
    """A Lie algebra given by a bracket tensor [e_i, e_j] = sum_k c[i][j][k] e_k,
    optionally carrying a faithful matrix realization of the basis.

    Antisymmetry is checked at construction.  When a realization is supplied
    the brackets are checked against matrix commutators, which also forces the
    Jacobi identity; for small abstract algebras Jacobi is checked directly
    (verify_jacobi covers the rest and is exercised by the test suite).
    """

    def __init__(
        self,
        brackets: tuple,
        name: str = "",
        realization: Optional[tuple[Matrix, ...]] = None,
    ):
        self.brackets = tuple(
            tuple(tuple(Fraction(x) for x in prod) for prod in row) for row in brackets
        )
        self.dim = len(self.brackets)
        self.name = name
        self.realization = tuple(realization) if realization is not None else None
        for i in range(self.dim):
            if len(self.brackets[i]) != self.dim or any(
                len(p) != self.dim for p in self.brackets[i]
            ):
                raise ValueError("bracket tensor has wrong shape")
        for i in range(self.dim):
            for j in range(i, self.dim):
                if self.brackets[i][j] != tuple(-x for x in self.brackets[j][i]):
                    raise ValueError(f"brackets not antisymmetric at ({i},{j})")
        if self.realization is not None:
            if len(self.realization) != self.dim:
                raise ValueError("realization size does not match dimension")
            self._check_realization()
        elif self.dim <= 12:
            if not self.verify_jacobi():
                raise ValueError("Jacobi identity fails")

    def _check_realization(self):
        mats = self.realization
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                lhs = mats[i].commutator(mats[j])
                rhs = Matrix.zeros(*lhs.shape)
                for k, ck in enumerate(self.brackets[i][j]):
                    if ck:
                        rhs = rhs + mats[k].scale(ck)
                if lhs != rhs:
                    raise ValueError(
                        f"realization inconsistent with brackets at ({i},{j})"
                    )

    # -- bracket machinery ------------------------------------------------

    @cached_property
    def _sparse(self) -> list[list[tuple[tuple[int, Fraction], ...]]]:
        return [
            [
                tuple((k, c) for k, c in enumerate(prod) if c)
                for prod in row
            ]
            for row in self.brackets
        ]

    @cached_property
    def _sparse_int(self) -> tuple[list[list[tuple[tuple[int, int], ...]]], int]:
        """Integer-scaled sparse brackets (table, denominator)."""
        den = 1
        for row in self.brackets:
            for prod in row:
                for x in prod:
                    d = x.denominator
                    if d != 1:
                        den = den * d // math.gcd(den, d)
        table = [
            [
                tuple((k, int(c * den)) for k, c in enumerate(prod) if c)
                for prod in row
            ]
            for row in self.brackets
        ]
        return table, den

    def bracket(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> tuple[Fraction, ...]:
        """Bracket of two coordinate vectors."""
        out = [ZERO] * self.dim
        sparse = self._sparse
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = sparse[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = xi * yj
                for k, m in row[j]:
                    out[k] += c * m
        return tuple(out)

    def _bracket_int(self, x: Sequence[int], y: Sequence[int]) -> list[int]:
        """Integer bracket against the scaled table (result scaled by the
        table denominator, which is irrelevant for span computations)."""
        table, _ = self._sparse_int
        out = [0] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = table[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = xi * yj
                for k, m in row[j]:
                    out[k] += c * m
        return out

    def ad(self, x: Sequence[Fraction]) -> Matrix:
        """Matrix of ad(x): y -> [x, y] in basis coordinates."""
        cols = []
        for j in range(self.dim):
            col = [ZERO] * self.dim
            for i, xi in enumerate(x):
                if not xi:
                    continue
                for k, m in self._sparse[i][j]:
                    col[k] += xi * m
            cols.append(col)
        return Matrix(cols).transpose()

    @cached_property
    def ad_basis(self) -> tuple[Matrix, ...]:
        basis = []
        for i in range(self.dim):
            coords = [ZERO] * self.dim
            coords[i] = ONE
            basis.append(self.ad(coords))
        return tuple(basis)

    def verify_jacobi(self) -> bool:
        """[ [x,y], z ] cycles sum to zero, checked as ad([x,y]) = [ad x, ad y]
        on all basis pairs (equivalent, and quadratic rather than cubic)."""
        ads = self.ad_basis
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                lhs = Matrix.zeros(self.dim, self.dim)
                for k, c in self._sparse[i][j]:
                    lhs = lhs + ads[k].scale(c)
                if lhs != ads[i].commutator(ads[j]):
                    return False
        return True

    @classmethod
    def from_matrix_basis(
        cls, mats: Sequence[Matrix], name: str = ""
    ) -> "LieAlgebra":
        """Build from a linearly independent family of matrices closed under
        commutators; raises if a commutator escapes the span."""
        mats = tuple(mats)
        if not mats:
            return cls(brackets=(), name=name, realization=())
        span = Subspace.from_vectors(
            mats[0].nrows * mats[0].ncols, [m.flatten() for m in mats]
        )
        if span.dim != len(mats):
            raise ValueError("matrix basis is linearly dependent")
        # coordinates relative to the given (not the canonical) basis
        change = Matrix(
            [span.coordinates_of(m.flatten()) for m in mats]
        ).transpose().inverse()
        dim = len(mats)
        brackets = []
        for i in range(dim):
            row = []
            for j in range(dim):
                if j < i:
                    row.append(tuple(-x for x in brackets[j][i]))
                    continue
                if j == i:
                    row.append((ZERO,) * dim)
                    continue
                comm = mats[i].commutator(mats[j])
                canon = span.coordinates_of(comm.flatten())
                if canon is None:
                    raise ValueError("matrix family is not commutator-closed")
                row.append(change.apply(canon))
            brackets.append(tuple(row))
        return cls(brackets=tuple(brackets), name=name, realization=mats)

    @classmethod
    def abelian(cls, dim: int, name: str = "abelian") -> "LieAlgebra":
        zero = (ZERO,) * dim
        return cls(
            brackets=tuple(tuple(zero for _ in range(dim)) for _ in range(dim)),
            name=name,
        )

    @classmethod
    def zero(cls) -> "LieAlgebra":
        return cls(brackets=(), name="0")

    @classmethod
    def direct_sum(cls, a: "LieAlgebra", b: "LieAlgebra", name: str = "") -> "LieAlgebra":
        dim = a.dim + b.dim
        zero = (ZERO,) * dim
        brackets = []
        for i in range(dim):
            row = []
            for j in range(dim):
                if i < a.dim and j < a.dim:
                    row.append(tuple(a.brackets[i][j]) + (ZERO,) * b.dim)
                elif i >= a.dim and j >= a.dim:
                    row.append((ZERO,) * a.dim + tuple(b.brackets[i - a.dim][j - a.dim]))
                else:
                    row.append(zero)
            brackets.append(tuple(row))
        return cls(brackets=tuple(brackets), name=name or f"{a.name}+{b.name}")


@dataclass(frozen=True)
class KillingForm:
    gram: Matrix
    signature: tuple[int, int, int]

    @property
    def nondegenerate(self) -> bool:
        return self.signature[2] == 0


def killing_form(g: LieAlgebra) -> KillingForm:
    """Exact Gram matrix of (x, y) -> trace(ad x ad y) and its signature."""
    ads = g.ad_basis
    sparse = [
        [(k, m, v) for k, row in enumerate(mat.rows) for m, v in enumerate(row) if v]
        for mat in ads
    ]
    n = g.dim
    rows = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            t = sum((v * ads[j].rows[m][k] for k, m, v in sparse[i]), ZERO)
            rows[i][j] = rows[j][i] = t
    gram = Matrix(rows)
    return KillingForm(gram=gram, signature=signature(gram))


def is_semisimple(g: LieAlgebra) -> bool:
    """Cartan's criterion: the Killing form is nondegenerate."""
    return killing_form(g).nondegenerate


def derivation_algebra(alg: StructureConstantAlgebra) -> LieAlgebra:
    """All D with D(xy) = D(x)y + x D(y), as a Lie algebra under commutators.

    The constraint is linear in the dim^2 unknowns D[l][k]; the kernel of the
    dim^3 x dim^2 system is the derivation space.
    """
    n = alg.dim
    mul = alg.mul
    rows = []
    for i in range(n):
        for j in range(n):
            prod = mul[i][j]
            for l in range(n):
                row = [ZERO] * (n * n)
                for k in range(n):
                    if prod[k]:
                        row[l * n + k] += prod[k]
                for m in range(n):
                    if mul[m][j][l]:
                        row[m * n + i] -= mul[m][j][l]
                    if mul[i][m][l]:
                        row[m * n + j] -= mul[i][m][l]
                rows.append(row)
    kern = kernel_basis(Matrix(rows))
    mats = [Matrix.from_flat(v, n, n) for v in kern.basis]
    return LieAlgebra.from_matrix_basis(mats, name=f"der(dim {n})")


def so_of_form(b: Matrix) -> LieAlgebra:
    """so(b) = {X : X^T b + b X = 0} for a symmetric invertible b."""
    n = b.nrows
    if n != b.ncols or not b.is_symmetric():
        raise DegenerateFormError("so_of_form requires a symmetric matrix")
    if b.rank() != n:
        raise DegenerateFormError("so_of_form requires an invertible form")
    rows = []
    for i in range(n):
        for j in range(i, n):
            row = [ZERO] * (n * n)
            for k in range(n):
                if b.rows[k][j]:
                    row[k * n + i] += b.rows[k][j]
                if b.rows[i][k]:
                    row[k * n + j] += b.rows[i][k]
            rows.append(row)
    kern = kernel_basis(Matrix(rows))
    mats = [Matrix.from_flat(v, n, n) for v in kern.basis]
    alg = LieAlgebra.from_matrix_basis(mats, name=f"so({n})")
    assert alg.dim == n * (n - 1) // 2
    return alg


def _vec_to_int(vec: Sequence[Fraction]) -> list[int]:
    den = 1
    for x in vec:
        d = x.denominator
        if d != 1:
            den = den * d // math.gcd(den, d)
    out = [int(x * den) for x in vec]
    g = 0
    for x in out:
        if x:
            g = math.gcd(g, x)
    if g > 1:
        out = [x // g for x in out]
    return out


def subalgebra_closure(g: LieAlgebra, seed: Subspace) -> Subspace:
    """Smallest bracket-closed subspace containing the seed: iterate
    S <- S + [S, S] until the dimension stabilizes."""
    if seed.ambient_dim != g.dim:
        raise ValueError("seed lives in the wrong ambient space")
    basis = [_vec_to_int(v) for v in seed.basis]
    dim = len(basis)
    while True:
        if dim == g.dim:
            break
        new_rows = list(basis)
        for a in range(len(basis)):
            for b in range(a + 1, len(basis)):
                v = g._bracket_int(basis[a], basis[b])
                if any(v):
                    new_rows.append(v)
        reduced, pivots = _int_rref(new_rows)
        if len(pivots) == dim:
            break
        dim = len(pivots)
        basis = [_vec_to_int(r) for r in reduced[:dim]]
    return Subspace.from_vectors(g.dim, [[Fraction(x) for x in row] for row in basis])


def centralizer(g: LieAlgebra, s: Subspace) -> Subspace:
    """{x in g : [x, v] = 0 for all v in s}."""
    if s.ambient_dim != g.dim:
        raise ValueError("subspace lives in the wrong ambient space")
    if s.dim == 0:
        return Subspace.full(g.dim)
    rows = []
    for v in s.basis:
        rows.extend(g.ad(v).rows)  # [x, v] = -ad(v) x; same kernel
    return kernel_basis(Matrix(rows))


def transporter_into(g: LieAlgebra, target: Subspace) -> Subspace:
    """{h in g : [h, g] ⊆ target}, by exact kernel computation."""
    if target.ambient_dim != g.dim:
        raise ValueError("target lives in the wrong ambient space")
    ann = kernel_basis(Matrix(target.basis)) if target.dim else Subspace.full(g.dim)
    if ann.dim == 0:
        return Subspace.full(g.dim)
    proj = Matrix(ann.basis)
    rows = []
    for j in range(g.dim):
        # column map h -> [h, e_j]; entry (k, i) is c[i][j][k]
        mj = Matrix(
            [[g.brackets[i][j][k] for i in range(g.dim)] for k in range(g.dim)]
        )
        rows.extend((proj * mj).rows)
    return kernel_basis(Matrix(rows))


def killing_restriction(g: LieAlgebra, sub: Subspace) -> Matrix:
    """Gram matrix of the Killing form restricted to a subspace basis."""
    k = killing_form(g).gram
    b = Matrix(sub.basis)
    return b * k * b.transpose()
