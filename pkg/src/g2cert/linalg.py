"""Exact dense linear algebra over the rationals.

Everything downstream (structure constants, Killing forms, kernels of
intertwining constraints) runs on the primitives in this module.  All results
are exact ``fractions.Fraction`` values; no floating point is used anywhere.

Two elimination engines sit behind the public API:

* a fraction-free integer row reduction (per-row denominator clearing, gcd
  stripping), used for everything small enough;
* a certified multi-modular kernel solver for large systems: eliminate modulo
  word-sized primes with numpy, CRT-combine, lift by rational reconstruction,
  and then *verify the candidate exactly*.  Nullity mod p upper-bounds the
  true nullity, so a verified candidate of that size is provably the kernel.
  On any verification failure the solver escalates primes and ultimately
  falls back to pure rational elimination, so correctness never depends on
  the fast path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import numpy as np

ZERO = Fraction(0)
ONE = Fraction(1)

# Primes just below 2**31: pivots and row updates stay inside int64.
_PRIMES = (
    2147483647,
    2147483629,
    2147483587,
    2147483579,
    2147483563,
    2147483549,
    2147483543,
    2147483497,
)

# Above this rows*cols*min(rows, cols) estimate, kernel_basis prefers the
# certified modular path.
_MODULAR_THRESHOLD = 1_000_000

# Strip row gcds during integer elimination once entries pass this size.
_GCD_STRIP_BOUND = 1 << 96


class Matrix:
    """Immutable dense matrix with Fraction entries."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable]):
        self.rows = tuple(
            tuple(x if isinstance(x, Fraction) else Fraction(x) for x in row)
            for row in rows
        )
        if self.rows:
            width = len(self.rows[0])
            if any(len(r) != width for r in self.rows):
                raise ValueError("ragged rows")

    @classmethod
    def _raw(cls, rows: tuple) -> "Matrix":
        m = object.__new__(cls)
        m.rows = rows
        return m

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Matrix":
        row = (ZERO,) * ncols
        return cls._raw(tuple(row for _ in range(nrows)))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls._raw(
            tuple(
                tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)
            )
        )

    @classmethod
    def diagonal(cls, entries: Sequence) -> "Matrix":
        n = len(entries)
        return cls._raw(
            tuple(
                tuple(Fraction(entries[i]) if i == j else ZERO for j in range(n))
                for i in range(n)
            )
        )

    @classmethod
    def column(cls, entries: Sequence) -> "Matrix":
        return cls(tuple((x,) for x in entries))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def entry(self, i: int, j: int) -> Fraction:
        return self.rows[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.rows[i]

    def col(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self.rows)

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"Matrix({self.nrows}x{self.ncols})"

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return Matrix._raw(
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.rows, other.rows)
            )
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return Matrix._raw(
            tuple(
                tuple(a - b for a, b in zip(ra, rb))
                for ra, rb in zip(self.rows, other.rows)
            )
        )

    def __neg__(self) -> "Matrix":
        return Matrix._raw(tuple(tuple(-a for a in r) for r in self.rows))

    def scale(self, c) -> "Matrix":
        c = Fraction(c)
        return Matrix._raw(tuple(tuple(c * a for a in r) for r in self.rows))

    def __mul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} * {other.shape}")
        cols = tuple(zip(*other.rows)) if other.rows else ()
        return Matrix._raw(
            tuple(
                tuple(
                    sum((a * b for a, b in zip(row, col) if a and b), ZERO)
                    for col in cols
                )
                for row in self.rows
            )
        )

    def apply(self, vec: Sequence[Fraction]) -> tuple[Fraction, ...]:
        """Matrix-times-column-vector."""
        if len(vec) != self.ncols:
            raise ValueError("vector length mismatch")
        return tuple(
            sum((a * b for a, b in zip(row, vec) if a and b), ZERO)
            for row in self.rows
        )

    def transpose(self) -> "Matrix":
        return Matrix._raw(tuple(zip(*self.rows))) if self.rows else Matrix(())

    def trace(self) -> Fraction:
        if self.nrows != self.ncols:
            raise ValueError("trace of non-square matrix")
        return sum((self.rows[i][i] for i in range(self.nrows)), ZERO)

    def commutator(self, other: "Matrix") -> "Matrix":
        return self * other - other * self

    def is_symmetric(self) -> bool:
        return self.rows == self.transpose().rows

    def is_zero(self) -> bool:
        return all(not x for row in self.rows for x in row)

    def flatten(self) -> tuple[Fraction, ...]:
        """Row-major vectorization."""
        return tuple(x for row in self.rows for x in row)

    @classmethod
    def from_flat(cls, vec: Sequence, nrows: int, ncols: int) -> "Matrix":
        if len(vec) != nrows * ncols:
            raise ValueError("flat length mismatch")
        return cls(tuple(tuple(vec[i * ncols + j] for j in range(ncols)) for i in range(nrows)))

    def rank(self) -> int:
        return rref(self).rank

    def inverse(self) -> "Matrix":
        n = self.nrows
        if n != self.ncols:
            raise ValueError("inverse of non-square matrix")
        aug = Matrix(
            tuple(self.rows[i] + Matrix.identity(n).rows[i] for i in range(n))
        )
        red = rref(aug)
        if red.pivots[:n] != tuple(range(n)) or red.rank != n:
            raise ValueError("matrix is singular")
        return Matrix(tuple(row[n:] for row in red.reduced.rows))


# ---------------------------------------------------------------------------
# integer elimination core


def _rows_to_int(rows: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    """Scale each row by the lcm of its denominators (kernel/row space kept)."""
    out = []
    for row in rows:
        den = 1
        for x in row:
            d = x.denominator
            if d != 1:
                den = den * d // math.gcd(den, d)
        out.append([int(x * den) if den != 1 else x.numerator for x in row])
    return out


def _strip_row(row: list[int]) -> list[int]:
    g = 0
    for x in row:
        if x:
            g = math.gcd(g, x)
            if g == 1:
                return row
    if g > 1:
        return [x // g for x in row]
    return row


def _int_rref(rows: list[list[int]]) -> tuple[list[list[Fraction]], list[int]]:
    """Exact RREF of an integer matrix.

    Fraction-free two-row combinations during elimination; each pivot row is
    normalized to a leading 1 only at the end.  Returns (rows, pivot columns).
    """
    work = [list(r) for r in rows]
    nrows = len(work)
    ncols = len(work[0]) if work else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        # smallest nonzero magnitude keeps coefficient growth down
        best = -1
        best_abs = 0
        for i in range(r, nrows):
            v = work[i][c]
            if v:
                a = -v if v < 0 else v
                if best < 0 or a < best_abs:
                    best, best_abs = i, a
        if best < 0:
            continue
        if best != r:
            work[best], work[r] = work[r], work[best]
        piv_row = work[r]
        piv = piv_row[c]
        for i in range(nrows):
            if i == r:
                continue
            v = work[i][c]
            if not v:
                continue
            g = math.gcd(piv, v)
            pf = piv // g
            vf = v // g
            cur = work[i]
            new = [pf * a - vf * b for a, b in zip(cur, piv_row)]
            if max(map(abs, new), default=0) > _GCD_STRIP_BOUND:
                new = _strip_row(new)
            work[i] = new
        pivots.append(c)
        r += 1
    # sort pivot rows ahead of zero rows, normalize leading entries to 1
    out: list[list[Fraction]] = []
    for idx, c in enumerate(pivots):
        row = work[idx]
        piv = row[c]
        out.append([Fraction(x, piv) for x in row])
    for idx in range(len(pivots), nrows):
        out.append([ZERO] * ncols)
    return out, pivots


@dataclass(frozen=True)
class RrefResult:
    reduced: "Matrix"
    rank: int
    pivots: tuple[int, ...]


def rref(m: Matrix) -> RrefResult:
    """Unique reduced row echelon form, rank, and pivot columns."""
    rows, pivots = _int_rref(_rows_to_int(m.rows))
    return RrefResult(Matrix(rows), len(pivots), tuple(pivots))


def _kernel_vectors_from_rref(
    rows: list[list[Fraction]], pivots: list[int], ncols: int
) -> list[tuple[Fraction, ...]]:
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    vecs = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for i, c in enumerate(pivots):
            v[c] = -rows[i][f]
        vecs.append(tuple(v))
    return vecs


# ---------------------------------------------------------------------------
# certified modular kernel path


def _rref_mod_p(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    a = np.mod(a, p).astype(np.int64)
    nrows, ncols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            a[[r, pr]] = a[[pr, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r] = (a[r] * inv) % p
        col = a[:, c].copy()
        col[r] = 0
        touched = np.nonzero(col)[0]
        if touched.size:
            a[touched] = (a[touched] - np.outer(col[touched], a[r])) % p
        pivots.append(c)
        r += 1
    return a[: len(pivots)], pivots


def _crt_pair(r1: int, m1: int, r2: int, m2: int) -> tuple[int, int]:
    inv = pow(m1 % m2, -1, m2)
    t = ((r2 - r1) * inv) % m2
    return r1 + m1 * t, m1 * m2


def _rational_reconstruct(r: int, m: int) -> Optional[Fraction]:
    """Lift a residue mod m to p/q with |p|, q <= sqrt(m/2), if possible."""
    bound = math.isqrt(m // 2)
    old_r, cur_r = m, r % m
    old_s, cur_s = 0, 1
    while cur_r > bound:
        q = old_r // cur_r
        old_r, cur_r = cur_r, old_r - q * cur_r
        old_s, cur_s = cur_s, old_s - q * cur_s
    num, den = cur_r, cur_s
    if den == 0:
        return None
    if den < 0:
        num, den = -num, -den
    if den > bound or math.gcd(num, den) != 1:
        return None
    return Fraction(num, den)


def _verify_kernel(int_rows: list[list[int]], vecs: list[tuple[Fraction, ...]]) -> bool:
    """Exact check that every candidate vector annihilates every row."""
    if not vecs:
        return True
    scaled = _rows_to_int(vecs)
    cols = list(zip(*scaled))
    amax = max((abs(x) for row in int_rows for x in row), default=0)
    bmax = max((abs(x) for v in scaled for x in v), default=0)
    n = len(int_rows[0])
    if amax and bmax and amax * bmax * n < (1 << 62):
        am = np.array(int_rows, dtype=np.int64)
        bm = np.array(scaled, dtype=np.int64).T
        return not np.any(am @ bm)
    sparse = [[(j, x) for j, x in enumerate(row) if x] for row in int_rows]
    for col in cols:
        for row in sparse:
            if sum(x * col[j] for j, x in row):
                return False
    return True


def _kernel_modular(int_rows: list[list[int]], ncols: int) -> Optional[list[tuple[Fraction, ...]]]:
    """Kernel via mod-p elimination + CRT + rational reconstruction.

    Returns a verified exact kernel basis, or None if every escalation fails
    (caller then falls back to pure rational elimination).
    """
    arr = np.array(int_rows, dtype=object)
    for nprimes in (1, 2, 4, 8):
        primes = _PRIMES[:nprimes]
        residues = []
        pivots_ref: Optional[list[int]] = None
        ok = True
        for p in primes:
            red, pivots = _rref_mod_p((arr % p).astype(np.int64), p)
            if pivots_ref is None:
                pivots_ref = pivots
            elif pivots != pivots_ref:
                ok = False  # unlucky prime: pivot pattern disagreement
                break
            residues.append((red, p))
        if not ok or pivots_ref is None:
            continue
        pivot_set = set(pivots_ref)
        free = [c for c in range(ncols) if c not in pivot_set]
        # kernel entries are (negated) reduced entries; CRT-combine them
        vecs: list[tuple[Fraction, ...]] = []
        failed = False
        for f in free:
            v: list[Fraction] = [ZERO] * ncols
            v[f] = ONE
            for i, c in enumerate(pivots_ref):
                r_acc, m_acc = 0, 1
                for red, p in residues:
                    r_acc, m_acc = _crt_pair(r_acc, m_acc, int(red[i, f]), p)
                lifted = _rational_reconstruct((-r_acc) % m_acc, m_acc)
                if lifted is None:
                    failed = True
                    break
                v[c] = lifted
            if failed:
                break
            vecs.append(tuple(v))
        if failed:
            continue
        if _verify_kernel(int_rows, vecs):
            # nullity mod p >= true nullity; exhibiting that many exact,
            # independent kernel vectors pins the kernel down completely.
            return vecs
    return None


def kernel_basis(m: Matrix) -> "Subspace":
    """Exact kernel {x : m x = 0}, canonicalized."""
    ncols = m.ncols
    if ncols == 0:
        return Subspace(0, ())
    int_rows = [r for r in _rows_to_int(m.rows) if any(r)]
    if not int_rows:
        return Subspace.full(ncols)
    size = len(int_rows) * ncols * min(len(int_rows), ncols)
    if size > _MODULAR_THRESHOLD:
        vecs = _kernel_modular(int_rows, ncols)
        if vecs is not None:
            return Subspace.from_vectors(ncols, vecs)
    rows, pivots = _int_rref(int_rows)
    vecs = _kernel_vectors_from_rref(rows, pivots, ncols)
    return Subspace.from_vectors(ncols, vecs)


# ---------------------------------------------------------------------------
# subspaces


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^n held by its canonical (RREF) row basis.

    Canonical storage makes equality of subspaces plain tuple equality.
    """

    ambient_dim: int
    basis: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def from_vectors(cls, ambient_dim: int, vectors: Iterable[Sequence]) -> "Subspace":
        rows = [
            [x if isinstance(x, Fraction) else Fraction(x) for x in v] for v in vectors
        ]
        for row in rows:
            if len(row) != ambient_dim:
                raise ValueError("vector length does not match ambient dimension")
        rows = [r for r in rows if any(r)]
        if not rows:
            return cls(ambient_dim, ())
        reduced, pivots = _int_rref(_rows_to_int(rows))
        return cls(ambient_dim, tuple(tuple(r) for r in reduced[: len(pivots)]))

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(
            ambient_dim,
            tuple(
                tuple(ONE if i == j else ZERO for j in range(ambient_dim))
                for i in range(ambient_dim)
            ),
        )

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _pivots(self) -> tuple[int, ...]:
        return tuple(next(j for j, x in enumerate(row) if x) for row in self.basis)

    def coordinates_of(self, vec: Sequence[Fraction]) -> Optional[tuple[Fraction, ...]]:
        """Coefficients of vec in the canonical basis, or None if outside."""
        vec = tuple(x if isinstance(x, Fraction) else Fraction(x) for x in vec)
        if len(vec) != self.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        coeffs = tuple(vec[p] for p in self._pivots())
        residual = list(vec)
        for c, row in zip(coeffs, self.basis):
            if c:
                for j, x in enumerate(row):
                    if x:
                        residual[j] -= c * x
        if any(residual):
            return None
        return coeffs

    def contains_vector(self, vec: Sequence[Fraction]) -> bool:
        return self.coordinates_of(vec) is not None

    def contains(self, other: "Subspace") -> bool:
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        return all(self.contains_vector(v) for v in other.basis)

    def sum(self, other: "Subspace") -> "Subspace":
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        return Subspace.from_vectors(self.ambient_dim, self.basis + other.basis)

    def intersection(self, other: "Subspace") -> "Subspace":
        """Zassenhaus: reduce [a|a; b|0] rows, zero left blocks span a∩b."""
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        n = self.ambient_dim
        stacked = [list(v) + list(v) for v in self.basis] + [
            list(v) + [ZERO] * n for v in other.basis
        ]
        if not stacked:
            return Subspace(n, ())
        reduced, pivots = _int_rref(_rows_to_int(stacked))
        vecs = [
            tuple(row[n:])
            for row, p in zip(reduced, pivots)
            if p >= n
        ]
        return Subspace.from_vectors(n, vecs)

    def basis_matrix(self) -> Matrix:
        """Basis vectors as the columns of an (ambient x dim) matrix."""
        return Matrix(self.basis).transpose() if self.basis else Matrix.zeros(self.ambient_dim, 0)


@dataclass(frozen=True)
class SpanOps:
    sum: Subspace
    intersection: Subspace
    equal: bool
    contains: bool


def span_ops(a: Subspace, b: Subspace) -> SpanOps:
    """Sum, intersection, equality, and containment (a ⊇ b) in one call."""
    if a.ambient_dim != b.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    return SpanOps(a.sum(b), a.intersection(b), a == b, a.contains(b))


# ---------------------------------------------------------------------------
# signatures and minimal polynomials


def signature(m: Matrix) -> tuple[int, int, int]:
    """Inertia (positive, negative, zero) of a symmetric matrix.

    Symmetric Gaussian congruence with the usual zero-diagonal repair: swap in
    a nonzero diagonal if one exists further down, otherwise fold row/column j
    into i (which makes the new diagonal entry 2*m[i][j] != 0).
    """
    if not m.is_symmetric():
        raise ValueError("signature requires a symmetric matrix")
    n = m.nrows
    a = [list(row) for row in m.rows]
    pos = neg = 0
    for i in range(n):
        if not a[i][i]:
            swap = next((j for j in range(i + 1, n) if a[j][j]), None)
            if swap is not None:
                a[i], a[swap] = a[swap], a[i]
                for row in a:
                    row[i], row[swap] = row[swap], row[i]
            else:
                fold = next((j for j in range(i + 1, n) if a[i][j]), None)
                if fold is None:
                    continue  # row is null from here on
                for j in range(n):
                    a[i][j] += a[fold][j]
                for row in a:
                    row[i] += row[fold]
        d = a[i][i]
        if d > 0:
            pos += 1
        else:
            neg += 1
        for j in range(i + 1, n):
            if a[i][j]:
                f = a[i][j] / d
                for k in range(n):
                    a[j][k] -= f * a[i][k]
                for row in a:
                    row[j] -= f * row[i]
    return (pos, neg, n - pos - neg)


class LinearSolver:
    """Incremental exact solver: push vectors, get dependency coefficients.

    Maintains an RREF of the pushed vectors augmented with bookkeeping columns
    so that a dependent vector comes back expressed in terms of the previously
    pushed ones.
    """

    def __init__(self, ambient_dim: int):
        self.n = ambient_dim
        self.rows: list[list[Fraction]] = []  # each of length n + pushed
        self.pivots: list[int] = []
        self.count = 0

    def push(self, vec: Sequence[Fraction]) -> Optional[tuple[Fraction, ...]]:
        """Add a vector; if dependent, return coefficients over earlier pushes."""
        if len(vec) != self.n:
            raise ValueError("ambient dimension mismatch")
        row = [x if isinstance(x, Fraction) else Fraction(x) for x in vec]
        aug = row + [ZERO] * self.count + [ONE]
        for r, p in zip(self.rows, self.pivots):
            c = aug[p]
            if c:
                for j, x in enumerate(r):
                    if x:
                        aug[j] -= c * x
                aug.extend([ZERO] * (len(r) - len(aug)))
        self.count += 1
        pivot = next((j for j in range(self.n) if aug[j]), None)
        if pivot is None:
            coeffs = tuple(-aug[self.n + i] for i in range(self.count - 1))
            self.count -= 1
            return coeffs
        inv = aug[pivot]
        aug = [x / inv for x in aug]
        for r in self.rows:
            c = r[pivot] if pivot < len(r) else ZERO
            if c:
                r.extend([ZERO] * (len(aug) - len(r)))
                for j, x in enumerate(aug):
                    if x:
                        r[j] -= c * x
        for r in self.rows:
            if len(r) < self.n + self.count:
                r.extend([ZERO] * (self.n + self.count - len(r)))
        self.rows.append(aug)
        self.pivots.append(pivot)
        return None

    @property
    def rank(self) -> int:
        return len(self.rows)


def minimal_polynomial(m: Matrix) -> tuple[Fraction, ...]:
    """Monic minimal polynomial of a square matrix, low-degree coefficients first.

    Found by pushing powers of m into an exact solver until the first linear
    dependency appears.
    """
    n = m.nrows
    if n != m.ncols:
        raise ValueError("minimal polynomial of non-square matrix")
    if n == 0:
        return (ONE,)
    solver = LinearSolver(n * n)
    power = Matrix.identity(n)
    k = 0
    while True:
        coeffs = solver.push(power.flatten())
        if coeffs is not None:
            return tuple(-c for c in coeffs) + (ONE,)
        k += 1
        if k > n:
            raise AssertionError("dependency must appear by degree n")
        power = power * m


def poly_eval_matrix(coeffs: Sequence[Fraction], m: Matrix) -> Matrix:
    """Evaluate a polynomial (low-first coefficients) at a square matrix."""
    n = m.nrows
    acc = Matrix.zeros(n, n)
    for c in reversed(coeffs):
        acc = acc * m + Matrix.identity(n).scale(c)
    return acc
