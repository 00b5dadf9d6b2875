"""Reduced integer homology of simplicial complexes, exactly.

Boundary matrices are kept over Z with Python's arbitrary-precision ints
and diagonalized by a sparse Smith reduction: unit pivots first (cheap,
no growth), then minimal-absolute-value pivots, then a gcd/lcm pass that
normalizes the collected diagonal into a divisor chain.

Homology is reduced throughout: the degree-0 boundary map is the
augmentation to Z, so a single point has trivial homology everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .simplicial import SimplicialComplex


# ---------------------------------------------------------------- groups

def divisor_chain(values: Iterable[int]) -> tuple[int, ...]:
    """Normalize a multiset of nonzero integers into a divisor chain.

    diag(a, b) is equivalent to diag(gcd(a, b), lcm(a, b)); repeating that
    exchange until stable yields the invariant factors, in ascending order.
    """
    vals = sorted(abs(v) for v in values if v)
    changed = True
    while changed:
        changed = False
        for i in range(len(vals)):
            for j in range(i + 1, len(vals)):
                if vals[j] % vals[i]:
                    g = gcd(vals[i], vals[j])
                    vals[i], vals[j] = g, vals[i] // g * vals[j]
                    changed = True
        vals.sort()
    return tuple(vals)


@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group: Z^rank + sum of Z/d with d1 | d2 | ..."""

    rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("negative rank")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f"torsion {self.torsion} is not a divisor chain")
        if any(d < 2 for d in self.torsion):
            raise ValueError("torsion orders must be at least 2")

    @classmethod
    def from_parts(cls, rank: int, factors: Iterable[int]) -> "AbelianGroup":
        chain = tuple(d for d in divisor_chain(factors) if d > 1)
        return cls(rank, chain)

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def direct_sum(self, other: "AbelianGroup") -> "AbelianGroup":
        return AbelianGroup.from_parts(self.rank + other.rank, self.torsion + other.torsion)

    def torsion_count_divisible_by(self, p: int) -> int:
        return sum(1 for d in self.torsion if d % p == 0)

    def render(self) -> str:
        if self.is_trivial:
            return "0"
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts)

    def __str__(self):
        return self.render()


TRIVIAL_GROUP = AbelianGroup()


# --------------------------------------------------------------- matrices

@dataclass(frozen=True)
class IntegerMatrix:
    """Dense exact integer matrix (small, row-major tuples)."""

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows:
            raise ValueError("row count mismatch")
        if any(len(r) != self.cols for r in self.entries):
            raise ValueError("column count mismatch")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntegerMatrix":
        rows = tuple(tuple(int(v) for v in r) for r in rows)
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(len(rows), cols, rows)

    @classmethod
    def zero(cls, rows: int, cols: int) -> "IntegerMatrix":
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    def multiply(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        out = []
        for i in range(self.rows):
            row = self.entries[i]
            out.append(
                tuple(
                    sum(row[k] * other.entries[k][j] for k in range(self.cols))
                    for j in range(other.cols)
                )
            )
        return IntegerMatrix(self.rows, other.cols, tuple(out))

    @property
    def is_zero(self) -> bool:
        return all(all(v == 0 for v in r) for r in self.entries)


def smith_normal_form(matrix: IntegerMatrix) -> tuple[int, ...]:
    """Invariant factors of an integer matrix (ascending divisor chain).

    The length of the result is the rank; trivial factors 1 are included.
    """
    rows: dict[int, dict[int, int]] = {}
    cols: dict[int, set[int]] = {}
    for i, row in enumerate(matrix.entries):
        for j, v in enumerate(row):
            if v:
                rows.setdefault(i, {})[j] = v
                cols.setdefault(j, set()).add(i)

    def drop(i: int, j: int):
        del rows[i][j]
        if not rows[i]:
            del rows[i]
        cols[j].discard(i)
        if not cols[j]:
            del cols[j]

    def set_entry(i: int, j: int, v: int):
        if v:
            rows.setdefault(i, {})[j] = v
            cols.setdefault(j, set()).add(i)
        elif j in rows.get(i, {}):
            drop(i, j)

    def row_sub(i: int, src: int, q: int):
        # row i -= q * row src
        if not q:
            return
        for j, v in list(rows.get(src, {}).items()):
            set_entry(i, j, rows.get(i, {}).get(j, 0) - q * v)

    diag: list[int] = []
    while rows:
        # pivot choice: unit entries first, then minimal |value|; among
        # ties prefer low fill (Markowitz cost), then position
        best = None
        for i in sorted(rows):
            ri = rows[i]
            for j in sorted(ri):
                v = ri[j]
                score = (abs(v) != 1, abs(v), (len(ri) - 1) * (len(cols[j]) - 1), i, j)
                if best is None or score < best[0]:
                    best = (score, i, j)
        _, pi, pj = best

        while True:
            pivot = rows[pi][pj]
            if pivot < 0:
                for j, v in list(rows[pi].items()):
                    set_entry(pi, j, -v)
                pivot = rows[pi][pj]
            # clear the pivot column with row operations
            moved = False
            for i in sorted(cols[pj] - {pi}):
                q = rows[i][pj] // pivot
                row_sub(i, pi, q)
                if pj in rows.get(i, {}):
                    # nonzero remainder, strictly smaller: it becomes the pivot
                    pi = i
                    moved = True
                    break
            if moved:
                continue
            # column is clean, so column operations only touch row pi;
            # any nonzero remainder is smaller and becomes the pivot
            row_moved = False
            for j in sorted(rows[pi]):
                if j == pj:
                    continue
                r = rows[pi][j] % pivot
                if r:
                    set_entry(pi, j, r)
                    pj = j
                    row_moved = True
                    break
                drop(pi, j)
            if row_moved:
                continue
            break

        diag.append(abs(rows[pi][pj]))
        drop(pi, pj)

    return divisor_chain(diag)


def matrix_rank(matrix: IntegerMatrix) -> int:
    return len(smith_normal_form(matrix))


# --------------------------------------------------------------- homology

def boundary_matrices(k: SimplicialComplex) -> list[IntegerMatrix]:
    """Boundary maps [d_0, d_1, ..., d_dim] with d_0 the augmentation to Z."""
    if k.is_empty:
        raise ValueError("empty complex has no boundary matrices")
    groups = k.faces_by_dim()
    out = [IntegerMatrix.from_rows([(1,) * len(groups[0])], cols=len(groups[0]))]
    for d in range(1, k.dim + 1):
        lower = {f: i for i, f in enumerate(groups[d - 1])}
        entries = [[0] * len(groups[d]) for _ in lower]
        for j, face in enumerate(groups[d]):
            for i_vertex in range(len(face)):
                sub = face[:i_vertex] + face[i_vertex + 1 :]
                entries[lower[sub]][j] = (-1) ** i_vertex
        out.append(IntegerMatrix.from_rows(entries, cols=len(groups[d])))
    return out


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced homology groups in degrees 0..dim, trailing trivials trimmed.

    The empty complex gets a distinguished marker (``empty_complex``): by
    convention its reduced homology is a single Z in degree -1, which the
    index machinery treats as the value ZERO rather than as a group here.
    """

    groups: tuple[AbelianGroup, ...] = ()
    empty_complex: bool = False

    def group(self, k: int) -> AbelianGroup:
        if 0 <= k < len(self.groups):
            return self.groups[k]
        return TRIVIAL_GROUP

    @property
    def top_degree(self) -> int:
        return len(self.groups) - 1

    @property
    def is_acyclic(self) -> bool:
        return not self.empty_complex and all(g.is_trivial for g in self.groups)

    def render_lines(self) -> list[str]:
        if self.empty_complex:
            return ["empty complex (reduced H~(-1) = Z)"]
        if not self.groups:
            return ["H~0 = 0"]
        return [f"H~{k} = {g.render()}" for k, g in enumerate(self.groups)]

    def to_json(self):
        if self.empty_complex:
            return {"empty_complex": True, "groups": []}
        return {
            "empty_complex": False,
            "groups": [{"rank": g.rank, "torsion": list(g.torsion)} for g in self.groups],
        }


EMPTY_PROFILE = HomologyProfile(empty_complex=True)


def _trim(groups: list[AbelianGroup]) -> tuple[AbelianGroup, ...]:
    while groups and groups[-1].is_trivial:
        groups.pop()
    return tuple(groups)


def reduced_homology(k: SimplicialComplex) -> HomologyProfile:
    """Smith-form reduced homology over Z."""
    if k.is_empty:
        return EMPTY_PROFILE
    mats = boundary_matrices(k)
    factors = [smith_normal_form(m) for m in mats]
    ranks = [len(f) for f in factors]
    groups = []
    fvec = k.f_vector()
    for d in range(k.dim + 1):
        rank_in = ranks[d + 1] if d + 1 <= k.dim else 0
        free = fvec[d] - ranks[d] - rank_in
        torsion = factors[d + 1] if d + 1 <= k.dim else ()
        if free < 0:
            raise AssertionError("negative free rank: boundary ranks inconsistent")
        groups.append(AbelianGroup.from_parts(free, torsion))
    return HomologyProfile(groups=_trim(groups))


# ----------------------------------------------------------------- index

ZERO_TAG, INDEX_TAG, ACYCLIC_TAG = "ZERO", "INDEX", "ACYCLIC"


@dataclass(frozen=True)
class HomologyIndex:
    """Three-way index: ZERO (empty complex), INDEX(n), or ACYCLIC.

    INDEX(n) means n is the smallest positive integer whose degree-(n-1)
    reduced homology is nonzero.  ACYCLIC marks nonempty complexes with
    trivial reduced homology in every degree; such complexes carry no
    index value and never satisfy an upper bound.
    """

    tag: str
    n: int | None = None

    def __post_init__(self):
        if self.tag not in (ZERO_TAG, INDEX_TAG, ACYCLIC_TAG):
            raise ValueError(f"bad index tag {self.tag!r}")
        if self.tag == INDEX_TAG:
            if self.n is None or self.n < 1:
                raise ValueError("INDEX requires n >= 1")
        elif self.n is not None:
            raise ValueError(f"{self.tag} carries no value")

    @property
    def is_zero(self) -> bool:
        return self.tag == ZERO_TAG

    @property
    def is_acyclic(self) -> bool:
        return self.tag == ACYCLIC_TAG

    @property
    def value(self) -> int:
        """Numeric index: 0 for ZERO, n for INDEX(n); ACYCLIC has none."""
        if self.tag == ZERO_TAG:
            return 0
        if self.tag == INDEX_TAG:
            return self.n
        raise ValueError("ACYCLIC has no numeric index")

    def at_most(self, bound: int) -> bool:
        """Whether the index is defined and at most ``bound``."""
        if self.tag == ACYCLIC_TAG:
            return False
        return self.value <= bound

    def __str__(self):
        if self.tag == INDEX_TAG:
            return f"INDEX({self.n})"
        return self.tag


ZERO_INDEX = HomologyIndex(ZERO_TAG)
ACYCLIC_INDEX = HomologyIndex(ACYCLIC_TAG)


def finite_index(n: int) -> HomologyIndex:
    return HomologyIndex(INDEX_TAG, n)


def index_of_profile(profile: HomologyProfile) -> HomologyIndex:
    if profile.empty_complex:
        return ZERO_INDEX
    for k, g in enumerate(profile.groups):
        if not g.is_trivial:
            return finite_index(k + 1)
    return ACYCLIC_INDEX


def homology_index(k: SimplicialComplex) -> HomologyIndex:
    """Index of a complex: smallest n with nontrivial reduced H~(n-1)."""
    return index_of_profile(reduced_homology(k))
