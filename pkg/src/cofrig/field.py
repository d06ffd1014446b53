"""Exact linear algebra over a prime field.

Everything here works on plain Python ints reduced mod p, so there is no
overflow and no floating point.  The default modulus is the Mersenne prime
2^61 - 1, large enough that a random evaluation of a generic matrix keeps
full rank except with vanishing probability.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

MERSENNE61 = (1 << 61) - 1


def random_assignment(n: int, seed: int, p: int = MERSENNE61) -> list[tuple[int, int]]:
    """Deterministic stream of n coordinate pairs, uniform in [0, p).

    The same (n, seed, p) always yields the same list.
    """
    rng = random.Random(seed)
    return [(rng.randrange(p), rng.randrange(p)) for _ in range(n)]


@dataclass(frozen=True)
class FieldMatrix:
    """A dense matrix over GF(p), rows as tuples of ints in [0, p)."""

    p: int
    entries: tuple[tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows, p: int = MERSENNE61) -> "FieldMatrix":
        norm = tuple(tuple(x % p for x in row) for row in rows)
        if norm and any(len(r) != len(norm[0]) for r in norm):
            raise ValueError("ragged rows")
        return cls(p, norm)

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def rank(self) -> int:
        return matrix_rank(self.entries, self.p)


def matrix_rank(rows, p: int = MERSENNE61) -> int:
    """Rank by Gaussian elimination with exact arithmetic mod p.

    Pivots on the first nonzero entry of each remaining row.
    """
    basis = EchelonBasis(p)
    for row in rows:
        basis.insert(list(row))
    return basis.rank


class EchelonBasis:
    """Incremental row echelon form over GF(p).

    Rows are kept pivot-normalized (leading entry 1) and sorted by pivot
    column, so reducing a new row is one pass and never touches stored rows.
    That makes snapshots cheap: copies share row objects.
    """

    __slots__ = ("p", "pivots", "rows")

    def __init__(self, p: int = MERSENNE61):
        self.p = p
        self.pivots: list[int] = []
        self.rows: list[tuple[int, ...]] = []

    @property
    def rank(self) -> int:
        return len(self.rows)

    def copy(self) -> "EchelonBasis":
        out = EchelonBasis(self.p)
        out.pivots = list(self.pivots)
        out.rows = list(self.rows)
        return out

    def reduce(self, row) -> tuple[int, ...] | None:
        """Reduce a row against the basis; None if it reduces to zero.

        The returned row is pivot-normalized and does not alias the input.
        """
        p = self.p
        cur = [x % p for x in row]
        for piv, brow in zip(self.pivots, self.rows):
            c = cur[piv]
            if c:
                cur = [(a - c * b) % p for a, b in zip(cur, brow)]
        for j, x in enumerate(cur):
            if x:
                inv = pow(x, p - 2, p)
                return tuple(a * inv % p for a in cur)
        return None

    def insert(self, row) -> bool:
        """Add a row to the span; True if the rank grew."""
        red = self.reduce(row)
        if red is None:
            return False
        piv = next(j for j, x in enumerate(red) if x)
        at = 0
        while at < len(self.pivots) and self.pivots[at] < piv:
            at += 1
        self.pivots.insert(at, piv)
        self.rows.insert(at, red)
        return True


def subset_rank_table(rows, p: int = MERSENNE61) -> list[int]:
    """Rank of every subset of the given rows, indexed by bitmask.

    Subsets are processed in increasing numeric order, so each mask X reuses
    the echelon basis of X minus its lowest bit; bases share row tuples, which
    keeps the table affordable up to 16 rows.
    """
    m = len(rows)
    if m > 16:
        raise ValueError(f"subset table over {m} rows is too large")
    rows = [tuple(x % p for x in r) for r in rows]
    size = 1 << m
    rank = [0] * size
    # per mask: sorted tuple of (pivot, normalized row)
    basis: list[tuple] = [()] * size
    for x in range(1, size):
        low = (x & -x).bit_length() - 1
        y = x & (x - 1)
        b = basis[y]
        cur = list(rows[low])
        for piv, brow in b:
            c = cur[piv]
            if c:
                cur = [(a - c * bb) % p for a, bb in zip(cur, brow)]
        piv = -1
        for j, val in enumerate(cur):
            if val:
                piv = j
                break
        if piv < 0:
            basis[x] = b
            rank[x] = rank[y]
        else:
            inv = pow(cur[piv], p - 2, p)
            norm = tuple(a * inv % p for a in cur)
            at = 0
            while at < len(b) and b[at][0] < piv:
                at += 1
            basis[x] = b[:at] + ((piv, norm),) + b[at:]
            rank[x] = rank[y] + 1
    return rank
