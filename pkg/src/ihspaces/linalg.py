"""Exact rational dense matrices.

Entries are :class:`fractions.Fraction`; ranks and kernels are therefore
exact, which is what Betti numbers need.  Elimination skips zero entries of
the pivot row so that sparse boundary matrices stay cheap even though the
storage is dense.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted as exact entries")
    return Fraction(x)


@dataclass(frozen=True)
class RationalMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError(
                f"entry grid does not match declared shape {self.rows}x{self.cols}"
            )

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "RationalMatrix":
        rows = [tuple(_as_fraction(x) for x in r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(len(rows), cols, tuple(rows))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        z = Fraction(0)
        return cls(rows, cols, tuple((z,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        one, z = Fraction(1), Fraction(0)
        return cls(n, n, tuple(tuple(one if i == j else z for j in range(n)) for i in range(n)))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "RationalMatrix":
        if not columns:
            return cls.zeros(rows, 0)
        return cls.from_rows(list(zip(*columns)), cols=len(columns)) if rows else cls.zeros(0, len(columns))

    @classmethod
    def block(cls, blocks: Sequence[Sequence["RationalMatrix"]]) -> "RationalMatrix":
        """Assemble a block matrix; every block row must share heights."""
        out: list[list[Fraction]] = []
        total_cols = None
        for brow in blocks:
            height = brow[0].rows
            if any(b.rows != height for b in brow):
                raise ValueError("block row has inconsistent heights")
            width = sum(b.cols for b in brow)
            if total_cols is None:
                total_cols = width
            elif width != total_cols:
                raise ValueError("block rows have inconsistent widths")
            for i in range(height):
                row: list[Fraction] = []
                for b in brow:
                    row.extend(b.entries[i])
                out.append(row)
        return cls(len(out), total_cols or 0, tuple(tuple(r) for r in out))

    # -- basic algebra ----------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i][j]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else tuple(() for _ in range(self.cols)))

    @property
    def T(self) -> "RationalMatrix":
        return self.transpose()

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        z = Fraction(0)
        # boundary matrices are very sparse, so walk nonzeros only
        other_rows = [[(j, v) for j, v in enumerate(row) if v] for row in other.entries]
        out = []
        for r in self.entries:
            acc: dict[int, Fraction] = {}
            for k, a in enumerate(r):
                if a:
                    for j, v in other_rows[k]:
                        acc[j] = acc.get(j, z) + a * v
            out.append(tuple(acc.get(j, z) for j in range(other.cols)))
        return RationalMatrix(self.rows, other.cols, tuple(out))

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} + {other.shape}")
        return RationalMatrix(
            self.rows,
            self.cols,
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)),
        )

    def __neg__(self) -> "RationalMatrix":
        return RationalMatrix(self.rows, self.cols, tuple(tuple(-a if a else a for a in r) for r in self.entries))

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        return self + (-other)

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.entries)

    def select_columns(self, idx: Iterable[int]) -> "RationalMatrix":
        idx = list(idx)
        return RationalMatrix(self.rows, len(idx), tuple(tuple(r[j] for j in idx) for r in self.entries))

    def apply(self, v: Sequence) -> tuple[Fraction, ...]:
        if len(v) != self.cols:
            raise ValueError("vector length does not match column count")
        return tuple(sum((a * b for a, b in zip(r, v) if a and b), Fraction(0)) for r in self.entries)

    def kron(self, other: "RationalMatrix") -> "RationalMatrix":
        rows = []
        for r in self.entries:
            for s in other.entries:
                rows.append(tuple(a * b for a in r for b in s))
        return RationalMatrix(self.rows * other.rows, self.cols * other.cols, tuple(rows))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self.entries)
        return f"RationalMatrix({self.rows}x{self.cols}: [{body}])"


def _echelon(m: RationalMatrix, reduced: bool) -> tuple[list[dict[int, Fraction]], list[int]]:
    """Row reduce ``m``; returns the nonzero rows (as sparse dicts) and pivot columns.

    Pivots are chosen as the first nonzero entry in column order.
    """
    rows = [{j: x for j, x in enumerate(r) if x} for r in m.entries]
    rows = [r for r in rows if r]
    pivots: list[int] = []
    done: list[dict[int, Fraction]] = []
    for c in range(m.cols):
        pr = next((i for i, r in enumerate(rows) if c in r), None)
        if pr is None:
            continue
        prow = rows.pop(pr)
        inv = 1 / prow[c]
        prow = {j: x * inv for j, x in prow.items()}
        items = list(prow.items())
        targets = rows + done if reduced else rows
        for r in targets:
            f = r.get(c)
            if not f:
                continue
            for j, x in items:
                y = r.get(j, 0) - f * x
                if y:
                    r[j] = y
                else:
                    r.pop(j, None)
        rows = [r for r in rows if r]
        done.append(prow)
        pivots.append(c)
    return done, pivots


def _integer_rows(m: RationalMatrix) -> list[dict[int, int]]:
    out = []
    for r in m.entries:
        nz = {j: x for j, x in enumerate(r) if x}
        if not nz:
            continue
        scale = math.lcm(*(x.denominator for x in nz.values()))
        out.append({j: int(x * scale) for j, x in nz.items()})
    return out


def rank(m: RationalMatrix) -> int:
    """Rank over the rationals.

    Rows are scaled to integers and eliminated by cross-multiplication, with
    each updated row divided by the gcd of its entries; this avoids Fraction
    overhead on the (integer) boundary matrices that dominate the workload.
    """
    if m.rows == 0 or m.cols == 0:
        return 0
    rows = _integer_rows(m)
    r = 0
    for c in range(m.cols):
        pr = next((i for i, row in enumerate(rows) if c in row), None)
        if pr is None:
            continue
        prow = rows.pop(pr)
        pv = prow[c]
        items = list(prow.items())
        nxt = []
        for row in rows:
            f = row.get(c)
            if f:
                new = {j: x * pv for j, x in row.items()}
                for j, x in items:
                    y = new.get(j, 0) - f * x
                    if y:
                        new[j] = y
                    else:
                        new.pop(j, None)
                if not new:
                    continue
                g = math.gcd(*new.values())
                if g > 1:
                    new = {j: x // g for j, x in new.items()}
                row = new
            nxt.append(row)
        rows = nxt
        r += 1
    return r


def pivot_columns(m: RationalMatrix) -> list[int]:
    """Indices of columns of ``m`` forming a basis of its column space."""
    return _echelon(m, reduced=False)[1]


def rref(m: RationalMatrix) -> tuple[RationalMatrix, list[int]]:
    rows, piv = _echelon(m, reduced=True)
    z = Fraction(0)
    dense = [tuple(r.get(j, z) for j in range(m.cols)) for r in rows]
    return RationalMatrix(len(dense), m.cols, tuple(dense)), piv


def kernel_basis(m: RationalMatrix) -> list[tuple[Fraction, ...]]:
    """Basis of the right null space, one vector per free column."""
    rows, piv = _echelon(m, reduced=True)
    pivset = set(piv)
    basis = []
    for free in range(m.cols):
        if free in pivset:
            continue
        v = [Fraction(0)] * m.cols
        v[free] = Fraction(1)
        for r, p in zip(rows, piv):
            v[p] = -r.get(free, 0)
        basis.append(tuple(v))
    return basis
