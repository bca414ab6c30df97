"""Dimension bookkeeping for long exact sequences and Mayer-Vietoris.

A sequence ``T_0 -> T_1 -> ... -> T_n`` is exact iff every term satisfies
``dim T_i = rank(in) + rank(out)``; the window is padded with zeros so the
first incoming and last outgoing ranks are 0.  Unknown dimensions and ranks
are symbols.  The solver propagates these equations, then row reduces what
is left; it never guesses a value the equations do not force.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Union

from .complexes import GradedBetti
from .linalg import RationalMatrix, rref

Slot = Union[int, str]


class InconsistentSequenceError(ValueError):
    """The supplied dimensions and ranks cannot form an exact sequence."""

    def __init__(self, message: str, triple: tuple[str, str, str] | None = None):
        super().__init__(message)
        self.triple = triple


@dataclass(frozen=True)
class ExactSequenceSpec:
    terms: tuple[Slot, ...]
    ranks: tuple[Slot | None, ...]
    connecting: tuple[bool, ...] = ()
    names: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        ranks = tuple(self.ranks) if self.ranks else (None,) * (len(self.terms) - 1)
        object.__setattr__(self, "ranks", ranks)
        if len(self.terms) < 3:
            raise ValueError("an exact sequence needs at least three terms")
        if len(self.ranks) != len(self.terms) - 1:
            raise ValueError("need exactly one arrow between consecutive terms")
        conn = tuple(self.connecting) or (False,) * len(self.ranks)
        if len(conn) != len(self.ranks):
            raise ValueError("connecting flags must match arrows")
        object.__setattr__(self, "connecting", conn)
        for v in (*self.terms, *self.ranks):
            if isinstance(v, int) and v < 0:
                raise ValueError("known dimensions and ranks must be nonnegative")
        names = tuple(self.names) or tuple(
            t if isinstance(t, str) else f"T{i}" for i, t in enumerate(self.terms)
        )
        object.__setattr__(self, "names", names)

    def arrow_symbol(self, i: int) -> str:
        r = self.ranks[i]
        return r if isinstance(r, str) else f"rank({self.names[i]}->{self.names[i + 1]})"


@dataclass(frozen=True)
class ExactSolution:
    dims: tuple[int | None, ...]
    ranks: tuple[int | None, ...]
    values: Mapping[str, int]
    residuals: tuple[str, ...] = ()
    names: tuple[str, ...] = ()

    @property
    def determined(self) -> bool:
        return not self.residuals and None not in self.dims and None not in self.ranks


def solve_exact(spec: ExactSequenceSpec) -> ExactSolution:
    n = len(spec.terms)
    dim_sym = [t if isinstance(t, str) else None for t in spec.terms]
    rank_sym = [spec.arrow_symbol(i) if not isinstance(r, int) else None
                for i, r in enumerate(spec.ranks)]
    values: dict[str, int] = {}

    def dim(i):
        t = spec.terms[i]
        return values.get(t) if isinstance(t, str) else t

    def rk(i):
        if not 0 <= i < n - 1:
            return 0
        r = spec.ranks[i]
        return r if isinstance(r, int) else values.get(rank_sym[i])

    def triple(i):
        left = spec.arrow_symbol(i - 1) if i > 0 else "0"
        right = spec.arrow_symbol(i) if i < n - 1 else "0"
        return (left, spec.names[i], right)

    def assign(sym, value, i):
        if value < 0:
            raise InconsistentSequenceError(
                f"exactness at {spec.names[i]} forces {sym} = {value} < 0", triple(i))
        old = values.get(sym)
        if old is not None and old != value:
            raise InconsistentSequenceError(
                f"{sym} forced to both {old} and {value}", triple(i))
        values[sym] = value

    def check_bounds():
        for i in range(n - 1):
            r, a, b = rk(i), dim(i), dim(i + 1)
            if r is None:
                continue
            for d, j in ((a, i), (b, i + 1)):
                if d is not None and r > d:
                    raise InconsistentSequenceError(
                        f"rank {r} of {spec.arrow_symbol(i)} exceeds dim {spec.names[j]} = {d}",
                        triple(j))

    changed = True
    while changed:
        changed = False
        check_bounds()
        for i in range(n):
            d, a, b = dim(i), rk(i - 1), rk(i)
            unknown = [(s, v) for s, v in (
                (dim_sym[i], d), (rank_sym[i - 1] if i > 0 else None, a),
                (rank_sym[i] if i < n - 1 else None, b)) if v is None]
            if not unknown:
                if d != a + b:
                    raise InconsistentSequenceError(
                        f"dim {spec.names[i]} = {d} but ranks in/out are {a} + {b}", triple(i))
                continue
            if len(unknown) == 1:
                sym = unknown[0][0]
                if d is None:
                    assign(sym, a + b, i)
                else:
                    assign(sym, d - (a or 0) - (b or 0), i)
                changed = True
            elif d is not None and d - sum(v for v in (a, b) if v is not None) == 0:
                # nonnegative unknowns summing to zero
                for sym, _ in unknown:
                    assign(sym, 0, i)
                changed = True

    residuals = _residuals(spec, dim_sym, rank_sym, values, dim, rk)
    if residuals is not None:
        residuals, extra = residuals
        for sym, v in extra.items():
            if v < 0 or v.denominator != 1:
                raise InconsistentSequenceError(f"{sym} forced to non-natural value {v}")
            values[sym] = int(v)
    else:
        residuals = ()
    check_bounds()
    dims = tuple(dim(i) for i in range(n))
    ranks = tuple(rk(i) for i in range(n - 1))
    return ExactSolution(dims, ranks, dict(values), tuple(residuals), spec.names)


def _residuals(spec, dim_sym, rank_sym, values, dim, rk):
    """Row reduce the remaining linear system; returns (residual strings, forced values)."""
    n = len(spec.terms)
    unknowns: list[str] = []
    rows, rhs = [], []
    for i in range(n):
        parts = [(dim_sym[i], 1), (rank_sym[i - 1] if i > 0 else None, -1),
                 (rank_sym[i] if i < n - 1 else None, -1)]
        live = [(s, c) for s, c in parts if s is not None and s not in values]
        if not live:
            continue
        const = 0
        d, a, b = dim(i), rk(i - 1), rk(i)
        # d - a - b = 0 with knowns moved to the right
        const -= d if d is not None else 0
        const += a if a is not None else 0
        const += b if b is not None else 0
        coeffs = {}
        for s, c in live:
            if s not in unknowns:
                unknowns.append(s)
            coeffs[s] = coeffs.get(s, 0) + c
        rows.append(coeffs)
        rhs.append(const)
    if not rows:
        return None
    m = RationalMatrix.from_rows(
        [[r.get(u, 0) for u in unknowns] + [c] for r, c in zip(rows, rhs)])
    red, piv = rref(m)
    forced: dict[str, Fraction] = {}
    residual: list[str] = []
    width = len(unknowns)
    for row, p in zip(red.entries, piv):
        if p == width:
            raise InconsistentSequenceError("exactness equations are contradictory")
        support = [j for j in range(width) if row[j]]
        if support == [p]:
            forced[unknowns[p]] = row[width]
        else:
            residual.append(_format_equation(row, unknowns))
    return residual, forced


def _format_equation(row, unknowns) -> str:
    terms = []
    for j, u in enumerate(unknowns):
        c = row[j]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        coeff = "" if mag == 1 else f"{mag}*"
        terms.append(f"{sign} {coeff}{u}")
    lhs = " ".join(terms).lstrip("+ ").strip()
    if lhs.startswith("- "):
        lhs = "-" + lhs[2:]
    return f"{lhs} = {row[-1]}"


def audit(sol: ExactSolution) -> list[str]:
    """Violations of exactness in a fully determined solution (empty if none)."""
    problems = []
    n = len(sol.dims)
    for i in range(n):
        a = sol.ranks[i - 1] if i > 0 else 0
        b = sol.ranks[i] if i < n - 1 else 0
        if None in (sol.dims[i], a, b):
            continue
        if b != sol.dims[i] - a:
            problems.append(f"term {i}: rank out {b} != dim {sol.dims[i]} - rank in {a}")
    if None not in sol.dims:
        alt = sum((-1) ** i * d for i, d in enumerate(sol.dims))
        if alt:
            problems.append(f"alternating sum of dimensions is {alt}")
    return problems


# ---------------------------------------------------------------------------
# Mayer-Vietoris


@dataclass(frozen=True)
class MVProblem:
    """Reduced Betti numbers of A, B and A∩B plus ranks of H~_j(A∩B) -> H~_j(A)⊕H~_j(B).

    A∩B must be nonempty for the reduced sequence to apply.
    """

    betti_a: GradedBetti
    betti_b: GradedBetti
    betti_ab: GradedBetti
    intersection_ranks: Mapping[int, int | None] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for j, r in dict(self.intersection_ranks).items():
            j = int(j)
            if r is not None:
                r = int(r)
                bound = min(self.betti_ab[j], self.betti_a[j] + self.betti_b[j])
                if not 0 <= r <= bound:
                    raise InconsistentSequenceError(
                        f"rank {r} in degree {j} outside [0, {bound}]")
            clean[j] = r
        object.__setattr__(self, "intersection_ranks", clean)

    def top(self) -> int:
        return max(self.betti_a.top_degree, self.betti_b.top_degree, self.betti_ab.top_degree,
                   *self.intersection_ranks.keys(), 0)


@dataclass(frozen=True)
class MVResult:
    betti: GradedBetti | None
    solution: ExactSolution

    @property
    def determined(self) -> bool:
        return self.betti is not None

    @property
    def residuals(self) -> tuple[str, ...]:
        return self.solution.residuals


def mv_sequence(p: MVProblem) -> tuple[ExactSequenceSpec, dict[int, str]]:
    """... -> H~_j(A∩B) -> H~_j(A)⊕H~_j(B) -> H~_j(A∪B) -> H~_{j-1}(A∩B) -> ..."""
    top = p.top() + 1
    terms, ranks, conn, names = [], [], [], []
    union = {}
    for j in range(top, -1, -1):
        if terms:
            ranks.append(None)
            conn.append(True)
        terms += [p.betti_ab[j], p.betti_a[j] + p.betti_b[j], f"H{j}(A∪B)"]
        names += [f"H{j}(A∩B)", f"H{j}(A)⊕H{j}(B)", f"H{j}(A∪B)"]
        union[j] = f"H{j}(A∪B)"
        r = p.intersection_ranks.get(j)
        ranks += [r if r is not None else f"phi{j}", None]
        conn += [False, False]
    return ExactSequenceSpec(tuple(terms), tuple(ranks), tuple(conn), tuple(names)), union


def mayer_vietoris(p: MVProblem) -> MVResult:
    spec, union = mv_sequence(p)
    sol = solve_exact(spec)
    if not all(s in sol.values for s in union.values()) or sol.residuals:
        return MVResult(None, sol)
    return MVResult(GradedBetti({j: sol.values[s] for j, s in union.items()}, p.top() + 1), sol)


# ---------------------------------------------------------------------------
# text format


_TERM = re.compile(r"^term\s+(\S+)$")
_ARROW = re.compile(r"^arrow\s+rank=(\S+)(\s+connecting)?$")


def parse_sequence(text: str) -> ExactSequenceSpec:
    """``term <name|integer>`` and ``arrow rank=<integer|?> [connecting]`` lines, alternating."""
    terms, ranks, conn = [], [], []
    expect_term = True
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if expect_term:
            m = _TERM.match(line)
            if not m:
                raise ValueError(f"line {lineno}: expected 'term <name|integer>'")
            tok = m.group(1)
            terms.append(int(tok) if re.fullmatch(r"\d+", tok) else tok)
        else:
            m = _ARROW.match(line)
            if not m:
                raise ValueError(f"line {lineno}: expected 'arrow rank=<integer|?>'")
            tok = m.group(1)
            if tok == "?":
                ranks.append(None)
            elif re.fullmatch(r"\d+", tok):
                ranks.append(int(tok))
            else:
                raise ValueError(f"line {lineno}: bad rank {tok!r}")
            conn.append(bool(m.group(2)))
        expect_term = not expect_term
    if expect_term and terms:
        raise ValueError("sequence must end with a term")
    return ExactSequenceSpec(tuple(terms), tuple(ranks), tuple(conn))


def format_solution(sol: ExactSolution) -> str:
    lines = []
    for name, d in zip(sol.names, sol.dims):
        lines.append(f"{name}: {d if d is not None else '?'}")
    for r in sol.residuals:
        lines.append(f"constraint: {r}")
    return "\n".join(lines) + "\n"
