"""Simplicial complexes, rational chain complexes and chain-level constructions.

Reduced homology is the default: ``chain_complex(k)`` includes the
augmentation to degree -1 unless ``reduced=False`` is passed.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .linalg import RationalMatrix, kernel_basis, pivot_columns, rank


class MalformedSimplexError(ValueError):
    pass


class FacetParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


# ---------------------------------------------------------------------------
# Betti data


@dataclass(frozen=True)
class GradedBetti:
    """Finitely supported degree -> rank map.

    Degree -1 only occurs for the reduced homology of the empty space.
    Equality ignores ``top_degree``.
    """

    ranks: Mapping[int, int] = field(default_factory=dict)
    top_degree: int | None = field(default=None, compare=False)

    def __post_init__(self):
        clean = {}
        for d, r in dict(self.ranks).items():
            d, r = int(d), int(r)
            if r < 0:
                raise ValueError(f"negative rank {r} in degree {d}")
            if d < -1:
                raise ValueError(f"degree {d} out of range")
            if r:
                clean[d] = r
        object.__setattr__(self, "ranks", dict(sorted(clean.items())))
        top = max(clean, default=0) if self.top_degree is None else self.top_degree
        if clean and top < max(clean):
            raise ValueError("top_degree below a supported degree")
        object.__setattr__(self, "top_degree", top)

    def __getitem__(self, degree: int) -> int:
        return self.ranks.get(degree, 0)

    def __hash__(self):
        return hash(tuple(self.ranks.items()))

    def support(self) -> list[int]:
        return list(self.ranks)

    def euler(self) -> int:
        return sum((-1) ** d * r for d, r in self.ranks.items())

    def shift(self, by: int) -> "GradedBetti":
        return GradedBetti({d + by: r for d, r in self.ranks.items()}, self.top_degree + by)

    def total(self) -> int:
        return sum(self.ranks.values())

    def __repr__(self) -> str:
        return f"GradedBetti({self.ranks})"


# ---------------------------------------------------------------------------
# Simplicial complexes


@dataclass(frozen=True)
class SimplicialComplex:
    vertices: frozenset[int]
    simplices: frozenset[tuple[int, ...]]

    @property
    def dimension(self) -> int:
        return max((len(s) for s in self.simplices), default=0) - 1

    def __len__(self) -> int:
        return len(self.simplices)

    def faces(self, dim: int) -> list[tuple[int, ...]]:
        return sorted(s for s in self.simplices if len(s) == dim + 1)

    def facets(self) -> list[tuple[int, ...]]:
        out = []
        for s in sorted(self.simplices, key=lambda s: (-len(s), s)):
            if not any(set(s) < set(t) for t in out):
                out.append(s)
        return sorted(out)

    def max_vertex(self) -> int:
        return max(self.vertices, default=-1)


def _check_simplex(t) -> tuple[int, ...]:
    t = tuple(int(v) for v in t)
    if any(v < 0 for v in t):
        raise MalformedSimplexError(f"negative vertex id in {t}")
    if len(set(t)) != len(t):
        raise MalformedSimplexError(f"repeated vertex in {t}")
    return tuple(sorted(t))


def from_facets(facets: Iterable[Sequence[int]]) -> SimplicialComplex:
    """Downward closure of ``facets``."""
    simplices: set[tuple[int, ...]] = set()
    for f in facets:
        f = _check_simplex(f)
        if not f or f in simplices:
            continue
        for size in range(1, len(f) + 1):
            simplices.update(itertools.combinations(f, size))
    verts = frozenset(s[0] for s in simplices if len(s) == 1)
    return SimplicialComplex(verts, frozenset(simplices))


def simplex_boundary(n: int) -> SimplicialComplex:
    """Boundary of the standard n-simplex, a triangulated (n-1)-sphere."""
    return from_facets(itertools.combinations(range(n + 1), n))


def cone(k: SimplicialComplex) -> SimplicialComplex:
    apex = k.max_vertex() + 1
    simplices = set(k.simplices) | {s + (apex,) for s in k.simplices} | {(apex,)}
    return SimplicialComplex(k.vertices | {apex}, frozenset(simplices))


def suspension(k: SimplicialComplex) -> SimplicialComplex:
    north = k.max_vertex() + 1
    south = north + 1
    simplices = set(k.simplices) | {(north,), (south,)}
    for s in k.simplices:
        simplices.add(s + (north,))
        simplices.add(s + (south,))
    return SimplicialComplex(k.vertices | {north, south}, frozenset(simplices))


def disjoint_union(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    off = a.max_vertex() + 1
    moved = {tuple(v + off for v in s) for s in b.simplices}
    return SimplicialComplex(
        a.vertices | {v + off for v in b.vertices}, frozenset(set(a.simplices) | moved)
    )


def barycentric_subdivision(k: SimplicialComplex) -> SimplicialComplex:
    """Order complex of the face poset; vertex ids index ``sorted`` simplices."""
    order = sorted(k.simplices, key=lambda s: (len(s), s))
    index = {s: i for i, s in enumerate(order)}
    flags: list[tuple[int, ...]] = []

    def extend(chain: list[tuple[int, ...]]):
        flags.append(tuple(index[s] for s in chain))
        top = set(chain[-1])
        for v in sorted(k.vertices - top):
            bigger = tuple(sorted(top | {v}))
            if bigger in index:
                extend(chain + [bigger])

    for s in order:
        if len(s) == 1:
            extend([s])
    # flags that do not start at a vertex are faces of ones that do
    simplices = set()
    for f in flags:
        for size in range(1, len(f) + 1):
            simplices.update(itertools.combinations(f, size))
    return SimplicialComplex(frozenset(range(len(order))), frozenset(simplices))


# ---------------------------------------------------------------------------
# Chain complexes


@dataclass(frozen=True, eq=False)
class ChainComplex:
    """Finite chain complex of rational vector spaces.

    ``boundaries[i]`` maps degree ``i`` to ``i - 1``; missing entries are zero
    maps.  ``augmented`` marks the reduced convention (degree -1 allowed).
    """

    dims: Mapping[int, int]
    boundaries: Mapping[int, RationalMatrix] = field(default_factory=dict)
    augmented: bool = False

    def __post_init__(self):
        dims = {int(d): int(n) for d, n in dict(self.dims).items() if n}
        floor = -1 if self.augmented else 0
        for d, n in dims.items():
            if d < floor:
                raise ValueError(f"nonzero chain group in degree {d} below {floor}")
            if n < 0:
                raise ValueError("negative dimension")
        object.__setattr__(self, "dims", dict(sorted(dims.items())))
        bnd = {}
        for d, m in dict(self.boundaries).items():
            expect = (dims.get(d - 1, 0), dims.get(d, 0))
            if m.shape != expect:
                raise ValueError(f"boundary in degree {d} has shape {m.shape}, expected {expect}")
            if m.rows and m.cols:
                bnd[d] = m
        object.__setattr__(self, "boundaries", bnd)

    def dim(self, i: int) -> int:
        return self.dims.get(i, 0)

    def boundary(self, i: int) -> RationalMatrix:
        m = self.boundaries.get(i)
        return m if m is not None else RationalMatrix.zeros(self.dim(i - 1), self.dim(i))

    @property
    def bottom(self) -> int:
        return min(self.dims, default=0)

    @property
    def top(self) -> int:
        return max(self.dims, default=-1)

    def degrees(self) -> range:
        return range(self.bottom, self.top + 1)

    def is_valid(self) -> bool:
        return all(
            (self.boundary(i - 1) @ self.boundary(i)).is_zero()
            for i in self.degrees()
            if self.dim(i) and self.dim(i - 2)
        )

    def unreduced(self) -> "ChainComplex":
        if not self.augmented:
            return self
        dims = {d: n for d, n in self.dims.items() if d >= 0}
        bnd = {d: m for d, m in self.boundaries.items() if d >= 1}
        return ChainComplex(dims, bnd, augmented=False)

    def __repr__(self) -> str:
        return f"ChainComplex(dims={self.dims}, augmented={self.augmented})"


def _signed_boundary(faces_hi, faces_lo) -> RationalMatrix:
    index = {s: i for i, s in enumerate(faces_lo)}
    rows = [[0] * len(faces_hi) for _ in faces_lo]
    for j, s in enumerate(faces_hi):
        for pos in range(len(s)):
            rows[index[s[:pos] + s[pos + 1:]]][j] = (-1) ** pos
    return RationalMatrix.from_rows(rows, cols=len(faces_hi))


def chain_complex(k: SimplicialComplex, reduced: bool = True) -> ChainComplex:
    """Simplicial chains; vertices sorted ascending, signs alternate by position."""
    by_dim = {d: k.faces(d) for d in range(k.dimension + 1)}
    dims = {d: len(f) for d, f in by_dim.items()}
    bnd = {d: _signed_boundary(by_dim[d], by_dim[d - 1]) for d in range(1, k.dimension + 1)}
    if reduced:
        dims[-1] = 1
        if dims.get(0):
            bnd[0] = RationalMatrix.from_rows([[1] * dims[0]])
    return ChainComplex(dims, bnd, augmented=reduced)


def sphere_model(n: int, reduced: bool = True) -> ChainComplex:
    """Minimal rational model of S^n: one generator in degrees 0 and n."""
    if n < 1:
        raise ValueError("sphere_model needs n >= 1")
    dims = {0: 1, n: 1}
    bnd = {}
    if reduced:
        dims[-1] = 1
        bnd[0] = RationalMatrix.from_rows([[1]])
    return ChainComplex(dims, bnd, augmented=reduced)


def betti(c: ChainComplex) -> GradedBetti:
    """b_i = dim C_i - rank d_i - rank d_{i+1}."""
    ranks = {i: rank(c.boundary(i)) for i in range(c.bottom, c.top + 2)}
    out = {i: c.dim(i) - ranks[i] - ranks[i + 1] for i in c.degrees()}
    return GradedBetti(out, top_degree=max(c.top, 0))


def homology(k: SimplicialComplex, reduced: bool = True) -> GradedBetti:
    return betti(chain_complex(k, reduced=reduced))


def direct_sum(a: ChainComplex, b: ChainComplex) -> ChainComplex:
    dims = {d: a.dim(d) + b.dim(d) for d in set(a.dims) | set(b.dims)}
    bnd = {}
    for d in dims:
        pa, pb = a.boundary(d), b.boundary(d)
        bnd[d] = RationalMatrix.block([
            [pa, RationalMatrix.zeros(pa.rows, pb.cols)],
            [RationalMatrix.zeros(pb.rows, pa.cols), pb],
        ])
    return ChainComplex(dims, bnd, augmented=a.augmented or b.augmented)


def tensor(a: ChainComplex, b: ChainComplex) -> ChainComplex:
    """Tensor product with d(x (x) y) = dx (x) y + (-1)^|x| x (x) dy.

    If both inputs are augmented with a one-dimensional degree -1, the
    product is augmented by the tensor of the augmentations, so its homology
    is the reduced homology of the product space.
    """
    augment = a.augmented and b.augmented
    if augment and (a.dim(-1) != 1 or b.dim(-1) != 1):
        raise ValueError("tensor of augmented complexes needs one-dimensional degree -1")
    ua, ub = a.unreduced(), b.unreduced()
    top = ua.top + ub.top

    def blocks(n):
        return [(i, n - i) for i in range(0, n + 1) if ua.dim(i) and ub.dim(n - i)]

    dims = {n: sum(ua.dim(i) * ub.dim(j) for i, j in blocks(n)) for n in range(0, top + 1)}
    bnd = {}
    for n in range(1, top + 1):
        src, dst = blocks(n), blocks(n - 1)
        grid = []
        for i2, j2 in dst:
            row = []
            for i, j in src:
                h, w = ua.dim(i2) * ub.dim(j2), ua.dim(i) * ub.dim(j)
                if (i2, j2) == (i - 1, j):
                    blk = ua.boundary(i).kron(RationalMatrix.identity(ub.dim(j)))
                elif (i2, j2) == (i, j - 1):
                    blk = RationalMatrix.identity(ua.dim(i)).kron(ub.boundary(j))
                    if i % 2:
                        blk = -blk
                else:
                    blk = RationalMatrix.zeros(h, w)
                row.append(blk)
            grid.append(row)
        if src and dst:
            bnd[n] = RationalMatrix.block(grid)
    if augment:
        dims[-1] = 1
        if dims.get(0):
            bnd[0] = a.boundary(0).kron(b.boundary(0))
    return ChainComplex(dims, bnd, augmented=augment)


# ---------------------------------------------------------------------------
# Chain maps, truncation, mapping cones


@dataclass(frozen=True, eq=False)
class ChainMap:
    source: ChainComplex
    target: ChainComplex
    components: Mapping[int, RationalMatrix] = field(default_factory=dict)

    def __post_init__(self):
        comps = {}
        for d, m in dict(self.components).items():
            expect = (self.target.dim(d), self.source.dim(d))
            if m.shape != expect:
                raise ValueError(f"component in degree {d} has shape {m.shape}, expected {expect}")
            comps[d] = m
        object.__setattr__(self, "components", comps)

    def __getitem__(self, d: int) -> RationalMatrix:
        m = self.components.get(d)
        return m if m is not None else RationalMatrix.zeros(self.target.dim(d), self.source.dim(d))

    def degrees(self) -> range:
        lo = min(self.source.bottom, self.target.bottom)
        hi = max(self.source.top, self.target.top)
        return range(lo, hi + 1)

    def is_chain_map(self) -> bool:
        """Check target.d o f == f o source.d in every degree."""
        for i in self.degrees():
            lhs = self.target.boundary(i) @ self[i]
            rhs = self[i - 1] @ self.source.boundary(i)
            if lhs != rhs:
                return False
        return True

    def induced_ranks(self) -> dict[int, int]:
        """Rank of the induced map on homology, degree by degree.

        rank H(f)_i = dim(f(Z_i) + B_i) - dim B_i in the target.
        """
        out = {}
        for i in self.degrees():
            z = kernel_basis(self.source.boundary(i))
            images = [self[i].apply(v) for v in z]
            bcols = self.target.boundary(i + 1)
            b_rank = rank(bcols)
            if not images:
                out[i] = 0
                continue
            img = RationalMatrix.from_columns(images, rows=self.target.dim(i))
            out[i] = rank(RationalMatrix.block([[img, bcols]])) - b_rank
        return out


def identity_map(c: ChainComplex) -> ChainMap:
    return ChainMap(c, c, {d: RationalMatrix.identity(n) for d, n in c.dims.items()})


def zero_map(source: ChainComplex, target: ChainComplex) -> ChainMap:
    return ChainMap(source, target, {})


def truncate(c: ChainComplex, k: int) -> tuple[ChainComplex, ChainMap]:
    """Chain-level stage-k Moore approximation of ``c``.

    The subcomplex keeps every chain group below degree k and, in degree k,
    the span of the pivot columns of d_k (a section of d_k onto the
    boundaries B_{k-1}); everything above is zero.  Its homology agrees with
    that of ``c`` below k through the inclusion and vanishes from k on.
    """
    if k <= 0:
        empty = ChainComplex({}, {}, augmented=c.augmented)
        return empty, zero_map(empty, c)
    if k > c.top:
        return c, identity_map(c)
    dims = {d: n for d, n in c.dims.items() if d < k}
    bnd = {d: m for d, m in c.boundaries.items() if d < k}
    comps = {d: RationalMatrix.identity(n) for d, n in dims.items()}
    dk = c.boundary(k)
    piv = pivot_columns(dk)
    if piv:
        dims[k] = len(piv)
        bnd[k] = dk.select_columns(piv)
        comps[k] = RationalMatrix.identity(c.dim(k)).select_columns(piv)
    sub = ChainComplex(dims, bnd, augmented=c.augmented)
    return sub, ChainMap(sub, c, comps)


def mapping_cone(f: ChainMap) -> ChainComplex:
    """cone(f)_n = source_{n-1} (+) target_n, d(a, b) = (-da, f(a) + db)."""
    s, t = f.source, f.target
    lo = min(s.bottom + 1, t.bottom) if s.dims else t.bottom
    hi = max(s.top + 1, t.top)
    dims = {n: s.dim(n - 1) + t.dim(n) for n in range(lo, hi + 1)}
    bnd = {}
    for n in range(lo + 1, hi + 1):
        ds, dt, fn = s.boundary(n - 1), t.boundary(n), f[n - 1]
        bnd[n] = RationalMatrix.block([
            [-ds, RationalMatrix.zeros(ds.rows, dt.cols)],
            [fn, dt],
        ])
    return ChainComplex(dims, bnd, augmented=t.augmented or s.augmented)


# ---------------------------------------------------------------------------
# Facet files


def parse_facets(text: str) -> SimplicialComplex:
    """One simplex per line, whitespace-separated vertex ids; '#' comments."""
    facets = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            verts = [int(tok) for tok in line.split()]
        except ValueError:
            raise FacetParseError(lineno, f"not an integer list: {line!r}") from None
        try:
            facets.append(_check_simplex(verts))
        except MalformedSimplexError as exc:
            raise FacetParseError(lineno, str(exc)) from None
    return from_facets(facets)


def read_facets(path: str | Path) -> SimplicialComplex:
    return parse_facets(Path(path).read_text())


def format_facets(k: SimplicialComplex) -> str:
    return "".join(" ".join(map(str, f)) + "\n" for f in k.facets())
