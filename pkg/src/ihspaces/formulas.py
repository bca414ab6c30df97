"""IH and HI of open cones and suspensions over a link.

Closed forms take only the link's reduced Betti numbers.  The chain models
build the intersection space algebraically (mapping cone of a truncation
inclusion) and serve as independent checks on the closed forms.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Union

from .complexes import (
    ChainComplex,
    ChainMap,
    GradedBetti,
    SimplicialComplex,
    betti,
    chain_complex,
    direct_sum,
    mapping_cone,
    truncate,
)
from .linalg import RationalMatrix
from .perversity import Perversity, cutoff_degree

Link = Union[GradedBetti, SimplicialComplex, ChainComplex]

OUTSIDE_HYPOTHESES = "outside theorem hypotheses"


class HypothesisWarning(UserWarning):
    """Input falls outside the simply connected link setting."""


def _link_betti(link: Link) -> GradedBetti:
    if isinstance(link, GradedBetti):
        return link
    if isinstance(link, SimplicialComplex):
        return betti(chain_complex(link))
    if not link.augmented:
        raise ValueError("link chain complex must be augmented (reduced convention)")
    return betti(link)


def _link_complex(link: SimplicialComplex | ChainComplex) -> ChainComplex:
    if isinstance(link, SimplicialComplex):
        return chain_complex(link, reduced=True)
    if not link.augmented:
        raise ValueError("link chain complex must be augmented (reduced convention)")
    return link


def _top_dim(link: SimplicialComplex | ChainComplex) -> int:
    if isinstance(link, SimplicialComplex):
        return link.dimension
    return link.top


@dataclass(frozen=True, eq=False)
class ConeSpaceSpec:
    """Open cone c°(L) on a link of dimension ``dim``."""

    link: Link
    dim: int
    simply_connected: bool = True
    betti: GradedBetti = field(init=False, repr=False)

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError(f"link dimension must be at least 1, got {self.dim}")
        if not isinstance(self.link, GradedBetti):
            top = _top_dim(self.link)
            if top != self.dim:
                raise ValueError(f"link has top dimension {top}, declared {self.dim}")
        b = _link_betti(self.link)
        if self.simply_connected and b[1]:
            raise ValueError("link asserted simply connected but H~_1 is nonzero")
        object.__setattr__(self, "betti", b)

    @classmethod
    def of(cls, link: SimplicialComplex | ChainComplex, simply_connected: bool = True):
        return cls(link, _top_dim(link), simply_connected)

    @property
    def h1_vanishes(self) -> bool:
        return self.betti[1] == 0

    @property
    def within_hypotheses(self) -> bool:
        return self.simply_connected and self.h1_vanishes

    def notes(self) -> list[str]:
        out = []
        if not self.within_hypotheses:
            out.append(
                f"{OUTSIDE_HYPOTHESES}: simply connected asserted={self.simply_connected}, "
                f"H~_1 vanishes={self.h1_vanishes}"
            )
        if self.betti[0]:
            out.append("link is not connected; degree 0 reports H~_0 of the link")
        return out


class SuspensionSpaceSpec(ConeSpaceSpec):
    """Suspension of a link; singular stratum is the two suspension points."""


def _warn_disconnected(b: GradedBetti):
    if b[0]:
        warnings.warn("link is not connected; degree 0 follows the closed form literally",
                      HypothesisWarning, stacklevel=3)


def _range_top(b: GradedBetti, dim: int, k: int) -> int:
    return max(dim, b.top_degree, k) + 1


def ih_open_cone(spec: ConeSpaceSpec, p: Perversity) -> GradedBetti:
    """IH~_j = H~_j(L) for j < k, zero otherwise."""
    k = cutoff_degree(spec.dim, p)
    b = spec.betti
    return GradedBetti({j: r for j, r in b.ranks.items() if j < k}, spec.dim)


def hi_open_cone(spec: ConeSpaceSpec, p: Perversity) -> GradedBetti:
    """HI~_j = 0 for 0 < j < k, H~_j(L) otherwise."""
    k = cutoff_degree(spec.dim, p)
    b = spec.betti
    _warn_disconnected(b)
    return GradedBetti({j: r for j, r in b.ranks.items() if not 0 < j < k}, spec.dim)


def hi_suspension(spec: SuspensionSpaceSpec, p: Perversity) -> GradedBetti:
    k = cutoff_degree(spec.dim, p)
    b = spec.betti
    _warn_disconnected(b)
    out = {}
    for j in range(0, _range_top(b, spec.dim, k)):
        if 0 < j < k:
            out[j] = b[j - 1]
        elif j == k:
            out[j] = b[j] + b[j - 1]
        else:
            out[j] = b[j]
    return GradedBetti(out, spec.dim + 1)


@dataclass(frozen=True)
class BlowupData:
    """Homology of the blow-up M and of the pair (M, dM) for an isolated singularity.

    ``connecting_rank_at_k`` is the rank of H~_k(M, dM) -> H~_{k-1}(dM); None
    means it was not supplied and is taken as zero.
    """

    blowup_betti: GradedBetti
    rel_betti: GradedBetti
    connecting_rank_at_k: int | None = None

    def __post_init__(self):
        if self.connecting_rank_at_k is not None and self.connecting_rank_at_k < 0:
            raise ValueError("connecting rank must be nonnegative")

    @property
    def assumes_zero_connecting(self) -> bool:
        return self.connecting_rank_at_k is None


def hi_isolated_singularity(b: BlowupData, k: int) -> GradedBetti:
    """Relative Betti below k, blow-up Betti above k, their extension at k."""
    if k < 0:
        raise ValueError("cutoff degree must be nonnegative")
    conn = b.connecting_rank_at_k or 0
    top = max(b.blowup_betti.top_degree, b.rel_betti.top_degree, k)
    out = {}
    for j in range(0, top + 1):
        if j < k:
            out[j] = b.rel_betti[j]
        elif j > k:
            out[j] = b.blowup_betti[j]
        else:
            out[j] = b.blowup_betti[j] + conn
    return GradedBetti(out, top)


def isolated_singularity_notes(b: BlowupData, k: int) -> list[str]:
    if b.assumes_zero_connecting:
        return [f"degree {k}: assumes zero connecting rank"]
    return []


def hi_cone_chain_model(link: SimplicialComplex | ChainComplex, p: Perversity) -> GradedBetti:
    """Homology of the mapping cone of the stage-k truncation inclusion."""
    c = _link_complex(link)
    k = cutoff_degree(_top_dim(link), p)
    _, inc = truncate(c, k)
    return betti(mapping_cone(inc))


def suspension_gluing_map(c: ChainComplex, k: int) -> ChainMap:
    """(a, b) -> f(a) + f(b) from two copies of the truncation into ``c``."""
    sub, f = truncate(c, k)
    both = direct_sum(sub, sub)
    comps = {d: RationalMatrix.block([[f[d], f[d]]]) for d in both.dims}
    return ChainMap(both, c, comps)


def hi_suspension_chain_model(link: SimplicialComplex | ChainComplex, p: Perversity) -> GradedBetti:
    c = _link_complex(link)
    k = cutoff_degree(_top_dim(link), p)
    return betti(mapping_cone(suspension_gluing_map(c, k)))


@dataclass(frozen=True)
class TheoryComparison:
    """IH next to HI.  For suspensions IH is not computed (``ih`` is None)
    and HI is set against the ordinary reduced homology instead."""

    kind: str
    perversity: str
    cutoff: int
    ih: GradedBetti | None
    hi: GradedBetti
    ordinary: GradedBetti
    differ: frozenset[int]
    notes: tuple[str, ...] = ()


def _diff(a: GradedBetti, b: GradedBetti) -> frozenset[int]:
    return frozenset(d for d in set(a.ranks) | set(b.ranks) if a[d] != b[d])


def compare_theories(spec: ConeSpaceSpec, p: Perversity) -> TheoryComparison:
    k = cutoff_degree(spec.dim, p)
    notes = list(spec.notes())
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", HypothesisWarning)
        if isinstance(spec, SuspensionSpaceSpec):
            hi = hi_suspension(spec, p)
            ordinary = spec.betti.shift(1)
            notes.append("IH of suspensions is not computed; HI compared with ordinary H~")
            return TheoryComparison("suspension", p.label, k, None, hi, ordinary,
                                    _diff(hi, ordinary), tuple(notes))
        ih = ih_open_cone(spec, p)
        hi = hi_open_cone(spec, p)
    ordinary = GradedBetti({}, spec.dim + 1)  # open cones are contractible
    return TheoryComparison("cone", p.label, k, ih, hi, ordinary, _diff(ih, hi), tuple(notes))
