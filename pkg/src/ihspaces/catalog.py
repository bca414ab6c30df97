"""Named links and worked examples.

Spheres are genuine triangulations.  SU(3) and Y are Betti-only: their
homology is all the closed forms consume.  Composite entries record how to
build the space (cone or suspension over a named link) rather than answers.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cache
from typing import Callable, Union

from .complexes import (
    ChainComplex,
    GradedBetti,
    SimplicialComplex,
    betti,
    chain_complex,
    disjoint_union,
    simplex_boundary,
    sphere_model,
    tensor,
)
from .formulas import ConeSpaceSpec, SuspensionSpaceSpec, TheoryComparison, compare_theories
from .perversity import Perversity, cutoff_degree
from .tables import betti_document

Model = Union[SimplicialComplex, GradedBetti, ChainComplex]


class UnknownEntryError(KeyError):
    def __init__(self, name: str, available):
        super().__init__(f"unknown catalog entry {name!r}; available: {', '.join(available)}")
        self.name = name

    def __str__(self):
        return self.args[0]


@dataclass(frozen=True, eq=False)
class CatalogEntry:
    name: str
    dim: int
    provenance: str
    simply_connected: bool
    notes: str = ""
    build: Callable[[], Model] | None = field(default=None, repr=False)
    construction: tuple[str, str] | None = None  # ("cone" | "suspension", link name)

    @property
    def model(self) -> Model:
        if self.build is None:
            raise TypeError(f"{self.name} is a composite entry; see .construction")
        return _built(self.name, self.build)

    @property
    def betti(self) -> GradedBetti:
        m = self.model
        if isinstance(m, GradedBetti):
            return m
        if isinstance(m, SimplicialComplex):
            return betti(chain_complex(m))
        return betti(m)

    @property
    def is_composite(self) -> bool:
        return self.construction is not None


@cache
def _built(name: str, build: Callable[[], Model]) -> Model:
    return build()


def _su3() -> GradedBetti:
    # rationally SU(3) looks like S^3 x S^5
    return betti(tensor(sphere_model(3), sphere_model(5)))


def _w() -> GradedBetti:
    s5 = simplex_boundary(6)
    return betti(chain_complex(disjoint_union(s5, s5)))


def _entries() -> dict[str, CatalogEntry]:
    out: dict[str, CatalogEntry] = {}
    for n in range(0, 7):
        out[f"sphere{n}"] = CatalogEntry(
            f"sphere{n}", n, f"boundary of the standard {n + 1}-simplex",
            simply_connected=n >= 2,
            build=lambda n=n: simplex_boundary(n + 1),
        )
    out["su2"] = CatalogEntry(
        "su2", 3, "SU(2) is diffeomorphic to S^3; triangulated as the boundary of the 4-simplex",
        simply_connected=True, build=lambda: simplex_boundary(4),
    )
    out["su3"] = CatalogEntry(
        "su3", 8, "rational model S^3 x S^5 (tensor of minimal sphere models)",
        simply_connected=True, build=_su3,
        notes="Betti-only; SU(3) is a deformation retract of the piece X of Y",
    )
    out["Y"] = CatalogEntry(
        "Y", 9,
        "Y = {(z,w) in C^3 x C^3 : z.w = 0, |z|^2 + |w|^2 = 1}, a compact 9-manifold; "
        "reduced homology R in degrees 4, 5, 9 via Mayer-Vietoris over Y = W u X",
        simply_connected=True, build=lambda: GradedBetti({4: 1, 5: 1, 9: 1}, 9),
        notes="Betti-only; triangulating Y is out of scope",
    )
    out["W"] = CatalogEntry(
        "W", 5, "deformation retracts to two disjoint copies of S^5",
        simply_connected=False, build=_w,
        notes="Betti-only stand-in for the piece W of Y",
    )
    out["su2-universal-implosion"] = CatalogEntry(
        "su2-universal-implosion", 4,
        "universal imploded cross-section of SU(2): the cone on S^3, i.e. C^2",
        simply_connected=True, construction=("cone", "su2"),
    )
    out["su3-universal-implosion"] = CatalogEntry(
        "su3-universal-implosion", 10,
        "universal imploded cross-section of SU(3): {z.w = 0} in C^3 x C^3, "
        "homeomorphic to the open cone on Y",
        simply_connected=True, construction=("cone", "Y"),
        notes="IH at the lower middle perversity is R in degree 4 (computed from H~(Y))",
    )
    out["qh-su2-double"] = CatalogEntry(
        "qh-su2-double", 4,
        "imploded cross-section of the quasi-Hamiltonian double SU(2) x SU(2): "
        "the suspension of S^3, i.e. S^4",
        simply_connected=True, construction=("suspension", "su2"),
    )
    return out


CATALOG = _entries()


def names() -> list[str]:
    return list(CATALOG)


def get(name: str) -> CatalogEntry:
    try:
        return CATALOG[name]
    except KeyError:
        raise UnknownEntryError(name, CATALOG) from None


def link_spec(entry: CatalogEntry, suspension: bool = False) -> ConeSpaceSpec:
    cls = SuspensionSpaceSpec if suspension else ConeSpaceSpec
    return cls(entry.model, entry.dim, entry.simply_connected)


@dataclass(frozen=True)
class ExampleReport:
    name: str
    construction: tuple[str, str]
    cutoff: int
    comparison: TheoryComparison
    provenance: tuple[str, ...]

    @property
    def ih(self) -> GradedBetti | None:
        return self.comparison.ih

    @property
    def hi(self) -> GradedBetti:
        return self.comparison.hi

    @property
    def differ(self) -> frozenset[int]:
        return self.comparison.differ


def run_example(name: str, p: Perversity) -> ExampleReport:
    entry = get(name)
    if not entry.is_composite:
        raise ValueError(f"{name} is not a cone or suspension example")
    kind, link_name = entry.construction
    link = get(link_name)
    spec = link_spec(link, suspension=(kind == "suspension"))
    k = cutoff_degree(spec.dim, p)  # DomainError if p is undefined at l+1
    comparison = compare_theories(spec, p)
    provenance = (
        entry.provenance,
        f"link {link.name}: {link.provenance}",
        "IH of a cone: H~_j(L) below k = l - p(l+1), zero from k on"
        if kind == "cone" else
        "HI of a suspension: shifted link homology below k, both at k, link homology above",
        "HI of a cone: zero for 0 < j < k, H~_j(L) otherwise" if kind == "cone" else
        "ordinary H~ of the suspension is the link homology shifted up by one",
    )
    return ExampleReport(name, entry.construction, k, comparison, provenance)


def to_betti_documents() -> dict[str, dict]:
    """Every non-composite entry as a betti-table document."""
    return {
        name: betti_document(e.betti, e.dim)
        for name, e in CATALOG.items()
        if not e.is_composite
    }


def export_json() -> str:
    return json.dumps(to_betti_documents(), indent=2, sort_keys=True)
