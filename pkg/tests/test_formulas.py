import warnings

import pytest

from ihspaces.complexes import (
    GradedBetti,
    betti,
    chain_complex,
    disjoint_union,
    from_facets,
    simplex_boundary,
    tensor,
)
from ihspaces.formulas import (
    BlowupData,
    ConeSpaceSpec,
    HypothesisWarning,
    OUTSIDE_HYPOTHESES,
    SuspensionSpaceSpec,
    compare_theories,
    hi_cone_chain_model,
    hi_isolated_singularity,
    hi_open_cone,
    hi_suspension,
    hi_suspension_chain_model,
    ih_open_cone,
    isolated_singularity_notes,
    suspension_gluing_map,
)
from ihspaces.perversity import cutoff_degree, extended, lower_middle, sweep, with_value_at, zero
from oracles import cone_les, suspension_les

m = lower_middle()
Y = GradedBetti({4: 1, 5: 1, 9: 1})
S3 = GradedBetti({3: 1})
S2xS3 = GradedBetti({2: 1, 3: 1, 5: 1})


def cone(b, dim, sc=True):
    return ConeSpaceSpec(b, dim, sc)


def susp(b, dim, sc=True):
    return SuspensionSpaceSpec(b, dim, sc)


def links():
    out = {f"S{n}": simplex_boundary(n + 1) for n in (2, 3, 4)}
    out["S2xS3"] = tensor(chain_complex(simplex_boundary(3)), chain_complex(simplex_boundary(4)))
    return out


# -- closed forms -------------------------------------------------------------


def test_ih_cone_examples():
    assert ih_open_cone(cone(Y, 9), m) == GradedBetti({4: 1})
    assert ih_open_cone(cone(S3, 3), m) == GradedBetti({})
    assert ih_open_cone(cone(Y, 9), with_value_at(10, 9)) == GradedBetti({})


def test_hi_cone_examples():
    assert hi_open_cone(cone(Y, 9), m) == GradedBetti({5: 1, 9: 1})
    assert hi_open_cone(cone(S3, 3), m) == GradedBetti({3: 1})
    assert hi_open_cone(cone(Y, 9), with_value_at(10, 12)) == Y


def test_hi_suspension_examples():
    assert hi_suspension(susp(S3, 3), m) == GradedBetti({3: 1})
    p = with_value_at(6, 1)
    assert cutoff_degree(5, p) == 4
    assert hi_suspension(susp(S2xS3, 5), p) == GradedBetti({3: 1, 4: 1, 5: 1})
    assert hi_suspension(susp(GradedBetti({2: 1}), 2), extended([0, -1])) == GradedBetti({3: 1})


def test_isolated_singularity_examples():
    b = BlowupData(Y, GradedBetti({}), 0)
    assert hi_isolated_singularity(b, 5) == GradedBetti({5: 1, 9: 1})
    assert isolated_singularity_notes(b, 5) == []
    empty = BlowupData(GradedBetti({}), GradedBetti({}))
    for k in range(0, 6):
        assert hi_isolated_singularity(empty, k) == GradedBetti({})
    assert isolated_singularity_notes(empty, 3) == ["degree 3: assumes zero connecting rank"]
    assert hi_isolated_singularity(BlowupData(S3, GradedBetti({}), 0), 2) == GradedBetti({3: 1})


def test_isolated_singularity_uses_rel_below_and_connecting_at_k():
    b = BlowupData(GradedBetti({1: 2, 4: 1}), GradedBetti({1: 7, 2: 3}), 2)
    assert hi_isolated_singularity(b, 2) == GradedBetti({1: 7, 2: 2, 4: 1})


def test_blowup_rejects_negative_connecting_rank():
    with pytest.raises(ValueError):
        BlowupData(S3, S3, -1)


@pytest.mark.parametrize("link", [S3, Y, S2xS3, GradedBetti({2: 1}), GradedBetti({3: 2, 6: 1})])
def test_isolated_singularity_agrees_with_cone(link):
    dim = max(link.ranks)
    for p in sweep(dim):
        k = cutoff_degree(dim, p)
        if k < 0:
            continue
        blow = BlowupData(link, GradedBetti({}), 0)
        assert hi_isolated_singularity(blow, k) == hi_open_cone(cone(link, dim), p)


def test_compare_theories_y():
    c = compare_theories(cone(Y, 9), m)
    assert c.kind == "cone" and c.cutoff == 5
    assert c.differ == {4, 5, 9}
    assert c.ih == GradedBetti({4: 1})


def test_compare_theories_s3():
    assert compare_theories(cone(S3, 3), m).differ == {3}


def test_compare_theories_agree_only_without_positive_degree_classes():
    # IH keeps degrees below k and HI keeps the rest, so only classes in
    # degree 0 (or none at all) can be seen identically by both
    two_points = GradedBetti({0: 1})
    c = compare_theories(cone(two_points, 1, sc=False), zero())
    assert c.differ == frozenset()
    assert c.ih == c.hi == two_points
    acyclic = compare_theories(cone(GradedBetti({}), 2), lower_middle())
    assert acyclic.differ == frozenset()
    s1 = compare_theories(cone(GradedBetti({1: 1}), 1, sc=False), zero())
    assert s1.differ == {1}
    assert any(OUTSIDE_HYPOTHESES in n for n in s1.notes)


def test_compare_theories_suspension():
    c = compare_theories(susp(S3, 3), m)
    assert c.ih is None
    assert c.hi == GradedBetti({3: 1})
    assert c.ordinary == GradedBetti({4: 1})
    assert c.differ == {3, 4}


@pytest.mark.parametrize("link", [S3, Y, S2xS3, GradedBetti({2: 1, 4: 3})])
def test_ih_vanishes_from_cutoff_and_euler_identity(link):
    dim = max(link.ranks)
    spec = cone(link, dim)
    for p in sweep(dim):
        k = cutoff_degree(dim, p)
        assert all(j < k for j in ih_open_cone(spec, p).ranks)
        hi = hi_open_cone(spec, p)
        removed = sum((-1) ** j * link[j] for j in range(1, k))
        assert hi.euler() == link.euler() - removed


@pytest.mark.parametrize("link", [S3, Y, S2xS3, GradedBetti({2: 1, 4: 3})])
def test_degenerate_cutoffs(link):
    dim = max(link.ranks)
    for p in sweep(dim):
        k = cutoff_degree(dim, p)
        if k <= 0:
            assert hi_open_cone(cone(link, dim), p) == link
        if k > dim + 1:
            assert hi_suspension(susp(link, dim), p) == link.shift(1)


@pytest.mark.parametrize("link", [S3, Y, S2xS3, GradedBetti({2: 1, 4: 3})])
def test_closed_forms_match_les_oracles(link):
    dim = max(link.ranks)
    for p in sweep(dim):
        k = cutoff_degree(dim, p)
        assert hi_open_cone(cone(link, dim), p).ranks == cone_les(link.ranks, k)
        assert hi_suspension(susp(link, dim), p).ranks == suspension_les(link.ranks, k)


# -- input validation ---------------------------------------------------------


def test_link_with_h1_needs_flag():
    with pytest.raises(ValueError):
        cone(GradedBetti({1: 1}), 1)
    spec = cone(GradedBetti({1: 1}), 1, sc=False)
    assert not spec.within_hypotheses


def test_link_dimension_checked():
    with pytest.raises(ValueError):
        ConeSpaceSpec(simplex_boundary(3), 3)
    with pytest.raises(ValueError):
        cone(S3, 0)
    assert ConeSpaceSpec.of(simplex_boundary(3)).dim == 2


def test_disconnected_link_warns():
    two_spheres = disjoint_union(simplex_boundary(3), simplex_boundary(3))
    spec = ConeSpaceSpec.of(two_spheres)
    with pytest.warns(HypothesisWarning):
        hb = hi_open_cone(spec, m)
    assert hb == GradedBetti({0: 1, 2: 2})


def test_unaugmented_chain_link_rejected():
    with pytest.raises(ValueError):
        hi_cone_chain_model(chain_complex(simplex_boundary(3), reduced=False), m)


# -- chain models -------------------------------------------------------------


def test_cone_chain_model_examples():
    s2, s3 = simplex_boundary(3), simplex_boundary(4)
    assert hi_cone_chain_model(s3, m) == GradedBetti({3: 1})
    assert hi_cone_chain_model(s2, zero()) == GradedBetti({2: 1})
    assert hi_cone_chain_model(s2, with_value_at(3, 2)) == GradedBetti({2: 1})


def test_suspension_chain_model_examples():
    s2, s3 = simplex_boundary(3), simplex_boundary(4)
    assert hi_suspension_chain_model(s3, m) == GradedBetti({3: 1})
    assert hi_suspension_chain_model(s2, zero()) == GradedBetti({2: 1})
    assert hi_suspension_chain_model(s2, extended([0, -1])) == GradedBetti({3: 1})


def test_gluing_map_is_chain_map():
    c = chain_complex(simplex_boundary(3))
    for k in range(-1, 5):
        assert suspension_gluing_map(c, k).is_chain_map()


@pytest.mark.parametrize("name,link", links().items())
def test_chain_models_match_closed_forms(name, link):
    spec_c = ConeSpaceSpec.of(link)
    spec_s = SuspensionSpaceSpec.of(link)
    for p in sweep(spec_c.dim):
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            assert hi_cone_chain_model(link, p) == hi_open_cone(spec_c, p), p.label
            assert hi_suspension_chain_model(link, p) == hi_suspension(spec_s, p), p.label


def test_empty_link_chain_model():
    # cone on nothing is a point
    e = from_facets([])
    assert betti(chain_complex(e)) == GradedBetti({-1: 1})
