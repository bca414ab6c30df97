import json

import pytest

from ihspaces import catalog
from ihspaces.complexes import GradedBetti, SimplicialComplex, betti, chain_complex, simplex_boundary
from ihspaces.perversity import DomainError, extended, lower_middle, zero
from ihspaces.tables import parse_betti_document

m = lower_middle()


def test_get_y():
    y = catalog.get("Y")
    assert y.betti == GradedBetti({4: 1, 5: 1, 9: 1})
    assert y.dim == 9


def test_get_sphere3():
    s = catalog.get("sphere3")
    assert s.model == simplex_boundary(4)
    assert s.betti == GradedBetti({3: 1})


def test_get_su3():
    assert catalog.get("su3").betti == GradedBetti({3: 1, 5: 1, 8: 1})


def test_unknown_name_lists_available():
    with pytest.raises(catalog.UnknownEntryError) as err:
        catalog.get("SU(4)")
    msg = str(err.value)
    assert "sphere3" in msg and "su3-universal-implosion" in msg
    assert isinstance(err.value, KeyError)


@pytest.mark.parametrize("n", range(0, 7))
def test_sphere_entries_match_their_complexes(n):
    e = catalog.get(f"sphere{n}")
    assert isinstance(e.model, SimplicialComplex)
    assert e.betti == betti(chain_complex(simplex_boundary(n + 1))) == GradedBetti({n: 1})
    assert e.dim == e.model.dimension


def test_su2_is_s3():
    assert catalog.get("su2").betti == catalog.get("sphere3").betti


def test_w_is_two_five_spheres():
    assert catalog.get("W").betti == GradedBetti({0: 1, 5: 2})


def test_composites_have_no_model():
    e = catalog.get("su3-universal-implosion")
    assert e.is_composite and e.construction == ("cone", "Y")
    with pytest.raises(TypeError):
        e.model


def test_su3_implosion_report():
    r = catalog.run_example("su3-universal-implosion", m)
    assert r.cutoff == 5
    assert r.ih == GradedBetti({4: 1})
    assert r.hi == GradedBetti({5: 1, 9: 1})
    assert r.differ == {4, 5, 9}
    assert r.provenance


def test_su2_implosion_report():
    r = catalog.run_example("su2-universal-implosion", m)
    assert r.ih == GradedBetti({})
    assert r.hi == GradedBetti({3: 1})


def test_qh_double_report():
    r = catalog.run_example("qh-su2-double", m)
    assert r.ih is None
    assert r.hi == GradedBetti({3: 1})
    assert r.comparison.ordinary == GradedBetti({4: 1})


def test_run_example_rejects_plain_entries():
    with pytest.raises(ValueError):
        catalog.run_example("Y", m)


def test_run_example_domain_error():
    with pytest.raises(DomainError):
        catalog.run_example("su3-universal-implosion", extended([0, 0, 1]))


def test_run_example_deterministic():
    a = catalog.run_example("su3-universal-implosion", m)
    b = catalog.run_example("su3-universal-implosion", m)
    assert repr(a) == repr(b)


def test_zero_perversity_su3():
    # k = 9: everything below 9 is kept by IH and killed by HI
    r = catalog.run_example("su3-universal-implosion", zero())
    assert r.ih == GradedBetti({4: 1, 5: 1})
    assert r.hi == GradedBetti({9: 1})


def test_export_round_trips():
    docs = json.loads(catalog.export_json())
    assert "su3-universal-implosion" not in docs
    for name, doc in docs.items():
        b, dim, reduced = parse_betti_document(doc)
        assert reduced
        assert b == catalog.get(name).betti
        assert dim == catalog.get(name).dim
    assert catalog.export_json() == catalog.export_json()
