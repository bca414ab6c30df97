import pytest
from hypothesis import given
from hypothesis import strategies as st

from ihspaces.perversity import (
    CLASSICAL,
    EXTENDED,
    DomainError,
    cutoff_degree,
    extended,
    from_values,
    lower_middle,
    parse_perversity,
    sweep,
    top,
    upper_middle,
    validate,
    with_value_at,
    zero,
)


def test_validate_zero():
    assert validate([0, 0, 0, 0]).kind == CLASSICAL


def test_validate_bad_start():
    v = validate([1, 1, 2])
    assert v.kind == EXTENDED and v.reason == "p(2) ≠ 0"


def test_validate_big_step():
    v = validate([0, 2])
    assert v.kind == EXTENDED and v.reason == "growth step 2 at k=3"


def test_validate_negative_step():
    assert validate([0, 1, 0]).reason == "growth step -1 at k=4"


def test_validate_empty():
    with pytest.raises(ValueError):
        validate([])


def test_lower_middle_values():
    m = lower_middle(12)
    assert m(4) == 1
    assert m(10) == 4
    assert validate(m.values).classical
    assert m.sequence(9) == (0, 0, 1, 1, 2, 2, 3, 3)


def test_family_needs_codim_two():
    for f in (zero, lower_middle, upper_middle, top):
        with pytest.raises(DomainError):
            f(1)


@pytest.mark.parametrize("n", range(2, 30))
def test_families_classical_and_ordered(n):
    fams = [f(n) for f in (zero, lower_middle, upper_middle, top)]
    for p in fams:
        assert validate(p.values).classical
    z, m, um, t = fams
    for k in range(2, n + 1):
        assert z(k) <= m(k) <= um(k) <= t(k)
        assert um(k) == -((2 - k) // 2)  # ceil((k-2)/2)


def test_named_families_extend_by_closed_form():
    m = lower_middle()
    assert m(100) == 49
    assert top()(7) == 5


def test_cutoff_examples():
    assert cutoff_degree(9, lower_middle()) == 5
    assert cutoff_degree(3, lower_middle()) == 2
    assert cutoff_degree(2, extended([0, -1])) == 3


def test_cutoff_outside_extended_range():
    p = extended([0, -1])
    with pytest.raises(DomainError):
        cutoff_degree(5, p)


def test_extrapolation_is_opt_in():
    p = from_values([0, 0, 1])
    with pytest.raises(DomainError):
        p(6)
    q = from_values([0, 0, 1], extrapolate=True)
    assert q(6) == 3


def test_codim_below_two():
    with pytest.raises(DomainError):
        zero()(1)


@given(st.integers(1, 12), st.integers(-5, 15), st.integers(-5, 15))
def test_cutoff_monotone(l, a, b):
    pa, pb = with_value_at(l + 1, a), with_value_at(l + 1, b)
    if a <= b:
        assert cutoff_degree(l, pa) >= cutoff_degree(l, pb)


@given(st.lists(st.integers(-3, 3), min_size=1, max_size=10))
def test_from_values_respects_classification(values):
    v = validate(values)
    if v.classical:
        assert from_values(values).kind == CLASSICAL
    else:
        with pytest.raises(DomainError):
            from_values(values)
        assert from_values(values, allow_extended=True).kind == EXTENDED


def test_parse_named_and_lists():
    assert parse_perversity("m").label == "m"
    assert parse_perversity(" top ")(5) == 3
    p = parse_perversity("0,0,1")
    assert p.sequence(4) == (0, 0, 1)
    q = parse_perversity("0,0,1,...")
    assert q(8) == 5


def test_parse_extended_requires_flag():
    with pytest.raises(DomainError):
        parse_perversity("-1,...")
    p = parse_perversity("-1,...", allow_extended=True)
    assert p.kind == EXTENDED and p(3) == -1


@pytest.mark.parametrize("token", ["", "...", "a,b", "m,1"])
def test_parse_rejects_garbage(token):
    with pytest.raises(ValueError):
        parse_perversity(token)


def test_sweep_contents():
    s = sweep(5)
    assert [p.label for p in s[:4]] == ["zero", "m", "um", "top"]
    assert sorted(cutoff_degree(5, p) for p in s[4:]) == list(range(-1, 8))
