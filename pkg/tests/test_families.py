import math

import pytest

from scullen.cullen import CullenIndex, cullen_value
from scullen.families import (
    FamilyInvariantError,
    FamilyTag,
    classify,
    family_a_members,
    family_b_members,
    square_triangular_base,
)
import scullen.families as families
from scullen.repunit import detect_repunits

from oracles import brute_repunit_table

# s with s + 1 a repunit, from a brute-force repunit table
FAMILY_A_25 = [6, 12, 14, 20, 30, 39, 42, 56, 62, 72, 84, 90, 110, 120, 126, 132,
               155, 156, 182, 210, 240, 254, 258, 272, 306]


def square_triangular_roots(limit):
    """s <= limit with s**2 = x(x+1)/2, found by walking triangular numbers."""
    out = []
    x = 1
    while True:
        t = x * (x + 1) // 2
        r = math.isqrt(t)
        if r > limit:
            return out
        if r * r == t and r >= 2:
            out.append(r)
        x += 1


def test_family_a_examples():
    assert family_a_members(1) == [6]
    assert family_a_members(3) == [6, 12, 14]
    assert family_a_members(8) == [6, 12, 14, 20, 30, 39, 42, 56]
    assert family_a_members(25) == FAMILY_A_25


def test_family_a_members_are_hits():
    for s in family_a_members(25):
        assert detect_repunits(cullen_value(s, 1))


def test_family_b_examples():
    members = family_b_members(5)
    assert [m.s for m in members[:3]] == [6, 35, 204]
    assert [m.b for m in members[:3]] == [8, 49, 288]
    assert [m.s for m in members] == [6, 35, 204, 1189, 6930]
    assert [m.k for m in members] == [1, 2, 3, 4, 5]


def test_family_b_matches_brute_force():
    assert [m.s for m in family_b_members(6)] == square_triangular_roots(10**5)


def test_family_b_members_are_hits():
    for m in family_b_members(15):
        assert 2 * m.s**2 + 1 == m.b**2 + m.b + 1
        assert any((f.b, f.q) == (m.b, 3) for f in detect_repunits(cullen_value(m.s, 2)))


def test_family_b_invariant_violation(monkeypatch):
    monkeypatch.setattr(families, "square_triangular_base", lambda s: None)
    with pytest.raises(FamilyInvariantError):
        family_b_members(2)


def test_square_triangular_base():
    assert square_triangular_base(6) == 8
    assert square_triangular_base(7) is None


@pytest.mark.parametrize(
    "s,n,tag",
    [(6, 2, FamilyTag.B), (6, 1, FamilyTag.A), (6, 3, FamilyTag.NONE), (35, 2, FamilyTag.B), (7, 1, FamilyTag.NONE)],
)
def test_classify_examples(s, n, tag):
    assert classify(CullenIndex(s, n)) is tag


def test_classify_against_definitions():
    table = brute_repunit_table(10**6)
    st_roots = set(square_triangular_roots(300))
    for s in range(2, 201):
        assert classify(CullenIndex(s, 1)) is (FamilyTag.A if (s + 1) in table else FamilyTag.NONE)
        assert classify(CullenIndex(s, 2)) is (FamilyTag.B if s in st_roots else FamilyTag.NONE)
        assert classify(CullenIndex(s, 3)) is FamilyTag.NONE


def test_tag_json():
    assert FamilyTag.A.to_json() == "A"
    assert FamilyTag.NONE.to_json() is None
    assert FamilyTag(None) is FamilyTag.NONE


def test_limit_must_be_positive():
    with pytest.raises(ValueError):
        family_a_members(0)
    with pytest.raises(ValueError):
        family_b_members(0)
