from fractions import Fraction

import pytest

from lambdaprime.curves import PwlCurve, PwlPiece, envelope_of
from lambdaprime.objectives import CostLine

L = Fraction


def test_single_line():
    c = envelope_of([CostLine(L(1), L(2))])
    assert len(c.pieces) == 1
    assert c.value_at(L(1, 2)) == L(2)
    assert c.breakpoints == []


def test_two_line_breakpoint():
    c = envelope_of([CostLine(L(0), L(28)), CostLine(L(4), L(0))])
    assert c.breakpoints == [L(1, 7)]
    assert c.value_at(L(1, 7)) == L(4)
    assert c.value_at(L(1, 14)) == L(2)
    assert c.value_at(L(1, 2)) == L(4)


def test_parallel_dominated_line_absent():
    c = envelope_of([CostLine(L(1), L(5)), CostLine(L(2), L(5)), CostLine(L(3), L(0))])
    assert all(p.line != CostLine(L(2), L(5)) for p in c.pieces)
    assert len(c.pieces) == 2


def test_middle_line_on_envelope():
    lines = [CostLine(L(0), L(10)), CostLine(L(1), L(4)), CostLine(L(3), L(0))]
    c = envelope_of(lines)
    assert [p.line for p in c.pieces] == lines
    assert c.breakpoints == [L(1, 6), L(1, 2)]


def test_middle_line_skipped_when_dominated():
    # line through the crossing of the outer two, shifted up: never active
    lines = [CostLine(L(0), L(10)), CostLine(L(2), L(5)), CostLine(L(3), L(0))]
    c = envelope_of(lines)
    assert len(c.pieces) == 2


def test_point_contact_line_contributes_no_piece():
    # middle line touches the envelope exactly at the outer crossing
    lines = [CostLine(L(0), L(10)), CostLine(L(5, 4), L(5)), CostLine(L(5, 2), L(0))]
    # outer crossing at lam=1/4 value 5/2; middle at 1/4: 5/4+5/4 = 5/2
    c = envelope_of(lines)
    assert len(c.pieces) == 2
    assert c.breakpoints == [L(1, 4)]


def test_duplicate_line_keeps_first_tag():
    lines = [CostLine(L(0), L(1)), CostLine(L(0), L(1))]
    c = envelope_of(lines, tags=["first", "second"])
    assert c.pieces[0].tag == "first"


def test_domain_clipping():
    lines = [CostLine(L(0), L(10)), CostLine(L(1), L(4)), CostLine(L(3), L(0))]
    c = envelope_of(lines, domain=(L(1, 4), L(2, 5)))
    assert c.domain_lo == L(1, 4) and c.domain_hi == L(2, 5)
    assert len(c.pieces) == 1
    assert c.pieces[0].line == CostLine(L(1), L(4))


def test_domain_requires_width():
    with pytest.raises(ValueError):
        envelope_of([CostLine(L(0), L(1))], domain=(L(1, 2), L(1, 2)))


def test_curve_validation():
    good = PwlPiece(CostLine(L(0), L(2)), L(0), L(1, 2))
    bad_gap = PwlPiece(CostLine(L(1), L(0)), L(3, 4), L(1))
    with pytest.raises(ValueError):
        PwlCurve((good, bad_gap), L(0), L(1))
    with pytest.raises(ValueError):
        PwlCurve((), L(0), L(1))


def test_value_at_outside_domain():
    c = envelope_of([CostLine(L(0), L(1))], domain=(L(1, 4), L(1, 2)))
    with pytest.raises(ValueError):
        c.value_at(L(3, 4))


def test_random_envelopes_match_pointwise_min():
    import random

    rng = random.Random(3)
    for trial in range(40):
        lines = [
            CostLine(L(rng.randrange(0, 30), rng.randrange(1, 5)),
                     L(rng.randrange(0, 40), rng.randrange(1, 5)))
            for _ in range(rng.randrange(1, 12))
        ]
        c = envelope_of(lines)
        for _ in range(20):
            lam = L(rng.randrange(0, 101), 100)
            expect = min(ln.value_at(lam) for ln in lines)
            assert c.value_at(lam) == expect, (trial, lam)
