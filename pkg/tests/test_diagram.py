import json

import pytest

from exkh.diagram import A, B, Diagram, State, parse_pd, pd_hash
from exkh.errors import (
    ArcLabelNotPairedTwice,
    EmptyDiagram,
    InconsistentOrientation,
    MalformedTuple,
)

TREFOIL = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"
FIG8 = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)"
HOPF = "X(4,2,1,3) X(2,4,3,1)"


def test_trefoil_parses_all_negative():
    d = parse_pd(TREFOIL)
    assert d.crossing_count == 3
    assert d.signs == (-1, -1, -1)
    assert d.writhe == -3
    assert d.component_count == 1
    assert d.free_loops == 0


def test_parse_normalises_labels():
    # same diagram, labels shifted by 10
    shifted = "X(11,14,12,15) X(13,16,14,11) X(15,12,16,13)"
    assert parse_pd(shifted).to_pd() == TREFOIL


def test_parse_is_whitespace_insensitive():
    crammed = "X(1,4,2,5)X(3,6,4,1)\n  X(5, 2, 6, 3)"
    assert parse_pd(crammed).to_pd() == TREFOIL


def test_free_loops():
    d = parse_pd("U U")
    assert d.crossing_count == 0
    assert d.free_loops == 2
    assert d.component_count == 2
    d2 = parse_pd(TREFOIL + " U")
    assert d2.component_count == 2
    assert d2.free_loops == 1


def test_unknot_constructor():
    u = Diagram.unknot(3)
    assert u.to_pd() == "U U U"
    assert u.component_count == 3


@pytest.mark.parametrize(
    "text,exc",
    [
        ("", EmptyDiagram),
        ("   \n ", EmptyDiagram),
        ("X(1,2,3)", MalformedTuple),
        ("Y(1,2,3,4)", MalformedTuple),
        ("X(1,2,3,4) frog", MalformedTuple),
        ("X(1,2,3,4) X(1,2,3,5)", ArcLabelNotPairedTwice),
        ("X(1,1,2,3)", ArcLabelNotPairedTwice),
        ("X(8,3,9,4)", ArcLabelNotPairedTwice),
        ("X(1,2,3,4) X(1,3,2,4)", InconsistentOrientation),
    ],
)
def test_parse_rejects(text, exc):
    with pytest.raises(exc):
        parse_pd(text)


def test_mirror_flips_signs_and_writhe():
    d = parse_pd(TREFOIL)
    m = d.mirror()
    assert m.signs == (1, 1, 1)
    assert m.writhe == 3
    assert m.mirror().to_pd() == d.to_pd()


def test_mirror_swaps_smoothings():
    d = parse_pd(FIG8)
    m = d.mirror()
    assert len(d._resolve_bits(0)) == len(m._resolve_bits((1 << 4) - 1))
    assert len(d._resolve_bits((1 << 4) - 1)) == len(m._resolve_bits(0))


def test_reverse_component_keeps_crossings_flips_signs_of_mixed_pairs():
    d = parse_pd(HOPF)
    assert d.writhe == 2
    r = d.reverse_component(0)
    # reversing one strand of a two-component link flips every linking sign
    assert r.writhe == -2
    rr = r.reverse_component(0)
    assert rr.to_pd() == d.to_pd()
    assert rr.signs == d.signs


def test_reverse_component_of_knot_preserves_signs():
    d = parse_pd(TREFOIL)
    r = d.reverse_component(0)
    assert r.signs == d.signs
    assert r.crossing_count == 3
    with pytest.raises(ValueError):
        d.reverse_component(1)


def test_resolution_circle_counts_for_trefoil():
    d = parse_pd(TREFOIL)
    assert len(d._resolve_bits(0)) == 3  # all A
    assert len(d._resolve_bits(0b111)) == 2  # all B
    rs = d.resolve(d.all_a_state())
    assert rs.circle_count == 3
    assert rs.state.a_count == 3 and rs.state.b_count == 0


def test_resolution_circles_are_canonical():
    d = parse_pd(TREFOIL)
    rs = d.resolve(State((A, B, A)))
    for circle in rs.circles:
        assert circle[0] == min(circle)
    assert list(rs.circles) == sorted(rs.circles, key=lambda c: c[0])
    assert rs.circle_of(rs.circles[0][0]) == 0


def test_resolve_validates_state_length():
    d = parse_pd(TREFOIL)
    with pytest.raises(ValueError):
        d.resolve(State((A, B)))


def test_state_flip():
    s = State((A, A, B))
    assert s.flip(0).labels == (B, A, B)
    assert s.sigma == 1
    assert s.flip(0).sigma == -1
    assert s.flip(0).flip(0) == s


def test_components_partition_arcs():
    d = parse_pd(FIG8 + " U")
    comps = d.components
    arcs = sorted(a for comp in comps for a in comp)
    assert arcs == list(range(1, 9))
    assert d._component_of_arc[5] == 0


def test_json_round_trip():
    d = parse_pd(HOPF)
    back = Diagram.from_json(d.to_json())
    assert back == d
    payload = json.loads(d.to_json())
    assert payload["signs"] == [1, 1]


def test_resolved_state_json():
    d = parse_pd(TREFOIL)
    rs = d.resolve(d.all_a_state())
    payload = json.loads(rs.to_json())
    assert len(payload["circles"]) == 3
    assert len(payload["chords"]) == 3


def test_pd_hash_stability_and_sensitivity():
    d = parse_pd(TREFOIL)
    assert pd_hash(d) == pd_hash(parse_pd(TREFOIL))
    assert pd_hash(d) != pd_hash(d.mirror())
    assert len(pd_hash(d)) == 12


def test_round_trip_on_corpus(corpus12):
    """Parsing its own output is the identity once labels are normalised.

    Signs survive whenever recoverable: a component that never passes under
    a crossing leaves no orientation trace in the PD text, so the parser's
    default choice may flip the signs of its crossings.
    """
    for d in corpus12[:80]:
        back = parse_pd(d.to_pd())
        assert back.crossing_count == d.crossing_count
        assert back.free_loops == d.free_loops
        unders = {t[0] for t in d.crossings} | {t[2] for t in d.crossings}
        if all(any(a in unders for a in comp) for comp in d.components):
            assert back.signs == d.signs
        again = parse_pd(back.to_pd())
        assert again.crossings == back.crossings
        assert again.signs == back.signs


def test_resolution_cache_reuses_tuples(corpus12):
    d = corpus12[0]
    first = d._resolve_bits(0)
    assert d._resolve_bits(0) is first
