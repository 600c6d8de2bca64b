import pytest
from hypothesis import given
from hypothesis import strategies as st

from genusbound import adjunction as adj
from genusbound.errors import PreconditionError, ValidationError
from genusbound.reduction import EmbeddingMap
from genusbound.swtopology import PD_SIGMA, InsertionData, ManifoldData, SpinCData, SurfaceData


def case(b1=0, b2_plus=2, e=-2, n=0, d_s=0, insertion=None, genus=10, chamber=None, **surface):
    chamber = chamber or (PD_SIGMA if b2_plus == 1 else "not_applicable")
    return adj.AdjunctionCase.build(
        ManifoldData(b1, b2_plus), SurfaceData(genus, n, **surface), SpinCData("s", e, chamber=chamber), d_s, insertion
    )


def deg(d_b):
    return InsertionData(u_power=d_b // 2, surface_one_dim_count=d_b % 2)


def test_genus_from_lhs():
    assert [adj.genus_from_lhs(x) for x in (-4, 0, 1, 2, 7, 8)] == [1, 1, 2, 2, 5, 5]


def test_normalize_orientation():
    c = case(e=4, n=0)
    out = adj.normalize_orientation(c)
    assert out.e == -4 and out.orientation_reversed
    assert adj.normalize_orientation(case(e=-4)) == case(e=-4)
    assert adj.normalize_orientation(case(e=0)) == case(e=0)
    with pytest.raises(PreconditionError):
        adj.normalize_orientation(case(b2_plus=1, e=2))


def test_th1_examples():
    assert adj.bound_th1(case()).genus_lower_bound == 2
    v = adj.bound_th1(case(b1=3, n=2, d_s=4))
    assert v.lhs == 8 and v.genus_lower_bound == 5
    v = adj.bound_th1(case(b2_plus=1, e=2, n=0))
    assert not v.applicable and adj.CHAMBER_POS in v.failed_hypotheses


def test_th2_examples():
    v = adj.bound_th2(case(insertion=InsertionData()), 0)
    assert v.theorem_id == adj.TH2 and v.genus_lower_bound == 2
    v = adj.bound_th2(case(n=2, insertion=deg(3)), 3)
    assert v.theorem_id == adj.TH2 and v.lhs == 10 and v.genus_lower_bound == 6
    v = adj.bound_th2(case(n=2, insertion=deg(3)), 1)
    assert v.theorem_id == adj.TH2_HIGH and v.lhs == 7 and v.genus_lower_bound == 5


def test_th3_examples():
    assert adj.bound_th3(case(insertion=InsertionData())).genus_lower_bound == 2
    v = adj.bound_th3(case(b1=2, e=-4, n=2, insertion=deg(3)))
    assert v.lhs == 12 and v.genus_lower_bound == 7
    v = adj.bound_th3(case(b1=4, n=2))
    assert not v.applicable and v.failed_hypotheses == (adj.B1_GATE,)


def test_th4_examples():
    c = case(n=2, d_s=4)
    assert adj.bound_th4(c).genus_lower_bound == adj.bound_th3(c).genus_lower_bound
    v = adj.bound_th4(case(b1=2, n=2, d_s=6))
    assert v.lhs == 12 and v.genus_lower_bound == 7
    v = adj.bound_th4(case(b1=2, e=0, n=1, d_s=2))
    assert not v.applicable and adj.TH4_GATE in v.failed_hypotheses


def test_key_examples():
    v = adj.max_insertion_degree(case(b1=2, genus=5, e=-4))
    assert v.degree_cap == 3
    v = adj.max_insertion_degree(case(b1=3, e=-6, insertion=deg(4)))
    assert v.genus_lower_bound == 7
    assert not adj.max_insertion_degree(case(b1=3, e=-2, n=0)).applicable


def test_best_bound_examples():
    r = adj.best_bound(case())
    assert r.best_bound == 2
    assert all(r.verdict(t).genus_lower_bound == 2 for t in (adj.TH1, adj.TH3, adj.TH4))

    r = adj.best_bound(case(b1=1, n=2, d_s=4))
    assert r.verdict(adj.TH1).genus_lower_bound == 5
    assert r.verdict(adj.TH4).genus_lower_bound == 6
    # th3 also applies here (gate 4 >= 2) and gives 7; see the decisions ledger
    assert r.verdict(adj.TH3).genus_lower_bound == 7
    assert r.best_bound == 7

    r = adj.best_bound(case(n=-2))
    assert r.best_bound is None
    assert all(adj.SELF_INT in v.failed_hypotheses for v in r.verdicts)


def test_best_bound_orientation_and_l_source():
    r = adj.best_bound(case(e=2, genus=1))
    assert r.normalization_applied and r.best_bound == 2 and r.genus_excluded
    emb = EmbeddingMap.zero(3, 1)
    r = adj.best_bound(case(b1=1, genus=3, embedding=emb))
    assert (r.l_sigma, r.l_source) == (3, "embedding")
    assert adj.best_bound(case(b1=1, genus=3)).l_source == "referee"
    assert adj.best_bound(case(), l_sigma=0).l_source == "given"


def test_validation_errors():
    with pytest.raises(ValidationError) as exc:
        adj.best_bound(case(e=1, n=0))
    assert exc.value.rule == "wu_parity"
    with pytest.raises(ValidationError) as exc:
        adj.best_bound(case(b2_plus=1, chamber="not_applicable"))
    assert exc.value.rule == "chamber_required"


def test_inapplicable_hypotheses_named():
    c = adj.AdjunctionCase.build(
        ManifoldData(0, 2), SurfaceData(3, 0, non_torsion=False), SpinCData("s", 0, sw_nonvanishing=False), -2
    )
    v = adj.bound_th1(c)
    assert set(v.failed_hypotheses) >= {adj.NON_TORSION, adj.SW, adj.NEG_DIM, adj.BASIC}
    v = adj.bound_th4(case(d_s=2, insertion=InsertionData()))
    assert v.failed_hypotheses == (adj.BASIC,)


@given(
    st.integers(0, 6), st.integers(1, 4), st.integers(-20, 20), st.integers(-4, 20),
    st.integers(-2, 10).map(lambda x: 2 * x), st.integers(1, 12),
)
def test_best_bound_is_max_of_applicable(b1, b2p, e, n, d_s, genus):
    if (abs(e) + n) % 2:
        n += 1
    c = case(b1=b1, b2_plus=b2p, e=e, n=n, d_s=d_s, genus=genus)
    r = adj.best_bound(c)
    bounds = [v.genus_lower_bound for v in r.verdicts if v.applicable]
    assert r.best_bound == (max(bounds) if bounds else None)
    for v in r.verdicts:
        assert v.applicable == (not v.failed_hypotheses)
        assert v.applicable == (v.genus_lower_bound is not None)
        if v.applicable and v.theorem_id == adj.KEY:
            assert v.genus_lower_bound == max(1, c.d_b + b1)
        elif v.applicable:
            assert v.genus_lower_bound >= 1
            assert 2 * v.genus_lower_bound - 2 >= v.lhs
            assert v.genus_lower_bound == 1 or 2 * v.genus_lower_bound - 4 < v.lhs
    if b2p > 1:
        flipped = adj.best_bound(case(b1=b1, b2_plus=b2p, e=-e, n=n, d_s=d_s, genus=genus))
        assert flipped.best_bound == r.best_bound
