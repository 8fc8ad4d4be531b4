import pytest
from hypothesis import given, strategies as st

from alphaspec.ordering import (
    LengthMismatch,
    NotSorted,
    is_majorized_by,
    sweep,
    verify_chain,
    verify_class_maximizer_bruteforce,
    verify_majorization_monotonicity,
    verify_maximizer_bound,
)


def test_majorization_examples():
    assert is_majorized_by((3, 1, 1, 1), (3, 1, 1, 1))
    assert is_majorized_by((2, 2, 1, 1), (3, 1, 1, 1))
    assert not is_majorized_by((3, 1, 1, 1), (2, 2, 1, 1))
    assert not is_majorized_by((4, 4, 1, 1), (5, 2, 2, 1))
    assert not is_majorized_by((5, 2, 2, 1), (4, 4, 1, 1))
    assert not is_majorized_by((2, 2, 2, 1), (3, 1, 1, 1))
    with pytest.raises(LengthMismatch):
        is_majorized_by((2, 1), (3,))
    with pytest.raises(NotSorted):
        is_majorized_by((1, 2), (2, 1))


def sequences(total=st.integers(4, 14), length=st.integers(2, 6)):
    return st.tuples(total, length).flatmap(
        lambda tl: st.lists(st.integers(1, tl[0]), min_size=tl[1], max_size=tl[1]).map(
            lambda xs: tuple(sorted(xs, reverse=True))
        )
    )


same_length = st.integers(2, 5).flatmap(
    lambda n: st.lists(
        st.lists(st.integers(0, 5), min_size=n, max_size=n).map(lambda xs: tuple(sorted(xs, reverse=True))),
        min_size=3,
        max_size=3,
    )
)


@given(sequences())
def test_reflexive(pi):
    assert is_majorized_by(pi, pi)


@given(same_length)
def test_antisymmetric_and_transitive(triple):
    a, b, c = triple
    if is_majorized_by(a, b) and is_majorized_by(b, a):
        assert a == b
    if is_majorized_by(a, b) and is_majorized_by(b, c):
        assert is_majorized_by(a, c)


def test_chain_examples():
    rep = verify_chain(13, 3, 0.0, 1e-9)
    assert rep.verdict
    assert len(rep.entries) == 9 and len(rep.comparisons) == 8
    assert [e.name for e in rep.entries][-2:] == ["T1_2_9", "S4_8"]
    assert all(e.solver_rho is not None for e in rep.entries if e.method == "both")
    assert verify_chain(13, 3, 0.95, 1e-9).verdict
    assert verify_chain(13, 4, 0.5, 1e-9).verdict


def test_chain_with_double_stars():
    rep = verify_chain(13, 3, 0.5, 1e-9, include_double_stars=True)
    assert rep.verdict
    names = [c.larger for c in rep.comparisons[8:]]
    assert names[0] == "S14" and len(rep.comparisons) == 8 + 6


def test_insufficient_separation_is_reported():
    rep = verify_chain(13, 3, 0.5, tol=10.0)
    assert not rep.verdict
    assert all(f.startswith("InsufficientSeparation") for f in rep.failures)


def test_maximizer_bound_counts():
    rep = verify_maximizer_bound(13, 3, 0.0, 1e-9)
    assert rep.verdict
    assert (rep.details["classes"], rep.details["exceptional"], rep.details["bounded"]) == (77, 6, 71)


def test_monotonicity_small():
    rep = verify_majorization_monotonicity(6, 3, 0.0, 1e-9)
    assert rep.verdict and rep.details["classes"] == 7
    assert rep.details["comparable_pairs"] > 0


@pytest.mark.parametrize("m, alpha", [(3, 0.0), (5, 0.0), (5, 0.9)])
def test_bruteforce(m, alpha):
    rep = verify_class_maximizer_bruteforce(m, 3, alpha, 1e-9)
    assert rep.verdict
    if m == 3:
        assert rep.details == {"supertrees": 2, "classes": 2}
        assert rep.comparisons == []


def test_sweep_shapes():
    rows = sweep([13], [3], [0.0, 0.5], ["chain"])
    assert len(rows) == 2 and all(r.verdict == "true" for r in rows)
    assert len(sweep([13], [3, 4], [0.3], ["chain", "bound"])) == 4
    assert sweep([13], [3], [], ["chain"]) == []
    assert all(r.runtime_ms is None for r in rows)
    with pytest.raises(ValueError):
        sweep([13], [3], [0.0], ["nope"])


def test_sweep_records_errors():
    row = sweep([6], [3], [0.0], ["chain"])[0]
    assert row.verdict == "error" and "BadParams" in row.entries


def test_chain_order_at_high_alpha_k4():
    # at k = 4, alpha = 0.95 four adjacent gaps are below 1e-9; the order itself
    # still holds, confirmed here with a 30-digit power iteration
    import mpmath as mp

    from alphaspec.families import double_star, top_eight
    from oracles import mp_rho

    graphs = top_eight(13, 4) + [("S4_8", double_star(4, 8, 4))]
    with mp.workdps(30):
        rhos = [mp_rho(H, 0.95, dps=30, tol="1e-22") for _, H in graphs]
        gaps = [a - b for a, b in zip(rhos, rhos[1:])]
    assert all(g > mp.mpf("1e-11") for g in gaps)
    assert min(gaps) < mp.mpf("1e-9")
    assert verify_chain(13, 4, 0.95, tol=1e-11).verdict
