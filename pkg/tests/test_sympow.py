import threading

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ptrace.singularity import duval_labels, duval_record
from ptrace.sympow import (
    MultipartitionCounter,
    a,
    count_multipartitions,
    duval_hp0_series,
    hp0_sympow_dim,
    hp0_sympow_series,
    hpdr_sympow_duval_series,
    multipartitions,
    partitions,
    relabel_ut_to_xy,
    twistor_orders_duval,
)

from oracles import all_partitions, literal_multipartitions


def test_partition_numbers():
    assert [a(n, 1) for n in range(10)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]
    assert a(5, 1) == 7
    assert a(0, 0) == 1 and a(3, 0) == 0


@pytest.mark.parametrize("n, i, want", [(2, 2, 5), (3, 2, 10), (5, 1, 7), (4, 3, 51)])
def test_small_multipartitions_listed(n, i, want):
    assert a(n, i) == want
    assert len(literal_multipartitions(n, i)) == want
    assert sum(1 for _ in multipartitions(n, i)) == want


def test_partitions_match_oracle():
    for n in range(12):
        assert sorted(partitions(n)) == sorted(all_partitions(n))


@pytest.mark.parametrize("i", range(6))
def test_product_equals_enumeration(i):
    for n in range(21):
        assert a(n, i) == count_multipartitions(n, i)


@given(st.integers(0, 15), st.integers(1, 5))
@settings(max_examples=60, deadline=None)
def test_monotone_in_n_and_i(n, i):
    assert a(n + 1, i) >= a(n, i)
    assert a(n, i + 1) >= a(n, i)


def test_counter_concurrent_fill():
    counter = MultipartitionCounter()
    serial = [MultipartitionCounter()(n, 3) for n in range(60)]
    results = {}

    def work(k):
        results[k] = [counter(n, 3) for n in range(60 - 1, -1, -1 - k % 3)]

    threads = [threading.Thread(target=work, args=(k,)) for k in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    for k, got in results.items():
        assert got == [serial[n] for n in range(60 - 1, -1, -1 - k % 3)]


def test_counter_rejects_negative():
    with pytest.raises(ValueError):
        a(-1, 2)
    with pytest.raises(ValueError):
        hp0_sympow_dim(-1, 2)


def test_hp0_sympow_dim():
    assert hp0_sympow_dim(8, 2) == a(2, 8) == 44


# -- generating functions


@pytest.mark.parametrize("label", duval_labels())
def test_specializations(label):
    rec = duval_record(label)
    mu = rec.milnor
    s0 = duval_hp0_series(rec, 10).specialize_all()
    s1 = hpdr_sympow_duval_series(rec, 10).specialize_all()
    assert s0 == [a(n, mu) for n in range(11)]
    assert s1 == [a(n, mu + 1) for n in range(11)]


def test_a1_sympow_first_coefficients():
    rec = duval_record("A1")
    s = hpdr_sympow_duval_series(rec, 2)
    assert s[1].as_dict() == {(0, 0): 1, (-2, 2): 1}
    assert s[0].as_dict() == {(0, 0): 1}
    # n = 1 of HP_0 is the Jacobi series itself
    assert duval_hp0_series(rec, 3)[1] == rec.jacobi_series("c2")


@pytest.mark.parametrize("label", ["A2", "D4", "E6"])
def test_hp0_sympow_series_s1_is_jacobi(label):
    rec = duval_record(label)
    for g in ("listed", "c2", "paper"):
        assert duval_hp0_series(rec, 2, g)[1] == rec.jacobi_series(g)


def test_series_step_validation():
    with pytest.raises(ValueError):
        hp0_sympow_series([0], 0, 3)
    with pytest.raises(ValueError):
        hp0_sympow_series([0], 2, -1)


def test_trigraded_specializes_to_bigraded_hp0():
    # keeping only homological degree 0 recovers HP_0 of the symmetric powers
    rec = duval_record("A2")
    tri = hpdr_sympow_duval_series(rec, 4)
    hp0 = duval_hp0_series(rec, 4)
    for n in range(5):
        deg0 = {e[0]: c for e, c in tri[n].coeffs if e[1] == 0}
        assert deg0 == hp0[n].as_dict()


# -- twistor orders


@pytest.mark.parametrize("label", duval_labels())
def test_twistor_matches_trigraded(label):
    rec = duval_record(label)
    tw = twistor_orders_duval(rec)
    assert tw.phi[(0, 1)] == 0
    assert tw.reconstruction() == relabel_ut_to_xy(hpdr_sympow_duval_series(rec, 1)[1])


def test_twistor_e8_orders():
    tw = twistor_orders_duval(duval_record("E8"))
    assert tw.orders(2) == (1, 7, 11, 13, 17, 19, 23, 29)
    assert tw.orders(0) == (0,)
    assert tw.coxeter_number == 30


def test_twistor_json_roundtrip_shape():
    js = twistor_orders_duval(duval_record("A1")).to_json()
    assert js["phi"] == [[0, 1, 0], [2, 1, 1]]
