import pytest

import lwdlib


def all_pass(checks):
    return all(ok for _, ok, _ in checks)


def test_constructions():
    h = lwdlib.hamming(3)
    assert (h.n, h.k) == (7, 4)
    assert len(h.rows) == 4
    assert lwdlib.reed_muller(2, 5).k == 16
    assert lwdlib.bch(4, 5).k == 7
    assert lwdlib.extend(h).n == 8
    assert lwdlib.even_subcode(h).k == 3
    assert lwdlib.puncture(lwdlib.reed_muller(1, 3), 7).n == 7


def test_spectra():
    h = lwdlib.hamming(3)
    assert lwdlib.weight_distribution(h) == {0: 1, 3: 7, 4: 7, 7: 1}
    assert lwdlib.local_weight_distribution(h) == {3: 7, 4: 7}
    assert lwdlib.minimum_distance(h) == 3
    assert lwdlib.only_odd_counts(lwdlib.bch(4, 5)) == {10: 18}


def test_neighbor_and_classify():
    c = lwdlib.from_rows(["1000", "0111"])
    assert lwdlib.is_zero_neighbor(c, "1000")
    assert not lwdlib.is_zero_neighbor(c, "1111")
    assert lwdlib.classify(c, "1111") == lwdlib.DecompCategory.ONLY_ODD_DECOMPOSABLE
    with pytest.raises(ValueError):
        lwdlib.is_zero_neighbor(c, "0000")
    with pytest.raises(ValueError):
        lwdlib.is_zero_neighbor(c, "0100")


def test_relations():
    assert lwdlib.extend_lwd({3: 7, 4: 7}, {}, 7) == {4: 14}
    assert lwdlib.even_subcode_lwd({3: 7, 4: 7}, {}, 7) == {4: 7}
    ones, zeros = lwdlib.parity_split({32: 10668}, 128)
    assert ones == {32: 2667} and zeros == {32: 8001}
    assert lwdlib.puncture_lwd_transitive({4: 14}, {}, 8) == {3: 7, 4: 7}
    assert lwdlib.weights_multiple_of_four({0: 1, 4: 14, 8: 1}, 8)
    with pytest.raises(ArithmeticError):
        lwdlib.parity_split({3: 5}, 8)


def test_identities_on_codes():
    c = lwdlib.bch(4, 5)
    l = lwdlib.local_weight_distribution(c)
    n = lwdlib.only_odd_counts(c)
    lex = lwdlib.extend_lwd(l, n, c.n)
    assert lex == lwdlib.local_weight_distribution(lwdlib.extend(c))
    assert all_pass(lwdlib.verify_all_relations(lwdlib.hamming(3)))


def test_table2_exact_big_ints():
    cols = lwdlib.table2()
    n, k, lw = cols["127_64rm"]
    assert (n, k) == (127, 64)
    assert lw[60] == 1481008226366914560
    assert all_pass(lwdlib.table_ratio_check(lw, n))


def test_cosets():
    rm24 = lwdlib.reed_muller(2, 4)
    rm14 = lwdlib.reed_muller(1, 4)
    gens = lwdlib.affine_group_generators(4)
    assert all(lwdlib.is_automorphism(g, rm24) for g in gens)
    via = lwdlib.lwd_via_cosets(rm24, rm14, gens)
    assert via == lwdlib.local_weight_distribution(rm24)


def test_permutations():
    shift = lwdlib.cyclic_shift(7)
    assert lwdlib.apply_permutation(shift, "1000000") == "0100000"
    sample = lwdlib.group_sample(lwdlib.affine_group_generators(2), 100)
    assert len(sample) == 24


def test_random_is_deterministic():
    a = lwdlib.random_linear_code(10, 5, 1)
    b = lwdlib.random_linear_code(10, 5, 1)
    assert a.rows == b.rows
