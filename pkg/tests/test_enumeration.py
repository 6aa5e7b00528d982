from random import Random

import pytest

from wellcovered import (
    Graph,
    Polynomial,
    binomial_ratio_check,
    build_function_graph,
    check_clique_extension,
    clique_polynomial,
    cliques_of_size,
    complement,
    complete,
    disjoint_copies,
    independence_polynomial,
    independence_polynomial_bruteforce,
    is_well_covered,
    kneser,
    maximal_cliques,
    maximal_independent_sets,
)

import bruteforce


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


# -- independence polynomial ---------------------------------------------


def test_polynomial_examples():
    assert independence_polynomial(complete(3)) == Polynomial([1, 3])
    assert independence_polynomial(Graph(3, [0, 0, 0])) == Polynomial([1, 3, 3, 1])
    assert independence_polynomial(Graph(0, [])) == Polynomial([1])
    h = build_function_graph(1, 3, 2)
    assert independence_polynomial(complement(h)) == Polynomial([1, 12, 24, 8])


def test_polynomial_matches_bruteforce_oracle():
    rng = Random(101)
    for _ in range(60):
        g = bruteforce.random_graph(rng, rng.randint(0, 12), p=rng.uniform(0.1, 0.9))
        fast = independence_polynomial(g)
        assert list(fast) == bruteforce.independence_counts(g)
        assert fast == independence_polynomial_bruteforce(g)


def test_bruteforce_oracle_bound():
    with pytest.raises(ValueError):
        independence_polynomial_bruteforce(Graph(21, [0] * 21))


def test_clique_polynomial():
    assert clique_polynomial(complete(3)) == Polynomial([1, 3, 3, 1])
    assert clique_polynomial(disjoint_copies(complete(3), 2)) == Polynomial([1, 6, 6, 2])
    assert clique_polynomial(build_function_graph(1, 3, 2)) == Polynomial([1, 12, 24, 8])
    rng = Random(7)
    for _ in range(15):
        g = bruteforce.random_graph(rng, rng.randint(0, 10))
        assert clique_polynomial(g) == independence_polynomial(complement(g))


# -- maximal set enumeration ---------------------------------------------


def test_maximal_independent_sets_examples():
    assert sorted(maximal_independent_sets(complete(3))) == [(0,), (1,), (2,)]
    assert sorted(maximal_independent_sets(path(3))) == [(0, 2), (1,)]
    assert sorted(maximal_independent_sets(cycle(4))) == [(0, 2), (1, 3)]


def test_maximal_sets_match_subset_filter():
    rng = Random(55)
    for _ in range(40):
        g = bruteforce.random_graph(rng, rng.randint(0, 11), p=rng.uniform(0.1, 0.9))
        emitted = list(maximal_independent_sets(g))
        assert len(emitted) == len(set(emitted)), "duplicate emission"
        assert set(emitted) == bruteforce.maximal_independent_sets(g)
        assert set(maximal_cliques(g)) == bruteforce.maximal_cliques(g)
    # stretch toward the testable bound
    for n, p in ((14, 0.4), (16, 0.7)):
        g = bruteforce.random_graph(Random(n), n, p)
        assert set(maximal_independent_sets(g)) == bruteforce.maximal_independent_sets(g)


def test_enumeration_deterministic():
    g = bruteforce.random_graph(Random(3), 12)
    assert list(maximal_independent_sets(g)) == list(maximal_independent_sets(g))


def test_cliques_of_size():
    rng = Random(77)
    for _ in range(20):
        g = bruteforce.random_graph(rng, rng.randint(0, 9))
        for j in range(0, 5):
            assert set(cliques_of_size(g, j)) == bruteforce.cliques_of_size(g, j)


# -- well-coveredness -----------------------------------------------------


def test_is_well_covered():
    report = is_well_covered(path(3))
    assert not report.is_well_covered
    assert report.alpha == 2
    assert sorted(len(w) for w in report.witness) == [1, 2]
    for w in report.witness:
        assert bruteforce.is_independent(path(3), w)

    report = is_well_covered(complement(build_function_graph(1, 3, 2)))
    assert report.is_well_covered and report.alpha == 3 and report.witness is None

    report = is_well_covered(cycle(4))
    assert report.is_well_covered and report.alpha == 2

    assert is_well_covered(Graph(0, [])).alpha == 0


def test_well_covered_json():
    data = is_well_covered(path(3)).to_json()
    assert data["is_well_covered"] is False
    assert data["alpha"] == 2
    assert len(data["witness"]) == 2


# -- clique extension property --------------------------------------------


def test_check_clique_extension_holds():
    assert check_clique_extension(build_function_graph(1, 3, 2), 1, 3, 2).holds
    assert check_clique_extension(complete(4), 1, 4, 1).holds
    assert check_clique_extension(kneser(8, 2), 2, 4, 3).holds


def test_check_clique_extension_violations():
    # two triangles sharing an edge: the shared edge (2-clique) extends to
    # two maximal cliques, so uniqueness at k=1 fails
    g = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])
    report = check_clique_extension(g, 1, 3, 1)
    assert not report.holds
    assert any(c == 2 for c, _ in report.violations)

    # a lone edge among triangles breaks the size-q condition
    g2 = Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (3, 4)])
    report2 = check_clique_extension(g2, 1, 3, 1)
    assert not report2.holds
    assert any(c == 1 for c, _ in report2.violations)

    # m too large: condition 3
    report3 = check_clique_extension(complete(3), 0, 3, 2)
    assert not report3.holds
    assert report3.violations == ((3, ()),)


def test_check_clique_extension_param_validation():
    with pytest.raises(ValueError):
        check_clique_extension(complete(3), 3, 3, 1)
    with pytest.raises(ValueError):
        check_clique_extension(complete(3), -1, 3, 1)
    with pytest.raises(ValueError):
        check_clique_extension(complete(3), 1, 3, 0)


def test_clique_extension_json():
    data = check_clique_extension(complete(4), 1, 4, 1).to_json()
    assert data == {"holds": True, "k": 1, "q": 4, "m": 1, "violations": []}


# -- binomial-ratio chain ---------------------------------------------------


def test_binomial_ratio_check():
    assert binomial_ratio_check(complement(build_function_graph(1, 3, 2))).holds
    assert binomial_ratio_check(complete(3)).holds  # alpha = 1, empty chain
    assert binomial_ratio_check(cycle(4)).holds
    with pytest.raises(ValueError):
        binomial_ratio_check(path(3))


def test_binomial_ratio_check_random_well_covered():
    # complements of function graphs are well-covered by construction
    for (k, q, m) in [(0, 4, 3), (1, 4, 2), (2, 3, 3), (1, 2, 5)]:
        g = complement(build_function_graph(k, q, m))
        result = binomial_ratio_check(g)
        assert result.holds, (k, q, m, result)
