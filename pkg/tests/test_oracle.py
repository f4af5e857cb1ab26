from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from conftest import bf_2ecss, bf_2vcss, pairs_of, random_ear_graph, segment_certificate
from twocss.errors import InfeasibleInputError, MalformedLineError, MisuseError, OracleBudgetExceeded
from twocss.graph import Graph, is_2ecss
from twocss.instances import gen_complete, gen_cycle, gen_tight
from twocss.local_search import solve
from twocss.oracle import (
    DualCertificate,
    degree_lower_bound,
    exact_min,
    format_certificate,
    naive_min,
    parse_certificate,
    singleton_certificate,
    verify_dual,
)
from twocss.segments import classify


def enumerate_opt(g, mode):
    test = bf_2vcss if mode == "2vcss" else bf_2ecss
    for size in range(g.n, g.m + 1):
        for f in combinations(range(g.m), size):
            if test(g.n, pairs_of(g, f)):
                return size
    return None


def test_exact_min_examples():
    assert exact_min(gen_cycle(9))[0] == 9
    for mode in ("2ecss", "2vcss"):
        assert exact_min(gen_complete(4), mode)[0] == 4
        assert exact_min(gen_complete(4), mode, incumbent=range(6))[0] == 4
    opt, witness = exact_min(gen_tight(2), "2vcss")
    assert opt == 8 and len(witness) == 8


def test_exact_min_is_not_fooled_by_a_bad_incumbent():
    g = gen_tight(3)
    opt, witness = exact_min(g, "2ecss", incumbent=range(g.m))
    assert opt == 11 and is_2ecss(g, witness)


def test_exact_min_rejects_infeasible_input():
    with pytest.raises(InfeasibleInputError):
        exact_min(Graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)]))
    with pytest.raises(ValueError):
        exact_min(gen_cycle(4), "3ecss")


def test_budget_exceeded():
    g = random_ear_graph(12, 6, seed=5)
    with pytest.raises(OracleBudgetExceeded):
        exact_min(g, "2ecss", budget=1, incumbent=range(g.m))


def test_degree_lower_bound():
    assert degree_lower_bound(gen_complete(6)) == 6
    assert degree_lower_bound(gen_tight(3)) == 11


def test_bowtie_separates_the_two_modes():
    g = Graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
    assert exact_min(g, "2ecss")[0] == 6
    with pytest.raises(InfeasibleInputError):
        exact_min(g, "2vcss")


def test_verify_dual_basics():
    g = gen_cycle(6)
    assert verify_dual(g, DualCertificate()) == (True, Fraction(0))
    assert verify_dual(g, singleton_certificate(g)) == (True, Fraction(6))
    # every edge of the cycle is cut by two singletons: 2 * 3/4 > 1
    assert verify_dual(g, singleton_certificate(g, Fraction(3, 4)))[0] is False
    paid = DualCertificate(y=dict(singleton_certificate(g, Fraction(3, 4)).y),
                           z={e: Fraction(1, 2) for e in range(g.m)})
    assert verify_dual(g, paid) == (True, Fraction(6))


def test_verify_dual_rejects_bad_sets():
    g = gen_cycle(4)
    with pytest.raises(MisuseError):
        verify_dual(g, DualCertificate(y={frozenset(): Fraction(1)}))
    with pytest.raises(MisuseError):
        verify_dual(g, DualCertificate(y={frozenset(range(4)): Fraction(1)}))
    with pytest.raises(MisuseError):
        verify_dual(g, DualCertificate(y={frozenset([0]): Fraction(-1)}))
    with pytest.raises(MisuseError):
        verify_dual(g, DualCertificate(z={9: Fraction(1)}))


def test_certificate_round_trip():
    g = gen_complete(5)
    cert = DualCertificate(y={frozenset([0]): Fraction(1, 2), frozenset([1, 2]): Fraction(1, 3)},
                           z={g.edge_id(0, 1): Fraction(1, 6)})
    text = format_certificate(g, cert)
    assert parse_certificate(g, text) == cert
    assert format_certificate(g, parse_certificate(g, text)) == text
    assert parse_certificate(g, "# comment\ny 3 1\n\nz 1 0 2/3\n") == DualCertificate(
        y={frozenset([3]): Fraction(1)}, z={g.edge_id(0, 1): Fraction(2, 3)})


@pytest.mark.parametrize("line", ["y 0 0.5", "y 0", "z 0 1", "w 0 1/2", "y a 1/2", "z 0 1 1/x"])
def test_certificate_parse_errors(line):
    with pytest.raises(MalformedLineError):
        parse_certificate(gen_complete(4), line + "\n")


def test_certificate_rejects_non_edge():
    with pytest.raises(MalformedLineError):
        parse_certificate(gen_cycle(5), "z 0 2 1/2\n")


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_segment_certificate_on_tight_family(k):
    g = gen_tight(k)
    f = sorted(solve(g, "2vcss").solution)
    y, z = segment_certificate(g, f, lambda s: classify(g, f, s).strong)
    ok, obj = verify_dual(g, DualCertificate(y=y, z=z))
    assert ok
    opt = exact_min(g, "2vcss")[0]
    assert obj <= opt == 3 * k + 2
    if k >= 3:
        # k long 4-segments, three internal vertices each at 1/2
        assert obj == 3 * k
    else:
        # the solution is one Hamiltonian cycle, so there are no segments
        assert obj == 0


@settings(max_examples=40, deadline=None)
@given(st.integers(4, 9), st.integers(0, 5), st.integers(0, 2**32))
def test_branch_and_bound_matches_enumeration(n, extra, seed):
    g = random_ear_graph(n, extra, seed)
    if g.m > 14:
        return
    for mode in ("2ecss", "2vcss"):
        expected = enumerate_opt(g, mode)
        assert exact_min(g, mode)[0] == expected
        assert exact_min(g, mode, incumbent=range(g.m))[0] == expected
    assert naive_min(g, "2ecss")[0] == exact_min(g, "2ecss")[0]


@settings(max_examples=30, deadline=None)
@given(st.integers(4, 10), st.integers(0, 6), st.integers(0, 2**32))
def test_mode_ordering_of_optima(n, extra, seed):
    g = random_ear_graph(n, extra, seed)
    e = exact_min(g, "2ecss")[0]
    v = exact_min(g, "2vcss")[0]
    assert degree_lower_bound(g) <= e <= v
