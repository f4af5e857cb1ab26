import pytest
from hypothesis import given, settings, strategies as st

from twocss.errors import (
    DuplicateEdgeError,
    GraphError,
    MalformedLineError,
    ParseError,
    SelfLoopError,
    VertexRangeError,
)
from twocss.graph import Graph, is_2vcss
from twocss.instances import (
    gen_complete,
    gen_cycle,
    gen_random_2connected,
    gen_theta,
    gen_tight,
    max_extra_edges,
    parse,
    read_graph,
    serialize,
    small_suite,
    write_graph,
)
from twocss.rng import SplitMix64


def test_splitmix_reference_stream():
    rng = SplitMix64(1234567)
    assert [rng.next_u64() for _ in range(5)] == [
        6457827717110365317,
        3203168211198807973,
        9817491932198370423,
        4593380528125082431,
        16408922859458223821,
    ]


def test_splitmix_bounded_and_shuffle():
    rng = SplitMix64(7)
    draws = [rng.below(6) for _ in range(600)]
    assert set(draws) == set(range(6))
    items = list(range(20))
    SplitMix64(3).shuffle(items)
    assert sorted(items) == list(range(20)) and items != list(range(20))
    with pytest.raises(ValueError):
        rng.below(0)


def test_random_generator_examples():
    g = gen_random_2connected(5, 0, seed=1)
    assert g.m == 5 and all(len(a) == 2 for a in g.adjacency)
    g = gen_random_2connected(8, 4, seed=42)
    assert g.m == 12 and is_2vcss(g, range(g.m))
    assert gen_random_2connected(6, max_extra_edges(6), seed=9) == gen_complete(6)
    assert gen_random_2connected(8, 4, seed=42) == g
    assert list(g.edges) == sorted(g.edges)
    with pytest.raises(GraphError):
        gen_random_2connected(5, max_extra_edges(5) + 1, seed=0)
    with pytest.raises(GraphError):
        gen_random_2connected(2, 0, seed=0)


def test_theta_and_cycle():
    g = gen_theta(1, 2, 2)
    assert (g.n, g.m) == (4, 5)
    g = gen_theta(3, 4, 5)
    assert (g.n, g.m) == (11, 12)
    with pytest.raises(GraphError):
        gen_theta(1, 1, 3)
    with pytest.raises(GraphError):
        gen_theta(0, 2, 2)
    assert gen_cycle(3) == gen_complete(3)
    with pytest.raises(GraphError):
        gen_cycle(2)


def test_tight_family_shape():
    assert gen_tight(1) == Graph(5, [(0, 1), (0, 2), (2, 3), (3, 4), (1, 4)])
    for k in range(1, 6):
        g = gen_tight(k)
        assert (g.n, g.m) == (3 * k + 2, 5 * k)
        assert is_2vcss(g, range(g.m))
    with pytest.raises(GraphError):
        gen_tight(0)


def test_parse_triangle_and_comments():
    g = parse("# a triangle\n3 3\n0 1\n2 1\n# mid comment\n0 2\n")
    assert g == gen_cycle(3) or sorted(g.edges) == sorted(gen_cycle(3).edges)
    assert g.edges == ((0, 1), (1, 2), (0, 2))


@pytest.mark.parametrize("text, error", [
    ("", MalformedLineError),
    ("3\n", MalformedLineError),
    ("3 x\n", MalformedLineError),
    ("3 2\n0 1\n", MalformedLineError),
    ("3 1\n0 1\n1 2\n", MalformedLineError),
    ("3 1\n0 1 2\n", MalformedLineError),
    ("2 1\n0 0\n", SelfLoopError),
    ("3 2\n0 1\n1 0\n", DuplicateEdgeError),
    ("3 1\n0 3\n", VertexRangeError),
    ("3 1\n-1 2\n", VertexRangeError),
])
def test_parse_errors_are_distinct(text, error):
    with pytest.raises(error) as info:
        parse(text)
    assert isinstance(info.value, ParseError)


def test_parse_error_reports_line():
    with pytest.raises(DuplicateEdgeError) as info:
        parse("3 3\n0 1\n1 2\n# x\n2 1\n")
    assert info.value.line == 5


def test_round_trip_and_byte_identity(tmp_path):
    g = gen_tight(2)
    text = serialize(g)
    assert parse(text) == g
    assert serialize(parse(text)) == text
    path = tmp_path / "g.txt"
    write_graph(g, path)
    assert path.read_bytes() == text.encode()
    assert read_graph(path) == g


def test_small_suite_bounds_and_determinism():
    suite = small_suite(50, seed=7)
    assert [name for name, _ in suite][:2] == ["small-000", "small-001"]
    for _, g in suite:
        assert 5 <= g.n <= 10 and g.m <= 20
        assert is_2vcss(g, range(g.m))
    assert small_suite(50, seed=7) == suite


@settings(max_examples=50, deadline=None)
@given(st.integers(3, 14), st.integers(0, 2**64 - 1), st.data())
def test_random_generator_properties(n, seed, data):
    extra = data.draw(st.integers(0, max_extra_edges(n)))
    g = gen_random_2connected(n, extra, seed)
    assert g.m == n + extra
    assert is_2vcss(g, range(g.m))
    assert parse(serialize(g)) == g
