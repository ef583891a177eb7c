import pytest

from equicycle import (
    BadVertexError,
    BookParams,
    DuplicateEdgeError,
    ParseError,
    SelfLoopError,
    UnknownEdgeError,
    book,
    build,
    complete,
    connected_components,
    cycle,
    cycle_spectrum,
    degree,
    parse_edge_list,
    path,
    serialize_edge_list,
    subdivide,
)

from brute import graph_cycle_lengths


def test_build_triangle():
    g = build(3, [(0, 1), (1, 2), (2, 0)])
    assert g.vertex_count == 3
    assert g.edges == ((0, 1), (0, 2), (1, 2))


def test_build_rejects_self_loop():
    with pytest.raises(SelfLoopError):
        build(2, [(0, 0)])


def test_build_rejects_duplicate_edge():
    with pytest.raises(DuplicateEdgeError):
        build(4, [(0, 1), (0, 1)])
    with pytest.raises(DuplicateEdgeError):
        build(4, [(0, 1), (1, 0)])


def test_build_rejects_out_of_range():
    with pytest.raises(BadVertexError):
        build(3, [(0, 3)])


def test_degree():
    g = cycle(3)
    assert all(degree(g, v) == 2 for v in range(3))
    p = path(2)
    assert degree(p, 0) == 1 and degree(p, 2) == 1 and degree(p, 1) == 2
    # spine endpoints of B(2,4,4) meet p+1 = 5 internally disjoint paths
    b = book(BookParams(2, 4, 4))
    assert degree(b, 0) == 5 and degree(b, 2) == 5
    with pytest.raises(BadVertexError):
        degree(g, 5)


def test_degree_sum_is_twice_edges():
    for g in (cycle(6), complete(5), book(BookParams(2, 4, 3)), path(4)):
        assert sum(degree(g, v) for v in range(g.vertex_count)) == 2 * g.edge_count


def test_connected_components():
    assert connected_components(cycle(3)) == [[0, 1, 2]]
    two = build(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    assert connected_components(two) == [[0, 1, 2], [3, 4, 5]]
    assert connected_components(build(1, [])) == [[0]]


def test_subdivide_once_grows_cycle():
    c4 = subdivide(cycle(3), (0, 1), 1)
    assert c4.vertex_count == 4 and c4.edge_count == 4
    assert graph_cycle_lengths(c4) == {4}


def test_subdivide_zero_is_identity():
    g = cycle(3)
    assert subdivide(g, (0, 1), 0) is g


def test_subdivide_unknown_edge():
    with pytest.raises(UnknownEdgeError):
        subdivide(cycle(4), (0, 2), 1)


def test_subdivide_k5_uniformly():
    # subdividing every edge d times scales girth to 3+3d and
    # circumference to 5+5d
    g = complete(5)
    d = 1
    for e in list(g.edges):
        g = subdivide(g, e, d)
    from equicycle import SearchBudget

    report = cycle_spectrum(g, SearchBudget(max_vertices=15))
    assert report.girth == 3 + 3 * d
    assert report.circumference == 5 + 5 * d


def test_parse_with_header():
    g = parse_edge_list("vertices 3\n0 1\n1 2\n2 0\n")
    assert g == cycle(3)


def test_parse_without_header_infers_ids():
    g = parse_edge_list("0 1\n1 2\n")
    assert g == path(2)


def test_parse_remaps_sparse_labels():
    g = parse_edge_list("10 40\n40 20\n")
    assert g.vertex_count == 3
    assert g.labels == (10, 20, 40)


def test_parse_comments_and_blanks():
    g = parse_edge_list("# triangle\n\nvertices 3\n0 1\n# middle\n1 2\n2 0\n")
    assert g == cycle(3)


@pytest.mark.parametrize(
    "text,line",
    [
        ("0 0\n", 1),
        ("vertices 2\n0 1\n0 3\n", 3),
        ("0 1\n1 0\n", 2),
        ("0 1 2\n", 1),
        ("a b\n", 1),
    ],
)
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as exc:
        parse_edge_list(text)
    assert exc.value.line == line


def test_roundtrip():
    for g in (cycle(5), book(BookParams(2, 4, 4)), build(4, []), path(0)):
        assert parse_edge_list(serialize_edge_list(g)) == g


def test_isolated_vertices_survive_header():
    g = parse_edge_list("vertices 5\n0 1\n")
    assert g.vertex_count == 5
    assert connected_components(g) == [[0, 1], [2], [3], [4]]
