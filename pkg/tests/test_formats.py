import networkx as nx
import pytest
from hypothesis import given

from oddthick import generators as gen
from oddthick.errors import ParseError
from oddthick.formats import (
    from_dimacs,
    from_edge_list,
    from_graph6,
    parse_graph,
    read_graph6_lines,
    serialize_graph,
    to_dimacs,
    to_edge_list,
    to_graph6,
)
from oddthick.graph import Graph
from strategies import graphs


def nx_graph6(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return nx.to_graph6_bytes(h, header=False).decode().strip()


class TestGraph6:
    @given(graphs(max_n=9))
    def test_encoder_matches_networkx(self, g):
        assert to_graph6(g) == nx_graph6(g)

    @given(graphs(max_n=9))
    def test_decoder_matches_networkx(self, g):
        h = nx.from_graph6_bytes(to_graph6(g).encode())
        assert sorted(map(tuple, map(sorted, h.edges()))) == list(g.edges())
        assert from_graph6(to_graph6(g)) == g

    def test_known_strings(self):
        assert to_graph6(gen.cycle(5)) == "Dhc"
        assert to_graph6(gen.complete(4)) == "C~"
        assert to_graph6(Graph(0)) == "?"
        assert to_graph6(Graph(1)) == "@"

    def test_large_size_field(self):
        g = gen.path(70)
        text = to_graph6(g)
        assert text.startswith("~")
        assert from_graph6(text) == g
        assert text == nx_graph6(g)

    def test_header_accepted(self):
        assert from_graph6(">>graph6<<Dhc") == gen.cycle(5)

    def test_bad_character_reports_offset(self):
        with pytest.raises(ParseError) as info:
            from_graph6("Dh c")
        assert info.value.offset == 2
        assert "at byte 2" in str(info.value)

    def test_truncated_body(self):
        with pytest.raises(ParseError, match="expected 2"):
            from_graph6("Dh")

    def test_nonzero_padding(self):
        # C5 needs 10 bits; the trailing two bits of the second byte must be zero
        with pytest.raises(ParseError, match="padding"):
            from_graph6("Dhd")

    def test_line_reader_keeps_going(self):
        out = list(read_graph6_lines("Dhc\n\nbad!\nC~\n"))
        assert out[0] == gen.cycle(5)
        assert isinstance(out[1], ParseError)
        assert out[2] == gen.complete(4)


class TestEdgeList:
    @given(graphs())
    def test_roundtrip(self, g):
        assert from_edge_list(to_edge_list(g)) == g

    def test_comments_and_inferred_n(self):
        g = from_edge_list("# triangle\n0 1\n1 2\n\n2 0\n")
        assert g == gen.cycle(3)

    def test_header_keeps_isolated_vertices(self):
        assert from_edge_list("n=5\n0 1\n").n == 5

    def test_duplicate_edge_offset(self):
        with pytest.raises(ParseError) as info:
            from_edge_list("0 1\n1 0\n")
        assert info.value.offset == 4

    def test_self_loop(self):
        with pytest.raises(ParseError, match="self-loop"):
            from_edge_list("2 2\n")

    def test_endpoint_beyond_header(self):
        with pytest.raises(ParseError, match="exceeds"):
            from_edge_list("n=2\n0 2\n")

    def test_garbage_line(self):
        with pytest.raises(ParseError, match="two vertex ids"):
            from_edge_list("0 1 2\n")


class TestDimacs:
    @given(graphs())
    def test_roundtrip(self, g):
        assert from_dimacs(to_dimacs(g)) == g

    def test_one_based(self):
        g = from_dimacs("c tiny\np edge 3 2\ne 1 2\ne 2 3\n")
        assert g == gen.path(3)

    def test_declared_edge_count_checked(self):
        with pytest.raises(ParseError, match="declares 3"):
            from_dimacs("p edge 3 3\ne 1 2\n")

    def test_edge_before_problem_line(self):
        with pytest.raises(ParseError, match="before problem"):
            from_dimacs("e 1 2\np edge 2 1\n")

    def test_out_of_range(self):
        with pytest.raises(ParseError, match="out of range"):
            from_dimacs("p edge 2 1\ne 1 3\n")


@pytest.mark.parametrize("fmt", ["graph6", "edge_list", "dimacs"])
def test_dispatch_roundtrip(fmt):
    g = gen.star_subdivision(4)
    assert parse_graph(serialize_graph(g, fmt).strip() if fmt == "graph6" else serialize_graph(g, fmt), fmt) == g
