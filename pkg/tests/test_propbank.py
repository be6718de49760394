import pytest
from hypothesis import given, strategies as st

from srlkit.errors import EmptyFragment, MalformedLine, MalformedPointer
from srlkit.propbank import (
    Connector,
    PointerExpr,
    Proposition,
    RoleLabel,
    TreePointer,
    parse_pointer,
    parse_pointer_expr,
    parse_prop_file,
    parse_prop_line,
    sort_propositions,
)


class TestParsePointer:
    def test_examples(self):
        assert parse_pointer("0:1") == TreePointer(0, 1)
        assert parse_pointer("0:0") == TreePointer(0, 0)
        with pytest.raises(MalformedPointer):
            parse_pointer("8:")

    @pytest.mark.parametrize("bad", [":1", "8", "a:b", "-1:2", "1:2:3", "01:2", "1:02", ""])
    def test_malformed(self, bad):
        with pytest.raises(MalformedPointer):
            parse_pointer(bad)

    def test_connector_rejected_in_plain_pointer(self):
        with pytest.raises(MalformedPointer):
            parse_pointer("0:1*2:1")

    @given(st.integers(0, 99999), st.integers(0, 99999))
    def test_format_roundtrip(self, t, h):
        text = f"{t}:{h}"
        assert parse_pointer(text).format() == text


class TestParsePointerExpr:
    def test_chain(self):
        expr = parse_pointer_expr("14:1*16:1*17:1")
        assert [p.terminal for p in expr.parts] == [14, 16, 17]
        assert expr.connectors == (Connector.CHAIN, Connector.CHAIN)

    def test_single(self):
        expr = parse_pointer_expr("0:1")
        assert expr == PointerExpr((TreePointer(0, 1),))
        assert expr.connectors == ()

    def test_split(self):
        expr = parse_pointer_expr("3:0,5:1")
        assert expr.parts == (TreePointer(3, 0), TreePointer(5, 1))
        assert expr.connectors == (Connector.SPLIT_COMMA,)
        assert expr.connectors[0].is_split

    def test_split_semicolon(self):
        expr = parse_pointer_expr("3:0;5:1")
        assert expr.connectors == (Connector.SPLIT_SEMICOLON,)
        assert expr.connectors[0].is_split

    @pytest.mark.parametrize("bad", ["3:0*", "*3:0", "3:0,,5:1", "3:0*;5:1"])
    def test_empty_fragment(self, bad):
        with pytest.raises(EmptyFragment):
            parse_pointer_expr(bad)

    def test_empty_fragment_is_malformed_pointer(self):
        assert issubclass(EmptyFragment, MalformedPointer)

    def test_empty_expression(self):
        with pytest.raises(MalformedPointer):
            parse_pointer_expr("")

    def test_parts_one_more_than_connectors(self):
        for text in ("0:0", "1:2*3:4", "1:2,3:4;5:6*7:8"):
            expr = parse_pointer_expr(text)
            assert len(expr.parts) == len(expr.connectors) + 1
            assert expr.parts

    @given(
        st.lists(st.tuples(st.integers(0, 500), st.integers(0, 20)), min_size=1, max_size=5),
        st.lists(st.sampled_from("*,;"), min_size=4, max_size=4),
    )
    def test_format_roundtrip(self, pairs, conns):
        text = f"{pairs[0][0]}:{pairs[0][1]}"
        for (t, h), conn in zip(pairs[1:], conns):
            text += f"{conn}{t}:{h}"
        assert parse_pointer_expr(text).format() == text


PROP_LINE = "wsj/00/wsj_0001 0 8 gold say.01 v--a 0:2-ARG1 8:0-rel 9:1-ARG0"


class TestParsePropLine:
    def test_example(self):
        prop = parse_prop_line(PROP_LINE)
        assert prop.file_id == "wsj/00/wsj_0001"
        assert prop.tree_index == 0
        assert prop.predicate_terminal == 8
        assert prop.exprs(RoleLabel.ARG1) == [parse_pointer_expr("0:2")]
        assert prop.exprs(RoleLabel.REL) == [parse_pointer_expr("8:0")]
        assert prop.exprs(RoleLabel.ARG0) == [parse_pointer_expr("9:1")]
        assert prop.raw_line == PROP_LINE

    def test_no_recognized_suffixes(self):
        prop = parse_prop_line("f 0 0 a b c")
        assert prop.roles == {}

    def test_chain_argument(self):
        prop = parse_prop_line("f 1 4 g p i 14:1*16:1*17:1-ARG0 4:0-rel")
        exprs = prop.exprs(RoleLabel.ARG0)
        assert len(exprs) == 1
        assert len(exprs[0].parts) == 3

    def test_other_suffixes_ignored(self):
        prop = parse_prop_line("f 0 2 gold say-v say.01 ----- 0:1-ARGM-TMP 2:0-rel 3:1-ARG2")
        assert prop.exprs(RoleLabel.REL) == [parse_pointer_expr("2:0")]
        assert prop.exprs(RoleLabel.ARG0) == []
        assert prop.exprs(RoleLabel.ARG1) == []

    def test_case_insensitive_suffix(self):
        prop = parse_prop_line("f 0 2 x 2:0-REL 0:1-arg0 3:1-Arg1")
        assert prop.exprs(RoleLabel.REL) == [parse_pointer_expr("2:0")]
        assert prop.exprs(RoleLabel.ARG0) == [parse_pointer_expr("0:1")]
        assert prop.exprs(RoleLabel.ARG1) == [parse_pointer_expr("3:1")]

    def test_multiple_exprs_under_one_label(self):
        prop = parse_prop_line("f 0 1 x 1:0-rel 2:1-ARG1 4:1-ARG1")
        assert prop.exprs(RoleLabel.ARG1) == [
            parse_pointer_expr("2:1"),
            parse_pointer_expr("4:1"),
        ]

    @pytest.mark.parametrize("bad", ["", "f", "f 0", "f x 0 a", "f 0 y a", "f -1 0 a"])
    def test_malformed_line(self, bad):
        with pytest.raises(MalformedLine):
            parse_prop_line(bad)

    def test_malformed_pointer_propagates_with_context(self):
        with pytest.raises(MalformedPointer) as exc:
            parse_prop_line("f 0 1 x 9:-ARG0")
        assert "9:-ARG0" in str(exc.value)


class TestSortPropositions:
    @staticmethod
    def _prop(tree_index, terminal, line_no=0):
        return Proposition("f", tree_index, terminal, line_no=line_no)

    def test_example(self):
        props = [self._prop(1, 3), self._prop(0, 9), self._prop(0, 2)]
        out = sort_propositions(props)
        assert [(p.tree_index, p.predicate_terminal) for p in out] == [(0, 2), (0, 9), (1, 3)]

    def test_empty(self):
        assert sort_propositions([]) == []

    def test_stability(self):
        a = self._prop(0, 2, line_no=1)
        b = self._prop(0, 2, line_no=2)
        assert sort_propositions([a, b]) == [a, b]
        assert sort_propositions([b, a]) == [b, a]

    @given(st.lists(st.tuples(st.integers(0, 5), st.integers(0, 5)), max_size=30))
    def test_idempotent_permutation(self, keys):
        props = [self._prop(t, p, line_no=i) for i, (t, p) in enumerate(keys)]
        once = sort_propositions(props)
        assert sort_propositions(once) == once
        assert sorted(id(p) for p in once) == sorted(id(p) for p in props)


def test_parse_prop_file_line_numbers():
    text = "f 0 1 x 1:0-rel\n\nf 1 2 x 2:0-rel\n"
    props = parse_prop_file(text)
    assert [p.line_no for p in props] == [1, 3]
