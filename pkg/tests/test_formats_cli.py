import io
from pathlib import Path

import pytest
from hypothesis import given

from pgraph.cli import main
from pgraph.formats import ParseError, format_graph, namer, parse_graph, parse_names, resolve
from pgraph.partial_graph import Mark
from pgraph.samples import NINE_NAMES, SPLIT_NAMES, nine_initial, split_whole
from strategies import binary_graphs, general_graphs, unary_graphs

DATA = Path(__file__).resolve().parent.parent / "data"


def run(*argv):
    out = io.StringIO()
    code = main(list(map(str, argv)), out)
    return code, out.getvalue()


# -- format ---------------------------------------------------------------------------

@given(binary_graphs(closed=False))
def test_binary_round_trip(g):
    assert parse_graph(format_graph(g))[0] == g


@given(unary_graphs())
def test_unary_round_trip(g):
    assert parse_graph(format_graph(g))[0] == g


@given(general_graphs(closed=False))
def test_general_round_trip(g):
    assert parse_graph(format_graph(g))[0] == g


def test_names_survive_round_trip():
    text = format_graph(nine_initial, NINE_NAMES)
    g, names = parse_graph(text)
    assert g == nine_initial and names == NINE_NAMES
    assert parse_graph(format_graph(split_whole, SPLIT_NAMES))[0] == split_whole


def test_names_in_body():
    g, _ = parse_graph("# names a=3 b=6\nkind binary\na O b 0\nb X 0 a\n")
    assert g[3] == (Mark.O, (6, 0)) and g[6] == (Mark.X, (0, 3))
    assert resolve("7", {}) == 7
    assert namer({"a": 3})(3) == "a" and namer(None)(3) == "3"


@pytest.mark.parametrize("text,line", [
    ("kind binary\n3 Q 0 0\n", 2),
    ("kind binary\n3 O 0\n", 2),
    ("kind binary\n3 O 0 0\n4 O 0 0\n", 3),
    ("kind binary\n3 O 0 0\n3 O 0 0\n", 3),
    ("kind general\n8 O 0\n", 2),
    ("kind unary\n0 1\n", 2),
    ("kind unary\n1 zz\n", 2),
    ("\n\nkind ternary\n", 3),
    ("# names a=x\nkind unary\n", 1),
])
def test_parse_errors_carry_line(text, line):
    with pytest.raises(ParseError) as exc:
        parse_graph(text)
    assert exc.value.line == line


def test_missing_kind():
    with pytest.raises(ParseError):
        parse_graph("# nothing\n")
    assert parse_names("# just a comment\n") == {}


# -- CLI --------------------------------------------------------------------------------

def test_mark_on_sample_file():
    code, out = run("mark", DATA / "nine.graph", "n1", "--check-invariants", "--trace", "--debug")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "iter=1 op=PUSH t=n1 p=0 inv=ok"
    assert sum(line.startswith("iter=") for line in lines) == 27
    assert lines[-1] == "marked=9 restored=ok"


def test_mark_connected_failure_exits_one(tmp_path):
    f = tmp_path / "g.graph"
    f.write_text("kind binary\n3 O 0 0\n6 O 0 0\n")
    assert run("mark", f, 3)[0] == 0
    code, out = run("mark", f, 3, "--connected")
    assert code == 1 and "connected" in out


def test_mark_rejects_premarked_graph(tmp_path):
    f = tmp_path / "g.graph"
    f.write_text("kind binary\n3 X 0 0\n")
    code, out = run("mark", f, 3)
    assert code == 1 and out.startswith("error:")


def test_mark_usage_errors(tmp_path):
    assert run("mark", DATA / "split.graph", "a")[0] == 2
    assert run("mark", tmp_path / "missing.graph", 3)[0] == 2
    assert run("mark", DATA / "nine.graph", "nope")[0] == 2
    assert run("frobnicate")[0] == 2
    assert run()[0] == 2


def test_mark_parse_error_exits_two(tmp_path):
    f = tmp_path / "bad.graph"
    f.write_text("kind binary\n3 O 0\n")
    assert run("mark", f, 3)[0] == 2


def test_uf_script():
    code, out = run("uf", DATA / "forest.uf")
    assert code == 0
    assert "union a d -> d ok" in out
    assert out.splitlines()[-1] == "ops=16 failing=0"
    assert run("uf", DATA / "forest.uf", "--full")[0] == 0


def test_uf_bad_script(tmp_path):
    f = tmp_path / "bad.uf"
    f.write_text("new a\nfind b\n")
    assert run("uf", f)[0] == 2


def test_gen_then_mark(tmp_path):
    f = tmp_path / "g.graph"
    assert run("gen", "--nodes", 20, "--seed", 3, "--density", 0.7, "-o", f)[0] == 0
    g, _ = parse_graph(f.read_text())
    assert len(g) == 20
    code, out = run("mark", f, 3, "--check-invariants")
    assert code == 0 and "restored=ok" in out


def test_gen_to_stdout_and_kinds():
    code, out = run("gen", "--nodes", 4, "--kind", "unary", "--forest")
    assert code == 0 and out.startswith("kind unary")
    code, out = run("gen", "--nodes", 3, "--kind", "general", "--marks", "O", "X")
    assert code == 0 and parse_graph(out)[0].kind == "general"
    assert run("gen", "--nodes", -1)[0] == 2


def test_layout_dump():
    code, out = run("layout", DATA / "nine.graph")
    assert code == 0
    assert out.splitlines()[:3] == ["3: O", "4: 6", "5: 27"]
    # the four-node general sample uses ids too close for a general layout
    assert run("layout", DATA / "split.graph")[0] == 1


def test_laws_subcommand():
    code, out = run("laws", "--law", "pcm", "--cases", 20)
    assert code == 0
    assert out.splitlines()[-1].endswith("failing=0")
    assert run("laws", "--law", "nonexistent")[0] == 2
