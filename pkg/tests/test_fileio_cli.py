import random
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import pytest

from palettekit import P_3T, P_4_81, P_LM, P_TWO_COLOR, Hypergraph, inverse, product, symmetrize
from palettekit.cli import format_decimal, main
from palettekit.coloring import OrderedHypergraph
from palettekit.fileio import (
    ParseError,
    format_hypergraph,
    format_palette,
    load_hypergraph,
    load_palette,
    parse_hypergraph,
    parse_palette,
)

from conftest import rand_hypergraph, rand_palette

DATA = Path(__file__).parent / "data"


@pytest.mark.parametrize("p", [P_4_81, P_LM, P_3T, P_TWO_COLOR, symmetrize(P_3T)], ids=lambda p: p.name)
def test_palette_round_trip(p):
    q = parse_palette(format_palette(p))
    assert q == p
    assert format_palette(q) == format_palette(p)


def test_round_trip_random():
    rng = random.Random(1)
    for _ in range(200):
        p = rand_palette(rng, 4)
        assert parse_palette(format_palette(p, "x")) == p
        n = rng.randint(0, 6)
        h = rand_hypergraph(rng, n)
        if rng.random() < 0.5:
            h = h.ordered(rng.sample(range(n), n))
        assert parse_hypergraph(format_hypergraph(h))[1] == h


def test_product_file_lists_every_color():
    prod = product([P_TWO_COLOR, P_4_81])
    text = format_palette(prod)
    assert text.splitlines()[1].split()[1:] == list(prod.colors)
    assert parse_palette(text) == prod


def test_comments_and_blank_lines():
    text = "# header\n\npalette p\ncolors a b  # two colors\n\ntriple a b a\n"
    p = parse_palette(text)
    assert p.colors == ("a", "b") and len(p.triples) == 1


@pytest.mark.parametrize(
    "body, line, fragment",
    [
        ("palette p\ncolors a b\ntriple a b\n", 3, "3 colors"),
        ("palette p\ncolors a b\ntriple a b c\n", 3, "undeclared"),
        ("palette p\ncolors a b\ntriple a b a\ntriple a b a\n", 4, "duplicate"),
        ("palette p\ncolors a a\n", 2, "duplicate"),
        ("palette p\ncolors a\nquad a a a a\n", 3, "unknown directive"),
        ("colors a\n", 1, "palette"),
    ],
)
def test_palette_errors_carry_line(body, line, fragment):
    with pytest.raises(ParseError) as info:
        parse_palette(body)
    assert info.value.line == line and fragment in info.value.reason


@pytest.mark.parametrize(
    "body, line",
    [
        ("hypergraph h 3\nedge 0 1\n", 2),
        ("hypergraph h 3\nedge 0 1 3\n", 2),
        ("hypergraph h 3\nedge 0 1 1\n", 2),
        ("hypergraph h 4\nedge 0 1 2\nedge 2 1 0\n", 3),
        ("hypergraph h 3\norder 0 1\n", 2),
        ("hypergraph h 3\nedge 0 1 2\norder 0 1 2\n", 3),
        ("hypergraph h x\n", 1),
    ],
)
def test_hypergraph_errors_carry_line(body, line):
    with pytest.raises(ParseError) as info:
        parse_hypergraph(body)
    assert info.value.line == line


def test_k4_minus_fixture():
    name, h = load_hypergraph(str(DATA / "k4_minus.hg"))
    assert name == "K4minus"
    assert h == Hypergraph(4, [(0, 1, 2), (0, 1, 3), (0, 2, 3)])
    assert len(h.edges) == 3


def test_ordered_fixture_parses_as_ordered():
    _, h = parse_hypergraph("hypergraph h 3\norder 2 0 1\nedge 0 1 2\n")
    assert isinstance(h, OrderedHypergraph) and h.order == (2, 0, 1)


def test_load_palette_builtin_and_file():
    assert load_palette("@P_4_81") == P_4_81
    assert load_palette(str(DATA / "p_two_color.pal")) == P_TWO_COLOR
    with pytest.raises(KeyError):
        load_palette("@nope")


def test_format_decimal():
    assert format_decimal(0.046875) == "0.046875"
    assert format_decimal(Fraction(4, 81)) == "0.0493827160494"
    assert format_decimal(1) == "1"
    assert format_decimal(0) == "0"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cli_density(capsys):
    code, out, _ = run(capsys, "density", "@P_4_81")
    assert code == 0 and out.strip() == "3/64 = 0.046875"


def test_cli_hom_none(capsys):
    code, out, _ = run(capsys, "hom", "@P_LM", "@P_4_81")
    assert code == 1 and out.strip() == "none"


def test_cli_hom_found_and_count(capsys):
    code, out, _ = run(capsys, "hom", "@P_4_81", "@P_4_81", "--inv", "--count", "10")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "count 1"
    assert "alpha -> gamma" in lines


def test_cli_op_outputs_parseable_palettes(capsys):
    path = str(DATA / "p_two_color.pal")
    code, out, _ = run(capsys, "op", "inv", path)
    assert code == 0 and parse_palette(out) == inverse(P_TWO_COLOR)
    code, out, _ = run(capsys, "op", "product", path, "@P_4_81")
    assert parse_palette(out) == product([P_TWO_COLOR, P_4_81])
    code, out, _ = run(capsys, "op", "sym", "@P_3T")
    assert parse_palette(out) == symmetrize(P_3T)


def test_cli_colorable(capsys, tmp_path):
    hg = str(DATA / "k4_minus.hg")
    code, out, _ = run(capsys, "colorable", hg, "@P_two_color")
    assert code == 0 and out.startswith("order ")
    pxinv = tmp_path / "pxinv.pal"
    pxinv.write_text(format_palette(product([P_TWO_COLOR, inverse(P_TWO_COLOR)])))
    code, out, _ = run(capsys, "colorable", hg, str(pxinv))
    assert code == 1 and out.strip() == "none"
    # an order line pins the order: the natural order of K4^- has no coloring
    fixed = tmp_path / "fixed.hg"
    fixed.write_text("hypergraph k 4\norder 0 1 2 3\nedge 0 1 2\nedge 0 1 3\nedge 0 2 3\n")
    code, _, _ = run(capsys, "colorable", str(fixed), "@P_two_color")
    assert code == 1


def test_cli_separates_and_witness(capsys, tmp_path):
    code, out, _ = run(capsys, "separates", "--pos", "@P_LM", "@P_3T", "--neg", "@P_4_81")
    assert code == 0 and out.strip() == "separable"
    code, out, _ = run(capsys, "separates", "--pos", "@P_3T", "--neg", "@P_3T")
    assert code == 1 and out.startswith("not separable") and "blocked q=0 neg=0 straight" in out
    pxinv = tmp_path / "pxinv.pal"
    pxinv.write_text(format_palette(product([P_TWO_COLOR, inverse(P_TWO_COLOR)])))
    code, out, _ = run(capsys, "witness", "--pos", "@P_two_color", "--neg", str(pxinv), "--max-vertices", "4")
    assert code == 0 and len(parse_hypergraph(out)[1].edges) == 3
    code, out, _ = run(capsys, "witness", "--pos", "@P_3T", "--neg", "@P_3T", "--max-vertices", "4")
    assert code == 1 and out.strip() == "none (bound exhausted)"


def test_cli_random_hg_is_deterministic(capsys):
    args = ("random-hg", "@P_4_81", "--n", "12", "--seed", "3", "--dist", "2/9,1/3,2/9,2/9")
    _, a, _ = run(capsys, *args)
    _, b, _ = run(capsys, *args)
    assert a == b
    name, h = parse_hypergraph(a)
    assert h.n == 12


def test_cli_lagrangian(capsys):
    code, out, _ = run(capsys, "lagrangian", "@P_4_81", "--restarts", "20")
    lines = out.splitlines()
    assert code == 0 and lines[0].startswith("value 0.049382716")
    assert lines[1].startswith("argmax alpha=")
    assert lines[2].startswith("kkt_residual")


@pytest.mark.parametrize(
    "argv",
    [
        ["density", "/nonexistent/file.pal"],
        ["density", "@missing"],
        ["hom", "@P_LM"],
        ["op", "inv", "@P_LM", "@P_3T"],
        ["colorable", "/nonexistent.hg", "@P_LM"],
        ["witness", "--pos", "@P_LM", "--neg", "@P_3T", "--max-vertices", "9"],
        ["random-hg", "@P_4_81", "--n", "5", "--dist", "1,2"],
        ["bogus"],
    ],
)
def test_cli_errors_exit_2(capsys, argv):
    try:
        code = main(argv)
    except SystemExit as exc:  # argparse usage errors
        code = exc.code
    assert code == 2


def test_cli_parse_error_reports_line(capsys, tmp_path):
    bad = tmp_path / "bad.pal"
    bad.write_text("palette p\ncolors a b\ntriple a b\n")
    code, _, err = run(capsys, "density", str(bad))
    assert code == 2 and "line 3" in err


def test_module_entry_point():
    r = subprocess.run(
        [sys.executable, "-m", "palettekit", "density", "@P_two_color"], capture_output=True, text=True
    )
    assert r.returncode == 0 and r.stdout.strip() == "1/4 = 0.25"
