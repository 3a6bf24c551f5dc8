import pytest

from src.census.catalog import CATALOG
from src.errors import SerializationError
from src.kernel import FlagSystem, IncidenceComplex, KernelService
from src.kernel import serialization as ser


def test_cxc_round_trip_is_byte_identical(dodecahedron):
    text = ser.to_cxc(dodecahedron)
    assert text.startswith("cxc 1 2\nrank 0 20\nrank 1 30\nrank 2 12\n")
    again = ser.parse_cxc(text)
    assert ser.to_cxc(again) == text
    assert again.cells == dodecahedron.cells


def test_cxc_keeps_labels(dodecahedron):
    X = dodecahedron.with_labels({2: {0: "top cap", 11: "bottom cap"}})
    Y = ser.parse_cxc(ser.to_cxc(X))
    assert Y.label(2, 0) == "top cap"
    assert Y.label(2, 11) == "bottom cap"
    assert Y.label(2, 5) is None


def test_cxc_skips_comments(dodecahedron):
    text = "# made by hand\n" + ser.to_cxc(dodecahedron)
    assert ser.parse_cxc(text).cells == dodecahedron.cells


def test_cxf_round_trip(dodecahedron):
    F = KernelService.to_flags(dodecahedron)
    text = ser.to_cxf(F)
    assert text.startswith("cxf 1 3 120\n")
    G = ser.parse_cxf(text)
    assert (G.adj == F.adj).all()
    assert ser.to_cxf(G) == text


def test_edge_and_face_lists(dodecahedron):
    edges = ser.to_edge_list(dodecahedron).splitlines()
    faces = ser.to_face_list(dodecahedron).splitlines()
    assert len(edges) == 30
    assert len(faces) == 12
    assert all(len(line.split()) == 5 for line in faces)


def test_load_picks_format(dodecahedron):
    assert isinstance(ser.load(ser.to_cxc(dodecahedron)), IncidenceComplex)
    assert isinstance(ser.load(ser.to_cxf(KernelService.to_flags(dodecahedron))), FlagSystem)
    assert ser.dump(dodecahedron)[0] == "cxc"


@pytest.mark.parametrize(
    "text",
    [
        "",
        "hello world\n",
        "cxc 2 2\n",
        "cxc 1 2\nrank 0 3\nrank 1 3\nrank 2 1\nc 1 0 : 0 1\nc 1 1 : 1 2\nc 2 0 : 0 1 2\n",
        "cxc 1 1\nrank 0 2\nrank 1 1\nc 1 0 : 0 x\n",
        "cxf 1 1 2\nadj 0 : 0-5\n",
    ],
)
def test_bad_documents_raise(text):
    with pytest.raises(SerializationError):
        ser.load(text)


def _swap_rank_lines(text: str) -> str:
    lines = text.splitlines(keepends=True)
    lines[1], lines[3] = lines[3], lines[1]
    return "".join(lines)


def test_rank_lines_in_any_order(dodecahedron):
    text = _swap_rank_lines(ser.to_cxc(dodecahedron))
    assert text.startswith("cxc 1 2\nrank 2 12\nrank 1 30\nrank 0 20\n")
    assert ser.parse_cxc(text).cells == dodecahedron.cells


@pytest.mark.parametrize(
    "text",
    [
        "cxc 1 2\nrank 2 1\nc 2 0 : 0\n",
        "cxc 1 1\nrank 0 2\nrank 1 1\nrank 1 1\nc 1 0 : 0 1\n",
        "cxc 1 1\nrank 0 2\nrank 3 1\n",
        "cxc 1 1\nrank 0\n",
        "cxc 1 1\nrank 0 2\nrank 1 1\nc 1 0 : 0 1\nrank 1 1\n",
        "cxc 1 1\nrank 0 2\nrank 1 1\nc 1 : 0 1\n",
        "cxc 1 1\nrank 0 2\nrank 1 1\nc 1 0 0 1\n",
        "cxc 1 2\nrank 0 1\nrank 1 1\nrank 2 1\nlabel 2\n",
        "cxc 1 1\nrank 0 2\nrank 1 1\nc 1 0 : 0 1\nlabel 1 4 far away\n",
        "cxc -1 1\n",
    ],
)
def test_malformed_cxc_raises_serialization_error(text):
    with pytest.raises(SerializationError):
        ser.parse_cxc(text)


def test_labels_round_trip_exactly(dodecahedron):
    labels = {0: "  padded", 1: "a\rb", 2: "two\nlines", 3: "back\\slash \\u000a", 4: "sep\u2028x", 5: ""}
    X = dodecahedron.with_labels({2: labels})
    text = ser.to_cxc(X)
    assert len(text.splitlines()) == 1 + 3 + 30 + 12 + len(labels)
    Y = ser.parse_cxc(text)
    assert {i: Y.label(2, i) for i in labels} == labels
    assert ser.to_cxc(Y) == text


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_catalog_cxc_is_stable(name):
    text = ser.to_cxc(CATALOG[name]())
    assert ser.to_cxc(CATALOG[name]()) == text
    assert ser.to_cxc(ser.parse_cxc(text)) == text
