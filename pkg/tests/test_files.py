"""Complex file format: canonical serialization and parse errors."""

import pytest

from flagsphere.errors import InvalidVertex, ParseError
from flagsphere.files import dump_complex, dumps_complex, load_complex, loads_complex
from flagsphere.generators import cycle, icosahedron


def test_roundtrip(tmp_path):
    for L in [icosahedron(), cycle(6), cycle(4).suspension()]:
        path = tmp_path / "complex.json"
        dump_complex(L, path)
        assert load_complex(path) == L


def test_serialization_is_canonical():
    assert dumps_complex(icosahedron()) == dumps_complex(icosahedron())
    text = dumps_complex(cycle(4))
    assert loads_complex(text) == cycle(4)
    assert dumps_complex(loads_complex(text)) == text


def test_whitespace_insensitive():
    compact = '{"vertex_count":3,"facets":[[0,1],[1,2],[0,2]]}'
    sprawling = '{\n  "vertex_count" : 3 ,\n  "facets" : [ [ 0, 1 ], [1,2], [0,2] ]\n}\n'
    assert loads_complex(compact) == loads_complex(sprawling)


def test_parse_error_carries_position():
    with pytest.raises(ParseError) as info:
        loads_complex("{bad json")
    assert info.value.line == 1
    assert info.value.column is not None


def test_schema_errors():
    with pytest.raises(ParseError):
        loads_complex("[1, 2, 3]")
    with pytest.raises(ParseError):
        loads_complex('{"vertex_count": 3}')
    with pytest.raises(ParseError):
        loads_complex('{"vertex_count": "3", "facets": []}')
    with pytest.raises(ParseError):
        loads_complex('{"vertex_count": 2, "facets": [[0, 1.5]]}')
    with pytest.raises(InvalidVertex):
        loads_complex('{"vertex_count": 2, "facets": [[0, 7]]}')
