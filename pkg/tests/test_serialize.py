import json
from pathlib import Path

import numpy as np
import pytest

from ndgtool.errors import ParseError, UnknownName, ValidationError
from ndgtool.ndgcat import random_category, random_module, regular_bimodule
from ndgtool.random_gen import random_chain_map, random_complex
from ndgtool.scalars import cyclotomic_field, prime_field
from ndgtool.serialize import Workspace, dumps_workspace, load_workspace, parse_workspace

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.mark.parametrize("name", ["field_only.json", "complexes_n3.json", "category_n3.json"])
def test_fixture_round_trip(name):
    ws = load_workspace(FIXTURES / name)
    text = dumps_workspace(ws)
    again = parse_workspace(json.loads(text))
    assert dumps_workspace(again) == text


def test_field_only_is_empty():
    ws = load_workspace(FIXTURES / "field_only.json")
    assert not (ws.complexes or ws.maps or ws.categories or ws.modules or ws.bimodules)


@pytest.mark.parametrize("F", [prime_field(11, 5), cyclotomic_field(3)], ids=["F11", "Qz3"])
def test_generated_round_trip(F):
    rng = np.random.default_rng(5)
    X, _ = random_complex(F, rng)
    Y, _ = random_complex(F, rng)
    C = random_category(F, rng)
    ws = Workspace(F.spec, F, complexes={"X": X, "Y": Y},
                   maps={"f": random_chain_map(X, Y, rng)}, categories={"C": C},
                   modules={"M": random_module(C, rng)}, bimodules={"R": regular_bimodule(C)})
    text = dumps_workspace(ws)
    again = parse_workspace(json.loads(text))
    assert again.complexes["X"].same_data(X)
    assert again.maps["f"] == ws.maps["f"]
    assert dumps_workspace(again) == text


def test_bad_json_reports_location(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"field": {"kind": "prime", "N": 3, "p": 7},\n  "complexes": }')
    with pytest.raises(ParseError) as err:
        load_workspace(p)
    assert str(err.value).endswith("bad.json:2:16: Expecting value")


def test_non_nilpotent_complex_named():
    obj = {"field": {"kind": "prime", "N": 2, "p": 5},
           "complexes": {"Bad": {"dims": {"0": 1, "1": 1, "2": 1},
                                 "d": {"0": [["1"]], "1": [["1"]]}}}}
    with pytest.raises(ValidationError) as err:
        parse_workspace(obj)
    assert "Bad" in str(err.value) and "0" in str(err.value)


def test_wrong_shape_is_parse_error():
    obj = {"field": {"kind": "prime", "N": 3, "p": 7},
           "complexes": {"X": {"dims": {"0": 1, "1": 1}, "d": {"0": [["1", "2"]]}}}}
    with pytest.raises(ParseError):
        parse_workspace(obj)


def test_unknown_reference():
    obj = {"field": {"kind": "prime", "N": 3, "p": 7},
           "maps": {"f": {"source": "X", "target": "X", "degree": 0, "components": {}}}}
    with pytest.raises((UnknownName, ValidationError, ParseError)):
        parse_workspace(obj)
