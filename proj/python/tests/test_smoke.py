import json

import _spclass as sp


def test_j_shifted_known_values():
    assert sp.j_shifted(["-2", "1", "0"], ["0", "-2", "1"], [3, 5, 7]) == "7/5"
    assert sp.j_shifted(["-1", "0"], ["-1", "0"], [1, 4]) == "0"


def test_wdw_form_null_vector():
    # d + c with c = (-1, 0) and d_1 = 1 is null
    assert sp.wdw_form(["0", "3"], ["0", "3"], [1, 3]) == "0"


def test_is_null():
    assert sp.is_null(["-4/3", "2/3", "2/3", "-1"], [4, 2, 2, 9])
    assert not sp.is_null(["-1", "0"], [2, 1])


def test_classify_weight():
    assert sp.classify_weight([-1, 0, 0]) == "I"
    assert sp.classify_weight([1, -1, -1, 0]) == "II"
    assert sp.classify_weight([-2, 1, 0]) == "III"


def test_fano_classifies():
    instance = sp.fano_instance([2, 2])
    report = json.loads(sp.classify(instance))
    assert report["verdict"] == "FANO_CASE"


def test_validate_flags_missing_closure():
    instance = json.dumps({
        "d": [2, 2, 2],
        "weights": [[1, -1, -1]],
    })
    codes = {code for code, _ in sp.validate(instance)}
    assert "type2-closure" in codes


def test_catalog_and_dimensions():
    tags = sp.catalog_tags()
    assert len(tags) == 58
    assert sum(1 for t in tags if t.startswith("Tr")) == 28
    assert sp.solve_dimensions("Tr3", 64) == [[16, 4, 16, 2, 1]]
