import os

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ydnichols.cyclotomic import CycScalar, zeta
from ydnichols.errors import InputError
from ydnichols.inputs import load_input, parse_input, parse_scalar


@pytest.mark.parametrize(
    "text,value",
    [
        (3, CycScalar.rational(3)),
        ("-1/2", CycScalar.rational(-1) / 2),
        ("z(4,1)", zeta(4, 1)),
        ("z(3, 2)", zeta(3, 2)),
        ("-z(3,1)", -zeta(3, 1)),
        ("2*z(12,5) - 1/3", 2 * zeta(12, 5) - CycScalar.rational(1) / 3),
        ("z(8,1)^3", zeta(8, 3)),
        ("z(6,-1)", zeta(6, 5)),
        ("1 + z(3,1) + z(3,2)", CycScalar.rational(0)),
    ],
)
def test_parse_scalar(text, value):
    assert parse_scalar(text) == value


@pytest.mark.parametrize("bad", [0.5, "", "z(0,1)", "2 3", "abc", True, [1], "1 +"])
def test_parse_scalar_rejects(bad):
    with pytest.raises(InputError):
        parse_scalar(bad)


@given(st.integers(1, 24), st.integers(-30, 30))
def test_root_literals(n, k):
    assert parse_scalar(f"z({n},{k})") == zeta(n, k % n)


def test_example_inputs_load(inputs_dir):
    for name in sorted(os.listdir(inputs_dir)):
        spec = load_input(os.path.join(inputs_dir, name))
        assert spec.cutoff is not None and len(spec.modules) >= 1


def test_hash_is_stable_and_sensitive():
    a = parse_input({"diagonal": {"q": [["-1", "1"], ["-1", "-1"]]}})
    b = parse_input({"diagonal": {"q": [["-1", "1"], ["-1", "-1"]]}, "cutoff": 7})
    c = parse_input({"diagonal": {"q": [["-1", "1"], ["1", "-1"]]}})
    d = parse_input({"diagonal": {"q": [[-1, "1"], ["-1", "-1/1"]]}})
    assert a.content_hash() == b.content_hash() == d.content_hash()
    assert a.content_hash() != c.content_hash()


@pytest.mark.parametrize(
    "doc,field",
    [
        ({}, "modules"),
        ({"diagonal": {"q": [["-1", "1"]]}}, "diagonal.q"),
        ({"diagonal": {"q": [["2"]]}}, "diagonal.q"),
        ({"diagonal": {"q": [["-1"]]}, "cutoff": -1}, "cutoff"),
        ({"diagonal": {"q": [["-1"]]}, "pivot": 2}, "pivot"),
        ({"diagonal": {"q": [["z(4,1)"]]}, "field": {"conductor": 3}}, "field.conductor"),
        ({"modules": [{"degrees": [[0]], "actions": [[[1]]]}]}, "group"),
        ({"group": {"abelian": [2]}, "modules": [{"degrees": [[5]], "actions": [[[1]]]}]}, "modules[1].degrees[1]"),
        ({"group": {"abelian": [2]}, "modules": [{"degrees": [[1]], "actions": []}]}, "modules[1].actions"),
        ({"group": {"abelian": [2]}, "modules": [{"degrees": [[1]], "actions": [[[2]]]}]}, "modules[1]"),
    ],
)
def test_input_errors_name_the_field(doc, field):
    with pytest.raises(InputError) as exc:
        parse_input(doc)
    assert str(exc.value).startswith(field)


def test_toml_syntax_error(tmp_path):
    p = tmp_path / "bad.toml"
    p.write_text("cutoff = = 3\n")
    with pytest.raises(InputError) as exc:
        load_input(str(p))
    assert "line 1" in str(exc.value)
    with pytest.raises(InputError):
        load_input(str(tmp_path / "missing.toml"))


def test_explicit_abelian_module_matches_diagonal():
    explicit = parse_input(
        {
            "group": {"abelian": [2, 2]},
            "modules": [
                # chi_j(g_i) = q_ij
                {"degrees": [[1, 0]], "actions": [[["-1"]], [["-1"]]]},
                {"degrees": [[0, 1]], "actions": [[["1"]], [["-1"]]]},
            ],
        }
    )
    diag = parse_input({"diagonal": {"q": [["-1", "1"], ["-1", "-1"]]}})
    for a, b in zip(explicit.modules.modules, diag.modules.modules):
        assert a.is_isomorphic(b)
