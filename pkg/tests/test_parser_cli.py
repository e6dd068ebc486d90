import json
import random
import subprocess
import sys
from fractions import Fraction as F

import pytest

from pencil_lab.cli import main
from pencil_lab.kernel.bipoly import BivariatePolynomial
from pencil_lab.parser import (
    ParseError,
    UnknownVariableError,
    parse_polynomial,
    unparse,
)

X = BivariatePolynomial.variable(0)
Y = BivariatePolynomial.variable(1)
ONE = BivariatePolynomial.constant(1)


def test_parse_examples():
    assert parse_polynomial("Y^2 - X^3") == Y * Y - X**3
    f = parse_polynomial("X*(X-1)*Y + X - 2")
    assert f == X * (X - ONE) * Y + X - BivariatePolynomial.constant(2)
    assert parse_polynomial("1/2*X^2 + Y") == (X * X).scale(F(1, 2)) + Y


def test_parse_whitespace_insensitive():
    assert parse_polynomial(" Y ^ 2-X^ 3 ") == parse_polynomial("Y^2-X^3")


def test_parse_errors_carry_offsets():
    with pytest.raises(ParseError) as err:
        parse_polynomial("X + * Y")
    assert err.value.offset == 4
    with pytest.raises(UnknownVariableError):
        parse_polynomial("X + Z")
    with pytest.raises(ParseError):
        parse_polynomial("1/0 + X")
    with pytest.raises(ParseError):
        parse_polynomial("X Y")  # implicit multiplication rejected


def test_negative_and_grouping():
    # unary minus binds to the base before the exponent in this grammar
    assert parse_polynomial("-(X - Y)^2") == (X - Y) ** 2
    assert parse_polynomial("-1*(X - Y)^2") == -((X - Y) ** 2)
    assert parse_polynomial("-3*X^2") == (X * X).scale(-3)


def test_unparse_round_trip():
    rng = random.Random(31)
    for _ in range(25):
        terms = {}
        for a in range(3):
            for b in range(3 - a):
                c = rng.randint(-6, 6)
                if c:
                    terms[(a, b)] = F(c, rng.choice([1, 1, 2, 3]))
        if not terms:
            continue
        f = BivariatePolynomial(terms)
        assert parse_polynomial(unparse(f)) == f


def _run(args):
    from io import StringIO

    out = StringIO()
    old = sys.stdout
    sys.stdout = out
    try:
        code = main(args)
    finally:
        sys.stdout = old
    return code, out.getvalue()


def test_cli_analyze_json_deterministic():
    code1, out1 = _run(["analyze", "--f", "Y^3-3*Y", "--rank", "on", "--seed", "5"])
    code2, out2 = _run(["analyze", "--f", "Y^3-3*Y", "--rank", "on", "--seed", "5"])
    assert code1 == code2 == 0
    assert out1 == out2
    doc = json.loads(out1)
    assert doc["schema"] == "pencil-lab/1"
    assert doc["rank"]["rho_pi"] == -2 and doc["rank"]["zeta"] == -1
    sing = doc["sets"]["singset"]["members"]
    assert sorted(m["value"]["rational"] for m in sing) == ["-2", "2"]


def test_cli_analyze_text_remark_case():
    code, out = _run(["analyze", "--f", "X*Y+1", "--format", "text"])
    assert code == 0
    assert "redset(f) = {1}" in out
    assert "singset(f) = {1}" in out


def test_cli_parse_error_exit_code():
    code, _ = _run(["analyze", "--f", "X^+2"])
    assert code == 2


def test_cli_precondition_exit_code():
    code, _ = _run(["analyze", "--f", "X*Y", "--w", "X"])
    assert code == 3
    code, _ = _run(["analyze", "--f", "X", "--w", "X*Y-1"])  # deg f < deg w
    assert code == 3


def test_cli_rank_with_w_rejected():
    code, _ = _run(["analyze", "--f", "X^2+Y^2", "--w", "X", "--rank", "on"])
    assert code == 3


def test_cli_corpus_listing():
    code, out = _run(["corpus", "--list"])
    assert code == 0
    assert "klein-icosahedral" in out
    code, out = _run(["corpus", "--emit", "linear-y m=2"])
    assert code == 0
    doc = json.loads(out)
    assert doc["f"]["terms"]


def test_cli_file_input(tmp_path):
    path = tmp_path / "f.txt"
    path.write_text("Y^2 - X^3")
    code, out = _run(["analyze", "--f", "@" + str(path), "--sets", "redset"])
    assert code == 0
    doc = json.loads(out)
    assert doc["sets"]["redset"]["cardinality"] == 0


def test_cli_json_poly_input(tmp_path):
    path = tmp_path / "f.json"
    path.write_text(json.dumps({"vars": ["X", "Y"],
                                "terms": [[[0, 2], "1"], [[3, 0], "-1"]]}))
    code, out = _run(["analyze", "--f", "@" + str(path), "--sets", "singset"])
    assert code == 0
    doc = json.loads(out)
    members = doc["sets"]["singset"]["members"]
    assert [m["value"]["rational"] for m in members] == ["0"]
