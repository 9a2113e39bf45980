import json

import pytest

from qfun.cli import Context, ExprSyntaxError, parse, run_command


def test_parse_product_node():
    ast = parse("x[1,2]*x[1,1]")
    assert ast[0] == "mul"


def test_parse_juxtaposition_and_power():
    ast = parse("q^-1 x[1,1] x[1,2]")
    assert ast[0] == "mul"
    ctx = Context("M", 1)
    el = ctx.eval(ast)
    expect = ctx.eval(parse("x[1,2] x[1,1]"))
    assert el == expect


def test_parse_call():
    ast = parse("Delta(phi[1])")
    assert ast == ("call", "Delta", ("gen", "phi", (1,)))


def test_syntax_error_carries_position():
    with pytest.raises(ExprSyntaxError) as exc:
        parse("x[1,2] +")
    assert exc.value.line == 1


def test_index_error():
    from qfun.cli import ExprIndexError

    ctx = Context("M", 1)
    with pytest.raises(ExprIndexError):
        ctx.eval(parse("x[3,1]"))


def test_nf_command():
    code, out = run_command(["--n", "1", "--algebra", "M", "nf", "x[2,1]x[1,2]"])
    assert code == 0
    assert out == "x[1,2] x[2,1]"


def test_detq_command():
    code, out = run_command(["--n", "2", "--algebra", "M", "detq"])
    assert code == 0
    assert out.count("+") + out.count("-") == 5  # six terms


def test_verify_exit_codes():
    code, out = run_command(["--n", "1", "verify", "hopf"])
    assert code == 0
    assert "[PASS]" in out


def test_usage_error_exit_code():
    code, _ = run_command(["--n", "1", "--algebra", "M", "nf", "x[1,2"])
    assert code == 2


def test_json_format():
    code, out = run_command(
        ["--n", "1", "--algebra", "M", "--format", "json", "nf", "x[1,2]x[1,1]"]
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == "qfun/1"
    assert payload["terms"][0]["word"] == [["x", 1, 1], ["x", 1, 2]]


def test_parse_format_parse_roundtrip():
    cases = [
        ("M", ["x[1,2]x[2,1] + q x[3,3]", "x[2,2]x[1,1]x[3,1]", "(q - q^-1) x[1,3] - 3"]),
        ("Uq", ["E[1]F[1] - F[1]E[1]", "G[1]^2 E[2] + q F[1]"]),
        ("Uh", ["e[1,2] f[2,1] h[1] - 1/2 h[2]", "h[1] e[1,3]"]),
    ]
    for algebra, exprs in cases:
        ctx = Context(algebra, 2)
        for src in exprs:
            el = ctx.eval(parse(src))
            printed = str(el)
            again = ctx.eval(parse(printed))
            assert again == el, (algebra, printed)


def test_rootvec_methods_agree():
    code1, out1 = run_command(["--n", "2", "rootvec", "--root", "1,3", "--method", "braid"])
    code2, out2 = run_command(["--n", "2", "rootvec", "--root", "1,3", "--method", "iterated"])
    assert code1 == code2 == 0
    assert out1 == out2


def test_mu_collapse_command():
    code, out = run_command(["--n", "1", "mu", "--gen", "r:1,2", "--collapse"])
    assert code == 0
    assert out == "-1 * F[1] (x) 1"


def test_specialize_command():
    code, out = run_command(["--n", "1", "specialize", "r[2,1]"])
    assert code == 0
    assert out == "e[1,2]"


def test_uh_context():
    ctx = Context("Uh", 1)
    el = ctx.eval(parse("h[1] e[1,2] - e[1,2] h[1]"))
    expect = ctx.eval(parse("2 e[1,2]"))
    assert el == expect


def test_uq_context():
    ctx = Context("Uq", 1)
    el = ctx.eval(parse("G[1] E[1]"))
    expect = ctx.eval(parse("q E[1] G[1]"))
    assert el == expect
