import json

from mixedbraids import cli
from mixedbraids.grammar import parse_word
from mixedbraids.mixed import mixed_equal


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_nf(capsys):
    code, out, _ = run(capsys, "nf", "--strands", "3", "s1 s2 s1")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "infimum: 1"
    assert lines[1] == "factors: 0"


def test_eq_exit_codes(capsys):
    code, out, _ = run(capsys, "eq", "--m", "1", "--n", "3",
                       "s1 s2 s1", "s2 s1 s2")
    assert code == 0 and out.strip() == "equal"
    code, out, _ = run(capsys, "eq", "--m", "1", "--n", "3", "s1", "s2")
    assert code == 1 and out.strip() == "not-equal"


def test_embed(capsys):
    code, out, _ = run(capsys, "embed", "--m", "2", "--n", "2", "a2")
    assert code == 0 and out.strip() == "s2^2"
    code, out, _ = run(capsys, "--raw", "embed", "--m", "2", "--n", "2", "a1")
    assert code == 0 and out.strip() == "s2 s1 s1 s2^-1"


def test_comb(capsys):
    code, out, _ = run(capsys, "comb", "--m", "2", "--n", "1", "S1 a1")
    assert code == 0
    assert out.splitlines() == ["algebraic: a2", "coset: S1"]


def test_rho(capsys):
    code, out, _ = run(capsys, "rho", "--preset", "trefoil", "--i", "1")
    assert code == 0
    got = parse_word(out.strip(), 2, 1)
    assert mixed_equal(got, parse_word("a2^-1 a1^-1 a2 a1 a2", 2, 1))


def test_r(capsys):
    code, out, _ = run(capsys, "r", "--preset", "hopf", "--k", "1", "--n", "1")
    assert code == 0
    got = parse_word(out.strip(), 2, 2)
    assert mixed_equal(got, parse_word("s1 a2 s1^-1", 2, 2))


def test_move(capsys):
    code, out, _ = run(capsys, "move", "--type", "m", "--m", "1", "--n", "1",
                       "--sign", "1", "a1")
    assert code == 0
    assert out.splitlines() == ["m=1 n=2", "a1 s1"]


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--preset", "hopf")
    assert code == 0
    lines = out.splitlines()
    assert lines and all(line.startswith("PASS") for line in lines)


def test_search(capsys):
    code, out, _ = run(capsys, "search", "--preset", "hopf", "--depth", "1",
                       "--nmax", "2", "--n", "1", "a1", "a2^-1 a1 a2")
    assert code == 0
    cert = json.loads(out)
    assert cert["start"]["word"] == "a1"
    assert len(cert["moves"]) == 1


def test_search_not_found(capsys):
    code, out, _ = run(capsys, "search", "--preset", "hopf", "--depth", "1",
                       "--nmax", "2", "--n", "1", "a1", "a1 a1")
    assert code == 1
    assert out.startswith("not-found")


def test_random_check(capsys):
    code, out, _ = run(capsys, "random-check", "--iters", "30", "--seed", "1")
    assert code == 0
    assert out.strip() == "ok 30 iterations"


def test_error_exit_code(capsys):
    code, _, err = run(capsys, "eq", "--m", "1", "--n", "2", "a1", "??")
    assert code == 2
    assert "error:" in err
    code, _, err = run(capsys, "rho", "--preset", "nosuch", "--i", "1")
    assert code == 2
