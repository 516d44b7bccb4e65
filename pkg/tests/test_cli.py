import io
import subprocess
import sys

import pytest

from dcyclic import cli, corpus
from dcyclic.code import CodeSpec
from dcyclic.dual import same_code
from dcyclic.example1 import MATRICES, example1_code
from dcyclic.poly import Poly
from dcyclic.rpoly import RPoly

EX1 = """# worked example over F_7
q=7
m=5
n=5
iota.std=1,0,0 1,0,0 1,0,0 1,0,0 1,0,0
ell.std=5,1,2 2,4,4 3,6,0 4,2,6
theta.std=6,0,0 1,0,0
"""

SEPARABLE = """q=7
m=5
n=5
iota.v1=1 1 1 1 1
iota.v2=1 1 1 1 1
iota.v3=6 1
ell.v1=0
ell.v2=0
ell.v3=0
theta.v1=6 1
theta.v2=1
theta.v3=1 1 1 1 1
"""

ZERO = """q=7
m=3
n=4
iota.std=0,0,0
ell.std=0,0,0
theta.std=0,0,0
"""


def run(args, tmp_path=None, text=None):
    if text is not None:
        path = tmp_path / "code.spec"
        path.write_text(text)
        args = [a if a != "FILE" else str(path) for a in args]
    out, err = io.StringIO(), io.StringIO()
    code = cli.main(args, out, err)
    return code, out.getvalue(), err.getvalue()


def test_validate_example(tmp_path):
    code, out, _ = run(["validate", "FILE"], tmp_path, EX1)
    assert code == 0 and out.splitlines()[-1] == "valid"


def test_validate_names_failure(tmp_path):
    bad = SEPARABLE.replace("theta.v1=6 1", "theta.v1=1 1")
    code, out, _ = run(["validate", "FILE"], tmp_path, bad)
    assert code == 1
    assert "v1  theta | x^n-1: FAIL" in out and out.splitlines()[-1] == "invalid"


@pytest.mark.parametrize(
    "text, fragment",
    [
        (EX1.replace("6,0,0 1,0,0", "6,0,0 1,x,0"), "line 7"),
        (EX1.replace("q=7", "q=8"), "prime"),
        (EX1 + "colour=blue\n", "unknown key"),
        (EX1 + "theta.v1=1\n", "both"),
        (EX1.replace("theta.std=6,0,0 1,0,0\n", ""), "missing theta"),
        (EX1.replace("m=5\n", ""), "missing key m"),
        (EX1 + "just text\n", "key=value"),
        (SEPARABLE.replace("iota.v3=6 1\n", ""), "missing iota.v3"),
    ],
)
def test_parse_errors(tmp_path, text, fragment):
    code, _, err = run(["validate", "FILE"], tmp_path, text)
    assert code == 2 and fragment in err


def test_missing_file():
    code, _, err = run(["validate", "/nonexistent/file.spec"])
    assert code == 2 and "cannot read" in err


def test_genmat_matches_reference_matrices(tmp_path):
    code, out, _ = run(["genmat", "FILE"], tmp_path, EX1)
    expected = "\n".join(
        f"# v{i + 1} 5x10\n" + "\n".join(" ".join(map(str, row)) for row in M) + "\n" for i, M in enumerate(MATRICES)
    )
    assert code == 0 and out == expected


def test_genmat_zero_code(tmp_path):
    code, out, _ = run(["genmat", "FILE"], tmp_path, ZERO)
    assert code == 0 and out == "# v1 0x7\n\n# v2 0x7\n\n# v3 0x7\n"


def test_genmat_standardized(tmp_path):
    code, out, _ = run(["genmat", "--standardized", "FILE"], tmp_path, EX1)
    assert code == 0
    block = out.split("\n\n")[0].splitlines()
    assert block[0].startswith("# v1 k=4")
    rows = [list(map(int, line.split())) for line in block if not line.startswith("#")]
    assert [r[6:] for r in rows[1:]] == [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]


def test_dual_separable_has_zero_ell(tmp_path):
    code, out, _ = run(["dual", "FILE"], tmp_path, SEPARABLE)
    assert code == 0
    assert [line for line in out.splitlines() if line.startswith("ell.")] == ["ell.v1=0", "ell.v2=0", "ell.v3=0"]


def test_dual_both_equal(tmp_path):
    code, out, _ = run(["dual", "--method", "both", "FILE"], tmp_path, EX1)
    assert code == 0 and out.splitlines()[-1] == "# EQUAL"


def test_dual_zero_code_is_full_space(tmp_path):
    code, out, _ = run(["dual", "--method", "nullspace", "FILE"], tmp_path, ZERO)
    assert code == 0
    assert "iota.v1=1" in out and "theta.v3=1" in out and "ell.v2=0" in out


def test_dual_round_trip(tmp_path):
    rng = __import__("random").Random(12)
    for _ in range(10):
        C = corpus.random_code(rng, rng.choice([3, 5, 7]), rng.randint(1, 6), rng.randint(1, 6))
        code, out, _ = run(["dual", "FILE"], tmp_path, cli.render_spec(C))
        assert code == 0
        code, out2, _ = run(["dual", "FILE"], tmp_path, out)
        parsed = cli.parse_spec(out2)
        again = CodeSpec(parsed[0], parsed[1], parsed[2], *(parsed[3][g] for g in cli.GENERATORS))
        assert same_code(again, C)


def test_mindist(tmp_path):
    code, out, _ = run(["mindist", "FILE"], tmp_path, EX1)
    assert code == 0 and out == "[10,5,5]\n" * 3
    code, out, _ = run(["mindist", "--component", "v3", "FILE"], tmp_path, EX1)
    assert out == "[10,5,5]\n"
    code, out, _ = run(["mindist", "FILE"], tmp_path, ZERO)
    assert out == "[7,0,-]\n" * 3


def test_mindist_cap(tmp_path):
    code, _, err = run(["mindist", "--cap", "1000", "FILE"], tmp_path, EX1)
    assert code == 3 and "16807" in err


def test_enumerate_and_member(tmp_path):
    text = """q=3
m=2
n=2
iota.v1=2 1
iota.v2=0
iota.v3=0
ell.v1=0
ell.v2=0
ell.v3=0
theta.v1=0
theta.v2=0
theta.v3=2 1
"""
    code, out, _ = run(["enumerate", "FILE"], tmp_path, text)
    lines = out.splitlines()
    assert code == 0 and lines[0] == "# 9 codewords" and len(lines) == 10
    word = lines[-1]
    code, out, _ = run(["member", "FILE", word], tmp_path, text)
    assert code == 0 and out == "member\n"
    code, out, _ = run(["member", "FILE", "1,0,0 0,0,0 | 0,0,0 0,0,0"], tmp_path, text)
    assert code == 1 and out == "not a member\n"
    code, _, err = run(["member", "FILE", "1,0,0 | 0,0,0"], tmp_path, text)
    assert code == 2


def test_canonicalize(tmp_path):
    C = example1_code()
    g1, g2 = C.generators()
    text = "q=7\nm=5\nn=5\n" + "".join(f"word={cli.render_word(w)}\n" for w in (g1, g2))
    code, out, _ = run(["canonicalize", "FILE"], tmp_path, text)
    assert code == 0 and out == cli.render_spec(C)
    code, out, _ = run(["canonicalize", "FILE"], tmp_path, "q=7\nm=3\nn=4\n")
    assert code == 0 and "iota.v1=6 0 0 1" in out


def test_verify_runs_and_is_deterministic():
    code, out, _ = run(["verify", "--cases", "20", "--seed", "4"])
    code2, out2, _ = run(["verify", "--cases", "20", "--seed", "4"])
    assert code == code2 == 0 and out == out2
    assert out.splitlines()[-1] == "all properties passed"


def test_verify_vacuous():
    code, out, _ = run(["verify", "--cases", "0"])
    assert code == 0 and "cases=0" in out


def test_verify_qset_validation(capsys):
    with pytest.raises(SystemExit):
        cli.main(["verify", "--qset", "3,4"])


def test_verify_reports_counterexample(monkeypatch):
    real = corpus.dual_code

    def broken(C, method="formula"):
        res = real(C, method)
        if method != "formula":
            return res
        D = res.code
        ctx = D.ctx
        ell = RPoly(ctx, (D.ell[0] + Poly.one(ctx), D.ell[1], D.ell[2]))
        res.code = CodeSpec(ctx, D.m, D.n, D.iota, ell, D.theta)
        return res

    monkeypatch.setattr(corpus, "dual_code", broken)
    code, out, _ = run(["verify", "--cases", "30", "--seed", "1"])
    assert code == 1
    assert "FAIL" in out and "iota.v1=" in out.split("FAIL", 1)[1]


def test_example1_command():
    code, out, _ = run(["example1"])
    assert code == 0
    assert "ell = (4x³+3x²+2x+5)v₁+(5x³+2x²+3x+1)v₂+(x³+4x²+2x+6)v₃" in out
    assert [line for line in out.splitlines() if line.endswith("[10,5,5]")] == ["v1 [10,5,5]", "v2 [10,5,5]", "v3 [10,5,5]"]
    assert "# EQUAL" in out and out.endswith("all checks passed\n")


def test_example1_detects_divergence(monkeypatch):
    from dcyclic import example1

    monkeypatch.setattr(example1, "PARAMETERS", (10, 5, 4))
    code, out, _ = run(["example1"])
    assert code == 1 and "parameters of v1" in out


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "dcyclic.cli", "mindist", "-"], input=EX1, capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "[10,5,5]\n" * 3
