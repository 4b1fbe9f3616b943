from json import loads
from pathlib import Path

from pandas import read_csv
from pytest import CaptureFixture, mark, raises

from mzvlab.__main__ import build_parser, main, parse_params
from mzvlab.constants import REPORT_FIELDS
from mzvlab.core import DomainError


def test_parser_commands():
    parser = build_parser()
    args = parser.parse_args(["eval", "zeta(2)", "--digits", "30"])
    assert args.command == "eval"
    assert args.digits == 30
    assert args.format == "text"
    args = parser.parse_args(["suite", "--filter", "GOLD-*", "--jobs", "2"])
    assert args.pattern == "GOLD-*"
    assert args.jobs == 2


def test_parser_needs_command():
    with raises(SystemExit):
        build_parser().parse_args([])


def test_version(capsys: CaptureFixture):
    with raises(SystemExit) as e:
        main(["--version"])
    assert e.value.code == 0
    assert capsys.readouterr().out.startswith("mzvlab v")


def test_parse_params():
    assert parse_params([]) is None
    assert parse_params(["m=(1,2)", " p = 2"]) == {"m": "(1,2)", "p": "2"}
    with raises(DomainError):
        parse_params(["m"])


def test_eval_zeta(capsys: CaptureFixture, cache_path: Path):
    code = main(["eval", "zeta(2)", "--digits", "30", "--cache", str(cache_path)])
    assert code == 0
    out = capsys.readouterr().out
    assert out.startswith("zeta(2) = 1.644934066848226436472415166")
    assert "+/-" in out


def test_eval_uses_cache(capsys: CaptureFixture, cache_path: Path):
    argv = ["eval", "zeta(3)", "--digits", "20", "--cache", str(cache_path)]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert len(cache_path.read_text().splitlines()) == 1
    assert main(argv) == 0
    assert capsys.readouterr().out == first
    assert len(cache_path.read_text().splitlines()) == 1


def test_eval_no_cache(capsys: CaptureFixture, cache_path: Path):
    argv = ["eval", "zeta(3)", "--cache", str(cache_path), "--no-cache"]
    assert main(argv) == 0
    assert not cache_path.exists()


def test_eval_symbolic(capsys: CaptureFixture):
    assert main(["eval", "dual(3)", "--no-cache"]) == 0
    assert capsys.readouterr().out.strip() == "dual(3) = 1,1,1"
    assert main(["eval", "dual(1,1,2,1)", "--no-cache"]) == 0
    assert capsys.readouterr().out.strip() == "dual(1,1,2,1) = 3,2"


def test_eval_json(capsys: CaptureFixture):
    argv = ["eval", "li(1; 1/2)", "--digits", "20", "--format", "json", "--no-cache"]
    assert main(argv) == 0
    record = loads(capsys.readouterr().out)
    assert record["expression"] == "li(1; 1/2)"
    assert record["value"].startswith("0.693147180559945309")
    assert record["digits"] == 20


ERROR_PARAMS = (
    (["eval", "zeta(1,2)", "--no-cache"], "DivergenceError"),
    (["eval", "zeta(2,,1)", "--no-cache"], "ParseError"),
    (["eval", "zeta(2)", "--digits", "3", "--no-cache"], "DomainError"),
    (["verify", "NO-SUCH-ID"], "UnknownIdentityError"),
    (["verify", "EQ3.5", "--param", "m"], "DomainError"),
    (["suite", "--filter", "NOTHING"], "DomainError"),
)


@mark.parametrize("argv,name", ERROR_PARAMS)
def test_errors_exit_two(argv, name, capsys: CaptureFixture):
    assert main(argv) == 2
    err = capsys.readouterr().err
    assert err.startswith(f"error: {name}:")


def test_verify_json(capsys: CaptureFixture):
    argv = ["verify", "EQ3.5", "--param", "m=(2)", "--digits", "30", "--format", "json"]
    assert main(argv) == 0
    records = loads(capsys.readouterr().out)
    assert len(records) == 1
    assert records[0]["id"] == "EQ3.5"
    assert records[0]["passed"] is True
    assert tuple(records[0]) == REPORT_FIELDS


def test_suite_gold_text(capsys: CaptureFixture):
    assert main(["suite", "--filter", "GOLD-*", "--digits", "30"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert [line.split()[0] for line in lines[:2]] == ["PASS", "PASS"]
    assert lines[-1].startswith("2 passed, 0 failed")


def test_suite_csv_out(temp_dir: Path):
    out = temp_dir / "reports" / "gold.csv"
    argv = ["suite", "--filter", "GOLD-", "--format", "csv", "--out", str(out)]
    assert main(argv) == 0
    frame = read_csv(out)
    assert tuple(frame.columns) == REPORT_FIELDS
    assert len(frame) == 2
    assert frame["passed"].all()


def test_constants(capsys: CaptureFixture):
    assert main(["constants", "--digits", "20"]) == 0
    out = capsys.readouterr().out
    assert "pi = 3.1415926535897932385" in out
    assert "zeta(3) = 1.2020569031595942854" in out


def test_constants_csv(capsys: CaptureFixture):
    assert main(["constants", "--digits", "20", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "name,value"
    assert len(lines) == 1 + 6


def test_cache_show_and_clear(capsys: CaptureFixture, cache_path: Path):
    main(["eval", "zeta(2)", "--digits", "20", "--cache", str(cache_path)])
    capsys.readouterr()
    assert main(["cache", "show", "--cache", str(cache_path)]) == 0
    assert capsys.readouterr().out.startswith("zeta(2) [20] = 1.6449340668")
    assert main(["cache", "clear", "--cache", str(cache_path)]) == 0
    assert capsys.readouterr().out.startswith("removed 1 entries")
    assert not cache_path.exists()


def test_warm_cache_keeps_backend_values(capsys: CaptureFixture, cache_path: Path):
    direct = ["eval", "zeta(2)", "--digits", "20", "--cache", str(cache_path)]
    direct += ["--backend", "direct", "--max-terms", "1000"]
    assert main(direct) == 0
    cold = capsys.readouterr().out
    holder = ["eval", "zeta(2)", "--digits", "30", "--cache", str(cache_path)]
    assert main(holder) == 0
    capsys.readouterr()
    assert main(direct) == 0
    assert capsys.readouterr().out == cold
    assert len(cache_path.read_text().splitlines()) == 2
