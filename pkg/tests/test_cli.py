"""Command-line interface: outputs, determinism, and exit-code discipline."""

from __future__ import annotations

import io
import json

import pytest

from scorepotential import evaluation_from_csv, write_sample_csv
from scorepotential.cli import main
from tests.conftest import (
    RATE4_DECILE_RESPONDERS,
    bucketed_records,
    ten_name_records,
)


def run_cli(*argv: str) -> tuple[int, str]:
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.fixture
def rate4_csv(tmp_path):
    path = tmp_path / "rate4.csv"
    write_sample_csv(bucketed_records(RATE4_DECILE_RESPONDERS, 10), path)
    return path


@pytest.fixture
def ten_name_csv(tmp_path):
    path = tmp_path / "ten_name.csv"
    write_sample_csv(ten_name_records(), path)
    return path


def test_evaluate_text(rate4_csv):
    code, out = run_cli("evaluate", str(rate4_csv))
    assert code == 0
    assert "PoP = P↑/P↓ = 74%" in out
    assert "Model: rate4" in out


def test_evaluate_json_parses(rate4_csv):
    code, out = run_cli("evaluate", str(rate4_csv), "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["model_id"] == "rate4"
    assert data["gains"]["p_down_chart"] == 39.4


def test_evaluate_csv_parses(rate4_csv):
    code, out = run_cli("evaluate", str(rate4_csv), "--format", "csv")
    assert code == 0
    assert evaluation_from_csv(out).model_id == "rate4"


def test_evaluate_with_economics_block(rate4_csv):
    code, out = run_cli(
        "evaluate", str(rate4_csv),
        "--total-cost", "50000", "--addresses", "100000", "--responders", "4000",
    )
    assert code == 0
    assert "Spreading loss" in out

    code, out = run_cli(
        "evaluate", str(rate4_csv), "--format", "json",
        "--total-cost", "50000", "--addresses", "100000", "--responders", "4000",
    )
    data = json.loads(out)
    assert data["economics"]["cost_per_thousand"] == "500"
    assert data["evaluation"]["model_id"] == "rate4"

    code, out = run_cli(
        "evaluate", str(rate4_csv), "--format", "csv",
        "--total-cost", "50000", "--addresses", "100000", "--responders", "4000",
    )
    assert code == 0
    assert "cost_per_thousand,500" in out
    assert evaluation_from_csv(out).model_id == "rate4"  # extra section tolerated


def test_evaluate_custom_cutoffs_and_ties(ten_name_csv):
    code, out = run_cli(
        "evaluate", str(ten_name_csv), "--buckets", "5",
        "--cutoffs", "20%,0.5,100%", "--ties", "pessimistic",
    )
    assert code == 0
    assert "20%" in out and "50%" in out and "100%" in out


def test_compare_ranks_and_flags_below_target(tmp_path, rate4_csv):
    strong = tmp_path / "strong.csv"
    write_sample_csv(bucketed_records([4, 0, 0, 0, 0, 0, 0, 0, 0, 0], 10), strong)
    code, out = run_cli(
        "compare", str(rate4_csv), str(strong), "--target", "80",
        "--format", "json",
    )
    assert code == 0
    data = json.loads(out)
    assert data["ranking"] == ["strong", "rate4"]
    assert data["below_target"] == ["rate4"]


def test_compare_writes_figure(tmp_path, rate4_csv):
    strong = tmp_path / "strong.csv"
    write_sample_csv(bucketed_records([4, 0, 0, 0, 0, 0, 0, 0, 0, 0], 10), strong)
    figure = tmp_path / "out.svg"
    code, _ = run_cli(
        "compare", str(rate4_csv), str(strong), "--figure", str(figure)
    )
    assert code == 0
    svg = figure.read_text(encoding="utf-8")
    assert svg.startswith("<?xml")
    assert 'id="pop-curve"' in svg


def test_compare_output_is_byte_identical_across_runs(tmp_path):
    paths = []
    for seed in range(4):
        path = tmp_path / f"m{seed}.csv"
        write_sample_csv(
            bucketed_records(RATE4_DECILE_RESPONDERS, 10) if seed == 0
            else bucketed_records([seed, 1, 0, 0, 1, 0, 0, 0, 0, 0], 10),
            path,
        )
        paths.append(str(path))
    first = run_cli("compare", *paths, "--format", "json")
    second = run_cli("compare", *paths, "--format", "json")
    assert first == second


def test_gen_is_deterministic_and_round_trips(tmp_path):
    out_a = tmp_path / "a.csv"
    out_b = tmp_path / "b.csv"
    args = ["gen", "--size", "80", "--rate", "0.05", "--quality", "0.4", "--seed", "9"]
    assert main(args + ["-o", str(out_a)]) == 0
    assert main(args + ["-o", str(out_b)]) == 0
    assert out_a.read_bytes() == out_b.read_bytes()

    code, stdout_text = run_cli(*args)
    assert code == 0
    assert stdout_text == out_a.read_text(encoding="utf-8")


def test_econ_text_and_json():
    code, out = run_cli(
        "econ", "--total-cost", "50000", "--addresses", "100000",
        "--responders", "4000",
    )
    assert code == 0
    assert "Cost per responder: 12.5" in out

    code, out = run_cli(
        "econ", "--total-cost", "1000", "--addresses", "1000",
        "--responders", "10", "--format", "json",
    )
    data = json.loads(out)
    assert data["cost_per_responder"] == "100"
    assert data["spreading_loss"]["loss"] == "900"


def test_missing_file_is_an_io_error(tmp_path):
    code, _ = run_cli("evaluate", str(tmp_path / "nope.csv"))
    assert code == 3


def test_metric_errors_have_distinct_exit_codes(tmp_path, ten_name_csv):
    flat = tmp_path / "flat.csv"
    flat.write_text(
        "id,score,response\n" + "".join(f"r{i},{i}.0,0\n" for i in range(10)),
        encoding="utf-8",
    )
    code, _ = run_cli("evaluate", str(flat))
    assert code == 13  # no responders

    code, _ = run_cli("evaluate", str(ten_name_csv), "--buckets", "3")
    assert code == 16  # indivisible buckets
    assert 13 != 16 != 3


def test_input_contract_errors(tmp_path):
    bad_resp = tmp_path / "bad.csv"
    bad_resp.write_text("id,score,response\nx,1.0,2\n", encoding="utf-8")
    code, _ = run_cli("evaluate", str(bad_resp))
    assert code == 23

    malformed = tmp_path / "mal.csv"
    malformed.write_text("id,score,response\nx,abc,1\n", encoding="utf-8")
    code, _ = run_cli("evaluate", str(malformed))
    assert code == 21

    empty = tmp_path / "empty.csv"
    empty.write_text("id,score,response\n", encoding="utf-8")
    code, _ = run_cli("evaluate", str(empty))
    assert code == 10


def test_usage_errors_exit_2(rate4_csv):
    with pytest.raises(SystemExit) as excinfo:
        main(["evaluate", str(rate4_csv), "--cutoffs", "150%"])
    assert excinfo.value.code == 2

    with pytest.raises(SystemExit) as excinfo:
        main(["evaluate", str(rate4_csv), "--addresses", "10"])
    assert excinfo.value.code == 2

    with pytest.raises(SystemExit) as excinfo:
        main(["gen", "--size", "0", "--rate", "0.1", "--quality", "0", "--seed", "1"])
    assert excinfo.value.code == 2


def test_console_entrypoint_is_installed():
    import shutil

    assert shutil.which("scorepotential") is not None
