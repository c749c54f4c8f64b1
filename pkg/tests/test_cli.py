"""End-to-end CLI behaviour: verbs, exit codes, CSV schema, determinism."""

import csv
import io
import math

import pytest

from anglekit import GeneralPositionError, cli


def run(argv, capsys):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_generate_and_count(tmp_path, capsys):
    out = tmp_path / "helix.txt"
    code, _, _ = run(["generate", "--construction", "cyl_helix", "--n", "20",
                      "--out", str(out)], capsys)
    assert code == 0
    code, stdout, stderr = run(["count", "--in", str(out)], capsys)
    assert code == 0
    assert int(stdout.strip()) == 261
    assert "clusters=261" in stderr  # diagnostics on the error stream


def test_verify_clean_exit_zero(tmp_path, capsys):
    out = tmp_path / "h.txt"
    run(["generate", "--construction", "cyl_helix", "--n", "12", "--out", str(out)],
        capsys)
    code, stdout, _ = run(["verify", "--in", str(out)], capsys)
    assert code == 0
    assert "0 collinear" in stdout


def test_verify_violations_exit_two(tmp_path, capsys):
    out = tmp_path / "sun.txt"
    run(["generate", "--construction", "sunshine", "--m", "3", "--out", str(out)],
        capsys)
    code, stdout, _ = run(["verify", "--in", str(out)], capsys)
    assert code == 2
    assert "collinear 0 1 4" in stdout


def test_generate_invalid_cones_n_exit_one(capsys):
    code, _, stderr = run(["generate", "--construction", "cones", "--n", "30"], capsys)
    assert code == 1
    assert "29" in stderr


def test_missing_n_exit_one(capsys):
    code, _, stderr = run(["generate", "--construction", "cyl_helix"], capsys)
    assert code == 1


def test_usage_error_exit_one(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["count"])  # missing --in
    assert exc.value.code == 1


def test_retry_exhaustion_exit_three(monkeypatch, capsys):
    def explode(*args, **kwargs):
        raise GeneralPositionError("out of retries")

    monkeypatch.setattr(cli.constructions, "cone_config", explode)
    code, _, stderr = run(
        ["generate", "--construction", "cone", "--n", "8"], capsys
    )
    assert code == 3
    assert "out of retries" in stderr


def test_pinned_cli(tmp_path, capsys):
    out = tmp_path / "cones.txt"
    run(["generate", "--construction", "cones", "--n", "29", "--out", str(out)],
        capsys)
    code, stdout, _ = run(
        ["pinned", "--in", str(out), "--pin-kind", "pair_all_roles",
         "--a", "0", "--b", "1"],
        capsys,
    )
    assert code == 0 and int(stdout.strip()) == 5


def test_chains_cli(tmp_path, capsys):
    square = tmp_path / "square.txt"
    square.write_text("0 0\n1 0\n1 1\n0 1\n")
    code, stdout, _ = run(["chains", "--in", str(square), "--k", "2"], capsys)
    assert code == 0 and int(stdout.strip()) == 4
    code, stdout, _ = run(
        ["chains", "--in", str(square), "--k", "2", "--chains-all-distinct"], capsys
    )
    assert code == 0 and int(stdout.strip()) == 2


def test_energy_cli(tmp_path, capsys):
    tri = tmp_path / "tri.txt"
    tri.write_text("0 0\n1 0\n0 1\n")
    code, stdout, _ = run(["energy", "--in", str(tri)], capsys)
    assert code == 0
    lines = dict(line.split("=") for line in stdout.strip().splitlines())
    assert lines["energy"] == "20"
    assert lines["bound"] == "9/5"
    assert lines["holds"] == "true"
    assert lines["distinct"] == "2"


def test_selfsim_cli(tmp_path, capsys):
    out = tmp_path / "spiral.txt"
    run(["generate", "--construction", "log_spiral", "--n", "10", "--out", str(out)],
        capsys)
    code, stdout, _ = run(["selfsim", "--in", str(out)], capsys)
    assert code == 0
    assert "0" in stdout.split()


def test_exact_flag_rejects_float_input(tmp_path, capsys):
    f = tmp_path / "f.txt"
    f.write_text("0.5 0\n1 0\n0 1\n")
    code, _, stderr = run(["count", "--in", str(f), "--exact"], capsys)
    assert code == 1
    assert "non-rational" in stderr


def test_exact_flag_accepts_rational_input(tmp_path, capsys):
    f = tmp_path / "f.txt"
    f.write_text("1/2 0\n1 0\n0 1\n")
    code, stdout, _ = run(["count", "--in", str(f), "--exact"], capsys)
    assert code == 0 and int(stdout.strip()) == 3


def test_sweep_csv_schema_and_values(tmp_path, capsys):
    out = tmp_path / "rows.csv"
    code, _, _ = run(
        ["sweep", "--construction", "cyl_helix", "--n", "10,20",
         "--quantities", "distinct_angles,energy,bound", "--out", str(out)],
        capsys,
    )
    assert code == 0
    rows = list(csv.DictReader(out.read_text().splitlines()))
    assert [r["quantity"] for r in rows] == [
        "distinct_angles", "energy", "bound", "distinct_angles", "energy", "bound"
    ]
    byq = {(r["n"], r["quantity"]): r["value"] for r in rows}
    assert byq[("10", "distinct_angles")] == "56"
    assert "/" in byq[("10", "bound")]  # exact rational


def test_sweep_empty_n_list_header_only(capsys):
    code, stdout, _ = run(
        ["sweep", "--construction", "cyl_helix", "--n", "",
         "--quantities", "distinct_angles"],
        capsys,
    )
    assert code == 0
    assert stdout.strip() == "construction,n,quantity,value,eps,elapsed_ms"


def test_sweep_skips_invalid_n_with_warning(capsys):
    code, stdout, stderr = run(
        ["sweep", "--construction", "cones", "--n", "29,30",
         "--quantities", "pinned_pair_all_roles"],
        capsys,
    )
    assert code == 0
    assert "skipping n=30" in stderr
    rows = list(csv.DictReader(stdout.splitlines()))
    assert len(rows) == 1 and rows[0]["value"] == "5"


def test_sweep_deterministic_modulo_elapsed(capsys):
    argv = ["sweep", "--construction", "cyl_helix", "--n", "8,10",
            "--quantities", "distinct_angles,energy"]
    _, out1, _ = run(argv, capsys)
    _, out2, _ = run(argv, capsys)

    def strip_elapsed(text):
        return [line.rsplit(",", 1)[0] for line in text.splitlines()]

    assert strip_elapsed(out1) == strip_elapsed(out2)


def test_fit_cli_quadratic(tmp_path, capsys):
    f = tmp_path / "rows.csv"
    rows = [("demo", n, "distinct_angles", v) for n, v in
            ((10, 100), (20, 400), (40, 1600))]
    text = "construction,n,quantity,value,eps,elapsed_ms\n" + "\n".join(
        f"{c},{n},{q},{v},1e-09,0" for c, n, q, v in rows
    )
    f.write_text(text + "\n")
    code, stdout, _ = run(["fit", "--in", str(f)], capsys)
    assert code == 0
    values = dict(line.split("=") for line in stdout.strip().splitlines())
    assert float(values["slope"]) == pytest.approx(2.0, abs=1e-9)
    assert float(values["r_squared"]) == pytest.approx(1.0, abs=1e-9)


def test_fit_cli_linear(tmp_path, capsys):
    f = tmp_path / "rows.csv"
    text = "construction,n,quantity,value,eps,elapsed_ms\n" + "\n".join(
        f"demo,{n},q,{n},1e-09,0" for n in (10, 20, 40)
    )
    f.write_text(text + "\n")
    code, stdout, _ = run(["fit", "--in", str(f)], capsys)
    values = dict(line.split("=") for line in stdout.strip().splitlines())
    assert float(values["slope"]) == pytest.approx(1.0, abs=1e-9)


def test_fit_too_few_rows_exit_one(tmp_path, capsys):
    f = tmp_path / "rows.csv"
    f.write_text("construction,n,quantity,value,eps,elapsed_ms\ndemo,10,q,5,1e-09,0\n")
    code, _, stderr = run(["fit", "--in", str(f)], capsys)
    assert code == 1


def test_fit_mixed_quantities_need_flag(tmp_path, capsys):
    f = tmp_path / "rows.csv"
    text = "construction,n,quantity,value,eps,elapsed_ms\n" + "\n".join(
        f"demo,{n},{q},{n * n},1e-09,0" for n in (10, 20, 40) for q in ("a", "b")
    )
    f.write_text(text + "\n")
    code, _, _ = run(["fit", "--in", str(f)], capsys)
    assert code == 1
    code, stdout, _ = run(["fit", "--in", str(f), "--quantity", "a"], capsys)
    assert code == 0


def test_sweep_values_match_direct_counters(capsys):
    from anglekit import angle_histogram, cyl_helix, energy, run_sweep

    rows = run_sweep("cyl_helix", [10, 14], ["distinct_angles", "energy"], eps=1e-9)
    by_key = {(r.n, r.quantity): r.value for r in rows}
    for n in (10, 14):
        hist = angle_histogram(cyl_helix(n), 1e-9)
        assert by_key[(n, "distinct_angles")] == hist.distinct
        assert by_key[(n, "energy")] == energy(hist)


def test_fit_rejects_nonpositive_values():
    from anglekit import SweepRow, fit_loglog

    rows = [SweepRow("demo", n, "q", v, 1e-9, 0) for n, v in
            ((10, 0), (20, 400), (40, 1600))]
    with pytest.raises(ValueError):
        fit_loglog(rows)


def test_generate_random_exact_roundtrip(tmp_path, capsys):
    out = tmp_path / "rand.txt"
    code, _, _ = run(
        ["generate", "--construction", "random", "--n", "8", "--dim", "2",
         "--seed", "3", "--out", str(out)],
        capsys,
    )
    assert code == 0
    assert "/" in out.read_text()  # rational coordinates survive serialization
    code, stdout, _ = run(["count", "--in", str(out), "--exact"], capsys)
    assert code == 0
