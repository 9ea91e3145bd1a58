import csv

import pytest

from sweepplots.render import (
    EmptyInputError,
    PlotSpec,
    SchemaMismatchError,
    read_rows,
    render,
)

HEADER = ["benchmark", "config", "k", "seed", "yield", "post_gates", "perf_norm"]


def write_csv(path, rows, header=HEADER):
    with open(path, "w", newline="") as f:
        w = csv.writer(f)
        w.writerow(header)
        w.writerows(rows)


def two_benchmark_rows():
    rows = []
    for k in range(3):
        rows.append(["qft_8", "eff-full", k, 0, 0.2 / (k + 1), 171 + 9 * k, 171 / (171 + 9 * k)])
        rows.append(["qft_8", "eff-5-freq", k, 0, 0.05 / (k + 1), 171 + 9 * k, 171 / (171 + 9 * k)])
    for i, name in enumerate(["ibm16", "ibm16b", "ibm20", "ibm20b"], start=1):
        rows.append(["qft_8", "ibm", 0, i, 0.01 * i, 198, 171 / 198])
    # chain benchmark: one post count everywhere -> one X
    for cfg, y in (("eff-full", 0.34), ("eff-5-freq", 0.06), ("ibm", 0.0)):
        rows.append(["ising_chain_12", cfg, 0, 1 if cfg == "ibm" else 0, y, 204, 1.0])
    return rows


def test_one_image_per_benchmark(tmp_path):
    src = tmp_path / "rows.csv"
    write_csv(src, two_benchmark_rows())
    before = src.read_bytes()
    written = render(PlotSpec(csv_path=src, out_dir=tmp_path / "figs"))
    assert sorted(written) == ["ising_chain_12", "qft_8"]
    for paths in written.values():
        for p in paths:
            assert p.exists() and p.stat().st_size > 0
            assert p.suffix == ".png"
    assert src.read_bytes() == before  # input untouched


def test_chain_rows_share_single_x(tmp_path):
    src = tmp_path / "rows.csv"
    write_csv(src, two_benchmark_rows())
    rows = [r for r in read_rows(src) if r.benchmark == "ising_chain_12"]
    assert len({r.perf_norm for r in rows}) == 1
    written = render(PlotSpec(csv_path=src, out_dir=tmp_path / "figs"))
    assert (tmp_path / "figs" / "ising_chain_12.png").exists()
    assert written["ising_chain_12"][0].stat().st_size > 0


def test_missing_column_is_schema_mismatch(tmp_path):
    src = tmp_path / "rows.csv"
    header = [c for c in HEADER if c != "yield"]
    write_csv(src, [["b", "eff-full", 0, 0, 100, 1.0]], header=header)
    with pytest.raises(SchemaMismatchError):
        render(PlotSpec(csv_path=src, out_dir=tmp_path / "figs"))


def test_empty_input_rejected(tmp_path):
    src = tmp_path / "rows.csv"
    write_csv(src, [])
    with pytest.raises(EmptyInputError):
        render(PlotSpec(csv_path=src, out_dir=tmp_path / "figs"))


def test_unknown_config_still_gets_a_marker(tmp_path):
    src = tmp_path / "rows.csv"
    write_csv(src, [["b", "custom-config", 0, 0, 0.5, 100, 1.0]])
    written = render(PlotSpec(csv_path=src, out_dir=tmp_path / "figs"))
    assert written["b"][0].exists()


def test_linear_scale_and_svg(tmp_path):
    src = tmp_path / "rows.csv"
    write_csv(src, two_benchmark_rows())
    written = render(PlotSpec(csv_path=src, out_dir=tmp_path / "figs",
                              y_scale="linear", formats=("png", "svg")))
    assert {p.suffix for p in written["qft_8"]} == {".png", ".svg"}


def test_cli_smoke(tmp_path, capsys):
    from sweepplots.cli import main

    src = tmp_path / "rows.csv"
    write_csv(src, two_benchmark_rows())
    rc = main(["--csv", str(src), "--out", str(tmp_path / "figs"), "--log-y"])
    assert rc == 0
    out = capsys.readouterr().out
    assert "qft_8" in out and "ising_chain_12" in out
