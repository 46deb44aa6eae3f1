import json

import numpy as np
import pytest

from majlab import cli


def write_config(tmp_path, payload, name="config.json"):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


PHASE_CONFIG = {
    "model": "kitaev",
    "parameters": {"n_sites": 10, "t": 1.0, "delta": 0.4},
    "sweep": [{"parameter": "mu", "start": -3.0, "stop": 3.0, "points": 7}],
}


def test_config_validation_errors():
    with pytest.raises(cli.ConfigError):
        cli.RunConfig.from_dict({"parameters": {}})
    with pytest.raises(cli.ConfigError):
        cli.RunConfig.from_dict({"model": "kitaev", "typo": 1})
    with pytest.raises(cli.ConfigError):
        cli.RunConfig.from_dict({
            "model": "kitaev",
            "sweep": [{"parameter": "mu", "start": 0, "stop": 1, "points": 2}] * 3,
        })
    with pytest.raises(cli.ConfigError):
        cli.RunConfig.from_dict({
            "model": "kitaev",
            "sweep": [{"parameter": "mu", "start": 0, "stop": 1}],
        })


def test_unknown_model_rejected():
    config = cli.RunConfig.from_dict({"model": "toric-code",
                                      "parameters": {"n_sites": 4}})
    with pytest.raises(cli.ConfigError):
        cli.run_sweep(config, "spectrum")


def test_config_hash_ignores_threads_and_key_order():
    a = cli.config_hash(PHASE_CONFIG)
    b = cli.config_hash({**PHASE_CONFIG, "threads": 8})
    reordered = json.loads(json.dumps(PHASE_CONFIG))
    c = cli.config_hash(reordered)
    assert a == b == c
    changed = {**PHASE_CONFIG, "parameters": {"n_sites": 11, "t": 1.0, "delta": 0.4}}
    assert cli.config_hash(changed) != a


def test_phase_diagram_rows_and_critical_cells():
    config = cli.RunConfig.from_dict(PHASE_CONFIG)
    table = cli.run_sweep(config, "phase-diagram", cli_threads=1)
    assert table.columns == ["mu", "charge_analytic", "charge_numeric"]
    by_mu = {row[0]: row[1:] for row in table.rows}
    assert by_mu[0.0] == (1, 1)
    assert by_mu[3.0] == (0, 0)
    assert by_mu[2.0] == ("critical", "critical")


def test_spectrum_rows_sorted_by_level():
    config = cli.RunConfig.from_dict({
        "model": "kitaev", "parameters": {"n_sites": 4, "delta": 0.3},
    })
    table = cli.run_sweep(config, "spectrum")
    assert table.columns == ["level", "energy"]
    assert [row[0] for row in table.rows] == list(range(8))
    energies = [row[1] for row in table.rows]
    assert energies == sorted(energies)


def test_zero_mode_observable():
    config = cli.RunConfig.from_dict({
        "model": "kitaev",
        "parameters": {"n_sites": 40, "t": 1.0, "mu": 0.0, "delta": 0.5,
                       "threshold": 1e-8},
    })
    table = cli.run_sweep(config, "zero-modes")
    (row,) = table.rows
    count, min_e, max_resid, decay = row
    assert count == 2
    assert min_e < 1e-8
    assert max_resid < 1e-6
    assert decay == pytest.approx(2.0, rel=0.2)


def test_readout_observable_contrast_sign():
    config = cli.RunConfig.from_dict({
        "model": "transmon",
        "parameters": {"omega0": 1.0, "g_jc": 0.02, "depsilon": 0.8},
        "sweep": [{"parameter": "delta", "start": -0.01, "stop": 0.01,
                   "points": 3}],
    })
    table = cli.run_sweep(config, "readout")
    contrasts = {row[0]: row[3] for row in table.rows}
    assert contrasts[0.0] == 0.0
    assert contrasts[0.01] == -contrasts[-0.01]


def test_byte_determinism_across_thread_counts():
    outputs = []
    for threads in (1, 2, 4):
        config = cli.RunConfig.from_dict({**PHASE_CONFIG, "threads": threads})
        table = cli.run_sweep(config, "phase-diagram")
        outputs.append(cli.emit_table(table, "csv"))
    assert outputs[0] == outputs[1] == outputs[2]


def test_csv_has_provenance_header_and_full_precision():
    config = cli.RunConfig.from_dict({
        "model": "kitaev", "parameters": {"n_sites": 4, "delta": 0.3},
    })
    text = cli.emit_table(cli.run_sweep(config, "spectrum"), "csv")
    lines = text.splitlines()
    headers = [ln for ln in lines if ln.startswith("#")]
    assert any(ln.startswith("# config_hash=") for ln in headers)
    assert any(ln.startswith("# tool_version=") for ln in headers)
    data = [ln for ln in lines if not ln.startswith("#")]
    assert data[0] == "level,energy"
    # 17 significant digits round-trip the double exactly
    for ln in data[1:]:
        level, energy = ln.split(",")
        assert float(energy) == float(format(float(energy), ".17g"))


def test_json_mirror_round_trips():
    config = cli.RunConfig.from_dict(PHASE_CONFIG)
    table = cli.run_sweep(config, "phase-diagram")
    doc = json.loads(cli.emit_table(table, "json"))
    assert doc["columns"] == table.columns
    assert len(doc["rows"]) == len(table.rows)
    for got, expect in zip(doc["rows"], table.rows):
        for g, e in zip(got, expect):
            assert g == e


def test_braid_run_emits_permutation_and_gate():
    config = cli.RunConfig.from_dict({
        "model": "braid",
        "parameters": {"n_strands": 4, "word": "B1"},
    })
    doc = cli.run_braid(config)
    assert doc["permutation"] == [[2, 1], [1, -1], [3, 1], [4, 1]]
    gate = np.array([[complex(re, im) for re, im in row] for row in doc["gate"]])
    target = np.diag([np.exp(1j * np.pi / 4), np.exp(-1j * np.pi / 4)])
    phase = gate[0, 0] / target[0, 0]
    assert np.max(np.abs(gate - phase * target)) < 1e-12


def test_braid_run_rejects_bad_word():
    config = cli.RunConfig.from_dict({
        "model": "braid", "parameters": {"n_strands": 4, "word": "Bx"},
    })
    with pytest.raises(cli.ConfigError):
        cli.run_braid(config)


def test_main_exit_codes(tmp_path, capsys):
    good = write_config(tmp_path, PHASE_CONFIG)
    out = tmp_path / "out.csv"
    assert cli.main(["phase-diagram", "--config", good,
                     "--out", str(out)]) == cli.EXIT_OK
    assert out.read_text().startswith("# config_hash=")

    missing = str(tmp_path / "nope.json")
    assert cli.main(["phase-diagram", "--config", missing]) == \
        cli.EXIT_CONFIG_ERROR

    bad_params = write_config(tmp_path, {
        "model": "kitaev", "parameters": {"n_sites": 1},
    }, name="bad.json")
    assert cli.main(["spectrum", "--config", bad_params]) == \
        cli.EXIT_CONFIG_ERROR
    capsys.readouterr()


def test_env_variable_overrides_thread_count(monkeypatch):
    monkeypatch.setenv("MAJLAB_THREADS", "2")
    assert cli.resolve_threads(8, 4) == 2
    monkeypatch.delenv("MAJLAB_THREADS")
    assert cli.resolve_threads(8, 4) == 8
    assert cli.resolve_threads(None, 4) == 4
    with pytest.raises(cli.ConfigError):
        cli.resolve_threads(0, None)
