"""Smoke tests for the python bindings."""

import math

import pytest

dnne = pytest.importorskip("dnne")


def test_gate_eval():
    assert dnne.gate_eval("AND", 0.5, 0.5) == pytest.approx(0.25, abs=1e-14)
    assert dnne.gate_eval("NOT", 3 / 8) == pytest.approx(5 / 8, abs=1e-14)
    assert dnne.gate_eval("OR", 0.3, 0.4) == pytest.approx(0.58, abs=1e-13)
    with pytest.raises(ValueError):
        dnne.gate_eval("AND", 0.5)
    with pytest.raises(ValueError):
        dnne.gate_eval("SQRT", 0.5, 0.5)


def test_bitstream_encode():
    bits = dnne.bitstream_encode(0.375, 100_000, seed=7)
    mean = sum(bits) / len(bits)
    assert mean == pytest.approx(0.375, abs=4 * math.sqrt(0.375 * 0.625 / 1e5))
    assert dnne.bitstream_encode(0.375, 100, seed=7) == dnne.bitstream_encode(
        0.375, 100, seed=7
    )


def test_multiply():
    assert dnne.multiply(0.5, 0.5) == pytest.approx(0.25, abs=1e-14)
    sampled = dnne.multiply(0.3, 0.6, mode="sampled", molecules=1_000_000, seed=5)
    assert sampled == pytest.approx(0.18, abs=4 * math.sqrt(0.18 * 0.82 / 1e6))


def test_activation_step():
    assert dnne.seesaw_activation(0.6, threshold=0.4) == 1.0
    assert dnne.seesaw_activation(0.4, threshold=0.4) == 0.0
    assert dnne.seesaw_activation(0.3, threshold=0.4) == 0.0


def test_device_model():
    assert dnne.serialization_factor(784, 196) == 4
    assert dnne.serialization_factor(10, 4) == 3
    assert dnne.layer_latency_hours(784, 784) == pytest.approx(8.07, abs=1e-9)
    assert dnne.layer_latency_hours(784, 196) == pytest.approx(14.17, abs=1e-9)
    assert dnne.area_mm2(1, 200.0, 6) == pytest.approx(1.44, abs=1e-12)


def test_explore_table():
    rows = dnne.explore()
    assert [r["cells_per_side"] for r in rows] == [196, 49, 16, 4]
    assert rows[0]["area_pessimistic_cm2"] == pytest.approx(553.19, abs=0.01)
    assert rows[0]["area_optimistic_cm2"] == pytest.approx(3.84, abs=0.01)
    assert rows[0]["exec_time_per_layer_hr"] == pytest.approx(14.17, abs=0.1)
    assert rows[3]["serialization_output"] == 3


def test_simulate_layer_and_trace():
    pre, out, trace = dnne.simulate_layer(
        [0.2, 0.0, 0.4, 0.2],
        [[1.0] * 4 for _ in range(4)],
        threshold=0.5,
        molecules=100_000,
        mode="ideal",
        seed=1,
    )
    assert pre[0] == pytest.approx(0.2, abs=1e-13)
    assert out[0] == 0.0
    assert dnne.validate_trace(trace) is None
    assert dnne.validate_trace(trace.replace("merge_y_open", "merge_z_open", 1)) is not None


def test_corpus_and_inference(tmp_path):
    ds = dnne.builtin_digits()
    assert ds["count"] == 1797
    assert ds["dim"] == 64

    net, acc = dnne.train_digits(epochs=4, seed=7)
    assert 0.0 <= acc <= 1.0
    assert net.layer_sizes == [64, 64, 10]

    path = str(tmp_path / "net.txt")
    net.save(path)
    back = dnne.Network.load(path)
    assert back.to_text() == net.to_text()

    image = ds["images"][: ds["dim"]]
    result = dnne.infer(back, image, mode="ideal")
    assert 0 <= result["predicted"] <= 9
    assert result["latency_hours"] > 0
