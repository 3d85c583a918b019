"""Stochastic computation on nicked DNA and the microfluidic neural engine.

Thin wrapper over the compiled extension module; the C++ library under
``src/`` is the implementation.
"""

from ._dnne import (
    ArgumentError,
    FormatError,
    Network,
    QuantizationError,
    area_mm2,
    bitstream_encode,
    builtin_digits,
    explore,
    gate_eval,
    infer,
    layer_latency_hours,
    multiply,
    seesaw_activation,
    serialization_factor,
    simulate_layer,
    train_digits,
    validate_trace,
)

__all__ = [
    "ArgumentError",
    "FormatError",
    "Network",
    "QuantizationError",
    "area_mm2",
    "bitstream_encode",
    "builtin_digits",
    "explore",
    "gate_eval",
    "infer",
    "layer_latency_hours",
    "multiply",
    "seesaw_activation",
    "serialization_factor",
    "simulate_layer",
    "train_digits",
    "validate_trace",
]
