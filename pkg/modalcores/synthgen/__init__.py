"""Synthetic data with known modal-sets.

Rings with Gaussian noise (modal-sets are circles), Gaussian mixtures (modal-sets are points) and uniform
distribution on compact set blurred by Gaussian noise. Every generator is deterministic for given seed and
returns samples, discretized true modal-sets and the truth component of every sample.

Examples:
=========

    >>> sample = generate(preset_spec("three-rings", n=300), seed=7)
    >>> sample.data.n, len(sample.truth)
    (300, 3)
    >>> again = generate(preset_spec("three-rings", n=300), seed=7)
    >>> bool((sample.data.points == again.data.points).all())
    True

Available presets

    >>> list(PRESETS)
    ['three-rings', 'single-gaussian', 'two-gaussians-1d', 'three-gaussians', 'two-segments']
"""
from modalcores.synthgen.synthgen_internal import (
    AnySpec,
    connected_parts,
    gen_gaussian_mixture,
    gen_manifold_noise,
    gen_rings,
    generate,
    ManifoldNoiseSpec,
    MixtureSpec,
    preset_spec,
    PRESETS,
    read_truth,
    ring_points,
    RingSpec,
    segment_points,
    SyntheticSample,
    write_truth,
)

__all__ = [
    "AnySpec",
    "connected_parts",
    "gen_gaussian_mixture",
    "gen_manifold_noise",
    "gen_rings",
    "generate",
    "ManifoldNoiseSpec",
    "MixtureSpec",
    "preset_spec",
    "PRESETS",
    "read_truth",
    "ring_points",
    "RingSpec",
    "segment_points",
    "SyntheticSample",
    "write_truth",
]
