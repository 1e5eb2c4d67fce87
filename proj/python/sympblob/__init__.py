"""Exact tensor-space representations of the symplectic blob algebra."""

from ._sympblob import (
    forward_pi,
    generator_matrices,
    lemmas,
    max_supported_n,
    numeric_verify,
    perturbation,
    solve,
    theta_target_strings,
    verify,
)

__all__ = [
    "forward_pi",
    "generator_matrices",
    "lemmas",
    "max_supported_n",
    "numeric_verify",
    "perturbation",
    "solve",
    "theta_target_strings",
    "verify",
]
