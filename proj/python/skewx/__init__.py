"""Free skew extensions R<x1..xn; sigma, delta>: exact normal-form arithmetic,
megainjectivity and primeness probes, truncated skew power series, changes of
variables and evaluation homomorphisms."""

from ._core import (
    DomainError,
    Extension,
    ExprParseError,
    SkewPoly,
    SpecError,
    check_laws,
    eval_hom,
    kill_delta,
    load_ring_spec,
    load_ring_spec_text,
    oracle_mul,
    probe_megainjective,
    probe_prime,
    scalarize_sigma,
    series_mul,
    unit_probe,
    __version__,
)

__all__ = [
    "DomainError",
    "Extension",
    "ExprParseError",
    "SkewPoly",
    "SpecError",
    "check_laws",
    "eval_hom",
    "kill_delta",
    "load_ring_spec",
    "load_ring_spec_text",
    "oracle_mul",
    "probe_megainjective",
    "probe_prime",
    "scalarize_sigma",
    "series_mul",
    "unit_probe",
    "__version__",
]
