"""Exact construction and verification of band-limited step-profile wavelets.

The heavy lifting lives in the compiled extension ``blwave._core``; the raw
functions exchange descriptors and reports as JSON text so nothing is lost to
floating point. The ``*_dict`` helpers parse that JSON for interactive use.
"""

import json as _json

from ._core import (
    build,
    classify,
    closed_form_dimension,
    dimension,
    gram_entry,
    random_candidate,
    sample_time,
    time_value,
    verify,
    wavelet_set_check,
)

__all__ = [
    "build",
    "build_dict",
    "classify",
    "classify_dict",
    "closed_form_dimension",
    "dimension",
    "dimension_dict",
    "gram_entry",
    "random_candidate",
    "sample_time",
    "time_value",
    "verify",
    "verify_dict",
    "wavelet_set_check",
]


def build_dict(family, n=0, p=0):
    return _json.loads(build(family, n, p))


def verify_dict(descriptor):
    return _json.loads(verify(descriptor))


def dimension_dict(descriptor):
    return _json.loads(dimension(descriptor))


def classify_dict(descriptor, max_k=16):
    return _json.loads(classify(descriptor, max_k))
