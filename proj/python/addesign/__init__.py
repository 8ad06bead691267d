# Copyright 2026 The addesign Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Additive block designs: finite fields, projective and affine geometries,
difference sets, and group embeddings that turn blocks into zero-sum sets."""

import json

from . import _core
from ._core import (
    Element,
    Error,
    Field,
    bracket,
    gaussian,
    is_prime,
    mult_order,
    pg_points,
    trace,
)

__all__ = [
    "Element",
    "Error",
    "Field",
    "ag_design",
    "bracket",
    "cyclic_embedding",
    "develop",
    "difference_set",
    "gaussian",
    "identity_embedding",
    "is_prime",
    "mult_order",
    "paley_diffset",
    "pg_design",
    "pg_design_field_model",
    "pg_points",
    "pg_strong_embedding",
    "singer_diffset",
    "subspace_embedding_exponents",
    "symmetric_strong_embedding",
    "trace",
    "validate_design",
    "verify",
]


def _doc(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def pg_design(n, q, d):
    return json.loads(_core.pg_design(n, q, d))


def ag_design(n, q, d):
    return json.loads(_core.ag_design(n, q, d))


def pg_design_field_model(n, q, d, big):
    return json.loads(_core.pg_design_field_model(n, q, d, big))


def paley_diffset(v):
    return json.loads(_core.paley_diffset(v))


def singer_diffset(n, q, poly=None):
    return json.loads(_core.singer_diffset(n, q, poly))


def difference_set(v, elems):
    return json.loads(_core.difference_set(v, list(elems)))


def develop(diffset):
    return json.loads(_core.develop(_doc(diffset)))


def validate_design(design):
    return json.loads(_core.validate_design(_doc(design)))


def symmetric_strong_embedding(design):
    return json.loads(_core.symmetric_strong_embedding(_doc(design)))


def cyclic_embedding(source, p, poly=None):
    """source: a difference set document or a cyclically developed design."""
    return json.loads(_core.cyclic_embedding(_doc(source), p, poly))


def pg_strong_embedding(n, q, d):
    return json.loads(_core.pg_strong_embedding(n, q, d))


def subspace_embedding_exponents(design, q, big):
    return json.loads(_core.subspace_embedding_exponents(_doc(design), q, big))


def identity_embedding(points, q):
    return json.loads(_core.identity_embedding([list(p) for p in points], q))


def verify(design, embedding, strong=False, cap=10_000_000, jobs=1):
    return json.loads(_core.verify(_doc(design), _doc(embedding), strong, cap, jobs))
