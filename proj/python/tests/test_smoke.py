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

import pytest

import addesign as ad


def test_field_golden():
    f = ad.Field(3, 3, [1, 2, 0, 1])
    r = f.root()
    assert str(f) == "GF(3^3; 1,2,0,1)"
    assert (r ** 6).coeffs == [2, 2, 0]
    assert str(f.exp(18)) == "(0,1,1)"
    assert f.subgroup_generator(13) == r ** 2
    assert f.log(r ** 5) == 5
    x = f.element([1, 2, 1])
    assert x + (-x) == f.zero()
    assert (x / x) == f.one()


def test_errors_carry_codes():
    with pytest.raises(ad.Error) as info:
        ad.Field(2, 2, [1, 0, 1])
    assert info.value.code == "NotPrimitivePolynomial"
    with pytest.raises(ad.Error) as info:
        ad.paley_diffset(13)
    assert info.value.code == "BadModulus"
    with pytest.raises(ValueError):
        ad.mult_order(3, 12)


def test_counts():
    assert ad.mult_order(2, 465) == 20
    assert ad.gaussian(4, 2, 2) == 35
    assert ad.bracket(3, 3) == 13
    assert len(ad.pg_points(3, 3)) == 40
    assert len(ad.pg_design(3, 3, 1)["blocks"]) == 130
    assert len(ad.ag_design(2, 3, 1)["blocks"]) == 12


def test_pg23_cyclic():
    ds = ad.difference_set(13, [0, 1, 3, 9])
    emb = ad.cyclic_embedding(ds, 3, poly=[1, 2, 0, 1])
    assert emb["meta"]["sigma_-1"] == "(0,0,0)"
    assert emb["meta"]["sign"] == -1
    assert emb["image"][0] == [0, 0, 1]
    design = ad.develop(ds)
    rep = ad.verify(design, emb)
    assert rep["additive"] and rep["blocks"] == 13
    rep = ad.verify(design, emb, strong=True)
    assert rep["strong"] == "fail"
    assert rep["zero_sum_subsets"] > 13


def test_strong_fano():
    fano = ad.pg_design(2, 2, 1)
    emb = ad.symmetric_strong_embedding(fano)
    rep = ad.verify(fano, emb, strong=True, jobs=2)
    assert rep["strong"] == "pass"
    assert rep["zero_sum_subsets"] == 7
    assert ad.verify(fano, emb, strong=True, cap=10)["strong"] == "skipped"


def test_subspace_pg133():
    big = ad.Field(3, 4, [1, 0, 0, 1, 2])
    design = ad.pg_design_field_model(3, 3, 1, big)
    emb = ad.subspace_embedding_exponents(design, 3, big)
    assert emb["group"] == {"m": 3, "t": 4}
    assert [emb["image"][i] for i in (0, 1, 4, 13)] == [[0, 0, 0, 1], [0, 1, 0, 0], [0, 1, 1, 1], [0, 1, 2, 1]]
    assert ad.verify(design, emb)["additive"]


def test_identity_ag():
    design = ad.ag_design(2, 3, 1)
    points = [[int(c) for c in label.strip("()").split(",")] for label in design["points"]]
    rep = ad.verify(design, ad.identity_embedding(points, 3))
    assert rep["additive"]
