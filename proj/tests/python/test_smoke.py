# Copyright 2026 The polywit Authors.
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

import json

import pytest

import polywit


def test_builtins_listed():
    assert "commutator" in polywit.builtin_names()
    assert "figure-7" in polywit.builtin_names()


def test_lambda_deficient_word():
    inst = polywit.builtin("example-6.1")
    report = polywit.analyze(inst)
    a1 = report["vertices"][0]
    assert (a1["lambda"], a1["degree"]) == (3, 4)
    assert report["minimal"] is False
    refusal = polywit.find_witness(inst, method="lp", require_long=True)
    assert refusal["feasible"] is False
    assert refusal["farkas"]
    assert polywit.verify(inst, refusal, require_long=True)["refutation"] is True


def test_commutator_certificate():
    inst = polywit.from_words("rank 2\nabAB\n")
    w = polywit.find_witness(inst)
    assert w["feasible"] and w["selected_method"] == "fourvertex"
    assert w["cycles"] == [{"edges": [0, 1, 2, 3], "multiplicity": 1}]
    cert = polywit.surface(inst, w)
    assert cert["chi_S_minus_m"] == -1
    assert cert["chi_S_doubleprime"] == -2


def test_methods_agree_on_feasibility():
    inst = polywit.builtin("remark-2.4")
    for method in ("fourvertex", "lp"):
        w = polywit.find_witness(inst, method=method, require_long=True)
        assert w["feasible"]
        assert polywit.verify(inst, json.dumps(w), require_long=True)["pass"]
        assert polywit.surface(inst, w)["chi_S_minus_m"] < 0


def test_errors_map_to_exceptions():
    with pytest.raises(polywit.TrivialWordError):
        polywit.from_words("rank 2\naA\n")
    with pytest.raises(polywit.ParseError):
        polywit.from_words("no rank line\n")
    with pytest.raises(polywit.PreconditionError, match="3 < 4"):
        polywit.find_witness(polywit.builtin("example-6.1"), method="fourvertex")
    assert issubclass(polywit.PreconditionError, polywit.PolywitError)


def test_graph_json_round_trip():
    inst = polywit.builtin("figure-7")
    again = polywit.Instance.from_graph_json(inst.graph_json())
    assert again.graph_hash() == inst.graph_hash()
    assert again.num_edges == 15
    assert "style=dashed" in polywit._core.aux_digraph_dot(inst)


def test_selftest():
    assert all(line["pass"] for line in polywit.selftest())
