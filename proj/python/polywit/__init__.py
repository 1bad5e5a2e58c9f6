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

"""Certify polygonality of word lists in free groups.

Instances come from word lists, built-in examples or graph JSON. Results are
plain dicts decoded from the JSON the command-line tool writes.
"""

import json

from ._core import (
    Instance,
    InternalError,
    LoopError,
    ParseError,
    PolywitError,
    PreconditionError,
    TrivialWordError,
    builtin_names,
)
from . import _core

__all__ = [
    "Instance",
    "InternalError",
    "LoopError",
    "ParseError",
    "PolywitError",
    "PreconditionError",
    "TrivialWordError",
    "analyze",
    "builtin",
    "builtin_names",
    "find_witness",
    "from_words",
    "selftest",
    "surface",
    "verify",
]


def from_words(text):
    """Instance from the word-list format (``rank <n>`` then one word per line)."""
    return Instance.from_words(text)


def builtin(name):
    return Instance.from_builtin(name)


def analyze(instance):
    return json.loads(_core.analyze_json(instance))


def find_witness(instance, method="auto", require_long=False):
    """Witness dict, or an infeasibility certificate when ``feasible`` is False."""
    return json.loads(_core.witness_json(instance, method, require_long))


def verify(instance, witness, require_long=False):
    text = witness if isinstance(witness, str) else json.dumps(witness)
    return json.loads(_core.verify_json(instance, text, require_long))


def surface(instance, witness=None, method="auto"):
    if witness is not None and not isinstance(witness, str):
        witness = json.dumps(witness)
    return json.loads(_core.surface_json(instance, witness, method))


def selftest():
    return [
        {"name": name, "pass": ok, "detail": detail}
        for name, ok, detail in _core.selftest()
    ]
