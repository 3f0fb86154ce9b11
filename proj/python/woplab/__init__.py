import json

from ._core import (
    ParseError,
    Permutation,
    ResourceLimitError,
    apply_template,
    apply_W,
    decode,
    decompose,
    dual,
    encode,
    enumerate,
    lift,
    lift_chain,
    normalize_p,
    project,
    satisfies_star,
)
from . import _core


def catalan(n):
    return int(_core._catalan(n))


def narayana(n, r):
    return int(_core._narayana(n, r))


def count_report(n):
    return json.loads(_core.count_report(n))
