"""JSON helpers: exact rationals travel as "p/q" strings."""

from __future__ import annotations

import json
from dataclasses import is_dataclass
from fractions import Fraction

from .partitions import Abacus, AbacusRow, ChargedPartition, Multipartition
from .weights import CylindricalWeight


class SchemaError(ValueError):
    pass


def to_jsonable(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        raise TypeError("floats are not allowed in exact output")
    if isinstance(obj, CylindricalWeight):
        return weight_to_json(obj)
    if isinstance(obj, ChargedPartition):
        return {"parts": list(obj.parts), "charge": obj.charge}
    if isinstance(obj, Multipartition):
        return {"e": obj.e, "parts": [list(c.parts) for c in obj.components], "charges": list(obj.charges)}
    if isinstance(obj, (Abacus, AbacusRow)):
        return obj.to_json()
    if hasattr(obj, "to_json"):
        return to_jsonable(obj.to_json())
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(x) for x in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted(to_jsonable(x) for x in obj)
    if is_dataclass(obj):
        return {k: to_jsonable(v) for k, v in obj.__dict__.items()}
    raise TypeError("cannot serialize %r" % (obj,))


def dumps(obj) -> str:
    return json.dumps(to_jsonable(obj), sort_keys=True, indent=2) + "\n"


def rational(x) -> Fraction:
    if isinstance(x, bool):
        raise SchemaError("expected a rational, got a boolean")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x)
        except (ValueError, ZeroDivisionError) as exc:
            raise SchemaError("bad rational %r" % x) from exc
    raise SchemaError("expected an integer or a 'p/q' string, got %r" % (x,))


def integer(x) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise SchemaError("expected an integer, got %r" % (x,))
    return x


def int_list(x) -> list:
    if not isinstance(x, list):
        raise SchemaError("expected a list of integers, got %r" % (x,))
    return [integer(v) for v in x]


def require(d: dict, key: str):
    if not isinstance(d, dict) or key not in d:
        raise SchemaError("missing field %r" % key)
    return d[key]


def weight_to_json(w: CylindricalWeight) -> dict:
    return {"e": w.e, "level": w.level, "t": list(w.t), "eta": w.eta}


def weight_from_json(d: dict) -> CylindricalWeight:
    try:
        return CylindricalWeight(integer(require(d, "e")), integer(require(d, "level")),
                                 tuple(int_list(require(d, "t"))), integer(d.get("eta", 0)))
    except SchemaError:
        raise
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc
