"""JSON Schemas (draft 2020-12) for the machine-readable outputs."""

_POINT = {"type": "string", "pattern": r"^(0|-?\d+/\d+)$"}
_WORD = {"type": "string", "minLength": 1}
_RATIONAL = {"type": "string", "pattern": r"^-?\d+(/\d+)?$"}
_NAT = {"type": "integer", "minimum": 0}

INTERVAL = {
    "type": "object",
    "required": ["num", "depth", "base"],
    "properties": {"num": _NAT, "depth": _NAT, "base": {"type": "integer", "minimum": 2}},
    "additionalProperties": False,
}

TABLE = {
    "type": "object",
    "required": ["base", "rows"],
    "properties": {
        "base": {"type": "integer", "minimum": 2},
        "rows": {"type": "array", "minItems": 1, "items": {
            "type": "object", "required": ["a", "b"],
            "properties": {"a": _WORD, "b": _WORD}, "additionalProperties": False}},
    },
    "additionalProperties": False,
}

_BARE_INTERVAL = {
    "type": "object",
    "required": ["num", "depth"],
    "properties": {"num": _NAT, "depth": _NAT},
    "additionalProperties": False,
}

PLMAP = {
    "type": "object",
    "required": ["base", "pieces"],
    "properties": {
        "base": {"type": "integer", "minimum": 2},
        "pieces": {"type": "array", "minItems": 1, "items": {
            "type": "object", "required": ["dom", "ran"],
            "properties": {"dom": _BARE_INTERVAL, "ran": _BARE_INTERVAL},
            "additionalProperties": False}},
    },
    "additionalProperties": False,
}

CUNTZ_SUM = {
    "type": "object",
    "required": ["base", "terms"],
    "properties": {
        "base": {"type": "integer", "minimum": 2},
        "terms": {"type": "array", "items": {
            "type": "object", "required": ["coeff", "a", "b"],
            "properties": {"coeff": _RATIONAL, "a": _WORD, "b": _WORD},
            "additionalProperties": False}},
    },
    "additionalProperties": False,
}

ORBIT = {"type": "array", "items": _POINT}

MATRIX = {
    "type": "object",
    "required": ["basis", "entries", "overflow"],
    "properties": {
        "basis": {"type": "array", "items": _POINT},
        "entries": {"type": "array", "items": {
            "type": "array", "prefixItems": [_NAT, _NAT, _RATIONAL],
            "minItems": 3, "maxItems": 3}},
        "overflow": {"type": "array", "items": {
            "type": "object", "required": ["from", "to", "coeff"],
            "properties": {"from": _POINT, "to": _POINT, "coeff": _RATIONAL},
            "additionalProperties": False}},
    },
    "additionalProperties": False,
}

BY_NAME = {"interval": INTERVAL, "table": TABLE, "plmap": PLMAP,
           "sum": CUNTZ_SUM, "orbit": ORBIT, "matrix": MATRIX}
