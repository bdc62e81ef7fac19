"""JSON Schemas for everything the package serialises."""

RATIONAL = {
    "type": "object",
    "properties": {"num": {"type": "string", "pattern": "^-?[0-9]+$"}, "den": {"type": "string", "pattern": "^[1-9][0-9]*$"}},
    "required": ["num", "den"],
    "additionalProperties": False,
}

POLY_TU = {
    "type": "array",
    "items": {
        "type": "object",
        "properties": {
            "et": {"type": "integer"},
            "eu": {"type": "integer", "minimum": 0},
            "num": RATIONAL["properties"]["num"],
            "den": RATIONAL["properties"]["den"],
        },
        "required": ["et", "eu", "num", "den"],
        "additionalProperties": False,
    },
}

RING_ELEMENT = {"oneOf": [RATIONAL, POLY_TU]}

SERIES = {
    "type": "object",
    "properties": {"order": {"type": "integer", "minimum": 0}, "coeffs": {"type": "array", "items": RING_ELEMENT}},
    "required": ["order", "coeffs"],
}

SEQ_VALUES = {
    "type": "object",
    "properties": {"values": {"type": "array", "items": RING_ELEMENT}},
    "required": ["values"],
}

STATS = {
    "type": "object",
    "properties": {k: {"type": "integer", "minimum": 1} for k in ("k", "Q", "s", "l")},
    "required": ["k", "Q", "s", "l"],
}

PARTITION = {
    "type": "object",
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "mult": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "stats": STATS,
    },
    "required": ["n", "mult"],
}

FINE_SPEC = {
    "type": "object",
    "properties": {
        "table": {"type": "array", "items": {"type": "array", "minItems": 1, "items": RING_ELEMENT}},
        "tail_constant": RATIONAL,
    },
    "required": ["table"],
}

IDENTITY_REPORT = {
    "type": "object",
    "properties": {
        "identity": {"type": "string"},
        "mode": {"enum": ["symbolic", "evaluated"]},
        "params": {"type": "object"},
        "rows": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "n": {"type": "integer", "minimum": 0},
                    "lhs": RING_ELEMENT,
                    "rhs": RING_ELEMENT,
                    "pass": {"type": "boolean"},
                },
                "required": ["n", "lhs", "rhs", "pass"],
            },
        },
        "overall": {"type": "boolean"},
    },
    "required": ["identity", "mode", "params", "rows", "overall"],
}

EXPAND_OUTPUT = {
    "type": "object",
    "properties": {
        "identity": {"type": "string"},
        "side": {"enum": ["lhs", "rhs"]},
        "mode": {"enum": ["symbolic", "evaluated"]},
        "rows": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {"n": {"type": "integer", "minimum": 1}, "value": RING_ELEMENT},
                "required": ["n", "value"],
            },
        },
    },
    "required": ["identity", "side", "mode", "rows"],
}

PARTITIONS_OUTPUT = {
    "type": "object",
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "count": {"type": "integer", "minimum": 1},
        "partitions": {"type": "array", "items": PARTITION},
    },
    "required": ["n", "count", "partitions"],
}

TRANSFORM_OUTPUT = {
    "type": "object",
    "properties": {
        "direction": {"enum": ["forward", "inverse"]},
        "seq": {"type": "string"},
        "input": SEQ_VALUES,
        "output": SEQ_VALUES,
    },
    "required": ["direction", "seq", "input", "output"],
}

COMMAND_OUTPUT = {
    "verify": IDENTITY_REPORT,
    "fine": IDENTITY_REPORT,
    "heine": IDENTITY_REPORT,
    "expand": EXPAND_OUTPUT,
    "partitions": PARTITIONS_OUTPUT,
    "transform": TRANSFORM_OUTPUT,
}
