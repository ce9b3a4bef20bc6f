"""JSON schemas for everything the CLI reads or writes.

Big integers travel as decimal strings.
"""

DECIMAL = {"type": "string", "pattern": r"^-?[0-9]+$"}
INTEGER_OR_DECIMAL = {"anyOf": [{"type": "integer"}, DECIMAL]}
IDENT = {"type": "string", "pattern": r"^[A-Za-z][A-Za-z0-9]*$"}

BOUND_REPORT = {
    "type": "object",
    "required": [
        "p", "n", "d", "interior", "coset_constant", "translate_factor",
        "bound", "warnings", "assumptions",
    ],
    "properties": {
        "p": {"type": "integer", "minimum": 3},
        "n": {"type": "integer", "minimum": 1},
        "d": {"type": "integer", "minimum": 1},
        "segre_degrees": {"type": "array", "items": DECIMAL},
        "interior": DECIMAL,
        "coset_constant": DECIMAL,
        "translate_factor": DECIMAL,
        "bound": DECIMAL,
        "warnings": {"type": "array", "items": {"type": "string"}},
        "assumptions": {"type": "array", "items": {"type": "string"}},
    },
    "additionalProperties": False,
}

JET_PRESENTATION = {
    "type": "object",
    "required": ["p", "r", "base_vars", "generators"],
    "properties": {
        "p": {"type": "integer", "minimum": 3},
        "r": {"type": "integer", "minimum": 0},
        "base_vars": {"type": "array", "items": IDENT, "uniqueItems": True},
        "generators": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "string"}},
        },
        "special_fiber": {"type": "boolean"},
    },
    "additionalProperties": False,
}

CHERN_SERIES = {
    "type": "object",
    "required": ["n", "symbols", "truncation", "components"],
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "symbols": {"type": "array", "items": IDENT, "uniqueItems": True},
        "truncation": {"type": "integer", "minimum": 0},
        "components": {"type": "array", "items": {"type": "string"}, "minItems": 1},
        "p": {"type": "integer"},
        "hypersurfaces": {"type": "array", "items": IDENT},
    },
    "additionalProperties": False,
}

INTERSECTION_TABLE = {
    "type": "object",
    "required": ["n", "symbols", "numbers"],
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "symbols": {"type": "array", "items": IDENT, "uniqueItems": True},
        "numbers": {"type": "object", "additionalProperties": INTEGER_OR_DECIMAL},
    },
}

CI_CONFIG = {
    "allOf": [
        INTERSECTION_TABLE,
        {
            "type": "object",
            "required": ["hypersurfaces"],
            "properties": {
                "p": {"type": "integer"},
                "hypersurfaces": {"type": "array", "items": IDENT, "uniqueItems": True},
            },
        },
    ]
}

DELTA_RESULT = {
    "type": "object",
    "required": ["p", "iterations", "input", "result"],
    "properties": {
        "p": {"type": "integer", "minimum": 3},
        "iterations": {"type": "integer", "minimum": 0},
        "input": {"type": "string"},
        "result": {"type": "string"},
    },
    "additionalProperties": False,
}

ERROR = {
    "type": "object",
    "required": ["error"],
    "properties": {
        "error": {
            "type": "object",
            "required": ["code", "message"],
            "properties": {"code": {"type": "string"}, "message": {"type": "string"}},
        }
    },
}
