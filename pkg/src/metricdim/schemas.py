"""Published JSON Schemas for every CLI output and the on-disk formats."""

GRAPH = {
    "type": "object",
    "required": ["n", "edges"],
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "edges": {
            "type": "array",
            "items": {
                "type": "array",
                "items": {"type": "integer", "minimum": 0},
                "minItems": 2,
                "maxItems": 2,
            },
        },
    },
}

_VERTEX_LIST = {"type": "array", "items": {"type": "integer", "minimum": 0}}

DIM_OUTPUT = {
    "type": "object",
    "required": ["dim", "basis"],
    "properties": {"dim": {"type": "integer", "minimum": 1}, "basis": _VERTEX_LIST},
}

BASES_OUTPUT = {
    "type": "object",
    "required": ["dim", "bases", "truncated", "membership"],
    "properties": {
        "dim": {"type": "integer", "minimum": 1},
        "bases": {"type": "array", "items": _VERTEX_LIST},
        "truncated": {"type": "boolean"},
        "membership": {"type": "array", "items": {"type": "boolean"}},
    },
}

UPDIM_OUTPUT = {
    "type": "object",
    "required": ["upper_dim"],
    "properties": {"upper_dim": {"type": "integer", "minimum": 1}},
}

ATTDIM_OUTPUT = {
    "type": "object",
    "required": ["attaching_dim", "witness", "attachments"],
    "properties": {
        "attaching_dim": {"type": "integer", "minimum": 0},
        "witness": _VERTEX_LIST,
        "attachments": _VERTEX_LIST,
    },
}

ISO_INDEX_OUTPUT = {
    "type": "object",
    "required": ["isolation_index"],
    "properties": {"isolation_index": {"type": "integer", "minimum": 0}},
}

PROFILE = {
    "type": "object",
    "required": ["component", "order", "attachments", "kind"],
    "properties": {
        "component": {"type": "integer", "minimum": 0},
        "order": {"type": "integer", "minimum": 2},
        "attachments": _VERTEX_LIST,
        "composed_attachments": _VERTEX_LIST,
        "kind": {"enum": ["end", "internal"]},
        "dominant_attachments": {"type": "boolean"},
        "local_landmark_needed": {"type": ["boolean", "null"]},
        "dim": {"type": "integer", "minimum": 1},
        "attaching_dim": {"type": "integer", "minimum": 0},
    },
}

COMPOSE_OUTPUT = {
    "type": "object",
    "required": ["graph", "attachment_vertices", "profiles"],
    "properties": {
        "graph": GRAPH,
        "attachment_vertices": _VERTEX_LIST,
        "profiles": {"type": "array", "items": PROFILE},
    },
}

REPORT = {
    "type": "object",
    "required": ["statement", "hypotheses", "formula", "oracle", "verdict"],
    "properties": {
        "statement": {"type": "string"},
        "hypotheses": {"type": "object", "additionalProperties": {"type": "boolean"}},
        "formula": {"type": ["integer", "null"]},
        "oracle": {"type": ["integer", "null"]},
        "verdict": {
            "enum": [
                "formula-matches",
                "bound-holds",
                "hypotheses-unmet",
                "refuted",
                "unverified",
            ]
        },
        "details": {"type": "object"},
    },
}
