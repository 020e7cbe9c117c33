"""Serialization helpers shared by artifact writers.

All artifact files use deterministic formatting: integers in decimal,
reals rendered with 12 significant digits, keys sorted, '\n' newlines.
Map-spec JSON accepts reals either as numbers or as decimal strings
(the schema's preferred form, immune to locale drift).
"""

import json

import numpy as np

SIG_DIGITS = 12


def real(x) -> str:
    """Format one real with 12 significant digits."""
    return f"{float(x):.{SIG_DIGITS - 1}e}"


def parse_real(value) -> float:
    """Accept a real given as a float, int, or decimal string."""
    if isinstance(value, bool):
        raise TypeError("boolean is not a real")
    if isinstance(value, (int, float)):
        return float(value)
    if isinstance(value, str):
        return float(value)
    raise TypeError(f"cannot parse real from {type(value).__name__}")


def jsonable(obj):
    """Recursively convert an object tree into JSON-serializable form.

    Floats become 12-significant-digit decimal strings so repeated runs
    byte-match; numpy scalars and arrays are unwrapped first.
    """
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return jsonable(obj.tolist())
    if isinstance(obj, (np.integer, int)) and not isinstance(obj, bool):
        return int(obj)
    if isinstance(obj, (np.floating, float)):
        return real(obj)
    if isinstance(obj, (np.bool_, bool)):
        return bool(obj)
    return obj


def dump_json(obj, path):
    text = json.dumps(jsonable(obj), indent=2, sort_keys=True) + "\n"
    with open(path, "w", newline="\n") as fh:
        fh.write(text)
    return text
