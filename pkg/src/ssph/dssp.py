"""Reduction of eight-letter DSSP secondary-structure codes to {H, E, C}."""

from .errors import UnknownDsspCode

DSSP_CODES = "HGIEBTSC"

# Helix <- {H, G, I}; strand <- {E, B}; coil <- {T, S, C}.
_REDUCTION = {
    "H": "H", "G": "H", "I": "H",
    "E": "E", "B": "E",
    "T": "C", "S": "C", "C": "C",
}


def reduce_dssp(label: str) -> str:
    """Map one DSSP code to its three-class label. Case-sensitive: lowercase
    input is rejected rather than silently folded."""
    try:
        return _REDUCTION[label]
    except KeyError:
        raise UnknownDsspCode(f"{label!r} is not a DSSP code") from None


def reduce_dssp_string(labels: str) -> str:
    """Reduce every character of a DSSP label string, reporting the first
    offending character with its position."""
    out = []
    for pos, ch in enumerate(labels):
        if ch not in _REDUCTION:
            raise UnknownDsspCode(f"position {pos}: {ch!r} is not a DSSP code")
        out.append(_REDUCTION[ch])
    return "".join(out)
