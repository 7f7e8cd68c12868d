"""
Flag value parsing shared by the request schemas.
"""

__all__ = ("parse_complex", "parse_float_list")


def parse_complex(text: str | complex | float) -> complex:
    """
    "re", "re+imi", "re-imi" or "imi" (a trailing j is accepted too).

    The decimal point is always '.', whatever the locale.
    """
    if isinstance(text, (complex, float, int)):
        return complex(text)
    cleaned = text.strip().replace(" ", "")
    if not cleaned:
        raise ValueError("empty complex value")
    if cleaned[-1] in "iI":
        cleaned = cleaned[:-1] + "j"
    return complex(cleaned)


def parse_float_list(text: str | list) -> list[float]:
    """Comma separated reals, e.g. "1,0.5,2"."""
    if isinstance(text, (list, tuple)):
        return [float(x) for x in text]
    parts = [part.strip() for part in str(text).split(",")]
    if not all(parts):
        raise ValueError(f"malformed list {text!r}")
    return [float(part) for part in parts]
