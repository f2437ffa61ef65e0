import json
import logging
import os
from fractions import Fraction

import pandas as pd

logger = logging.getLogger(__name__)


def to_decimal(value) -> str:
    """
    Exact decimal text for an integer or rational.

    Args:
        value: int, Fraction or sympy Rational

    Returns:
        "123" for integers, "-7/3" for proper fractions.
    """
    q = Fraction(int(value.p), int(value.q)) if hasattr(value, "q") else Fraction(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def render_table(rows: list, fmt: str = "csv", columns: list = None) -> str:
    """Render a list of flat dicts as CSV (through pandas) or as a JSON array."""
    if fmt == "csv":
        frame = pd.DataFrame(rows, columns=columns)
        return frame.to_csv(index=False, lineterminator="\n")
    if fmt == "json":
        return json.dumps(rows, indent=2) + "\n"
    raise ValueError(f"Unknown table format: {fmt}")


def write_text(text: str, path: str):
    folder = os.path.dirname(os.path.abspath(path))
    os.makedirs(folder, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)
    logger.info(f"✓ Wrote {path}")


def dump_json(data) -> str:
    return json.dumps(data, indent=2) + "\n"
