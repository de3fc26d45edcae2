import io
import typing as tp
from decimal import ROUND_CEILING, Decimal
from fractions import Fraction

import numpy as np
from rich.console import Console
from rich.table import Table

T = tp.TypeVar("T")


def round_up(value: float, decimals: int) -> float:
    """
    Rounds `value` towards +infinity at the given number of decimals.

    The decimal expansion of the shortest repr of `value` is used, so a
    number that already has `decimals` digits is returned unchanged.

    ```python
    round_up(0.100757522, 5)  # 0.10076
    round_up(0.10076, 5)  # 0.10076
    ```
    """
    quantum = Decimal(1).scaleb(-decimals)
    return float(Decimal(repr(float(value))).quantize(quantum, rounding=ROUND_CEILING))


def parse_number(value: tp.Any) -> float:
    """Parses ints, floats and strings such as `"27/164"` or `"1e-9"` into a float."""
    if isinstance(value, bool):
        raise ValueError(f"expected a number, got {value!r}")

    if isinstance(value, (int, float, np.floating, np.integer)):
        return float(value)

    if isinstance(value, str):
        text = value.strip()
        try:
            return float(Fraction(text))
        except (ValueError, ZeroDivisionError):
            return float(text)

    raise ValueError(f"expected a number, got {value!r}")


def format_number(value: tp.Any, full_precision: bool = False) -> str:
    if isinstance(value, (bool, str)) or value is None:
        return str(value)

    if isinstance(value, (int, np.integer)):
        return str(int(value))

    value = float(value)

    if full_precision:
        return repr(value)

    return f"{value:.10g}"


def log_grid(lo: float, hi: float, points: int) -> np.ndarray:
    return np.exp(np.linspace(np.log(lo), np.log(hi), points))


def get_table_repr(*tables: Table, force_terminal: bool = True) -> str:
    f = io.StringIO()
    console = Console(file=f, force_terminal=force_terminal, width=160)

    for table in tables:
        console.print(table)

    return f.getvalue()


def make_table(
    title: tp.Optional[str], columns: tp.Sequence[str], rows: tp.Iterable[tp.Sequence]
) -> Table:
    table = Table(title=title, show_header=True, show_lines=False)

    for i, column in enumerate(columns):
        table.add_column(column, justify="left" if i == 0 else "right")

    for row in rows:
        table.add_row(*[str(value) for value in row])

    return table
