import csv
import io
import typing as tp

from zerocount.types import PathLike
from zerocount.utils import format_number

Row = tp.Union[tp.Mapping[str, tp.Any], tp.Sequence[tp.Any]]


class TSVReport:
    """
    Tab separated report: one header row naming the columns, then one line
    per row in insertion order. Numbers are written with 10 significant
    digits, or as the shortest exact repr with `full_precision=True`.

    Example:

        ```python
        report = TSVReport(["n", "t_first"])
        report.add_row([1, 13.1347251417346937])
        report.dumps()  # "n\\tt_first\\n1\\t13.13472514\\n"
        ```
    """

    def __init__(self, columns: tp.Sequence[str], full_precision: bool = False):
        """
        Arguments:
            columns: column names, written as the header.
            full_precision: write every float with all its digits.
        """
        if len(columns) == 0:
            raise ValueError("a report needs at least one column")

        self.columns = list(columns)
        self.full_precision = full_precision
        self.rows: tp.List[tp.List[str]] = []

    def add_row(self, row: Row):
        if isinstance(row, tp.Mapping):
            missing = [c for c in self.columns if c not in row]
            if missing:
                raise KeyError(f"row is missing columns {missing}")
            values = [row[c] for c in self.columns]
        else:
            values = list(row)

        if len(values) != len(self.columns):
            raise ValueError(
                f"expected {len(self.columns)} values, got {len(values)}"
            )

        self.rows.append([format_number(v, self.full_precision) for v in values])

    def add_rows(self, rows: tp.Iterable[Row]):
        for row in rows:
            self.add_row(row)

    def write(self, f: tp.TextIO):
        writer = csv.writer(f, dialect="excel-tab", lineterminator="\n")
        writer.writerow(self.columns)
        writer.writerows(self.rows)

    def save(self, path: PathLike):
        with open(path, "w", encoding="utf-8", newline="") as f:
            self.write(f)

    def dumps(self) -> str:
        f = io.StringIO()
        self.write(f)
        return f.getvalue()
