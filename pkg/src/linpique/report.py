"""Plain-text and CSV table rendering shared by the classifier and the CLI."""

from __future__ import annotations

import csv
import io
from collections.abc import Sequence

from linpique.character import char_value
from linpique.permutation import format_cycles
from linpique.pique import LinearPique, Word, word_permutation


def text_table(headers: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    cells = [[str(h) for h in headers]] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]

    def line(r):
        return "  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip()

    rule = "  ".join("-" * w for w in widths)
    return "\n".join([line(cells[0]), rule] + [line(r) for r in cells[1:]]) + "\n"


def csv_text(headers: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(headers)
    writer.writerows(rows)
    return buf.getvalue()


def character_rows(
    piques: Sequence[LinearPique], words: Sequence[Word], ascii_headers: bool = False
) -> tuple[list[str], list[list[object]]]:
    """Rows in the layout ``x·y | R | L | chi(w1) | chi(w2) ...``."""
    chi = "chi" if ascii_headers else "χ"
    headers = ["x·y" if not ascii_headers else "xy", "rho", "lambda", "R", "L"]
    headers += [f"{chi}({w.label(unicode=not ascii_headers)})" for w in words]
    rows = []
    for P in piques:
        row: list[object] = [
            P.formula,
            P.rho,
            P.lam,
            format_cycles(word_permutation(P, Word(1, 0))),
            format_cycles(word_permutation(P, Word(0, 1))),
        ]
        row += [char_value(P, w) for w in words]
        rows.append(row)
    return headers, rows
