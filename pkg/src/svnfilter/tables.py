"""Exact grade formatting and row/column table rendering."""

from __future__ import annotations

from fractions import Fraction

from .core import SVNSet


def format_grade(g: Fraction) -> str:
    """Shortest exact decimal if the grade terminates in base ten, else ``p/q``."""
    g = Fraction(g)
    d = g.denominator
    twos = fives = 0
    while d % 2 == 0:
        d //= 2
        twos += 1
    while d % 5 == 0:
        d //= 5
        fives += 1
    if d != 1:
        return f"{g.numerator}/{g.denominator}"
    if g.denominator == 1:
        return str(g.numerator)
    places = max(twos, fives)
    digits = str(g.numerator * 10**places // g.denominator).rjust(places + 1, "0")
    return f"{digits[:-places]}.{digits[-places:]}".rstrip("0")


def set_rows(a: SVNSet) -> dict[str, list[str]]:
    return {u: [format_grade(x) for x in a.triple(u)] for u in a.universe}


def render_set(a: SVNSet, name: str | None = None) -> str:
    """One row per element with columns mu, sigma, nu."""
    header = [name or "", "mu", "sigma", "nu"]
    body = [[u, *cells] for u, cells in set_rows(a).items()]
    return _align([header] + body)


def _align(rows: list[list[str]]) -> str:
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows)
