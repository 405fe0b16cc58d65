"""Line-based file formats and the text printers.

Files store true-degree triples only. The shifted layouts used for display
exist only in the ``render_*`` functions.

``BETTI v1``::

    BETTI v1
    codim 2
    0 0 1
    1 2 2

``COHTAB v1``::

    COHTAB v1
    range -6 6
    2 -6 21
"""

from __future__ import annotations

from fractions import Fraction

from .cohomology import CohomologyTable
from .diagrams import BettiDiagram, Window
from .errors import ParseError

BETTI_HEADER = "BETTI v1"
COH_HEADER = "COHTAB v1"


def parse_rational(text: str, line: int | None = None) -> Fraction:
    num, sep, den = text.partition("/")
    try:
        if sep:
            if not den.isdigit() or int(den) == 0:
                raise ValueError
            return Fraction(int(num), int(den))
        return Fraction(int(num))
    except ValueError:
        raise ParseError(f"bad rational {text!r}", line) from None


def _int(text, line):
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"expected an integer, got {text!r}", line) from None


def _lines(text):
    # numbered, stripped, without blank and comment lines
    for n, raw in enumerate(text.splitlines(), start=1):
        s = raw.strip()
        if s and not s.startswith("#"):
            yield n, s.split()


def _triples(rows, check=None):
    seen = {}
    for n, fields in rows:
        if len(fields) != 3:
            raise ParseError(f"expected '<i> <j> <value>', got {' '.join(fields)!r}", n)
        i, j = _int(fields[0], n), _int(fields[1], n)
        v = parse_rational(fields[2], n)
        if i < 0:
            raise ParseError(f"negative index {i}", n)
        if v <= 0:
            raise ParseError(f"value {fields[2]} is not positive", n)
        if (i, j) in seen:
            raise ParseError(f"duplicate entry ({i},{j})", n)
        if check:
            check(i, j, n)
        seen[(i, j)] = v
    return seen


def _header(rows, expected):
    first = next(rows, None)
    if first is None or " ".join(first[1]) != expected:
        raise ParseError(f"missing header {expected!r}", first[0] if first else 1)


def parse_betti(text: str) -> tuple[BettiDiagram, int | None]:
    """Parse a ``BETTI v1`` document into ``(diagram, codim or None)``."""
    rows = _lines(text)
    _header(rows, BETTI_HEADER)
    codim = None
    body = []
    for n, fields in rows:
        if fields[0] == "codim":
            if codim is not None or body or len(fields) != 2:
                raise ParseError("'codim <c>' must appear once, before the entries", n)
            codim = _int(fields[1], n)
            if codim < 0:
                raise ParseError("codim must be nonnegative", n)
        else:
            body.append((n, fields))
    return BettiDiagram(_triples(body)), codim


def write_betti(beta: BettiDiagram, codim: int | None = None) -> str:
    out = [BETTI_HEADER]
    if codim is not None:
        out.append(f"codim {codim}")
    out.extend(f"{i} {j} {v}" for (i, j), v in beta.items())
    return "\n".join(out) + "\n"


def parse_cohtab(text: str) -> CohomologyTable:
    """Parse a ``COHTAB v1`` document; every triple must lie in the declared range."""
    rows = _lines(text)
    _header(rows, COH_HEADER)
    first = next(rows, None)
    if first is None or first[1][0] != "range" or len(first[1]) != 3:
        raise ParseError("expected 'range <d_min> <d_max>'", first[0] if first else None)
    n = first[0]
    lo, hi = _int(first[1][1], n), _int(first[1][2], n)
    if lo > hi:
        raise ParseError(f"empty range {lo}..{hi}", n)

    def check(i, d, line):
        if not lo <= d <= hi:
            raise ParseError(f"twist {d} outside range {lo}..{hi}", line)

    return CohomologyTable(_triples(rows, check), None, lo, hi)


def write_cohtab(gamma: CohomologyTable) -> str:
    out = [COH_HEADER, f"range {gamma.d_min} {gamma.d_max}"]
    out.extend(f"{i} {d} {v}" for (i, d), v in gamma.items())
    return "\n".join(out) + "\n"


def _grid(cells, zero):
    width = max((len(c) for row in cells for c in row), default=1)
    return [" ".join((c if c else zero).rjust(width) for c in row) for row in cells]


def render_betti(beta, window: Window | None = None) -> str:
    """Shifted display: ``beta[i, j]`` sits in column ``i``, row ``j - i``.

    Zeros print as ``-``; with ``window`` given (coefficient tables) every
    position of the window prints, zeros as ``0``, and the rows span the window.
    """
    if window is not None:
        ncols = len(window.a)
        rows = range(min(x - i for i, x in enumerate(window.a)), max(x - i for i, x in enumerate(window.b)) + 1)
    else:
        if not beta:
            return "(zero diagram)\n"
        ncols = max(i for i, _ in beta) + 1
        shifts = [j - i for i, j in beta]
        rows = range(min(shifts), max(shifts) + 1)
    cells = [[str(i) for i in range(ncols)]]
    for r in rows:
        line = []
        for i in range(ncols):
            v = beta[i, r + i]
            if v:
                line.append(str(v))
            elif window is not None and (i, r + i) in window:
                line.append("0")
            else:
                line.append("")
        cells.append(line)
    labels = [""] + [f"{r}:" for r in rows]
    lw = max(len(s) for s in labels)
    body = _grid(cells, "-")
    return "\n".join(f"{lab.rjust(lw)} {row}" for lab, row in zip(labels, body)) + "\n"


def render_cohtab(gamma: CohomologyTable) -> str:
    """Row ``i`` shifted right ``i`` steps: the entry in printed column ``c`` is ``gamma[i, c - i]``.

    The highest row prints first, zeros as ``-`` and the row index sits on the right.
    """
    nrows = max(gamma.nrows, 1)
    cols = range(gamma.d_min, gamma.d_max + nrows)
    cells = []
    for i in reversed(range(nrows)):
        line = []
        for c in cols:
            d = c - i
            line.append(str(gamma[i, d]) if gamma.d_min <= d <= gamma.d_max and gamma[i, d] else "")
        cells.append(line)
    cells.append([str(c) for c in cols])
    body = _grid(cells, "-")
    sep = "-" * len(body[0])
    lines = [f"{row} | {i}" for row, i in zip(body, reversed(range(nrows)))]
    lines.append(sep)
    lines.append(f"{body[-1]} | d\\i")
    return "\n".join(lines) + "\n"
