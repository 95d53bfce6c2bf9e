"""Quiver text parsing and builtin Dynkin quivers.

Two input forms are accepted:

* The quiver file format: ``vertices <n>`` followed by ``arrow <i> <j>`` lines
  (i -> j). ``#`` starts a comment; ``;`` may replace newlines so that a quiver
  fits on one line.
* A builtin descriptor ``<Family><rank>[:<orientation>]``. For A_n the
  orientation is a string of n-1 characters over ``>``/``<``, the k-th one
  orienting the edge k -- k+1 (default all ``>``). D_n and E_n point every edge
  of the standard diagram toward its higher label.
"""

import itertools
import logging
import re
from pathlib import Path

from ..errors import QuiverError
from .core import Quiver
from .dynkin import standard_edges

logger = logging.getLogger(__name__)

_DESCRIPTOR = re.compile(r"^\s*([ADE])(\d+)(?::([<>]*))?\s*$")


def parse_quiver(text: str) -> Quiver:
    """Parse quiver text or a builtin descriptor into a validated Dynkin quiver.

    Raises:
        QuiverError: Malformed text, vertex out of range, loop or duplicate arrow
        NotDynkinError: Some component is not a simply-laced Dynkin diagram
    """
    match = _DESCRIPTOR.match(text)
    if match:
        family, rank, orientation = match.groups()
        quiver = builtin_quiver(family, int(rank), orientation)
    else:
        quiver = _parse_arrow_text(text)

    # Classification runs here so that every parsed quiver is known to be Dynkin
    types = quiver.dynkin_types
    logger.info(f"Parsed quiver {quiver.descriptor}: {[t.name for t in types]}")
    return quiver


def load_quiver(path: Path | str) -> Quiver:
    """Read and parse a quiver file."""
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Quiver file not found: {path}")
    return parse_quiver(path.read_text(encoding="utf-8"))


def _parse_arrow_text(text: str) -> Quiver:
    n = None
    arrows: list[tuple[int, int]] = []
    lines = itertools.chain.from_iterable(line.split(";") for line in text.splitlines())
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        keyword, args = tokens[0].lower(), tokens[1:]
        try:
            values = [int(a) for a in args]
        except ValueError:
            raise QuiverError(f"Entry {lineno}: expected integers in {line!r}") from None

        if keyword == "vertices":
            if n is not None:
                raise QuiverError(f"Entry {lineno}: 'vertices' given twice")
            if len(values) != 1:
                raise QuiverError(f"Entry {lineno}: expected 'vertices <n>'")
            n = values[0]
        elif keyword == "arrow":
            if n is None:
                raise QuiverError(f"Entry {lineno}: 'arrow' before 'vertices'")
            if len(values) != 2:
                raise QuiverError(f"Entry {lineno}: expected 'arrow <i> <j>'")
            arrows.append((values[0], values[1]))
        else:
            raise QuiverError(f"Entry {lineno}: unknown keyword {tokens[0]!r}")

    if n is None:
        raise QuiverError("Quiver text has no 'vertices' line")
    return Quiver.from_arrows(n, arrows)


def builtin_quiver(family: str, rank: int, orientation: str | None = None) -> Quiver:
    """Quiver on a standard diagram.

    Raises:
        QuiverError: Orientation string of the wrong length, or given for D/E
        NotDynkinError: Rank out of range for the family
    """
    edges = standard_edges(family, rank)
    if family == "A":
        if orientation is None or orientation == "":
            orientation = ">" * (rank - 1)
        if len(orientation) != rank - 1:
            raise QuiverError(
                f"A{rank} needs an orientation string of length {rank - 1}, got {orientation!r}"
            )
        arrows = [(k, k + 1) if c == ">" else (k + 1, k) for k, c in enumerate(orientation, 1)]
        label = f"A{rank}:{orientation}" if rank > 1 else "A1"
    else:
        if orientation:
            raise QuiverError(
                f"{family}{rank} takes no orientation string; use an arrow file instead"
            )
        arrows = edges
        label = f"{family}{rank}"
    return Quiver.from_arrows(rank, arrows, label=label)


def equioriented_quiver(n: int) -> Quiver:
    """1 -> 2 -> ... -> n."""
    return builtin_quiver("A", n)


def single_sink_quiver(n: int, s: int) -> Quiver:
    """1 -> ... -> s <- ... <- n."""
    if not 1 <= s <= n:
        raise QuiverError(f"Sink {s} out of range 1..{n}")
    orientation = "".join(">" if k < s else "<" for k in range(1, n))
    return builtin_quiver("A", n, orientation)


def type_a_orientations(n: int) -> list[Quiver]:
    """All 2^(n-1) orientations of A_n on the path labeling."""
    if n == 1:
        return [builtin_quiver("A", 1)]
    return [
        builtin_quiver("A", n, "".join(chars))
        for chars in itertools.product("><", repeat=n - 1)
    ]


