"""Explicit quiver representations over exact fields.

A representation attaches a vector space of dimension d_i to every vertex and
a matrix of shape (d_head, d_tail) to every arrow. Hom spaces are computed as
the solution space of the intertwiner system W_a phi_tail = phi_head V_a.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Sequence

import numpy as np

from ..errors import RepresentationError
from ..quiver.core import DimVector, Quiver, as_dim_vector, euler_form
from .field import FieldConfig, as_object_matrix, matrix_rank

logger = logging.getLogger(__name__)

RATIONAL_SAMPLE_RANGE = 9


@dataclass(frozen=True, eq=False)
class Representation:
    """A representation of a quiver with matrices over F_p or Q.

    Attributes:
        quiver: The quiver
        dims: Dimension at each vertex (position k-1 for vertex k)
        maps: One object-dtype matrix per arrow, in the quiver's arrow order
        field: Coefficient field shared by all maps
    """

    quiver: Quiver
    dims: DimVector
    maps: tuple[np.ndarray, ...]
    field: FieldConfig

    def __post_init__(self) -> None:
        dims = as_dim_vector(self.dims, self.quiver.n, bound=None)
        if len(self.maps) != len(self.quiver.arrows):
            raise RepresentationError(
                f"Expected {len(self.quiver.arrows)} arrow maps, got {len(self.maps)}"
            )
        normalized = []
        for k, ((tail, head), matrix) in enumerate(zip(self.quiver.arrows, self.maps), start=1):
            shape = (dims[head - 1], dims[tail - 1])
            matrix = np.asarray(matrix, dtype=object)
            if matrix.size == 0 and 0 in shape:
                matrix = np.zeros(shape, dtype=object)
            if matrix.shape != shape:
                raise RepresentationError(
                    f"Arrow {k} ({tail}->{head}) needs a {shape[0]}x{shape[1]} matrix, "
                    f"got {matrix.shape}"
                )
            out = np.empty(shape, dtype=object)
            for idx, x in np.ndenumerate(matrix):
                out[idx] = self.field.normalize(x)
            normalized.append(out)
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "maps", tuple(normalized))

    @classmethod
    def zero(cls, quiver: Quiver, d: Sequence[int], field: FieldConfig) -> "Representation":
        """All arrow maps zero."""
        d = as_dim_vector(d, quiver.n)
        maps = tuple(
            np.zeros((d[head - 1], d[tail - 1]), dtype=object) for tail, head in quiver.arrows
        )
        return cls(quiver, d, maps, field)

    @property
    def dimension_vector(self) -> DimVector:
        return self.dims

    def arrow_index(self, tail: int, head: int) -> int:
        """0-based position of the arrow tail -> head."""
        try:
            return self.quiver.arrows.index((tail, head))
        except ValueError:
            raise RepresentationError(f"No arrow {tail}->{head} in the quiver") from None

    def map_for(self, tail: int, head: int) -> np.ndarray:
        return self.maps[self.arrow_index(tail, head)]

    def path_map(self, path: Sequence[int]) -> np.ndarray:
        """Composite V_path: V_{path[0]} -> V_{path[-1]} along consecutive arrows."""
        start = path[0]
        result = _identity(self.dims[start - 1])
        for tail, head in zip(path, path[1:]):
            result = _mul(self.map_for(tail, head), result, self.field)
        return result

    def zeroed(self, arrow: int) -> "Representation":
        """Copy with the map on the given 0-based arrow replaced by zero."""
        maps = list(self.maps)
        maps[arrow] = np.zeros(maps[arrow].shape, dtype=object)
        return Representation(self.quiver, self.dims, tuple(maps), self.field)

    def direct_sum(self, other: "Representation") -> "Representation":
        """Block-diagonal direct sum."""
        _require_compatible(self, other)
        maps = []
        for a, b in zip(self.maps, other.maps):
            block = np.zeros((a.shape[0] + b.shape[0], a.shape[1] + b.shape[1]), dtype=object)
            block[: a.shape[0], : a.shape[1]] = a
            block[a.shape[0] :, a.shape[1] :] = b
            maps.append(block)
        dims = tuple(x + y for x, y in zip(self.dims, other.dims))
        return Representation(self.quiver, dims, tuple(maps), self.field)


def _identity(n: int) -> np.ndarray:
    eye = np.zeros((n, n), dtype=object)
    for k in range(n):
        eye[k, k] = 1
    return eye


def _mul(a: np.ndarray, b: np.ndarray, field: FieldConfig) -> np.ndarray:
    out = np.zeros((a.shape[0], b.shape[1]), dtype=object)
    if a.shape[1]:
        out = a.dot(b)
    if field.tag == "prime":
        out = out % field.p if out.size else out
    return out


def _require_compatible(v: Representation, w: Representation) -> None:
    if v.quiver != w.quiver:
        raise RepresentationError("Representations live on different quivers")
    if v.field != w.field:
        raise RepresentationError(f"Field mismatch: {v.field.name} vs {w.field.name}")


def hom_space_dim(v: Representation, w: Representation) -> int:
    """dim Hom(V, W), the solution space of W_a phi_i = phi_j V_a for every arrow a: i -> j.

    The unknowns are the entries of phi_i (shape w_i x v_i) at every vertex;
    the result is their number minus the rank of the stacked constraints.
    """
    _require_compatible(v, w)
    quiver = v.quiver
    offsets = []
    unknowns = 0
    for i in quiver.vertices:
        offsets.append(unknowns)
        unknowns += w.dims[i - 1] * v.dims[i - 1]
    if unknowns == 0:
        return 0

    def var(vertex: int, row: int, col: int) -> int:
        return offsets[vertex - 1] + row * v.dims[vertex - 1] + col

    rows = []
    for (tail, head), v_a, w_a in zip(quiver.arrows, v.maps, w.maps):
        # entry (r, c) of W_a phi_tail - phi_head V_a, r < w_head, c < v_tail
        for r in range(w.dims[head - 1]):
            for c in range(v.dims[tail - 1]):
                row = [0] * unknowns
                for t in range(w.dims[tail - 1]):
                    if w_a[r, t]:
                        row[var(tail, t, c)] += w_a[r, t]
                for t in range(v.dims[head - 1]):
                    if v_a[t, c]:
                        row[var(head, r, t)] -= v_a[t, c]
                rows.append(row)

    rank = matrix_rank(rows, v.field) if rows else 0
    return unknowns - rank


def rigidity_defect(v: Representation) -> int:
    """dim End(V) - <d, d>, which equals dim Ext^1(V, V)."""
    return hom_space_dim(v, v) - euler_form(v.quiver, v.dims, v.dims)


def random_rep(
    quiver: Quiver, d: Sequence[int], field: FieldConfig, seed: int
) -> Representation:
    """Representation with i.i.d. uniform entries, deterministic in the seed.

    Over F_p entries are uniform in 0..p-1; over Q they are uniform integers in
    [-9, 9].
    Logs a warning when p <= 2 max(d)^2.
    """
    d = as_dim_vector(d, quiver.n)
    if field.tag == "prime" and d and field.p <= 2 * max(d) ** 2:
        logger.warning(
            f"F_{field.p} is small for d={list(d)}; random samples may often be non-generic"
        )
    rng = np.random.default_rng(seed)
    maps = []
    for tail, head in quiver.arrows:
        shape = (d[head - 1], d[tail - 1])
        if field.tag == "prime":
            raw = rng.integers(0, field.p, size=shape)
        else:
            raw = rng.integers(-RATIONAL_SAMPLE_RANGE, RATIONAL_SAMPLE_RANGE + 1, size=shape)
        maps.append(as_object_matrix(raw, *shape))
    return Representation(quiver, d, tuple(maps), field)


def _parse_scalar(token: str) -> int | Fraction:
    return Fraction(token) if "/" in token else int(token)


def parse_representation(
    text: str, quiver: Quiver, d: Sequence[int], field: FieldConfig
) -> Representation:
    """Parse the representation file format.

    Each block is a line ``map <arrow-index> <rows> <cols>`` (1-based arrow
    index into the quiver's arrow list) followed by rows*cols entries in
    row-major order, which may span lines. Arrows without a block are zero.

    Raises:
        RepresentationError: On malformed text or shapes that contradict d
    """
    d = as_dim_vector(d, quiver.n)
    tokens = []
    for line in text.splitlines():
        tokens.extend(line.split("#", 1)[0].split())

    maps: dict[int, np.ndarray] = {}
    pos = 0
    while pos < len(tokens):
        if tokens[pos] != "map" or pos + 3 >= len(tokens):
            raise RepresentationError(f"Expected 'map <arrow> <rows> <cols>' at token {pos + 1}")
        try:
            arrow, rows, cols = (int(t) for t in tokens[pos + 1 : pos + 4])
            entries = [_parse_scalar(t) for t in tokens[pos + 4 : pos + 4 + rows * cols]]
        except ValueError as e:
            raise RepresentationError(f"Bad number in map block at token {pos + 1}: {e}") from e
        if not 1 <= arrow <= len(quiver.arrows):
            raise RepresentationError(f"Arrow index {arrow} out of range 1..{len(quiver.arrows)}")
        if arrow in maps:
            raise RepresentationError(f"Arrow {arrow} has two map blocks")
        if len(entries) != rows * cols:
            raise RepresentationError(f"Map for arrow {arrow} is missing entries")
        maps[arrow] = as_object_matrix(entries, rows, cols)
        pos += 4 + rows * cols

    full = tuple(
        maps.get(k, np.zeros((d[head - 1], d[tail - 1]), dtype=object))
        for k, (tail, head) in enumerate(quiver.arrows, start=1)
    )
    return Representation(quiver, d, full, field)


def read_representation(
    path: Path | str, quiver: Quiver, d: Sequence[int], field: FieldConfig
) -> Representation:
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Representation file not found: {path}")
    return parse_representation(path.read_text(encoding="utf-8"), quiver, d, field)


def format_representation(v: Representation) -> str:
    """Text in the representation file format, one row per line."""
    lines = [f"# {v.quiver.descriptor}; d = {list(v.dims)}; field {v.field.name}"]
    for k, ((tail, head), matrix) in enumerate(zip(v.quiver.arrows, v.maps), start=1):
        lines.append(f"map {k} {matrix.shape[0]} {matrix.shape[1]}  # {tail} -> {head}")
        lines.extend(" ".join(str(x) for x in row) for row in matrix)
    return "\n".join(lines) + "\n"


def write_representation(v: Representation, path: Path | str) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_representation(v), encoding="utf-8")
    logger.info(f"Wrote representation to {path}")
    return path
