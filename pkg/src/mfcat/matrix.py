"""Dense matrices with Polynomial entries, all over one ring context."""

from __future__ import annotations

from .poly import Polynomial, RingMismatch


class PolyMatrix:
    """Immutable rows x cols matrix of polynomials over a shared ring."""

    __slots__ = ("ring", "rows", "cols", "entries")

    def __init__(self, ring, rows: int, cols: int, entries):
        entries = tuple(entries)
        if rows < 0 or cols < 0:
            raise ValueError("negative matrix shape")
        if len(entries) != rows * cols:
            raise ValueError("expected %d entries, got %d" % (rows * cols, len(entries)))
        for p in entries:
            if not isinstance(p, Polynomial):
                raise TypeError("matrix entries must be Polynomials")
            if p.ring != ring:
                raise RingMismatch("matrix entry in a different ring")
        self.ring = ring
        self.rows = rows
        self.cols = cols
        self.entries = entries

    # -- constructors --------------------------------------------------

    @classmethod
    def from_rows(cls, ring, rows_of_entries) -> "PolyMatrix":
        rows_of_entries = [list(r) for r in rows_of_entries]
        nrows = len(rows_of_entries)
        ncols = len(rows_of_entries[0]) if nrows else 0
        if any(len(r) != ncols for r in rows_of_entries):
            raise ValueError("ragged rows")
        flat = [p for row in rows_of_entries for p in row]
        return cls(ring, nrows, ncols, flat)

    @classmethod
    def zeros(cls, ring, rows: int, cols: int) -> "PolyMatrix":
        z = ring.zero()
        return cls(ring, rows, cols, [z] * (rows * cols))

    @classmethod
    def identity(cls, ring, n: int) -> "PolyMatrix":
        one = ring.one()
        z = ring.zero()
        return cls(ring, n, n, [one if i == j else z for i in range(n) for j in range(n)])

    @classmethod
    def scalar(cls, poly: Polynomial, n: int) -> "PolyMatrix":
        """poly * identity of size n."""
        z = poly.ring.zero()
        return cls(poly.ring, n, n, [poly if i == j else z for i in range(n) for j in range(n)])

    @classmethod
    def block(cls, grid) -> "PolyMatrix":
        """Assemble from a 2d grid of PolyMatrix blocks with matching shapes."""
        grid = [list(r) for r in grid]
        if not grid or not grid[0]:
            raise ValueError("empty block grid")
        ring = grid[0][0].ring
        row_heights = [row[0].rows for row in grid]
        col_widths = [b.cols for b in grid[0]]
        for bi, row in enumerate(grid):
            if len(row) != len(col_widths):
                raise ValueError("ragged block grid")
            for bj, b in enumerate(row):
                if b.ring != ring:
                    raise RingMismatch("blocks over different rings")
                if b.rows != row_heights[bi] or b.cols != col_widths[bj]:
                    raise ValueError("block (%d,%d) has shape %dx%d, expected %dx%d"
                                     % (bi, bj, b.rows, b.cols, row_heights[bi], col_widths[bj]))
        out_rows = []
        for bi, row in enumerate(grid):
            for i in range(row_heights[bi]):
                out_row = []
                for b in row:
                    out_row.extend(b.row(i))
                out_rows.append(out_row)
        total_rows = sum(row_heights)
        total_cols = sum(col_widths)
        flat = [p for r in out_rows for p in r]
        return cls(ring, total_rows, total_cols, flat)

    # -- access ----------------------------------------------------------

    def get(self, i: int, j: int) -> Polynomial:
        return self.entries[i * self.cols + j]

    def row(self, i: int):
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def column(self, j: int):
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    @property
    def is_zero(self) -> bool:
        return all(p.is_zero for p in self.entries)

    def nonzero_items(self):
        for i in range(self.rows):
            base = i * self.cols
            for j in range(self.cols):
                p = self.entries[base + j]
                if not p.is_zero:
                    yield i, j, p

    # -- arithmetic -------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, PolyMatrix):
            raise TypeError("expected a PolyMatrix")
        if self.ring != other.ring:
            raise RingMismatch("matrices over different rings")

    def __add__(self, other):
        self._check(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in matrix addition")
        return PolyMatrix(self.ring, self.rows, self.cols,
                          [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return PolyMatrix(self.ring, self.rows, self.cols, [-p for p in self.entries])

    def __matmul__(self, other):
        self._check(other)
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product: %dx%d @ %dx%d"
                             % (self.rows, self.cols, other.rows, other.cols))
        zero = self.ring.zero()
        out = [zero] * (self.rows * other.cols)
        # sparse-friendly: walk nonzero entries of self only
        for i in range(self.rows):
            base = i * self.cols
            obase = i * other.cols
            for k in range(self.cols):
                a = self.entries[base + k]
                if a.is_zero:
                    continue
                kbase = k * other.cols
                for j in range(other.cols):
                    b = other.entries[kbase + j]
                    if b.is_zero:
                        continue
                    out[obase + j] = out[obase + j] + a * b
        return PolyMatrix(self.ring, self.rows, other.cols, out)

    def scale(self, poly: Polynomial) -> "PolyMatrix":
        return PolyMatrix(self.ring, self.rows, self.cols, [p * poly for p in self.entries])

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(self.ring, self.cols, self.rows,
                          [self.get(i, j) for j in range(self.cols) for i in range(self.rows)])

    def kron(self, other: "PolyMatrix") -> "PolyMatrix":
        """Kronecker product, row-major convention."""
        self._check(other)
        rows = self.rows * other.rows
        cols = self.cols * other.cols
        zero = self.ring.zero()
        out = [zero] * (rows * cols)
        for i in range(self.rows):
            for j in range(self.cols):
                a = self.get(i, j)
                if a.is_zero:
                    continue
                for k in range(other.rows):
                    rbase = (i * other.rows + k) * cols
                    for l in range(other.cols):
                        b = other.get(k, l)
                        if not b.is_zero:
                            out[rbase + j * other.cols + l] = a * b
        return PolyMatrix(self.ring, rows, cols, out)

    def extend(self, new_ring, index_map=None) -> "PolyMatrix":
        return PolyMatrix(new_ring, self.rows, self.cols,
                          [p.extend(new_ring, index_map) for p in self.entries])

    def __eq__(self, other):
        return (
            isinstance(other, PolyMatrix)
            and self.ring == other.ring
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.ring, self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(", ".join(str(p) for p in self.row(i)) for i in range(self.rows))
        return "PolyMatrix(%dx%d: [%s])" % (self.rows, self.cols, body)
