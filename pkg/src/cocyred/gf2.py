"""Dense exact linear algebra over GF(2).

Matrices are 2-D numpy arrays with entries in {0, 1} (dtype uint8 at the
API level).  The elimination kernels pack rows into uint64 words so that
row operations are word-parallel; this matters for the brute-force
cohomology oracle, whose matrices reach a few thousand rows by ~2^16
columns.

Row-vector convention throughout: row m of a matrix is the image of the
m-th basis element, and a coordinate row x maps to x @ M.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

WORD = 64


def as_bits(a) -> np.ndarray:
    """Validate and return a 2-D uint8 0/1 matrix."""
    m = np.asarray(a, dtype=np.uint8)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got shape {m.shape}")
    if m.size and m.max() > 1:
        raise ValueError("matrix entries must be 0 or 1")
    return m


def pack_rows(a: np.ndarray) -> np.ndarray:
    """Pack each row of a 0/1 matrix into uint64 words (little bit first)."""
    m = as_bits(a)
    rows, cols = m.shape
    nwords = max(1, (cols + WORD - 1) // WORD)
    padded = np.zeros((rows, nwords * WORD), dtype=np.uint8)
    padded[:, :cols] = m
    packed = np.packbits(padded, axis=1, bitorder="little")
    return packed.view(np.uint64).reshape(rows, nwords)


def unpack_rows(words: np.ndarray, cols: int) -> np.ndarray:
    """Inverse of pack_rows."""
    rows = words.shape[0]
    if rows == 0:
        return np.zeros((0, cols), dtype=np.uint8)
    bits = np.unpackbits(words.view(np.uint8).reshape(rows, -1),
                         axis=1, bitorder="little")
    return np.ascontiguousarray(bits[:, :cols])


class Echelon:
    """Incremental row echelon basis over GF(2).

    Rows are packed uint64 arrays.  Supports membership queries and
    rank-increasing insertion; used by greedy row selection and by the
    representative-cocycle filtering step.
    """

    def __init__(self, cols: int):
        self.cols = cols
        self.nwords = max(1, (cols + WORD - 1) // WORD)
        self._rows: list[np.ndarray] = []
        self._pivots: list[int] = []

    @staticmethod
    def _leading_bit(row: np.ndarray) -> int:
        nz = np.nonzero(row)[0]
        if nz.size == 0:
            return -1
        w = nz[-1]
        return int(w) * WORD + int(row[w]).bit_length() - 1

    def reduce(self, row: np.ndarray) -> np.ndarray:
        out = row.copy()
        for piv, basis_row in zip(self._pivots, self._rows):
            w, b = divmod(piv, WORD)
            if (int(out[w]) >> b) & 1:
                out ^= basis_row
        return out

    def contains(self, row: np.ndarray) -> bool:
        return not self.reduce(row).any()

    def add(self, row: np.ndarray) -> bool:
        """Insert row if independent of the current basis; return True if added."""
        red = self.reduce(row)
        piv = self._leading_bit(red)
        if piv < 0:
            return False
        # keep pivots sorted descending so reduce() sees high bits first
        pos = 0
        while pos < len(self._pivots) and self._pivots[pos] > piv:
            pos += 1
        self._pivots.insert(pos, piv)
        self._rows.insert(pos, red)
        return True

    @property
    def rank(self) -> int:
        return len(self._rows)


def greedy_independent_rows(m) -> tuple[list[int], int]:
    """Scan rows in index order, keeping each row iff it enlarges the span.

    Returns (selected 0-based row indices, rank).  The selection is the
    lexicographically first maximal independent subset of rows.
    """
    m = as_bits(m)
    if m.size == 0:
        return [], 0
    packed = pack_rows(m)
    ech = Echelon(m.shape[1])
    selected = []
    for i in range(m.shape[0]):
        if ech.add(packed[i]):
            selected.append(i)
    return selected, ech.rank


def gf2_rank(m) -> int:
    return greedy_independent_rows(m)[1]


def in_row_space(basis, x) -> bool:
    """True iff x lies in the GF(2) span of the given rows."""
    basis = as_bits(basis) if len(basis) else np.zeros((0, len(x)), dtype=np.uint8)
    x = np.asarray(x, dtype=np.uint8).reshape(1, -1)
    if basis.shape[0] and basis.shape[1] != x.shape[1]:
        raise ValueError("row length mismatch")
    ech = Echelon(x.shape[1])
    for row in pack_rows(basis) if basis.shape[0] else []:
        ech.add(row)
    return ech.contains(pack_rows(x)[0])


@dataclass
class SnfResult:
    """Smith normal form over GF(2): D = P @ M @ Q with I_rank top-left in D."""

    D: np.ndarray
    P: np.ndarray
    Q: np.ndarray
    Pinv: np.ndarray
    Qinv: np.ndarray
    rank: int


def smith_normal_form_gf2(m) -> SnfResult:
    """Rank normal form D = P·M·Q over GF(2), with all four transforms.

    Over a field the Smith form is I_rank ⊕ 0; P and Q are accumulated from
    the elementary operations (transvections and swaps are self-inverse, so
    the inverses are accumulated alongside rather than inverted afterwards).
    """
    d = as_bits(m).copy()
    q_rows, r_cols = d.shape
    p = np.eye(q_rows, dtype=np.uint8)
    pinv = np.eye(q_rows, dtype=np.uint8)
    q = np.eye(r_cols, dtype=np.uint8)
    qinv = np.eye(r_cols, dtype=np.uint8)

    rank = 0
    while True:
        sub = d[rank:, rank:]
        nz = np.argwhere(sub)
        if nz.size == 0:
            break
        i, j = int(nz[0, 0]) + rank, int(nz[0, 1]) + rank
        if i != rank:
            d[[rank, i]] = d[[i, rank]]
            p[[rank, i]] = p[[i, rank]]
            pinv[:, [rank, i]] = pinv[:, [i, rank]]
        if j != rank:
            d[:, [rank, j]] = d[:, [j, rank]]
            q[:, [rank, j]] = q[:, [j, rank]]
            qinv[[rank, j]] = qinv[[j, rank]]
        # clear the pivot column with row ops, then the pivot row with column ops
        rows = np.nonzero(d[:, rank])[0]
        rows = rows[rows != rank]
        if rows.size:
            d[rows] ^= d[rank]
            p[rows] ^= p[rank]
            pinv[:, rank] ^= (pinv[:, rows].sum(axis=1) & 1).astype(np.uint8)
        cols = np.nonzero(d[rank, :])[0]
        cols = cols[cols != rank]
        if cols.size:
            d[:, cols] ^= d[:, [rank]]
            q[:, cols] ^= q[:, [rank]]
            qinv[rank] ^= (qinv[cols].sum(axis=0) & 1).astype(np.uint8)
        rank += 1

    return SnfResult(D=d, P=p, Q=q, Pinv=pinv, Qinv=qinv, rank=rank)


def left_kernel(m) -> tuple[int, np.ndarray]:
    """Rank of M and a basis for {x : x @ M = 0}, as rows.

    Augmented elimination: [M | I] is row-reduced with pivots restricted to
    the M block; the identity parts of the zero rows span the kernel.  Works
    on the packed representation, so it scales to the oracle's bar-complex
    matrices.  Accepts either an unpacked 0/1 matrix or (packed, ncols).
    """
    if isinstance(m, tuple):
        packed, ncols = m
        packed = packed.copy()
    else:
        m = as_bits(m)
        ncols = m.shape[1]
        packed = pack_rows(m)
    return _left_kernel_packed(packed, ncols)


def _left_kernel_packed(w: np.ndarray, ncols: int) -> tuple[int, np.ndarray]:
    rows = w.shape[0]
    if rows == 0:
        return 0, np.zeros((0, 0), dtype=np.uint8)
    aug = np.hstack([w, pack_rows(np.eye(rows, dtype=np.uint8))])
    nw = w.shape[1]
    r = 0
    one = np.uint64(1)
    for c in range(ncols):
        if r == rows:
            break
        word, bit = divmod(c, WORD)
        mask = one << np.uint64(bit)
        col = (aug[r:, word] & mask) != 0
        idx = np.nonzero(col)[0]
        if idx.size == 0:
            continue
        piv = r + int(idx[0])
        if piv != r:
            aug[[r, piv]] = aug[[piv, r]]
        below = r + 1 + np.nonzero((aug[r + 1:, word] & mask) != 0)[0]
        if below.size:
            aug[below] ^= aug[r]
        r += 1
    kernel = unpack_rows(np.ascontiguousarray(aug[r:, nw:]), rows)
    return r, kernel
