"""The cohomological reduction method and its brute-force oracle.

A degree-n cochain on a group of order v is a bit sequence of length v**n;
the bit for the tuple (g_1, ..., g_n) sits at the row-major flat index, so
tuple index T (1-based, as printed) corresponds to flat position T-1.

The coboundary of a degree-n cochain f is

    (df)(h_1,...,h_{n+1}) = f(h_2,...,h_{n+1}) + f(h_1,...,h_n)
                            + sum_j f(h_1,...,h_j h_{j+1},...,h_{n+1})   mod 2

and ``coboundary_generator(G, n, T)`` is d applied to the characteristic
function of the (n-1)-tuple with index T.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

from .gf2 import (Echelon, SnfResult, greedy_independent_rows, left_kernel,
                  pack_rows, smith_normal_form_gf2)
from .groups import FiniteGroup
from .model import CohModel


@dataclass
class Cochain:
    v: int
    n: int
    bits: np.ndarray  # flat (v**n,) uint8

    def __post_init__(self):
        self.bits = np.ascontiguousarray(self.bits, dtype=np.uint8).ravel()
        if self.bits.shape != (self.v ** self.n,):
            raise ValueError(f"need {self.v ** self.n} bits for v={self.v}, n={self.n}")


@dataclass
class CochainBasis:
    entries: list[tuple[str, Cochain]]

    def labels(self) -> list[str]:
        return [lab for lab, _ in self.entries]

    def matrix(self) -> np.ndarray:
        if not self.entries:
            return np.zeros((0, 0), dtype=np.uint8)
        return np.stack([c.bits for _, c in self.entries])

    def __len__(self) -> int:
        return len(self.entries)


@dataclass
class ReductionOutput:
    reps: CochainBasis
    cobs: CochainBasis
    hdim: int
    snf_lower: SnfResult
    snf_upper: SnfResult

    @property
    def basis(self) -> CochainBasis:
        return CochainBasis(self.reps.entries + self.cobs.entries)


@functools.lru_cache(maxsize=64)
def _face_indices(g: FiniteGroup, n: int) -> list[np.ndarray]:
    """Flat-index arrays for the n+2 terms of the degree-n coboundary.

    Each array has length v**(n+1) and maps an (n+1)-tuple to the flat
    index of the n-tuple appearing in one term of the formula: drop-first,
    drop-last, and the n merged tuples.
    """
    v = g.order
    coords = np.indices((v,) * (n + 1)).reshape(n + 1, -1)
    weights = v ** np.arange(n - 1, -1, -1, dtype=np.int64)

    def flatten(slots):
        return (weights[None, :] * np.stack(slots, axis=1)).sum(axis=1)

    terms = [flatten([coords[p] for p in range(1, n + 1)]),
             flatten([coords[p] for p in range(n)])]
    for j in range(n):
        slots = [coords[p] for p in range(j)]
        slots.append(g.mul[coords[j], coords[j + 1]])
        slots.extend(coords[p] for p in range(j + 2, n + 1))
        terms.append(flatten(slots))
    return terms


def bar_codifferential(g: FiniteGroup, n: int, f: Cochain) -> Cochain:
    """d(f) for a degree-n cochain, as a degree-(n+1) cochain."""
    if n < 1:
        raise ValueError("degree must be >= 1")
    if f.n != n or f.v != g.order:
        raise ValueError("cochain does not match group/degree")
    out = np.zeros(g.order ** (n + 1), dtype=np.uint8)
    for idx in _face_indices(g, n):
        out ^= f.bits[idx]
    return Cochain(g.order, n + 1, out)


def coboundary_generator(g: FiniteGroup, n: int, tuple_index: int) -> Cochain:
    """The degree-n coboundary of the characteristic (n-1)-cochain δ_T.

    tuple_index is 1-based, matching the printed ∂_T labels.
    """
    v = g.order
    if not (1 <= tuple_index <= v ** (n - 1)):
        raise IndexError(f"tuple index {tuple_index} out of range")
    delta = np.zeros(v ** (n - 1), dtype=np.uint8)
    delta[tuple_index - 1] = 1
    return bar_codifferential(g, n - 1, Cochain(v, n - 1, delta))


def coboundary_matrix(g: FiniteGroup, n: int, mode: str = "all"):
    """Rows d(δ_T) for the scanned tuple indices T; returns (matrix, labels).

    mode "all" scans every T in 1..v^(n-1); mode "normalized" scans only
    tuples with no identity coordinate.
    """
    v = g.order
    nrows = v ** (n - 1)
    acc = np.zeros((nrows, v ** n), dtype=np.uint8)
    cols = np.arange(v ** n)
    for idx in _face_indices(g, n - 1):
        acc[idx, cols] ^= 1
    if mode == "all":
        keep = np.arange(nrows)
    elif mode == "normalized":
        coords = np.indices((v,) * (n - 1)).reshape(n - 1, -1)
        keep = np.nonzero((coords != g.identity).all(axis=0))[0]
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return acc[keep], [int(T) + 1 for T in keep]


def coboundary_basis(g: FiniteGroup, n: int, mode: str = "all") -> CochainBasis:
    """Greedy independent subset of the coboundary generators, labeled cob:T."""
    if n < 2:
        raise ValueError("coboundary bases start at degree 2")
    rows, labels = coboundary_matrix(g, n, mode)
    selected, _ = greedy_independent_rows(rows)
    v = g.order
    entries = [(f"cob:{labels[i]}", Cochain(v, n, rows[i])) for i in selected]
    return CochainBasis(entries)


def representative_cocycles(model: CohModel, n: int) -> CochainBasis:
    """Representative degree-n cocycles lifted from the model.

    Steps: rank/image of the lower codifferential from its Smith form
    (first l rows of Q^-1), kernel of the upper one (last r-k rows of P),
    first-fit selection of kernel rows outside the image span, then lift
    through the model's projection coefficients.
    """
    if n != model.degree:
        raise ValueError(f"model is for degree {model.degree}, not {n}")
    snf_lo = smith_normal_form_gf2(model.diff[n - 1])
    snf_hi = smith_normal_form_gf2(model.diff[n])
    r = model.dims[n]
    l, k = snf_lo.rank, snf_hi.rank
    image_rows = snf_lo.Qinv[:l]
    kernel_rows = snf_hi.P[k:]

    ech = Echelon(r)
    for row in pack_rows(image_rows) if l else []:
        ech.add(row)
    kept = []
    for row in kernel_rows:
        if ech.add(pack_rows(row.reshape(1, -1))[0]):
            kept.append(row)
    if len(kept) != r - k - l:
        raise AssertionError("kernel filtering did not yield r-k-l representatives")

    v = model.group.order
    entries = []
    for m, row in enumerate(kept, start=1):
        bits = (model.lift_table @ row.astype(np.int64)) % 2
        entries.append((f"rep:{m}", Cochain(v, n, bits.astype(np.uint8))))
    return CochainBasis(entries)


def default_mode(n: int) -> str:
    """Coboundary scan convention: printed degree-2 bases exclude identity
    generators; degree >= 3 bases include them."""
    return "normalized" if n == 2 else "all"


def full_cocycle_basis(model: CohModel, n: int,
                       mode: str | None = None) -> ReductionOutput:
    """Juxtaposed representative + coboundary basis, with joint independence
    asserted."""
    mode = default_mode(n) if mode is None else mode
    reps = representative_cocycles(model, n)
    cobs = coboundary_basis(model.group, n, mode)
    joint = [c.bits for _, c in reps.entries] + [c.bits for _, c in cobs.entries]
    if joint:
        _, rank = greedy_independent_rows(np.stack(joint))
        if rank != len(joint):
            raise AssertionError("representatives and coboundaries are not independent")
    snf_lo = smith_normal_form_gf2(model.diff[n - 1])
    snf_hi = smith_normal_form_gf2(model.diff[n])
    hdim = model.dims[n] - snf_hi.rank - snf_lo.rank
    return ReductionOutput(reps=reps, cobs=cobs, hdim=hdim,
                           snf_lower=snf_lo, snf_upper=snf_hi)


# -- brute-force oracle ----------------------------------------------------

ORACLE_LIMIT = 2 ** 20


class OracleSizeError(ValueError):
    """The bar complex at this size exceeds the oracle guard."""


@dataclass
class BruteForceResult:
    hdim: int
    kernel: np.ndarray  # rows span Ker d^n  (dim_ker, v**n)
    image: np.ndarray   # rows span Im d^{n-1}  (dim_im, v**n)


def _codifferential_matrix_packed(g: FiniteGroup, n: int):
    """Packed matrix of d on degree-n cochains: v**n rows, v**(n+1) columns.

    Assembled in column chunks to bound the unpacked buffer.
    """
    v = g.order
    nrows, ncols = v ** n, v ** (n + 1)
    terms = _face_indices(g, n)
    nwords = (ncols + 63) // 64
    packed = np.zeros((nrows, nwords), dtype=np.uint64)
    chunk = max(64, min(ncols, (1 << 25) // max(nrows, 1) // 64 * 64))
    for start in range(0, ncols, chunk):
        stop = min(ncols, start + chunk)
        buf = np.zeros((nrows, stop - start), dtype=np.uint8)
        cols = np.arange(start, stop)
        for idx in terms:
            buf[idx[start:stop], cols - start] ^= 1
        w0 = start // 64
        packed[:, w0:w0 + (stop - start + 63) // 64] = pack_rows(buf)
    return packed, ncols


def brute_force_cohomology(g: FiniteGroup, n: int) -> BruteForceResult:
    """Cohomology of the full bar cochain complex at degree n.

    Independent of the model path: builds the actual coboundary matrices on
    v**(n-1) and v**n tuples and ranks them.  Guarded by v^(n+1) <= 2^20.
    """
    v = g.order
    if v ** (n + 1) > ORACLE_LIMIT:
        raise OracleSizeError(
            f"v^(n+1) = {v ** (n + 1)} exceeds the oracle guard {ORACLE_LIMIT}")
    if n < 2:
        raise ValueError("oracle supports degree >= 2")
    lower, _ = coboundary_matrix(g, n, mode="all")
    sel, im_rank = greedy_independent_rows(lower)
    image = lower[sel]
    rank, kernel = left_kernel(_codifferential_matrix_packed(g, n))
    ker_dim = v ** n - rank
    return BruteForceResult(hdim=ker_dim - im_rank, kernel=kernel, image=image)
