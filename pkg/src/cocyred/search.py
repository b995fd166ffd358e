"""Exhaustive and sampled enumeration of the 2^m span of a cocycle basis.

Exhaustive mode walks the span in reflected-Gray-code order, so each step
updates the current ±1 tensor with a single pointwise multiplication.  The
index space may be partitioned across workers by its leading bits; counts
and retained witnesses are independent of the partitioning because
retention keeps the numerically smallest combination masks.
"""

from __future__ import annotations

import heapq
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .reduction import Cochain, CochainBasis, ReductionOutput
from .tensor import SignTensor

MAX_EXHAUSTIVE_BITS = 62

PREDICATES = ("improper", "proper", "hadamard2d")


class SpanTooLargeError(ValueError):
    """Exhaustive enumeration refused; use sampling."""


@dataclass
class SearchSpace:
    v: int
    n: int
    labels: list[str]
    bits: np.ndarray  # (m, v**n) uint8 cochain bits

    def __post_init__(self):
        self.bits = np.ascontiguousarray(self.bits, dtype=np.uint8)
        if self.bits.shape != (len(self.labels), self.v ** self.n):
            raise ValueError("bits shape does not match labels and (v, n)")
        if len(self.labels) and \
                np.unique(self.bits, axis=0).shape[0] != len(self.labels):
            raise ValueError("basis cochains must be pairwise distinct")

    @classmethod
    def from_basis(cls, basis: CochainBasis) -> "SearchSpace":
        if not len(basis):
            raise ValueError("empty basis has no search space; pass v and n explicitly")
        first = basis.entries[0][1]
        return cls(v=first.v, n=first.n, labels=basis.labels(), bits=basis.matrix())

    @classmethod
    def from_reduction(cls, out: ReductionOutput) -> "SearchSpace":
        return cls.from_basis(out.basis)

    @property
    def m(self) -> int:
        return len(self.labels)

    def combo_labels(self, mask: int) -> list[str]:
        return [self.labels[i] for i in range(self.m) if (mask >> i) & 1]

    def combo_bits(self, mask: int) -> np.ndarray:
        out = np.zeros(self.v ** self.n, dtype=np.uint8)
        for i in range(self.m):
            if (mask >> i) & 1:
                out ^= self.bits[i]
        return out

    def combo_tensor(self, mask: int) -> SignTensor:
        signs = (1 - 2 * self.combo_bits(mask).astype(np.int8))
        return SignTensor(self.v, self.n, signs.reshape((self.v,) * self.n))


@dataclass
class Witness:
    mask: int
    labels: list[str]
    passed: list[str]


@dataclass
class SearchReport:
    examined: int
    hits: dict[str, int]
    witnesses: list[Witness]
    duration: float
    mode: str
    seed: int | None = None
    extras: dict[str, int] = field(default_factory=dict)


def tensor_of_combination(space: SearchSpace, combo) -> SignTensor:
    """Pointwise product of the selected basis tensors; combo is an iterable
    of labels or a bit mask."""
    if isinstance(combo, int):
        return space.combo_tensor(combo)
    mask = 0
    index = {lab: i for i, lab in enumerate(space.labels)}
    for lab in combo:
        if lab not in index:
            raise KeyError(f"unknown basis label {lab!r}")
        mask |= 1 << index[lab]
    return space.combo_tensor(mask)


class _Tester:
    """Per-process predicate evaluator over a flat ±1 vector."""

    def __init__(self, space: SearchSpace, predicates: tuple[str, ...]):
        v, n = space.v, space.n
        self.v, self.n = v, n
        self.predicates = predicates
        flat = np.arange(v ** n).reshape((v,) * n)
        self.axis_idx = [np.moveaxis(flat, ax, 0).reshape(v, -1) for ax in range(n)]
        self.pair_idx = [(np.moveaxis(flat, (l, j), (0, 1)).reshape(v, v, -1))
                         for l in range(n) for j in range(n) if j != l]
        self.offdiag = ~np.eye(v, dtype=bool)
        self.half = v ** (n - 1)

    def improper(self, pm: np.ndarray) -> bool:
        for idx in self.axis_idx:
            s = pm[idx]
            if (np.matmul(s, s.T)[self.offdiag] != 0).any():
                return False
        return True

    def proper_full(self, pm: np.ndarray) -> bool:
        # orthogonality for every fixing of the n-2 spectator coordinates
        for idx in self.pair_idx:
            a = pm[idx]
            prod = np.einsum("xkr,ykr->xyr", a, a)
            if (prod[self.offdiag] != 0).any():
                return False
        return True

    def hadamard2d(self, pm: np.ndarray) -> bool:
        s = pm[self.axis_idx[0]]
        return not (np.matmul(s, s.T)[self.offdiag] != 0).any()

    def evaluate(self, pm: np.ndarray) -> list[str]:
        passed = []
        improper_known = None
        for pred in self.predicates:
            if pred == "improper":
                improper_known = self.improper(pm)
                if improper_known:
                    passed.append(pred)
            elif pred == "proper":
                # proper implies improper: skip the expensive check when the
                # cheaper one already failed
                if improper_known is False:
                    continue
                if improper_known is None and not self.improper(pm):
                    continue
                if self.proper_full(pm):
                    passed.append(pred)
            elif pred == "hadamard2d":
                if self.hadamard2d(pm):
                    passed.append(pred)
        return passed


class _WitnessHeap:
    """Keeps the `cap` numerically smallest masks (deterministic retention)."""

    def __init__(self, cap: int):
        self.cap = cap
        self._heap: list[tuple[int, tuple[str, ...]]] = []  # max-heap via negation

    def offer(self, mask: int, passed: tuple[str, ...]):
        if self.cap <= 0:
            return
        item = (-mask, passed)
        if len(self._heap) < self.cap:
            heapq.heappush(self._heap, item)
        elif item > self._heap[0]:
            heapq.heapreplace(self._heap, item)

    def items(self) -> list[tuple[int, tuple[str, ...]]]:
        return sorted((-m, p) for m, p in self._heap)


def _gray(i: int) -> int:
    return i ^ (i >> 1)


def _scan_range(space: SearchSpace, predicates: tuple[str, ...],
                start: int, stop: int, cap: int):
    tester = _Tester(space, predicates)
    pm_rows = (1 - 2 * space.bits.astype(np.int32))
    counts = dict.fromkeys(predicates, 0)
    heap = _WitnessHeap(cap)

    mask = _gray(start)
    current = np.ones(space.v ** space.n, dtype=np.int32)
    for i in range(space.m):
        if (mask >> i) & 1:
            current *= pm_rows[i]

    def test(msk):
        passed = tester.evaluate(current)
        for p in passed:
            counts[p] += 1
        if passed:
            heap.offer(msk, tuple(passed))

    test(mask)
    for i in range(start + 1, stop):
        flip = (i & -i).bit_length() - 1
        current *= pm_rows[flip]
        mask ^= 1 << flip
        test(mask)
    return stop - start, counts, heap.items()


def _scan_range_task(args):
    return _scan_range(*args)


def enumerate_span(space: SearchSpace,
                   predicates=("improper",),
                   *,
                   workers: int = 1,
                   sample_count: int | None = None,
                   seed: int = 0,
                   max_witnesses: int = 1024,
                   limit: int | None = None) -> SearchReport:
    """Count predicate hits over the span of the basis.

    Exhaustive mode (the default) visits all 2^m combinations in Gray-code
    order and refuses when m exceeds 62 bits; sampled mode draws
    sample_count masks from a seeded generator.  Counts and witnesses are
    independent of the worker count.
    """
    predicates = tuple(predicates)
    for p in predicates:
        if p not in PREDICATES:
            raise ValueError(f"unknown predicate {p!r}")
    if "hadamard2d" in predicates and space.n != 2:
        raise ValueError("hadamard2d applies only to 2-dimensional spans")
    t0 = time.perf_counter()

    if sample_count is not None:
        import random
        rng = random.Random(seed)
        tester = _Tester(space, predicates)
        counts = dict.fromkeys(predicates, 0)
        heap = _WitnessHeap(max_witnesses)
        pm_rows = (1 - 2 * space.bits.astype(np.int32))
        for _ in range(sample_count):
            mask = rng.getrandbits(space.m) if space.m else 0
            current = np.ones(space.v ** space.n, dtype=np.int32)
            for i in range(space.m):
                if (mask >> i) & 1:
                    current *= pm_rows[i]
            passed = tester.evaluate(current)
            for p in passed:
                counts[p] += 1
            if passed:
                heap.offer(mask, tuple(passed))
        witnesses = [Witness(m, space.combo_labels(m), list(p))
                     for m, p in heap.items()]
        return SearchReport(examined=sample_count, hits=counts,
                            witnesses=witnesses,
                            duration=time.perf_counter() - t0,
                            mode="sampled", seed=seed)

    if space.m > MAX_EXHAUSTIVE_BITS:
        raise SpanTooLargeError(
            f"2^{space.m} combinations exceed exhaustive limits; "
            f"use sampling (--sample)")
    total = 1 << space.m
    if limit is not None:
        total = min(total, limit)

    nworkers = max(1, int(workers))
    nranges = 1
    while nranges < nworkers:
        nranges *= 2
    bounds = [(total * k // nranges, total * (k + 1) // nranges)
              for k in range(nranges)]
    bounds = [(a, b) for a, b in bounds if b > a]

    if nworkers == 1 or len(bounds) == 1:
        results = [_scan_range(space, predicates, a, b, max_witnesses)
                   for a, b in bounds]
    else:
        args = [(space, predicates, a, b, max_witnesses) for a, b in bounds]
        with ProcessPoolExecutor(max_workers=nworkers) as pool:
            results = list(pool.map(_scan_range_task, args))

    examined = sum(r[0] for r in results)
    counts = dict.fromkeys(predicates, 0)
    merged = []
    for _, c, items in results:
        for p in predicates:
            counts[p] += c[p]
        merged.extend(items)
    merged.sort()
    merged = merged[:max_witnesses]
    witnesses = [Witness(m, space.combo_labels(m), list(p)) for m, p in merged]
    return SearchReport(examined=examined, hits=counts, witnesses=witnesses,
                        duration=time.perf_counter() - t0, mode="exhaustive")


def default_workers() -> int:
    env = os.environ.get("COCYRED_WORKERS", "")
    try:
        return max(1, int(env))
    except ValueError:
        return 1
