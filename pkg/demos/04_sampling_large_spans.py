"""Sampling spans that are far beyond exhaustive reach.

The degree-3 basis over Z_10 (cyclic:5) has 91 elements: 2^91 products is
out of the question, and exhaustive mode refuses it.  Seeded sampling
still probes the span deterministically; improper order-10 hits, if any
exist, are an open hunt.
"""

from cocyred import (SearchSpace, SpanTooLargeError, builtin_model,
                     enumerate_span, full_cocycle_basis, parse_group_spec)

spec = parse_group_spec("cyclic:5")
out = full_cocycle_basis(builtin_model(spec, 3), 3, mode="all")
space = SearchSpace.from_reduction(out)
print(f"{spec}: order {spec.order}, degree-3 basis size m = {space.m}")

try:
    enumerate_span(space, ("improper",))
except SpanTooLargeError as exc:
    print(f"exhaustive mode refused: {exc}")

for seed in (1, 2, 3):
    report = enumerate_span(space, ("improper",), sample_count=2000, seed=seed)
    print(f"seed {seed}: sampled {report.examined} products, "
          f"improper hits: {report.hits['improper']} "
          f"({report.duration:.2f}s)")

again = enumerate_span(space, ("improper",), sample_count=2000, seed=1)
print("rerun with seed 1 reproduces the same counts:",
      again.hits)
