"""Named dimension sequences used across tests, scripts and the CLI suite."""

from __future__ import annotations

from .representations import DimensionSequence

LONG_EXAMPLE = (0, 1, 2, 1, 2, 3, 4, 3, 2, 3, 4, 3, 2, 1, 0, 1, 0)
LONG_EXAMPLE_UPDOWN = (2, 1, 4, 2, 4, 0, 1)

CATALOG: dict[str, DimensionSequence] = {
    "point": DimensionSequence((0,)),
    "arrow": DimensionSequence((0, 1, 0)),
    "two-arrows": DimensionSequence((0, 1, 0, 1, 0)),
    "2-cell": DimensionSequence((0, 1, 2, 1, 0)),
    "vertical-pair": DimensionSequence((0, 1, 2, 1, 2, 1, 0)),
    "3-cell": DimensionSequence((0, 1, 2, 3, 2, 1, 0)),
    "long": DimensionSequence(LONG_EXAMPLE),
}


def catalog_sequences(max_size: int | None = None) -> list[DimensionSequence]:
    return [s for s in CATALOG.values() if max_size is None or len(s) <= max_size]
