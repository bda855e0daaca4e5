"""Per-color lower bounds for the vector-demand problem."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import InfeasibleInstance, InputError
from .graph import ColoredGraph


@dataclass(frozen=True)
class DemandVector:
    """``counts[c]`` is the minimum number of color-``c`` nodes a solution must hold."""

    counts: tuple

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(int(k) for k in self.counts))
        if any(k < 0 for k in self.counts):
            raise InputError("demands must be nonnegative")

    def __iter__(self):
        return iter(self.counts)

    def __len__(self):
        return len(self.counts)

    def __getitem__(self, c):
        return self.counts[c]

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def demanded(self) -> tuple:
        """Color ids with a positive demand."""
        return tuple(c for c, k in enumerate(self.counts) if k >= 1)

    @classmethod
    def from_labels(cls, g: ColoredGraph, mapping) -> "DemandVector":
        counts = [0] * g.num_colors
        for label, k in dict(mapping).items():
            counts[g.color_id(label)] = int(k)
        return cls(tuple(counts))

    @classmethod
    def parse(cls, g: ColoredGraph, text: str) -> "DemandVector":
        """Parse ``label=count,label=count``; unlisted colors get demand 0."""
        mapping = {}
        for item in filter(None, (t.strip() for t in text.split(","))):
            label, sep, count = item.partition("=")
            if not sep:
                raise InputError(f"bad demand item {item!r}; expected label=count")
            try:
                mapping[label.strip()] = int(count)
            except ValueError:
                raise InputError(f"bad demand count in {item!r}") from None
        return cls.from_labels(g, mapping)

    def satisfied_by(self, color_counts) -> bool:
        return all(have >= need for have, need in zip(color_counts, self.counts))

    def format(self, g: ColoredGraph) -> str:
        return ",".join(f"{g.color_labels[c]}={k}" for c, k in enumerate(self.counts))


def check_demand(g: ColoredGraph, k: DemandVector, require_positive=True) -> DemandVector:
    """Validate ``k`` against ``g``; raise :class:`InfeasibleInstance` if a class is too small."""
    if not isinstance(k, DemandVector):
        k = DemandVector(tuple(k))
    if len(k) != g.num_colors:
        raise InputError(f"demand vector has {len(k)} entries for {g.num_colors} colors")
    for c, need in enumerate(k):
        have = len(g.color_classes[c])
        if need > have:
            raise InfeasibleInstance(
                f"color {g.color_labels[c]!r} demands {need} nodes but only {have} exist")
    if require_positive and not k.demanded:
        raise InputError("all demands are zero; this is the plain densest subgraph problem (use dsp)")
    return k
