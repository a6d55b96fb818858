"""Candidate segmentations of a name.

Two enumerators produce the per-name sequence candidates:

  * ``enumerate_with_basis`` tiles the name with occurrences of current
    basis words; every maximal uncovered run becomes exactly one
    not-yet-in-basis ("new") segment, so no two adjacent segments are
    both new. The whole name as a single segment is always a candidate.
  * ``enumerate_all`` lists every composition of the name into
    contiguous parts of a minimum length, all parts new (used when
    there is no basis to start from).

Both enumerate distinct boundary sets exactly once, in ascending
segment-count order with ties in leftmost-boundary lexicographic order.
When a cap is given, candidates with fewest segments are kept: levels
are enumerated in full until the cap is reached, then truncated.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import AbstractSet, Container, Mapping


class SegmentKind(str, Enum):
    EXISTING = "existing"
    NEW = "new"


@dataclass(frozen=True)
class Segment:
    text: str
    kind: SegmentKind
    start: int
    length: int


@dataclass(frozen=True)
class SequenceCandidate:
    """One tiling of a name into existing-basis and new segments."""

    name: str
    segments: tuple[Segment, ...]
    eta_total: int
    eta_new: int
    eta_existing: int
    eta_joins: int

    @classmethod
    def from_boundaries(
        cls,
        name: str,
        boundaries: tuple[int, ...],
        existing_spans: Container[tuple[int, int]] = frozenset(),
    ) -> "SequenceCandidate":
        """Build from interior boundary offsets; kinds follow ``existing_spans``."""
        cuts = (0, *boundaries, len(name))
        segments = []
        for start, end in zip(cuts, cuts[1:]):
            if not start < end:
                raise ValueError(f"bad boundaries {boundaries} for {name!r}")
            kind = (
                SegmentKind.EXISTING
                if (start, end) in existing_spans
                else SegmentKind.NEW
            )
            segments.append(Segment(name[start:end], kind, start, end - start))
        n_new = sum(1 for s in segments if s.kind is SegmentKind.NEW)
        return cls(
            name=name,
            segments=tuple(segments),
            eta_total=len(segments),
            eta_new=n_new,
            eta_existing=len(segments) - n_new,
            eta_joins=len(segments) - 1,
        )

    @property
    def boundaries(self) -> tuple[int, ...]:
        return tuple(s.start for s in self.segments[1:])

    @property
    def texts(self) -> tuple[str, ...]:
        return tuple(s.text for s in self.segments)

    def reconstructs(self) -> bool:
        return "".join(self.texts) == self.name


def candidate_words(
    name: str, basis: AbstractSet[str] | Container[str]
) -> dict[str, tuple[int, ...]]:
    """Basis words occurring as substrings of ``name``, with all offsets.

    The name itself is included when it is a basis member. ``basis``
    needs only membership testing; a ``max_length`` attribute, when
    present, bounds the substring scan.
    """
    n = len(name)
    longest = getattr(basis, "max_length", n)
    found: dict[str, list[int]] = {}
    for start in range(n):
        for end in range(start + 1, min(n, start + longest) + 1):
            piece = name[start:end]
            if piece in basis:
                found.setdefault(piece, []).append(start)
    return {word: tuple(offsets) for word, offsets in found.items()}


class SubstringIndex:
    """Occurrences of basis words across a corpus, per word and per name."""

    def __init__(self, names, basis):
        self._per_name = {name: candidate_words(name, basis) for name in names}
        self._per_word: dict[str, list[tuple[str, int]]] = {}
        for name in sorted(self._per_name):
            for word, offsets in sorted(self._per_name[name].items()):
                for offset in offsets:
                    self._per_word.setdefault(word, []).append((name, offset))

    def candidates(self, name: str) -> dict[str, tuple[int, ...]]:
        return self._per_name[name]

    def occurrences(self, word: str) -> tuple[tuple[str, int], ...]:
        return tuple(self._per_word.get(word, ()))


@lru_cache(maxsize=65536)
def _basis_tilings(
    name: str, spans: frozenset[tuple[int, int]], cap: int
) -> tuple[tuple[int, ...], ...]:
    """Boundary tuples (interior cuts) of all tilings, fewest tiles first.

    A tile is either an occurrence span from ``spans`` or a new-segment
    gap; gaps may not be adjacent. Iterative deepening on the tile
    count keeps enumeration bounded when a cap cuts the output.
    """
    n = len(name)
    collected: list[tuple[int, ...]] = []
    for tiles in range(1, n + 1):
        level: list[tuple[int, ...]] = []

        def descend(pos: int, left: int, prev_new: bool, cuts: tuple[int, ...]):
            if pos == n:
                if left == 0:
                    level.append(cuts)
                return
            if left == 0 or n - pos < left:
                return
            for end in range(pos + 1, n + 1):
                if (pos, end) in spans:
                    descend(end, left - 1, False, cuts + (end,))
                elif not prev_new:
                    descend(end, left - 1, True, cuts + (end,))

        descend(0, tiles, False, ())
        collected.extend(level)
        if len(collected) >= cap:
            break
    return tuple(cut[:-1] for cut in collected[:cap])


def enumerate_with_basis(
    name: str, candidates: Mapping[str, tuple[int, ...]], cap: int = 5000
) -> list[SequenceCandidate]:
    """All tilings of ``name`` by the candidate occurrences.

    Gaps between placed words become one new segment each; the full
    name as a single segment is always among the results (as an
    existing segment when the name is itself a candidate word).
    """
    if cap < 1:
        raise ValueError(f"cap must be >= 1, got {cap}")
    spans = frozenset(
        (start, start + len(word))
        for word, offsets in candidates.items()
        for start in offsets
    )
    return [
        SequenceCandidate.from_boundaries(name, cuts, spans)
        for cuts in _basis_tilings(name, spans, cap)
    ]


@lru_cache(maxsize=65536)
def _compositions(
    n: int, min_part: int, include_whole: bool, cap: int | None
) -> tuple[tuple[int, ...], ...]:
    collected: list[tuple[int, ...]] = []
    for parts in range(1, n // min_part + 1):
        if parts == 1 and not include_whole:
            continue
        level: list[tuple[int, ...]] = []

        def descend(pos: int, left: int, cuts: tuple[int, ...]):
            if left == 1:
                if n - pos >= min_part:
                    level.append(cuts)
                return
            for end in range(pos + min_part, n - min_part * (left - 1) + 1):
                descend(end, left - 1, cuts + (end,))

        descend(0, parts, ())
        collected.extend(level)
        if cap is not None and len(collected) >= cap:
            break
    if cap is not None:
        collected = collected[:cap]
    return tuple(collected)


def enumerate_all(
    name: str,
    min_segment: int = 2,
    include_whole: bool = True,
    cap: int | None = None,
) -> list[SequenceCandidate]:
    """Every composition of ``name`` into parts of length >= ``min_segment``.

    All segments are new (there is no basis yet). ``include_whole``
    controls whether the unsplit name counts as a sequence. A name
    shorter than ``min_segment`` yields an empty list.
    """
    if min_segment < 1:
        raise ValueError(f"min_segment must be >= 1, got {min_segment}")
    if len(name) < min_segment:
        return []
    return [
        SequenceCandidate.from_boundaries(name, cuts)
        for cuts in _compositions(len(name), min_segment, include_whole, cap)
    ]
