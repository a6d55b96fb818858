"""Concatenative independence of the basis.

A basis is orthogonal when no member can be written as a join of other
members (members may repeat within one join). Constructibility is
decided exactly by prefix-reachability dynamic programming over the
word's positions; ``make_ortho`` deletes constructible members
longest-first until the set is independent.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Collection, Iterable, Iterator, Literal

Source = Literal["seed", "mined"]


@dataclass(frozen=True)
class BasisWord:
    text: str
    source: Source = "seed"
    demand: int = 0  # number of corpus names that asked for this word


class Basis:
    """A mutable set of basis words keyed by text.

    Membership and iteration are over texts; iteration is sorted. The
    orthogonality flag is a cache: ``None`` until checked, cleared by
    any mutation.
    """

    def __init__(self, words: Iterable[BasisWord] = ()):
        self._words: dict[str, BasisWord] = {}
        self._max_length = 0
        self.is_orthogonal: bool | None = None
        for word in words:
            self.add(word)

    def add(self, word: BasisWord) -> None:
        if not word.text:
            raise ValueError("basis words must be non-empty")
        if word.text not in self._words:
            self._words[word.text] = word
            self._max_length = max(self._max_length, len(word.text))
            self.is_orthogonal = None

    def discard(self, text: str) -> None:
        if self._words.pop(text, None) is not None:
            if len(text) == self._max_length:
                self._max_length = max((len(t) for t in self._words), default=0)
            self.is_orthogonal = None

    def word(self, text: str) -> BasisWord:
        return self._words[text]

    @property
    def texts(self) -> frozenset[str]:
        return frozenset(self._words)

    @property
    def max_length(self) -> int:
        return self._max_length

    def __contains__(self, text: object) -> bool:
        return text in self._words

    def __iter__(self) -> Iterator[str]:
        return iter(sorted(self._words))

    def __len__(self) -> int:
        return len(self._words)

    def __repr__(self) -> str:
        return f"Basis({len(self)} words)"


def is_constructible(word: str, others: Collection[str]) -> bool:
    """True iff ``word`` is a join of one or more elements of ``others``."""
    if not word:
        return False
    other_set = others if isinstance(others, (set, frozenset, Basis)) else set(others)
    n = len(word)
    reachable = [False] * (n + 1)
    reachable[0] = True
    for end in range(1, n + 1):
        for start in range(end):
            if reachable[start] and word[start:end] in other_set:
                reachable[end] = True
                break
    return reachable[n]


def count_constructions(word: str, others: Collection[str]) -> int:
    """Number of distinct segmentations of ``word`` into ``others``.

    Distinct means distinct boundary sets; elements may repeat.
    """
    if not word:
        return 0
    other_set = others if isinstance(others, (set, frozenset, Basis)) else set(others)
    n = len(word)
    ways = [0] * (n + 1)
    ways[0] = 1
    for end in range(1, n + 1):
        ways[end] = sum(
            ways[start] for start in range(end) if word[start:end] in other_set
        )
    return ways[n]


def first_construction(word: str, others: Collection[str]) -> list[str] | None:
    """Leftmost-boundary construction of ``word`` from ``others``, if any."""
    other_set = others if isinstance(others, (set, frozenset, Basis)) else set(others)
    n = len(word)
    # suffix_ok[i]: word[i:] is a join of elements of other_set
    suffix_ok = [False] * (n + 1)
    suffix_ok[n] = True
    for start in range(n - 1, -1, -1):
        suffix_ok[start] = any(
            word[start:end] in other_set and suffix_ok[end]
            for end in range(start + 1, n + 1)
        )
    if not suffix_ok[0]:
        return None
    pieces: list[str] = []
    pos = 0
    while pos < n:
        end = next(
            e
            for e in range(pos + 1, n + 1)
            if word[pos:e] in other_set and suffix_ok[e]
        )
        pieces.append(word[pos:end])
        pos = end
    return pieces


def _greedy_constructible(word: str, others: Collection[str]) -> bool:
    """Positional-fill construction check (incomplete by design).

    For each substring candidate in descending length order, the
    candidate is pinned at its first occurrence and the remaining gaps
    are filled by scanning the candidate list in order, placing each
    element at the leftmost occurrence lying wholly inside a gap. The
    word counts as constructible if any starting candidate leads to
    full coverage. This can miss constructions the exact test finds.
    """
    subs = sorted(
        {w for w in others if w and w in word}, key=lambda w: (-len(w), w)
    )
    if not subs:
        return False

    def occurrences(piece: str) -> list[int]:
        hits, pos = [], word.find(piece)
        while pos != -1:
            hits.append(pos)
            pos = word.find(piece, pos + 1)
        return hits

    n = len(word)
    for start_piece in subs:
        covered = [False] * n
        first = word.find(start_piece)
        covered[first : first + len(start_piece)] = [True] * len(start_piece)
        placed = True
        while placed and not all(covered):
            placed = False
            for piece in subs:
                for pos in occurrences(piece):
                    span = range(pos, pos + len(piece))
                    if not any(covered[i] for i in span):
                        for i in span:
                            covered[i] = True
                        placed = True
                        break
                if placed:
                    break
        if all(covered):
            return True
    return False


def is_ortho(basis: Basis) -> tuple[bool, list[tuple[str, list[str]]]]:
    """Exact orthogonality check with witnesses.

    Returns ``(ok, witnesses)`` where each witness pairs a violating
    word with one construction of it from the other members.
    """
    texts = basis.texts
    witnesses: list[tuple[str, list[str]]] = []
    for text in sorted(texts):
        others = texts - {text}
        if is_constructible(text, others):
            construction = first_construction(text, others)
            assert construction is not None
            witnesses.append((text, construction))
    basis.is_orthogonal = not witnesses
    return not witnesses, witnesses


def make_ortho(basis: Basis, heuristic: str = "exact") -> Basis:
    """Delete constructible members until the basis is orthogonal.

    Words are processed longest-first (ties alphabetical); a word is
    removed when it is constructible from the current remaining set.
    ``heuristic="greedy"`` prunes with the positional-fill check instead
    of the exact one. After the pass every removed word is re-verified
    to still be constructible from the survivors (exact check); any
    that is not gets reinstated, protected from further removal, and
    the pass repeats until clean.
    """
    if heuristic not in ("exact", "greedy"):
        raise ValueError(f"unknown ortho heuristic {heuristic!r}")
    check = is_constructible if heuristic == "exact" else _greedy_constructible

    candidates = set(basis.texts)
    protected: set[str] = set()
    while True:
        survivors = set(candidates)
        removed: list[str] = []
        for text in sorted(candidates, key=lambda t: (-len(t), t)):
            if text in protected:
                continue
            if check(text, survivors - {text}):
                survivors.discard(text)
                removed.append(text)
        broken = [t for t in removed if not is_constructible(t, survivors)]
        if not broken:
            break
        protected.update(broken)
        candidates = survivors | set(broken)

    result = Basis(basis.word(text) for text in sorted(survivors))
    result.is_orthogonal = True
    return result
