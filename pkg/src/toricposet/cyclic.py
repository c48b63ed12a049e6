"""Cyclic words: sequences of distinct items up to rotation."""

from __future__ import annotations

import itertools
from typing import Hashable, Iterable, Iterator, Sequence


class CyclicWord(tuple):
    """A sequence of distinct vertices modulo cyclic rotation.

    Stored in the rotation that starts with the smallest entry, so two
    cyclic words compare equal exactly when one is a rotation of the other.

    >>> CyclicWord((3, 1, 2))
    CyclicWord((1, 2, 3))
    >>> CyclicWord((2, 3, 1)) == CyclicWord((1, 2, 3))
    True
    """

    def __new__(cls, word: Iterable[Hashable] = ()):
        word = tuple(word)
        if len(set(word)) != len(word):
            raise ValueError(f"cyclic word entries must be distinct: {word}")
        if word:
            k = word.index(min(word))
            word = word[k:] + word[:k]
        return super().__new__(cls, word)

    def __repr__(self):
        return f"CyclicWord({tuple(self)!r})"

    def rotations(self) -> Iterator[tuple]:
        for k in range(max(len(self), 1)):
            yield tuple(self[k:] + self[:k])

    def restrict(self, keep: Iterable[Hashable]) -> CyclicWord:
        return cyclic_restriction(self, keep)

    def pairs(self) -> Iterator[tuple]:
        """Consecutive pairs ``(w_k, w_{k+1})`` with the index taken mod length."""
        m = len(self)
        for k in range(m):
            yield self[k], self[(k + 1) % m]

    def relabel(self, f) -> CyclicWord:
        return CyclicWord(f(v) for v in self)


def cyclic_restriction(w: Sequence[Hashable], keep: Iterable[Hashable]) -> CyclicWord:
    """Delete the entries of ``w`` outside ``keep``, preserving cyclic order."""
    keep = set(keep)
    missing = keep.difference(w)
    if missing:
        raise ValueError(f"{sorted(missing)} not in the cyclic word {tuple(w)}")
    return CyclicWord(v for v in w if v in keep)


def all_cyclic_words(items: Sequence[Hashable]) -> Iterator[CyclicWord]:
    """The ``(n-1)!`` cyclic orders of ``items``, each once."""
    items = sorted(items)
    if not items:
        yield CyclicWord()
        return
    first, rest = items[0], items[1:]
    for perm in itertools.permutations(rest):
        yield CyclicWord((first,) + perm)
