"""Signed permutations: the hyperoctahedral group B_n acting on card slots.

A state is a tuple (c_1, ..., c_n) of signed values with distinct absolute
values covering 1..n; c_p is the signed card sitting at position p.
Generator 0 flips the sign at position 1; generator i >= 1 swaps positions
i and i+1.  The longest element sends every card to minus itself and has
Coxeter length n^2.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

SignedPermutation = tuple[int, ...]


@dataclass(frozen=True)
class Word:
    """Generator sequence over {0, ..., n-1} for rank n."""

    letters: tuple[int, ...]
    n: int

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(q) for q in self.letters))
        if self.n < 1:
            raise ValueError(f"rank must be positive, got {self.n}")
        for q in self.letters:
            if not 0 <= q < self.n:
                raise ValueError(f"letter {q} out of range 0..{self.n - 1}")

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)


def check_signed_permutation(w: SignedPermutation) -> None:
    """Raise unless the absolute values of w are exactly {1, ..., n}."""
    n = len(w)
    if sorted(abs(c) for c in w) != list(range(1, n + 1)):
        raise ValueError(f"{w!r} is not a signed permutation")


def identity(n: int) -> SignedPermutation:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return tuple(range(1, n + 1))


def longest_element(n: int) -> SignedPermutation:
    """(-1, -2, ..., -n): every card negated in place."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return tuple(range(-1, -n - 1, -1))


def apply_generator(w: SignedPermutation, q: int) -> SignedPermutation:
    """Apply one generator: q = 0 negates position 1, q >= 1 swaps q, q+1."""
    n = len(w)
    if not 0 <= q < n:
        raise ValueError(f"letter {q} out of range 0..{n - 1}")
    if q == 0:
        return (-w[0],) + w[1:]
    return w[: q - 1] + (w[q], w[q - 1]) + w[q + 1 :]


def apply_word(start: SignedPermutation, word: Word) -> SignedPermutation:
    """Left-to-right application of the word's generators to the state."""
    if word.n != len(start):
        raise ValueError(f"word rank {word.n} does not match state length {len(start)}")
    w = start
    for q in word:
        w = apply_generator(w, q)
    return w


def is_reduced_word_of_w0(word: Word) -> bool:
    """True iff the word has length n^2 and evaluates to the longest element.

    Any expression of the longest element using exactly n^2 letters is
    automatically reduced, since n^2 is its Coxeter length.
    """
    n = word.n
    if len(word) != n * n:
        return False
    return apply_word(identity(n), word) == longest_element(n)


def enumerate_reduced_words(n: int) -> list[Word]:
    """Every reduced word of the longest element, in lexicographic order.

    Breadth-first search from the identity assigns each of the 2^n * n!
    group elements its Coxeter length; a depth-first walk along strictly
    length-increasing edges then spells out all geodesics to the longest
    element.  Oracle-only: refuses n > 4.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n > 4:
        raise ValueError(f"reduced-word enumeration is capped at n = 4, got {n}")
    start = identity(n)
    target = longest_element(n)
    dist = {start: 0}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        d = dist[w]
        for q in range(n):
            v = apply_generator(w, q)
            if v not in dist:
                dist[v] = d + 1
                queue.append(v)
    assert dist[target] == n * n

    words: list[Word] = []
    path: list[int] = []

    def walk(w: SignedPermutation, d: int) -> None:
        if w == target:
            words.append(Word(tuple(path), n))
            return
        for q in range(n):
            v = apply_generator(w, q)
            if dist[v] == d + 1:
                path.append(q)
                walk(v, d + 1)
                path.pop()

    walk(start, 0)
    return words
