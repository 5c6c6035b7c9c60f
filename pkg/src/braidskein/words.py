"""
Braid words and the moves used on them.

A braid on n strands is a word in the generators sigma_1, ..., sigma_{n-1},
stored as a sequence of letters read top to bottom of the diagram.  Strand
positions and generator indices are 1-based throughout: sigma_i crosses the
strands currently in positions i and i+1.  The closure of a word joins each
bottom endpoint to the top endpoint of the same position around the axis.

Sign convention: at a positive letter sigma_i the strand entering at
position i passes OVER the strand entering at position i+1; at a negative
letter it passes under.  Every output of the package is tied to this choice;
the opposite choice mirrors all results.

Each letter carries a ``crossing_id`` that is stable under every move that
keeps the crossing (sign changes, reordering, deletion of other letters).
Only insertion of new letters mints new ids, and ids are never recycled
within a word's lifetime.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence


class WordError(ValueError):
    """Malformed braid word text or inconsistent word data."""


class MoveError(ValueError):
    """A move was requested whose precondition does not hold."""


class Letter(NamedTuple):
    index: int        # generator index i of sigma_i, in [1, n-1]
    sign: int         # +1 or -1
    crossing_id: int


@dataclass(frozen=True)
class BraidWord:
    """An n-strand braid word.  Immutable; every move returns a new word.

    ``next_id`` is the smallest crossing id never used by this word or any
    ancestor it was derived from; it is bookkeeping only and does not take
    part in equality.
    """

    strand_count: int
    letters: tuple[Letter, ...]
    next_id: int | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.strand_count < 1:
            raise WordError(f"strand count must be >= 1, got {self.strand_count}")
        seen_ids = set()
        for letter in self.letters:
            if not 1 <= letter.index < self.strand_count:
                raise WordError(
                    f"generator index {letter.index} out of range for "
                    f"{self.strand_count} strands"
                )
            if letter.sign not in (1, -1):
                raise WordError(f"letter sign must be +1 or -1, got {letter.sign}")
            if letter.crossing_id in seen_ids:
                raise WordError(f"duplicate crossing id {letter.crossing_id}")
            seen_ids.add(letter.crossing_id)
        if self.next_id is None:
            fresh = 1 + max(seen_ids) if seen_ids else 0
            object.__setattr__(self, "next_id", fresh)

    # -- construction ------------------------------------------------------

    @staticmethod
    def from_signed(strand_count: int, signed_indices: Iterable[int]) -> BraidWord:
        """Build a word from signed generator indices, minting ids in order."""
        letters = []
        for k, s in enumerate(signed_indices):
            if s == 0:
                raise WordError("generator index 0 is not allowed")
            letters.append(Letter(abs(s), 1 if s > 0 else -1, k))
        return BraidWord(strand_count, tuple(letters))

    # -- formatting --------------------------------------------------------

    def signed_indices(self) -> tuple[int, ...]:
        return tuple(l.index * l.sign for l in self.letters)

    def format(self) -> str:
        """Inverse of :func:`parse_word`: ``"n: i1 i2 ... ik"``."""
        if not self.letters:
            return f"{self.strand_count}:"
        body = " ".join(str(i) for i in self.signed_indices())
        return f"{self.strand_count}: {body}"

    def __str__(self) -> str:
        return self.format()

    # -- simple queries ----------------------------------------------------

    def crossing_ids(self) -> tuple[int, ...]:
        return tuple(l.crossing_id for l in self.letters)

    def letter_by_id(self, crossing_id: int) -> Letter:
        for letter in self.letters:
            if letter.crossing_id == crossing_id:
                return letter
        raise MoveError(f"no crossing with id {crossing_id}")

    # -- moves -------------------------------------------------------------

    def free_reduce(self) -> BraidWord:
        """Cancel adjacent sigma_i sigma_i^{-1} pairs until none remain."""
        stack: list[Letter] = []
        for letter in self.letters:
            if stack and stack[-1].index == letter.index and stack[-1].sign == -letter.sign:
                stack.pop()
            else:
                stack.append(letter)
        return BraidWord(self.strand_count, tuple(stack), self.next_id)

    def apply_braid_relation_at(self, position: int) -> BraidWord:
        """Rewrite by the braid relation whose pattern starts at ``position``.

        Two patterns are recognized: a far-commutation pair sigma_i sigma_j
        with |i-j| > 1 (any signs), and a sign-coherent triple
        sigma_i sigma_{i+1} sigma_i or sigma_{i+1} sigma_i sigma_{i+1}.
        Crossing ids stay attached to their slot in the rewritten pattern.
        """
        ls = self.letters
        if not 0 <= position < len(ls):
            raise MoveError(f"position {position} out of range")
        if position + 1 < len(ls):
            x, y = ls[position], ls[position + 1]
            if abs(x.index - y.index) > 1:
                swapped = ls[:position] + (y, x) + ls[position + 2:]
                return BraidWord(self.strand_count, swapped, self.next_id)
        if position + 2 < len(ls):
            x, y, z = ls[position:position + 3]
            same_sign = x.sign == y.sign == z.sign
            if same_sign and x.index == z.index and abs(x.index - y.index) == 1:
                new = (
                    Letter(y.index, x.sign, x.crossing_id),
                    Letter(x.index, y.sign, y.crossing_id),
                    Letter(y.index, z.sign, z.crossing_id),
                )
                return BraidWord(self.strand_count, ls[:position] + new + ls[position + 3:], self.next_id)
        raise MoveError(f"no braid relation applies at position {position}")

    def cyclic_rotate(self, k: int) -> BraidWord:
        """Move the first k letters to the back (conjugation of the closure)."""
        if not self.letters:
            return self
        k %= len(self.letters)
        return BraidWord(self.strand_count, self.letters[k:] + self.letters[:k], self.next_id)

    def conjugate_by(self, a: BraidWord) -> BraidWord:
        """Return a * self * a^{-1}; the inserted letters get fresh ids."""
        if a.strand_count != self.strand_count:
            raise MoveError(
                f"conjugator has {a.strand_count} strands, word has {self.strand_count}"
            )
        nid = self.next_id
        front = []
        for letter in a.letters:
            front.append(Letter(letter.index, letter.sign, nid))
            nid += 1
        back = []
        for letter in reversed(a.letters):
            back.append(Letter(letter.index, -letter.sign, nid))
            nid += 1
        return BraidWord(self.strand_count, tuple(front) + self.letters + tuple(back), nid)

    def stabilize(self, sign: int) -> BraidWord:
        """Append sigma_n^{sign} on a new strand n+1."""
        if sign not in (1, -1):
            raise MoveError(f"stabilization sign must be +1 or -1, got {sign}")
        new_letter = Letter(self.strand_count, sign, self.next_id)
        return BraidWord(self.strand_count + 1, self.letters + (new_letter,), self.next_id + 1)

    def destabilize(self) -> BraidWord:
        """Inverse of stabilize: strip a final sigma_{n-1}^{+-1} occurring once."""
        top = self.strand_count - 1
        if not self.letters or self.letters[-1].index != top:
            raise MoveError("last letter is not on the top generator")
        if sum(1 for l in self.letters if l.index == top) != 1:
            raise MoveError("top generator occurs more than once")
        return BraidWord(self.strand_count - 1, self.letters[:-1], self.next_id)

    def change_crossing(self, crossing_id: int) -> BraidWord:
        """Flip the sign of one crossing, keeping its id."""
        out = []
        found = False
        for letter in self.letters:
            if letter.crossing_id == crossing_id:
                out.append(Letter(letter.index, -letter.sign, letter.crossing_id))
                found = True
            else:
                out.append(letter)
        if not found:
            raise MoveError(f"no crossing with id {crossing_id}")
        return BraidWord(self.strand_count, tuple(out), self.next_id)

    def delete_crossing(self, crossing_id: int) -> BraidWord:
        """Remove one crossing (the oriented smoothing of the skein relation)."""
        out = tuple(l for l in self.letters if l.crossing_id != crossing_id)
        if len(out) == len(self.letters):
            raise MoveError(f"no crossing with id {crossing_id}")
        return BraidWord(self.strand_count, out, self.next_id)


def parse_word(text: str) -> BraidWord:
    """Parse ``"n: i1 i2 ... ik"`` into a braid word.

    ``n`` is the strand count; each ``ij`` is a nonzero integer with
    ``|ij| <= n-1``, positive for sigma_{ij} and negative for its inverse.
    Crossing ids are minted in letter order.  Inverse of
    :meth:`BraidWord.format`.
    """
    head, sep, body = text.partition(":")
    if not sep:
        raise WordError(f"expected 'n: letters', got {text!r}")
    try:
        n = int(head.strip())
    except ValueError:
        raise WordError(f"bad strand count token {head.strip()!r}") from None
    if n < 1:
        raise WordError(f"strand count must be >= 1, got {n}")
    signed = []
    for token in body.split():
        try:
            value = int(token)
        except ValueError:
            raise WordError(f"bad letter token {token!r}") from None
        if value == 0 or abs(value) >= n:
            raise WordError(f"letter {token!r} out of range for {n} strands")
        signed.append(value)
    return BraidWord.from_signed(n, signed)


# -- permutations and partitions -------------------------------------------


def permutation(word: BraidWord) -> tuple[int, ...]:
    """Underlying permutation of the word, ignoring signs.

    Entry j-1 of the result is the bottom position reached by the strand
    entering the top at position j.
    """
    n = word.strand_count
    at = list(range(n + 1))  # at[p] = entry position of the strand now at p
    for letter in word.letters:
        i = letter.index
        at[i], at[i + 1] = at[i + 1], at[i]
    images = [0] * n
    for p in range(1, n + 1):
        images[at[p] - 1] = p
    return tuple(images)


def cycle_type(perm: Sequence[int]) -> tuple[int, ...]:
    """Non-increasing cycle lengths; the parts index closure components."""
    n = len(perm)
    seen = [False] * (n + 1)
    lengths = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        size = 0
        p = start
        while not seen[p]:
            seen[p] = True
            size += 1
            p = perm[p - 1]
        lengths.append(size)
    lengths.sort(reverse=True)
    return tuple(lengths)


def partitions_of(n: int) -> list[tuple[int, ...]]:
    """All partitions of n, reverse-lexicographically: (n), ..., (1,...,1)."""
    if n < 1:
        raise ValueError(f"partitions_of needs n >= 1, got {n}")

    def gen(remaining: int, cap: int, prefix: tuple[int, ...]):
        if remaining == 0:
            out.append(prefix)
            return
        for part in range(min(cap, remaining), 0, -1):
            gen(remaining - part, part, prefix + (part,))

    out: list[tuple[int, ...]] = []
    gen(n, n, ())
    return out


def is_partition_of(parts: Sequence[int], n: int) -> bool:
    return (
        all(p >= 1 for p in parts)
        and all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1))
        and sum(parts) == n
    )


def basis_braid(parts: Sequence[int], n: int) -> BraidWord:
    """The basis braid of a partition: descending blocks side by side.

    A block of size k on strands o+1..o+k is the word
    sigma_{o+k-1} ... sigma_{o+1} (top to bottom), so the block closes to a
    single unknotted component.  Blocks are laid out left to right in the
    order the parts are given; the closure's cycle type is the sorted parts.
    """
    if sum(parts) != n or any(p < 1 for p in parts):
        raise ValueError(f"{tuple(parts)} is not a partition of {n}")
    signed = []
    offset = 0
    for part in parts:
        signed.extend(range(offset + part - 1, offset, -1))
        offset += part
    return BraidWord.from_signed(n, signed)
