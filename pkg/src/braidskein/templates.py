"""
Word-level move templates relating closed braids of the same link type.

Two families are instantiated here.  The three-strand flype swaps the
power block sitting in the second-generator slot with the lone crossing
that closes the template.  The exchange move conjugates the top generator
between two blocks braided on the lower strands.  Both moves preserve the
closure's link type, so any template bug is self-detecting: emitted pairs
are cross-checked against the independent polynomial oracle.

On three strands both moves also preserve the resolution output itself.
On four strands the exchange move does not, and the search below
enumerates block pairs to exhibit that divergence.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .homfly import homfly_oracle
from .resolution import resolve
from .skein import SkeinVector
from .words import BraidWord, MoveError, cycle_type, permutation


@dataclass(frozen=True)
class FlypeInstance:
    """Exponents (a, b, c) of the template's three power blocks and the
    sign eps of its lone crossing."""

    a: int
    b: int
    c: int
    eps: int

    def __post_init__(self):
        if self.eps not in (1, -1):
            raise ValueError(f"eps must be +1 or -1, got {self.eps}")

    def weights(self) -> TemplateWeights:
        # every strand of the 3-braid template carries weight one
        return TemplateWeights(1, 1, 1, 1)


@dataclass(frozen=True)
class TemplateWeights:
    w: int
    k: int
    w_prime: int
    k_prime: int

    def __post_init__(self):
        for name in ("w", "k", "w_prime", "k_prime"):
            if getattr(self, name) < 0:
                raise ValueError(f"weight {name} must be non-negative")


def admissible(t: TemplateWeights) -> bool:
    """True when w' - k = k' - w >= 0."""
    return t.w_prime - t.k == t.k_prime - t.w and t.w_prime - t.k >= 0


def _power_block(index: int, power: int) -> list[int]:
    step = index if power > 0 else -index
    return [step] * abs(power)


def flype_pair(f: FlypeInstance) -> tuple[BraidWord, BraidWord]:
    """The two sides of the three-strand flype.

    Left side: s1^a s2^b s1^c s2^eps.  Right side swaps the b-block and the
    eps crossing: s1^a s2^eps s1^c s2^b.  Closures are the same link.
    """
    left = _power_block(1, f.a) + _power_block(2, f.b) + _power_block(1, f.c) + [2 * f.eps]
    right = _power_block(1, f.a) + [2 * f.eps] + _power_block(1, f.c) + _power_block(2, f.b)
    return BraidWord.from_signed(3, left), BraidWord.from_signed(3, right)


@dataclass(frozen=True)
class ExchangeInstance:
    """Blocks u and v braided on the lower n-1 strands of an n-strand word."""

    u: BraidWord
    v: BraidWord


def exchange_pair(e: ExchangeInstance, n: int) -> tuple[BraidWord, BraidWord]:
    """The two sides of the exchange move on n strands.

    Left: u s_{n-1} v s_{n-1}^{-1}.  Right: u s_{n-1}^{-1} v s_{n-1}.  The
    blocks must avoid the top two strands' generator n-1.
    """
    top = n - 1
    for block in (e.u, e.v):
        for letter in block.letters:
            if letter.index > n - 2:
                raise MoveError(
                    f"block generator {letter.index} collides with the "
                    f"exchanged strand on {n} strands"
                )
    u, v = e.u.signed_indices(), e.v.signed_indices()
    left = list(u) + [top] + list(v) + [-top]
    right = list(u) + [-top] + list(v) + [top]
    return BraidWord.from_signed(n, left), BraidWord.from_signed(n, right)


def enumerate_flype_instances(max_power: int) -> Iterator[FlypeInstance]:
    """All instances with |a|, |b|, |c| <= max_power and eps = +-1."""
    span = range(-max_power, max_power + 1)
    for a, b, c, eps in itertools.product(span, span, span, (1, -1)):
        yield FlypeInstance(a, b, c, eps)


def _block_words(n: int, max_len: int) -> list[BraidWord]:
    """All words on n strands up to max_len letters, shortest first."""
    alphabet = [g * s for g in range(1, n) for s in (1, -1)]
    out = []
    for length in range(max_len + 1):
        for combo in itertools.product(alphabet, repeat=length):
            out.append(BraidWord.from_signed(n, combo))
    return out


def enumerate_exchange_instances(n: int, max_block_len: int) -> Iterator[ExchangeInstance]:
    """All block pairs for n-strand exchange with |u|, |v| <= max_block_len."""
    blocks = _block_words(n - 1, max_block_len)
    for u, v in itertools.product(blocks, repeat=2):
        yield ExchangeInstance(u, v)


@dataclass(frozen=True)
class DivergencePair:
    """An exchange-related pair whose resolution outputs differ."""

    left: BraidWord
    right: BraidWord
    left_vector: SkeinVector
    right_vector: SkeinVector
    oracle_equal: bool  # same link type double-checked by the polynomial
    is_knot: bool       # single closure component


def search_exchange_divergence(n: int = 4, max_block_len: int = 3) -> list[DivergencePair]:
    """Find exchange pairs whose resolution outputs differ.

    On three strands the list is empty for every bound tried; on four
    strands small blocks already produce hits.  Every hit is re-verified to
    have equal oracle polynomials, so a diverging pair still closes to the
    same link and the divergence is a property of the resolution, not of
    the link type.
    """
    if n < 3:
        raise ValueError("exchange needs at least 3 strands")
    hits = []
    for instance in enumerate_exchange_instances(n, max_block_len):
        left, right = exchange_pair(instance, n)
        left_vector = resolve(left)
        right_vector = resolve(right)
        if left_vector == right_vector:
            continue
        hits.append(DivergencePair(
            left=left,
            right=right,
            left_vector=left_vector,
            right_vector=right_vector,
            oracle_equal=homfly_oracle(left) == homfly_oracle(right),
            is_knot=len(cycle_type(permutation(left))) == 1,
        ))
    return hits
