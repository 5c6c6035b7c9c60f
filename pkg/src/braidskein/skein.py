"""
Exact arithmetic for resolution outputs.

Coefficients live in the ring of integer Laurent polynomials in A with an
ordinary (never inverted) variable B.  A resolution result is a finite
linear combination of partitions of the strand count over that ring; the
partition indexes the descending diagram whose closure has that cycle type.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .words import is_partition_of


class RingDomainError(ValueError):
    """A coefficient left the ring, e.g. a negative exponent on B."""


class DimensionError(ValueError):
    """A vector was given a key that is not a partition of its strand count."""


class LaurentAB:
    """Sparse polynomial sum(c * A^a * B^b) with integer c, any a, b >= 0."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] = ()):
        clean: dict[tuple[int, int], int] = {}
        for (a, b), c in dict(terms).items():
            if b < 0:
                raise RingDomainError(f"negative exponent {b} on B")
            if c:
                clean[(a, b)] = c
        self._terms = clean

    @staticmethod
    def monomial(coeff: int, a_exp: int = 0, b_exp: int = 0) -> LaurentAB:
        return LaurentAB({(a_exp, b_exp): coeff})

    @staticmethod
    def zero() -> LaurentAB:
        return LaurentAB()

    @staticmethod
    def one() -> LaurentAB:
        return LaurentAB.monomial(1)

    def terms(self) -> dict[tuple[int, int], int]:
        """Copy of the term map {(a_exp, b_exp): coeff}, zero-free."""
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentAB) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: LaurentAB) -> LaurentAB:
        out = dict(self._terms)
        for key, c in other._terms.items():
            out[key] = out.get(key, 0) + c
        return LaurentAB(out)

    def __neg__(self) -> LaurentAB:
        return LaurentAB({key: -c for key, c in self._terms.items()})

    def __sub__(self, other: LaurentAB) -> LaurentAB:
        return self + (-other)

    def __mul__(self, other: LaurentAB) -> LaurentAB:
        out: dict[tuple[int, int], int] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                key = (a1 + a2, b1 + b2)
                out[key] = out.get(key, 0) + c1 * c2
        return LaurentAB(out)

    # -- formatting ----------------------------------------------------------

    @staticmethod
    def _monomial_str(a: int, b: int, coeff: int) -> str:
        parts = []
        if a:
            parts.append("A" if a == 1 else f"A^{a}")
        if b:
            parts.append("B" if b == 1 else f"B^{b}")
        mag = abs(coeff)
        if mag != 1 or not parts:
            parts.insert(0, str(mag))
        return "*".join(parts)

    def format(self) -> str:
        """Human form, terms ordered by (b exponent, A exponent)."""
        if not self._terms:
            return "0"
        ordered = sorted(self._terms.items(), key=lambda kv: (kv[0][1], kv[0][0]))
        pieces = []
        for (a, b), c in ordered:
            text = self._monomial_str(a, b, c)
            if not pieces:
                pieces.append(f"-{text}" if c < 0 else text)
            else:
                pieces.append(f"- {text}" if c < 0 else f"+ {text}")
        return " ".join(pieces)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"LaurentAB({self.format()!r})"

    # -- JSON ------------------------------------------------------------------

    def to_json_dict(self) -> dict[str, int]:
        """Keys are "a_exp,b_exp" strings, in the format() term order."""
        ordered = sorted(self._terms.items(), key=lambda kv: (kv[0][1], kv[0][0]))
        return {f"{a},{b}": c for (a, b), c in ordered}

    @staticmethod
    def from_json_dict(data: Mapping[str, int]) -> LaurentAB:
        terms = {}
        for key, c in data.items():
            a_text, _, b_text = key.partition(",")
            terms[(int(a_text), int(b_text))] = int(c)
        return LaurentAB(terms)


A = LaurentAB.monomial(1, 1, 0)
A_INV = LaurentAB.monomial(1, -1, 0)
B = LaurentAB.monomial(1, 0, 1)
NEG_A_INV_B = LaurentAB.monomial(-1, -1, 1)


def partition_str(parts: tuple[int, ...]) -> str:
    return "(" + ",".join(str(p) for p in parts) + ")"


class SkeinVector:
    """A linear combination of partitions of ``strand_count`` over LaurentAB.

    Zero coefficients are dropped on construction, so equal combinations
    compare equal.  Entries are kept in reverse-lexicographic partition
    order, largest part first.
    """

    __slots__ = ("strand_count", "_entries")

    def __init__(self, strand_count: int, entries: Mapping[tuple[int, ...], LaurentAB] = ()):
        clean: dict[tuple[int, ...], LaurentAB] = {}
        for parts, poly in sorted(dict(entries).items(), reverse=True):
            parts = tuple(parts)
            if not is_partition_of(parts, strand_count):
                raise DimensionError(
                    f"{parts} is not a partition of {strand_count}"
                )
            if poly:
                clean[parts] = poly
        self.strand_count = strand_count
        self._entries = clean

    @staticmethod
    def singleton(strand_count: int, parts: tuple[int, ...],
                  coeff: LaurentAB | None = None) -> SkeinVector:
        if coeff is None:
            coeff = LaurentAB.one()
        return SkeinVector(strand_count, {tuple(parts): coeff})

    def entries(self) -> dict[tuple[int, ...], LaurentAB]:
        return dict(self._entries)

    def coefficient(self, parts: tuple[int, ...]) -> LaurentAB:
        return self._entries.get(tuple(parts), LaurentAB.zero())

    def is_zero(self) -> bool:
        return not self._entries

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SkeinVector)
            and self.strand_count == other.strand_count
            and self._entries == other._entries
        )

    def __hash__(self) -> int:
        return hash((self.strand_count, frozenset(self._entries.items())))

    def _check_like(self, other: SkeinVector):
        if self.strand_count != other.strand_count:
            raise DimensionError(
                f"cannot combine vectors on {self.strand_count} and "
                f"{other.strand_count} strands"
            )

    def __add__(self, other: SkeinVector) -> SkeinVector:
        self._check_like(other)
        out = dict(self._entries)
        for parts, poly in other._entries.items():
            out[parts] = out.get(parts, LaurentAB.zero()) + poly
        return SkeinVector(self.strand_count, out)

    def __sub__(self, other: SkeinVector) -> SkeinVector:
        self._check_like(other)
        out = dict(self._entries)
        for parts, poly in other._entries.items():
            out[parts] = out.get(parts, LaurentAB.zero()) - poly
        return SkeinVector(self.strand_count, out)

    def scale(self, factor: LaurentAB) -> SkeinVector:
        return SkeinVector(
            self.strand_count,
            {parts: factor * poly for parts, poly in self._entries.items()},
        )

    def format(self) -> str:
        """E.g. ``"(2): A + B^2 ; (1,1): A*B"``; the zero vector is ``"0"``."""
        if not self._entries:
            return "0"
        return " ; ".join(
            f"{partition_str(parts)}: {poly.format()}"
            for parts, poly in self._entries.items()
        )

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"SkeinVector({self.strand_count}, {self.format()!r})"

    def to_json_dict(self) -> dict[str, dict[str, int]]:
        """Partition keys are comma-joined parts, e.g. "1,1"."""
        return {
            ",".join(str(p) for p in parts): poly.to_json_dict()
            for parts, poly in self._entries.items()
        }

    @staticmethod
    def from_json_dict(strand_count: int, data: Mapping[str, Mapping[str, int]]) -> SkeinVector:
        entries = {}
        for key, poly in data.items():
            parts = tuple(int(p) for p in key.split(","))
            entries[parts] = LaurentAB.from_json_dict(poly)
        return SkeinVector(strand_count, entries)


def vector_sum(strand_count: int, items: Iterable[SkeinVector]) -> SkeinVector:
    total = SkeinVector(strand_count)
    for item in items:
        total = total + item
    return total
