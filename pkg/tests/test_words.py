"""Braid word parsing, permutations, partitions, and moves."""

from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from braidskein.words import (
    BraidWord,
    Letter,
    MoveError,
    WordError,
    basis_braid,
    cycle_type,
    is_partition_of,
    parse_word,
    partitions_of,
    permutation,
)


def words(max_strands=5, max_len=8):
    def build(n, signed):
        return BraidWord.from_signed(n, signed)

    return st.integers(2, max_strands).flatmap(
        lambda n: st.builds(
            build,
            st.just(n),
            st.lists(
                st.integers(1, n - 1).flatmap(
                    lambda i: st.sampled_from([i, -i])
                ),
                max_size=max_len,
            ),
        )
    )


# -- parsing and formatting --------------------------------------------------


def test_parse_basic():
    w = parse_word("3: 1 -2 1")
    assert w.strand_count == 3
    assert w.signed_indices() == (1, -2, 1)
    assert w.crossing_ids() == (0, 1, 2)


def test_parse_empty_word():
    w = parse_word("4:")
    assert w.strand_count == 4
    assert w.letters == ()
    assert w.format() == "4:"


def test_parse_rejects_garbage():
    for bad in ["", "3", "x: 1", "3: 0", "3: 3", "3: -3", "3: 1 q", "0: "]:
        with pytest.raises(WordError):
            parse_word(bad)


def test_word_validates_letters():
    with pytest.raises(WordError):
        BraidWord(2, (Letter(2, 1, 0),))
    with pytest.raises(WordError):
        BraidWord(3, (Letter(1, 2, 0),))
    with pytest.raises(WordError):
        BraidWord(3, (Letter(1, 1, 0), Letter(2, 1, 0)))


@given(words())
def test_format_parse_round_trip(w):
    back = parse_word(w.format())
    assert back.strand_count == w.strand_count
    assert back.signed_indices() == w.signed_indices()


# -- permutation and cycle type ----------------------------------------------


def test_permutation_examples():
    assert permutation(parse_word("3:")) == (1, 2, 3)
    assert permutation(parse_word("2: 1")) == (2, 1)
    assert permutation(parse_word("2: 1 1")) == (1, 2)
    # sign never matters for the underlying permutation
    assert permutation(parse_word("3: 1 -2")) == permutation(parse_word("3: 1 2"))


def test_cycle_type_examples():
    assert cycle_type(permutation(parse_word("2: 1 1 1"))) == (2,)
    assert cycle_type(permutation(parse_word("2: 1 1"))) == (1, 1)
    assert cycle_type(permutation(parse_word("3: 1 2"))) == (3,)
    assert cycle_type(permutation(parse_word("6: 2 5 4"))) == (3, 2, 1)


@given(words())
def test_cycle_type_is_partition(w):
    ct = cycle_type(permutation(w))
    assert is_partition_of(ct, w.strand_count)


# -- partitions ---------------------------------------------------------------


def brute_partitions(n):
    found = set()

    def rec(remaining, cap, acc):
        if remaining == 0:
            found.add(tuple(acc))
            return
        for p in range(1, min(cap, remaining) + 1):
            rec(remaining - p, p, acc + [p])

    rec(n, n, [])
    return found


@pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 3), (4, 5), (5, 7), (6, 11)])
def test_partition_counts(n, count):
    ps = partitions_of(n)
    assert len(ps) == count
    assert set(ps) == brute_partitions(n)


def test_partition_order_is_reverse_lex():
    ps = partitions_of(4)
    assert ps == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert ps == sorted(ps, reverse=True)


@given(st.integers(1, 9))
def test_partitions_sorted_descending(n):
    for p in partitions_of(n):
        assert is_partition_of(p, n)
    assert partitions_of(n) == sorted(partitions_of(n), reverse=True)


# -- basis braids --------------------------------------------------------------


def test_basis_braid_examples():
    assert basis_braid((3,), 3).format() == "3: 2 1"
    assert basis_braid((1, 1, 1), 3).format() == "3:"
    assert basis_braid((2, 1), 3).format() == "3: 1"
    assert basis_braid((1, 2, 3), 6).format() == "6: 2 5 4"


@given(st.integers(1, 7).flatmap(lambda n: st.sampled_from(partitions_of(n)).map(lambda p: (p, n))))
def test_basis_braid_closes_to_its_partition(pn):
    parts, n = pn
    w = basis_braid(parts, n)
    assert cycle_type(permutation(w)) == tuple(sorted(parts, reverse=True))
    assert all(l.sign == 1 for l in w.letters)


def test_basis_braid_rejects_non_partition():
    with pytest.raises(ValueError):
        basis_braid((2, 2), 3)
    with pytest.raises(ValueError):
        basis_braid((3, 0), 3)


# -- moves ----------------------------------------------------------------------


def test_free_reduce():
    assert parse_word("3: 1 -1 2").free_reduce().signed_indices() == (2,)
    assert parse_word("3: 1 2 -2 -1").free_reduce().signed_indices() == ()
    assert parse_word("3: 1 -2 1").free_reduce().signed_indices() == (1, -2, 1)


def test_free_reduce_keeps_surviving_ids():
    w = parse_word("3: 1 -1 2")
    assert w.free_reduce().crossing_ids() == (2,)


def test_commutation():
    w = parse_word("4: 1 3 2")
    out = w.apply_braid_relation_at(0)
    assert out.signed_indices() == (3, 1, 2)
    assert out.crossing_ids() == (1, 0, 2)


def test_yang_baxter():
    w = parse_word("3: 1 2 1")
    out = w.apply_braid_relation_at(0)
    assert out.signed_indices() == (2, 1, 2)
    assert out.crossing_ids() == (0, 1, 2)
    neg = parse_word("3: -2 -1 -2").apply_braid_relation_at(0)
    assert neg.signed_indices() == (-1, -2, -1)


def test_relation_rejects_non_instances():
    with pytest.raises(MoveError):
        parse_word("3: 1 2 -1").apply_braid_relation_at(0)  # mixed signs
    with pytest.raises(MoveError):
        parse_word("3: 1 2").apply_braid_relation_at(0)  # too short
    with pytest.raises(MoveError):
        parse_word("3: 1 1").apply_braid_relation_at(0)  # same index
    with pytest.raises(MoveError):
        parse_word("3: 1 2 1").apply_braid_relation_at(5)


@given(words())
def test_relations_preserve_permutation(w):
    for pos in range(len(w.letters)):
        try:
            out = w.apply_braid_relation_at(pos)
        except MoveError:
            continue
        assert permutation(out) == permutation(w)


def test_cyclic_rotate():
    w = parse_word("3: 1 2 -1")
    assert w.cyclic_rotate(1).signed_indices() == (2, -1, 1)
    assert w.cyclic_rotate(1).crossing_ids() == (1, 2, 0)
    assert w.cyclic_rotate(3).signed_indices() == (1, 2, -1)
    assert w.cyclic_rotate(-1).signed_indices() == (-1, 1, 2)
    assert parse_word("3:").cyclic_rotate(2).letters == ()


@given(words(), st.integers(-10, 10))
def test_rotation_preserves_cycle_type(w, k):
    assert cycle_type(permutation(w.cyclic_rotate(k))) == cycle_type(permutation(w))


def test_conjugate_by_mints_fresh_ids():
    w = parse_word("2: 1 1 1")
    c = w.conjugate_by(parse_word("2: 1"))
    assert c.signed_indices() == (1, 1, 1, 1, -1)
    assert c.crossing_ids() == (3, 0, 1, 2, 4)
    assert c.next_id == 5


def test_conjugate_strand_mismatch():
    with pytest.raises(MoveError):
        parse_word("2: 1").conjugate_by(parse_word("3: 1"))


def test_stabilize_destabilize():
    w = parse_word("2: 1 1")
    up = w.stabilize(-1)
    assert up.strand_count == 3
    assert up.signed_indices() == (1, 1, -2)
    down = up.destabilize()
    assert down.strand_count == 2
    assert down.signed_indices() == (1, 1)
    assert down.crossing_ids() == w.crossing_ids()


def test_destabilize_preconditions():
    with pytest.raises(MoveError):
        parse_word("3: 2 1").destabilize()  # last letter not top generator
    with pytest.raises(MoveError):
        parse_word("3: 2 1 2").destabilize()  # top generator twice
    with pytest.raises(MoveError):
        parse_word("2:").destabilize()


@given(words(), st.sampled_from([1, -1]))
def test_destabilize_inverts_stabilize(w, sign):
    assert w.stabilize(sign).destabilize() == w


def test_change_crossing():
    w = parse_word("3: 1 -2 1")
    out = w.change_crossing(1)
    assert out.signed_indices() == (1, 2, 1)
    assert out.crossing_ids() == (0, 1, 2)
    assert out.change_crossing(1) == w


@given(words())
def test_change_crossing_is_involution(w):
    for cid in w.crossing_ids():
        assert w.change_crossing(cid).change_crossing(cid) == w


def test_delete_crossing():
    w = parse_word("3: 1 -2 1")
    out = w.delete_crossing(1)
    assert out.signed_indices() == (1, 1)
    assert out.crossing_ids() == (0, 2)
    with pytest.raises(MoveError):
        out.delete_crossing(1)


def test_ids_never_recycled():
    w = parse_word("2: 1 1 1")
    shrunk = w.delete_crossing(2)
    grown = shrunk.stabilize(1)
    assert grown.crossing_ids() == (0, 1, 3)
