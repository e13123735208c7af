import pytest
from hypothesis import given
from hypothesis import strategies as st

from pqcost.operand import (
    Operand, from_bit_sequence, from_hex, make_operand, random_operand, to_bit_sequence, to_hex,
)


def test_make_operand_keeps_fields():
    assert make_operand(4, 0) == Operand(4, 0)
    assert make_operand(1, 1) == Operand(1, 1)


@pytest.mark.parametrize("width,value", [(4, 16), (1, 2), (0, 0), (8, -1)])
def test_make_operand_rejects_out_of_range(width, value):
    with pytest.raises(ValueError):
        make_operand(width, value)


def test_random_operand_is_deterministic_and_in_range():
    assert random_operand(8, 42) == random_operand(8, 42)
    assert {random_operand(1, s).value for s in range(64)} == {0, 1}
    big = random_operand(4096, 7)
    assert big.width_bits == 4096 and big.value < 1 << 4096


def test_random_operand_seeds_differ():
    values = {random_operand(64, s).value for s in range(50)}
    assert len(values) == 50


def test_bit_sequence_is_lsb_first():
    assert to_bit_sequence(Operand(4, 0b0110)) == [0, 1, 1, 0]
    assert to_bit_sequence(Operand(3, 0)) == [0, 0, 0]


def test_bit_sequence_round_trip_1024():
    op = random_operand(1024, 3)
    assert from_bit_sequence(to_bit_sequence(op)) == op


def test_hex_is_lowercase_msb_first():
    op = Operand(16, 0xBEEF)
    assert to_hex(op) == "beef"
    assert from_hex("beef", 16) == op
    with pytest.raises(ValueError):
        from_hex("1ff", 8)


@given(st.integers(1, 600).flatmap(lambda w: st.tuples(st.just(w), st.integers(0, (1 << w) - 1))))
def test_bit_and_hex_round_trips(wv):
    width, value = wv
    op = make_operand(width, value)
    bits = to_bit_sequence(op)
    assert len(bits) == width
    assert from_bit_sequence(bits) == op
    assert from_hex(to_hex(op), width) == op


@given(st.integers(1, 2048), st.integers(0, 2**64 - 1))
def test_random_operand_pure(width, seed):
    a, b = random_operand(width, seed), random_operand(width, seed)
    assert a == b and 0 <= a.value < 1 << width
