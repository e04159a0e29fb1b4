"""Bit-level helpers shared by the tile generators."""

from __future__ import annotations

from enum import Enum

from tilearith.errors import InputOverflowError


class Orientation(Enum):
    RIGHT_TO_LEFT = "rtl"  # least significant bit rightmost, as laid out on a row
    LEFT_TO_RIGHT = "ltr"  # least significant bit leftmost


def bit_length(value: int) -> int:
    """Bit length with zero counting as one bit."""
    return max(1, value.bit_length())


def bit(value: int, index: int) -> int:
    return (value >> index) & 1


def encode_input(value: int, width: int, orientation: Orientation) -> tuple[int, ...]:
    """Zero-padded binary row of exactly ``width`` bits, in display order."""
    if width < 1:
        raise ValueError(f"width must be positive, got {width}")
    if value < 0 or value >= 1 << width:
        raise InputOverflowError(f"{value} does not fit in {width} bits", value, width)
    lsb_first = tuple(bit(value, i) for i in range(width))
    if orientation is Orientation.LEFT_TO_RIGHT:
        return lsb_first
    return lsb_first[::-1]


def decode_bits(lsb_first: list[int] | tuple[int, ...]) -> int:
    return sum(b << i for i, b in enumerate(lsb_first))


def full_adder(a: int, b: int, c: int) -> tuple[int, int]:
    """Return ``(sum, carry)`` for one column of binary addition."""
    return a ^ b ^ c, (a & b) | (b & c) | (c & a)


def subtractor(a: int, b: int, c: int) -> tuple[int, int]:
    """Return ``(difference, borrow)`` for ``b - a - c`` in one column.

    ``a`` is the subtrahend bit, ``b`` the minuend bit and ``c`` the incoming
    borrow.
    """
    nb = 1 - b
    return a ^ b ^ c, (nb & a) | (nb & c) | (a & c)
