"""Natural-number codings shared across modules.

Everything that crosses a machine/oracle boundary is a natural number.
The conventions here are fixed once and used everywhere:

* pairs are Cantor-coded,
* a base set that joins a side set S with a Dedekind cut stores S on
  residue 0 and the lower/upper cut bits on residues 1 and 2,
* transducer output positions code (rational index, 2n) for lower-cut
  items and (rational index, 2n+1) for upper-cut items.
"""

from __future__ import annotations

from fractions import Fraction


def pair(a: int, b: int) -> int:
    """Cantor pairing; bijective ℕ×ℕ → ℕ."""
    s = a + b
    return s * (s + 1) // 2 + b


def unpair(n: int) -> tuple[int, int]:
    # Inverse of pair(); integer sqrt keeps this exact for big codes.
    s = (_isqrt(8 * n + 1) - 1) // 2
    b = n - s * (s + 1) // 2
    return s - b, b


def _isqrt(n: int) -> int:
    import math

    r = math.isqrt(n)
    return r


# Triple-join residues for a base set of the form S ⊕ L ⊕ R.
SIDE_SET = 0
SIDE_LOWER = 1
SIDE_UPPER = 2


def join_pos(side: int, m: int) -> int:
    return 3 * m + side


def join_split(pos: int) -> tuple[int, int]:
    return pos % 3, pos // 3


def out_lower(rat_idx: int, tag: int) -> int:
    """Output position meaning: rational #rat_idx enters the lower cut, tag n."""
    return pair(rat_idx, 2 * tag)


def out_upper(rat_idx: int, tag: int) -> int:
    return pair(rat_idx, 2 * tag + 1)


def out_split(pos: int) -> tuple[int, int, bool]:
    """Return (rational index, tag, is_upper)."""
    idx, t = unpair(pos)
    return idx, t // 2, bool(t % 2)


def dyadic(num: int, level: int) -> Fraction:
    return Fraction(num, 1 << level)
