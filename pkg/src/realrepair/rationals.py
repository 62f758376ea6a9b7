"""Canonical rational enumeration and exact open-interval unions.

The enumeration q_0, q_1, q_2, ... lists every rational exactly once:
reduced fractions ordered by height |num| + den, within a height by
increasing numerator, and each positive rational immediately followed
by its negative.  q_0 = 0.  The sequence therefore starts

    0, 1, -1, 1/2, -1/2, 2, -2, 1/3, -1/3, 3, -3, 1/4, ...

Interval unions are finite unions of bounded open rational intervals
kept sorted and disjoint.  Two parts that merely touch at an endpoint
are NOT merged: the union of (0,1/2) and (1/2,1) does not contain 1/2,
and membership must never be gained by normalization.  Measure is the
sum of part lengths, which is unaffected by touching endpoints.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from fractions import Fraction
from math import gcd

Rat = Fraction

# Small heights keep explicit numerator lists; larger ones go through the
# totient-sum recursion so indices of height ~10^7 rationals stay cheap.
_SMALL_H = 4096
_COPRIMES: dict[int, list[int]] = {}
_PHI_SUM: dict[int, int] = {0: 0, 1: 1}


def height(q: Rat) -> int:
    return abs(q.numerator) + q.denominator


def _coprimes(h: int) -> list[int]:
    """Numerators p with p/(h-p) reduced, in increasing order."""
    got = _COPRIMES.get(h)
    if got is None:
        got = [p for p in range(1, h) if gcd(p, h) == 1]
        _COPRIMES[h] = got
    return got


def _phi_sum(n: int) -> int:
    # Summatory totient via Phi(n) = n(n+1)/2 - sum_{d>=2} Phi(n//d),
    # grouping equal quotients; memoized, works in ~O(n^(3/4)) overall.
    if n <= 1:
        return max(n, 0)
    got = _PHI_SUM.get(n)
    if got is None:
        got = n * (n + 1) // 2
        d = 2
        while d <= n:
            v = n // d
            d_top = n // v
            got -= (d_top - d + 1) * _phi_sum(v)
            d = d_top + 1
        _PHI_SUM[n] = got
    return got


def _cum(h: int) -> int:
    """Count of positive reduced fractions with height below h."""
    # heights 2..h-1 contribute phi(k) numerators each; phi(1) is excluded
    return _phi_sum(h - 1) - 1 if h >= 2 else 0


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def _coprime_upto(x: int, primes: list[int]) -> int:
    """How many k in [1, x] share no factor with the given primes."""
    if x <= 0:
        return 0
    divs = [(1, 1)]
    for p in primes:
        divs += [(d * p, -s) for d, s in divs]
    return sum(s * (x // d) for d, s in divs)


def rat_enum(i: int) -> Rat:
    """The i-th rational of the canonical enumeration."""
    if i < 0:
        raise ValueError("index must be a natural number")
    if i == 0:
        return Fraction(0)
    j = i - 1
    neg = j % 2 == 1
    m = j // 2
    # binary search for the height whose block of numerators covers m
    lo, hi = 2, 4
    while _cum(hi + 1) <= m:
        lo, hi = hi + 1, hi * 2
    while lo < hi:
        mid = (lo + hi) // 2
        if _cum(mid + 1) > m:
            hi = mid
        else:
            lo = mid + 1
    h = lo
    rank = m - _cum(h)
    if h <= _SMALL_H:
        p = _coprimes(h)[rank]
    else:
        primes = _prime_factors(h)
        p_lo, p_hi = 1, h - 1
        while p_lo < p_hi:
            p_mid = (p_lo + p_hi) // 2
            if _coprime_upto(p_mid, primes) > rank:
                p_hi = p_mid
            else:
                p_lo = p_mid + 1
        p = p_lo
    q = Fraction(p, h - p)
    return -q if neg else q


def rat_index(q: Rat) -> int:
    """Inverse of rat_enum."""
    q = Fraction(q)
    if q == 0:
        return 0
    h = height(q)
    p = abs(q.numerator)
    if h <= _SMALL_H:
        rank = bisect_left(_coprimes(h), p)
    else:
        rank = _coprime_upto(p - 1, _prime_factors(h))
    i = 1 + 2 * (_cum(h) + rank)
    return i + 1 if q < 0 else i


def first_index_of_height(h: int) -> int:
    """Index of the first enumerated rational of the given height."""
    if h <= 1:
        return 0
    return 1 + 2 * _cum(h)


def enum_key(q: Rat) -> tuple[int, int, int]:
    """Sort key equal to enumeration order without computing the index."""
    q = Fraction(q)
    if q == 0:
        return (1, 0, 0)
    return (height(q), abs(q.numerator), 0 if q > 0 else 1)


def simplest_in(a: Rat, b: Rat) -> Rat:
    """The earliest-enumerated rational in the open interval (a, b).

    Stern-Brocot descent gives a minimal-height representative; the rare
    same-height competitor with a smaller numerator is then checked
    directly, so the result is the true enumeration-order minimum.
    """
    if not a < b:
        raise ValueError("empty interval")
    if a < 0 < b:
        return Fraction(0)
    if b <= 0:
        return -simplest_in(-b, -a)
    best = _simplest_pos(Fraction(a), Fraction(b))
    h = height(best)
    # p/(h-p) increases with p and stays below best < b, so competitors in
    # (a, b) are exactly the coprime p with a*h/(1+a) < p < best.numerator
    a = Fraction(a)
    p = (a.numerator * h) // (a.numerator + a.denominator) + 1
    while p < best.numerator:
        if gcd(p, h) == 1:
            return Fraction(p, h - p)
        p += 1
    return best


def _simplest_pos(a: Fraction, b: Fraction) -> Fraction:
    # 0 <= a < b; continued-fraction walk, jumping whole quotients.
    if a == 0:
        if b > 1:
            return Fraction(1)
        # smallest denominator d with some p/d in (0, b): d = floor(1/b)+1
        d = b.denominator // b.numerator + 1
        return Fraction(1, d)
    fa = a.numerator // a.denominator
    if b > fa + 1:
        return Fraction(fa + 1)
    ra = a - fa
    rb = b - fa
    if ra == 0:
        # (fa, fa+rb): reduce to the pure-fraction case above
        return fa + _simplest_pos(Fraction(0), rb)
    inner = _simplest_pos(1 / rb, 1 / ra)
    return fa + 1 / inner


class IntervalUnion:
    """A finite union of bounded open rational intervals, normalized."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        self.parts: list[tuple[Rat, Rat]] = []
        for a, b in parts:
            self.insert(a, b)

    def insert(self, a: Rat, b: Rat) -> None:
        """Insert (a, b), merging any part it strictly overlaps."""
        a, b = Fraction(a), Fraction(b)
        if not a < b:
            return
        parts = self.parts
        lo = bisect_left(parts, (a, a))
        # strict overlap: a part (c, d) merges iff c < b and a < d
        while lo > 0 and parts[lo - 1][1] > a:
            lo -= 1
        hi = lo
        while hi < len(parts) and parts[hi][0] < b:
            a = min(a, parts[hi][0])
            b = max(b, parts[hi][1])
            hi += 1
        parts[lo:hi] = [(a, b)]

    def copy(self) -> "IntervalUnion":
        out = IntervalUnion()
        out.parts = list(self.parts)
        return out

    def measure(self) -> Rat:
        return sum((b - a for a, b in self.parts), Fraction(0))

    def contains_point(self, q: Rat) -> bool:
        return self.part_containing(q) is not None

    def part_containing(self, q: Rat):
        # parts[i-1] is the only part whose left endpoint is below q
        i = bisect_right(self.parts, (Fraction(q),))
        if i > 0:
            a, b = self.parts[i - 1]
            if a < q < b:
                return (a, b)
        return None

    def covers_closed(self, c: Rat, d: Rat) -> bool:
        """Is [c, d] inside a single part?"""
        i = bisect_right(self.parts, (Fraction(c),))
        for j in (i - 1, i):
            if 0 <= j < len(self.parts):
                a, b = self.parts[j]
                if a < c and d < b:
                    return True
        return False

    def disjoint_closed(self, c: Rat, d: Rat) -> bool:
        """Is [c, d] disjoint from every part?"""
        i = bisect_left(self.parts, (Fraction(c),))
        # parts fully left of c need b <= c; first candidate crossing is i-1
        if i > 0 and self.parts[i - 1][1] > c:
            return False
        if i < len(self.parts) and self.parts[i][0] < d:
            return False
        return True

    def subtract_closure(self, other: "IntervalUnion") -> "IntervalUnion":
        """This union minus the closed parts of `other` (an open set again)."""
        out = IntervalUnion()
        cuts = other.parts
        for a, b in self.parts:
            lo = a
            for c, d in cuts:
                if d <= lo or c >= b:
                    continue
                if c > lo:
                    out.insert(lo, min(c, b))
                lo = max(lo, d)
                if lo >= b:
                    break
            if lo < b:
                out.insert(lo, b)
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, IntervalUnion) and self.parts == other.parts

    def __repr__(self) -> str:
        inner = ", ".join(f"({a}, {b})" for a, b in self.parts)
        return f"IntervalUnion([{inner}])"

    def to_json(self) -> list[list[int]]:
        """Sorted quadruples [lo_num, lo_den, hi_num, hi_den]."""
        return [
            [a.numerator, a.denominator, b.numerator, b.denominator]
            for a, b in self.parts
        ]

    @classmethod
    def from_json(cls, data) -> "IntervalUnion":
        u = cls()
        for ln, ld, hn, hd in data:
            u.insert(Fraction(ln, ld), Fraction(hn, hd))
        return u


def union_insert(u: IntervalUnion, a: Rat, b: Rat) -> IntervalUnion:
    out = u.copy()
    out.insert(a, b)
    return out


def measure(u: IntervalUnion) -> Rat:
    return u.measure()


def interval_cover_test(u: IntervalUnion, c: Rat, d: Rat) -> tuple[bool, bool]:
    """(contained in one part, disjoint from all parts) for the closed [c, d]."""
    return u.covers_closed(c, d), u.disjoint_closed(c, d)
