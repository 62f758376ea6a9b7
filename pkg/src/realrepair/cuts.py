"""Representations of reals as streams: Dedekind cut enumerations,
fast-converging rational sequences, and finite-stage cut strings.

A *cut enumeration* of x lists tagged rationals, each marked as lying
below or above x.  No order or modulus is promised; correctness is only
that the lower items enumerate exactly {q : q < x} and the upper items
{q : q > x}.  Everything else here is machinery for squeezing finite,
certified information out of such a stream.

Bit strings index the canonical rational enumeration ``rat_enum``: a cut
string for an interval (a, b) has lam(i) = 1 iff q_i <= a and
rho(i) = 1 iff q_i >= b, up to (excluding) the first index whose
rational falls inside (a, b).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, NamedTuple, Optional

from .fixtures import QuadReal
from .rationals import Rat, rat_enum, rat_index, simplest_in


class CutItem(NamedTuple):
    q: Rat
    tag: int
    upper: bool


class CutEnumeration:
    """Restartable tagged enumeration of the cut of an exact real.

    The canonical order interleaves a sweep over all rationals with two
    dyadic ladders that approach x from below and above, so the best
    bounds tighten by 2**-k every three items.  ``seed`` applies a
    deterministic block shuffle on top; tags always refer to canonical
    positions, so shuffles enumerate the same tagged set.
    """

    def __init__(self, real, seed: Optional[int] = None, block: int = 16):
        self.real = real
        self.seed = seed
        self.block = block

    def _canonical(self) -> Iterator[CutItem]:
        real = self.real
        tag = 0
        for k in itertools.count():
            q = rat_enum(k)
            c = real.cmp(q)
            if c > 0:
                yield CutItem(q, tag, False)
                tag += 1
            elif c < 0:
                yield CutItem(q, tag, True)
                tag += 1
            if real.finite:
                n = real.floor_scaled(k)
                lo = Fraction(n, 1 << k)
                if real.cmp(lo) == 0:
                    lo -= Fraction(1, 1 << k)
                yield CutItem(lo, tag, False)
                tag += 1
                yield CutItem(Fraction(n + 1, 1 << k), tag, True)
                tag += 1
            elif real.cmp(Fraction(0)) > 0:
                yield CutItem(Fraction(1 << k), tag, False)
                tag += 1
            else:
                yield CutItem(Fraction(-(1 << k)), tag, True)
                tag += 1

    def items(self) -> Iterator[CutItem]:
        if self.seed is None:
            yield from self._canonical()
            return
        src = self._canonical()
        for blockidx in itertools.count():
            chunk = list(itertools.islice(src, self.block))
            if not chunk:
                return
            rng = random.Random(self.seed * 1000003 + blockidx)
            rng.shuffle(chunk)
            yield from chunk

    def to_json(self):
        return {"real": self.real.to_json(), "seed": self.seed, "block": self.block}


def cut_of_rational(q: Rat, seed: Optional[int] = None) -> CutEnumeration:
    return CutEnumeration(QuadReal(Fraction(q)), seed=seed)


class FastCauchy:
    """Rational sequence with |term(n) - x| < 2**-n."""

    def __init__(self, term):
        self.term = term

    @classmethod
    def from_real(cls, real) -> "FastCauchy":
        if not real.finite:
            raise ValueError("no fast-converging sequence for an infinite value")

        def term(n: int) -> Rat:
            a = Fraction(real.floor_scaled(n + 2), 1 << (n + 2))
            return a + Fraction(1, 1 << (n + 3))

        return cls(term)


def cut_to_cauchy(enum: CutEnumeration, n: int, max_pulls: int = 10_000_000) -> Rat:
    """n-th term of a fast sequence for the real behind ``enum``.

    Pulls until the best bounds are 2**(1-n) apart and answers their
    midpoint; the real inside that gap is within 2**-n of it.
    """
    best_lo = best_hi = None
    gap = Fraction(2, 1 << n)
    for item in itertools.islice(enum.items(), max_pulls):
        if item.upper:
            if best_hi is None or item.q < best_hi:
                best_hi = item.q
        else:
            if best_lo is None or item.q > best_lo:
                best_lo = item.q
        if best_lo is not None and best_hi is not None and best_hi - best_lo < gap:
            return (best_lo + best_hi) / 2
    raise ValueError("enumeration did not trap the real in a finite interval")


class CauchyCutStream:
    """Cut enumeration recovered from a fast sequence.

    q goes below exactly when q < term(m) - 2**-m for some m, and above
    when q > term(m) + 2**-m; stage k tests the first k rationals
    against the first k terms.
    """

    def __init__(self, cauchy: FastCauchy):
        self.cauchy = cauchy

    def items(self) -> Iterator[CutItem]:
        tag = 0
        done_lo, done_hi = set(), set()
        terms = []
        for k in itertools.count(1):
            terms.append(self.cauchy.term(k))
            for j in range(k):
                q = rat_enum(j)
                for m, t in enumerate(terms, start=1):
                    eps = Fraction(1, 1 << m)
                    if q < t - eps and j not in done_lo:
                        done_lo.add(j)
                        yield CutItem(q, tag, False)
                        tag += 1
                    if q > t + eps and j not in done_hi:
                        done_hi.add(j)
                        yield CutItem(q, tag, True)
                        tag += 1


def least_interior_index(a: Rat, b: Rat) -> int:
    """Least i with rat_enum(i) strictly inside (a, b)."""
    return rat_index(simplest_in(a, b))


@dataclass(frozen=True)
class CutString:
    """Finite cut string pair for an interval (a, b).

    Bits are stored implicitly: position i of lam is 1 iff q_i <= a,
    of rho 1 iff q_i >= b, for i < length.  ``checked`` records whether
    the side condition held (both endpoint indices below length), which
    makes prefix matching equivalent to interval containment.
    """

    a: Rat
    b: Rat
    length: int
    checked: bool

    def bit_lower(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(i)
        return 1 if rat_enum(i) <= self.a else 0

    def bit_upper(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(i)
        return 1 if rat_enum(i) >= self.b else 0

    @property
    def lam(self) -> str:
        return "".join(str(self.bit_lower(i)) for i in range(self.length))

    @property
    def rho(self) -> str:
        return "".join(str(self.bit_upper(i)) for i in range(self.length))

    @property
    def interval(self):
        return (self.a, self.b)

    def contains(self, real) -> bool:
        return real.cmp(self.a) > 0 and real.cmp(self.b) < 0


def interval_string(a: Rat, b: Rat) -> CutString:
    """Cut string of (a, b), whether or not the side condition holds."""
    a, b = Fraction(a), Fraction(b)
    if not a < b:
        raise ValueError("need a < b")
    length = least_interior_index(a, b)
    checked = length > max(rat_index(a), rat_index(b))
    return CutString(a, b, length, checked)


def cut_string(a: Rat, b: Rat) -> CutString:
    """Like interval_string but insists on the side condition."""
    s = interval_string(a, b)
    if not s.checked:
        raise ValueError(
            f"side condition fails for ({a}, {b}); split_interval it first"
        )
    return s


def split_interval(a: Rat, b: Rat):
    """Cut (a, b) at every interior rational that precedes an endpoint
    in the canonical enumeration.  The resulting pieces all satisfy the
    side condition; one round suffices because each piece's interior
    points come after the original interval's first interior point.
    """
    a, b = Fraction(a), Fraction(b)
    if not a < b:
        raise ValueError("need a < b")
    bound = max(rat_index(a), rat_index(b))
    cuts = sorted(_interior_points_below(a, b, bound))
    pieces = []
    lo = a
    for q in cuts:
        pieces.append((lo, q))
        lo = q
    pieces.append((lo, b))
    return pieces


def _interior_points_below(a: Rat, b: Rat, bound: int):
    """Rationals strictly inside (a, b) with rat_index below ``bound``."""
    if bound > 2_000_000:
        raise ValueError("interval endpoints too deep to split exactly")
    from math import gcd

    from .rationals import first_index_of_height

    out = []
    if a < 0 < b and 0 < bound:
        out.append(Fraction(0))
    for h in itertools.count(2):
        if first_index_of_height(h) >= bound:
            break
        for p in range(1, h):
            if gcd(p, h - p) != 1:
                continue
            for q in (Fraction(p, h - p), Fraction(-p, h - p)):
                if a < q < b and rat_index(q) < bound:
                    out.append(q)
    return out


class ApproxTriple:
    """Stage-t snapshot of a cut enumeration, as three string pairs.

    After pulling until at most one of the first t canonical rationals
    lies strictly between the best lower bound A and best upper bound B,
    every other position i < t is decided: lam(i) = 1 iff q_i <= A,
    rho(i) = 1 iff q_i >= B.  The base pair leaves the straggler at 0/0;
    the low variant resolves it upward (x below it), the high variant
    downward.  Exactly one variant is a prefix of the true cut string:
    low if x < q_u, high if x > q_u, base if x = q_u or nothing was
    left undecided.
    """

    def __init__(self, t: int, pulls: int, best_lo, best_hi, undecided: Optional[int]):
        self.t = t
        self.pulls = pulls
        self.best_lo = best_lo
        self.best_hi = best_hi
        self.undecided = undecided

    def _bit(self, i: int, variant: str):
        q = rat_enum(i)
        if i == self.undecided:
            if variant == "low":
                return (0, 1)
            if variant == "high":
                return (1, 0)
            return (0, 0)
        lo = 1 if self.best_lo is not None and q <= self.best_lo else 0
        hi = 1 if self.best_hi is not None and q >= self.best_hi else 0
        return (lo, hi)

    def strings(self, variant: str = "base"):
        bits = [self._bit(i, variant) for i in range(self.t)]
        lam = "".join(str(x) for x, _ in bits)
        rho = "".join(str(y) for _, y in bits)
        return lam, rho

    @property
    def lam(self):
        return self.strings()[0]

    @property
    def rho(self):
        return self.strings()[1]

    def intervals(self):
        """Value form of the three variants: open intervals with None
        for a missing endpoint, low/high None when nothing is undecided."""
        base = (self.best_lo, self.best_hi)
        if self.undecided is None:
            return {"base": base, "low": None, "high": None, "point": None}
        q = rat_enum(self.undecided)
        return {
            "base": base,
            "low": (self.best_lo, q),
            "high": (q, self.best_hi),
            "point": q,
        }


def approx_strings(enum, t: int, max_pulls: int = 10_000_000) -> ApproxTriple:
    """Pull ``enum`` just far enough to decide all but at most one of
    the first t positions, then freeze the three candidate strings."""
    best_lo = best_hi = None
    pulls = 0
    items = enum.items()
    while True:
        undecided = []
        for i in range(t):
            q = rat_enum(i)
            if best_lo is not None and q <= best_lo:
                continue
            if best_hi is not None and q >= best_hi:
                continue
            undecided.append(i)
            if len(undecided) > 1:
                break
        if len(undecided) <= 1:
            u = undecided[0] if undecided else None
            return ApproxTriple(t, pulls, best_lo, best_hi, u)
        if pulls >= max_pulls:
            raise ValueError("enumeration failed to decide the window")
        item = next(items)
        pulls += 1
        if item.upper:
            if best_hi is None or item.q < best_hi:
                best_hi = item.q
        else:
            if best_lo is None or item.q > best_lo:
                best_lo = item.q


def triple_to_intervals(triple: ApproxTriple):
    return triple.intervals()
