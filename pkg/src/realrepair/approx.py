"""Measure-bounded approximation of iterated halting bits.

The designated (halting) columns of a coded set are not computable
from the cut alone, but each certified guard halts on an open set with
exact measure bookkeeping.  Under a tolerance budget split over column
labels, program indices and unit cells, the approximator commits to a
finite answer family: a prefix of the guard's piece stream whose total
measure first exceeds the largest grid value r lying strictly below
the true halting measure.  The answered bit is 1 exactly on the union
of the family, so every wrong answer lives in the residual region
(halting hull minus the family's closure), of measure below the
tolerance.  The residual regions over-cover the true disagreement set
by at most countably many piece boundary rationals, all of which sit
inside buffers anyway.

Wrongly answered regions and shrinking buffers around every rational
are published as a stage-indexed stream of open intervals whose union
stays strictly below epsilon in measure.  For dyadic refinements of
epsilon the streams nest itemwise at matched stages.

Two ambient modes: a bounded integer-endpoint span (default (0, 1)),
or the whole line with per-cell budget shares that sum to epsilon.
"""

from __future__ import annotations

import itertools
from bisect import bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor
from typing import NamedTuple, Optional

from .codes import pair, unpair
from .jumps import Presentation, RealBase, UncertifiedQuery
from .machine import PROGRAM_TABLE, Guard, decode
from .rationals import IntervalUnion, Rat, height, rat_enum


def eps_cell(epsilon: Rat, n: int) -> Rat:
    """Whole-line budget share of cell (n, n+1): (4/3) * epsilon *
    2^-(2+|n|), summing to epsilon over all integer cells."""
    return Fraction(4, 3) * epsilon / (1 << (2 + abs(n)))


class AnswerFamily(NamedTuple):
    universal: bool
    w: Rat                 # true halting measure in the cell
    tol: Rat
    r: Rat                 # committed grid value, r < w <= r + tol/2
    members: tuple         # family pieces, in stream order
    region: IntervalUnion  # halting hull minus the family's closure


@dataclass
class ApproxConfig:
    epsilon: Rat
    pres: Presentation
    ambient: Optional[tuple] = (Fraction(0), Fraction(1))
    _families: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self.epsilon = Fraction(self.epsilon)
        if self.epsilon <= 0:
            raise ValueError("tolerance must be positive")
        if self.ambient is not None:
            lo, hi = Fraction(self.ambient[0]), Fraction(self.ambient[1])
            # integer endpoints keep cells aligned with trigger pieces
            if lo.denominator != 1 or hi.denominator != 1 or not lo < hi:
                raise ValueError("ambient span needs increasing integer endpoints")
            self.ambient = (lo, hi)

    def cell_share(self, key) -> Rat:
        if self.ambient is not None:
            return self.epsilon
        return eps_cell(self.epsilon, int(key[0]))

    def cell_keys(self, trig):
        """Cells where the trigger can hold measure, canonical order."""
        if self.ambient is not None:
            return iter((self.ambient,))
        return ((Fraction(n), Fraction(n + 1)) for n in trig.cells())

    def cell_key_of(self, real):
        """Cell holding the real; None off the ambient or on a boundary."""
        if not real.finite:
            return None
        if self.ambient is not None:
            lo, hi = self.ambient
            if real.cmp(lo) > 0 and real.cmp(hi) < 0:
                return self.ambient
            return None
        n = real.floor_scaled(0)
        if real.cmp(Fraction(n)) == 0:
            return None
        return (Fraction(n), Fraction(n + 1))


# (guard index, cell floor) pairs whose residual region stays wide; the
# two threshold guards each keep one in the unit cell flanking zero
_FAT_SLOTS = {(2, 0), (3, -1)}


def tolerance(cfg: ApproxConfig, label: int, e: int, key) -> Rat:
    """Error allowance for program e's halting bits at the given column
    label inside the cell.

    The split is front-loaded: at the first designated column each
    threshold guard gets 4/5 of the budget for the unit cell touching
    its threshold, and every other slot decays geometrically.  A slot's
    residual region never exceeds half its allowance, so the total
    wrongly-answered measure still sums below epsilon together with the
    rational buffers."""
    if (e, key[0]) in _FAT_SLOTS and label == _local_label(cfg.pres, 1):
        return Fraction(4, 5) * cfg.epsilon
    return cfg.cell_share(key) * Fraction(7, 8) / (1 << (label + e + 4))


def answer_family(cfg: ApproxConfig, label: int, e: int, key) -> AnswerFamily:
    cache_key = (label, e, key)
    got = cfg._families.get(cache_key)
    if got is not None:
        return got
    prog = decode(e)
    if not isinstance(prog, Guard):
        raise UncertifiedQuery(f"index {e} is not a certified guard")
    trig = prog.trigger
    tol = tolerance(cfg, label, e, key)
    if trig.universal:
        fam = AnswerFamily(True, Fraction(1), tol, Fraction(1), (), IntervalUnion())
        cfg._families[cache_key] = fam
        return fam
    lo, hi = key
    w = trig.measure_within(lo, hi)
    hull = trig.hull_within(lo, hi)
    if w == 0:
        fam = AnswerFamily(False, w, tol, Fraction(0), (), hull)
        cfg._families[cache_key] = fam
        return fam
    spacing = tol / 2
    steps = w / spacing
    m = steps.numerator // steps.denominator
    if m * spacing >= w:  # exact multiple: largest strictly below
        m -= 1
    r = m * spacing
    members = []
    total = Fraction(0)
    for a, b in trig.pieces_within(lo, hi):
        members.append((a, b))
        total += b - a
        if total > r:
            break
    else:
        raise AssertionError("piece stream exhausted before passing r")
    # pieces are pairwise disjoint, so sorting them is already the
    # normalized part list; inserting one by one would be quadratic
    members.sort()
    covered = IntervalUnion()
    covered.parts = list(members)
    region = hull.subtract_closure(covered)
    fam = AnswerFamily(False, w, tol, r, tuple(members), region)
    cfg._families[cache_key] = fam
    return fam


def _commit(cfg: ApproxConfig, label: int, e: int, real):
    """The family member the real's cut commits to, if any."""
    prog = decode(e)
    if not isinstance(prog, Guard):
        raise UncertifiedQuery(f"index {e} is not a certified guard")
    if prog.trigger.universal:
        return prog.trigger.piece(0)
    key = cfg.cell_key_of(real)
    if key is None:
        return None
    fam = answer_family(cfg, label, e, key)
    members = fam.members
    # rightmost member starting below the real; disjointness rules out others
    lo_i, hi_i = 0, len(members)
    while lo_i < hi_i:
        mid = (lo_i + hi_i) // 2
        if real.cmp(members[mid][0]) > 0:
            lo_i = mid + 1
        else:
            hi_i = mid
    if lo_i > 0:
        a, b = members[lo_i - 1]
        if real.cmp(b) < 0:
            return (a, b)
    return None


def jump_bit(cfg: ApproxConfig, label: int, e: int, real) -> int:
    """Approximated halting bit for program e at the given column."""
    return 1 if _commit(cfg, label, e, real) is not None else 0


def interval_bit(cfg: ApproxConfig, label: int, e: int, a: Rat, b: Rat):
    """(bit, stable) for the whole open interval of oracles (a, b).

    bit 1 means the interval sits inside one family member, which is
    exactly when that member's string prefixes the interval's string.
    stable means every real in (a, b) gets this same bit: containment
    for 1, disjointness from the whole family for 0.
    """
    prog = decode(e)
    if not isinstance(prog, Guard):
        raise UncertifiedQuery(f"index {e} is not a certified guard")
    if prog.trigger.universal:
        return 1, True
    a, b = Fraction(a), Fraction(b)
    if cfg.ambient is not None:
        keys = [cfg.ambient] if a < cfg.ambient[1] and cfg.ambient[0] < b else []
    else:
        keys = [(Fraction(n), Fraction(n + 1))
                for n in range(floor(a), floor(b) + 1)]
    hit = False
    touch = False
    for key in keys:
        members = answer_family(cfg, label, e, key).members
        # only the rightmost member with lo <= a can contain [a, b]
        i = bisect_right(members, a, key=lambda m: m[0])
        if i > 0 and b <= members[i - 1][1]:
            hit = True
        # first member whose hi exceeds a; it touches iff its lo < b
        j = bisect_right(members, a, key=lambda m: m[1])
        if j < len(members) and members[j][0] < b:
            touch = True
    if hit:
        return 1, True
    return 0, (not touch)


def interval_jump_bit(cfg: ApproxConfig, level: int, e: int,
                      a: Rat, b: Rat) -> Optional[int]:
    """Jump answer shared by every real committed to (a, b), or None.

    None covers three cases: the level has no local column under this
    presentation, e is not a certified guard there, or the interval
    straddles a family boundary so the bit is not yet settled.
    """
    label = _local_label(cfg.pres, level)
    if label is None:
        return None
    try:
        bit, stable = interval_bit(cfg, label, e, a, b)
    except UncertifiedQuery:
        return None
    return bit if stable else None


class JumpAnswer(NamedTuple):
    value: bool
    witness: Optional[tuple]  # matched family member, or None


def _eval(cfg: ApproxConfig, base, pos: int, pres: Presentation) -> JumpAnswer:
    if pres.exact_rank() == 0:
        return JumpAnswer(bool(base(pos)), None)
    k, n = unpair(pos)
    if pres.dom_contains(k):
        return _eval(cfg, base, n, pres.segment(k))
    d = pres.designated()
    if d is not None and k == d:
        real = getattr(base, "real", None)
        if real is None:
            raise ValueError("halting approximation needs a cut-presented base")
        member = _commit(cfg, d, n, real)
        return JumpAnswer(member is not None, member)
    return JumpAnswer(False, None)


def jump_answer(cfg: ApproxConfig, oracle, query) -> JumpAnswer:
    """Approximated bit of the coded set, with the matched member as
    witness for affirmative halting answers.  The query is a flat
    position or a (column, index) pair; the oracle is any real-backed
    base (its side set rides along)."""
    pos = pair(*query) if isinstance(query, tuple) else query
    if callable(oracle):
        base = oracle
    else:
        base = RealBase(oracle.real, getattr(oracle, "s_set", frozenset()))
    return _eval(cfg, base, pos, cfg.pres)


def coded_membership(cfg: ApproxConfig, base, pos: int) -> bool:
    """Plain boolean form of jump_answer over the config's presentation."""
    return _eval(cfg, base, pos, cfg.pres).value


# ---------------------------------------------------------------------------
# buffers around rationals


def buffer_of(cfg: ApproxConfig, j: int):
    """Open interval around the j-th rational, width at most
    epsilon * 2^-(j+4), endpoints of larger height than the center (so
    their enumeration indices exceed j).  Shrinking epsilon shrinks the
    buffer without moving it off center."""
    q = rat_enum(j)
    m = 0
    while Fraction(1, 1 << m) > cfg.epsilon:
        m += 1
    h0 = height(q)
    while True:
        d = Fraction(1, 1 << (j + 5 + m))
        if height(q - d) > h0 and height(q + d) > h0:
            return (q - d, q + d)
        m += 1


# ---------------------------------------------------------------------------
# the correction stream


class ErrorItem(NamedTuple):
    stage: int
    lo: Rat
    hi: Rat
    source: tuple  # ("buffer", j) or ("family", label, e, key, shrink)


def _local_label(pres: Presentation, level: int) -> Optional[int]:
    if pres.exact_rank() == level:
        return pres.designated()
    elt = pres.rank_element(level)
    if elt is None:
        return None
    return _local_label(pres.segment(elt), level)


def _nth_key(cfg: ApproxConfig, trig, rank: int):
    for i, key in enumerate(cfg.cell_keys(trig)):
        if i == rank:
            return key
        if i > rank:
            break
    return None


def default_catalog():
    """Programs that can ever claim tolerance: the certified threshold
    guards.  Universal guards and transducers would only waste stream
    slots and slow every shrink schedule behind them."""
    return tuple(e for e in range(len(PROGRAM_TABLE))
                 if isinstance(decode(e), Guard)
                 and not decode(e).trigger.universal)


def wide_regions(cfg: ApproxConfig):
    """Open hulls of the fat residual regions at the first designated
    column.  Their full extent is known from the config alone, so a
    consumer can treat the interiors as correction territory before the
    shrinking cover gets around to enumerating them."""
    lab = _local_label(cfg.pres, 1)
    out = []
    if lab is None:
        return out
    for e, fl in sorted(_FAT_SLOTS):
        prog = decode(e)
        for key in itertools.islice(cfg.cell_keys(prog.trigger), 8):
            if key[0] == fl:
                out.extend(answer_family(cfg, lab, e, key).region.parts)
                break
    return out


def error_stream(cfg: ApproxConfig, catalog=None):
    """Stage-stamped open intervals covering every point the finite
    answers may ever get wrong, plus the rational buffers.  Odd stage
    2j+1 carries buffer j; even stage 2t dovetails one (source, shrink)
    slot, emitting the residual region of that source pulled in by
    2^-shrink at each end.  The union over shrink levels recovers the
    full open region, and matched stages nest across dyadic epsilon
    refinements."""
    if catalog is None:
        catalog = default_catalog()
    for s in itertools.count(1):
        if s % 2:
            j = (s - 1) // 2
            lo, hi = buffer_of(cfg, j)
            yield ErrorItem(s, lo, hi, ("buffer", j))
            continue
        t = s // 2
        src_idx, shrink = unpair(t - 1)
        lvl_idx, rest = unpair(src_idx)
        crank, cell_rank = unpair(rest)
        level = lvl_idx + 1
        label = _local_label(cfg.pres, level)
        if label is None or crank >= len(catalog):
            continue
        e = catalog[crank]
        prog = decode(e)
        if not isinstance(prog, Guard) or prog.trigger.universal:
            continue
        key = _nth_key(cfg, prog.trigger, cell_rank)
        if key is None:
            continue
        fam = answer_family(cfg, label, e, key)
        delta = Fraction(1, 1 << shrink)
        for lo, hi in fam.region.parts:
            if hi - lo > 2 * delta:
                yield ErrorItem(s, lo + delta, hi - delta,
                                ("family", label, e, key, shrink))


class ErrorSetEnum:
    """Stateful view of the correction stream with exact accounting."""

    def __init__(self, cfg: ApproxConfig, catalog=None):
        self.cfg = cfg
        self.catalog = tuple(catalog) if catalog is not None else default_catalog()
        self.items: list[ErrorItem] = []
        self.stage = 0
        self._gen = error_stream(cfg, self.catalog)
        self._pending = None
        self._union = IntervalUnion()
        self._buffers = IntervalUnion()
        self._sources: dict = {}

    def advance_to(self, stage: int) -> None:
        while self.stage < stage:
            self.stage += 1
            if self._pending is None:
                self._pending = next(self._gen)
            while self._pending.stage <= self.stage:
                self._take(self._pending)
                self._pending = next(self._gen)

    def _take(self, item: ErrorItem) -> None:
        self.items.append(item)
        self._union.insert(item.lo, item.hi)
        kind = item.source[0]
        if kind == "buffer":
            self._buffers.insert(item.lo, item.hi)
            self._sources.setdefault(("buffer", item.source[1]),
                                     item.hi - item.lo)
        else:
            label, e, key, _ = item.source[1:]
            fam = answer_family(self.cfg, label, e, key)
            self._sources[("family", label, e, key)] = fam.region.measure()

    def union(self) -> IntervalUnion:
        return self._union.copy()

    def buffer_union(self) -> IntervalUnion:
        return self._buffers.copy()

    def measure(self) -> Rat:
        return self._union.measure()

    def ledger(self) -> dict:
        per_source = sum(self._sources.values(), Fraction(0))
        return {
            "stage": self.stage,
            "items": len(self.items),
            "union_measure": self._union.measure(),
            "per_source_total": per_source,
            "epsilon": self.cfg.epsilon,
            "strictly_below": per_source < self.cfg.epsilon,
        }


def error_set_enumerate(cfg: ApproxConfig, catalog=None) -> ErrorSetEnum:
    return ErrorSetEnum(cfg, catalog)


def error_items(cfg: ApproxConfig, through_stage: int, catalog=None):
    out = []
    for item in error_stream(cfg, catalog):
        if item.stage > through_stage:
            break
        out.append(item)
    return out


def u_contains(cfg: ApproxConfig, real, catalog=None) -> bool:
    """Membership in the full correction set: any buffer, or any
    residual region at the coarsest level (deeper levels nest inside)."""
    if getattr(real, "is_rational", False):
        return True  # center of its own buffer
    if not real.finite:
        return False
    if _buffer_scan_hit(cfg, real):
        return True
    key = cfg.cell_key_of(real)
    if key is None:
        return False
    label = _local_label(cfg.pres, 1)
    if label is None:
        return False
    if catalog is None:
        catalog = default_catalog()
    for e in catalog:
        prog = decode(e)
        if not isinstance(prog, Guard) or prog.trigger.universal:
            continue
        fam = answer_family(cfg, label, e, key)
        for a, b in fam.region.parts:
            if real.cmp(a) > 0 and real.cmp(b) < 0:
                return True
    return False


def _buffer_scan_hit(cfg: ApproxConfig, real) -> bool:
    """Exact scan: is the quadratic irrational inside any buffer?

    Writing x = a + b*sqrt(2), any rational u/v of height at most h has
    |x - u/v| >= |b| / (4 (h M)^2) with M = den(a) * |num(b)| * den(b),
    because (u/v - a)/b has denominator at most h * M and sqrt(2) obeys
    the classical 1/(4 v^2) approximation barrier.  Heights along the
    enumeration satisfy h(q_j) <= j + 2, so buffer widths 2^-(j+5) fall
    below the barrier for every later j at once.
    """
    b = real.b
    assert b != 0
    absb = Fraction(abs(b.numerator), b.denominator)
    M = real.a.denominator * abs(b.numerator) * b.denominator
    for j in itertools.count():
        lo, hi = buffer_of(cfg, j)
        if real.cmp(lo) > 0 and real.cmp(hi) < 0:
            return True
        if j >= 2 and Fraction(1, 1 << (j + 5)) < absb / (4 * ((j + 2) * M) ** 2):
            return False


def ledger(cfg: ApproxConfig, stages: int, catalog=None) -> dict:
    enum = ErrorSetEnum(cfg, catalog)
    enum.advance_to(stages)
    return enum.ledger()
