"""Continuous repair of programs that compute reals against jump oracles.

Running a program over a whole interval of inputs at once, with jump
queries answered only when the finite approximation is settled on that
interval, turns every halting run into a certified bound: "the output's
cut gains this rational for every input committed here".  The repaired
function follows those bounds wherever the input stays clear of the
published correction set, and switches to declared piecewise-linear
recipes inside it, so it is continuous everywhere, agrees with the
original off a set of measure below epsilon, and evaluates uniformly
from any enumeration of the input's cut.

One global stage clock drives every enumeration here (probe dovetail,
correction stream, and each evaluation's pulls), and everything
recorded is stamped with its stage and never retracted, so several
evaluations can share one state and still see exactly the prefix their
own clock has earned.
"""

from __future__ import annotations

import itertools
from bisect import bisect_left, bisect_right, insort
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Optional

from .approx import (ApproxConfig, ErrorSetEnum, buffer_of,
                     interval_jump_bit, wide_regions)
from .codes import out_lower, out_split, out_upper, unpair
from .cuts import CutItem, split_interval
from .jumps import parse_presentation
from .machine import (NINF, PINF, Combinator, RunOutcome, StringOracle,
                      Transducer, decode, encode, piece_string, run)
from .rationals import (IntervalUnion, height, rat_enum, rat_index,
                        simplest_in)

DEFAULT_THETA_BUDGET = 1 << 20

# dovetail slots probed per correction-stream stage; the quadratic slot
# schedule needs this head start for bounds on split pieces a few
# levels down to certify while their plan components are still active
PROBE_RATE = 16

# settled guard answers are exact, so their whole dyadic ladder is
# certifiable the moment the piece is probed; this is the deepest step
# whose sums against small answer values stay under the height cap
_DEEP_M = 22

# bounds with height past this would need summatory-totient values far
# beyond what stays interactive; the probe skips them, which caps the
# certified bracket width at roughly 2^-22
_HEIGHT_CAP = 1 << 24

# endpoints taller than this have enumeration indices past ten million,
# so no reachable stage could ever fit a window inside their buffers
_WATCH_HEIGHT = 4096


class StageBudgetExceeded(RuntimeError):
    """An evaluation passed its caller-imposed stage cap."""


class BoundComputation(NamedTuple):
    interval: tuple  # open (c, c'), Fractions
    bound: Fraction
    kind: str  # "upper" | "lower"
    discovery_stage: int


class EndPolicy(NamedTuple):
    endpoint: Fraction  # pending outer end of the component
    inner: Fraction  # breakpoint the recipe lines join to


class EvalReport(NamedTuple):
    value: object  # Fraction | "+inf" | "-inf"
    bracket: tuple  # (best lower, best upper) at answer time
    on_plan: bool  # answered from the declared recipe, not raw bounds
    stage: int
    pulls: int
    window: tuple


def repair_config(epsilon) -> ApproxConfig:
    """Approximation the repair pipeline runs against: double-jump
    presentation with its designated top column, whole-line cells."""
    return ApproxConfig(Fraction(epsilon), parse_presentation("2"), ambient=None)


def theta_run(cfg: ApproxConfig, findex: int, string, query,
              budget: int = DEFAULT_THETA_BUDGET) -> RunOutcome:
    """Run a program against an interval's cut string, jump queries
    answered only when stable across the whole interval.

    A halt certifies the answer for every real committed to the
    interval: any single oracle for such a real gives the same bits.
    """
    def backend(level, e):
        return interval_jump_bit(cfg, level, e, string.a, string.b)

    oracle = StringOracle(string, jump_backend=backend)
    return run(findex, oracle, input_code=query, budget=budget)


# ---------------------------------------------------------------------------
# probe intervals


class _MeshWalk:
    """Deduplicated stream of probe intervals.

    Every dyadic window at every scale, cut at its few simplest interior
    rationals so each piece has a fixed finite cut string.  Windows too
    deep to split exactly are skipped; they sit far past any stage the
    drivers reach.
    """

    def __init__(self):
        self.pieces = []
        self._seen = set()
        self._gen = self._walk()

    def piece(self, i):
        while len(self.pieces) <= i:
            self.pieces.append(next(self._gen))
        return self.pieces[i]

    def _walk(self):
        # diagonal over (level, center rank), center-out within a level:
        # a deep window near the origin arrives as early as a shallow one
        # far out, so the pieces evaluations need first get small slots
        for w in itertools.count():
            for lvl in range(w + 1):
                rank = w - lvl
                span = (lvl + 1) << lvl
                c = (rank + 1) // 2 if rank % 2 else -(rank // 2)
                if abs(c) >= span:
                    continue
                scale = Fraction(1, 1 << lvl)
                j = c - 1
                try:
                    parts = split_interval(j * scale, (j + 2) * scale)
                except ValueError:
                    continue
                for piece in parts:
                    if piece not in self._seen:
                        self._seen.add(piece)
                        yield piece


_MESH = _MeshWalk()

_UNSET = object()


class _ProbeStream:
    """Certified bound computations, one dovetail slot per stage.

    Stage s names a (probe interval, depth) pair.  Candidate bounds
    come from the program's answer shape on that interval, and every
    candidate is confirmed by an actual halting run before it counts.
    """

    def __init__(self, cfg: ApproxConfig, findex: int):
        self.cfg = cfg
        self.findex = findex
        self.prog = decode(findex)
        self._tried = set()
        self._region = {}  # piece -> settled region_step value, or None

    def step(self, slot: int, stage: int) -> list:
        piece_i, m = unpair(slot - 1)
        piece = _MESH.piece(piece_i)
        found = []
        for kind, bound in self._candidates(piece, m):
            key = (piece, kind, bound)
            if key in self._tried:
                continue
            self._tried.add(key)
            if height(bound) > _HEIGHT_CAP:
                continue
            if self._verified(piece, kind, bound):
                found.append(BoundComputation(piece, bound, kind, stage))
        return found

    def _candidates(self, piece, m):
        prog = self.prog
        if not isinstance(prog, Transducer):
            return
        c, d = piece
        step = Fraction(1, 1 << m)
        if prog.family == "identity":
            if m == 0:
                yield "upper", d
                yield "lower", c
            return
        if prog.family == "square":
            if m == 0:
                yield "upper", max(c * c, d * d)
            if c >= 0:
                yield "lower", c * c - step
            elif d <= 0:
                yield "lower", d * d - step
            else:
                yield "lower", -step
            return
        if prog.family == "const":
            yield "upper", prog.value + step
            yield "lower", prog.value - step
            return
        value = self._region_value(piece)
        if value is None or m:
            return
        deep = Fraction(1, 1 << _DEEP_M)
        if value == PINF:
            yield "lower", Fraction(1 << _DEEP_M)
        elif value == NINF:
            yield "upper", Fraction(-(1 << _DEEP_M))
        else:
            yield "upper", value + deep
            yield "lower", value - deep

    def _region_value(self, piece):
        # first settled affirmative test wins; any unsettled test before
        # that blocks the whole piece (stability is stage-independent)
        got = self._region.get(piece, _UNSET)
        if got is _UNSET:
            prog = self.prog
            got = prog.values[-1]
            for pos, e in enumerate(prog.tests):
                bit = interval_jump_bit(self.cfg, prog.level, e,
                                        piece[0], piece[1])
                if bit is None:
                    got = None
                    break
                if bit:
                    got = prog.values[pos]
                    break
            self._region[piece] = got
        return got

    def _verified(self, piece, kind, bound):
        string = piece_string(piece)
        code = out_upper if kind == "upper" else out_lower
        query = code(rat_index(bound), string.length)
        out = theta_run(self.cfg, self.findex, string, query)
        return out.status == "halted" and out.value == 1


def enumerate_computations(cfg: ApproxConfig, findex: int):
    """All certified interval bounds for the program, in discovery
    order; the dovetail order over (interval, depth) slots is fixed."""
    probe = _ProbeStream(cfg, findex)
    for s in itertools.count(1):
        for slot in range(PROBE_RATE * (s - 1) + 1, PROBE_RATE * s + 1):
            yield from probe.step(slot, s)


# ---------------------------------------------------------------------------
# recipes over the correction set


@dataclass
class RepairPlan:
    """Piecewise-linear recipe for one component of the correction set.

    Breakpoint values are declared once and never moved; the hull span
    between the first and last of them is the frozen core.  Outside the
    core the recipe stays open: emissions there follow lines anchored
    at the current pointwise bounds of the hull ends, and the segment
    only hardens as later absorptions declare breakpoints inside it.
    """

    error_interval: tuple  # open hull (lo, hi)
    breakpoints: dict = field(default_factory=dict)  # position -> value
    end_policies: dict = field(default_factory=dict)  # "left"/"right"
    items: list = field(default_factory=list)  # (lo, hi, stage) members
    order: list = field(default_factory=list)  # sorted breakpoint positions
    stage: int = 0


def _pick(uv) -> Fraction:
    """Declared value from pointwise bounds: the least certified upper
    bound when one exists, else the greatest lower, else zero.  Bounds
    on an interval constrain its open interior only, so touching the
    least upper at the point itself stays consistent."""
    u, v = uv
    if u is not None:
        return u
    if v is not None:
        return v
    return Fraction(0)


def _clip_out(parts, cut):
    a, b = cut
    out = []
    for p0, p1 in parts:
        if p1 <= a or b <= p0:
            out.append((p0, p1))
            continue
        if p0 < a:
            out.append((p0, a))
        if b < p1:
            out.append((b, p1))
    return out


class PlanBook:
    """Sorted disjoint components of the enumerated correction set,
    each carrying its recipe.  Absorbing an interval merges every
    component it strictly overlaps."""

    def __init__(self):
        self.components: list[RepairPlan] = []
        self._lows: list[Fraction] = []

    def component_at(self, x) -> Optional[RepairPlan]:
        i = bisect_right(self._lows, x)
        if i and x < self.components[i - 1].error_interval[1]:
            return self.components[i - 1]
        return None

    def absorb(self, iv, stage, bounds_at, comp_intervals) -> RepairPlan:
        lo, hi = Fraction(iv[0]), Fraction(iv[1])
        start = bisect_right(self._lows, lo)
        if start and self.components[start - 1].error_interval[1] > lo:
            start -= 1
        stop = start
        while (stop < len(self.components)
               and self.components[stop].error_interval[0] < hi):
            stop += 1
        merged = self.components[start:stop]
        new_lo = min([lo] + [c.error_interval[0] for c in merged])
        new_hi = max([hi] + [c.error_interval[1] for c in merged])
        plan = RepairPlan((new_lo, new_hi), stage=stage)
        # declared spans are frozen; only territory outside every merged
        # component's breakpoint hull may take new declarations
        fresh = [(lo, hi)]
        for c in merged:
            plan.breakpoints.update(c.breakpoints)
            plan.items.extend(c.items)
            fresh = _clip_out(fresh, (c.order[0], c.order[-1]))
        plan.items.append((lo, hi, stage))
        cand = set()
        for c0, c1 in comp_intervals:
            cand.add(c0)
            cand.add(c1)
        for q in sorted(cand):
            if q not in plan.breakpoints and any(f0 < q < f1
                                                for f0, f1 in fresh):
                plan.breakpoints[q] = _pick(bounds_at(q))
        if not plan.breakpoints:
            mid = (new_lo + new_hi) / 2
            plan.breakpoints[mid] = _pick(bounds_at(mid))
        plan.order = sorted(plan.breakpoints)
        plan.end_policies = {
            "left": EndPolicy(new_lo, plan.order[0]),
            "right": EndPolicy(new_hi, plan.order[-1]),
        }
        self.components[start:stop] = [plan]
        self._lows[start:stop] = [new_lo]
        return plan


def _g_at(inner, vals, x):
    i = bisect_left(inner, x)
    if i < len(inner) and inner[i] == x:
        return vals[inner[i]]
    q0, q1 = inner[i - 1], inner[i]
    y0, y1 = vals[q0], vals[q1]
    return y0 + (y1 - y0) * (x - q0) / (q1 - q0)


def _line(x0, y0, x1, y1, x):
    return y0 + (y1 - y0) * (x - x0) / (x1 - x0)


def _recipe_bounds(plan: RepairPlan, inner, hull, bounds_at, a, b):
    """(low, high) extremes of the recipe's certified envelope over
    [a, b] inside the given hull; a side is None while the end segment
    it needs still lacks an anchor of that kind."""
    vals = plan.breakpoints
    p0, pk = inner[0], inner[-1]
    highs, lows = [], []
    ok_high = ok_low = True
    mid_a, mid_b = max(a, p0), min(b, pk)
    if mid_a <= mid_b:
        xs = [mid_a, mid_b]
        xs += inner[bisect_right(inner, mid_a):bisect_left(inner, mid_b)]
        got = [_g_at(inner, vals, x) for x in xs]
        highs += got
        lows += got
    for end, p_in, seg in (
        (hull[0], p0, (a, min(b, p0)) if a < p0 else None),
        (hull[1], pk, (max(a, pk), b) if b > pk else None),
    ):
        if seg is None:
            continue
        u, v = bounds_at(end)
        y_in = vals[p_in]
        if u is None:
            ok_high = False
        else:
            highs += [_line(end, u, p_in, y_in, x) for x in seg]
        if v is None:
            ok_low = False
        else:
            lows += [_line(end, v, p_in, y_in, x) for x in seg]
    high = max(highs) if ok_high and highs else None
    low = min(lows) if ok_low and lows else None
    return low, high


# ---------------------------------------------------------------------------
# shared stage-synchronized state


def _latest(entries, stage):
    # entries are (stage, bound) with strictly improving bounds
    if stage is None:
        return entries[-1][1] if entries else None
    i = bisect_right(entries, stage, key=lambda t: t[0])
    return entries[i - 1][1] if i else None


class RepairState:
    """Everything one (config, program) pair has enumerated so far.

    advance_to(s) runs one probe slot and one correction-stream slot
    per stage.  All records carry their stage, so an evaluation lagging
    behind the global clock reads exactly the prefix it has earned.
    """

    def __init__(self, cfg: ApproxConfig, findex: int, catalog=None):
        self.cfg = cfg
        self.findex = findex
        self.computations: list[BoundComputation] = []
        self.errors = ErrorSetEnum(cfg, catalog)
        self.book = PlanBook()
        self.union = IntervalUnion()
        self.items = []  # absorbed ErrorItems, stage order
        self.watched = []  # (index, endpoint, stage), sorted by index
        self.by_piece = {}  # interval -> {"upper": [...], "lower": [...]}
        self.stage = 0
        self.wide = wide_regions(cfg)
        self._probe = _ProbeStream(cfg, findex)
        self._absorbed = 0
        self._buffers = {}
        self._at_cache = {}  # q -> [u, v], valid for the current stage only

    def advance_to(self, stage: int):
        while self.stage < stage:
            s = self.stage = self.stage + 1
            for slot in range(PROBE_RATE * (s - 1) + 1, PROBE_RATE * s + 1):
                for comp in self._probe.step(slot, s):
                    self.computations.append(comp)
                    self._note(comp)
            self.errors.advance_to(s)
            while self._absorbed < len(self.errors.items):
                item = self.errors.items[self._absorbed]
                self._absorbed += 1
                self.items.append(item)
                self.union.insert(item.lo, item.hi)
                self.book.absorb((item.lo, item.hi), item.stage,
                                 self.bounds_at, self.by_piece)
                for end in (item.lo, item.hi):
                    if height(end) <= _WATCH_HEIGHT:
                        insort(self.watched, (rat_index(end), end, item.stage))

    def _note(self, comp: BoundComputation):
        rec = self.by_piece.setdefault(comp.interval,
                                       {"upper": [], "lower": []})
        entries = rec[comp.kind]
        better = (comp.bound < entries[-1][1] if comp.kind == "upper"
                  else comp.bound > entries[-1][1]) if entries else True
        if better:
            entries.append((comp.discovery_stage, comp.bound))
            c0, c1 = comp.interval
            for q, uv in self._at_cache.items():
                if c0 <= q <= c1:
                    if comp.kind == "upper":
                        if uv[0] is None or comp.bound < uv[0]:
                            uv[0] = comp.bound
                    elif uv[1] is None or comp.bound > uv[1]:
                        uv[1] = comp.bound

    def bounds_at(self, q, stage=None):
        """(least upper, greatest lower) certified at q by the stage,
        scanning closures of the certified intervals."""
        if stage is None or stage >= self.stage:
            # current-stage queries dominate; keep them incremental
            got = self._at_cache.get(q)
            if got is None:
                got = self._at_cache[q] = list(self._scan(q, None))
            return got[0], got[1]
        return self._scan(q, stage)

    def _scan(self, q, stage):
        u = v = None
        for (c0, c1), rec in self.by_piece.items():
            if c0 <= q <= c1:
                b = _latest(rec["upper"], stage)
                if b is not None and (u is None or b < u):
                    u = b
                b = _latest(rec["lower"], stage)
                if b is not None and (v is None or b > v):
                    v = b
        return u, v

    def buffer(self, j: int):
        got = self._buffers.get(j)
        if got is None:
            got = self._buffers[j] = buffer_of(self.cfg, j)
        return got

    @property
    def plans(self):
        """Absorbed item -> its component's recipe."""
        return {(lo, hi): comp for comp in self.book.components
                for lo, hi, _ in comp.items}


def secondary_step(state: RepairState, new_error, s: int) -> RepairPlan:
    """Absorb one correction interval at stage s: declare values for
    fresh breakpoints and newly stranded endpoints, reanchor the ends."""
    lo, hi = Fraction(new_error[0]), Fraction(new_error[1])
    return state.book.absorb((lo, hi), s,
                             lambda q: state.bounds_at(q, s), state.by_piece)


# ---------------------------------------------------------------------------
# evaluation


class OutputCut:
    """Append-only record of one evaluation's emitted cut elements."""

    __slots__ = ("lowers", "uppers", "lower_best", "upper_best", "log")

    def __init__(self):
        self.lowers = set()
        self.uppers = set()
        self.lower_best = None  # greatest emitted lower
        self.upper_best = None  # least emitted upper
        self.log = []  # (stage, kind, value), emission order

    def emit(self, kind: str, value, stage: int) -> bool:
        """Record one element; False when the coherence guard refuses
        (the value would cross the other side's best emission)."""
        if kind == "upper":
            if self.lower_best is not None and value <= self.lower_best:
                return False
            if value not in self.uppers:
                self.uppers.add(value)
                self.log.append((stage, kind, value))
                if self.upper_best is None or value < self.upper_best:
                    self.upper_best = value
        else:
            if self.upper_best is not None and value >= self.upper_best:
                return False
            if value not in self.lowers:
                self.lowers.add(value)
                self.log.append((stage, kind, value))
                if self.lower_best is None or value > self.lower_best:
                    self.lower_best = value
        return True

    def bracket(self):
        return (self.lower_best, self.upper_best)


class Evaluation:
    """Drives one input enumeration against a shared state.

    Owns its pull iterator and stage clock; reads only records stamped
    at or before its own stage, so sharing a state cannot leak another
    evaluation's progress into this one.
    """

    def __init__(self, state: RepairState, enum, n: int, collect=False):
        self.state = state
        self.enum = enum
        self.n = n
        self.tol = Fraction(1, 1 << n)
        self.cut = OutputCut()
        self.stage = 0
        self.pulls = 0
        self.lo = None
        self.hi = None
        self.committed = False
        self.on_plan = False
        self.pending = []  # admitted computations not yet emitted
        self.skipped = 0  # coherence-guard refusals (diagnostic)
        self.history = [] if collect else None
        self._items = enum.items()
        self._stalled = False
        self._seen_items = 0
        self._seen_comps = 0
        self._union = None  # private copy, built only if we lag the state

    def step(self):
        """One stage; the answer when this stage settles it, else None."""
        s = self.stage = self.stage + 1
        self.state.advance_to(s)
        self._pull()
        self._pull()
        self._sync(s)
        if self.lo is None or self.hi is None:
            return None
        a, b = self.lo, self.hi
        if self.history is not None:
            self.history.append((s, a, b))
        if not self.committed and self._containing_item(a, b, s):
            self.committed = True
        if self.committed:
            self._plan_emit(s, a, b)
        elif self._view().disjoint_closed(a, b):
            if not self._wide_idle(a, b) and not self._buffer_idle(a, b, s):
                self._comp_emit(s, a, b)
        return self._extract()

    # -- pulls and record syncing

    def _pull(self):
        item = next(self._items, None)
        if item is None:
            self._stalled = True
            return
        self.pulls += 1
        if item.upper:
            if self.hi is None or item.q < self.hi:
                self.hi = item.q
        else:
            if self.lo is None or item.q > self.lo:
                self.lo = item.q

    def _sync(self, s):
        st = self.state
        while (self._seen_items < len(st.items)
               and st.items[self._seen_items].stage <= s):
            item = st.items[self._seen_items]
            self._seen_items += 1
            if self._union is not None:
                self._union.insert(item.lo, item.hi)
        comps = st.computations
        while (self._seen_comps < len(comps)
               and comps[self._seen_comps].discovery_stage <= s):
            self.pending.append(comps[self._seen_comps])
            self._seen_comps += 1

    def _view(self) -> IntervalUnion:
        if self._union is not None:
            return self._union
        if self._seen_items == len(self.state.items):
            return self.state.union  # in lockstep with the global clock
        self._union = IntervalUnion()
        for item in self.state.items[:self._seen_items]:
            self._union.insert(item.lo, item.hi)
        return self._union

    # -- the three conditions

    def _containing_item(self, a, b, s):
        plan = self.state.book.component_at(a)
        if plan is None:
            return False
        return any(st <= s and lo < a and b < hi
                   for lo, hi, st in plan.items)

    def _wide_idle(self, a, b):
        # a window reaching into a fat residual region is going to
        # commit once the region's items surface; answering early from
        # bounds discovered in there would tie the value to the probe
        # order instead of the declared recipe
        return any(a < hi and lo < b for lo, hi in self.state.wide)

    def _buffer_idle(self, a, b, s):
        # a window can only fit in buffers at least as wide as itself
        width = b - a
        jcap = ((2 * width.denominator) // max(width.numerator, 1)).bit_length()
        for j, _end, st in self.state.watched:
            if j > jcap:
                break
            if st > s:
                continue
            blo, bhi = self.state.buffer(j)
            if blo < a and b < bhi:
                return True
        return False

    def _comp_emit(self, s, a, b):
        keep = []
        for comp in self.pending:
            c0, c1 = comp.interval
            if c1 <= a or b <= c0:
                continue  # the window escaped this interval for good
            if c0 < a and b < c1:
                side = self.cut.uppers if comp.kind == "upper" else self.cut.lowers
                if comp.bound in side:
                    continue
                if self.cut.emit(comp.kind, comp.bound, s):
                    continue
                self.skipped += 1
            keep.append(comp)
        self.pending = keep

    def _plan_emit(self, s, a, b):
        hull = self._view().part_containing(a)
        plan = self.state.book.component_at(a)
        order = plan.order
        inner = order[bisect_right(order, hull[0]):bisect_left(order, hull[1])]
        low, high = _recipe_bounds(
            plan, inner, hull, lambda q: self.state.bounds_at(q, s), a, b)
        step = Fraction(1, 1 << s)
        if low is not None and not self.cut.emit("lower", low - step, s):
            self.skipped += 1
        if high is not None and not self.cut.emit("upper", high + step, s):
            self.skipped += 1

    # -- answers

    def _extract(self):
        lb, ub = self.cut.lower_best, self.cut.upper_best
        if lb is not None and ub is not None and ub - lb < self.tol:
            if self.committed:
                got = self._recipe_answer(lb, ub)
                if got is not None:
                    return got
            return simplest_in(lb, ub)
        if not self.committed:
            big = Fraction(1 << self.n)
            if lb is None and ub is not None and ub <= -big:
                return NINF
            if ub is None and lb is not None and lb >= big:
                return PINF
        return None

    def _recipe_answer(self, lb, ub):
        # a committed window answers the declared recipe at the simplest
        # input it still allows; inside a frozen span that is a value on
        # the plan's own line, so neighbours committed to one plan agree
        # with its linear shape exactly instead of scattering over the
        # bracket
        plan = self.state.book.component_at(self.lo)
        if plan is None or plan.stage > self.stage:
            return None
        p = simplest_in(self.lo, self.hi)
        order = plan.order
        if not order or not order[0] <= p <= order[-1]:
            return None
        got = _g_at(order, plan.breakpoints, p)
        if lb < got < ub:
            self.on_plan = True
            return got
        return None

    def report(self, value) -> EvalReport:
        return EvalReport(value, self.cut.bracket(), self.on_plan,
                          self.stage, self.pulls, (self.lo, self.hi))


def main_step(state: RepairState, xapprox, s: int, cut=None):
    """One output-driving stage against a fixed input window, derived
    from scratch each call (the batched evaluator keeps incremental
    views of the very same records).

    Returns (mode, emitted) with mode "plan", "emit", or "idle" and the
    cut elements this stage added.
    """
    state.advance_to(s)
    if hasattr(xapprox, "best_lo"):
        a, b = xapprox.best_lo, xapprox.best_hi
    else:
        a, b = xapprox
    if a is None or b is None:
        return "idle", []
    if cut is None:
        cut = OutputCut()
    mark = len(cut.log)
    union = IntervalUnion()
    for item in state.items:
        if item.stage <= s:
            union.insert(item.lo, item.hi)
    bounds_at = lambda q: state.bounds_at(q, s)
    plan = state.book.component_at(a)
    if plan is not None and any(st <= s and lo < a and b < hi
                                for lo, hi, st in plan.items):
        hull = union.part_containing(a)
        order = plan.order
        inner = order[bisect_right(order, hull[0]):bisect_left(order, hull[1])]
        low, high = _recipe_bounds(plan, inner, hull, bounds_at, a, b)
        step = Fraction(1, 1 << s)
        if low is not None:
            cut.emit("lower", low - step, s)
        if high is not None:
            cut.emit("upper", high + step, s)
        return "plan", cut.log[mark:]
    if not union.disjoint_closed(a, b):
        return "idle", []
    width = b - a
    jcap = ((2 * width.denominator) // max(width.numerator, 1)).bit_length()
    for j, _end, st in state.watched:
        if j > jcap:
            break
        if st <= s:
            blo, bhi = state.buffer(j)
            if blo < a and b < bhi:
                return "idle", []
    for comp in state.computations:
        if comp.discovery_stage > s:
            break
        c0, c1 = comp.interval
        if c0 < a and b < c1:
            cut.emit(comp.kind, comp.bound, s)
    return "emit", cut.log[mark:]


def evaluate_many(cfg: ApproxConfig, findex: int, enums, n: int,
                  state: Optional[RepairState] = None,
                  max_stage: Optional[int] = None) -> list:
    """Evaluate several input enumerations in lockstep over one shared
    state; lockstep keeps every view on the cheap shared path."""
    if state is None:
        state = RepairState(cfg, findex)
    evs = [Evaluation(state, enum, n) for enum in enums]
    out = [None] * len(evs)
    live = list(range(len(evs)))
    while live:
        still = []
        for i in live:
            got = evs[i].step()
            if got is not None:
                out[i] = evs[i].report(got)
            elif max_stage is not None and evs[i].stage >= max_stage:
                raise StageBudgetExceeded(
                    f"no answer for input {i} by stage {evs[i].stage}")
            else:
                still.append(i)
        live = still
    return out


def evaluate(cfg: ApproxConfig, findex: int, enum, n: int,
             state: Optional[RepairState] = None,
             max_stage: Optional[int] = None) -> EvalReport:
    return evaluate_many(cfg, findex, [enum], n, state=state,
                         max_stage=max_stage)[0]


def gamma_evaluate(cfg: ApproxConfig, findex: int, enum, n: int,
                   state: Optional[RepairState] = None,
                   max_stage: Optional[int] = None):
    """Rational (or signed-infinity marker) within 2^-n of the repaired
    function's value at the real the enumeration presents."""
    return evaluate(cfg, findex, enum, n, state=state,
                    max_stage=max_stage).value


class RepairedFunction:
    """The repaired function as an evaluator: feed any enumeration of
    an input's cut and a precision, get an answer within 2^-n.

    All evaluations share one state, so repeated calls keep every
    enumeration's progress."""

    def __init__(self, cfg: ApproxConfig, findex: int,
                 state: Optional[RepairState] = None):
        self.cfg = cfg
        self.findex = findex
        self.state = state if state is not None else RepairState(cfg, findex)

    def report(self, enum, n: int, max_stage: Optional[int] = None):
        return evaluate(self.cfg, self.findex, enum, n, state=self.state,
                        max_stage=max_stage)

    def __call__(self, enum, n: int, max_stage: Optional[int] = None):
        return self.report(enum, n, max_stage=max_stage).value


def compile_lusin(epsilon, findex: int, pad: int = 0) -> int:
    """Index of the compiled repair; total and injective in
    (epsilon, findex, pad) by construction of the encoding."""
    return encode(Combinator("repair", int(findex), Fraction(epsilon), pad))


# ---------------------------------------------------------------------------
# running compiled repairs


class _OracleEnum:
    """Canonical-order cut stream recovered from an oracle's bit
    access; ends (stalling the evaluation) if the oracle runs out."""

    def __init__(self, oracle):
        self.oracle = oracle

    def items(self):
        tag = 0
        for i in itertools.count():
            lo = self.oracle.cut_lower_bit(i)
            hi = self.oracle.cut_upper_bit(i)
            if lo is None or hi is None:
                return
            q = rat_enum(i)
            if lo:
                yield CutItem(q, tag, False)
                tag += 1
            if hi:
                yield CutItem(q, tag, True)
                tag += 1


_SHARED: dict = {}


def shared_state(epsilon, findex: int) -> RepairState:
    key = (Fraction(epsilon), findex)
    got = _SHARED.get(key)
    if got is None:
        got = _SHARED[key] = RepairState(repair_config(epsilon), findex)
    return got


def repair_run(prog: Combinator, oracle, input_code, budget) -> RunOutcome:
    """Membership driver for a compiled repair.

    The input position names one prospective cut element of the output;
    halting affirms it.  A query the emitted extremes already refute is
    reported diverged; anything still open suspends at the budget.
    """
    if input_code is None:
        return RunOutcome("diverged", budget, note="repairs need a position")
    rat_idx, _tag, is_upper = out_split(input_code)
    q = rat_enum(rat_idx)
    state = shared_state(prog.epsilon, prog.findex)
    ev = Evaluation(state, _OracleEnum(oracle), n=0)
    steps = 0
    while steps < budget:
        ev.step()
        steps += 1
        lb, ub = ev.cut.lower_best, ev.cut.upper_best
        if is_upper:
            if ub is not None and q >= ub:
                return RunOutcome("halted", steps, value=1)
            if lb is not None and q <= lb:
                return RunOutcome("diverged", steps, note="refuted")
        else:
            if lb is not None and q <= lb:
                return RunOutcome("halted", steps, value=1)
            if ub is not None and q >= ub:
                return RunOutcome("diverged", steps, note="refuted")
    return RunOutcome("suspended", steps)
