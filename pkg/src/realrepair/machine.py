"""Clocked programs over structured oracles.

Three program shapes cover the bench:

* guards, which halt exactly when the oracle's cut extends one of a
  stream of interval strings (their halting sets are open sets given
  with exact measure bookkeeping);
* transducers, which enumerate the cut of f(x) from the cut of x,
  querying only finitely many bits per output position;
* combinators, self-describing wrappers that run the repair or the
  box-recovery pipeline as a single program.

Indices: a reserved table at 0..63 pins the bench programs to short
indices (downstream tolerance budgets shrink with the index, so the
programs that matter must sit low).  Everything else round-trips
through a length-prefixed byte payload shifted past the table; decode
is total, with malformed payloads reading as the divergent program.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, floor
from typing import NamedTuple, Optional

from .cuts import CutString, interval_string, split_interval
from .fixtures import MINUS_INF, PLUS_INF, QuadReal
from .rationals import IntervalUnion, Rat

PINF = "+inf"
NINF = "-inf"


def _as_value(v):
    """Normalize a declared value: Fraction, or the (+/-)inf markers."""
    if v in (PINF, NINF):
        return v
    return Fraction(v)


def value_as_real(v):
    if v == PINF:
        return PLUS_INF
    if v == NINF:
        return MINUS_INF
    return QuadReal(Fraction(v))


def _value_json(v):
    if v in (PINF, NINF):
        return v
    return [v.numerator, v.denominator]


def _value_from_json(data):
    if data in (PINF, NINF):
        return data
    return Fraction(data[0], data[1])


# ---------------------------------------------------------------------------
# trigger families


@dataclass(frozen=True)
class FiniteTrigger:
    """Finitely many open intervals, normalized to side-condition pieces."""

    intervals: tuple
    pieces: tuple = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        merged = IntervalUnion()
        for a, b in self.intervals:
            merged.insert(Fraction(a), Fraction(b))
        ivs = tuple(merged.parts)  # disjoint interiors, canonical order
        object.__setattr__(self, "intervals", ivs)
        pcs = []
        for a, b in ivs:
            pcs.extend(split_interval(a, b))
        for a, b in pcs:
            if floor(a) != ceil(b) - 1 and b != floor(a) + 1:
                raise ValueError(f"piece ({a}, {b}) straddles an integer")
        object.__setattr__(self, "pieces", tuple(pcs))

    kind = "finite"
    universal = False

    def piece(self, s: int):
        return self.pieces[s] if s < len(self.pieces) else None

    def contains(self, real) -> bool:
        return any(real.cmp(a) > 0 and real.cmp(b) < 0 for a, b in self.pieces)

    def cells(self):
        seen = sorted({floor(a) for a, _ in self.pieces})
        return iter(seen)

    def hull_within(self, lo: Rat, hi: Rat) -> IntervalUnion:
        u = IntervalUnion()
        for a, b in self.intervals:
            c, d = max(a, lo), min(b, hi)
            if c < d:
                u.insert(c, d)
        return u

    def hull_in_cell(self, n: int) -> IntervalUnion:
        return self.hull_within(Fraction(n), Fraction(n + 1))

    def measure_within(self, lo: Rat, hi: Rat) -> Rat:
        return self.hull_within(lo, hi).measure()

    def measure_in_cell(self, n: int) -> Rat:
        return self.measure_within(Fraction(n), Fraction(n + 1))

    def pieces_within(self, lo: Rat, hi: Rat):
        return [(a, b) for a, b in self.pieces if lo <= a and b <= hi]

    def pieces_in_cell(self, n: int):
        return self.pieces_within(Fraction(n), Fraction(n + 1))

    def to_json(self):
        return {
            "kind": "finite",
            "intervals": [
                [a.numerator, a.denominator, b.numerator, b.denominator]
                for a, b in self.intervals
            ],
        }


def _farey_neighbor(theta: Fraction, above: bool) -> Fraction:
    """The simplest fraction adjacent to theta on the given side
    (determinant one), anchoring a mediant ladder toward theta."""
    p, q = theta.numerator, theta.denominator
    if q == 1:
        return Fraction(p + 1) if above else Fraction(p - 1)
    # solve q*r - p*s = 1 (above) or p*s - q*r = 1 (below), 1 <= s < q
    inv = pow(p % q, -1, q)
    if above:
        s = (-inv) % q
        if s == 0:
            s = q
        r = (1 + p * s) // q
    else:
        s = inv % q
        if s == 0:
            s = q
        r = (p * s - 1) // q
    return Fraction(r, s)


@dataclass(frozen=True)
class HalfLineTrigger:
    """The open half line past theta, enumerated as a mediant ladder
    into theta plus a unit chain toward the infinite end.  Ladder cuts
    sit at (p*j + r)/(q*j + s), Farey neighbors of theta throughout, so
    every piece satisfies the side condition.
    """

    theta: Rat
    direction: int  # +1 for (theta, +inf), -1 for (-inf, theta)

    def __post_init__(self):
        object.__setattr__(self, "theta", Fraction(self.theta))
        if self.direction not in (1, -1):
            raise ValueError("direction must be +1 or -1")

    kind = "halfline"
    universal = False

    def _anchor(self) -> Fraction:
        return _farey_neighbor(self.theta, self.direction > 0)

    def _ladder(self, j: int) -> Fraction:
        p, q = self.theta.numerator, self.theta.denominator
        r, s = self._anchor().numerator, self._anchor().denominator
        return Fraction(p * j + r, q * j + s)

    def _far(self, m: int):
        c0 = self._anchor()
        if self.direction > 0:
            pts = [c0] if c0 == floor(c0) else [c0, Fraction(ceil(c0))]
            base = pts[-1]
            if m < len(pts) - 1:
                return (pts[m], pts[m + 1])
            k = m - (len(pts) - 1)
            return (base + k, base + k + 1)
        pts = [c0] if c0 == ceil(c0) else [c0, Fraction(floor(c0))]
        base = pts[-1]
        if m < len(pts) - 1:
            return (pts[m + 1], pts[m])
        k = m - (len(pts) - 1)
        return (base - k - 1, base - k)

    def piece(self, s: int):
        j, rem = divmod(s, 2)
        if rem == 0:
            lo, hi = self._ladder(j + 1), self._ladder(j)
            return (lo, hi) if self.direction > 0 else (hi, lo)
        return self._far(j)

    def contains(self, real) -> bool:
        c = real.cmp(self.theta)
        if c * self.direction <= 0:
            return False
        if not getattr(real, "is_rational", False):
            return True
        x = real.as_fraction()
        c0 = self._anchor()
        between = x < c0 if self.direction > 0 else x > c0
        if between:
            # boundary iff x is a ladder point: solve for integer j >= 0
            p, q = self.theta.numerator, self.theta.denominator
            r, s = c0.numerator, c0.denominator
            u, v = x.numerator, x.denominator
            den = u * q - v * p
            num = v * r - u * s
            return not (den != 0 and num % den == 0 and num // den >= 0)
        if x == c0:
            return False
        edge = Fraction(ceil(c0)) if self.direction > 0 else Fraction(floor(c0))
        if x == edge:
            return False
        return x != floor(x) or (self.direction > 0 and x < edge) or (
            self.direction < 0 and x > edge
        )

    def cells(self):
        start = floor(self.theta) if self.direction > 0 else floor(self.theta)
        if self.direction > 0:
            return itertools.count(start)
        return itertools.count(start, -1)

    def hull_within(self, lo: Rat, hi: Rat) -> IntervalUnion:
        u = IntervalUnion()
        if self.direction > 0:
            c, d = max(self.theta, lo), hi
        else:
            c, d = lo, min(self.theta, hi)
        if c < d:
            u.insert(c, d)
        return u

    def hull_in_cell(self, n: int) -> IntervalUnion:
        return self.hull_within(Fraction(n), Fraction(n + 1))

    def measure_within(self, lo: Rat, hi: Rat) -> Rat:
        return self.hull_within(lo, hi).measure()

    def measure_in_cell(self, n: int) -> Rat:
        return self.measure_within(Fraction(n), Fraction(n + 1))

    def pieces_within(self, lo: Rat, hi: Rat):
        """Lazy: the span next to theta holds the whole infinite ladder."""
        lo, hi = Fraction(lo), Fraction(hi)
        c0 = self._anchor()
        if self.direction > 0:
            ladder_touches = max(self.theta, lo) < min(c0, hi)
        else:
            ladder_touches = max(c0, lo) < min(self.theta, hi)
        for s in itertools.count():
            a, b = self.piece(s)
            if lo <= a and b <= hi:
                yield (a, b)
            if s % 2 == 1 and not ladder_touches:
                # only the one-way far chain can reach this span
                if self.direction > 0 and a >= hi:
                    return
                if self.direction < 0 and b <= lo:
                    return

    def pieces_in_cell(self, n: int):
        return self.pieces_within(Fraction(n), Fraction(n + 1))

    def to_json(self):
        return {
            "kind": "halfline",
            "theta": [self.theta.numerator, self.theta.denominator],
            "direction": self.direction,
        }


@dataclass(frozen=True)
class AllTrigger:
    """Matches every oracle: its pieces all contain 0, so their strings
    are empty and the empty prefix matches anything."""

    kind = "all"
    universal = True

    def piece(self, s: int):
        return (Fraction(-(1 << s)), Fraction(1 << s))

    def contains(self, real) -> bool:
        return True

    def cells(self):
        def gen():
            yield 0
            for k in itertools.count(1):
                yield -k
                yield k

        return gen()

    def hull_within(self, lo: Rat, hi: Rat) -> IntervalUnion:
        u = IntervalUnion()
        u.insert(Fraction(lo), Fraction(hi))
        return u

    def hull_in_cell(self, n: int) -> IntervalUnion:
        return self.hull_within(Fraction(n), Fraction(n + 1))

    def measure_within(self, lo: Rat, hi: Rat) -> Rat:
        return max(Fraction(0), Fraction(hi) - Fraction(lo))

    def measure_in_cell(self, n: int) -> Rat:
        return Fraction(1)

    def pieces_within(self, lo: Rat, hi: Rat):
        return []

    def pieces_in_cell(self, n: int):
        return []

    def to_json(self):
        return {"kind": "all"}


def trigger_from_json(data):
    kind = data["kind"]
    if kind == "finite":
        return FiniteTrigger(
            tuple((Fraction(a, b), Fraction(c, d)) for a, b, c, d in data["intervals"])
        )
    if kind == "halfline":
        return HalfLineTrigger(Fraction(*data["theta"]), data["direction"])
    if kind == "all":
        return AllTrigger()
    raise ValueError(f"bad trigger payload {data!r}")


_STRING_CACHE: dict = {}


def piece_string(piece) -> CutString:
    got = _STRING_CACHE.get(piece)
    if got is None:
        got = interval_string(piece[0], piece[1])
        _STRING_CACHE[piece] = got
    return got


# ---------------------------------------------------------------------------
# programs


@dataclass(frozen=True)
class Diverger:
    def to_json(self):
        return {"kind": "diverger"}


@dataclass(frozen=True)
class Guard:
    trigger: object
    name: str = field(default="", compare=False)

    def to_json(self):
        return {"kind": "guard", "trigger": self.trigger.to_json()}


@dataclass(frozen=True)
class Transducer:
    family: str
    value: object = None
    tests: tuple = ()
    values: tuple = ()
    level: int = 1

    def __post_init__(self):
        if self.family == "const":
            object.__setattr__(self, "value", _as_value(self.value))
        elif self.family == "region_step":
            if len(self.values) != len(self.tests) + 1:
                raise ValueError("region_step needs one value per test plus a default")
            object.__setattr__(self, "tests", tuple(int(e) for e in self.tests))
            object.__setattr__(self, "values", tuple(_as_value(v) for v in self.values))
        elif self.family not in ("identity", "square"):
            raise ValueError(f"unknown transducer family {self.family!r}")

    def to_json(self):
        d = {"kind": "transducer", "family": self.family, "level": self.level}
        if self.family == "const":
            d["value"] = _value_json(self.value)
        if self.family == "region_step":
            d["tests"] = list(self.tests)
            d["values"] = [_value_json(v) for v in self.values]
        return d


@dataclass(frozen=True)
class Combinator:
    task: str  # "repair" | "recover"
    findex: int
    epsilon: Optional[Rat] = None
    pad: int = 0

    def to_json(self):
        d = {"kind": "combinator", "task": self.task, "findex": self.findex,
             "pad": self.pad}
        if self.epsilon is not None:
            d["epsilon"] = [self.epsilon.numerator, self.epsilon.denominator]
        return d


def program_from_json(data):
    kind = data.get("kind")
    if kind == "diverger":
        return Diverger()
    if kind == "guard":
        return Guard(trigger_from_json(data["trigger"]))
    if kind == "transducer":
        fam = data["family"]
        if fam == "const":
            return Transducer("const", value=_value_from_json(data["value"]),
                              level=data.get("level", 1))
        if fam == "region_step":
            return Transducer(
                "region_step",
                tests=tuple(data["tests"]),
                values=tuple(_value_from_json(v) for v in data["values"]),
                level=data.get("level", 1),
            )
        return Transducer(fam, level=data.get("level", 1))
    if kind == "combinator":
        eps = data.get("epsilon")
        return Combinator(
            data["task"],
            data["findex"],
            Fraction(*eps) if eps is not None else None,
            data.get("pad", 0),
        )
    raise ValueError(f"bad program payload {data!r}")


# ---------------------------------------------------------------------------
# the reserved table

HALF = Fraction(1, 2)

PROGRAM_TABLE = (
    Diverger(),                                                # 0
    Guard(AllTrigger(), name="always"),                        # 1
    Guard(HalfLineTrigger(0, +1), name="positive"),            # 2
    Guard(HalfLineTrigger(0, -1), name="negative"),            # 3
    Guard(HalfLineTrigger(HALF, -1), name="below_half"),       # 4
    Guard(FiniteTrigger(((HALF, 1),)), name="window_mid"),     # 5
    Guard(FiniteTrigger(((Fraction(0), Fraction(1, 4)),
                         (Fraction(1, 8), Fraction(3, 8)))),
          name="window_pair"),                                 # 6
    Guard(FiniteTrigger(((Fraction(0), HALF), (HALF, 1))),
          name="window_split"),                                # 7
    Transducer("const", value=0),                              # 8
    Transducer("identity"),                                    # 9
    Transducer("square"),                                      # 10
    Transducer("region_step", tests=(2,), values=(1, 0)),      # 11 step at 0
    Transducer("region_step", tests=(3, 4), values=(0, 1, 2)), # 12 two steps
    Transducer("region_step", tests=(3,), values=(NINF, 0)),   # 13 sink then 0
    Transducer("const", value=5),                              # 14
)

RESERVED = 64

CATALOG = {
    "diverger": 0,
    "always": 1,
    "positive": 2,
    "negative": 3,
    "below_half": 4,
    "window_mid": 5,
    "window_pair": 6,
    "window_split": 7,
    "zero": 8,
    "identity": 9,
    "square": 10,
    "heaviside": 11,
    "two_step": 12,
    "neg_inf_step": 13,
    "five": 14,
}


def decode(e: int):
    """Total: every index denotes a program, junk reads as Diverger."""
    if e < 0:
        return Diverger()
    if e < RESERVED:
        return PROGRAM_TABLE[e] if e < len(PROGRAM_TABLE) else Diverger()
    raw = e - RESERVED
    try:
        blob = raw.to_bytes((raw.bit_length() + 7) // 8, "big")
        if not blob or blob[0] != 1:
            return Diverger()
        return program_from_json(json.loads(blob[1:].decode("utf-8")))
    except (ValueError, KeyError, TypeError, UnicodeDecodeError):
        return Diverger()


def encode(prog) -> int:
    body = json.dumps(prog.to_json(), sort_keys=True, separators=(",", ":"))
    return RESERVED + int.from_bytes(b"\x01" + body.encode("utf-8"), "big")


def padded_indices(task: str, findex: int, epsilon, count: int):
    """Distinct indices all decoding to the same combinator behavior."""
    return [
        encode(Combinator(task, findex, epsilon, pad=i)) for i in range(count)
    ]


# ---------------------------------------------------------------------------
# running programs


class RunOutcome(NamedTuple):
    status: str  # "halted" | "diverged" | "suspended"
    steps: int
    value: object = None
    note: str = ""


def _bits_match(piece, oracle, trace):
    """Three-way: True (prefix matches), False, or None (oracle ran out)."""
    s = piece_string(piece)
    suspended = False
    for i in range(s.length):
        got = oracle.cut_lower_bit(i)
        if trace is not None:
            trace.append(("lower", i, got))
        if got is None:
            suspended = True
        elif got != s.bit_lower(i):
            return False, s.length
        got = oracle.cut_upper_bit(i)
        if trace is not None:
            trace.append(("upper", i, got))
        if got is None:
            suspended = True
        elif got != s.bit_upper(i):
            return False, s.length
    return (None if suspended else True), s.length


def run(prog, oracle, input_code: Optional[int] = None, budget: int = 1000,
        trace=None) -> RunOutcome:
    if isinstance(prog, int):
        prog = decode(prog)
    if isinstance(prog, Diverger):
        return RunOutcome("diverged", budget)
    if isinstance(prog, Guard):
        return _run_guard(prog, oracle, budget, trace)
    if isinstance(prog, Transducer):
        if input_code is None:
            raise ValueError("transducers need an input position")
        ans, steps = transducer_answer(prog, oracle, input_code, trace)
        if ans is None:
            return RunOutcome("suspended", steps)
        if ans:
            return RunOutcome("halted", steps, value=1)
        return RunOutcome("diverged", max(steps, budget))
    if isinstance(prog, Combinator):
        from . import pipelines

        return pipelines.combinator_run(prog, oracle, input_code, budget)
    raise TypeError(f"not a program: {prog!r}")


def _run_guard(prog, oracle, budget, trace):
    spent = 0
    suspended = False
    for s in itertools.count():
        piece = prog.trigger.piece(s)
        if piece is None:
            return RunOutcome("suspended" if suspended else "diverged", spent,
                             note="trigger exhausted")
        verdict, length = _bits_match(piece, oracle, trace)
        spent += 2 * length + 1
        if verdict is True:
            return RunOutcome("halted", spent, value=1)
        if verdict is None:
            suspended = True
        if spent >= budget:
            return RunOutcome("suspended" if suspended else "diverged", spent)


def _window_bounds(oracle, n: int, trace):
    """Best lower/upper cut values among the first n positions, or None
    entries where the oracle suspends."""
    from .rationals import rat_enum

    best_lo = best_hi = None
    ran_out = False
    queries = 0
    for i in range(n):
        q = rat_enum(i)
        lo = oracle.cut_lower_bit(i)
        hi = oracle.cut_upper_bit(i)
        queries += 2
        if trace is not None:
            trace.append(("lower", i, lo))
            trace.append(("upper", i, hi))
        if lo is None or hi is None:
            ran_out = True
            continue
        if lo:
            if best_lo is None or q > best_lo:
                best_lo = q
        if hi:
            if best_hi is None or q < best_hi:
                best_hi = q
    return best_lo, best_hi, ran_out, queries


def transducer_answer(prog, oracle, input_code: int, trace=None):
    """Membership bit for an output position, with the query count.

    Returns (bit, steps); bit None when the oracle suspended inside the
    window the position is tagged with.
    """
    from .codes import out_split
    from .rationals import rat_enum

    rat_idx, tag, is_upper = out_split(input_code)
    q = rat_enum(rat_idx)
    fam = prog.family

    if fam == "const":
        return _value_side_bit(prog.value, q, is_upper), 1

    if fam in ("identity", "square"):
        best_lo, best_hi, ran_out, queries = _window_bounds(oracle, tag, trace)
        if fam == "identity":
            if is_upper:
                bit = best_hi is not None and q >= best_hi
            else:
                bit = best_lo is not None and q <= best_lo
        else:
            bit = _square_bit(best_lo, best_hi, q, is_upper)
        if not bit and ran_out:
            return None, queries + 1
        return (1 if bit else 0), queries + 1

    if fam == "region_step":
        queries = 0
        value = prog.values[-1]
        for pos, e in enumerate(prog.tests):
            got = oracle.jump_bit(prog.level, e)
            queries += 1
            if trace is not None:
                trace.append(("jump", (prog.level, e), got))
            if got is None:
                return None, queries
            if got:
                value = prog.values[pos]
                break
        return _value_side_bit(value, q, is_upper), queries + 1

    raise AssertionError(fam)


def _value_side_bit(value, q, is_upper):
    if value == PINF:
        return 0 if is_upper else 1
    if value == NINF:
        return 1 if is_upper else 0
    return (1 if q > value else 0) if is_upper else (1 if q < value else 0)


def _square_bit(best_lo, best_hi, q, is_upper):
    if is_upper:
        if best_lo is None or best_hi is None:
            return 0
        return q >= max(best_lo * best_lo, best_hi * best_hi)
    if best_lo is not None and best_lo >= 0:
        return q < best_lo * best_lo
    if best_hi is not None and best_hi <= 0:
        return q < best_hi * best_hi
    if best_lo is not None and best_hi is not None:
        return q < 0  # enclosure straddles 0, squares reach down to 0
    return 0


def true_value(prog, real):
    """The value a transducer denotes at an exact real, resolved with
    true halting answers.  Diagnostic: bypasses the oracle protocol."""
    if isinstance(prog, int):
        prog = decode(prog)
    if not isinstance(prog, Transducer):
        raise ValueError("only transducers denote point values")
    if prog.family == "const":
        return value_as_real(prog.value)
    if prog.family == "identity":
        return real
    if prog.family == "square":
        return real.square()
    value = prog.values[-1]
    for pos, e in enumerate(prog.tests):
        g = decode(e)
        if isinstance(g, Guard) and g.trigger.contains(real):
            value = prog.values[pos]
            break
    return value_as_real(value)


def exact_halting_measure(prog, lo: Rat, hi: Rat) -> Rat:
    """Measure of the guard's halting set inside (lo, hi)."""
    if isinstance(prog, int):
        prog = decode(prog)
    if not isinstance(prog, Guard):
        raise ValueError("halting measure is defined for guards")
    lo, hi = Fraction(lo), Fraction(hi)
    trig = prog.trigger
    if trig.kind == "all":
        return hi - lo
    if trig.kind == "halfline":
        if trig.direction > 0:
            return max(Fraction(0), hi - max(lo, trig.theta))
        return max(Fraction(0), min(hi, trig.theta) - lo)
    u = IntervalUnion()
    for a, b in trig.intervals:
        c, d = max(a, lo), min(b, hi)
        if c < d:
            u.insert(c, d)
    return u.measure()


# ---------------------------------------------------------------------------
# oracles over exact reals and strings


class RealCutOracle:
    """Total bit access to the cut of an exact real, with optional
    plain-set and true-halting jump backends for direct runs."""

    def __init__(self, real, s_set=frozenset(), jump="true"):
        self.real = real
        self.s_set = s_set
        self.jump = jump

    def cut_lower_bit(self, i: int):
        from .rationals import rat_enum

        return 1 if self.real.cmp(rat_enum(i)) > 0 else 0

    def cut_upper_bit(self, i: int):
        from .rationals import rat_enum

        return 1 if self.real.cmp(rat_enum(i)) < 0 else 0

    def s_bit(self, m: int):
        return 1 if m in self.s_set else 0

    def jump_bit(self, level: int, e: int):
        if self.jump != "true":
            return None
        g = decode(e)
        if not isinstance(g, Guard):
            return 0
        return 1 if g.trigger.contains(self.real) else 0


class StringOracle:
    """Cut bits read off a finite interval string; suspends past it."""

    def __init__(self, string: CutString, jump_backend=None):
        self.string = string
        self.jump_backend = jump_backend

    def cut_lower_bit(self, i: int):
        if i >= self.string.length:
            return None
        return self.string.bit_lower(i)

    def cut_upper_bit(self, i: int):
        if i >= self.string.length:
            return None
        return self.string.bit_upper(i)

    def s_bit(self, m: int):
        return 0

    def jump_bit(self, level: int, e: int):
        if self.jump_backend is None:
            return None
        return self.jump_backend(level, e)


class PlainSetOracle:
    """Oracle bits read as raw membership in a finite coded set."""

    def __init__(self, members):
        self.members = frozenset(members)

    def raw(self, n: int):
        return 1 if n in self.members else 0

    def cut_lower_bit(self, i: int):
        from .codes import SIDE_LOWER, join_pos

        return self.raw(join_pos(SIDE_LOWER, i))

    def cut_upper_bit(self, i: int):
        from .codes import SIDE_UPPER, join_pos

        return self.raw(join_pos(SIDE_UPPER, i))

    def s_bit(self, m: int):
        from .codes import SIDE_SET, join_pos

        return self.raw(join_pos(SIDE_SET, m))

    def jump_bit(self, level: int, e: int):
        return None
