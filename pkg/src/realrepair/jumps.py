"""Iterated halting information along explicit well-orders.

A presentation is a well-order on a coinfinite set of even numbers.
The coded set over a base C assigns column k (for k in the domain) the
coded set of the strict initial segment below k, so column 0, the
least element, is C itself; the *designated* column, the successor of
the top label, holds the halting bits {e : program e halts on the
coded set of the segment below the top}.  Limit shapes have no
designated column; their information is spread across the columns.

Membership is a single recursion over positions.  Two backends answer
the halting questions: ``exact`` resolves guards against their known
halting sets (and refuses anything uncertified), ``staged`` runs the
clocked interpreter with a budget, so its positive answers are sound
and grow monotonically with the budget.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .codes import SIDE_LOWER, SIDE_UPPER, join_pos, pair, unpair
from .machine import Diverger, Guard, decode, piece_string, run


@dataclass(frozen=True)
class Presentation:
    kind: str  # "finite" | "omega" | "omega_plus" | "omega_times2" | "omega_sq" | "omega_sq_seg" | "flist"
    k: int = 0
    j: int = 0
    labels: tuple = ()

    # -- domain ---------------------------------------------------------
    def dom_contains(self, x: int) -> bool:
        if x < 0 or x % 2:
            return False
        if self.kind == "finite":
            return x // 2 < self.k
        if self.kind == "omega":
            return True
        if self.kind == "omega_plus":
            return x % 4 == 0 or (x - 2) // 4 < self.k
        if self.kind == "omega_times2":
            return True
        if self.kind == "omega_sq":
            return True
        if self.kind == "omega_sq_seg":
            i, jj = unpair(x // 2)
            return i < self.k or (i == self.k and jj < self.j)
        return x in self.labels

    def _key(self, x: int):
        if self.kind in ("finite", "omega"):
            return (0, x)
        if self.kind == "omega_plus":
            return (1, (x - 2) // 4) if x % 4 == 2 else (0, x // 4)
        if self.kind == "omega_times2":
            return (1, (x - 2) // 4) if x % 4 == 2 else (0, x // 4)
        if self.kind in ("omega_sq", "omega_sq_seg"):
            return unpair(x // 2)
        return (0, self.labels.index(x))

    # -- order ----------------------------------------------------------
    def top(self) -> Optional[int]:
        if self.kind == "finite":
            return 2 * (self.k - 1) if self.k else None
        if self.kind == "omega_plus":
            return 4 * (self.k - 1) + 2 if self.k else None
        if self.kind == "omega_sq_seg":
            if self.k == 0 and self.j == 0:
                return None
            return 2 * pair(self.k, self.j - 1) if self.j else None
        if self.kind == "flist":
            return self.labels[-1] if self.labels else None
        return None

    def designated(self) -> Optional[int]:
        t = self.top()
        return None if t is None else t + 1

    def exact_rank(self) -> Optional[int]:
        """The order type when finite, else None."""
        if self.kind == "finite":
            return self.k
        if self.kind == "flist":
            return len(self.labels)
        if self.kind == "omega_sq_seg" and self.k == 0:
            return self.j
        return None

    def rank_element(self, r: int) -> Optional[int]:
        """Label whose strict segment has order type r, if present."""
        if self.kind == "finite":
            return 2 * r if r < self.k else None
        if self.kind == "omega":
            return 2 * r
        if self.kind in ("omega_plus", "omega_times2"):
            return 4 * r
        if self.kind == "omega_sq":
            return 2 * pair(0, r)
        if self.kind == "omega_sq_seg":
            if self.k >= 1:
                return 2 * pair(0, r)
            return 2 * pair(0, r) if r < self.j else None
        return self.labels[r] if r < len(self.labels) else None

    def segment(self, x: int) -> "Presentation":
        """Strict initial segment below label x (x must be in the domain)."""
        if not self.dom_contains(x):
            raise ValueError(f"{x} not in the domain")
        if self.kind in ("finite", "omega"):
            return Presentation("finite", x // 2)
        if self.kind == "omega_plus":
            if x % 4 == 0:
                return Presentation("flist", labels=tuple(range(0, x, 4)))
            return Presentation("omega_plus", (x - 2) // 4)
        if self.kind == "omega_times2":
            if x % 4 == 0:
                return Presentation("flist", labels=tuple(range(0, x, 4)))
            return Presentation("omega_plus", (x - 2) // 4)
        if self.kind in ("omega_sq", "omega_sq_seg"):
            i, jj = unpair(x // 2)
            return Presentation("omega_sq_seg", i, jj)
        pos = self.labels.index(x)
        return Presentation("flist", labels=self.labels[:pos])

    def describe(self) -> str:
        names = {
            "finite": f"{self.k}",
            "omega": "omega",
            "omega_plus": f"omega+{self.k}",
            "omega_times2": "omega*2",
            "omega_sq": "omega^2",
        }
        return names.get(self.kind, f"{self.kind}({self.k},{self.j},{self.labels})")


PRESENTATIONS = {
    "1": Presentation("finite", 1),
    "2": Presentation("finite", 2),
    "3": Presentation("finite", 3),
    "omega": Presentation("omega"),
    "omega+1": Presentation("omega_plus", 1),
    "omega+2": Presentation("omega_plus", 2),
    "omega*2": Presentation("omega_times2"),
    "omega^2": Presentation("omega_sq"),
}


def parse_presentation(name: str) -> Presentation:
    if name in PRESENTATIONS:
        return PRESENTATIONS[name]
    if name.isdigit():
        return Presentation("finite", int(name))
    raise ValueError(f"unknown presentation {name!r}")


def level_position(pres: Presentation, level: int, e: int) -> Optional[int]:
    """Flat position of the level-th halting bit for program e, reached
    through the column whose segment has that exact order type."""
    if level < 1:
        return None
    if pres.exact_rank() == level:
        return pair(pres.designated(), e)
    elt = pres.rank_element(level)
    if elt is None:
        return None
    inner = level_position(pres.segment(elt), level, e)
    return None if inner is None else pair(elt, inner)


# ---------------------------------------------------------------------------
# bases


class PlainBase:
    def __init__(self, members):
        self.members = frozenset(members)

    plain = True

    def __call__(self, n: int) -> int:
        return 1 if n in self.members else 0

    def describe(self):
        return f"plain({sorted(self.members)})"


class RealBase:
    """Base set coding the cut of an exact real (side set empty)."""

    def __init__(self, real, s_set=frozenset()):
        self.real = real
        self.s_set = frozenset(s_set)

    plain = False

    def __call__(self, n: int) -> int:
        from .codes import join_split
        from .rationals import rat_enum

        side, m = join_split(n)
        if side == SIDE_LOWER:
            return 1 if self.real.cmp(rat_enum(m)) > 0 else 0
        if side == SIDE_UPPER:
            return 1 if self.real.cmp(rat_enum(m)) < 0 else 0
        return 1 if m in self.s_set else 0

    def describe(self):
        return f"cut({self.real!r})"


EMPTY_BASE = PlainBase(frozenset())


# ---------------------------------------------------------------------------
# membership


class UncertifiedQuery(ValueError):
    """Exact backend asked about a program without a certified halting set."""


def membership(pres: Presentation, base, pos: int, backend: str = "exact",
               budget: int = 4000) -> bool:
    """Bit `pos` of the coded set of `pres` over `base`."""
    if pres.exact_rank() == 0:
        return bool(base(pos))
    k, n = unpair(pos)
    if pres.dom_contains(k):
        return membership(pres.segment(k), base, n, backend, budget)
    d = pres.designated()
    if d is not None and k == d:
        seg = pres.segment(pres.top())
        return _halts(n, seg, base, backend, budget)
    return False


def _halts(e: int, seg: Presentation, base, backend: str, budget: int) -> bool:
    prog = decode(e)
    if backend == "exact":
        return _halts_exact(prog, seg, base)
    if backend == "staged":
        oracle = JumpOracle(seg, base, backend, budget)
        out = run(prog, oracle, input_code=e, budget=budget)
        return out.status == "halted"
    raise ValueError(f"unknown backend {backend!r}")


def _halts_exact(prog, seg: Presentation, base) -> bool:
    if isinstance(prog, Diverger):
        return False
    if not isinstance(prog, Guard):
        raise UncertifiedQuery(
            f"exact halting is only certified for guards, not {type(prog).__name__}"
        )
    # guards read just the cut chain of the coded set, which bottoms out
    # in the base bits regardless of the segment shape
    if not base.plain:
        return prog.trigger.contains(base.real)
    return _plain_guard_halts(prog, base)


def _plain_guard_halts(prog, base: PlainBase) -> bool:
    """Support-bounded exact matching of trigger strings against raw
    membership bits of a finite set."""
    ones = len(base.members)
    cap = (ones + 4) * (ones + 4)
    for s in itertools.count():
        if s >= cap:
            return False
        piece = prog.trigger.piece(s)
        if piece is None:
            return False
        st = piece_string(piece)
        if st.length > 2 * ones + 2:
            continue  # needs more 1-bits than the set holds
        ok = True
        for i in range(st.length):
            if base(join_pos(SIDE_LOWER, i)) != st.bit_lower(i):
                ok = False
                break
            if base(join_pos(SIDE_UPPER, i)) != st.bit_upper(i):
                ok = False
                break
        if ok:
            return True
    return False


class JumpOracle:
    """Oracle view of a coded set: cut bits through column 0, jump bits
    through the designated column of the matching segment."""

    def __init__(self, pres: Presentation, base, backend: str = "exact",
                 budget: int = 4000):
        self.pres = pres
        self.base = base
        self.backend = backend
        self.budget = budget

    def _bit(self, pos: int):
        return 1 if membership(self.pres, self.base, pos, self.backend,
                               self.budget) else 0

    def cut_lower_bit(self, i: int):
        if self.pres.exact_rank() == 0:
            return 1 if self.base(join_pos(SIDE_LOWER, i)) else 0
        return self._bit(pair(0, join_pos(SIDE_LOWER, i)))

    def cut_upper_bit(self, i: int):
        if self.pres.exact_rank() == 0:
            return 1 if self.base(join_pos(SIDE_UPPER, i)) else 0
        return self._bit(pair(0, join_pos(SIDE_UPPER, i)))

    def s_bit(self, m: int):
        from .codes import SIDE_SET

        if self.pres.exact_rank() == 0:
            return 1 if self.base(join_pos(SIDE_SET, m)) else 0
        return self._bit(pair(0, join_pos(SIDE_SET, m)))

    def jump_bit(self, level: int, e: int):
        pos = level_position(self.pres, level, e)
        if pos is None:
            return None
        return self._bit(pos)
