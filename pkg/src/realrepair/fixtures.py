"""Exact test-bench reals: rationals, quadratic points a + b*sqrt(2), ±infinity.

The toolkit never touches floating point.  Every oracle question about a
bench real x reduces to sign(x - q) for rational q, which is decided
exactly in the quadratic extension.  The algebra is closed under the
arithmetic the bench needs (sums, products, squares), so values like
f(sqrt(2)-1) = 3 - 2*sqrt(2) for f(x) = x*x stay exactly comparable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

Rat = Fraction


@dataclass(frozen=True)
class QuadReal:
    """The real a + b*sqrt(2) with rational a, b."""

    a: Rat
    b: Rat = Fraction(0)

    finite = True

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def as_fraction(self) -> Rat:
        if self.b != 0:
            raise ValueError("not rational")
        return self.a

    def sign(self) -> int:
        a, b = self.a, self.b
        if b == 0:
            return 0 if a == 0 else (1 if a > 0 else -1)
        if a == 0:
            return 1 if b > 0 else -1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # opposite signs: compare a*a with 2*b*b, sign decided by the bigger
        if a > 0:  # b < 0
            return 1 if a * a > 2 * b * b else -1
        return 1 if a * a < 2 * b * b else -1

    def cmp(self, q: Rat) -> int:
        """Sign of self - q."""
        return QuadReal(self.a - q, self.b).sign()

    def __add__(self, other: "QuadReal") -> "QuadReal":
        return QuadReal(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "QuadReal") -> "QuadReal":
        return QuadReal(self.a - other.a, self.b - other.b)

    def __mul__(self, other: "QuadReal") -> "QuadReal":
        return QuadReal(
            self.a * other.a + 2 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    def square(self) -> "QuadReal":
        return self * self

    def floor_scaled(self, k: int) -> int:
        """floor(self * 2**k), exact."""
        a = self.a * (1 << k)
        b = self.b * (1 << k)
        if b == 0:
            return math.floor(a)
        da, db = a.denominator, b.denominator
        d = da * db // math.gcd(da, db)
        num_a = a.numerator * (d // da)
        num_b = b.numerator * (d // db)
        # floor(num_b * sqrt(2)) by integer square root; 2*num_b^2 is
        # never a perfect square, so the negative side rounds once more
        root = math.isqrt(2 * num_b * num_b)
        fb = root if num_b >= 0 else -root - 1
        guess = (num_a + fb) // d
        while QuadReal(a - guess, b).sign() < 0:
            guess -= 1
        while QuadReal(a - (guess + 1), b).sign() >= 0:
            guess += 1
        return guess

    def approx(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(2)

    def __repr__(self) -> str:
        if self.b == 0:
            return f"QuadReal({self.a})"
        return f"QuadReal({self.a} + {self.b}*sqrt2)"

    def to_json(self):
        if self.b == 0:
            return {"kind": "rational", "num": self.a.numerator, "den": self.a.denominator}
        return {
            "kind": "quad",
            "a": [self.a.numerator, self.a.denominator],
            "b": [self.b.numerator, self.b.denominator],
        }


class _Infinite:
    finite = False
    is_rational = False

    def __init__(self, sgn: int):
        self._sgn = sgn

    def cmp(self, q: Rat) -> int:
        return self._sgn

    def approx(self) -> float:
        return self._sgn * math.inf

    def __repr__(self) -> str:
        return "PLUS_INF" if self._sgn > 0 else "MINUS_INF"

    def to_json(self):
        return {"kind": "infinite", "sign": self._sgn}


PLUS_INF = _Infinite(1)
MINUS_INF = _Infinite(-1)

SQRT2 = QuadReal(Fraction(0), Fraction(1))

#: Named bench reals used throughout the tests and the CLI.
BENCH_REALS = {
    "0": QuadReal(Fraction(0)),
    "1/2": QuadReal(Fraction(1, 2)),
    "1/3": QuadReal(Fraction(1, 3)),
    "-7/5": QuadReal(Fraction(-7, 5)),
    "sqrt2m1": QuadReal(Fraction(-1), Fraction(1)),
    "3m2sqrt2": QuadReal(Fraction(3), Fraction(-2)),
    "+inf": PLUS_INF,
    "-inf": MINUS_INF,
}


def parse_real(text: str):
    """Accept a bench name, a fraction 'p/q', or an integer string."""
    if text in BENCH_REALS:
        return BENCH_REALS[text]
    try:
        return QuadReal(Fraction(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"unknown real {text!r}") from exc


def real_from_json(data):
    kind = data["kind"]
    if kind == "rational":
        return QuadReal(Fraction(data["num"], data["den"]))
    if kind == "quad":
        return QuadReal(Fraction(*data["a"]), Fraction(*data["b"]))
    if kind == "infinite":
        return PLUS_INF if data["sign"] > 0 else MINUS_INF
    raise ValueError(f"bad real payload {data!r}")
