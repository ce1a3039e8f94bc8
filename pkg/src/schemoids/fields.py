"""Exact scalar fields: the rationals and prime fields F_p.

Elements are plain Python values (``Fraction`` for Q, ``int`` in ``range(p)``
for F_p) so they can be stored in ordinary lists; the field object carries the
arithmetic.
"""

from __future__ import annotations

from fractions import Fraction


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class Field:
    """Q when ``p == 0``, otherwise the prime field F_p."""

    __slots__ = ("p",)

    def __init__(self, p: int = 0):
        if p and not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p

    @property
    def name(self) -> str:
        return f"F{self.p}" if self.p else "Q"

    def __repr__(self):
        return f"Field({self.name})"

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(("Field", self.p))

    @property
    def zero(self):
        return 0 if self.p else Fraction(0)

    @property
    def one(self):
        return 1 if self.p else Fraction(1)

    def __call__(self, x):
        """Coerce an int, Fraction or string such as ``"-3/4"``."""
        if isinstance(x, str):
            x = Fraction(x)
        if self.p:
            if isinstance(x, Fraction):
                return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
            return int(x) % self.p
        return Fraction(x)

    def add(self, a, b):
        return (a + b) % self.p if self.p else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.p else a - b

    def mul(self, a, b):
        return (a * b) % self.p if self.p else a * b

    def neg(self, a):
        return (-a) % self.p if self.p else -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p) if self.p else 1 / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def elements(self):
        """All elements of a prime field, in increasing order."""
        if not self.p:
            raise ValueError("Q is infinite")
        return list(range(self.p))

    def to_json(self, a):
        if self.p:
            return int(a)
        a = Fraction(a)
        return int(a) if a.denominator == 1 else str(a)


QQ = Field(0)


def GF(p: int) -> Field:
    return Field(p)


def parse_field(name: str) -> Field:
    """``"Q"``/``"QQ"`` or ``"F<p>"``."""
    name = name.strip()
    if name.upper() in ("Q", "QQ"):
        return QQ
    if name[:1].upper() == "F" and name[1:].isdigit():
        return Field(int(name[1:]))
    raise ValueError(f"unknown field {name!r}; expected Q or F<p>")
