"""Exact arithmetic in the field Q(q) of rational functions in the indeterminate q.

Every scalar in this package is a ScalarQ: a reduced fraction of two
integer-coefficient polynomials in q, with the denominator normalized to a
positive leading coefficient.  Keeping q symbolic means [n]_q is nonzero for
every n >= 1, so all the divided-power denominators appearing elsewhere are
legal divisions; a numeric q is recovered with :func:`eval_at`.

The q-combinatorial quantities live here as well: q-integers [n]_q,
q-factorials, Gaussian binomials and the symmetric bracket
[n]*_q = (q^n - q^-n)/(q - q^-1).

Empty-sum convention: the q-integer of 0 is 0 (it is an empty sum), while the
q-factorial of 0 is 1 (empty product).  Reports produced by the CLI state this
convention explicitly.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

__all__ = [
    "PoleAtPoint",
    "ScalarQ",
    "qint",
    "qfact",
    "qbinom",
    "qsym",
    "eval_at",
]


class PoleAtPoint(ArithmeticError):
    """Raised when a ScalarQ is evaluated at a root of its reduced denominator."""


# ---------------------------------------------------------------------------
# Dense integer polynomials in q, ascending degree, no trailing zeros.
# ---------------------------------------------------------------------------

_ZERO: tuple[int, ...] = ()
_ONE: tuple[int, ...] = (1,)


def _trim(cs: list[int]) -> tuple[int, ...]:
    n = len(cs)
    while n and cs[n - 1] == 0:
        n -= 1
    return tuple(cs[:n])


def _padd(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def _pneg(a: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(-c for c in a)


def _pmul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    if not a or not b:
        return _ZERO
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return _trim(out)


def _content(a: tuple[int, ...]) -> int:
    g = 0
    for c in a:
        g = gcd(g, c)
    return g or 1


def _primitive(a: list[int]) -> tuple[int, ...]:
    t = _trim(a)
    if not t:
        return _ZERO
    c = _content(t)
    if t[-1] < 0:
        c = -c
    return tuple(x // c for x in t) if c != 1 else t


def _prem(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """Pseudo-remainder of a by b over the integers."""
    r = list(a)
    lb = b[-1]
    while r and len(r) >= len(b):
        la = r[-1]
        r = [c * lb for c in r]
        d = len(r) - len(b)
        for i, cb in enumerate(b):
            r[i + d] -= la * cb
        while r and r[-1] == 0:
            r.pop()
    return tuple(r)


def _pgcd(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """Primitive gcd of two integer polynomials, positive leading coefficient.

    Primitive PRS: contents are stripped every round to keep coefficient
    growth linear.
    """
    a = _primitive(list(a))
    b = _primitive(list(b))
    if not a:
        return b
    while b:
        r = _prem(a, b)
        a, b = b, _primitive(list(r))
    return a


def _pdiv_exact(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """Exact quotient a/b for b primitive and a divisible by b over Q.

    Splitting off the integer content of a makes the remaining division
    exact over the integers (Gauss), so no rational arithmetic is needed.
    """
    if not a:
        return _ZERO
    ca = _content(a)
    pa = [c // ca for c in a]
    out = [0] * (len(pa) - len(b) + 1)
    while pa and len(pa) >= len(b):
        qc, rem = divmod(pa[-1], b[-1])
        if rem:
            raise ArithmeticError("inexact polynomial division")
        d = len(pa) - len(b)
        out[d] = qc
        for i, c in enumerate(b):
            pa[i + d] -= qc * c
        while pa and pa[-1] == 0:
            pa.pop()
    if pa:
        raise ArithmeticError("inexact polynomial division")
    return _trim([ca * c for c in out])


def _peval(a: tuple[int, ...], r: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * r + c
    return acc


def _fmt_poly(a: tuple[int, ...], var: str = "q") -> str:
    if not a:
        return "0"
    parts: list[str] = []
    for k in range(len(a) - 1, -1, -1):
        c = a[k]
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        elif k == 1:
            body = var if mag == 1 else f"{mag}*{var}"
        else:
            body = f"{var}^{k}" if mag == 1 else f"{mag}*{var}^{k}"
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


# ---------------------------------------------------------------------------
# The field Q(q)
# ---------------------------------------------------------------------------

class ScalarQ:
    """A rational function in q over the integers, kept in canonical form.

    Canonical form: gcd(numerator, denominator) = 1 and the denominator has a
    positive leading coefficient.  Equality is structural comparison of the
    canonical forms.  Instances are immutable and hashable.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1, _raw: bool = False):
        if isinstance(num, ScalarQ) or isinstance(den, ScalarQ):
            raise TypeError("use ScalarQ arithmetic, not the constructor, to combine scalars")
        n = self._coerce_poly(num)
        d = self._coerce_poly(den)
        if _raw:
            object.__setattr__(self, "num", n)
            object.__setattr__(self, "den", d)
            return
        n, d = self._canon(n, d)
        object.__setattr__(self, "num", n)
        object.__setattr__(self, "den", d)

    @staticmethod
    def _coerce_poly(x) -> tuple[int, ...]:
        if isinstance(x, tuple):
            return x
        if isinstance(x, int):
            return (x,) if x else _ZERO
        if isinstance(x, Fraction):
            raise TypeError("pass Fractions through ScalarQ.from_fraction")
        if isinstance(x, (list,)):
            return _trim([int(c) for c in x])
        raise TypeError(f"cannot build a polynomial in q from {x!r}")

    @staticmethod
    def _canon(n: tuple[int, ...], d: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
        if not d:
            raise ZeroDivisionError("zero denominator in Q(q)")
        if not n:
            return _ZERO, _ONE
        g = _pgcd(n, d)
        if len(g) > 1 or g[0] != 1:
            n = _pdiv_exact(n, g)
            d = _pdiv_exact(d, g)
        c = gcd(_content(n), _content(d))
        if d[-1] < 0:
            c = -c
        if c != 1:
            n = tuple(x // c for x in n)
            d = tuple(x // c for x in d)
        return n, d

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_int(cls, n: int) -> "ScalarQ":
        return cls(n)

    @classmethod
    def from_fraction(cls, f: Fraction) -> "ScalarQ":
        return cls(f.numerator, f.denominator)

    @classmethod
    def gen(cls) -> "ScalarQ":
        """The indeterminate q itself."""
        return cls((0, 1), 1, _raw=True)

    @classmethod
    def zero(cls) -> "ScalarQ":
        return cls(0)

    @classmethod
    def one(cls) -> "ScalarQ":
        return cls(1)

    @classmethod
    def q_power(cls, k: int) -> "ScalarQ":
        """q^k for any integer k, negative exponents included."""
        if k >= 0:
            return cls(tuple([0] * k + [1]), 1, _raw=True)
        return cls(1, tuple([0] * (-k) + [1]), _raw=True)

    # -- predicates ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self.num == _ONE and self.den == _ONE

    def is_integer(self) -> bool:
        return self.den == _ONE and len(self.num) <= 1

    def as_fraction(self) -> Fraction:
        """The value as a rational number, if q does not occur."""
        if len(self.num) > 1 or len(self.den) > 1:
            raise ValueError(f"{self} is not a constant")
        n = self.num[0] if self.num else 0
        return Fraction(n, self.den[0])

    # -- arithmetic ----------------------------------------------------------

    @staticmethod
    def _promote(x) -> "ScalarQ":
        if isinstance(x, ScalarQ):
            return x
        if isinstance(x, int):
            return ScalarQ(x)
        if isinstance(x, Fraction):
            return ScalarQ.from_fraction(x)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        o = self._promote(other)
        if o is NotImplemented:
            return NotImplemented
        if self.den == _ONE and o.den == _ONE:
            return ScalarQ(_padd(self.num, o.num), _ONE, _raw=True)
        if self.den == o.den:
            n = _padd(self.num, o.num)
            g = _pgcd(n, self.den)
            if g == _ONE:
                return ScalarQ(*self._content_canon(n, self.den), _raw=True)
            return ScalarQ(n, self.den)
        n = _padd(_pmul(self.num, o.den), _pmul(o.num, self.den))
        return ScalarQ(n, _pmul(self.den, o.den))

    __radd__ = __add__

    def __neg__(self) -> "ScalarQ":
        return ScalarQ(_pneg(self.num), self.den, _raw=True)

    def __sub__(self, other):
        o = self._promote(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._promote(other)
        if o is NotImplemented:
            return NotImplemented
        return ScalarQ(_pmul(self.num, o.num), _pmul(self.den, o.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._promote(other)
        if o is NotImplemented:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by zero in Q(q)")
        return ScalarQ(_pmul(self.num, o.den), _pmul(self.den, o.num))

    def __rtruediv__(self, other):
        o = self._promote(other)
        if o is NotImplemented:
            return NotImplemented
        return o / self

    def inverse(self) -> "ScalarQ":
        if self.is_zero():
            raise ZeroDivisionError("zero has no inverse in Q(q)")
        return ScalarQ(self.den, self.num)

    def __pow__(self, k: int) -> "ScalarQ":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        acc = ScalarQ.one()
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    # -- comparison / hashing ------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self._promote(other)
        if not isinstance(other, ScalarQ):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    # -- printing --------------------------------------------------------------

    def __str__(self) -> str:
        ns = _fmt_poly(self.num)
        if self.den == _ONE:
            return ns
        ds = _fmt_poly(self.den)
        ns = ns if (len(self.num) <= 1 and (not self.num or self.num[-1] > 0)) else f"({ns})"
        ds = ds if len(self.den) <= 1 else f"({ds})"
        return f"{ns}/{ds}"

    def __repr__(self) -> str:
        return f"ScalarQ({self})"


# ---------------------------------------------------------------------------
# q-combinatorics
# ---------------------------------------------------------------------------

def qint(n: int) -> ScalarQ:
    """The q-integer 1 + q + ... + q^(n-1); the empty sum 0 for n = 0."""
    if n < 0:
        raise ValueError("q-integers are defined for non-negative n")
    return ScalarQ(tuple([1] * n), 1, _raw=True) if n else ScalarQ.zero()


def qfact(n: int) -> ScalarQ:
    """The q-factorial [n]_q [n-1]_q ... [1]_q, with [0]_q! = 1."""
    if n < 0:
        raise ValueError("q-factorials are defined for non-negative n")
    acc = ScalarQ.one()
    for k in range(2, n + 1):
        acc = acc * qint(k)
    return acc


def qbinom(i: int, j: int) -> ScalarQ:
    """The Gaussian binomial [i+j]_q! / ([i]_q! [j]_q!).

    Always reduces to a polynomial in q with non-negative integer
    coefficients.
    """
    if i < 0 or j < 0:
        raise ValueError("Gaussian binomials take non-negative arguments")
    return qfact(i + j) / (qfact(i) * qfact(j))


def qsym(n: int) -> ScalarQ:
    """The symmetric bracket (q^n - q^-n)/(q - q^-1) for any integer n.

    A Laurent polynomial in q: q^(1-n) (1 + q^2 + ... + q^(2(n-1))) for
    n > 0, zero for n = 0, and odd in n.
    """
    if n == 0:
        return ScalarQ.zero()
    if n < 0:
        return -qsym(-n)
    num = [0] * (2 * n - 1)
    for k in range(n):
        num[2 * k] = 1
    return ScalarQ(tuple(num), tuple([0] * (n - 1) + [1]))


def eval_at(s: ScalarQ, r) -> Fraction:
    """Substitute q := r (a nonzero rational) into the canonical form of s.

    Raises PoleAtPoint when the reduced denominator vanishes at r.
    """
    r = Fraction(r)
    if r == 0:
        raise ValueError("q is restricted to nonzero values")
    d = _peval(s.den, r)
    if d == 0:
        raise PoleAtPoint(f"denominator of {s} vanishes at q = {r}")
    return _peval(s.num, r) / d
