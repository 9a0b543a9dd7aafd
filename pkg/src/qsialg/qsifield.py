"""The rational function field K(t) over Q(q) with its q-skew operators.

The field carries three interlocking structures:

* the automorphism sigma: t -> q*t,
* the divided-power tower theta^(i) = theta^(1)^i / [i]_q! built from
  theta^(1)(a) = (sigma(a) - a) / ((q-1) t), i.e. the multiplier
  lambda = 1/((q-1)t), which satisfies q*sigma(lambda) = lambda,
* the ordinary derivative d/dt.

A QsiStructure packages one coherent choice of (sigma, theta-tower):
the canonical q-skew structure above, the trivial difference structure
(theta^(i) = 0 for i >= 1), or the trivial differential structure
(sigma = id, theta^(i) = delta^i / i!, coherent at q = 1).  The axiom
checker certifies the four defining laws on a sample set by exact
arithmetic.

The product rule is implemented with the index placement

    theta^(l)(a b) = sum over m+n=l of sigma^n(theta^(m)(a)) * theta^(n)(b)

which is the unique placement compatible with both the canonical structure
(verified by direct expansion) and multiplicativity of the series morphism
into the twisted ring (verified independently in the series module).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .reporting import Report
from .scalarq import ScalarQ

__all__ = [
    "RatFunc",
    "QsiStructure",
    "sigma",
    "sigma_inv",
    "ddt",
    "theta",
    "check_qsi_axioms",
    "default_samples",
]

_QS = ScalarQ


def _coerce_scalar(x) -> ScalarQ:
    if isinstance(x, ScalarQ):
        return x
    if isinstance(x, int):
        return ScalarQ(x)
    from fractions import Fraction
    if isinstance(x, Fraction):
        return ScalarQ.from_fraction(x)
    raise TypeError(f"not a scalar: {x!r}")


# ---------------------------------------------------------------------------
# Dense polynomials in t with ScalarQ coefficients (ascending degree).
# ---------------------------------------------------------------------------

def _tp_trim(cs: list[ScalarQ]) -> tuple[ScalarQ, ...]:
    n = len(cs)
    while n and cs[n - 1].is_zero():
        n -= 1
    return tuple(cs[:n])


def _tp_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = out[i] + c
    return _tp_trim(out)


def _tp_neg(a):
    return tuple(-c for c in a)


def _tp_mul(a, b):
    if not a or not b:
        return ()
    out = [ScalarQ.zero()] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca.is_zero():
            continue
        for j, cb in enumerate(b):
            out[i + j] = out[i + j] + ca * cb
    return _tp_trim(out)


def _tp_rem(a, b):
    a = list(a)
    while a and len(a) >= len(b):
        k = a[-1] / b[-1]
        d = len(a) - len(b)
        for i, c in enumerate(b):
            a[i + d] = a[i + d] - k * c
        while a and a[-1].is_zero():
            a.pop()
    return tuple(a)


def _tp_gcd(a, b):
    while b:
        a, b = b, _tp_rem(a, b)
    if not a:
        return ()
    lead = a[-1]
    return tuple(c / lead for c in a)


def _tp_div_exact(a, b):
    if not a:
        return ()
    out = [ScalarQ.zero()] * (len(a) - len(b) + 1)
    a = list(a)
    while a and len(a) >= len(b):
        k = a[-1] / b[-1]
        out[len(a) - len(b)] = k
        d = len(a) - len(b)
        for i, c in enumerate(b):
            a[i + d] = a[i + d] - k * c
        while a and a[-1].is_zero():
            a.pop()
    if a:
        raise ArithmeticError("inexact division in K(t)")
    return _tp_trim(out)


def _tp_deriv(a):
    return _tp_trim([a[k] * k for k in range(1, len(a))])


def _tp_scale_var(a, c: ScalarQ):
    """Substitute t := c*t."""
    return _tp_trim([a[k] * c ** k for k in range(len(a))])


def _tp_fmt(a, var: str) -> str:
    if not a:
        return "0"
    parts: list[str] = []
    for k in range(len(a) - 1, -1, -1):
        c = a[k]
        if c.is_zero():
            continue
        neg = False
        if c == ScalarQ(-1) and k > 0:
            body = ""
            neg = True
        elif c.is_one() and k > 0:
            body = ""
        else:
            cs = str(c)
            if cs.startswith("-") and ("+" not in cs and " - " not in cs and "/" not in cs):
                neg = True
                cs = cs[1:]
            simple = all(ch.isalnum() or ch in "^*" for ch in cs)
            body = cs if simple else f"({cs})"
        if k == 0:
            mono = body or "1"
        else:
            v = var if k == 1 else f"{var}^{k}"
            mono = f"{body}*{v}" if body else v
        if not parts:
            parts.append(("-" if neg else "") + mono)
        else:
            parts.append(("- " if neg else "+ ") + mono)
    return " ".join(parts)


# ---------------------------------------------------------------------------
# The field K(t)
# ---------------------------------------------------------------------------

class RatFunc:
    """A rational function in t with ScalarQ coefficients, in reduced form.

    Canonical form: numerator and denominator coprime, denominator monic.
    Arithmetic is exact; equality is structural.
    """

    __slots__ = ("num", "den", "var")

    def __init__(self, num, den=1, var: str = "t", _raw: bool = False):
        n = self._coerce_poly(num)
        d = self._coerce_poly(den)
        object.__setattr__(self, "var", var)
        if not _raw:
            n, d = self._canon(n, d)
        object.__setattr__(self, "num", n)
        object.__setattr__(self, "den", d)

    @staticmethod
    def _coerce_poly(x) -> tuple[ScalarQ, ...]:
        if isinstance(x, tuple):
            return x
        if isinstance(x, list):
            return _tp_trim([_coerce_scalar(c) for c in x])
        c = _coerce_scalar(x)
        return (c,) if not c.is_zero() else ()

    @staticmethod
    def _canon(n, d):
        if not d:
            raise ZeroDivisionError("zero denominator in K(t)")
        if not n:
            return (), (ScalarQ.one(),)
        g = _tp_gcd(n, d)
        if len(g) > 1:
            n = _tp_div_exact(n, g)
            d = _tp_div_exact(d, g)
        lead = d[-1]
        if not lead.is_one():
            n = tuple(c / lead for c in n)
            d = tuple(c / lead for c in d)
        return n, d

    # -- constructors --------------------------------------------------------

    @classmethod
    def gen(cls, var: str = "t") -> "RatFunc":
        return cls([ScalarQ.zero(), ScalarQ.one()], 1, var=var, _raw=False)

    @classmethod
    def from_scalar(cls, c, var: str = "t") -> "RatFunc":
        return cls(_coerce_scalar(c), 1, var=var)

    @classmethod
    def zero(cls, var: str = "t") -> "RatFunc":
        return cls(0, 1, var=var)

    @classmethod
    def one(cls, var: str = "t") -> "RatFunc":
        return cls(1, 1, var=var)

    # -- predicates ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self.den == (ScalarQ.one(),) and self.num == (ScalarQ.one(),)

    def scalar_value(self) -> ScalarQ:
        """The value as a ScalarQ, if t does not occur."""
        if len(self.num) > 1 or len(self.den) > 1:
            raise ValueError(f"{self} is not constant in {self.var}")
        n = self.num[0] if self.num else ScalarQ.zero()
        return n / self.den[0]

    # -- arithmetic --------------------------------------------------------------

    def _promote(self, x) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        try:
            return RatFunc.from_scalar(x, var=self.var)
        except TypeError:
            return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        o = self._promote(other)
        if o is NotImplemented:
            return NotImplemented
        n = _tp_add(_tp_mul(self.num, o.den), _tp_mul(o.num, self.den))
        return RatFunc(n, _tp_mul(self.den, o.den), var=self.var)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(_tp_neg(self.num), self.den, var=self.var, _raw=True)

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
        return RatFunc(_tp_mul(self.num, o.num), _tp_mul(self.den, o.den), var=self.var)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._promote(other)
        if o is NotImplemented:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by zero in K(t)")
        return RatFunc(_tp_mul(self.num, o.den), _tp_mul(self.den, o.num), var=self.var)

    def __rtruediv__(self, other):
        o = self._promote(other)
        if o is NotImplemented:
            return NotImplemented
        return o / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return (RatFunc.one(self.var) / self) ** (-k)
        acc = RatFunc.one(self.var)
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, ScalarQ)):
            other = RatFunc.from_scalar(other, var=self.var)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __str__(self) -> str:
        ns = _tp_fmt(self.num, self.var)
        if self.den == (ScalarQ.one(),):
            return ns
        ds = f"({_tp_fmt(self.den, self.var)})"
        if " " in ns:
            ns = f"({ns})"
        return f"{ns}/{ds}"

    def __repr__(self) -> str:
        return f"RatFunc({self})"


# ---------------------------------------------------------------------------
# Operators
# ---------------------------------------------------------------------------

def sigma(a: RatFunc) -> RatFunc:
    """The field automorphism t -> q*t."""
    q = ScalarQ.gen()
    n = _tp_scale_var(a.num, q)
    d = _tp_scale_var(a.den, q)
    return RatFunc(n, d, var=a.var)


def sigma_inv(a: RatFunc) -> RatFunc:
    """The inverse automorphism t -> t/q."""
    qi = ScalarQ.q_power(-1)
    return RatFunc(_tp_scale_var(a.num, qi), _tp_scale_var(a.den, qi), var=a.var)


def ddt(a: RatFunc) -> RatFunc:
    """Formal derivative d/dt by the quotient rule."""
    n = _tp_add(_tp_mul(_tp_deriv(a.num), a.den), _tp_neg(_tp_mul(a.num, _tp_deriv(a.den))))
    return RatFunc(n, _tp_mul(a.den, a.den), var=a.var)


def canonical_lambda(var: str = "t") -> RatFunc:
    """The multiplier 1/((q-1) t); satisfies q*sigma(lambda) = lambda."""
    q = ScalarQ.gen()
    return RatFunc(1, [ScalarQ.zero(), q - 1], var=var)


@dataclass(frozen=True)
class QsiStructure:
    """One coherent (sigma, theta-tower) structure on K(t).

    kind is one of "canonical_q_skew", "difference_trivial",
    "differential_trivial".  The q used in the structure laws is q_scalar:
    the symbolic q for the canonical and trivial-difference structures, 1
    for the differential one (where the laws collapse to the ordinary
    divided-power calculus).
    """

    kind: str
    lam: RatFunc | None = None
    q_scalar: ScalarQ = None  # type: ignore[assignment]
    delta_name: str | None = None
    validated: bool = True

    @classmethod
    def canonical(cls, var: str = "t") -> "QsiStructure":
        return cls(kind="canonical_q_skew", lam=canonical_lambda(var),
                   q_scalar=ScalarQ.gen())

    @classmethod
    def with_lambda(cls, lam: RatFunc) -> "QsiStructure":
        """A q-skew structure with a custom multiplier; validity is reported,
        not enforced, so deliberately broken structures can be examined."""
        ok = (ScalarQ.gen() * sigma(lam) == lam)
        return cls(kind="canonical_q_skew", lam=lam, q_scalar=ScalarQ.gen(),
                   validated=ok)

    @classmethod
    def difference_trivial(cls) -> "QsiStructure":
        return cls(kind="difference_trivial", q_scalar=ScalarQ.gen())

    @classmethod
    def differential_trivial(cls, delta_name: str = "var_ddvar") -> "QsiStructure":
        """delta_name: "ddvar" for d/dt, "var_ddvar" for t*d/dt."""
        if delta_name not in ("ddvar", "var_ddvar"):
            raise ValueError(f"unknown derivation {delta_name!r}")
        return cls(kind="differential_trivial", q_scalar=ScalarQ.one(),
                   delta_name=delta_name)

    # -- structure maps ------------------------------------------------------

    def sigma_map(self, a: RatFunc) -> RatFunc:
        if self.kind == "differential_trivial":
            return a
        return sigma(a)

    def theta1(self, a: RatFunc) -> RatFunc:
        if self.kind == "difference_trivial":
            return RatFunc.zero(a.var)
        if self.kind == "differential_trivial":
            d = ddt(a)
            return RatFunc.gen(a.var) * d if self.delta_name == "var_ddvar" else d
        return self.lam * (sigma(a) - a)

    def qint_at(self, n: int) -> ScalarQ:
        acc = ScalarQ.zero()
        for k in range(n):
            acc = acc + self.q_scalar ** k
        return acc

    def qfact_at(self, n: int) -> ScalarQ:
        acc = ScalarQ.one()
        for k in range(2, n + 1):
            acc = acc * self.qint_at(k)
        return acc

    def qbinom_at(self, i: int, j: int) -> ScalarQ:
        return self.qfact_at(i + j) / (self.qfact_at(i) * self.qfact_at(j))


def theta(s: QsiStructure, i: int, a: RatFunc) -> RatFunc:
    """The i-th divided operator theta^(i) = theta^(1)^i / [i]_q!."""
    if i < 0:
        raise ValueError("theta order must be non-negative")
    if i == 0:
        return a
    acc = a
    for _ in range(i):
        acc = s.theta1(acc)
        if acc.is_zero():
            return acc
    return acc * s.qfact_at(i).inverse()


def default_samples(var: str = "t") -> list[RatFunc]:
    """The shipped sample set spanning polynomial, shifted and pole shapes."""
    t = RatFunc.gen(var)
    one = RatFunc.one(var)
    return [t, t * t, t + one, one / t, one / (t - one),
            (t * t + one) / (t - RatFunc.from_scalar(2, var))]


# ---------------------------------------------------------------------------
# Axiom checking
# ---------------------------------------------------------------------------

_PRODUCT_RULE_NOTE = (
    "product rule implemented as theta^(l)(ab) = sum_{m+n=l} "
    "sigma^n(theta^(m)(a)) * theta^(n)(b); this index placement is forced "
    "jointly by the canonical structure on K(t) and by multiplicativity of "
    "the series morphism into the twisted ring"
)
_QINT_NOTE = "convention: the q-integer of 0 is the empty sum 0; the q-factorial of 0 is 1"


def check_qsi_axioms(s: QsiStructure, samples: Sequence[RatFunc] | None = None,
                     max_order: int = 4) -> Report:
    """Certify the four structure laws on the sample set, exactly.

    Law 1: theta^(0) is the identity.
    Law 2: q^i sigma theta^(i) = theta^(i) sigma.
    Law 3: the product rule (see module docstring).
    Law 4: theta^(i) theta^(j) = qbinom(i, j) theta^(i+j).

    Failures are recorded as failing checks with a witness, never raised.
    """
    if max_order < 1:
        raise ValueError("max_order must be at least 1")
    if samples is None:
        samples = default_samples()
    rep = Report(suite="qsi-axioms")
    rep.notes.append(_PRODUCT_RULE_NOTE)
    rep.notes.append(_QINT_NOTE)
    rep.params = {"kind": s.kind, "max_order": max_order, "samples": len(samples)}

    if s.kind == "canonical_q_skew":
        ok = s.validated and ScalarQ.gen() * sigma(s.lam) == s.lam
        rep.add("lambda_invariant", ok, anchor="q*sigma(lambda) = lambda",
                witness=None if ok else f"lambda = {s.lam}")

    th: dict[tuple[int, RatFunc], RatFunc] = {}

    def theta_i(i: int, a: RatFunc) -> RatFunc:
        key = (i, a)
        if key not in th:
            th[key] = theta(s, i, a)
        return th[key]

    # Law 1
    bad = next((a for a in samples if theta_i(0, a) != a), None)
    rep.add("axiom1_identity", bad is None, anchor="theta^(0) = id",
            witness=None if bad is None else str(bad))

    # Law 2
    for i in range(1, max_order + 1):
        fail = None
        for a in samples:
            lhs = (s.q_scalar ** i) * s.sigma_map(theta_i(i, a))
            rhs = theta_i(i, s.sigma_map(a))
            if lhs != rhs:
                fail = f"a = {a}: q^{i}*sigma(theta^({i})(a)) = {lhs} but theta^({i})(sigma(a)) = {rhs}"
                break
        rep.add(f"axiom2_sigma_twist_i{i}", fail is None,
                anchor="q^i sigma theta^(i) = theta^(i) sigma", witness=fail)

    # Law 3
    for l in range(1, max_order + 1):
        fail = None
        for a in samples:
            for b in samples:
                lhs = theta_i(l, a * b)
                rhs = RatFunc.zero(a.var)
                for m in range(l + 1):
                    n = l - m
                    term = theta_i(m, a)
                    for _ in range(n):
                        term = s.sigma_map(term)
                    rhs = rhs + term * theta_i(n, b)
                if lhs != rhs:
                    fail = f"a = {a}, b = {b}: lhs {lhs} != rhs {rhs}"
                    break
            if fail:
                break
        rep.add(f"axiom3_product_rule_l{l}", fail is None,
                anchor="theta^(l)(ab) = sum sigma^n(theta^(m) a) theta^(n) b",
                witness=fail)

    # Law 4
    for i in range(0, max_order + 1):
        for j in range(0, max_order + 1 - i):
            if i + j == 0 or i + j > max_order:
                continue
            fail = None
            coeff = s.qbinom_at(i, j)
            for a in samples:
                if theta_i(i, theta_i(j, a)) != coeff * theta_i(i + j, a):
                    fail = f"a = {a}, (i,j) = ({i},{j})"
                    break
            rep.add(f"axiom4_composition_i{i}_j{j}", fail is None,
                    anchor="theta^(i) theta^(j) = qbinom(i,j) theta^(i+j)",
                    witness=fail)
    return rep
