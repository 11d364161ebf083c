"""Exact scalars, sparse polynomials, rational functions, truncated series.

The coefficient fields are the rationals (``fractions.Fraction``, aliased
``Rational``) and the Gaussian rationals.  Promotion from the first to the
second is always explicit, via :func:`gauss` or :func:`promote_to_gauss`.

Rational functions here are always of the restricted shape

    numerator(q1) / (1 - q1)**k

because every occurrence of the degree-0 quantum parameter in this project
arises from a geometric tail ``c*q1/(1-q1)`` or products of such with
polynomials.  The representation is normalized so the numerator carries no
factor of (1 - q1), which makes equality structural and makes the pole at
q1 = 1 genuine.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping

from .errors import DivisionByNonUnit, PoleError, UnboundSymbol

Rational = Fraction


def rational_to_str(r: Fraction) -> str:
    """Serialize as "p/q", or just "p" when the denominator is 1."""
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def rational_from_str(s: str) -> Fraction:
    return Fraction(s)


# ---------------------------------------------------------------------------
# Gaussian rationals
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GaussRational:
    """Element of Q(i).  Arithmetic is only defined between GaussRationals."""

    re: Fraction
    im: Fraction

    def __add__(self, other):
        if not isinstance(other, GaussRational):
            return NotImplemented
        return GaussRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        if not isinstance(other, GaussRational):
            return NotImplemented
        return GaussRational(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def __mul__(self, other):
        if not isinstance(other, GaussRational):
            return NotImplemented
        return GaussRational(self.re * other.re - self.im * other.im,
                             self.re * other.im + self.im * other.re)

    def __truediv__(self, other):
        if not isinstance(other, GaussRational):
            return NotImplemented
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussRational((self.re * other.re + self.im * other.im) / n,
                             (self.im * other.re - self.re * other.im) / n)

    def conjugate(self) -> "GaussRational":
        return GaussRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def is_real(self) -> bool:
        return self.im == 0

    def __str__(self) -> str:
        if self.im == 0:
            return rational_to_str(self.re)
        im = rational_to_str(self.im)
        if self.re == 0:
            return f"{im}*i"
        sign = "+" if self.im > 0 else "-"
        return f"{rational_to_str(self.re)}{sign}{rational_to_str(abs(self.im))}*i"

    def to_json(self) -> dict:
        return {"re": rational_to_str(self.re), "im": rational_to_str(self.im)}

    @classmethod
    def from_json(cls, data: Mapping[str, str]) -> "GaussRational":
        return cls(Fraction(data["re"]), Fraction(data["im"]))


def gauss(re=0, im=0) -> GaussRational:
    """Explicit constructor/promotion into Q(i)."""
    return GaussRational(Fraction(re), Fraction(im))


GAUSS_ZERO = gauss(0)
GAUSS_ONE = gauss(1)
GAUSS_I = gauss(0, 1)


# ---------------------------------------------------------------------------
# Sparse multivariate polynomials
# ---------------------------------------------------------------------------

class MultiPoly:
    """Sparse polynomial: map from exponent vector to nonzero coefficient.

    Coefficients must all live in one field (Fraction or GaussRational);
    mixing is rejected by the coefficient arithmetic itself.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Iterable[str], terms: Mapping[tuple, object] | None = None):
        self.variables = tuple(variables)
        clean = {}
        nvars = len(self.variables)
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != nvars:
                raise ValueError(f"exponent vector {exps} has wrong length for {self.variables}")
            if coeff:
                clean[exps] = clean.get(exps, None)
                if clean[exps] is None:
                    clean[exps] = coeff
                else:
                    clean[exps] = clean[exps] + coeff
                    if not clean[exps]:
                        del clean[exps]
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, variables) -> "MultiPoly":
        return cls(variables, {})

    @classmethod
    def constant(cls, variables, coeff) -> "MultiPoly":
        v = tuple(variables)
        return cls(v, {(0,) * len(v): coeff})

    @classmethod
    def variable(cls, variables, name, one=Fraction(1)) -> "MultiPoly":
        v = tuple(variables)
        exps = [0] * len(v)
        exps[v.index(name)] = 1
        return cls(v, {tuple(exps): one})

    # -- ring operations ---------------------------------------------------

    def _check(self, other: "MultiPoly"):
        if self.variables != other.variables:
            raise ValueError(f"variable mismatch: {self.variables} vs {other.variables}")

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e)
            s = c if s is None else s + c
            if s:
                terms[e] = s
            elif e in terms:
                del terms[e]
        out = MultiPoly.zero(self.variables)
        out.terms = terms
        return out

    def __neg__(self) -> "MultiPoly":
        out = MultiPoly.zero(self.variables)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        terms: dict[tuple, object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                s = terms.get(e)
                s = c if s is None else s + c
                if s:
                    terms[e] = s
                elif e in terms:
                    del terms[e]
        out = MultiPoly.zero(self.variables)
        out.terms = terms
        return out

    def scale(self, coeff) -> "MultiPoly":
        if not coeff:
            return MultiPoly.zero(self.variables)
        out = MultiPoly.zero(self.variables)
        out.terms = {e: coeff * c for e, c in self.terms.items()}
        return out

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.constant(self.variables, self._one_like())
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def _one_like(self):
        for c in self.terms.values():
            if isinstance(c, GaussRational):
                return GAUSS_ONE
            break
        return Fraction(1)

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (isinstance(other, MultiPoly)
                and self.variables == other.variables
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def coefficient(self, exps: tuple) -> object:
        zero = Fraction(0) if not isinstance(self._one_like(), GaussRational) else GAUSS_ZERO
        return self.terms.get(tuple(exps), zero)

    def total_degree(self, weights: Mapping[str, int] | None = None) -> int:
        """Max weighted degree over terms (0 for the zero polynomial)."""
        if not self.terms:
            return 0
        if weights is None:
            return max(sum(e) for e in self.terms)
        w = [weights.get(v, 1) for v in self.variables]
        return max(sum(a * b for a, b in zip(e, w)) for e in self.terms)

    def items_sorted(self):
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    def graded_parts(self) -> dict[int, "MultiPoly"]:
        parts: dict[int, MultiPoly] = {}
        for e, c in self.terms.items():
            d = sum(e)
            part = parts.setdefault(d, MultiPoly.zero(self.variables))
            part.terms[e] = c
        return parts

    # -- substitution ------------------------------------------------------

    def substitute(self, assignment: Mapping[str, "MultiPoly"]) -> "MultiPoly":
        """Homomorphic image under variable -> polynomial assignment.

        Every variable occurring in this polynomial must be assigned; the
        assigned polynomials must all share one variable tuple.
        """
        used = [v for i, v in enumerate(self.variables)
                if any(e[i] for e in self.terms)]
        for v in used:
            if v not in assignment:
                raise UnboundSymbol(f"no assignment for variable {v!r}")
        if assignment:
            target_vars = next(iter(assignment.values())).variables
        else:
            target_vars = self.variables
        result = MultiPoly.zero(target_vars)
        for exps, coeff in self.terms.items():
            term = MultiPoly.constant(target_vars, coeff)
            for i, e in enumerate(exps):
                if e:
                    term = term * (assignment[self.variables[i]] ** e)
            result = result + term
        return result

    def map_coefficients(self, fn) -> "MultiPoly":
        out = MultiPoly.zero(self.variables)
        for e, c in self.terms.items():
            v = fn(c)
            if v:
                out.terms[e] = v
        return out

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for exps, coeff in self.items_sorted():
            mono = "*".join(f"{v}^{e}" if e > 1 else v
                            for v, e in zip(self.variables, exps) if e)
            cs = str(coeff)
            chunks.append(f"({cs})*{mono}" if mono else f"({cs})")
        return " + ".join(chunks)

    def __repr__(self) -> str:
        return f"MultiPoly({self.variables}, {self.terms!r})"


def poly_substitute(p: MultiPoly, assignment: Mapping[str, MultiPoly]) -> MultiPoly:
    return p.substitute(assignment)


def promote_to_gauss(p: MultiPoly) -> MultiPoly:
    """Explicit coefficient promotion Fraction -> GaussRational."""
    return p.map_coefficients(
        lambda c: c if isinstance(c, GaussRational) else gauss(c))


# ---------------------------------------------------------------------------
# Rational functions in the degree-0 parameter
# ---------------------------------------------------------------------------

def _strip(coeffs: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


def _poly_mul(a: tuple[Fraction, ...], b: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _strip(tuple(out))


def _poly_add(a, b):
    n = max(len(a), len(b))
    return _strip(tuple(
        (a[i] if i < len(a) else Fraction(0)) + (b[i] if i < len(b) else Fraction(0))
        for i in range(n)))


_ONE_MINUS_Q = (Fraction(1), Fraction(-1))


class RationalFunction:
    """num(q1) / (1 - q1)**k, normalized so (1 - q1) does not divide num."""

    __slots__ = ("num", "dpow")

    def __init__(self, num: Iterable[Fraction] = (), dpow: int = 0):
        num = _strip(tuple(Fraction(c) for c in num))
        # cancel common factors of (1 - q1): num(1) == 0 means divisibility
        while num and dpow > 0 and sum(num) == 0:
            prefix = []
            acc = Fraction(0)
            for c in num:
                acc += c
                prefix.append(acc)
            num = _strip(tuple(prefix[:-1])) if len(prefix) > 1 else ()
            dpow -= 1
        if not num:
            dpow = 0
        self.num = num
        self.dpow = dpow

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "RationalFunction":
        return cls()

    @classmethod
    def const(cls, c) -> "RationalFunction":
        return cls((Fraction(c),))

    @classmethod
    def q_power(cls, c, n: int) -> "RationalFunction":
        return cls(tuple([Fraction(0)] * n + [Fraction(c)]))

    @classmethod
    def geometric_tail(cls, c) -> "RationalFunction":
        """c * (q1 + q1^2 + ...) = c*q1/(1-q1)."""
        return cls((Fraction(0), Fraction(c)), 1)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        k = max(self.dpow, other.dpow)
        a = self.num
        for _ in range(k - self.dpow):
            a = _poly_mul(a, _ONE_MINUS_Q)
        b = other.num
        for _ in range(k - other.dpow):
            b = _poly_mul(b, _ONE_MINUS_Q)
        return RationalFunction(_poly_add(a, b), k)

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(tuple(-c for c in self.num), self.dpow)

    def __sub__(self, other: "RationalFunction") -> "RationalFunction":
        return self + (-other)

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(_poly_mul(self.num, other.num), self.dpow + other.dpow)

    def scale(self, c) -> "RationalFunction":
        c = Fraction(c)
        if c == 0:
            return RationalFunction()
        return RationalFunction(tuple(c * x for x in self.num), self.dpow)

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other) -> bool:
        return (isinstance(other, RationalFunction)
                and self.num == other.num and self.dpow == other.dpow)

    def __hash__(self):
        return hash((self.num, self.dpow))

    def eval(self, v: Fraction) -> Fraction:
        v = Fraction(v)
        denom = (1 - v) ** self.dpow
        if denom == 0:
            raise PoleError(f"pole at q1 = {v}")
        return sum((c * v ** k for k, c in enumerate(self.num)), Fraction(0)) / denom

    def is_polynomial(self) -> bool:
        return self.dpow == 0

    def __str__(self) -> str:
        if not self.num:
            return "0"
        parts = []
        for k, c in enumerate(self.num):
            if c == 0:
                continue
            if k == 0:
                parts.append(rational_to_str(c))
            elif k == 1:
                parts.append(f"{rational_to_str(c)}*q1" if abs(c) != 1 else ("-q1" if c < 0 else "q1"))
            else:
                parts.append(f"{rational_to_str(c)}*q1^{k}" if abs(c) != 1 else (f"-q1^{k}" if c < 0 else f"q1^{k}"))
        body = " + ".join(parts).replace("+ -", "- ")
        if self.dpow == 0:
            return body
        denom = "(1-q1)" if self.dpow == 1 else f"(1-q1)^{self.dpow}"
        return f"({body})/{denom}"

    def __repr__(self) -> str:
        return f"RationalFunction({self.num!r}, {self.dpow})"


def ratfn_eval(f: RationalFunction, v: Fraction) -> Fraction:
    """Exact evaluation; PoleError when the denominator vanishes at v."""
    return f.eval(v)


# ---------------------------------------------------------------------------
# Truncated power series over Q(i)
# ---------------------------------------------------------------------------

class PowerSeries:
    """Series in one variable truncated at a fixed order, coefficients in Q(i)."""

    __slots__ = ("variable", "order", "coeffs")

    def __init__(self, variable: str, order: int, coeffs: Iterable[GaussRational]):
        coeffs = tuple(coeffs)
        if len(coeffs) != order + 1:
            raise ValueError(f"need {order + 1} coefficients, got {len(coeffs)}")
        self.variable = variable
        self.order = order
        self.coeffs = coeffs

    @classmethod
    def zero(cls, variable: str, order: int) -> "PowerSeries":
        return cls(variable, order, (GAUSS_ZERO,) * (order + 1))

    @classmethod
    def constant(cls, variable: str, order: int, c: GaussRational) -> "PowerSeries":
        return cls(variable, order, (c,) + (GAUSS_ZERO,) * order)

    @classmethod
    def identity(cls, variable: str, order: int) -> "PowerSeries":
        coeffs = [GAUSS_ZERO] * (order + 1)
        if order >= 1:
            coeffs[1] = GAUSS_ONE
        return cls(variable, order, coeffs)

    def _check(self, other: "PowerSeries"):
        if self.variable != other.variable or self.order != other.order:
            raise ValueError("series variable/order mismatch")

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        self._check(other)
        return PowerSeries(self.variable, self.order,
                           tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "PowerSeries":
        return PowerSeries(self.variable, self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        return self + (-other)

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        self._check(other)
        out = [GAUSS_ZERO] * (self.order + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(self.order + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] = out[i + j] + a * b
        return PowerSeries(self.variable, self.order, out)

    def scale(self, c: GaussRational) -> "PowerSeries":
        return PowerSeries(self.variable, self.order, tuple(c * a for a in self.coeffs))

    def derivative(self) -> "PowerSeries":
        """d/ds, truncated at order-1 (order preserved, top coefficient lost)."""
        out = [GAUSS_ZERO] * (self.order + 1)
        for k in range(1, self.order + 1):
            out[k - 1] = self.coeffs[k] * gauss(k)
        return PowerSeries(self.variable, self.order, out)

    def scale_argument(self, c: GaussRational) -> "PowerSeries":
        """s -> c*s."""
        out = []
        power = GAUSS_ONE
        for a in self.coeffs:
            out.append(a * power)
            power = power * c
        return PowerSeries(self.variable, self.order, out)

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return PowerSeries(self.variable, order, self.coeffs[: order + 1])

    def is_zero(self) -> bool:
        return all(not c for c in self.coeffs)

    def is_real(self) -> bool:
        return all(c.is_real() for c in self.coeffs)

    def __eq__(self, other) -> bool:
        return (isinstance(other, PowerSeries)
                and self.variable == other.variable
                and self.order == other.order
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.variable, self.order, self.coeffs))

    def __str__(self) -> str:
        parts = [f"({c})*{self.variable}^{k}" for k, c in enumerate(self.coeffs) if c]
        return " + ".join(parts) if parts else "0"


def series_div(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """c with c*b = a up to the truncation order; b must be a unit."""
    a._check(b)
    if not b.coeffs[0]:
        raise DivisionByNonUnit("series division by a series with zero constant term")
    out = [GAUSS_ZERO] * (a.order + 1)
    lead = b.coeffs[0]
    for k in range(a.order + 1):
        acc = a.coeffs[k]
        for j in range(k):
            if out[j] and b.coeffs[k - j]:
                acc = acc - out[j] * b.coeffs[k - j]
        out[k] = acc / lead
    return PowerSeries(a.variable, a.order, out)


def series_compose_exp(c: GaussRational, order: int, variable: str = "s") -> PowerSeries:
    """Truncated exp(c*s) = sum_k c^k s^k / k!."""
    if order < 0:
        raise ValueError("order must be non-negative")
    coeffs = []
    power = GAUSS_ONE
    for k in range(order + 1):
        coeffs.append(power / gauss(factorial(k)))
        power = power * c
    return PowerSeries(variable, order, coeffs)
