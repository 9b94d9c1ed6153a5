"""Exact arithmetic over the parameter ring.

The parameters are (c0, d_0, ..., d_{r-1}); d-indices are always understood
mod r.  Everything downstream (eigenvalues, norms, hyperplanes) is expressed
with two types:

- AffineForm: an affine-linear expression  k + a*c0 + sum_l b_l*d_l  with
  rational coefficients.
- FactoredScalar: coefficient * product(AffineForm) / product(AffineForm),
  kept factored exactly as the closed formulas produce it (zero loci and
  cancellations stay exact and cheap; nothing is ever expanded).

All numbers are fractions.Fraction; no floating point anywhere.
"""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Optional, Sequence
import random

Rational = Fraction


class PoleError(ZeroDivisionError):
    """Raised when a denominator factor vanishes at an evaluation point."""

    def __init__(self, factor: "AffineForm"):
        self.factor = factor
        super().__init__(f"denominator factor vanishes: {factor}")


def parse_rational(text: str) -> Fraction:
    """Parse 'p/q' or 'p' into an exact Fraction."""
    return Fraction(text.strip())


class ParameterPoint:
    """A rational specialization (c0, d_0, ..., d_{r-1})."""

    __slots__ = ("r", "c0", "d")

    def __init__(self, r: int, c0, d: Sequence, require_sum_zero: bool = False):
        if r < 1:
            raise ValueError("r must be >= 1")
        d = tuple(Fraction(x) for x in d)
        if len(d) != r:
            raise ValueError(f"expected {r} d-values, got {len(d)}")
        if require_sum_zero and sum(d, Fraction(0)) != 0:
            raise ValueError("d-values do not sum to zero")
        self.r = r
        self.c0 = Fraction(c0)
        self.d = d

    def d_at(self, l: int) -> Fraction:
        return self.d[l % self.r]

    def __repr__(self):
        return f"ParameterPoint(r={self.r}, c0={self.c0}, d={self.d})"

    def __eq__(self, other):
        return (
            isinstance(other, ParameterPoint)
            and (self.r, self.c0, self.d) == (other.r, other.c0, other.d)
        )

    def __hash__(self):
        return hash((self.r, self.c0, self.d))


def random_point(r: int, rng: random.Random, bound: int = 10**6) -> ParameterPoint:
    """Random rational point with numerators/denominators in [1, bound]."""
    def q():
        return Fraction(rng.randint(1, bound), rng.randint(1, bound))

    return ParameterPoint(r, q(), [q() for _ in range(r)])


class AffineForm:
    """k + a*c0 + sum_l b_l * d_l with rational coefficients, d-index mod r."""

    __slots__ = ("r", "const", "c0", "d")

    def __init__(self, r: int, const=0, c0=0, d: Mapping[int, object] | Sequence | None = None):
        if r < 1:
            raise ValueError("r must be >= 1")
        self.r = r
        self.const = Fraction(const)
        self.c0 = Fraction(c0)
        coeffs = [Fraction(0)] * r
        if d is not None:
            if isinstance(d, Mapping):
                for l, v in d.items():
                    coeffs[l % r] += Fraction(v)
            else:
                if len(d) != r:
                    raise ValueError("d coefficient sequence must have length r")
                coeffs = [Fraction(v) for v in d]
        self.d = tuple(coeffs)

    # -- construction helpers -------------------------------------------------

    @staticmethod
    def constant(r: int, value) -> "AffineForm":
        return AffineForm(r, const=value)

    @staticmethod
    def d_difference(r: int, a: int, b: int) -> "AffineForm":
        """The form d_a - d_b (indices mod r)."""
        return AffineForm(r, d={a: 1}) - AffineForm(r, d={b: 1})

    # -- ring-ish operations ---------------------------------------------------

    def _coeffs(self) -> tuple:
        return (self.const, self.c0) + self.d

    def __add__(self, other):
        if isinstance(other, AffineForm):
            if other.r != self.r:
                raise ValueError("mixed r")
            return AffineForm(
                self.r,
                self.const + other.const,
                self.c0 + other.c0,
                [a + b for a, b in zip(self.d, other.d)],
            )
        return AffineForm(self.r, self.const + Fraction(other), self.c0, self.d)

    __radd__ = __add__

    def __neg__(self):
        return AffineForm(self.r, -self.const, -self.c0, [-a for a in self.d])

    def __sub__(self, other):
        return self + (-other if isinstance(other, AffineForm) else -Fraction(other))

    def __rsub__(self, other):
        return (-self) + Fraction(other)

    def scale(self, q) -> "AffineForm":
        q = Fraction(q)
        return AffineForm(self.r, self.const * q, self.c0 * q, [a * q for a in self.d])

    def __mul__(self, other):
        return self.scale(other)

    __rmul__ = __mul__

    def is_constant(self) -> bool:
        return self.c0 == 0 and all(a == 0 for a in self.d)

    def is_zero(self) -> bool:
        return self.const == 0 and self.is_constant()

    def evaluate(self, p: ParameterPoint) -> Fraction:
        if p.r != self.r:
            raise ValueError("point has wrong r")
        total = self.const + self.c0 * p.c0
        for l, a in enumerate(self.d):
            if a:
                total += a * p.d[l]
        return total

    def primitive(self) -> tuple["AffineForm", Fraction]:
        """Return (prim, scale) with self = scale * prim, prim having coprime
        integer coefficients and positive first nonzero coefficient."""
        coeffs = self._coeffs()
        nonzero = [c for c in coeffs if c != 0]
        if not nonzero:
            return self, Fraction(1)
        denom = lcm(*(c.denominator for c in nonzero))
        numer = gcd(*(abs((c * denom).numerator) for c in nonzero))
        scale = Fraction(numer, denom)
        if nonzero[0] < 0:
            scale = -scale
        return self.scale(1 / scale), scale

    def key(self) -> tuple:
        """Deterministic sort/equality key."""
        return (self.r,) + self._coeffs()

    def __eq__(self, other):
        return isinstance(other, AffineForm) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __str__(self):
        return render_affine(self)

    __repr__ = __str__


def render_affine(f: AffineForm) -> str:
    """Canonical text form: `k + a*c0 + b*d0 + ...` with rational literals."""
    parts: list[str] = []

    def emit(coef: Fraction, var: str | None):
        if coef == 0:
            return
        sign = "-" if coef < 0 else "+"
        mag = -coef if coef < 0 else coef
        if var is None:
            body = str(mag)
        elif mag == 1:
            body = var
        else:
            body = f"{mag}*{var}"
        parts.append((sign, body))

    emit(f.const, None)
    emit(f.c0, "c0")
    for l, a in enumerate(f.d):
        emit(a, f"d{l}")
    if not parts:
        return "0"
    sign, body = parts[0]
    out = body if sign == "+" else "-" + body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


class FactoredScalar:
    """coefficient * prod(numerator factors) / prod(denominator factors).

    Factors are AffineForms; identically-zero factors are rejected.  A zero
    scalar is represented by coefficient 0 with no factors.
    """

    __slots__ = ("r", "coefficient", "num", "den")

    def __init__(self, r: int, coefficient=1, num: Iterable[AffineForm] = (),
                 den: Iterable[AffineForm] = ()):
        self.r = r
        self.coefficient = Fraction(coefficient)
        self.num = tuple(num)
        self.den = tuple(den)
        for f in self.num + self.den:
            if f.r != r:
                raise ValueError("factor has wrong r")
            if f.is_zero():
                raise ValueError("identically zero factor")

    @staticmethod
    def one(r: int) -> "FactoredScalar":
        return FactoredScalar(r)

    @staticmethod
    def from_rational(r: int, q) -> "FactoredScalar":
        return FactoredScalar(r, q)

    @staticmethod
    def from_affine(f: AffineForm) -> "FactoredScalar":
        return FactoredScalar(f.r, 1, (f,))

    def is_zero(self) -> bool:
        return self.coefficient == 0

    def __mul__(self, other):
        if isinstance(other, FactoredScalar):
            if other.r != self.r:
                raise ValueError("mixed r")
            return FactoredScalar(self.r, self.coefficient * other.coefficient,
                                  self.num + other.num, self.den + other.den)
        if isinstance(other, AffineForm):
            return FactoredScalar(self.r, self.coefficient, self.num + (other,), self.den)
        return FactoredScalar(self.r, self.coefficient * Fraction(other), self.num, self.den)

    __rmul__ = __mul__

    def reciprocal(self) -> "FactoredScalar":
        if self.coefficient == 0:
            raise ZeroDivisionError("reciprocal of zero scalar")
        return FactoredScalar(self.r, 1 / self.coefficient, self.den, self.num)

    def __truediv__(self, other):
        if isinstance(other, FactoredScalar):
            return self * other.reciprocal()
        if isinstance(other, AffineForm):
            return FactoredScalar(self.r, self.coefficient, self.num, self.den + (other,))
        return FactoredScalar(self.r, self.coefficient / Fraction(other), self.num, self.den)

    def evaluate(self, p: ParameterPoint) -> Fraction:
        if p.r != self.r:
            raise ValueError("point has wrong r")
        for f in self.den:
            if f.evaluate(p) == 0:
                raise PoleError(f)
        value = self.coefficient
        for f in self.den:
            value /= f.evaluate(p)
        for f in self.num:
            value *= f.evaluate(p)
        return value

    def normalize(self) -> "FactoredScalar":
        """Cancel proportional factor pairs, folding constants into the
        coefficient; constant factors disappear.  Idempotent."""
        coef = self.coefficient
        num = Counter()
        den = Counter()
        for f in self.num:
            if f.is_constant():
                coef *= f.const
                continue
            prim, scale = f.primitive()
            coef *= scale
            num[prim.key()] += 1
        for f in self.den:
            if f.is_constant():
                coef /= f.const
                continue
            prim, scale = f.primitive()
            coef /= scale
            den[prim.key()] += 1
        for key in set(num) & set(den):
            k = min(num[key], den[key])
            num[key] -= k
            den[key] -= k
        if coef == 0:
            return FactoredScalar(self.r, 0)

        def rebuild(counter):
            forms = []
            for key, mult in sorted(counter.items()):
                if mult <= 0:
                    continue
                r, const, c0, *dc = key
                forms.extend([AffineForm(r, const, c0, dc)] * mult)
            return tuple(forms)

        return FactoredScalar(self.r, coef, rebuild(num), rebuild(den))

    def __eq__(self, other):
        """Structural equality of normalized data."""
        if not isinstance(other, FactoredScalar):
            return NotImplemented
        a, b = self.normalize(), other.normalize()
        return (a.coefficient == b.coefficient
                and sorted(f.key() for f in a.num) == sorted(f.key() for f in b.num)
                and sorted(f.key() for f in a.den) == sorted(f.key() for f in b.den))

    def __hash__(self):
        a = self.normalize()
        return hash((a.coefficient, tuple(sorted(f.key() for f in a.num)),
                     tuple(sorted(f.key() for f in a.den))))

    def __str__(self):
        a = self.normalize()
        parts = [str(a.coefficient)]
        parts += [f"({f})" for f in a.num]
        out = " * ".join(parts)
        if a.den:
            out += " / " + " * ".join(f"({f})" for f in a.den)
        return out

    __repr__ = __str__


def pochhammer(x: AffineForm, n: int) -> FactoredScalar:
    """Rising factorial x(x+1)...(x+n-1); the empty product (n=0) is 1."""
    if n < 0:
        raise ValueError("pochhammer length must be >= 0")
    return FactoredScalar(x.r, 1, tuple(x + k for k in range(n)))


def proportional(a: FactoredScalar, b: FactoredScalar,
                 rng: random.Random | None = None) -> Optional[Fraction]:
    """Return the constant q with a = q*b as rational functions, else None.

    Factors are irreducible (affine), so after normalization the quotient a/b
    is constant exactly when its factor multisets cancel completely.  A
    random-evaluation cross-check backs the multiset comparison; agreement at
    3 + (total factor count) non-pole points would pin down any rational
    function of this degree.
    """
    if b.is_zero():
        return None
    if a.is_zero():
        return Fraction(0)
    q = (a / b).normalize()
    if q.num or q.den:
        return None
    ratio = q.coefficient
    rng = rng or random.Random(20211115)
    samples = 3 + len(a.num) + len(a.den) + len(b.num) + len(b.den)
    done = 0
    while done < samples:
        p = random_point(a.r, rng, bound=10**4)
        try:
            va, vb = a.evaluate(p), b.evaluate(p)
        except PoleError:
            continue
        if vb == 0:
            continue
        if va != ratio * vb:
            raise AssertionError("factor comparison and sampling disagree")
        done += 1
    return ratio


def convert_parameters(p: ParameterPoint, convention: str) -> dict:
    """Translate (c0, d) into other parameter conventions.

    gordon:   H_j = (d_{j-1} - d_j)/r, h = -c0.
    rouquier: h_j = -d_j/r, h = -c0.
    hecke:    q = e^{2*pi*i*(-c0)}, Q_j = e^{2*pi*i*(-d_j/r)}; only the exact
              rational phase exponents are reported, never floating complex.
    """
    r = p.r
    if convention == "gordon":
        return {
            "h": -p.c0,
            "H": tuple((p.d_at(j - 1) - p.d_at(j)) / r for j in range(r)),
        }
    if convention == "rouquier":
        return {
            "h": -p.c0,
            "h_j": tuple(-p.d[j] / r for j in range(r)),
        }
    if convention == "hecke":
        return {
            "q_exponent": -p.c0,
            "Q_exponents": tuple(Fraction(-p.d[j], r) for j in range(r)),
        }
    raise ValueError(f"unknown convention: {convention!r}")
