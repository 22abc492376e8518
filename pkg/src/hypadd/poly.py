"""Dense univariate polynomials over an exact field.

Coefficients are stored ascending (index i holds the x^i coefficient)
with trailing zeros stripped, so the zero polynomial is the empty tuple
and reports degree -inf.  All operations are exact.
"""

from .errors import BothZero, DivisionByZeroPoly, FieldMismatch
from .field import FieldSpec, Scalar

NEG_INF = float("-inf")


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldSpec, coeffs=()):
        cs = [field.scalar(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one()

    def lc(self) -> Scalar:
        """Leading coefficient; zero for the zero polynomial."""
        return self.coeffs[-1] if self.coeffs else self.field.zero()

    def __getitem__(self, i: int) -> Scalar:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero()

    def _check(self, other):
        if self.field != other.field:
            raise FieldMismatch("polynomials over different fields")

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __add__(self, other):
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.field, [self[i] + other[i] for i in range(n)])

    def __sub__(self, other):
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.field, [self[i] - other[i] for i in range(n)])

    def __neg__(self):
        return Poly(self.field, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, Scalar):
            return Poly(self.field, [c * other for c in self.coeffs])
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Poly(self.field)
        out = [self.field.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(self.field, out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        """Exact long division: self = q*other + r with deg r < deg other."""
        self._check(other)
        if other.is_zero():
            raise DivisionByZeroPoly("division by the zero polynomial")
        if self.degree < other.degree:
            return Poly(self.field), self
        inv_lc = other.lc().inverse()
        rem = list(self.coeffs)
        dq = len(self.coeffs) - len(other.coeffs)
        quo = [self.field.zero()] * (dq + 1)
        for k in range(dq, -1, -1):
            c = rem[k + len(other.coeffs) - 1] * inv_lc
            quo[k] = c
            if not c.is_zero():
                for j, b in enumerate(other.coeffs):
                    rem[k + j] = rem[k + j] - c * b
        return Poly(self.field, quo), Poly(self.field, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, at: Scalar) -> Scalar:
        """Horner evaluation."""
        acc = self.field.zero()
        for c in reversed(self.coeffs):
            acc = acc * at + c
        return acc

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self * self.lc().inverse()

    def __repr__(self):
        if self.is_zero():
            return "Poly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            if i == 0:
                terms.append(c.to_string())
            elif i == 1:
                terms.append(f"{c.to_string()}*x")
            else:
                terms.append(f"{c.to_string()}*x^{i}")
        return "Poly(" + " + ".join(terms) + ")"


def x_power(field: FieldSpec, k: int) -> Poly:
    """The monomial x^k."""
    return Poly(field, [0] * k + [1])


def from_roots(field: FieldSpec, roots) -> Poly:
    """Monic polynomial with the given roots (with multiplicity)."""
    acc = Poly(field, [1])
    for r in roots:
        acc = acc * Poly(field, [-field.scalar(r), field.one()])
    return acc


def xgcd(a: Poly, b: Poly):
    """Extended gcd: returns (d, s, t) with s*a + t*b = d and d monic."""
    if a.is_zero() and b.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    field = a.field
    r0, r1 = a, b
    s0, s1 = Poly(field, [1]), Poly(field)
    t0, t1 = Poly(field), Poly(field, [1])
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    scale = r0.lc().inverse()
    return r0 * scale, s0 * scale, t0 * scale
