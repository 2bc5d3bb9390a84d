"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Every scalar in this package is a Cyclo: a sparse integer-exponent ->
Fraction map representing sum c_e * zeta_n^e, kept reduced modulo the
n-th cyclotomic polynomial Phi_n.  Reduction mod Phi_n (rather than mod
x^n - 1) makes the representation canonical, so equality is plain map
comparison and exact Gauss-sum identities can be tested with ==.
"""

from __future__ import annotations

import cmath
import re
from fractions import Fraction
from functools import lru_cache
from math import gcd


def _poly_divide_exact(num: list, den) -> list:
    # Long division of integer polynomials (ascending coefficients).
    # den is monic here, so the quotient stays integral; the remainder
    # must vanish or the caller picked a non-divisor.
    num = list(num)
    dn = len(den) - 1
    qdeg = len(num) - 1 - dn
    quot = [0] * (qdeg + 1)
    for k in range(qdeg, -1, -1):
        c = num[k + dn]
        quot[k] = c
        if c:
            for j in range(dn + 1):
                num[k + j] -= c * den[j]
    if any(num):
        raise ArithmeticError("non-exact polynomial division")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, ascending order, monic."""
    if n < 1:
        raise ValueError("conductor must be a positive integer")
    if n == 1:
        return (-1, 1)
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divide_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _reduction_rows(n: int):
    """Dense rows expressing x^e mod Phi_n for deg(Phi_n) <= e < n."""
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    rows = {}
    cur = [-c for c in phi[:deg]]
    for e in range(deg, n):
        rows[e] = tuple(cur)
        lead = cur[deg - 1]
        cur = [0] + cur[: deg - 1]
        if lead:
            for j in range(deg):
                cur[j] -= lead * phi[j]
    return deg, rows


def _reduce(n: int, raw: dict) -> dict:
    deg, rows = _reduction_rows(n)
    out: dict = {}
    for e, v in raw.items():
        if not v:
            continue
        e %= n
        if e < deg:
            out[e] = out.get(e, 0) + v
        else:
            for j, r in enumerate(rows[e]):
                if r:
                    out[j] = out.get(j, 0) + v * r
    return {e: v for e, v in out.items() if v}


class Cyclo:
    """An element of Q(zeta_n) in canonical reduced form.

    Construct with a conductor and a sparse {exponent: rational} map;
    exponents are taken mod n and reduced mod Phi_n, zero coefficients
    dropped.  Mixed-conductor arithmetic embeds both operands into
    Q(zeta_lcm) first.
    """

    __slots__ = ("n", "c")

    def __init__(self, n: int, coeffs: dict | None = None):
        if n < 1:
            raise ValueError("conductor must be a positive integer")
        raw = {}
        if coeffs:
            for e, v in coeffs.items():
                if isinstance(v, float):
                    raise TypeError("floating point coefficients are not allowed")
                raw[e] = v if isinstance(v, Fraction) else Fraction(v)
        self.n = n
        self.c = _reduce(n, raw)

    @staticmethod
    def _raw(n: int, c: dict) -> "Cyclo":
        s = object.__new__(Cyclo)
        s.n = n
        s.c = c
        return s

    @classmethod
    def rational(cls, num, den=1, conductor: int = 1) -> "Cyclo":
        q = Fraction(num, den)
        return cls._raw(conductor, {0: q} if q else {})

    @classmethod
    def zeta(cls, n: int, e: int = 1) -> "Cyclo":
        return cls(n, {e: 1})

    @classmethod
    def zero(cls, conductor: int = 1) -> "Cyclo":
        return cls._raw(conductor, {})

    @classmethod
    def one(cls, conductor: int = 1) -> "Cyclo":
        return cls._raw(conductor, {0: Fraction(1)})

    # -- conductor handling -------------------------------------------------

    def lift(self, n: int) -> "Cyclo":
        """Embed into Q(zeta_n); the current conductor must divide n."""
        if n == self.n:
            return self
        if n % self.n:
            raise ValueError(f"cannot embed conductor {self.n} into {n}")
        s = n // self.n
        return Cyclo._raw(n, _reduce(n, {e * s: v for e, v in self.c.items()}))

    def _coerce(self, other):
        if isinstance(other, Cyclo):
            return other
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return Cyclo._raw(self.n, {0: q} if q else {})
        return None

    def _align(self, other):
        other = self._coerce(other)
        if other is None:
            return None, None
        if self.n == other.n:
            return self, other
        n = self.n * other.n // gcd(self.n, other.n)
        return self.lift(n), other.lift(n)

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        a, b = self._align(other)
        if a is None:
            return NotImplemented
        c = dict(a.c)
        for e, v in b.c.items():
            w = c.get(e)
            if w is None:
                c[e] = v
            else:
                w = w + v
                if w:
                    c[e] = w
                else:
                    del c[e]
        return Cyclo._raw(a.n, c)

    __radd__ = __add__

    def __neg__(self):
        return Cyclo._raw(self.n, {e: -v for e, v in self.c.items()})

    def __sub__(self, other):
        a, b = self._align(other)
        if a is None:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._align(other)
        if a is None:
            return NotImplemented
        if not a.c or not b.c:
            return Cyclo._raw(a.n, {})
        raw: dict = {}
        for e1, v1 in a.c.items():
            for e2, v2 in b.c.items():
                e = e1 + e2
                raw[e] = raw.get(e, 0) + v1 * v2
        return Cyclo._raw(a.n, _reduce(a.n, raw))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclo":
        if not self.c:
            raise ZeroDivisionError("inverse of zero cyclotomic scalar")
        phi = [Fraction(x) for x in cyclotomic_polynomial(self.n)]
        deg = len(phi) - 1
        a = [Fraction(0)] * deg
        for e, v in self.c.items():
            a[e] = v
        # extended Euclid in Q[x]: find s with s*a == gcd (a nonzero unit) mod Phi
        r0, s0 = phi, [Fraction(0)]
        r1, s1 = _trim(a), [Fraction(1)]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, _trim(r)
            s0, s1 = s1, _trim(_poly_sub(s0, _poly_mul(q, s1)))
        if not r1 or not r1[0]:
            raise ZeroDivisionError("scalar not invertible mod Phi_n")
        scale = r1[0]
        return Cyclo(self.n, {i: v / scale for i, v in enumerate(s1)})

    def __truediv__(self, other):
        a, b = self._align(other)
        if a is None:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyclo.one(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- structure ----------------------------------------------------------

    def conjugate(self) -> "Cyclo":
        """The image under zeta -> zeta^{-1} (complex conjugation)."""
        return Cyclo(self.n, {-e % self.n: v for e, v in self.c.items()})

    def is_rational(self) -> bool:
        return not self.c or (len(self.c) == 1 and 0 in self.c)

    def as_fraction(self) -> Fraction:
        if not self.c:
            return Fraction(0)
        if len(self.c) == 1 and 0 in self.c:
            return self.c[0]
        raise ValueError(f"{self} is not rational")

    def approx(self) -> complex:
        """Floating approximation, for display only."""
        return sum(
            (complex(v) * cmath.exp(2j * cmath.pi * e / self.n) for e, v in self.c.items()),
            0j,
        )

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        a, b = self._align(other)
        if a is None:
            return NotImplemented
        return a.c == b.c

    # equal values can live at different conductors, so there is no cheap
    # consistent hash; Cyclo values are not meant to be dict keys
    __hash__ = None

    def __repr__(self):
        return f"Cyclo({self.n}, {{{', '.join(f'{e}: {v}' for e, v in sorted(self.c.items()))}}})"

    def __str__(self):
        return render_scalar(self)


# ---------------------------------------------------------------------------
# parsing and rendering of scalar terms ("-1/2*zeta^3" etc.)

_TERM_RE = re.compile(
    r"^\s*(?P<sign>[+-])?\s*(?:(?P<rat>\d+(?:/\d+)?)\s*\*?\s*)?"
    r"(?:zeta(?:\^(?P<exp>-?\d+))?)?\s*$"
)


def parse_scalar(text: str, conductor: int) -> Cyclo:
    """Parse '+'-joined terms like '1/2', 'zeta^3', '-2/3*zeta^2'."""
    total = Cyclo.zero(conductor)
    for piece in text.split("+"):
        if not piece.strip():
            raise ValueError(f"empty term in scalar {text!r}")
        m = _TERM_RE.match(piece)
        if not m or (m.group("rat") is None and "zeta" not in piece):
            raise ValueError(f"cannot parse scalar term {piece!r}")
        q = Fraction(m.group("rat")) if m.group("rat") is not None else Fraction(1)
        if m.group("sign") == "-":
            q = -q
        e = 0
        if "zeta" in piece:
            e = int(m.group("exp")) if m.group("exp") is not None else 1
        total = total + Cyclo(conductor, {e: q})
    return total


def render_scalar_terms(s: Cyclo) -> list[str]:
    """One canonical 'rational*zeta^e' token per stored term."""
    return [f"{v}*zeta^{e}" for e, v in sorted(s.c.items())]


def render_scalar(s: Cyclo) -> str:
    """Human-readable canonical form: 'a0 + a1*z^1 + ...'."""
    if not s.c:
        return "0"
    parts = []
    for e, v in sorted(s.c.items()):
        body = str(v) if e == 0 else (f"{v}*z^{e}" if abs(v) != 1 else f"{'-' if v < 0 else ''}z^{e}")
        parts.append(body)
    text = parts[0]
    for p in parts[1:]:
        text += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return text


def render_decimal(s: Cyclo) -> str:
    z = s.approx()
    # clamp to avoid a stray sign on parts that round to negative zero
    re = z.real if abs(z.real) >= 5e-13 else 0.0
    if abs(z.imag) < 5e-13:
        return f"{re:.12f}"
    op = "+" if z.imag >= 0 else "-"
    return f"{re:.12f} {op} {abs(z.imag):.12f}i"


# -- small Fraction-coefficient polynomial helpers (ascending lists) --------


def _trim(p: list) -> list:
    while p and not p[-1]:
        p.pop()
    return p


def _poly_sub(a: list, b: list) -> list:
    out = list(a) + [Fraction(0)] * (len(b) - len(a))
    for i, v in enumerate(b):
        out[i] -= v
    return out


def _poly_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        if u:
            for j, v in enumerate(b):
                out[i + j] += u * v
    return out


def _poly_divmod(num: list, den: list):
    num = list(num)
    dn = len(den) - 1
    lead = den[dn]
    if len(num) - 1 < dn:
        return [], num
    quot = [Fraction(0)] * (len(num) - dn)
    for k in range(len(quot) - 1, -1, -1):
        c = num[k + dn] / lead
        quot[k] = c
        if c:
            for j in range(dn + 1):
                num[k + j] -= c * den[j]
    return _trim(quot), num
