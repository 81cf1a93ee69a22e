"""Scalar backends: the exact field Q(sqrt2, sqrt3) and IEEE doubles.

Exact elements are stored as four integer numerators over one positive
common denominator, ``(a + b*sqrt2 + c*sqrt3 + d*sqrt6) / q``, always kept
in lowest terms.  That keeps equality and hashing structural and makes the
hot path (multiplying entries of 25x25 matrices) cheap.
"""

from __future__ import annotations

import ast
import math
import operator
from fractions import Fraction
from numbers import Rational
from typing import Mapping, Union

__all__ = [
    "QF",
    "R2",
    "R3",
    "R6",
    "EXACT",
    "FLOAT",
    "Scalar",
    "ScalarParseError",
    "check_mode",
    "to_mode",
    "to_float",
    "is_zero",
    "sqrt_const",
    "parse_scalar",
    "format_scalar",
]

EXACT = "exact"
FLOAT = "float"
_MODES = (EXACT, FLOAT)

_SQRT2 = math.sqrt(2.0)
_SQRT3 = math.sqrt(3.0)
_SQRT6 = math.sqrt(6.0)


def _as_fraction(x) -> Fraction | None:
    if isinstance(x, bool):
        return None
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, Fraction):
        return x
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    return None


class QF:
    """An exact element ``a + b*sqrt2 + c*sqrt3 + d*sqrt6`` of Q(sqrt2, sqrt3).

    Arithmetic with ``int`` and ``Fraction`` is allowed (they are exact
    rationals).  Arithmetic with ``float`` raises ``TypeError``: mixing the
    exact and float backends must be an explicit conversion.
    """

    __slots__ = ("_n", "_q", "_hash")

    def __init__(self, a=0, b=0, c=0, d=0):
        fr = [_as_fraction(v) for v in (a, b, c, d)]
        if any(f is None for f in fr):
            if isinstance(a, QF) and b == 0 and c == 0 and d == 0:
                self._n, self._q = a._n, a._q
                self._hash = None
                return
            raise TypeError("QF coefficients must be int or Fraction, got %r" % ((a, b, c, d),))
        q = 1
        for f in fr:
            q = q * f.denominator // math.gcd(q, f.denominator)
        nums = tuple(f.numerator * (q // f.denominator) for f in fr)
        self._set(nums, q)

    def _set(self, nums, q):
        g = math.gcd(math.gcd(math.gcd(nums[0], nums[1]), math.gcd(nums[2], nums[3])), q)
        if g > 1:
            nums = (nums[0] // g, nums[1] // g, nums[2] // g, nums[3] // g)
            q //= g
        self._n = nums
        self._q = q
        self._hash = None

    @classmethod
    def _raw(cls, nums, q) -> "QF":
        obj = cls.__new__(cls)
        if q < 0:
            nums = (-nums[0], -nums[1], -nums[2], -nums[3])
            q = -q
        obj._set(nums, q)
        return obj

    # -- accessors -------------------------------------------------------
    @property
    def coefficients(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        """The rational coefficients ``(a, b, c, d)``."""
        q = self._q
        return tuple(Fraction(n, q) for n in self._n)  # type: ignore[return-value]

    @property
    def a(self) -> Fraction:
        return Fraction(self._n[0], self._q)

    @property
    def b(self) -> Fraction:
        return Fraction(self._n[1], self._q)

    @property
    def c(self) -> Fraction:
        return Fraction(self._n[2], self._q)

    @property
    def d(self) -> Fraction:
        return Fraction(self._n[3], self._q)

    def is_rational(self) -> bool:
        return self._n[1] == 0 and self._n[2] == 0 and self._n[3] == 0

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("%s is not rational" % self)
        return Fraction(self._n[0], self._q)

    # -- coercion --------------------------------------------------------
    @staticmethod
    def _coerce(other) -> "QF | None":
        if isinstance(other, QF):
            return other
        if isinstance(other, float):
            raise TypeError("mixed-mode arithmetic: exact scalar with float %r" % other)
        f = _as_fraction(other)
        if f is None:
            return None
        return QF._raw((f.numerator, 0, 0, 0), f.denominator)

    # -- ring operations -------------------------------------------------
    def __add__(self, other):
        o = QF._coerce(other)
        if o is None:
            return NotImplemented
        if o._q == self._q:
            n1, n2 = self._n, o._n
            return QF._raw((n1[0] + n2[0], n1[1] + n2[1], n1[2] + n2[2], n1[3] + n2[3]), self._q)
        q1, q2 = self._q, o._q
        n1, n2 = self._n, o._n
        return QF._raw(
            (n1[0] * q2 + n2[0] * q1, n1[1] * q2 + n2[1] * q1, n1[2] * q2 + n2[2] * q1, n1[3] * q2 + n2[3] * q1),
            q1 * q2,
        )

    __radd__ = __add__

    def __neg__(self):
        n = self._n
        obj = QF.__new__(QF)
        obj._n = (-n[0], -n[1], -n[2], -n[3])
        obj._q = self._q
        obj._hash = None
        return obj

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = QF._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = QF._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = QF._coerce(other)
        if o is None:
            return NotImplemented
        a1, b1, c1, d1 = self._n
        a2, b2, c2, d2 = o._n
        if b1 == 0 and c1 == 0 and d1 == 0:
            return QF._raw((a1 * a2, a1 * b2, a1 * c2, a1 * d2), self._q * o._q)
        if b2 == 0 and c2 == 0 and d2 == 0:
            return QF._raw((a2 * a1, a2 * b1, a2 * c1, a2 * d1), self._q * o._q)
        return QF._raw(
            (
                a1 * a2 + 2 * b1 * b2 + 3 * c1 * c2 + 6 * d1 * d2,
                a1 * b2 + b1 * a2 + 3 * (c1 * d2 + d1 * c2),
                a1 * c2 + c1 * a2 + 2 * (b1 * d2 + d1 * b2),
                a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2,
            ),
            self._q * o._q,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QF":
        """Multiplicative inverse via the two Galois conjugations."""
        if self._n == (0, 0, 0, 0):
            raise ZeroDivisionError("inverse of exact zero")
        a, b, c, d = self._n
        # x = p + r*sqrt3 with p = a + b*sqrt2, r = c + d*sqrt2 (over Q(sqrt2)).
        # N = p^2 - 3 r^2 = n0 + n1*sqrt2 lies in Q(sqrt2).
        n0 = a * a + 2 * b * b - 3 * (c * c + 2 * d * d)
        n1 = 2 * a * b - 6 * c * d
        m = n0 * n0 - 2 * n1 * n1  # norm down to Q, nonzero for x != 0
        # 1/x = (p - r*sqrt3) * (n0 - n1*sqrt2) / m  (times q for the denominator)
        conj = QF._raw((a, b, -c, -d), 1)
        num = conj * QF._raw((n0, -n1, 0, 0), 1)
        q = self._q
        return QF._raw(tuple(v * q for v in num._n), m * num._q)

    def __truediv__(self, other):
        o = QF._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_rational():
            if o._n[0] == 0:
                raise ZeroDivisionError("division by exact zero")
            return QF._raw(tuple(v * o._q for v in self._n), self._q * o._n[0])
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = QF._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = QF(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison --------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, float):
            return NotImplemented
        o = QF._coerce(other)
        if o is None:
            return NotImplemented
        return self._n == o._n and self._q == o._q

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self._n[0], self._q))
            else:
                self._hash = hash((self._n, self._q))
        return self._hash

    def __bool__(self):
        return self._n != (0, 0, 0, 0)

    def sign(self) -> int:
        """Exact sign (-1, 0 or 1), decided by repeated squaring."""
        a, b, c, d = self._n
        return _sign_q23(a, b, c, d)

    def _cmp(self, other) -> int:
        o = QF._coerce(other)
        if o is None:
            raise TypeError("cannot compare QF with %r" % (other,))
        return (self - o).sign()

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    # -- conversions -------------------------------------------------------
    def __float__(self):
        a, b, c, d = self._n
        return (a + b * _SQRT2 + c * _SQRT3 + d * _SQRT6) / self._q

    def __repr__(self):
        return "QF(%s)" % format_scalar(self)

    def __str__(self):
        return format_scalar(self)


def _sign_q2(a: int, b: int) -> int:
    """Sign of a + b*sqrt2 for integers a, b."""
    if b == 0:
        return (a > 0) - (a < 0)
    if a == 0:
        return (b > 0) - (b < 0)
    sa = 1 if a > 0 else -1
    sb = 1 if b > 0 else -1
    if sa == sb:
        return sa
    # opposite signs: compare a^2 with 2 b^2
    diff = a * a - 2 * b * b
    return sa if diff > 0 else -sa


def _sign_q23(a: int, b: int, c: int, d: int) -> int:
    """Sign of (a + b sqrt2) + (c + d sqrt2) sqrt3."""
    sp = _sign_q2(a, b)
    sr = _sign_q2(c, d)
    if sr == 0:
        return sp
    if sp == 0:
        return sr
    if sp == sr:
        return sp
    # opposite signs: compare p^2 with 3 r^2, both in Q(sqrt2)
    n0 = a * a + 2 * b * b - 3 * (c * c + 2 * d * d)
    n1 = 2 * a * b - 6 * c * d
    s = _sign_q2(n0, n1)
    return sp if s > 0 else -sp


R2 = QF(0, 1, 0, 0)
R3 = QF(0, 0, 1, 0)
R6 = QF(0, 0, 0, 1)

Scalar = Union[QF, float]


def check_mode(mode: str) -> str:
    if mode not in _MODES:
        raise ValueError("scalar mode must be 'exact' or 'float', got %r" % (mode,))
    return mode


def to_mode(x, mode: str):
    """Convert a number to the requested backend.

    Exact to float is allowed; float to exact is refused.
    """
    if mode == EXACT:
        if isinstance(x, float):
            raise TypeError("float to exact conversion is forbidden")
        o = QF._coerce(x)
        if o is None:
            raise TypeError("not a scalar: %r" % (x,))
        return o
    check_mode(mode)
    return float(x)


def to_float(x) -> float:
    return float(x)


def is_zero(x, tol: float = 0.0) -> bool:
    """Exact zero test for QF/rationals; ``abs(x) <= tol`` for floats."""
    if isinstance(x, QF):
        return not x
    if isinstance(x, float):
        return abs(x) <= tol
    f = _as_fraction(x)
    if f is not None:
        return f == 0
    return abs(float(x)) <= tol


def sqrt_const(n: int, mode: str):
    """sqrt(2), sqrt(3) or sqrt(6) in the requested backend."""
    table = {2: (R2, _SQRT2), 3: (R3, _SQRT3), 6: (R6, _SQRT6), 1: (QF(1), 1.0)}
    if n not in table:
        raise ValueError("sqrt(%d) is not in Q(sqrt2, sqrt3) as a basis constant" % n)
    return table[n][0] if mode == EXACT else table[n][1]


# ---------------------------------------------------------------------------
# Text grammar
# ---------------------------------------------------------------------------


class ScalarParseError(ValueError):
    """Raised for malformed scalar text; ``position`` is a 0-based column."""

    def __init__(self, message: str, text: str, position: int | None = None):
        self.text = text
        self.position = position
        where = "" if position is None else " at column %d" % (position + 1)
        super().__init__("%s%s in %r" % (message, where, text))


_BINOPS = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.Div: operator.truediv,
}

_SYMBOLS = {"r2": R2, "r3": R3, "r6": R6}


def parse_scalar(text: str, mode: str = EXACT, params: Mapping[str, object] | None = None):
    """Parse a scalar expression.

    The canonical form is ``"a + b*r2 + c*r3 + d*r6"`` with rationals written
    ``p/q``; any arithmetic combination of rationals, ``r2``, ``r3``, ``r6``
    and bound parameter names using ``+ - * / ^`` and parentheses is
    accepted.  In float mode decimal literals are also allowed.
    """
    check_mode(mode)
    if not isinstance(text, str):
        if isinstance(text, bool):
            raise ScalarParseError("booleans are not scalars", repr(text))
        if isinstance(text, int):
            return to_mode(text, mode)
        if isinstance(text, float) and mode == FLOAT:
            return text
        raise ScalarParseError("scalar must be given as a string", repr(text))
    src = text.replace("^", "**").replace("√", "sqrt")
    try:
        tree = ast.parse(src.strip(), mode="eval")
    except SyntaxError as exc:
        pos = None if exc.offset is None else max(exc.offset - 1, 0)
        raise ScalarParseError("syntax error", text, pos) from None
    bound = {}
    for key, val in (params or {}).items():
        bound[key] = val if isinstance(val, (QF, float)) else parse_scalar(val, mode)
    value = _eval(tree.body, text, mode, bound)
    return to_mode(value, mode) if mode == EXACT else float(value)


def _int_literal(node) -> int | None:
    """The value of an integer literal (optionally negated), in either mode."""
    sign = 1
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        sign = -1 if isinstance(node.op, ast.USub) else 1
        node = node.operand
    if isinstance(node, ast.Constant) and type(node.value) is int:
        return sign * node.value
    return None


def _eval(node, text, mode, params):
    col = getattr(node, "col_offset", None)
    if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
        left = _eval(node.left, text, mode, params)
        right = _eval(node.right, text, mode, params)
        try:
            return _BINOPS[type(node.op)](left, right)
        except ZeroDivisionError:
            raise ScalarParseError("division by zero", text, col) from None
    if isinstance(node, ast.BinOp) and isinstance(node.op, ast.Pow):
        base = _eval(node.left, text, mode, params)
        exp = _int_literal(node.right)
        if exp is None:
            exp = _eval(node.right, text, mode, params)
        if isinstance(exp, QF) and exp.is_rational() and exp.as_fraction().denominator == 1:
            exp = int(exp.as_fraction())
        if not isinstance(exp, int):
            raise ScalarParseError("exponent must be an integer literal", text, col)
        return base**exp
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _eval(node.operand, text, mode, params)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.Constant):
        v = node.value
        if isinstance(v, bool):
            raise ScalarParseError("unexpected boolean", text, col)
        if isinstance(v, int):
            return QF(v) if mode == EXACT else float(v)
        if isinstance(v, float):
            if mode == EXACT:
                raise ScalarParseError("decimal literal not allowed in exact mode (write p/q)", text, col)
            return v
        raise ScalarParseError("unexpected literal", text, col)
    if isinstance(node, ast.Name):
        if node.id in _SYMBOLS:
            v = _SYMBOLS[node.id]
            return v if mode == EXACT else float(v)
        if node.id in params:
            return params[node.id]
        raise ScalarParseError("unknown symbol %r" % node.id, text, col)
    if isinstance(node, ast.Call) and isinstance(node.func, ast.Name) and node.func.id == "sqrt":
        if len(node.args) == 1 and isinstance(node.args[0], ast.Constant) and node.args[0].value in (1, 2, 3, 6):
            return sqrt_const(node.args[0].value, mode)
        raise ScalarParseError("sqrt only of 1, 2, 3 or 6", text, col)
    raise ScalarParseError("unsupported expression", text, col)


def _fmt_fraction(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else "%d/%d" % (f.numerator, f.denominator)


def format_scalar(x) -> str:
    """Canonical text of a scalar.

    Exact values print as ``"a + b*r2 + c*r3 + d*r6"`` with zero terms
    dropped (``"0"`` for zero).  Floats print with ``repr`` precision.
    """
    if isinstance(x, float):
        if x == 0.0:
            return "0.0"
        return repr(x)
    if not isinstance(x, QF):
        x = to_mode(x, EXACT)
    parts = []
    for coef, sym in zip(x.coefficients, ("", "r2", "r3", "r6")):
        if coef == 0:
            continue
        mag = _fmt_fraction(abs(coef))
        if sym:
            term = sym if mag == "1" else "%s*%s" % (mag, sym)
        else:
            term = mag
        parts.append(("-" if coef < 0 else "+", term))
    if not parts:
        return "0"
    sign, term = parts[0]
    out = ("-" if sign == "-" else "") + term
    for sign, term in parts[1:]:
        out += " %s %s" % (sign, term)
    return out

