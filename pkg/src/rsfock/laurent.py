"""Exact Laurent polynomials in ``r, s`` (and in ``q`` after specialization).

Coefficients are Python ints, so nothing ever overflows.  Values are
immutable: every operation returns a new object and the term dictionaries
are never mutated after construction.
"""
from __future__ import annotations

import re
from typing import Dict, Iterable, Mapping, Tuple, Union

Exponent = Tuple[int, int]


class NotDivisible(ArithmeticError):
    """Raised when a Laurent polynomial has no exact quotient by ``r - s``."""


class LaurentParseError(ValueError):
    pass


def _clean(terms: Iterable[Tuple[object, int]]) -> dict:
    return {k: c for k, c in terms if c != 0}


class Laurent2:
    """Sum of ``c * r^a * s^b`` with integer ``c`` and integer ``a, b``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, int] | None = None):
        self._terms: Dict[Exponent, int] = _clean((terms or {}).items())
        self._hash = None

    # construction -----------------------------------------------------

    @classmethod
    def monomial(cls, a: int = 0, b: int = 0, coeff: int = 1) -> "Laurent2":
        return cls({(a, b): coeff})

    @classmethod
    def const(cls, c: int) -> "Laurent2":
        return cls({(0, 0): c})

    @classmethod
    def coerce(cls, value: Union["Laurent2", int]) -> "Laurent2":
        if isinstance(value, Laurent2):
            return value
        if isinstance(value, int):
            return cls.const(value)
        raise TypeError(f"cannot coerce {type(value).__name__} to Laurent2")

    # inspection -------------------------------------------------------

    @property
    def terms(self) -> Mapping[Exponent, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        """True for a single term with coefficient 1."""
        return len(self._terms) == 1 and next(iter(self._terms.values())) == 1

    def exponents(self) -> Exponent:
        """Exponent pair of a unit monomial."""
        if not self.is_monomial():
            raise ValueError(f"{self} is not a unit monomial")
        return next(iter(self._terms))

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Laurent2.const(other)
        if not isinstance(other, Laurent2):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # ring operations --------------------------------------------------

    def __add__(self, other):
        try:
            other = Laurent2.coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return Laurent2(out)

    __radd__ = __add__

    def __neg__(self) -> "Laurent2":
        return Laurent2({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = Laurent2.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return Laurent2.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return Laurent2({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, Laurent2):
            return NotImplemented
        if len(other._terms) == 1:
            # fast path for the monomial coefficients that dominate the Fock actions
            ((oa, ob), oc), = other._terms.items()
            return Laurent2({(a + oa, b + ob): c * oc for (a, b), c in self._terms.items()})
        out: Dict[Exponent, int] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                k = (a1 + a2, b1 + b2)
                out[k] = out.get(k, 0) + c1 * c2
        return Laurent2(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Laurent2":
        if k < 0:
            return self.invert_monomial() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def invert_monomial(self) -> "Laurent2":
        """Inverse of a unit-coefficient (or -1) monomial; the only units of the ring."""
        if len(self._terms) != 1 or abs(next(iter(self._terms.values()))) != 1:
            raise NotDivisible(f"{self} is not a unit")
        ((a, b), c), = self._terms.items()
        return Laurent2({(-a, -b): c})

    def swap_rs(self) -> "Laurent2":
        return Laurent2({(b, a): c for (a, b), c in self._terms.items()})

    def div_exact_r_minus_s(self) -> "Laurent2":
        """Return ``q`` with ``q * (r - s) == self``; raise :class:`NotDivisible` otherwise."""
        if not self._terms:
            return ZERO
        amin = min(a for a, _ in self._terms)
        bmin = min(b for _, b in self._terms)
        # shift to an honest polynomial; r and s are units so divisibility is unchanged
        by_r: Dict[int, Dict[int, int]] = {}
        for (a, b), c in self._terms.items():
            by_r.setdefault(a - amin, {})[b - bmin] = c
        deg = max(by_r)
        # synthetic division by (r - s) in Z[s][r]
        quotient: Dict[int, Dict[int, int]] = {}
        carry: Dict[int, int] = {}
        for k in range(deg, -1, -1):
            coeff = dict(by_r.get(k, {}))
            for b, c in carry.items():
                coeff[b] = coeff.get(b, 0) + c
            coeff = _clean(coeff.items())
            if k == 0:
                if coeff:
                    rem = Laurent2({(amin, b + bmin): c for b, c in coeff.items()})
                    raise NotDivisible(f"remainder {rem} on division by r - s")
                break
            quotient[k - 1] = coeff
            carry = {b + 1: c for b, c in coeff.items()}
        return Laurent2({(a + amin, b + bmin): c
                         for a, row in quotient.items() for b, c in row.items()})

    def specialize_q(self) -> "Laurent1":
        """Substitute ``r = q``, ``s = q^-1``."""
        out: Dict[int, int] = {}
        for (a, b), c in self._terms.items():
            out[a - b] = out.get(a - b, 0) + c
        return Laurent1(out)

    def evaluate(self, r, s):
        """Numeric evaluation; intended for Fractions in tests."""
        return sum(c * r ** a * s ** b for (a, b), c in self._terms.items())

    # text -------------------------------------------------------------

    def __str__(self) -> str:
        # total degree first, then r-degree: keeps "3*r^-1*s^2 - 1" in reading order
        keys = sorted(self._terms, key=lambda k: (-(k[0] + k[1]), -k[0]))
        return _render([(self._terms[k], (("r", k[0]), ("s", k[1]))) for k in keys])

    def __repr__(self) -> str:
        return f"Laurent2({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "Laurent2":
        out = cls()
        for coeff, powers in _parse_terms(text, {"r", "s"}):
            out = out + cls.monomial(powers.get("r", 0), powers.get("s", 0), coeff)
        return out


class Laurent1:
    """Sum of ``c * q^k``; the target of :meth:`Laurent2.specialize_q`."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        self._terms: Dict[int, int] = _clean((terms or {}).items())

    @classmethod
    def monomial(cls, k: int = 0, coeff: int = 1) -> "Laurent1":
        return cls({k: coeff})

    @property
    def terms(self) -> Mapping[int, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Laurent1({0: other})
        if not isinstance(other, Laurent1):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = Laurent1({0: other})
        if not isinstance(other, Laurent1):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return Laurent1(out)

    __radd__ = __add__

    def __neg__(self) -> "Laurent1":
        return Laurent1({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return Laurent1({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, Laurent1):
            return NotImplemented
        out: Dict[int, int] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                out[k1 + k2] = out.get(k1 + k2, 0) + c1 * c2
        return Laurent1(out)

    __rmul__ = __mul__

    def __str__(self) -> str:
        keys = sorted(self._terms, reverse=True)
        return _render([(self._terms[k], (("q", k),)) for k in keys])

    def __repr__(self) -> str:
        return f"Laurent1({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "Laurent1":
        out = cls()
        for coeff, powers in _parse_terms(text, {"q"}):
            out = out + cls.monomial(powers.get("q", 0), coeff)
        return out


ZERO = Laurent2()
ONE = Laurent2.const(1)
R = Laurent2.monomial(1, 0)
S = Laurent2.monomial(0, 1)


def _render(terms) -> str:
    if not terms:
        return "0"
    pieces = []
    for idx, (c, powers) in enumerate(terms):
        factors = []
        for var, e in powers:
            if e == 1:
                factors.append(var)
            elif e != 0:
                factors.append(f"{var}^{e}")
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(mag)] + factors)
        if idx == 0:
            pieces.append(("-" if c < 0 else "") + body)
        else:
            pieces.append((" - " if c < 0 else " + ") + body)
    return "".join(pieces)


_TOKEN = re.compile(r"\s*(?:(\d+)|([a-z])(?:\^\(?([+-]?\d+)\)?)?|([+\-*]))")


def _parse_terms(text: str, variables: set):
    """Yield ``(coeff, {var: exponent})`` for each additive term of ``text``."""
    src = text.strip()
    if not src:
        raise LaurentParseError("empty polynomial text")
    if src == "0":
        return []
    pos = 0
    sign = 1
    coeff = None
    powers: Dict[str, int] = {}
    have_factor = False
    terms = []

    def flush():
        if not have_factor:
            raise LaurentParseError(f"dangling operator in {text!r}")
        terms.append((sign * (1 if coeff is None else coeff), dict(powers)))

    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if not m or m.end() == pos:
            raise LaurentParseError(f"unexpected character at {pos} in {text!r}")
        pos = m.end()
        num, var, exp, op = m.groups()
        if op in ("+", "-"):
            if have_factor:
                flush()
                sign, coeff, powers, have_factor = 1, None, {}, False
            if op == "-":
                sign = -sign
        elif op == "*":
            if not have_factor:
                raise LaurentParseError(f"misplaced '*' in {text!r}")
        elif num is not None:
            coeff = int(num) * (1 if coeff is None else coeff)
            have_factor = True
        else:
            if var not in variables:
                raise LaurentParseError(f"unknown variable {var!r} in {text!r}")
            powers[var] = powers.get(var, 0) + (int(exp) if exp is not None else 1)
            have_factor = True
    flush()
    return terms
