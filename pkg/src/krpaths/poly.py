"""Exact sparse Laurent polynomials with integer coefficients.

``QPoly`` is univariate in ``q``; ``QTPoly`` is bivariate in ``(q, t)``.
Both store a mapping from exponent tuples to nonzero Python ints, so
coefficients never overflow and negative exponents are allowed.
"""
from __future__ import annotations

import re
from collections import Counter
from typing import Iterable, Mapping

Exponent = tuple[int, ...]


class _SparsePoly:
    variables: tuple[str, ...] = ()

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | None = None):
        clean: dict[Exponent, int] = {}
        if terms:
            for exp, coeff in terms.items():
                exp = self._key(exp)
                if coeff:
                    clean[exp] = clean.get(exp, 0) + int(coeff)
            clean = {e: c for e, c in clean.items() if c}
        self._terms = clean

    @classmethod
    def _key(cls, exp) -> Exponent:
        if isinstance(exp, int):
            exp = (exp,)
        exp = tuple(int(e) for e in exp)
        if len(exp) != len(cls.variables):
            raise ValueError(f"exponent {exp} does not match variables {cls.variables}")
        return exp

    @classmethod
    def _wrap(cls, terms: dict[Exponent, int]):
        obj = cls.__new__(cls)
        obj._terms = {e: c for e, c in terms.items() if c}
        return obj

    @classmethod
    def zero(cls):
        return cls._wrap({})

    @classmethod
    def one(cls):
        return cls._wrap({(0,) * len(cls.variables): 1})

    @classmethod
    def monomial(cls, *exp: int, coeff: int = 1):
        return cls._wrap({cls._key(exp): coeff})

    @classmethod
    def from_exponents(cls, exponents: Iterable) -> "_SparsePoly":
        """Generating function: one unit term per exponent in the iterable."""
        return cls._wrap({cls._key(e): c for e, c in Counter(exponents).items()})

    # -- container protocol -------------------------------------------------
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), reverse=True)

    def __iter__(self):
        return iter(sorted(self._terms, reverse=True))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __getitem__(self, exp) -> int:
        return self._terms.get(self._key(exp), 0)

    # -- arithmetic ---------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, int):
            return type(self)._wrap({(0,) * len(self.variables): other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return self._wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return self._wrap({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exponent, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return self._wrap(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are only defined for monomials; use shift()")
        result = self.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = self._coerce(other)
        if not isinstance(other, _SparsePoly) or other.variables != self.variables:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.variables, frozenset(self._terms.items())))

    def shift(self, *exp: int):
        """Multiply by the monomial with the given exponents."""
        exp = self._key(exp)
        return self._wrap({tuple(a + b for a, b in zip(e, exp)): c for e, c in self._terms.items()})

    def invert(self, *which: str):
        """Substitute v -> 1/v for each named variable (all variables by default)."""
        names = which or self.variables
        flip = [-1 if v in names else 1 for v in self.variables]
        return self._wrap({tuple(a * f for a, f in zip(e, flip)): c for e, c in self._terms.items()})

    # -- inspection ---------------------------------------------------------
    def min_degree(self, var: int = 0) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return min(e[var] for e in self._terms)

    def max_degree(self, var: int = 0) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(e[var] for e in self._terms)

    def total(self) -> int:
        """Sum of coefficients (value at all variables = 1)."""
        return sum(self._terms.values())

    # -- formatting ---------------------------------------------------------
    def _monomial_str(self, exp: Exponent) -> str:
        parts = []
        for v, e in zip(self.variables, exp):
            if e == 1:
                parts.append(v)
            elif e:
                parts.append(f"{v}^{e}")
        return " ".join(parts) or "1"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for exp, coeff in self.items():
            mono = self._monomial_str(exp)
            mag = abs(coeff)
            if mono == "1":
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag} {mono}"
            if not out:
                out.append(body if coeff > 0 else f"-{body}")
            else:
                out.append(("+ " if coeff > 0 else "- ") + body)
        return " ".join(out)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({str(self)!r})"

    def to_json(self) -> dict[str, int]:
        return {self._monomial_str(e): c for e, c in self.items()}

    @classmethod
    def from_json(cls, data: Mapping[str, int]):
        terms: dict[Exponent, int] = {}
        for mono, coeff in data.items():
            (key,) = cls.parse(mono)._terms
            terms[key] = terms.get(key, 0) + int(coeff)
        return cls._wrap(terms)

    @classmethod
    def parse(cls, text: str):
        """Parse strings such as ``"q^6 + 2 q^4 t - t^-1 + 3"``."""
        text = text.replace("*", " ").replace("\u2212", "-").replace("^-", "^~").strip()
        if text in ("", "0"):
            return cls.zero()
        terms: dict[Exponent, int] = {}
        for sign, body in re.findall(r"([+-]?)\s*([^+-]+)", text):
            body = body.replace(" ", "")
            m = re.fullmatch(r"(\d*)((?:[a-z](?:\^~?\d+)?)*)", body)
            if m is None:
                raise ValueError(f"cannot parse term {body!r} in {text!r}")
            coeff = int(m.group(1)) if m.group(1) else 1
            exp = [0] * len(cls.variables)
            for var, power in re.findall(r"([a-z])(?:\^(~?\d+))?", m.group(2)):
                if var not in cls.variables:
                    raise ValueError(f"unknown variable {var!r} in {text!r}")
                exp[cls.variables.index(var)] += int(power.replace("~", "-")) if power else 1
            key = tuple(exp)
            terms[key] = terms.get(key, 0) + (-coeff if sign == "-" else coeff)
        return cls._wrap(terms)


class QPoly(_SparsePoly):
    variables = ("q",)
    __slots__ = ()

    def coefficient(self, k: int) -> int:
        return self._terms.get((k,), 0)

    def __call__(self, value):
        return sum(c * value ** e[0] for e, c in self._terms.items())

    def exact_div(self, other: "QPoly") -> "QPoly":
        """Exact polynomial division; raises ValueError if ``other`` does not divide ``self``."""
        if not other:
            raise ZeroDivisionError("division by zero polynomial")
        lead_e = other.max_degree()
        lead_c = other.coefficient(lead_e)
        floor = self.min_degree() - other.min_degree() if self else 0
        rem = dict(self._terms)
        quot: dict[Exponent, int] = {}
        while rem:
            top = max(rem)[0]
            q_c, r_c = divmod(rem[(top,)], lead_c)
            shift = top - lead_e
            if r_c or shift < floor:
                raise ValueError("division is not exact")
            quot[(shift,)] = q_c
            for (e,), oc in other._terms.items():
                k = (e + shift,)
                rem[k] = rem.get(k, 0) - q_c * oc
                if not rem[k]:
                    del rem[k]
        return QPoly._wrap(quot)


class QTPoly(_SparsePoly):
    variables = ("q", "t")
    __slots__ = ()

    def specialize_t(self, value: int = 1) -> QPoly:
        out: dict[Exponent, int] = {}
        for (a, b), c in self._terms.items():
            if value == 1:
                out[(a,)] = out.get((a,), 0) + c
            else:
                raise ValueError("only t=1 specialisation is supported")
        return QPoly._wrap(out)

    def specialize_q(self, value: int = 1) -> QPoly:
        """Set q = value (only 1 supported); the result is a polynomial in t, returned as QPoly."""
        if value != 1:
            raise ValueError("only q=1 specialisation is supported")
        out: dict[Exponent, int] = {}
        for (a, b), c in self._terms.items():
            out[(b,)] = out.get((b,), 0) + c
        return QPoly._wrap(out)

    def swap(self) -> "QTPoly":
        return QTPoly._wrap({(b, a): c for (a, b), c in self._terms.items()})


def q_integer(n: int) -> QPoly:
    """[n]_q = 1 + q + ... + q^(n-1)."""
    return QPoly._wrap({(k,): 1 for k in range(n)})
