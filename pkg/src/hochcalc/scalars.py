"""Exact scalars: rationals and small polynomial rings Q[t], Q[s,t].

Everything downstream works with plain ints, ``fractions.Fraction`` and
``Poly`` interchangeably; all three support +, -, *, == 0 and exact equality.
No floats anywhere.
"""

from fractions import Fraction

from .ops import inversion_sign


def rat(text):
    """Parse an exact rational from ``"p/q"``, ``"p"`` or a number."""
    if isinstance(text, (int, Fraction)):
        return text
    if isinstance(text, str):
        s = text.strip()
        if "/" in s:
            num, den = s.split("/")
            return Fraction(int(num), int(den))
        return int(s)
    raise TypeError(f"not an exact rational literal: {text!r}")


def rat_str(x):
    """Format an exact rational as ``"p"`` or ``"p/q"``."""
    f = Fraction(x)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def koszul_sign(perm, degrees):
    """Sign of permuting graded symbols; ``perm[i]`` = input index at slot i.

    ``degrees`` are the parities used by the ambient convention (callers pass
    shifted degrees themselves where needed).
    """
    return inversion_sign(tuple(perm), tuple(d & 1 for d in degrees))


PARAMS = ("s", "t")


class Poly:
    """Polynomial in the parameters ``s`` and ``t`` with rational coefficients.

    Monomials are keyed by ``(exp_s, exp_t)``; one-parameter families simply
    never use the first slot.  Immutable once built.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for key, coeff in terms.items():
                if coeff:
                    clean[key] = coeff
        self.terms = clean

    @classmethod
    def const(cls, c):
        return cls({(0, 0): c} if c else {})

    @classmethod
    def var(cls, name):
        if name not in PARAMS:
            raise ValueError(f"unknown parameter {name!r}")
        return cls({((1, 0) if name == "s" else (0, 1)): 1})

    def is_constant(self):
        return all(k == (0, 0) for k in self.terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return self.terms.get((0, 0), 0)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for k, v in other.terms.items():
            acc = out.get(k, 0) + v
            if acc:
                out[k] = acc
            elif k in out:
                del out[k]
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                k = (a1 + a2, b1 + b2)
                acc = out.get(k, 0) + c1 * c2
                if acc:
                    out[k] = acc
                elif k in out:
                    del out[k]
        return Poly(out)

    __rmul__ = __mul__

    def diff(self, name):
        """Exact partial derivative with respect to ``"s"`` or ``"t"``."""
        idx = PARAMS.index(name)
        out = {}
        for key, coeff in self.terms.items():
            e = key[idx]
            if e:
                k = (key[0] - 1, key[1]) if idx == 0 else (key[0], key[1] - 1)
                acc = out.get(k, 0) + e * coeff
                if acc:
                    out[k] = acc
                elif k in out:
                    del out[k]
        return Poly(out)

    def eval(self, s=0, t=0):
        """Exact specialization at a rational point."""
        total = 0
        for (a, b), coeff in self.terms.items():
            total += coeff * (s ** a) * (t ** b)
        return total

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for (a, b) in sorted(self.terms):
            c = self.terms[(a, b)]
            mono = "".join(
                (f"{n}^{e}" if e > 1 else n) for n, e in (("s", a), ("t", b)) if e
            )
            bits.append(f"{rat_str(c)}{'*' + mono if mono else ''}")
        return " + ".join(bits)

    def to_json(self):
        return [[a, b, rat_str(c)] for (a, b), c in sorted(self.terms.items())]

    @classmethod
    def from_json(cls, data):
        """Accept ``"p/q"``, ``[[e_t, "p/q"], ...]`` or ``[[e_s, e_t, "p/q"], ...]``."""
        if isinstance(data, (str, int)):
            return cls.const(rat(data))
        terms = {}
        for entry in data:
            if len(entry) == 2:
                et, c = entry
                key = (0, et)
            else:
                es, et, c = entry
                key = (es, et)
            terms[key] = terms.get(key, 0) + rat(c)
        return cls(terms)


def _coerce(x):
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, Fraction)):
        return Poly.const(x)
    return NotImplemented


def as_scalar(x):
    """Collapse a constant Poly to a plain rational; pass rationals through."""
    if isinstance(x, Poly):
        if x.is_constant():
            return x.constant_value()
        return x
    return x
