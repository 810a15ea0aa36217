"""Exact sparse multivariate polynomial arithmetic.

Everything here is exact: coefficients are rationals (`fractions.Fraction`) or
elements of a prime field GF(p) represented as ints.  A `PolyRing` owns a fixed
tuple of `Variable`s split into three blocks:

  * ``x`` variables ``x[i,j]`` (matrix entries), enumerated row-major;
  * ``t`` variables ``t[k]`` (one per ideal component);
  * ``T`` variables ``T[c_1 ... c_n;k]`` (one per column tuple and component).

Monomials are dense exponent tuples over that enumeration.  Monomial orders are
realized as key functions producing flat tuples of ints, so comparisons, heaps
and max/min all reduce to Python tuple comparison.  Division, S-polynomials,
Buchberger completion (sugar selection + Gebauer-Moeller pair pruning, with an
explicit, never-silent degree bound) and block elimination are provided on top.
"""

from __future__ import annotations

import heapq
import itertools
import re
from dataclasses import dataclass
from fractions import Fraction

# comparison verdicts
LT, EQ, GT = -1, 0, 1


class DomainError(ValueError):
    """A monomial touched a variable not covered by the order in use."""


# ---------------------------------------------------------------------------
# coefficient fields
# ---------------------------------------------------------------------------


class RationalField:
    """Arbitrary-precision rationals."""

    name = "QQ"

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def convert(self, v):
        if isinstance(v, Fraction):
            return v
        if isinstance(v, int):
            return Fraction(v)
        if isinstance(v, str):
            return Fraction(v)
        raise TypeError(f"cannot coerce {v!r} into QQ")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in QQ")
        return 1 / a

    def div(self, a, b):
        return a / b

    def is_zero(self, a):
        return a == 0

    def to_str(self, a):
        return str(a)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


class PrimeField:
    """GF(p) for an odd prime p; elements are ints in [0, p)."""

    def __init__(self, p):
        if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.name = f"GF({p})"
        self.zero = 0
        self.one = 1

    def convert(self, v):
        if isinstance(v, int):
            return v % self.p
        if isinstance(v, Fraction):
            den = v.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(f"denominator divisible by {self.p}")
            return v.numerator * pow(den, self.p - 2, self.p) % self.p
        if isinstance(v, str):
            return self.convert(Fraction(v))
        raise TypeError(f"cannot coerce {v!r} into {self.name}")

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"inverse of 0 in {self.name}")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def is_zero(self, a):
        return a % self.p == 0

    def to_str(self, a):
        return str(a % self.p)

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


QQ = RationalField()


# ---------------------------------------------------------------------------
# variables and rings
# ---------------------------------------------------------------------------

_FAMILY_RANK = {"x": 0, "t": 1, "T": 2}


@dataclass(frozen=True)
class Variable:
    """A named indeterminate.

    family 'x': index = (i, j)          -> printed x[i,j]
    family 't': index = (k,)            -> printed t[k]
    family 'T': index = (c_1,...,c_n,k) -> printed T[c_1 ... c_n;k]
    """

    family: str
    index: tuple

    def __post_init__(self):
        if self.family not in _FAMILY_RANK:
            raise ValueError(f"unknown variable family {self.family!r}")

    @property
    def sort_key(self):
        return (_FAMILY_RANK[self.family],) + self.index

    @property
    def name(self):
        if self.family == "x":
            return f"x[{self.index[0]},{self.index[1]}]"
        if self.family == "t":
            return f"t[{self.index[0]}]"
        cols = " ".join(str(c) for c in self.index[:-1])
        return f"T[{cols};{self.index[-1]}]"

    @property
    def cols(self):
        """Column tuple of a T variable."""
        if self.family != "T":
            raise ValueError("cols only defined for T variables")
        return self.index[:-1]

    @property
    def component(self):
        """Ideal-component label of a t or T variable."""
        if self.family == "t":
            return self.index[0]
        if self.family == "T":
            return self.index[-1]
        raise ValueError("component only defined for t and T variables")

    def __repr__(self):
        return self.name


def xvar(i, j):
    return Variable("x", (i, j))


def tvar(k):
    return Variable("t", (k,))


def Tvar(cols, k):
    return Variable("T", tuple(cols) + (k,))


class PolyRing:
    """A polynomial ring over an exact field with a fixed variable tuple.

    Variables are stored sorted by family block (x, then t, then T) and within
    each block by ascending index; within a block, *earlier position means
    larger variable* for every order defined below (row-major lex priority for
    x, ascending component for t, ascending (columns, component) tuple for T).
    """

    def __init__(self, variables, field=QQ, name="R"):
        vs = sorted(set(variables), key=lambda v: v.sort_key)
        self.variables = tuple(vs)
        self.field = field
        self.name = name
        self.nvars = len(vs)
        self.position = {v: p for p, v in enumerate(vs)}
        self.x_positions = tuple(p for p, v in enumerate(vs) if v.family == "x")
        self.t_positions = tuple(p for p, v in enumerate(vs) if v.family == "t")
        self.T_positions = tuple(p for p, v in enumerate(vs) if v.family == "T")
        self.one_mono = (0,) * self.nvars
        self._display_order = None
        self._var_poly_cache = {}

    # -- monomial helpers ---------------------------------------------------

    def unit_mono(self, pos, exp=1):
        m = [0] * self.nvars
        m[pos] = exp
        return tuple(m)

    def mono_from_pairs(self, pairs):
        """Build a monomial from (Variable, exponent) pairs."""
        m = [0] * self.nvars
        for v, e in pairs:
            if e < 0:
                raise ValueError("negative exponent")
            p = self.position.get(v)
            if p is None:
                raise DomainError(f"variable {v.name} not in ring {self.name}")
            m[p] += e
        return tuple(m)

    @staticmethod
    def mono_mul(a, b):
        return tuple(x + y for x, y in zip(a, b))

    @staticmethod
    def mono_div(a, b):
        """a / b, or None when b does not divide a."""
        for x, y in zip(a, b):
            if x < y:
                return None
        return tuple(x - y for x, y in zip(a, b))

    @staticmethod
    def mono_divides(b, a):
        """True iff monomial b divides monomial a (no quotient built)."""
        for x, y in zip(a, b):
            if x < y:
                return False
        return True

    @staticmethod
    def mono_lcm(a, b):
        return tuple(x if x > y else y for x, y in zip(a, b))

    @staticmethod
    def mono_degree(a):
        return sum(a)

    @staticmethod
    def mono_coprime(a, b):
        return all(x == 0 or y == 0 for x, y in zip(a, b))

    def mono_str(self, mono):
        if all(e == 0 for e in mono):
            return "1"
        parts = []
        for p, e in enumerate(mono):
            if e == 0:
                continue
            nm = self.variables[p].name
            parts.append(nm if e == 1 else f"{nm}^{e}")
        return "*".join(parts)

    # -- polynomial constructors -------------------------------------------

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return Polynomial(self, {self.one_mono: self.field.one})

    def constant(self, c):
        c = self.field.convert(c)
        if self.field.is_zero(c):
            return self.zero()
        return Polynomial(self, {self.one_mono: c})

    def monomial(self, mono, coeff=1):
        return Polynomial(self, {tuple(mono): self.field.convert(coeff)})

    def var_poly(self, var):
        got = self._var_poly_cache.get(var)
        if got is None:
            p = self.position.get(var)
            if p is None:
                raise DomainError(f"variable {var.name} not in ring {self.name}")
            got = self.monomial(self.unit_mono(p))
            self._var_poly_cache[var] = got
        return got

    def x(self, i, j):
        return self.var_poly(xvar(i, j))

    def t(self, k):
        return self.var_poly(tvar(k))

    def T(self, cols, k):
        return self.var_poly(Tvar(cols, k))

    @property
    def display_order(self):
        if self._display_order is None:
            self._display_order = product_order(self)
        return self._display_order

    def parse(self, text):
        return parse_poly(self, text)

    def __repr__(self):
        return f"PolyRing({self.name}, {self.field!r}, {self.nvars} vars)"


# ---------------------------------------------------------------------------
# monomial orders
# ---------------------------------------------------------------------------


class Order:
    """A monomial order given by a flat-int-tuple key function.

    Each order covers a subset of the ring's variables; applying it to a
    monomial with a positive exponent on an uncovered variable raises
    DomainError (never a silent wrong answer).
    """

    def __init__(self, ring, name, keyfunc, covered):
        self.ring = ring
        self.name = name
        self._keyfunc = keyfunc
        self.covered = frozenset(covered)
        self._uncovered = tuple(
            p for p in range(ring.nvars) if p not in self.covered
        )
        self._cache = {}

    def key(self, mono):
        k = self._cache.get(mono)
        if k is None:
            for p in self._uncovered:
                if mono[p]:
                    raise DomainError(
                        f"order {self.name} does not cover variable "
                        f"{self.ring.variables[p].name}"
                    )
            k = self._keyfunc(mono)
            self._cache[mono] = k
        return k

    def cmp(self, m1, m2):
        k1, k2 = self.key(m1), self.key(m2)
        if k1 < k2:
            return LT
        if k1 > k2:
            return GT
        return EQ

    def __repr__(self):
        return f"Order({self.name})"


def compare(order, m1, m2):
    """Compare two monomials (exponent tuples); returns LT, EQ or GT."""
    return order.cmp(m1, m2)


def _lex_key(positions):
    def key(mono):
        return tuple(mono[p] for p in positions)

    return key


def _grevlex_key(positions):
    rev = tuple(reversed(positions))

    def key(mono):
        return (sum(mono[p] for p in positions),) + tuple(-mono[p] for p in rev)

    return key


def tau_lex(ring):
    """Lex on the x block: x[i,j] > x[l,k] iff i < l, or i = l and j < k."""
    return Order(ring, "tau", _lex_key(ring.x_positions), ring.x_positions)


def delta_grevlex(ring):
    """Grevlex on the t block with t[1] > t[2] > ... ."""
    return Order(ring, "delta", _grevlex_key(ring.t_positions), ring.t_positions)


def sigma_grevlex(ring):
    """Grevlex on the T block; T_a > T_b iff the index tuple of a is
    lexicographically smaller (component is the last, least significant
    coordinate)."""
    return Order(ring, "sigma", _grevlex_key(ring.T_positions), ring.T_positions)


def tau_prime(ring):
    """Product order on x,t: compare t parts by delta first, ties by tau."""
    dk = _grevlex_key(ring.t_positions)
    xk = _lex_key(ring.x_positions)

    def key(mono):
        return dk(mono) + xk(mono)

    return Order(ring, "tau'", key, ring.x_positions + ring.t_positions)


def sigma_prime(ring):
    """Block order on x,T: compare x parts by tau first, ties by sigma."""
    xk = _lex_key(ring.x_positions)
    Tk = _grevlex_key(ring.T_positions)

    def key(mono):
        return xk(mono) + Tk(mono)

    return Order(ring, "sigma'", key, ring.x_positions + ring.T_positions)


def product_order(ring):
    """Order covering all variables: tau on x, then delta on t, then sigma on
    T.  Used for canonical printing and as a default elimination tie-break."""
    xk = _lex_key(ring.x_positions)
    dk = _grevlex_key(ring.t_positions)
    Tk = _grevlex_key(ring.T_positions)

    def key(mono):
        return xk(mono) + dk(mono) + Tk(mono)

    return Order(ring, "product", key, range(ring.nvars))


def elimination_order(ring, kill_positions, tiebreak):
    """Elimination order: graded-grevlex on the kill block first, then the
    tie-break order; any monomial touching the kill block beats any monomial
    in the subring, so a Groebner basis intersected with the subring is a
    Groebner basis of the elimination ideal under `tiebreak`."""
    kill = tuple(sorted(kill_positions))
    if not kill:
        raise ValueError("empty kill block")
    kk = _grevlex_key(kill)
    covered = set(kill) | set(tiebreak.covered)
    tk = tiebreak._keyfunc  # raw key: the mask is enforced by the outer order

    def key(mono):
        return kk(mono) + tk(mono)

    name = f"elim[{len(kill)}]>{tiebreak.name}"
    return Order(ring, name, key, covered)


def weight_order(ring, weights, tiebreak, name="weight", guard=None):
    """Weight order: compare total weight first (weights: position -> int,
    nonnegative), ties by `tiebreak`.  `guard` is an optional
    (coeffs, cap) pair; a monomial whose guard-degree sum(coeffs[p]*e[p])
    exceeds cap raises DomainError (used to keep weight encodings faithful)."""
    wt = tuple(weights.get(p, 0) for p in range(ring.nvars))
    covered = set(tiebreak.covered) | {p for p in range(ring.nvars) if wt[p]}
    gc, cap = (None, None) if guard is None else guard
    tk = tiebreak._keyfunc  # raw key: the mask is enforced by the outer order

    def key(mono):
        if gc is not None:
            gdeg = sum(c * e for c, e in zip(gc, mono) if e)
            if gdeg > cap:
                raise DomainError(
                    f"order {name}: monomial exceeds weight-faithful degree "
                    f"cap ({gdeg} > {cap})"
                )
        w = sum(wt[p] * e for p, e in enumerate(mono) if e)
        return (w,) + tk(mono)

    return Order(ring, name, key, covered)


def permuted_lex(ring, priority_positions):
    """Pure lex with an explicit variable priority list (highest first); used
    to probe order-independence of Groebner claims with many lex orders."""
    prio = tuple(priority_positions)
    return Order(ring, f"lex~{hash(prio) & 0xFFFF:04x}", _lex_key(prio), prio)


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------


class Polynomial:
    """Immutable sparse polynomial: {exponent tuple: nonzero coefficient}."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring, terms, normalized=False):
        self.ring = ring
        if normalized:
            self.terms = terms
        else:
            field = ring.field
            clean = {}
            for m, c in terms.items():
                c = field.convert(c)
                if not field.is_zero(c):
                    clean[tuple(m)] = c
            self.terms = clean
        self._hash = None

    # -- basic protocol -----------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            if other == 0:
                return self.is_zero()
            return NotImplemented
        return self.ring is other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __len__(self):
        return len(self.terms)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        field = self.ring.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            prev = out.get(m)
            if prev is None:
                out[m] = c
            else:
                s = field.add(prev, c)
                if field.is_zero(s):
                    del out[m]
                else:
                    out[m] = s
        return Polynomial(self.ring, out, normalized=True)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __neg__(self):
        field = self.ring.field
        return Polynomial(
            self.ring,
            {m: field.neg(c) for m, c in self.terms.items()},
            normalized=True,
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        field = self.ring.field
        if len(other.terms) == 1:
            ((m2, c2),) = other.terms.items()
            return self.mono_scale(m2, c2)
        if len(self.terms) == 1:
            ((m1, c1),) = self.terms.items()
            return other.mono_scale(m1, c1)
        out = {}
        mul, add, is_zero = field.mul, field.add, field.is_zero
        mono_mul = PolyRing.mono_mul
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                c = mul(c1, c2)
                prev = out.get(m)
                if prev is None:
                    out[m] = c
                else:
                    s = add(prev, c)
                    if is_zero(s):
                        del out[m]
                    else:
                        out[m] = s
        return Polynomial(self.ring, out, normalized=True)

    __rmul__ = __mul__
    __radd__ = __add__

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power")
        out = self.ring.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base if e > 1 else base
            e >>= 1
        return out

    def scale(self, c):
        field = self.ring.field
        c = field.convert(c)
        if field.is_zero(c):
            return self.ring.zero()
        return Polynomial(
            self.ring,
            {m: field.mul(cc, c) for m, cc in self.terms.items()},
            normalized=True,
        )

    def mono_scale(self, mono, coeff):
        """self * coeff * x^mono (fast path used throughout division)."""
        field = self.ring.field
        mono_mul = PolyRing.mono_mul
        return Polynomial(
            self.ring,
            {
                mono_mul(m, mono): field.mul(c, coeff)
                for m, c in self.terms.items()
            },
            normalized=True,
        )

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring is not self.ring:
                raise ValueError("mixed-ring arithmetic")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        raise TypeError(f"cannot combine polynomial with {other!r}")

    # -- structure ----------------------------------------------------------

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def degree_in(self, positions):
        if not self.terms:
            return -1
        return max(sum(m[p] for p in positions) for m in self.terms)

    def leading_term(self, order):
        """(monomial, coefficient) maximal under `order`."""
        if not self.terms:
            raise ValueError("leading term of 0")
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def leading_monomial(self, order):
        return self.leading_term(order)[0]

    def monic(self, order):
        m, c = self.leading_term(order)
        if c == self.ring.field.one:
            return self
        return self.scale(self.ring.field.inv(c))

    def terms_sorted(self, order=None, reverse=True):
        order = order or self.ring.display_order
        return sorted(self.terms.items(), key=lambda mc: order.key(mc[0]), reverse=reverse)

    def uses_positions(self, positions):
        pos = set(positions)
        return any(m[p] for m in self.terms for p in pos if m[p])

    def coefficient(self, mono):
        return self.terms.get(tuple(mono), self.ring.field.zero)

    # -- printing -----------------------------------------------------------

    def to_str(self, order=None):
        if not self.terms:
            return "0"
        ring = self.ring
        field = ring.field
        parts = []
        for i, (m, c) in enumerate(self.terms_sorted(order)):
            cs = field.to_str(c)
            negative = cs.startswith("-")
            mag = cs[1:] if negative else cs
            ms = ring.mono_str(m)
            if ms == "1":
                body = mag
            elif mag == "1":
                body = ms
            else:
                body = f"{mag}*{ms}"
            if i == 0:
                parts.append(("-" if negative else "") + body)
            else:
                parts.append((" - " if negative else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return self.to_str()


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"""\s*(?:
      (?P<xv>x\[\s*(?P<xi>\d+)\s*,\s*(?P<xj>\d+)\s*\])
    | (?P<Tv>T\[\s*(?P<Tc>\d+(?:\s+\d+)*)\s*;\s*(?P<Tk>\d+)\s*\])
    | (?P<tv>t\[\s*(?P<tk>\d+)\s*\])
    | (?P<num>\d+(?:\s*/\s*\d+)?)
    | (?P<op>[-+*^])
    )""",
    re.VERBOSE,
)


def _tokenize(text):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            if text[pos:].strip() == "":
                break
            raise ValueError(f"cannot parse polynomial near {text[pos:pos+25]!r}")
        pos = m.end()
        if m.group("xv"):
            out.append(("var", xvar(int(m.group("xi")), int(m.group("xj")))))
        elif m.group("Tv"):
            cols = tuple(int(c) for c in m.group("Tc").split())
            out.append(("var", Tvar(cols, int(m.group("Tk")))))
        elif m.group("tv"):
            out.append(("var", tvar(int(m.group("tk")))))
        elif m.group("num"):
            out.append(("num", Fraction(m.group("num").replace(" ", ""))))
        else:
            out.append(("op", m.group("op")))
    return out


def parse_poly(ring, text):
    """Parse the canonical textual form:

        poly   := [sign] term (sign term)*
        term   := factor ('*' factor)*
        factor := number | var | var '^' int

    Variables are written x[i,j], t[k], T[c_1 c_2 ...;k].
    """
    toks = _tokenize(text)
    if not toks:
        raise ValueError("empty polynomial text")
    field = ring.field
    terms = {}
    i = 0
    n = len(toks)

    def flush(sign, coeff, mono):
        c = field.convert(coeff if sign > 0 else -coeff)
        prev = terms.get(mono)
        c = field.add(prev, c) if prev is not None else c
        if field.is_zero(c):
            terms.pop(mono, None)
        else:
            terms[mono] = c

    while i < n:
        sign = 1
        while i < n and toks[i][0] == "op" and toks[i][1] in "+-":
            if toks[i][1] == "-":
                sign = -sign
            i += 1
        if i >= n:
            raise ValueError("dangling sign in polynomial text")
        coeff = Fraction(1)
        mono = ring.one_mono
        expect_factor = True
        while i < n:
            kind, val = toks[i]
            if kind == "num":
                coeff *= val
                i += 1
            elif kind == "var":
                e = 1
                if i + 2 < n and toks[i + 1] == ("op", "^"):
                    if toks[i + 2][0] != "num" or toks[i + 2][1].denominator != 1:
                        raise ValueError("exponent must be an integer")
                    e = int(toks[i + 2][1])
                    i += 2
                mono = PolyRing.mono_mul(mono, ring.mono_from_pairs([(val, e)]))
                i += 1
            else:
                raise ValueError(f"unexpected token {val!r} in term")
            expect_factor = False
            if i < n and toks[i] == ("op", "*"):
                i += 1
                expect_factor = True
                continue
            if i < n and toks[i][0] == "op" and toks[i][1] in "+-":
                break
            if i < n and not expect_factor and toks[i][0] in ("num", "var"):
                raise ValueError("missing operator between factors")
        if expect_factor:
            raise ValueError("dangling '*' in polynomial text")
        flush(sign, coeff, mono)
    return Polynomial(ring, terms)


# ---------------------------------------------------------------------------
# division / normal forms
# ---------------------------------------------------------------------------


def _neg_key(key):
    return tuple(-k for k in key)


def division(f, divisors, order, with_quotients=False):
    """Multivariate division of f by an ordered list of divisors.

    Returns (quotients, remainder) when with_quotients else remainder.  The
    divisor chosen at each step is the first in list order whose leading term
    divides the working term (deterministic).  No term of the remainder is
    divisible by any divisor's leading term, and
    f = sum(quotients[i] * divisors[i]) + remainder exactly.
    """
    ring = f.ring
    field = ring.field
    entries = []
    for g in divisors:
        if g.is_zero():
            raise ValueError("zero polynomial among divisors")
        lm, lc = g.leading_term(order)
        tail = [(m, c) for m, c in g.terms.items() if m != lm]
        sup = tuple(p for p, e in enumerate(lm) if e)
        entries.append((lm, lc, tail, sup))

    work = dict(f.terms)
    heap = [( _neg_key(order.key(m)), m) for m in work]
    heapq.heapify(heap)
    remainder = {}
    quotients = [{} for _ in divisors] if with_quotients else None
    mono_mul, mono_div = PolyRing.mono_mul, PolyRing.mono_div

    while heap:
        _, mono = heapq.heappop(heap)
        c = work.pop(mono, None)
        if c is None:
            continue
        hit = -1
        for idx, (lm, lc, tail, sup) in enumerate(entries):
            ok = True
            for p in sup:
                if mono[p] < lm[p]:
                    ok = False
                    break
            if ok:
                hit = idx
                break
        if hit < 0:
            remainder[mono] = c
            continue
        lm, lc, tail, sup = entries[hit]
        q = field.div(c, lc)
        qm = mono_div(mono, lm)
        if with_quotients:
            prev = quotients[hit].get(qm)
            quotients[hit][qm] = field.add(prev, q) if prev is not None else q
        for tm, tc in tail:
            nm = mono_mul(qm, tm)
            nc = field.mul(q, tc)
            prev = work.get(nm)
            if prev is None:
                work[nm] = field.neg(nc)
                heapq.heappush(heap, (_neg_key(order.key(nm)), nm))
            else:
                s = field.sub(prev, nc)
                if field.is_zero(s):
                    del work[nm]
                else:
                    work[nm] = s

    rem = Polynomial(ring, remainder, normalized=True)
    if with_quotients:
        qs = [Polynomial(ring, q, normalized=True) for q in quotients]
        return qs, rem
    return rem


def normal_form(f, G, order):
    """Remainder of f on division by G; f - result lies in the ideal (G)."""
    if not G:
        return f
    return division(f, list(G), order)


def s_polynomial(f, g, order):
    """S-polynomial of two nonzero polynomials."""
    if f.is_zero() or g.is_zero():
        raise ValueError("S-polynomial of 0")
    field = f.ring.field
    lf, cf = f.leading_term(order)
    lg, cg = g.leading_term(order)
    L = PolyRing.mono_lcm(lf, lg)
    a = PolyRing.mono_div(L, lf)
    b = PolyRing.mono_div(L, lg)
    return f.mono_scale(a, field.inv(cf)) - g.mono_scale(b, field.inv(cg))


# ---------------------------------------------------------------------------
# Buchberger completion
# ---------------------------------------------------------------------------


class GroebnerBasis(list):
    """A list of polynomials plus completion metadata.

    complete      -- True iff no S-pair was skipped (basis is a Groebner basis)
    skipped_pairs -- number of S-pairs skipped because their lcm degree
                     exceeded the requested degree bound
    stats         -- counters (pairs considered, reductions to zero, ...)
    """

    def __init__(self, elems, complete=True, skipped_pairs=0, stats=None):
        super().__init__(elems)
        self.complete = complete
        self.skipped_pairs = skipped_pairs
        self.stats = stats or {}


def _gm_update(P, basis_lms, t, alive):
    """Gebauer-Moeller pair update after appending element index t.

    P is a dict (i, j) -> lcm monomial of the currently alive pairs.
    Mutates P in place and returns the dict of newly added pairs.  Both
    classical criteria are applied: the product (coprime-lead) criterion and
    the chain criterion.
    """
    lm_t = basis_lms[t]
    lcm = PolyRing.mono_lcm
    coprime = PolyRing.mono_coprime
    divides = PolyRing.mono_divides

    cand = {i: lcm(basis_lms[i], lm_t) for i in range(t) if alive[i]}
    # criterion M: drop (i,t) when another new pair's lcm properly divides it
    keep = {}
    for i in sorted(cand, key=lambda i: (sum(cand[i]), cand[i])):
        li = cand[i]
        dominated = False
        for j, lj in keep.items():
            if lj != li and divides(lj, li):
                dominated = True
                break
        if not dominated:
            keep[i] = li
    # criterion F: one pair per distinct lcm
    by_lcm = {}
    for i in sorted(keep):
        by_lcm.setdefault(keep[i], i)
    # criterion B (product): drop coprime-lead pairs
    new_pairs = {}
    for li, i in by_lcm.items():
        if not coprime(basis_lms[i], lm_t):
            new_pairs[(i, t)] = li
    # chain criterion on old pairs
    for (i, j) in list(P):
        lij = P[(i, j)]
        if (
            divides(lm_t, lij)
            and lcm(basis_lms[i], lm_t) != lij
            and lcm(basis_lms[j], lm_t) != lij
        ):
            del P[(i, j)]
    P.update(new_pairs)
    return new_pairs


def buchberger(G, order, degree_bound=None, reduce_result=True):
    """Buchberger completion with sugar selection and Gebauer-Moeller pruning.

    degree_bound, when given, caps the total degree of S-pair lcms processed;
    pairs above the cap are counted and skipped and the result is flagged
    incomplete (GroebnerBasis.complete == False) -- never silently truncated.
    A complete run returns the reduced Groebner basis, sorted by ascending
    leading monomial: the canonical basis for (ideal, order).
    """
    gens = [g for g in G if not g.is_zero()]
    if not gens and G:
        return GroebnerBasis([], complete=True)
    if not G:
        raise ValueError("empty generating set")
    gens.sort(key=lambda g: order.key(g.leading_monomial(order)))

    basis = []
    lms = []
    sugars = []
    alive = []
    P = {}
    pq = []  # lazy heap over (pair sugar, lcm key, i, j); P holds liveness
    stats = {"pairs": 0, "zero_reductions": 0, "basis_growth": 0}

    def append(h, sugar):
        h = h.monic(order)
        basis.append(h)
        lms.append(h.leading_monomial(order))
        sugars.append(sugar)
        alive.append(True)
        new_pairs = _gm_update(P, lms, len(basis) - 1, alive)
        for (i, j), lij in new_pairs.items():
            dl = sum(lij)
            sug = max(sugars[i] + dl - sum(lms[i]), sugars[j] + dl - sum(lms[j]))
            heapq.heappush(pq, (sug, order.key(lij), i, j))

    for g in gens:
        append(g, g.total_degree())

    skipped = 0
    while P:
        sug, _, i, j = heapq.heappop(pq)
        lij = P.pop((i, j), None)
        if lij is None:
            continue  # pruned by the chain criterion after being queued
        if degree_bound is not None and sum(lij) > degree_bound:
            skipped += 1
            continue
        stats["pairs"] += 1
        s = s_polynomial(basis[i], basis[j], order)
        r = division(s, basis, order)
        if r.is_zero():
            stats["zero_reductions"] += 1
            continue
        stats["basis_growth"] += 1
        append(r, max(sug, r.total_degree()))

    complete = skipped == 0
    if not complete or not reduce_result:
        out = sorted(
            (b.monic(order) for b in basis),
            key=lambda g: order.key(g.leading_monomial(order)),
        )
        return GroebnerBasis(out, complete=complete, skipped_pairs=skipped, stats=stats)

    # minimalize: drop elements whose lead is divisible by another lead
    order_key = lambda g: order.key(g.leading_monomial(order))
    basis.sort(key=order_key)
    minimal = []
    min_lms = []
    for g in basis:
        lm = g.leading_monomial(order)
        if any(PolyRing.mono_div(lm, m) is not None for m in min_lms):
            continue
        minimal.append(g)
        min_lms.append(lm)
    # interreduce tails
    reduced = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1 :]
        r = division(g, others, order) if others else g
        reduced.append(r.monic(order))
    reduced.sort(key=order_key)
    return GroebnerBasis(reduced, complete=True, skipped_pairs=0, stats=stats)


# ---------------------------------------------------------------------------
# elimination
# ---------------------------------------------------------------------------


class EliminationBasis(list):
    """Generators of an elimination ideal plus completion metadata."""

    def __init__(self, elems, complete=True, full_basis=None, order=None):
        super().__init__(elems)
        self.complete = complete
        self.full_basis = full_basis
        self.order = order


def eliminate(G, kill, order_tiebreak=None, degree_bound=None):
    """Generators of (G) intersected with the subring omitting `kill`.

    kill may contain Variables or ring positions.  The returned basis is a
    Groebner basis of the elimination ideal under the tie-break order
    (restricted to the remaining variables) whenever completion finished;
    EliminationBasis.complete reports that.
    """
    if not G:
        raise ValueError("empty generating set")
    ring = G[0].ring
    kill_positions = set()
    for k in kill:
        if isinstance(k, Variable):
            p = ring.position.get(k)
            if p is None:
                raise DomainError(f"variable {k.name} not in ring")
            kill_positions.add(p)
        else:
            kill_positions.add(int(k))
    if order_tiebreak is None:
        remaining = [p for p in range(ring.nvars) if p not in kill_positions]
        xk = _lex_key([p for p in remaining if p in set(ring.x_positions)])
        dk = _grevlex_key([p for p in remaining if p in set(ring.t_positions)])
        Tk = _grevlex_key([p for p in remaining if p in set(ring.T_positions)])

        def key(mono):
            return xk(mono) + dk(mono) + Tk(mono)

        order_tiebreak = Order(ring, "product|sub", key, remaining)
    order = elimination_order(ring, kill_positions, order_tiebreak)
    gb = buchberger(G, order, degree_bound=degree_bound)
    filtered = [g for g in gb if not g.uses_positions(kill_positions)]
    return EliminationBasis(
        filtered, complete=gb.complete, full_basis=gb, order=order_tiebreak
    )
