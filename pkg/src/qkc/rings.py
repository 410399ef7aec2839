"""Exact arithmetic kernel.

Four term-map based ring types, all immutable by convention:

* GroupRingElement -- the group ring Z[P] = Z[e^{+-eps_1}, ..., e^{+-eps_n}],
  monomials keyed by integer exponent vectors in the eps-basis.
* QExtElement -- Z[q^{+-1}][P], keys (q exponent, exponent vector).
* NovikovSeries -- power series in n commuting variables (Q_1..Q_n, or the
  shift variables T_1..T_n) with QExtElement coefficients, either truncated
  at a total degree or kept as an exact polynomial (trunc=None).
* ZLaurentElement -- Laurent polynomials in z_1..z_n over NovikovSeries
  (or NovikovFraction) coefficients.

NovikovFraction provides the denominator-cleared exact mode: a numerator
polynomial together with multiplicities of (1 - x_j) factors in the
denominator, compared by cross-multiplication.
"""

from __future__ import annotations


class ConfigError(ValueError):
    """Operands disagree on rank or truncation degree."""


class DivisibilityError(ArithmeticError):
    """exact_div was asked for a quotient that does not exist."""


def _merged(a, b, sign=1):
    """Merge two term maps, dropping zero coefficients."""
    out = dict(a)
    for key, c in b.items():
        nc = out.get(key, 0) + sign * c
        if nc:
            out[key] = nc
        else:
            out.pop(key, None)
    return out


class GroupRingElement:
    """Sparse element of Z[P]; terms maps exponent vectors to integers."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def one(cls, n):
        return cls(n, {(0,) * n: 1})

    @classmethod
    def monomial(cls, n, exps, coeff=1):
        exps = tuple(exps)
        if len(exps) != n:
            raise ConfigError("exponent vector has wrong rank")
        return cls(n, {exps: coeff})

    def is_zero(self):
        return not self.terms

    def _check(self, other):
        if self.n != other.n:
            raise ConfigError("rank mismatch: %d vs %d" % (self.n, other.n))

    def __add__(self, other):
        if isinstance(other, int):
            other = GroupRingElement.one(self.n) * other
        self._check(other)
        return GroupRingElement(self.n, _merged(self.terms, other.terms))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = GroupRingElement.one(self.n) * other
        self._check(other)
        return GroupRingElement(self.n, _merged(self.terms, other.terms, -1))

    def __neg__(self):
        return GroupRingElement(self.n, {k: -v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return GroupRingElement(
                self.n, {k: v * other for k, v in self.terms.items()})
        self._check(other)
        out = {}
        for ka, va in self.terms.items():
            for kb, vb in other.terms.items():
                key = tuple(x + y for x, y in zip(ka, kb))
                nc = out.get(key, 0) + va * vb
                if nc:
                    out[key] = nc
                else:
                    del out[key]
        return GroupRingElement(self.n, out)

    __rmul__ = __mul__

    def __pow__(self, m):
        if m < 0:
            raise ConfigError("negative power of a ring element")
        out = GroupRingElement.one(self.n)
        base = self
        while m:
            if m & 1:
                out = out * base
            base = base * base
            m >>= 1
        return out

    def __eq__(self, other):
        return (isinstance(other, GroupRingElement)
                and self.n == other.n and self.terms == other.terms)

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def sorted_terms(self):
        return sorted(self.terms.items())

    def monomial_or_none(self):
        """Return (exps, coeff) if this is a single term, else None."""
        if len(self.terms) == 1:
            (exps, coeff), = self.terms.items()
            return exps, coeff
        return None

    def render(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, coeff in self.sorted_terms():
            mono = "e[%s]" % ",".join(str(a) for a in exps)
            if all(a == 0 for a in exps):
                body = str(abs(coeff))
            elif abs(coeff) == 1:
                body = mono
            else:
                body = "%d*%s" % (abs(coeff), mono)
            parts.append(("- " if coeff < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self):
        return "GroupRingElement(%r)" % self.render()

    def to_json(self):
        return [[list(k), v] for k, v in self.sorted_terms()]


class QExtElement:
    """Sparse element of Z[q^{+-1}][P]; keys are (q exponent, exps)."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def one(cls, n):
        return cls(n, {(0, (0,) * n): 1})

    @classmethod
    def monomial(cls, n, exps, coeff=1, qexp=0):
        return cls(n, {(qexp, tuple(exps)): coeff})

    @classmethod
    def from_group(cls, g, qexp=0):
        return cls(g.n, {(qexp, k): v for k, v in g.terms.items()})

    def is_zero(self):
        return not self.terms

    def _coerce(self, other):
        if isinstance(other, int):
            return QExtElement.one(self.n) * other
        if isinstance(other, GroupRingElement):
            return QExtElement.from_group(other)
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if self.n != other.n:
            raise ConfigError("rank mismatch")
        return QExtElement(self.n, _merged(self.terms, other.terms))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if self.n != other.n:
            raise ConfigError("rank mismatch")
        return QExtElement(self.n, _merged(self.terms, other.terms, -1))

    def __neg__(self):
        return QExtElement(self.n, {k: -v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return QExtElement(
                self.n, {k: v * other for k, v in self.terms.items()})
        other = self._coerce(other)
        if self.n != other.n:
            raise ConfigError("rank mismatch")
        out = {}
        for (qa, ka), va in self.terms.items():
            for (qb, kb), vb in other.terms.items():
                key = (qa + qb, tuple(x + y for x, y in zip(ka, kb)))
                nc = out.get(key, 0) + va * vb
                if nc:
                    out[key] = nc
                else:
                    del out[key]
        return QExtElement(self.n, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, GroupRingElement)):
            other = self._coerce(other)
        return (isinstance(other, QExtElement)
                and self.n == other.n and self.terms == other.terms)

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def specialize_q_one(self):
        """Ring map q := 1 onto GroupRingElement."""
        out = {}
        for (_, exps), v in self.terms.items():
            nc = out.get(exps, 0) + v
            if nc:
                out[exps] = nc
            else:
                del out[exps]
        return GroupRingElement(self.n, out)

    def group_part_or_raise(self):
        """Interpret a q-degree-zero element as a GroupRingElement."""
        for (qe, _) in self.terms:
            if qe != 0:
                raise ConfigError("element has a nontrivial q part")
        return GroupRingElement(
            self.n, {exps: v for (_, exps), v in self.terms.items()})

    def sorted_terms(self):
        return sorted(self.terms.items())

    def render(self):
        if not self.terms:
            return "0"
        parts = []
        for (qe, exps), coeff in self.sorted_terms():
            factors = []
            if qe == 1:
                factors.append("q")
            elif qe:
                factors.append("q^%d" % qe)
            if any(exps):
                factors.append("e[%s]" % ",".join(str(a) for a in exps))
            body = "*".join(factors) if factors else "1"
            if abs(coeff) != 1:
                body = "%d*%s" % (abs(coeff), body) if factors else str(abs(coeff))
            parts.append(("- " if coeff < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self):
        return "QExtElement(%r)" % self.render()

    def to_json(self):
        return [[k[0], list(k[1]), v] for k, v in self.sorted_terms()]


def _as_qext(n, value):
    if isinstance(value, QExtElement):
        return value
    if isinstance(value, GroupRingElement):
        return QExtElement.from_group(value)
    if isinstance(value, int):
        return QExtElement.one(n) * value
    raise ConfigError("cannot use %r as a coefficient" % (value,))


class NovikovSeries:
    """Power series in n variables over QExtElement coefficients.

    trunc is the total-degree truncation bound, or None for exact
    polynomial arithmetic (no degree is ever dropped).
    """

    __slots__ = ("n", "trunc", "terms")

    def __init__(self, n, trunc, terms=None):
        self.n = n
        self.trunc = trunc
        clean = {}
        for k, v in (terms or {}).items():
            if v.is_zero():
                continue
            if trunc is not None and sum(k) > trunc:
                continue
            clean[k] = v
        self.terms = clean

    @classmethod
    def zero(cls, n, trunc=None):
        return cls(n, trunc)

    @classmethod
    def one(cls, n, trunc=None):
        return cls(n, trunc, {(0,) * n: QExtElement.one(n)})

    @classmethod
    def constant(cls, n, value, trunc=None):
        return cls(n, trunc, {(0,) * n: _as_qext(n, value)})

    @classmethod
    def variable(cls, n, j, trunc=None):
        """The series variable x_j, 1-based."""
        if not 1 <= j <= n:
            raise ConfigError("variable index out of range")
        key = tuple(1 if i == j - 1 else 0 for i in range(n))
        return cls(n, trunc, {key: QExtElement.one(n)})

    @classmethod
    def monomial(cls, n, exps, coeff=1, trunc=None):
        if any(a < 0 for a in exps):
            raise ConfigError("series exponents must be non-negative")
        return cls(n, trunc, {tuple(exps): _as_qext(n, coeff)})

    def is_zero(self):
        return not self.terms

    def _check(self, other):
        if self.n != other.n:
            raise ConfigError("rank mismatch")
        if self.trunc != other.trunc:
            raise ConfigError(
                "truncation mismatch: %r vs %r" % (self.trunc, other.trunc))

    def _coerce(self, other):
        if isinstance(other, (int, GroupRingElement, QExtElement)):
            return NovikovSeries.constant(self.n, other, self.trunc)
        return other

    def __add__(self, other):
        other = self._coerce(other)
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k)
            s = v if s is None else s + v
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return NovikovSeries(self.n, self.trunc, out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return NovikovSeries(
            self.n, self.trunc, {k: -v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, GroupRingElement, QExtElement)):
            c = _as_qext(self.n, other)
            return NovikovSeries(
                self.n, self.trunc, {k: v * c for k, v in self.terms.items()})
        self._check(other)
        out = {}
        for ka, va in self.terms.items():
            for kb, vb in other.terms.items():
                key = tuple(x + y for x, y in zip(ka, kb))
                if self.trunc is not None and sum(key) > self.trunc:
                    continue
                prod = va * vb
                s = out.get(key)
                s = prod if s is None else s + prod
                if s.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = s
        return NovikovSeries(self.n, self.trunc, out)

    __rmul__ = __mul__

    def __pow__(self, m):
        if m < 0:
            raise ConfigError("negative power of a series")
        out = NovikovSeries.one(self.n, self.trunc)
        base = self
        while m:
            if m & 1:
                out = out * base
            base = base * base
            m >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, GroupRingElement, QExtElement)):
            other = self._coerce(other)
        return (isinstance(other, NovikovSeries) and self.n == other.n
                and self.trunc == other.trunc and self.terms == other.terms)

    def __hash__(self):
        return hash((self.n, self.trunc,
                     frozenset((k, hash(v)) for k, v in self.terms.items())))

    def with_trunc(self, trunc):
        """Re-truncate (or lift an exact polynomial) to the given degree."""
        return NovikovSeries(self.n, trunc, self.terms)

    def degree_zero_part(self):
        key = (0,) * self.n
        return self.terms.get(key, QExtElement.zero(self.n))

    def map_coefficients(self, fn):
        out = {}
        for k, v in self.terms.items():
            w = fn(v)
            if not w.is_zero():
                out[k] = w
        return NovikovSeries(self.n, self.trunc, out)

    def sorted_terms(self):
        return sorted(self.terms.items())

    def render(self, var="Q"):
        if not self.terms:
            return "0"
        parts = []
        for exps, coeff in self.sorted_terms():
            mono = "*".join(
                "%s%d" % (var, i + 1) if e == 1 else "%s%d^%d" % (var, i + 1, e)
                for i, e in enumerate(exps) if e)
            ctext = coeff.render()
            if not mono:
                parts.append("(%s)" % ctext)
            elif ctext == "1":
                parts.append(mono)
            else:
                parts.append("(%s)*%s" % (ctext, mono))
        return " + ".join(parts)

    def __repr__(self):
        return "NovikovSeries(%r)" % self.render()

    def to_json(self):
        return [[list(k), v.to_json()] for k, v in self.sorted_terms()]


class NovikovFraction:
    """num / prod_j (1 - x_j)^{den[j]} with an exact polynomial numerator."""

    __slots__ = ("n", "num", "den")

    def __init__(self, n, num, den=None):
        if num.trunc is not None:
            raise ConfigError("fraction numerators must be exact polynomials")
        self.n = n
        self.num = num
        self.den = tuple(den) if den is not None else (0,) * n
        if len(self.den) != n or any(d < 0 for d in self.den):
            raise ConfigError("bad denominator multiplicities")

    @classmethod
    def from_series(cls, s):
        return cls(s.n, s)

    @classmethod
    def one(cls, n):
        return cls(n, NovikovSeries.one(n))

    @classmethod
    def geometric(cls, n, j):
        """1 / (1 - x_j)."""
        den = tuple(1 if i == j - 1 else 0 for i in range(n))
        return cls(n, NovikovSeries.one(n), den)

    def is_zero(self):
        return self.num.is_zero()

    def _coerce(self, other):
        if isinstance(other, (int, GroupRingElement, QExtElement)):
            return NovikovFraction.from_series(
                NovikovSeries.constant(self.n, other))
        if isinstance(other, NovikovSeries):
            return NovikovFraction.from_series(other)
        return other

    def _den_poly(self, counts):
        poly = NovikovSeries.one(self.n)
        for j, c in enumerate(counts, start=1):
            if c:
                factor = NovikovSeries.one(self.n) - NovikovSeries.variable(self.n, j)
                poly = poly * factor ** c
        return poly

    def __add__(self, other):
        other = self._coerce(other)
        if self.n != other.n:
            raise ConfigError("rank mismatch")
        den = tuple(max(a, b) for a, b in zip(self.den, other.den))
        lift_a = self._den_poly(tuple(d - a for d, a in zip(den, self.den)))
        lift_b = self._den_poly(tuple(d - b for d, b in zip(den, other.den)))
        return NovikovFraction(
            self.n, self.num * lift_a + other.num * lift_b, den)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __neg__(self):
        return NovikovFraction(self.n, -self.num, self.den)

    def __mul__(self, other):
        if isinstance(other, (int, GroupRingElement, QExtElement)):
            return NovikovFraction(self.n, self.num * other, self.den)
        other = self._coerce(other)
        if self.n != other.n:
            raise ConfigError("rank mismatch")
        return NovikovFraction(
            self.n, self.num * other.num,
            tuple(a + b for a, b in zip(self.den, other.den)))

    __rmul__ = __mul__

    def __pow__(self, m):
        if m < 0:
            raise ConfigError("negative power of a fraction")
        out = NovikovFraction.one(self.n)
        base = self
        while m:
            if m & 1:
                out = out * base
            base = base * base
            m >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, GroupRingElement, QExtElement,
                              NovikovSeries)):
            other = self._coerce(other)
        if not isinstance(other, NovikovFraction) or self.n != other.n:
            return NotImplemented if not isinstance(other, NovikovFraction) else False
        lhs = self.num * self._den_poly(other.den)
        rhs = other.num * self._den_poly(self.den)
        return lhs == rhs

    def __hash__(self):
        raise TypeError("NovikovFraction is not hashable")

    def truncate(self, trunc):
        """Expand into a truncated NovikovSeries."""
        out = self.num.with_trunc(trunc)
        for j, c in enumerate(self.den, start=1):
            if c:
                out = out * geometric_inverse(self.n, j, trunc) ** c
        return out

    def render(self, var="Q"):
        den = "*".join(
            "(1-%s%d)" % (var, j + 1) if c == 1 else "(1-%s%d)^%d" % (var, j + 1, c)
            for j, c in enumerate(self.den) if c)
        num = self.num.render(var)
        return "(%s)/%s" % (num, den) if den else num

    def __repr__(self):
        return "NovikovFraction(%r)" % self.render()


class ZLaurentElement:
    """Laurent polynomial in z_1..z_n; coefficients are NovikovSeries or
    NovikovFraction values (uniform within one element)."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {k: v for k, v in (terms or {}).items() if not v.is_zero()}

    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def monomial(cls, n, exps, coeff):
        return cls(n, {tuple(exps): coeff})

    @classmethod
    def constant(cls, n, coeff):
        return cls(n, {(0,) * n: coeff})

    def is_zero(self):
        return not self.terms

    def _check(self, other):
        if self.n != other.n:
            raise ConfigError("rank mismatch")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k)
            s = v if s is None else s + v
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return ZLaurentElement(self.n, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return ZLaurentElement(self.n, {k: -v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, GroupRingElement, QExtElement,
                              NovikovSeries, NovikovFraction)):
            return ZLaurentElement(
                self.n, {k: v * other for k, v in self.terms.items()})
        self._check(other)
        out = {}
        for ka, va in self.terms.items():
            for kb, vb in other.terms.items():
                key = tuple(x + y for x, y in zip(ka, kb))
                prod = va * vb
                s = out.get(key)
                s = prod if s is None else s + prod
                if s.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = s
        return ZLaurentElement(self.n, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, ZLaurentElement) or self.n != other.n:
            return False
        if set(self.terms) != set(other.terms):
            # A fraction coefficient can still equal zero only if its
            # numerator is zero, which the constructor already dropped.
            return False
        return all(self.terms[k] == other.terms[k] for k in self.terms)

    def map_coefficients(self, fn):
        out = {}
        for k, v in self.terms.items():
            w = fn(v)
            if not w.is_zero():
                out[k] = w
        return ZLaurentElement(self.n, out)

    def sorted_terms(self):
        return sorted(self.terms.items())

    def render(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, coeff in self.sorted_terms():
            mono = "*".join(
                "z%d" % (i + 1) if e == 1 else "z%d^%d" % (i + 1, e)
                for i, e in enumerate(exps) if e)
            ctext = coeff.render()
            if not mono:
                parts.append("(%s)" % ctext)
            elif ctext == "1":
                parts.append(mono)
            else:
                parts.append("(%s)*%s" % (ctext, mono))
        return " + ".join(parts)

    def __repr__(self):
        return "ZLaurentElement(%r)" % self.render()


def ring_arith(a, b, op):
    """Dispatch helper used by the CLI; op is add, sub or mul."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ConfigError("unknown operation %r" % op)


def geometric_inverse(n, j, trunc):
    """The truncated inverse of (1 - x_j): sum of x_j^k for k <= trunc."""
    if not 1 <= j <= n:
        raise ConfigError("variable index out of range")
    one = QExtElement.one(n)
    terms = {}
    for k in range(trunc + 1):
        key = tuple(k if i == j - 1 else 0 for i in range(n))
        terms[key] = one
    return NovikovSeries(n, trunc, terms)


def exact_div(a, d):
    """Divide a by d exactly in Z[P].

    d must be a monomial or a binomial c*(e^mu - e^nu).  Raises
    DivisibilityError when the quotient does not exist.
    """
    if d.is_zero():
        raise DivisibilityError("division by zero")
    n = a.n
    if a.n != d.n:
        raise ConfigError("rank mismatch")
    if a.is_zero():
        return GroupRingElement.zero(n)

    items = d.sorted_terms()
    if len(items) == 1:
        (nu, c), = items
        out = {}
        for exps, v in a.terms.items():
            if v % c:
                raise DivisibilityError("coefficient %d not divisible by %d" % (v, c))
            out[tuple(x - y for x, y in zip(exps, nu))] = v // c
        return GroupRingElement(n, out)
    if len(items) != 2:
        raise ConfigError("divisor must be a monomial or a binomial")

    # Normalize d = c * e^nu * (e^gamma - 1) with gamma the higher term.
    (nu, cl), (mu, ch) = items
    if cl != -ch:
        raise ConfigError("binomial divisor must have the form c*(e^mu - e^nu)")
    c = ch
    gamma = tuple(x - y for x, y in zip(mu, nu))
    gdot = lambda exps: sum(g * e for g, e in zip(gamma, exps))
    step = gdot(gamma)  # |gamma|^2 > 0

    # Solve q * (e^gamma - 1) = a / (c e^nu) by lifting the minimal terms
    # along the gamma-grading.  Quotient terms satisfy
    # g(term) <= max_g(dividend) - |gamma|^2, which bounds the climb and
    # turns non-divisibility into a detectable stall.
    b = {}
    for exps, v in a.terms.items():
        if v % c:
            raise DivisibilityError("coefficient %d not divisible by %d" % (v, c))
        b[tuple(x - y for x, y in zip(exps, nu))] = v // c
    bound = max(gdot(e) for e in b) - step
    quotient = {}
    rem = b
    while rem:
        low = min(gdot(e) for e in rem)
        if low > bound:
            raise DivisibilityError("not divisible: remainder %s" %
                                    GroupRingElement(n, rem).render())
        layer = [(e, v) for e, v in rem.items() if gdot(e) == low]
        for exps, v in layer:
            # quotient term -v e^exps; add v e^{exps+gamma} - v e^exps to rem
            quotient[exps] = quotient.get(exps, 0) - v
            up = tuple(x + y for x, y in zip(exps, gamma))
            del rem[exps]
            nv = rem.get(up, 0) + v
            if nv:
                rem[up] = nv
            else:
                rem.pop(up, None)
    return GroupRingElement(n, quotient)


def specialize_Q_zero(f):
    """Set every series variable to zero in a ZLaurentElement."""
    n = f.n
    out = {}
    for k, v in f.terms.items():
        if isinstance(v, NovikovFraction):
            c = v.num.degree_zero_part()
            trunc = None
        else:
            c = v.degree_zero_part()
            trunc = v.trunc
        if c.is_zero():
            continue
        out[k] = NovikovSeries.constant(n, c, trunc)
    return ZLaurentElement(n, out)
