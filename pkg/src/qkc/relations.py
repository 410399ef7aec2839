"""Scalar relation engine.

Relations are vectors of Z[P] coefficients against formal unknowns
X_0..X_n.  The base relation is refined by a Demazure derivation chain
(multiply by a monomial, apply D_k, divide exactly), rewritten through
complete symmetric polynomials into a triangular recurrence system, and
solved; the unique solution is the vector of hyperbolic elementary
symmetric polynomials E_0..E_n.
"""

from __future__ import annotations

from .rings import ConfigError, DivisibilityError, GroupRingElement, exact_div
from .weylc import demazure_D


class SolverError(ArithmeticError):
    """The triangular solve hit a non-unit leading coefficient."""


def _eps(n, j, c=1):
    return tuple(c if t == j - 1 else 0 for t in range(n))


def _mono(n, exps, coeff=1):
    return GroupRingElement.monomial(n, exps, coeff)


class RelationVector:
    """Coefficients c_0..c_n of a relation sum(c_l * X_l) = 0."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n, coeffs):
        coeffs = tuple(coeffs)
        if len(coeffs) != n + 1:
            raise ConfigError("relation needs n + 1 coefficients")
        self.n = n
        self.coeffs = coeffs

    def __eq__(self, other):
        return (isinstance(other, RelationVector)
                and self.n == other.n and self.coeffs == other.coeffs)

    def scale(self, c):
        return RelationVector(self.n, tuple(v * c for v in self.coeffs))

    def demazure(self, i):
        return RelationVector(
            self.n, tuple(demazure_D(i, v) for v in self.coeffs))

    def divide(self, d):
        return RelationVector(
            self.n, tuple(exact_div(v, d) for v in self.coeffs))

    def evaluate(self, values):
        """sum(c_l * values[l]); zero certifies that values solve it."""
        out = GroupRingElement.zero(self.n)
        for c, v in zip(self.coeffs, values):
            out = out + c * v
        return out

    def render(self):
        parts = []
        for l, c in enumerate(self.coeffs):
            if not c.is_zero():
                parts.append("(%s)*X%d" % (c.render(), l))
        return (" + ".join(parts) if parts else "0") + " = 0"

    def __repr__(self):
        return "RelationVector(%r)" % self.render()


def base_relation(n):
    """sum over l < n of (-1)^l (e^{-(n-l)eps_1} + e^{(n-l)eps_1}) X_l,
    closed by (-1)^n X_n."""
    if n < 1:
        raise ConfigError("rank must be positive")
    coeffs = []
    for l in range(n):
        c = _mono(n, _eps(n, 1, -(n - l))) + _mono(n, _eps(n, 1, n - l))
        coeffs.append(c if l % 2 == 0 else -c)
    coeffs.append(GroupRingElement.one(n) * (-1) ** n)
    return RelationVector(n, coeffs)


def audit_base_rewrite(n):
    """Rebuild the base relation from the full alternating coefficient
    sequence (-1)^l e^{l eps_1}, l = 0..2n: scale by e^{-n eps_1}, then
    fold X_{2n-l} onto X_l (the index symmetry of the FF elements)."""
    scaled = [
        _mono(n, _eps(n, 1, l - n), (-1) ** l) for l in range(2 * n + 1)]
    folded = []
    for l in range(n):
        folded.append(scaled[l] + scaled[2 * n - l])
    folded.append(scaled[n])
    return RelationVector(n, folded) == base_relation(n)


def _geom(n, step, count):
    """1 + e^step + ... + e^{(count-1) step}."""
    out = GroupRingElement.zero(n)
    for t in range(count):
        out = out + _mono(n, tuple(t * s for s in step))
    return out


def derive_secondary(rel):
    """Multiply by e^{eps_1}, apply D_1, divide by e^{eps_1}(1 - e^{eps_1+eps_2})."""
    n = rel.n
    if n < 2:
        raise ConfigError("the derivation chain needs rank at least 2")
    step = rel.scale(_mono(n, _eps(n, 1))).demazure(1)
    d = _mono(n, _eps(n, 1)) - _mono(
        n, tuple(a + b for a, b in zip(_eps(n, 1, 2), _eps(n, 2))))
    return step.divide(d)


def secondary_literal(n):
    """The printed second relation: coefficients
    (-1)^l e^{-(n-l)eps_1} (sum_r e^{r(eps_1-eps_2)}) (sum_s e^{s(eps_1+eps_2)})."""
    if n < 2:
        raise ConfigError("rank must be at least 2")
    coeffs = []
    up = tuple(a + b for a, b in zip(_eps(n, 1), _eps(n, 2)))
    down = tuple(a - b for a, b in zip(_eps(n, 1), _eps(n, 2)))
    for l in range(n):
        c = (_mono(n, _eps(n, 1, -(n - l)))
             * _geom(n, down, n - l) * _geom(n, up, n - l))
        coeffs.append(c if l % 2 == 0 else -c)
    coeffs.append(GroupRingElement.zero(n))
    return RelationVector(n, coeffs)


def system_arbitrary(n, k):
    """The k-th derived relation (2 <= k <= n-1) as a literal nested sum."""
    if not 2 <= k <= n - 1:
        raise ConfigError("need 2 <= k <= n - 1")
    up = tuple(a + b for a, b in zip(_eps(n, k), _eps(n, k + 1)))
    down = tuple(a - b for a, b in zip(_eps(n, k), _eps(n, k + 1)))
    coeffs = [GroupRingElement.zero(n)] * (n + 1)
    for l in range(0, n - k + 1):
        total = GroupRingElement.zero(n)

        def walk(t, r_prev, exps):
            nonlocal total
            if t == k:
                e = list(exps)
                e[k - 1] = -r_prev
                total = total + (_mono(n, tuple(e))
                                 * _geom(n, down, r_prev)
                                 * _geom(n, up, r_prev))
                return
            lo = k - t
            hi = (n - l - 1) if t == 1 else (r_prev - 1)
            for r in range(lo, hi + 1):
                for s in range(0, hi - r + 1):
                    e = list(exps)
                    if t == 1:
                        e[0] = l + r + 2 * s
                    else:
                        e[t - 1] = -r_prev + r + 2 * s
                    walk(t + 1, r, e)

        walk(1, None, [0] * n)
        coeffs[l] = total if l % 2 == 0 else -total
    return RelationVector(n, coeffs)


def induction_step(prev, k):
    """Multiply by e^{eps_k}, apply D_k, divide by e^{eps_k}(1 - e^{eps_k+eps_{k+1}})."""
    n = prev.n
    if not 2 <= k <= n - 1:
        raise ConfigError("need 2 <= k <= n - 1")
    step = prev.scale(_mono(n, _eps(n, k))).demazure(k)
    d = _mono(n, _eps(n, k)) - _mono(
        n, tuple(2 * a + b for a, b in zip(_eps(n, k), _eps(n, k + 1))))
    return step.divide(d)


def chain_relation(n, k):
    """The k-th relation obtained by running the derivation chain from the
    base relation (k = 0) through the secondary relation (k = 1) and on."""
    if k == 0:
        return base_relation(n)
    rel = derive_secondary(base_relation(n))
    if k == 1:
        return rel
    rel = rel.scale(_mono(n, _eps(n, 1, n)))
    for j in range(2, k + 1):
        rel = induction_step(rel, j)
    return rel


def h_poly(variables, m):
    """Complete symmetric polynomial h_m; h_0 = 1 and h_{m<0} = 0."""
    n = variables[0].n
    if m < 0:
        return GroupRingElement.zero(n)
    row = [GroupRingElement.one(n)] + [GroupRingElement.zero(n)] * m
    for x in variables:
        for deg in range(1, m + 1):
            row[deg] = row[deg] + x * row[deg - 1]
    return row[m]


def e_poly(variables, m, n=None):
    """Elementary symmetric polynomial e_m (zero outside 0 <= m <= #vars)."""
    if n is None:
        n = variables[0].n
    if m < 0 or m > len(variables):
        return GroupRingElement.zero(n)
    row = [GroupRingElement.one(n)]
    for x in variables:
        nxt = [row[0]]
        for deg in range(1, len(row) + 1):
            prev = row[deg] if deg < len(row) else GroupRingElement.zero(n)
            nxt.append(prev + x * row[deg - 1])
        row = nxt
    return row[m]


def _hyperbolic_vars(n, k):
    """e^{eps_1}, ..., e^{eps_k}, e^{-eps_k}, ..., e^{-eps_1} in rank n."""
    if not 1 <= k <= n:
        raise ConfigError("k out of range")
    plus = [_mono(n, _eps(n, j)) for j in range(1, k + 1)]
    minus = [_mono(n, _eps(n, j, -1)) for j in range(k, 0, -1)]
    return plus + minus


def complete_h(n, l, k):
    """H_l^k: h_l in the 2k variables e^{+-eps_1..k}."""
    return h_poly(_hyperbolic_vars(n, k), l)


def elementary_E(n, l):
    """E_l: e_l in the 2n variables e^{+-eps_1..n}."""
    return e_poly(_hyperbolic_vars(n, n), l)


def csym_nested_lhs(variables, m):
    """The literal nested-sum side of the complete-symmetric identity in
    nv >= 3 variables; equals h_m - h_{m-2} over the hyperbolic list."""
    nv = len(variables)
    if nv < 3:
        raise ConfigError("need at least 3 variables")
    n = variables[0].n

    def invert(x):
        exps, c = x.monomial_or_none()
        return GroupRingElement.monomial(n, tuple(-a for a in exps), c)

    def power(x, e):
        if e >= 0:
            return x ** e
        return invert(x) ** (-e)

    total = GroupRingElement.zero(n)

    def walk(t, r_prev, acc):
        nonlocal total
        if t == nv - 1:
            acc = acc * power(variables[nv - 2], -r_prev + 1)
            inner_down = GroupRingElement.zero(n)
            inner_up = GroupRingElement.zero(n)
            for c in range(r_prev):
                inner_down = inner_down + power(variables[nv - 2], c) \
                    * power(variables[nv - 1], -c)
                inner_up = inner_up + power(variables[nv - 2], c) \
                    * power(variables[nv - 1], c)
            total = total + acc * inner_down * inner_up
            return
        lo = nv - 1 - t
        hi = (m + nv - 2) if t == 1 else (r_prev - 1)
        for r in range(lo, hi + 1):
            for s in range(0, hi - r + 1):
                if t == 1:
                    step = power(variables[0], -(m + nv - 2) + r + 2 * s)
                else:
                    step = power(variables[t - 1], -r_prev + r + 2 * s + 1)
                walk(t + 1, r, acc * step)

    walk(1, None, GroupRingElement.one(n))
    return total


def check_csym_props(n_max=4, m_max=6):
    """The four complete-symmetric identities plus the index symmetry of
    the hyperbolic elementary polynomials."""
    results = []
    for nv in range(1, n_max + 1):
        hv = _hyperbolic_vars(nv, nv)
        ok = h_poly(hv, 0) == GroupRingElement.one(nv)
        results.append(("csym-1-n%d" % nv, ok, ""))
    for m in range(1, m_max + 1):
        n = 1
        x1 = _mono(n, (1,))
        lhs = _mono(n, (m,)) + _mono(n, (-m,))
        pair = [x1, _mono(n, (-1,))]
        ok = lhs == h_poly(pair, m) - h_poly(pair, m - 2)
        results.append(("csym-2-m%d" % m, ok, ""))
    for m in range(1, m_max + 1):
        n = 2
        hv = _hyperbolic_vars(n, 2)
        lhs = (_mono(n, (-m, 0))
               * _geom(n, (1, -1), m + 1) * _geom(n, (1, 1), m + 1))
        ok = lhs == h_poly(hv, m) - h_poly(hv, m - 2)
        results.append(("csym-3-m%d" % m, ok, ""))
    for nv in range(3, n_max + 1):
        variables = [_mono(nv, _eps(nv, j)) for j in range(1, nv + 1)]
        hv = _hyperbolic_vars(nv, nv)
        for m in range(1, m_max + 1):
            lhs = csym_nested_lhs(variables, m)
            ok = lhs == h_poly(hv, m) - h_poly(hv, m - 2)
            results.append(("csym-4-n%d-m%d" % (nv, m), ok, ""))
    for n in range(1, n_max + 1):
        for l in range(1, n + 1):
            ok = elementary_E(n, n + l) == elementary_E(n, n - l)
            results.append(("elementary-symmetry-n%d-l%d" % (n, l), ok, ""))
    return results


def system_row(n, k):
    """Row k of the triangular system:
    sum over l <= n-k of (-1)^l (H^{k+1}_{n-l-k} - H^{k+1}_{n-l-k-2}) X_l."""
    if not 0 <= k <= n - 1:
        raise ConfigError("k out of range")
    coeffs = []
    for l in range(n + 1):
        if l > n - k:
            coeffs.append(GroupRingElement.zero(n))
            continue
        c = (complete_h(n, n - l - k, k + 1)
             - complete_h(n, n - l - k - 2, k + 1))
        coeffs.append(c if l % 2 == 0 else -c)
    return RelationVector(n, coeffs)


def assemble_system(n, audit=False):
    """All n rows of the system.  With audit=True each row is re-derived
    through the Demazure chain and the two must agree:
    row 0 = base, row 1 = secondary * e^{eps_1}, and for k >= 2
    row k = chain output * e^{-(n-1)eps_1 + eps_2 + ... + eps_k}."""
    rows = [system_row(n, k) for k in range(n)]
    if audit:
        if rows[0] != base_relation(n):
            raise ConfigError("row 0 disagrees with the base relation")
        if n >= 2:
            derived = derive_secondary(base_relation(n))
            if derived != secondary_literal(n):
                raise ConfigError("derived secondary relation disagrees")
            if rows[1] != derived.scale(_mono(n, _eps(n, 1))):
                raise ConfigError("row 1 disagrees with the secondary relation")
        for k in range(2, n):
            lit = system_arbitrary(n, k)
            if chain_relation(n, k) != lit:
                raise ConfigError("chain relation %d disagrees with the "
                                  "literal nested sum" % k)
            pref = [-(n - 1)] + [1] * (k - 1) + [0] * (n - k)
            if rows[k] != lit.scale(_mono(n, tuple(pref))):
                raise ConfigError("row %d disagrees with the rewritten "
                                  "chain relation" % k)
    return rows


def solve_system(n, audit=False):
    """Solve the triangular system with X_0 = 1, from k = n-1 down to 0."""
    rows = assemble_system(n, audit)
    values = [GroupRingElement.one(n)] + [None] * n
    for k in range(n - 1, -1, -1):
        row = rows[k]
        lead = row.coeffs[n - k].monomial_or_none()
        if lead is None or lead[0] != (0,) * n or lead[1] not in (1, -1):
            raise SolverError("leading coefficient of row %d is not a unit" % k)
        acc = GroupRingElement.zero(n)
        for l in range(n - k):
            acc = acc + row.coeffs[l] * values[l]
        values[n - k] = acc * (-lead[1])
    return tuple(values)


def _t_mul(a, b, bound):
    """Multiply two t-polynomials (lists of Z[P] coefficients), truncated."""
    n = (a[0] if a else b[0]).n
    out = [GroupRingElement.zero(n)
           for _ in range(min(len(a) + len(b) - 1, bound + 1))]
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            if i + j <= bound:
                out[i + j] = out[i + j] + ca * cb
    return out


def _t_trim(a):
    while a and a[-1].is_zero():
        a = a[:-1]
    return list(a)


def check_generating_identities(n, d_t=None):
    """The generating-function identities behind the triangular solve,
    as t-polynomials truncated at degree d_t (default 2n + 2)."""
    if d_t is None:
        d_t = 2 * n + 2
    if d_t < 2 * n:
        raise ConfigError("t-truncation must reach degree 2n")
    results = []
    one = GroupRingElement.one(n)
    zero = GroupRingElement.zero(n)
    for k in range(n):
        hv = _hyperbolic_vars(n, k + 1)
        denom = [one]
        for x in hv:
            denom = _t_mul(denom, [one, -x], d_t)
        hs = [complete_h(n, l, k + 1) for l in range(d_t + 1)]
        ok = _t_trim(_t_mul(hs, denom, d_t)) == [one]
        results.append(("gf-sum-complete-k%d" % k, ok, ""))
        hd = [hs[l] - (hs[l - 2] if l >= 2 else zero)
              for l in range(d_t + 1)]
        ok = _t_trim(_t_mul(hd, denom, d_t)) == _t_trim([one, zero, -one])
        results.append(("gf-1-k%d" % k, ok, ""))
        # alternating product against the elementary generating polynomial
        alt = [c if l % 2 == 0 else -c for l, c in enumerate(hd)]
        es = [elementary_E(n, m) for m in range(2 * n + 1)]
        lhs = _t_trim(_t_mul(alt, es, d_t))
        tail = [_mono(n, _eps(n, j)) for j in range(k + 2, n + 1)]
        tail += [_mono(n, _eps(n, j, -1)) for j in range(n, k + 1, -1)]
        rhs = [one]
        for x in tail:
            rhs = _t_mul(rhs, [one, x], d_t)
        rhs = _t_trim(_t_mul(rhs, [one, zero, -one], d_t))
        ok = lhs == rhs
        ok = ok and len(rhs) - 1 <= 2 * (n - k - 1) + 2
        expect = [e_poly(tail, m, n) - e_poly(tail, m - 2, n)
                  for m in range(2 * (n - k - 1) + 3)]
        ok = ok and rhs == _t_trim(expect)
        ok = ok and (len(lhs) <= n - k or lhs[n - k].is_zero())
        results.append(("gf-3-k%d" % k, ok, ""))
    prod = [one]
    for x in _hyperbolic_vars(n, n):
        prod = _t_mul(prod, [one, x], d_t)
    ok = _t_trim(prod) == _t_trim([elementary_E(n, m)
                                   for m in range(2 * n + 1)])
    results.append(("gf-2", ok, ""))
    return results
