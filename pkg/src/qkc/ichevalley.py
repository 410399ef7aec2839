"""Inverse Chevalley evaluator.

Expands e^{-w(eps_m)} [O(w)] into twisted classes [O(x t_xi)(lambda)] with
coefficients in Z[q^{+-1}], by summing over admissible subsets and
decreasing chains; includes the staircase/mountain closed forms and the
cancellation bookkeeping that links the general evaluator to them.
"""

from __future__ import annotations

from .alcove import a_filtered, admissible_subsets, gamma_seq, s_chains, theta_seq
from .rings import ConfigError, QExtElement
from .weylc import SignedPerm, coroot_sum, pairing


class SemiClassSum:
    """Formal sum over keys (w, xi, lambda) with QExtElement coefficients.

    xi is a coroot-lattice vector in alpha^vee coordinates; the key stands
    for the class [O(w t_xi)(lambda)].
    """

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {k: v for k, v in (terms or {}).items() if not v.is_zero()}

    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def basis(cls, w, xi=None, lam=None, coeff=1, qexp=0):
        n = w.n
        xi = tuple(xi) if xi is not None else (0,) * n
        lam = tuple(lam) if lam is not None else (0,) * n
        if isinstance(coeff, QExtElement):
            c = coeff
        else:
            c = QExtElement.monomial(n, (0,) * n, coeff=coeff, qexp=qexp)
        return cls(n, {(w, xi, lam): c})

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        if self.n != other.n:
            raise ConfigError("rank mismatch")
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k)
            s = v if s is None else s + v
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return SemiClassSum(self.n, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return SemiClassSum(self.n, {k: -v for k, v in self.terms.items()})

    def scale(self, c):
        return SemiClassSum(self.n, {k: v * c for k, v in self.terms.items()})

    def tensor(self, mu):
        """Tensor with O(mu): lambda -> lambda + mu on every key."""
        out = {}
        for (w, xi, lam), v in self.terms.items():
            key = (w, xi, tuple(a + b for a, b in zip(lam, mu)))
            out[key] = v
        return SemiClassSum(self.n, out)

    def __eq__(self, other):
        return (isinstance(other, SemiClassSum)
                and self.n == other.n and self.terms == other.terms)

    def sorted_terms(self):
        return sorted(self.terms.items(),
                      key=lambda kv: (kv[0][0].window, kv[0][1], kv[0][2]))

    def render(self):
        if not self.terms:
            return "0"
        parts = []
        for (w, xi, lam), v in self.sorted_terms():
            bits = ["O(%s" % w.render()]
            if any(xi):
                bits.append(" t[%s]" % ",".join(str(x) for x in xi))
            bits.append(")")
            if any(lam):
                bits.append("(%s)" % ",".join(str(x) for x in lam))
            parts.append("(%s)*%s" % (v.render(), "".join(bits)))
        return " + ".join(parts)

    def __repr__(self):
        return "SemiClassSum(%r)" % self.render()

    def to_json(self):
        return [
            {"w": w.render(), "xi": list(xi), "lam": list(lam),
             "coeff": v.to_json()}
            for (w, xi, lam), v in self.sorted_terms()
        ]


def staircase(n, k):
    """s_1 s_2 ... s_k (k = 0 gives the identity)."""
    w = SignedPerm.identity(n)
    for i in range(1, k + 1):
        w = w * SignedPerm.simple(n, i)
    return w


def mountain(n, k):
    """s_1 ... s_{n-1} s_n s_{n-1} ... s_k."""
    w = SignedPerm.identity(n)
    for i in list(range(1, n + 1)) + list(range(n - 1, k - 1, -1)):
        w = w * SignedPerm.simple(n, i)
    return w


def _eps(n, j, sign=1):
    return tuple(sign if t == j - 1 else 0 for t in range(n))


def _alpha_range(n, a, b):
    return tuple(1 if a <= t <= b else 0 for t in range(1, n + 1))


def _chain_tuples(w, source, chain):
    """All tuples (A_1, ..., A_r) with A_1 in A_w^{source, j_1} and
    A_t in A_{ed(A_{t-1})}^{j_{t-1}, j_t}.  Yields (A-list, end, down, size)."""
    n = w.n

    def rec(base, prev, rest):
        if not rest:
            yield [], base, (0,) * n, 0
            return
        head, tail = rest[0], rest[1:]
        for a in a_filtered(base, prev, head):
            for suffix, end, down, size in rec(a.end, head, tail):
                yield ([a] + suffix, end,
                       coroot_sum(n, [a.down, down]), size + a.size())

    yield from rec(w, source, list(chain))


def inverse_chevalley(w, m):
    """The right-hand side of the expansion of e^{-w(eps_m)} [O(w)]."""
    n = w.n
    if not 1 <= m <= n:
        raise ConfigError("m out of range")
    total = SemiClassSum.zero(n)

    # first block: B-sum over A(w, Theta_m), twist -eps_m
    for b in admissible_subsets(w, theta_seq(n, m)):
        total = total + SemiClassSum.basis(
            b.end, b.down, _eps(n, m, -1), coeff=(-1) ** b.size())

    # chain blocks; barred targets use Theta with twist -eps_j and a
    # negative q-exponent, unbarred targets use Gamma with twist +eps_j
    for j in range(1, n + 1):
        for barred in (True, False):
            if barred and j <= m:
                continue
            target = -j if barred else j
            for chain in s_chains(n, -m, target):
                for _, end, down, size in _chain_tuples(w, -m, chain):
                    r = len(chain)
                    sign = (-1) ** (size - r)
                    qexp = pairing(_eps(n, j), down)
                    if barred:
                        qexp = -qexp
                        inner = admissible_subsets(end, theta_seq(n, j))
                        lam = _eps(n, j, -1)
                    else:
                        inner = admissible_subsets(end, gamma_seq(n, j))
                        lam = _eps(n, j, 1)
                    for b in inner:
                        total = total + SemiClassSum.basis(
                            b.end, coroot_sum(n, [down, b.down]), lam,
                            coeff=sign * (-1) ** b.size(), qexp=qexp)
    return total


def ic_lhs(w, m):
    """e^{-w(eps_m)} [O(w)] as a one-term SemiClassSum."""
    n = w.n
    weight = tuple(-x for x in w.act_weight(_eps(n, m)))
    return SemiClassSum.basis(
        w, coeff=QExtElement.monomial(n, weight))


def ic2_closed(n, k):
    """The staircase/mountain closed form of inverse_chevalley(mountain(k), k)."""
    if not 1 <= k <= n:
        raise ConfigError("k out of range")
    total = SemiClassSum.basis(mountain(n, k), lam=_eps(n, k, -1))
    if k > 1:
        total = total - SemiClassSum.basis(mountain(n, k - 1), lam=_eps(n, k, -1))
    for j in range(k + 1, n + 1):
        xi = _alpha_range(n, k, j - 1)
        total = total + SemiClassSum.basis(
            mountain(n, j), xi, _eps(n, j, -1), qexp=1)
        total = total - SemiClassSum.basis(
            mountain(n, j - 1), xi, _eps(n, j, -1), qexp=1)
    for j in range(1, k + 1):
        xi = _alpha_range(n, j, n)
        total = total + SemiClassSum.basis(
            staircase(n, j - 1), xi, _eps(n, j), qexp=1)
        total = total - SemiClassSum.basis(
            staircase(n, j), xi, _eps(n, j), qexp=1)
    return total


def ic1_data(n, k):
    """Both sides of the staircase expansion: returns (lhs, rhs)."""
    if not 1 <= k <= n - 1:
        raise ConfigError("k out of range")
    lhs = SemiClassSum.basis(
        staircase(n, k), coeff=QExtElement.monomial(n, _eps(n, 1)))
    rhs = SemiClassSum.basis(staircase(n, k), lam=_eps(n, k + 1))
    rhs = rhs - SemiClassSum.basis(staircase(n, k + 1), lam=_eps(n, k + 1))
    for j in range(1, k + 1):
        xi = _alpha_range(n, j, k)
        rhs = rhs + SemiClassSum.basis(staircase(n, j - 1), xi, _eps(n, j), qexp=1)
        rhs = rhs - SemiClassSum.basis(staircase(n, j), xi, _eps(n, j), qexp=1)
    return lhs, rhs


def ic2_data(n, k):
    """Both sides of the mountain expansion: returns (lhs, rhs)."""
    return ic_lhs(mountain(n, k), k), ic2_closed(n, k)


def cancellation_report(n, k):
    """Account for every chain contribution in the unbarred block of
    inverse_chevalley(mountain(k), k).

    Returns a dict with the matched cancelling pairs, the surviving chains,
    and a residual check (sum of paired contributions must be zero and the
    survivors must add up to the closed form's unbarred block).
    """
    w = mountain(n, k)
    contributions = []  # (j, chain, A-labels, term)
    for j in range(1, n + 1):
        for chain in s_chains(n, -k, j):
            for alist, end, down, size in _chain_tuples(w, -k, chain):
                r = len(chain)
                sign = (-1) ** (size - r)
                qexp = pairing(_eps(n, j), down)
                block = SemiClassSum.zero(n)
                for b in admissible_subsets(end, gamma_seq(n, j)):
                    block = block + SemiClassSum.basis(
                        b.end, coroot_sum(n, [down, b.down]), _eps(n, j),
                        coeff=sign * (-1) ** b.size(), qexp=qexp)
                labels = tuple(a.render() for a in alist)
                contributions.append((j, chain, labels, block))

    def expected_chain(j, l, family):
        """The chain tuple for the two proof families."""
        if family == 1:
            barred = tuple(-(t) for t in range(k + 1, l + 1))
            return barred + tuple(range(l, j - 1, -1))
        barred = tuple(-(t) for t in range(k + 1, l))
        return barred + tuple(range(l, j - 1, -1))

    pairs = []
    survivors = []
    used = [False] * len(contributions)
    index = {}
    for pos, (j, chain, labels, block) in enumerate(contributions):
        index.setdefault((j, chain), []).append(pos)

    for j in range(1, n + 1):
        for l in range(max(j, k + 1), n + 1):
            c1 = expected_chain(j, l, 1)
            c2 = expected_chain(j, l, 2)
            p1 = [p for p in index.get((j, c1), []) if not used[p]]
            p2 = [p for p in index.get((j, c2), []) if not used[p]]
            if not p1 and not p2:
                continue
            if len(p1) != 1 or len(p2) != 1:
                raise ConfigError(
                    "cancellation pairing failed at j=%d l=%d" % (j, l))
            a, b = p1[0], p2[0]
            if not (contributions[a][3] + contributions[b][3]).is_zero():
                raise ConfigError(
                    "paired terms do not cancel at j=%d l=%d" % (j, l))
            used[a] = used[b] = True
            pairs.append((j, l, contributions[a][1], contributions[b][1]))

    residual = SemiClassSum.zero(n)
    for pos, (j, chain, labels, block) in enumerate(contributions):
        if used[pos] or block.is_zero():
            continue
        survivors.append((j, chain, labels))
        residual = residual + block

    # survivors must be exactly the chains (k, k-1, ..., j) with j <= k
    expect_chains = {(j, tuple(range(k, j - 1, -1))) for j in range(1, k + 1)}
    got_chains = {(j, chain) for j, chain, _ in survivors}
    ok = got_chains == expect_chains

    closed_unbarred = SemiClassSum.zero(n)
    for j in range(1, k + 1):
        xi = _alpha_range(n, j, n)
        closed_unbarred = closed_unbarred + SemiClassSum.basis(
            staircase(n, j - 1), xi, _eps(n, j), qexp=1)
        closed_unbarred = closed_unbarred - SemiClassSum.basis(
            staircase(n, j), xi, _eps(n, j), qexp=1)
    ok = ok and residual == closed_unbarred

    return {
        "pairs": pairs,
        "survivors": survivors,
        "matches_closed_form": ok,
    }


def derive_recurrence(lhs, rhs, twist, target):
    """Tensor both sides by O(twist), set q := 1, and isolate the target
    basis key (w, xi, lam), whose coefficient must be a unit +-1.

    Returns (target_key, expression) with expression a SemiClassSum over
    the remaining keys whose coefficients are q-free.
    """
    n = lhs.n
    combined = (rhs - lhs).tensor(twist)
    q_one = {}
    for key, v in combined.terms.items():
        g = v.specialize_q_one()
        if not g.is_zero():
            q_one[key] = QExtElement.from_group(g)
    combined = SemiClassSum(n, q_one)
    coeff = combined.terms.get(target)
    if coeff is None:
        raise ConfigError("target key absent after specialization")
    unit = coeff.group_part_or_raise().monomial_or_none()
    if unit is None or unit[0] != (0,) * n or unit[1] not in (1, -1):
        raise ConfigError("target coefficient is not a unit")
    rest = SemiClassSum(
        n, {k: v for k, v in combined.terms.items() if k != target})
    sign = -unit[1]
    return target, rest.scale(sign)
