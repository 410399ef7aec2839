"""Hyperoctahedral Weyl group of type C_n.

Elements of [1,1bar] = {1 < ... < n < nbar < ... < 1bar} are encoded as
signed integers: +k for k, -k for kbar.  The total order is realized by
order_key: +k -> k, -k -> 2n+1-k.

Weights live in the eps-basis (integer vectors of length n); coroots are
stored in the alpha^vee basis.
"""

from __future__ import annotations

import itertools

from .rings import ConfigError, GroupRingElement


def order_key(n, x):
    """Position of the signed element x in the [1,1bar] total order."""
    return x if x > 0 else 2 * n + 1 + x


def interval(n, a, b):
    """All signed elements x with a <= x <= b in the [1,1bar] order."""
    ka, kb = order_key(n, a), order_key(n, b)
    out = []
    for x in list(range(1, n + 1)) + [-j for j in range(n, 0, -1)]:
        if ka <= order_key(n, x) <= kb:
            out.append(x)
    return out


class SignedPerm:
    """Signed permutation in window notation [w(1), ..., w(n)]."""

    __slots__ = ("n", "window")

    def __init__(self, window):
        self.window = tuple(window)
        self.n = len(self.window)
        if sorted(abs(x) for x in self.window) != list(range(1, self.n + 1)):
            raise ConfigError("not a signed permutation: %r" % (window,))

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1))

    @classmethod
    def longest(cls, n):
        return cls(range(-1, -n - 1, -1))

    @classmethod
    def simple(cls, n, i):
        """The simple reflection s_i."""
        if not 1 <= i <= n:
            raise ConfigError("simple reflection index out of range")
        if i < n:
            window = list(range(1, n + 1))
            window[i - 1], window[i] = window[i], window[i - 1]
        else:
            window = list(range(1, n))
            window.append(-n)
        return cls(window)

    def act(self, k):
        """Apply to a signed element of [1,1bar]."""
        if k > 0:
            return self.window[k - 1]
        return -self.window[-k - 1]

    def act_weight(self, lam):
        """w . sum lam_k eps_k = sum lam_k eps_{w(k)}, with eps_{jbar} = -eps_j."""
        out = [0] * self.n
        for k, c in enumerate(lam, start=1):
            if c:
                img = self.window[k - 1]
                if img > 0:
                    out[img - 1] += c
                else:
                    out[-img - 1] -= c
        return tuple(out)

    def __mul__(self, other):
        """(w*v)(k) = w(v(k))."""
        return SignedPerm(self.act(x) for x in other.window)

    def inverse(self):
        out = [0] * self.n
        for k, img in enumerate(self.window, start=1):
            if img > 0:
                out[img - 1] = k
            else:
                out[-img - 1] = -k
        return SignedPerm(out)

    def __eq__(self, other):
        return isinstance(other, SignedPerm) and self.window == other.window

    def __hash__(self):
        return hash(self.window)

    def __lt__(self, other):
        ks = [order_key(self.n, x) for x in self.window]
        ko = [order_key(other.n, x) for x in other.window]
        return ks < ko

    def render(self):
        return "[%s]" % ",".join(str(x) for x in self.window)

    @classmethod
    def parse(cls, text):
        body = text.strip()
        if body.startswith("[") and body.endswith("]"):
            body = body[1:-1]
        return cls(int(p) for p in body.split(",") if p.strip())

    def __repr__(self):
        return "SignedPerm(%r)" % self.render()

    def length(self):
        """Number of positive roots sent to negative roots."""
        count = 0
        for root in positive_roots(self.n):
            v = self.act_weight(root.weight())
            for c in v:
                if c > 0:
                    break
                if c < 0:
                    count += 1
                    break
        return count


def enumerate_group(n):
    """All 2^n n! signed permutations, in a deterministic order."""
    if not 1 <= n <= 6:
        raise ConfigError("rank out of supported range 1..6")
    out = []
    for perm in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            out.append(SignedPerm(s * p for s, p in zip(signs, perm)))
    out.sort(key=lambda w: tuple(order_key(n, x) for x in w.window))
    return out


class RootC:
    """Positive root of type C_n.

    kind "minus": eps_i - eps_j (i < j); kind "plus": eps_i + eps_j (i < j);
    kind "long": 2 eps_i (stored with j = i).
    """

    __slots__ = ("n", "kind", "i", "j")

    def __init__(self, n, kind, i, j):
        if kind not in ("minus", "plus", "long"):
            raise ConfigError("unknown root kind %r" % kind)
        if kind == "long":
            if not 1 <= i <= n or j != i:
                raise ConfigError("bad long root indices")
        elif not 1 <= i < j <= n:
            raise ConfigError("bad root indices (%d,%d)" % (i, j))
        self.n, self.kind, self.i, self.j = n, kind, i, j

    def weight(self):
        v = [0] * self.n
        if self.kind == "long":
            v[self.i - 1] = 2
        else:
            v[self.i - 1] = 1
            v[self.j - 1] = -1 if self.kind == "minus" else 1
        return tuple(v)

    def coroot(self):
        """Coordinates in the alpha^vee basis."""
        n, i, j = self.n, self.i, self.j
        cv = [0] * n
        if self.kind == "minus":
            for t in range(i, j):
                cv[t - 1] = 1
        elif self.kind == "long":
            for t in range(i, n + 1):
                cv[t - 1] = 1
        else:
            for t in range(i, j):
                cv[t - 1] = 1
            for t in range(j, n + 1):
                cv[t - 1] += 2
        return tuple(cv)

    def reflection(self):
        n, i, j = self.n, self.i, self.j
        window = list(range(1, n + 1))
        if self.kind == "minus":
            window[i - 1], window[j - 1] = j, i
        elif self.kind == "plus":
            window[i - 1], window[j - 1] = -j, -i
        else:
            window[i - 1] = -i
        return SignedPerm(window)

    def pair_label(self):
        """The (i, j)-style label with j as a signed element."""
        if self.kind == "minus":
            return (self.i, self.j)
        if self.kind == "plus":
            return (self.i, -self.j)
        return (self.i, -self.i)

    def __eq__(self, other):
        return (isinstance(other, RootC) and (self.n, self.kind, self.i, self.j)
                == (other.n, other.kind, other.i, other.j))

    def __hash__(self):
        return hash((self.n, self.kind, self.i, self.j))

    def render(self):
        a, b = self.pair_label()
        return "(%d,%d)" % (a, b)

    def __repr__(self):
        return "RootC(%r)" % self.render()


def root_from_label(n, i, j):
    """Root with label (i, j) where j is signed; (i, -i) is the long root."""
    if j > 0:
        return RootC(n, "minus", i, j)
    if -j == i:
        return RootC(n, "long", i, i)
    lo, hi = min(i, -j), max(i, -j)
    return RootC(n, "plus", lo, hi)


def positive_roots(n):
    out = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            out.append(RootC(n, "minus", i, j))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            out.append(RootC(n, "plus", i, j))
    for i in range(1, n + 1):
        out.append(RootC(n, "long", i, i))
    return out


def simple_root_weight(n, i):
    """alpha_i in the eps-basis."""
    v = [0] * n
    if i < n:
        v[i - 1] = 1
        v[i] = -1
    else:
        v[n - 1] = 2
    return tuple(v)


def pairing(lam, cv):
    """<lam, cv> with lam in the eps-basis and cv in the alpha^vee basis."""
    n = len(lam)
    total = 0
    for i in range(1, n + 1):
        c = cv[i - 1]
        if not c:
            continue
        total += c * (lam[i - 1] - lam[i] if i < n else lam[n - 1])
    return total


def coroot_sum(n, cvs):
    out = [0] * n
    for cv in cvs:
        for t in range(n):
            out[t] += cv[t]
    return tuple(out)


def rho_vector(n):
    """rho = half the sum of the positive roots, in the eps-basis."""
    total = [0] * n
    for root in positive_roots(n):
        for t, c in enumerate(root.weight()):
            total[t] += c
    if any(c % 2 for c in total):
        raise ConfigError("positive-root sum is odd")
    return tuple(c // 2 for c in total)


def demazure_D(i, f):
    """Demazure operator D_i on a GroupRingElement, via the closed form:

    m = <nu, alpha_i^vee>:
      m <= 0 : e^nu (1 + e^{alpha_i} + ... + e^{-m alpha_i})
      m == 1 : 0
      m >= 2 : -e^nu (e^{-alpha_i} + ... + e^{-(m-1) alpha_i})
    """
    n = f.n
    if not 1 <= i <= n:
        raise ConfigError("Demazure index out of range")
    alpha = simple_root_weight(n, i)
    cv = tuple(1 if t == i - 1 else 0 for t in range(n))
    out = {}

    def put(key, c):
        nc = out.get(key, 0) + c
        if nc:
            out[key] = nc
        else:
            out.pop(key, None)

    for nu, c in f.terms.items():
        m = pairing(nu, cv)
        if m <= 0:
            for t in range(-m + 1):
                put(tuple(x + t * a for x, a in zip(nu, alpha)), c)
        elif m >= 2:
            for t in range(1, m):
                put(tuple(x - t * a for x, a in zip(nu, alpha)), -c)
    return GroupRingElement(n, out)


def demazure_D_fraction(i, f):
    """D_i via the defining fraction, using exact division. Used as an
    independent oracle for the closed form."""
    from .rings import exact_div

    n = f.n
    alpha = simple_root_weight(n, i)
    cv = tuple(1 if t == i - 1 else 0 for t in range(n))
    ealpha = GroupRingElement.monomial(n, alpha)
    num = GroupRingElement.zero(n)
    for nu, c in f.terms.items():
        m = pairing(nu, cv)
        snu = tuple(x - m * a for x, a in zip(nu, alpha))
        num = num + GroupRingElement.monomial(n, nu, c)
        num = num - ealpha * GroupRingElement.monomial(n, snu, c)
    return exact_div(num, GroupRingElement.one(n) - ealpha)
