"""Quantum Bruhat graph for type C_n.

Edges are built two independent ways: from the length conditions (the
definition) and from the five-case window-pattern criterion; the two are
cross-checked exhaustively in the test suite.
"""

from __future__ import annotations

import json

from .rings import ConfigError
from .weylc import (
    enumerate_group,
    order_key,
    pairing,
    positive_roots,
    rho_vector,
)


class QbgEdge:
    __slots__ = ("source", "root", "target", "kind")

    def __init__(self, source, root, target, kind):
        self.source = source
        self.root = root
        self.target = target
        self.kind = kind  # "B" or "Q"

    def __eq__(self, other):
        return (isinstance(other, QbgEdge)
                and (self.source, self.root, self.target, self.kind)
                == (other.source, other.root, other.target, other.kind))

    def __hash__(self):
        return hash((self.source, self.root, self.target, self.kind))

    def render(self):
        return "%s -%s:%s-> %s" % (
            self.source.render(), self.root.render(), self.kind,
            self.target.render())

    def __repr__(self):
        return "QbgEdge(%r)" % self.render()


def edge_by_length(w, root):
    """Classify w -> w s_root by the length conditions; None if no edge."""
    target = w * root.reflection()
    lw, lt = w.length(), target.length()
    if lt == lw + 1:
        return "B"
    rho = rho_vector(w.n)
    if lt == lw - 2 * pairing(rho, root.coroot()) + 1:
        return "Q"
    return None


def edge_by_pattern(w, root):
    """Classify w -> w s_root by the window-pattern criterion."""
    n = w.n
    val = lambda x: order_key(n, w.act(x))
    i = root.i
    if root.kind == "minus":
        j = root.j
    elif root.kind == "plus":
        j = -root.j
    else:
        j = -root.i
    vi, vj = val(i), val(j)
    lo, hi = order_key(n, i), order_key(n, j)
    inner = [val(x) for x in list(range(1, n + 1)) + [-t for t in range(n, 0, -1)]
             if lo < order_key(n, x) < hi]
    if root.kind == "minus" or root.kind == "long":
        if vi < vj:
            if not any(vi < v < vj for v in inner):
                return "B"
            return None
        if vi > vj and all(vi > v > vj for v in inner):
            return "Q"
        return None
    # (i, jbar) roots: only Bruhat edges, with the sign condition
    wi, wj = w.act(i), w.act(j)
    sign = lambda x: 1 if x > 0 else -1
    if vi < vj and sign(wi) == sign(wj) and not any(vi < v < vj for v in inner):
        return "B"
    return None


def build_graph(n, classifier=edge_by_length):
    """All edges of QBG(W), deterministically ordered."""
    if not 1 <= n <= 4:
        raise ConfigError("full graph build supported for 1 <= n <= 4")
    edges = []
    roots = positive_roots(n)
    for w in enumerate_group(n):
        for root in roots:
            kind = classifier(w, root)
            if kind is not None:
                edges.append(QbgEdge(w, root, w * root.reflection(), kind))
    return edges


def export(edges, fmt):
    if fmt == "dot":
        lines = ["digraph qbg {"]
        for edge in edges:
            lines.append('  "%s" -> "%s" [label="%s %s"];' % (
                edge.source.render(), edge.target.render(),
                edge.root.render(), edge.kind))
        lines.append("}")
        return "\n".join(lines) + "\n"
    if fmt == "json":
        vertices = sorted({e.source.render() for e in edges}
                          | {e.target.render() for e in edges})
        payload = {
            "vertices": vertices,
            "edges": [{"src": e.source.render(), "root": e.root.render(),
                       "dst": e.target.render(), "kind": e.kind}
                      for e in edges],
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    raise ConfigError("unknown export format %r" % fmt)
