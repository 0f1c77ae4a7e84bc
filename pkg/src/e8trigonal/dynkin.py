"""Classification of simply laced root systems from raw root lists.

Given the roots as coordinate vectors together with their pairing, we pick
positive roots by a functional that is provably nonzero on every root,
extract the indecomposable simple roots, split into connected components,
and match each component's diagram and root count against the A/D/E
catalogue.
"""

from __future__ import annotations

from fractions import Fraction as Q
from math import lcm
from typing import Callable, Sequence

Vec = tuple

_COUNTS = {"A": lambda n: n * (n + 1), "D": lambda n: 2 * n * (n - 1)}
_E_COUNTS = {6: 72, 7: 126, 8: 240}


class DiagramError(ValueError):
    pass


def simple_system(roots: Sequence[Vec], pair: Callable[[Vec, Vec], Q]) -> list[Vec]:
    """Indecomposable positive roots for the deterministic positive half."""
    roots = [tuple(Q(c) for c in v) for v in roots]
    positives = _positive_half(roots)
    posset = set(positives)
    return [a for a in positives
            if not any(tuple(x - y for x, y in zip(a, b)) in posset for b in positives)]


def classify_root_system(roots: Sequence[Vec], pair: Callable[[Vec, Vec], Q]) -> str:
    """Dynkin type of a simply laced root system, e.g. 'E8' or 'E7+A1'.

    The input must be closed under negation with all roots of equal square
    length; anything that fails to match the simply laced catalogue raises
    DiagramError("unrecognized diagram").
    """
    roots = [tuple(Q(c) for c in v) for v in roots]
    if not roots:
        raise DiagramError("unrecognized diagram")
    rootset = set(roots)
    if any(tuple(-c for c in v) not in rootset for v in roots):
        raise DiagramError("unrecognized diagram")
    norms = {pair(v, v) for v in roots}
    if len(norms) != 1:
        raise DiagramError("unrecognized diagram")
    norm = norms.pop()
    if norm == 0:
        raise DiagramError("unrecognized diagram")
    sign = 1 if norm > 0 else -1

    def pos_pair(x, y):
        return sign * pair(x, y)

    positives = _positive_half(roots)
    posset = set(positives)
    simples = [a for a in positives
               if not any(tuple(x - y for x, y in zip(a, b)) in posset for b in positives)]
    # components of the simple-root graph
    n = len(simples)
    adj = {i: set() for i in range(n)}
    for i in range(n):
        for j in range(i + 1, n):
            if pos_pair(simples[i], simples[j]) != 0:
                adj[i].add(j)
                adj[j].add(i)
    comps = _connected_components(adj)
    labels = []
    for comp in comps:
        label = _component_label(comp, adj)
        expected = _expected_count(label)
        actual = sum(1 for v in positives
                     if any(pos_pair(v, simples[i]) != 0 for i in comp))
        if 2 * actual != expected:
            raise DiagramError("unrecognized diagram")
        labels.append(label)
    if sum(_expected_count(l) for l in labels) != len(roots):
        raise DiagramError("unrecognized diagram")
    labels.sort(key=lambda l: (-int(l[1:]), l[0]))
    return "+".join(labels)


def _positive_half(roots: list[Vec]) -> list[Vec]:
    dim = len(roots[0])
    denom = lcm(*(c.denominator for v in roots for c in v))
    ints = [[int(c * denom) for c in v] for v in roots]
    base = 1 + max(abs(x) for row in ints for x in row)
    weights = [base ** i for i in range(dim)]

    def func(iv):
        return sum(w * x for w, x in zip(weights, iv))

    out = []
    for v, iv in zip(roots, ints):
        f = func(iv)
        if f == 0:
            raise DiagramError("unrecognized diagram")
        if f > 0:
            out.append(v)
    return out


def _connected_components(adj: dict[int, set[int]]) -> list[list[int]]:
    seen: set[int] = set()
    comps = []
    for start in adj:
        if start in seen:
            continue
        stack, comp = [start], []
        seen.add(start)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


def _component_label(comp: list[int], adj: dict[int, set[int]]) -> str:
    n = len(comp)
    inside = {i: sorted(adj[i] & set(comp)) for i in comp}
    degs = sorted(len(inside[i]) for i in comp)
    edges = sum(degs) // 2
    if edges != n - 1:
        raise DiagramError("unrecognized diagram")
    if n == 1:
        return "A1"
    if max(degs) > 3 or degs.count(3) > 1:
        raise DiagramError("unrecognized diagram")
    if max(degs) <= 2:
        return f"A{n}"
    branch = next(i for i in comp if len(inside[i]) == 3)
    arms = []
    for nbr in inside[branch]:
        length, prev, cur = 1, branch, nbr
        while True:
            nxt = [x for x in inside[cur] if x != prev]
            if not nxt:
                break
            if len(nxt) > 1:
                raise DiagramError("unrecognized diagram")
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    a, b, c = sorted(arms)
    if a == 1 and b == 1:
        return f"D{n}"
    if (a, b) == (1, 2) and c in (2, 3, 4):
        return f"E{n}"
    raise DiagramError("unrecognized diagram")


def _expected_count(label: str) -> int:
    letter, rank = label[0], int(label[1:])
    if letter == "A":
        return _COUNTS["A"](rank)
    if letter == "D":
        if rank < 4:
            raise DiagramError("unrecognized diagram")
        return _COUNTS["D"](rank)
    if letter == "E" and rank in _E_COUNTS:
        return _E_COUNTS[rank]
    raise DiagramError("unrecognized diagram")
