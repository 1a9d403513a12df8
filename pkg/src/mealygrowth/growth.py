"""Exact growth functions by canonical-key BFS over transformation classes.

Every transformation is carried as its own minimized reachable transducer with
the initial state renumbered to 0.  That canonical machine serializes to a
byte key; two transformations are equal as maps on all words iff their keys
are equal, which makes deduplication during breadth-first enumeration exact.

Three growth functions of a generated transformation semigroup are computed:

  ball(n)       elements whose minimal generator-product length is <= n
  word(n)       elements whose minimal generator-product length is exactly n
  spherical(n)  elements expressible as some product of exactly n generators

The identity is counted at length 0 when it is among the generators (the
monoid convention); generator systems that never produce the identity simply
start their counts at length 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .machine import GuardExceeded, MealyMachine, POWER_STATE_GUARD, \
    identity_machine, minimize, product, reachable_submachine

ELEMENT_GUARD = 2_000_000


class Element:
    """A transformation as its canonical minimized transducer (initial state 0)."""

    __slots__ = ("machine", "key")

    def __init__(self, machine, key):
        self.machine = machine
        self.key = key

    def __eq__(self, other):
        return isinstance(other, Element) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"Element({self.machine.n} states, m={self.machine.m})"

    @property
    def m(self):
        return self.machine.m

    def apply(self, word):
        return self.machine.apply(0, word)

    def restrict(self, word):
        """Element acting on the tail after `word` is consumed."""
        return canonical_element(self.machine, self.machine.transit(0, word))

    def is_identity(self):
        return self.key == identity_element(self.m).key


def _serialize(machine):
    parts = [str(machine.m), str(machine.n)]
    for s in range(machine.n):
        for x in range(machine.m):
            parts.append(str(machine.transition[s][x]))
            parts.append(str(machine.output[s][x]))
    return ",".join(parts).encode("ascii")


def canonical_element(machine, state):
    """Canonical form of the transformation defined by `machine` at `state`."""
    sub = reachable_submachine(machine, state)
    mini, statemap = minimize(sub)
    # state 0 of the reachable part lands in class 0 of the BFS numbering
    assert statemap[0] == 0
    return Element(mini, _serialize(mini))


def identity_element(m):
    ident = identity_machine(m)
    return Element(ident, _serialize(ident))


def _compose_reachable(a, sa, b, sb):
    """Reachable part of the product of (a at sa) after (b at sb).

    Same tables as machine.product but grown by pair BFS from (sa, sb), so
    the cost tracks the composed transformation's own size.
    """
    if a.m != b.m:
        raise ValueError(f"alphabet mismatch: {a.m} != {b.m}")
    m = a.m
    at, ao = a.transition, a.output
    bt, bo = b.transition, b.output
    pos = {(sa, sb): 0}
    order = [(sa, sb)]
    trans = []
    out = []
    qi = 0
    while qi < len(order):
        f, g = order[qi]
        qi += 1
        trow = []
        orow = []
        for x in range(m):
            y = bo[g][x]
            pair = (at[f][y], bt[g][x])
            idx = pos.get(pair)
            if idx is None:
                idx = len(order)
                pos[pair] = idx
                order.append(pair)
            trow.append(idx)
            orow.append(ao[f][y])
        trans.append(tuple(trow))
        out.append(tuple(orow))
    return MealyMachine(m, len(order), tuple(trans), tuple(out))


def compose(left, right):
    """Element composition, right to left: (compose(f, g))(u) = f(g(u))."""
    return canonical_element(_compose_reachable(left.machine, 0, right.machine, 0), 0)


def compose_state(machine, state, elem):
    """Left-multiply an element by the transformation at `state`."""
    return canonical_element(_compose_reachable(machine, state, elem.machine, 0), 0)


@dataclass(frozen=True)
class GrowthTable:
    """values[n] for n = 0..N, with the route that produced them."""

    m: int
    kind: str         # "ball" | "word" | "spherical"
    provenance: str   # "bfs" | "recurrence" | "series" | "closed-form"
    values: tuple

    def __post_init__(self):
        if self.kind not in ("ball", "word", "spherical"):
            raise ValueError(f"unknown growth kind {self.kind!r}")
        if self.provenance not in ("bfs", "recurrence", "series", "closed-form"):
            raise ValueError(f"unknown provenance {self.provenance!r}")
        object.__setattr__(self, "values", tuple(self.values))

    def to_csv(self):
        lines = ["n,value"]
        lines.extend(f"{n},{v}" for n, v in enumerate(self.values))
        return "\n".join(lines) + "\n"

    def to_json(self):
        import json
        return json.dumps({
            "m": self.m,
            "kind": self.kind,
            "provenance": self.provenance,
            "values": list(self.values),
        }, separators=(",", ":"))


def _generator_elements(machine, generator_states):
    if not generator_states:
        raise ValueError("need at least one generator state")
    return [canonical_element(machine, s) for s in generator_states]


def _bfs_levels(machine, generator_states, max_n, element_guard):
    """Word-growth counts by level via left-multiplication BFS from the identity."""
    gens = _generator_elements(machine, generator_states)
    ident = identity_element(machine.m)
    identity_generated = any(g.key == ident.key for g in gens)
    seen = {ident.key: 0}
    frontier = [ident]
    counts = [1 if identity_generated else 0]
    for level in range(1, max_n + 1):
        nxt = []
        for elem in frontier:
            for g in gens:
                new = compose(g, elem)
                if new.key not in seen:
                    seen[new.key] = level
                    nxt.append(new)
                    if len(seen) > element_guard:
                        exc = GuardExceeded(
                            f"growth enumeration exceeded {element_guard} elements")
                        exc.partial = tuple(counts)  # completed levels only
                        raise exc
        counts.append(len(nxt))
        frontier = nxt
    return counts


def word_growth(machine, generator_states, max_n, element_guard=ELEMENT_GUARD):
    """word(n) = number of elements of minimal generator length exactly n."""
    counts = _bfs_levels(machine, generator_states, max_n, element_guard)
    return GrowthTable(machine.m, "word", "bfs", counts)


def ball_growth(machine, generator_states, max_n, element_guard=ELEMENT_GUARD):
    """ball(n) = number of elements of minimal generator length at most n."""
    counts = _bfs_levels(machine, generator_states, max_n, element_guard)
    total = 0
    balls = []
    for c in counts:
        total += c
        balls.append(total)
    return GrowthTable(machine.m, "ball", "bfs", balls)


def spherical_growth(machine, generator_states, max_n, element_guard=ELEMENT_GUARD):
    """spherical(n) = number of distinct products of exactly n generators.

    Unlike word growth, a product of length n may equal an element already
    reachable by a shorter product; levels are deduplicated independently.
    """
    gens = _generator_elements(machine, generator_states)
    ident = identity_element(machine.m)
    level = {ident.key: ident}
    values = [1]
    for _ in range(max_n):
        nxt = {}
        for elem in level.values():
            for g in gens:
                new = compose(g, elem)
                if new.key not in nxt:
                    nxt[new.key] = new
                    if len(nxt) > element_guard:
                        exc = GuardExceeded(
                            f"growth enumeration exceeded {element_guard} elements")
                        exc.partial = tuple(values)
                        raise exc
        values.append(len(nxt))
        level = nxt
    return GrowthTable(machine.m, "spherical", "bfs", values)


def automaton_growth(machine, max_n, state_guard=None):
    """Automaton growth: state count of the minimized n-th power.

    Equals spherical growth over all states as generators; both routes are
    exposed so tests can cross-check them.
    """
    values = []
    power = identity_machine(machine.m)
    values.append(power.n)
    guard = POWER_STATE_GUARD if state_guard is None else state_guard
    for _ in range(max_n):
        if power.n * machine.n > guard:
            raise GuardExceeded(f"power construction would exceed {guard} states")
        power, _ = minimize(product(power, machine))
        values.append(power.n)
    return GrowthTable(machine.m, "spherical", "bfs", values)


def distinguishing_word(e1, e2, max_len=None):
    """Shortest word (lexicographically first among shortest) on which two
    elements disagree, or None if they agree on all words up to the bound.

    The default bound, the sum of the two transducers' state counts, is exact:
    equivalent-or-not is decided, not sampled.
    """
    if e1.m != e2.m:
        raise ValueError("alphabet mismatch")
    if max_len is None:
        max_len = e1.machine.n + e2.machine.n
    m = e1.m
    a, b = e1.machine, e2.machine
    seen = {(0, 0)}
    frontier = [((0, 0), ())]
    for _ in range(max_len + 1):
        nxt = []
        for (s, t), path in frontier:
            for x in range(m):
                if a.output[s][x] != b.output[t][x]:
                    return path + (x,)
                pair = (a.transition[s][x], b.transition[t][x])
                if pair not in seen:
                    seen.add(pair)
                    nxt.append((pair, path + (x,)))
        frontier = nxt
        if not frontier:
            return None
    return None
