"""Generic non-initial Mealy automata and their algebra.

A machine is a complete transducer over an m-symbol alphabet: every state
carries a total transition row and a total output row.  Each state induces a
length-preserving, prefix-respecting transformation of words; this module
implements that action together with products (composition of state
transformations), exact minimization with a canonical state numbering,
equivalence of states, invertibility and structural similarity of machines.

Machines are immutable; all operations return fresh machines.  Transformations
are composed right to left: the pair state (f, g) of a product machine acts as
"first g, then f".
"""

from __future__ import annotations

from itertools import permutations


class GuardExceeded(RuntimeError):
    """A configured search/memory guard was exceeded; result withheld.

    Growth enumerations attach whatever levels were completed before the
    guard tripped as the `partial` attribute.
    """

    partial = None


class MealyMachine:
    """Complete Mealy transducer: tables indexed as transition[state][symbol]."""

    __slots__ = ("m", "n", "transition", "output", "labels")

    def __init__(self, m, n, transition, output, labels=None):
        if m < 1:
            raise ValueError(f"alphabet size must be >= 1, got {m}")
        if n < 0:
            raise ValueError(f"state count must be >= 0, got {n}")
        transition = tuple(tuple(row) for row in transition)
        output = tuple(tuple(row) for row in output)
        if len(transition) != n or len(output) != n:
            raise ValueError("transition/output tables must have one row per state")
        for table, bound, what in ((transition, n, "state"), (output, m, "symbol")):
            for s, row in enumerate(table):
                if len(row) != m:
                    raise ValueError(f"row {s} is not total: expected {m} entries")
                for v in row:
                    if not 0 <= v < bound:
                        raise ValueError(f"{what} index {v} out of range in row {s}")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "transition", transition)
        object.__setattr__(self, "output", output)
        object.__setattr__(self, "labels", tuple(labels) if labels is not None else None)

    def __setattr__(self, name, value):
        raise AttributeError("MealyMachine is immutable")

    def __eq__(self, other):
        if not isinstance(other, MealyMachine):
            return NotImplemented
        return (self.m, self.n, self.transition, self.output) == (
            other.m, other.n, other.transition, other.output)

    def __hash__(self):
        return hash((self.m, self.n, self.transition, self.output))

    def __repr__(self):
        return f"MealyMachine(m={self.m}, n={self.n})"

    def label(self, state):
        if self.labels is not None:
            return self.labels[state]
        return f"s{state}"

    def _check_state(self, state):
        if not 0 <= state < self.n:
            raise ValueError(f"state {state} out of range for {self.n}-state machine")

    def step(self, state, symbol):
        """One transition: returns (next state, output symbol)."""
        self._check_state(state)
        if not 0 <= symbol < self.m:
            raise ValueError(f"symbol {symbol} out of range for alphabet of size {self.m}")
        return self.transition[state][symbol], self.output[state][symbol]

    def apply(self, state, word):
        """Image of a word under the transformation defined at `state`."""
        self._check_state(state)
        out = []
        trans, outp, m = self.transition, self.output, self.m
        for x in word:
            if not 0 <= x < m:
                raise ValueError(f"symbol {x} out of range for alphabet of size {m}")
            out.append(outp[state][x])
            state = trans[state][x]
        return tuple(out)

    def transit(self, state, word):
        """State reached after consuming a word: the left fold of transitions."""
        self._check_state(state)
        trans, m = self.transition, self.m
        for x in word:
            if not 0 <= x < m:
                raise ValueError(f"symbol {x} out of range for alphabet of size {m}")
            state = trans[state][x]
        return state


def identity_machine(m):
    """One-state machine acting as the identity on every word."""
    return MealyMachine(m, 1, ((0,) * m,), (tuple(range(m)),), labels=("e",))


def product(a, b):
    """Product machine: state (f, g) acts as the transformation of f after g.

    State (f, g) is flattened to index f * b.n + g.
    """
    if a.m != b.m:
        raise ValueError(f"alphabet mismatch: {a.m} != {b.m}")
    m = a.m
    trans = []
    out = []
    for f in range(a.n):
        for g in range(b.n):
            trow = []
            orow = []
            for x in range(m):
                y = b.output[g][x]
                trow.append(a.transition[f][y] * b.n + b.transition[g][x])
                orow.append(a.output[f][y])
            trans.append(tuple(trow))
            out.append(tuple(orow))
    return MealyMachine(m, a.n * b.n, tuple(trans), tuple(out))


def _partition_classes(a):
    """Moore refinement: state -> class id, equal iff states are equivalent."""
    n, m = a.n, a.m
    trans = a.transition
    # initial partition by complete output row
    seen = {}
    cls = [0] * n
    for s in range(n):
        row = a.output[s]
        c = seen.get(row)
        if c is None:
            c = len(seen)
            seen[row] = c
        cls[s] = c
    count = len(seen)
    while True:
        seen = {}
        new = [0] * n
        for s in range(n):
            sig = (cls[s],) + tuple(cls[trans[s][x]] for x in range(m))
            c = seen.get(sig)
            if c is None:
                c = len(seen)
                seen[sig] = c
            new[s] = c
        if len(seen) == count:
            return new, count
        cls, count = new, len(seen)


def minimize(a):
    """Reduced machine plus the map original state -> class index.

    The reduced machine is canonically numbered: classes are visited breadth
    first starting from the class of state 0 (symbols in increasing order,
    then the class of the next lowest unvisited state), so machines with equal
    behaviour and equal state order minimize to identical tables.
    """
    if a.n == 0:
        return a, ()
    cls, count = _partition_classes(a)
    n, m = a.n, a.m
    rep = [0] * count
    for s in range(n - 1, -1, -1):
        rep[cls[s]] = s
    index = {}
    order = []
    for s0 in range(n):
        c0 = cls[s0]
        if c0 in index:
            continue
        index[c0] = len(order)
        order.append(c0)
        qi = len(order) - 1
        while qi < len(order):
            c = order[qi]
            qi += 1
            r = rep[c]
            for x in range(m):
                tc = cls[a.transition[r][x]]
                if tc not in index:
                    index[tc] = len(order)
                    order.append(tc)
    trans = tuple(
        tuple(index[cls[a.transition[rep[c]][x]]] for x in range(m)) for c in order)
    out = tuple(tuple(a.output[rep[c]][x] for x in range(m)) for c in order)
    statemap = tuple(index[cls[s]] for s in range(n))
    return MealyMachine(m, count, trans, out), statemap


def states_equivalent(a, s, t):
    """True iff the transformations at s and t agree on every finite word."""
    a._check_state(s)
    a._check_state(t)
    cls, _ = _partition_classes(a)
    return cls[s] == cls[t]


def is_invertible(a):
    """True iff every state's output row is a permutation of the alphabet."""
    full = frozenset(range(a.m))
    return all(frozenset(row) == full for row in a.output)


def reachable_submachine(a, state):
    """Restriction to the states reachable from `state`, renumbered in BFS
    discovery order; the given state becomes state 0."""
    a._check_state(state)
    m = a.m
    pos = {state: 0}
    order = [state]
    qi = 0
    while qi < len(order):
        u = order[qi]
        qi += 1
        for x in range(m):
            v = a.transition[u][x]
            if v not in pos:
                pos[v] = len(order)
                order.append(v)
    trans = tuple(tuple(pos[a.transition[u][x]] for x in range(m)) for u in order)
    out = tuple(a.output[u] for u in order)
    return MealyMachine(m, len(order), trans, out)


def is_similar(a, b, xi, theta):
    """Check one similarity witness: a symbol permutation xi and a state
    permutation theta carrying the first machine's tables onto the second's."""
    if a.n != b.n or a.m != b.m:
        raise ValueError("similarity requires equal state counts and alphabets")
    if sorted(xi) != list(range(a.m)) or sorted(theta) != list(range(a.n)):
        raise ValueError("xi/theta must be permutations of the symbols/states")
    for f in range(a.n):
        for x in range(a.m):
            if theta[a.transition[f][x]] != b.transition[theta[f]][xi[x]]:
                return False
            if xi[a.output[f][x]] != b.output[theta[f]][xi[x]]:
                return False
    return True


SIMILARITY_MAX_M = 8
SIMILARITY_MAX_N = 6


def find_similarity(a, b):
    """First (xi, theta) witness in lexicographic order, or None.

    Exhaustive over m! * n! permutation pairs, so refuses large machines.
    """
    if a.n != b.n or a.m != b.m:
        raise ValueError("similarity requires equal state counts and alphabets")
    if a.m > SIMILARITY_MAX_M or a.n > SIMILARITY_MAX_N:
        raise GuardExceeded(
            f"similarity search limited to m <= {SIMILARITY_MAX_M}, n <= {SIMILARITY_MAX_N}")
    for xi in permutations(range(a.m)):
        for theta in permutations(range(a.n)):
            if is_similar(a, b, xi, theta):
                return xi, theta
    return None


def relabel(a, xi, theta):
    """The machine similar to `a` under the witness (xi, theta)."""
    if sorted(xi) != list(range(a.m)) or sorted(theta) != list(range(a.n)):
        raise ValueError("xi/theta must be permutations of the symbols/states")
    xi_inv = [0] * a.m
    for i, y in enumerate(xi):
        xi_inv[y] = i
    theta_inv = [0] * a.n
    for i, g in enumerate(theta):
        theta_inv[g] = i
    trans = tuple(
        tuple(theta[a.transition[theta_inv[g]][xi_inv[y]]] for y in range(a.m))
        for g in range(a.n))
    out = tuple(
        tuple(xi[a.output[theta_inv[g]][xi_inv[y]]] for y in range(a.m))
        for g in range(a.n))
    labels = None
    if a.labels is not None:
        labels = tuple(a.labels[theta_inv[g]] for g in range(a.n))
    return MealyMachine(a.m, a.n, trans, out, labels=labels)


POWER_STATE_GUARD = 200_000


def minimized_power(a, n, state_guard=POWER_STATE_GUARD):
    """Minimized n-fold product of a machine with itself.

    Computed iteratively (minimize after every single product) so the
    intermediate machine never exceeds 'previous reduced size * a.n' states;
    the zeroth power is the one-state identity, matching the monoid
    convention used throughout.
    """
    if n < 0:
        raise ValueError("power must be >= 0")
    power = identity_machine(a.m)
    for _ in range(n):
        if power.n * a.n > state_guard:
            raise GuardExceeded(
                f"power construction would exceed {state_guard} states")
        power, _ = minimize(product(power, a))
    return power


def parse_machine(text):
    """Parse the machine text format.

    First line "mealy m=<int> n=<int>", then one line per state:
    "<name>: <t_0>/<o_0> <t_1>/<o_1> ..." with exactly m entries.
    """
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ValueError("empty machine description")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "mealy":
        raise ValueError(f"bad header line: {lines[0]!r}")
    try:
        m = int(head[1].removeprefix("m="))
        n = int(head[2].removeprefix("n="))
    except ValueError:
        raise ValueError(f"bad header line: {lines[0]!r}") from None
    if len(lines) - 1 != n:
        raise ValueError(f"expected {n} state rows, got {len(lines) - 1}")
    labels = []
    trans = []
    out = []
    for ln in lines[1:]:
        name, sep, rest = ln.partition(":")
        if not sep:
            raise ValueError(f"state row missing ':': {ln!r}")
        entries = rest.split()
        if len(entries) != m:
            raise ValueError(f"state row has {len(entries)} entries, expected {m}: {ln!r}")
        trow = []
        orow = []
        for ent in entries:
            t, sep, o = ent.partition("/")
            if not sep:
                raise ValueError(f"bad entry {ent!r} in row {ln!r}")
            trow.append(int(t))
            orow.append(int(o))
        labels.append(name.strip())
        trans.append(tuple(trow))
        out.append(tuple(orow))
    return MealyMachine(m, n, tuple(trans), tuple(out), labels=tuple(labels))


def format_machine(a):
    """Inverse of parse_machine."""
    lines = [f"mealy m={a.m} n={a.n}"]
    for s in range(a.n):
        entries = " ".join(
            f"{a.transition[s][x]}/{a.output[s][x]}" for x in range(a.m))
        lines.append(f"{a.label(s)}: {entries}")
    return "\n".join(lines) + "\n"
