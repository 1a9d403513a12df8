"""The three-state mask/successor transducer family and its monoid.

For each alphabet size m >= 2 the machine has states e, f0, f1 where e is the
identity, f1 acts on m-adic digit streams as "add one" and f0 as the mask
q -> q &_m (q + 1), zeroing the leading run of high digits together with the
digit after it (the madic module carries the integer semantics).  The
transformations f0 and f1 generate a monoid whose elements have a unique
shortest word

    f1^{p_k} f0 f1^{m^{k-1} p_{k-1} - 1} f0 ... f0 f1^{m p_1 - 1} f0 f1^{p_0}

with k >= 0, p_0 >= 0, p_k >= 0 and p_i >= 1 in between.  This module holds
the word and normal-form machinery: run-length encoded generator words, the
right-to-left reducing scan, the defining relation families, closed-form
restriction of normal forms by one input symbol, and the self-similar blocks
of the left Cayley graph.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .growth import canonical_element, compose_state, identity_element
from .machine import GuardExceeded, MealyMachine, relabel

F0 = 0  # the mask generator
F1 = 1  # the successor generator
GEN_NAMES = ("f0", "f1")

STATE_IDENTITY = 0
STATE_MASK = 1
STATE_SUCCESSOR = 2
GEN_STATE = (STATE_MASK, STATE_SUCCESSOR)


def mask_successor_machine(m):
    """The three-state machine with states e, f0 (mask), f1 (successor).

    f0 outputs the low symbol everywhere and stays alive only on the high
    symbol; f1 outputs the cyclic successor of its input and stays alive only
    on the high symbol; both fall back to the identity state otherwise.
    """
    if m < 2:
        raise ValueError(f"alphabet size must be >= 2, got {m}")
    top = m - 1
    trans = (
        (STATE_IDENTITY,) * m,
        tuple(STATE_MASK if x == top else STATE_IDENTITY for x in range(m)),
        tuple(STATE_SUCCESSOR if x == top else STATE_IDENTITY for x in range(m)),
    )
    out = (
        tuple(range(m)),
        (0,) * m,
        tuple((x + 1) % m for x in range(m)),
    )
    return MealyMachine(m, 3, trans, out, labels=("e", "f0", "f1"))


def shifted_mask_successor_machine(m):
    """The similar machine obtained by the cyclic symbol relabelling.

    Under xi: x_i -> x_{i+1 mod m} (states fixed) the mask state becomes
    (f0, e, ..., e) alpha_1 and the successor keeps its cyclic output.
    """
    xi = tuple((i + 1) % m for i in range(m))
    return relabel(mask_successor_machine(m), xi, tuple(range(3)))


def valuation(p, m):
    """Largest j with m^j dividing p (p >= 1)."""
    if p < 1:
        raise ValueError(f"valuation needs p >= 1, got {p}")
    v = 0
    while p % m == 0:
        p //= m
        v += 1
    return v


def low_term(p, m):
    """p mod m^(valuation(p, m) + 1): the least significant nonzero part.

    For m = 2 this is the lowest set bit of p.  The quotient
    low_term(p, m) / m^valuation(p, m) is always in 1..m-1.
    """
    return p % m ** (valuation(p, m) + 1)


_TERM_RE = re.compile(r"(f0|f1)(?:\^(\d+))?\Z")


class GeneratorWord:
    """Run-length encoded word over the generators f0, f1.

    Runs are (generator, exponent) pairs in reading order; construction merges
    adjacent runs of the same generator and drops empty ones, so `runs` always
    alternates and every exponent is >= 1.  Exponents are unbounded.
    """

    __slots__ = ("m", "runs")

    def __init__(self, m, runs):
        if m < 2:
            raise ValueError(f"alphabet size must be >= 2, got {m}")
        norm = []
        for gen, exp in runs:
            if gen not in (F0, F1):
                raise ValueError(f"unknown generator {gen!r}")
            if exp < 0:
                raise ValueError(f"negative exponent {exp}")
            if exp == 0:
                continue
            if norm and norm[-1][0] == gen:
                norm[-1][1] += exp
            else:
                norm.append([gen, exp])
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "runs", tuple((g, e) for g, e in norm))

    def __setattr__(self, name, value):
        raise AttributeError("GeneratorWord is immutable")

    def __eq__(self, other):
        if not isinstance(other, GeneratorWord):
            return NotImplemented
        return self.m == other.m and self.runs == other.runs

    def __hash__(self):
        return hash((self.m, self.runs))

    def __repr__(self):
        return f"GeneratorWord(m={self.m}, {self.to_string()!r})"

    def __mul__(self, other):
        if not isinstance(other, GeneratorWord):
            return NotImplemented
        if self.m != other.m:
            raise ValueError("alphabet mismatch")
        return GeneratorWord(self.m, self.runs + other.runs)

    def letter_count(self):
        return sum(e for _, e in self.runs)

    def letters(self):
        """Iterate single generators in reading order; beware huge exponents."""
        for gen, exp in self.runs:
            for _ in range(exp):
                yield gen

    def to_string(self):
        parts = []
        for gen, exp in self.runs:
            parts.append(GEN_NAMES[gen] if exp == 1 else f"{GEN_NAMES[gen]}^{exp}")
        return " ".join(parts)


def parse_word(m, text):
    """Parse `term (ws term)*` where term is f0 or f1 with optional ^uint."""
    runs = []
    for tok in text.split():
        match = _TERM_RE.match(tok)
        if match is None:
            raise ValueError(f"bad word term {tok!r}")
        gen = F0 if match.group(1) == "f0" else F1
        exp = 1 if match.group(2) is None else int(match.group(2))
        runs.append((gen, exp))
    return GeneratorWord(m, runs)


def word_from_letters(m, letters):
    return GeneratorWord(m, [(g, 1) for g in letters])


class NormalForm:
    """Exponent vector (k; p_0..p_k) of a monoid element's shortest word.

    Denotes f1^{p_k} f0 f1^{m^{k-1} p_{k-1} - 1} ... f0 f1^{m p_1 - 1} f0
    f1^{p_0} for k >= 1, and f1^{p_0} for k = 0.
    """

    __slots__ = ("m", "k", "p")

    def __init__(self, m, k, p):
        p = tuple(p)
        if m < 2:
            raise ValueError(f"alphabet size must be >= 2, got {m}")
        if k < 0 or len(p) != k + 1:
            raise ValueError(f"need exactly k+1 exponents, got k={k}, p={p}")
        if p[0] < 0 or p[k] < 0:
            raise ValueError("outer exponents must be >= 0")
        if any(p[i] < 1 for i in range(1, k)):
            raise ValueError("inner exponents must be >= 1")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "p", p)

    def __setattr__(self, name, value):
        raise AttributeError("NormalForm is immutable")

    def __eq__(self, other):
        if not isinstance(other, NormalForm):
            return NotImplemented
        return (self.m, self.k, self.p) == (other.m, other.k, other.p)

    def __hash__(self):
        return hash((self.m, self.k, self.p))

    def __repr__(self):
        return f"NormalForm(m={self.m}, k={self.k}, p={self.p})"

    def to_word(self):
        m, k, p = self.m, self.k, self.p
        if k == 0:
            return GeneratorWord(m, [(F1, p[0])])
        runs = [(F1, p[k]), (F0, 1)]
        for i in range(k - 1, 0, -1):
            runs.append((F1, m ** i * p[i] - 1))
            runs.append((F0, 1))
        runs.append((F1, p[0]))
        return GeneratorWord(m, runs)

    def length(self):
        """Length of the element: the written length of the normal word."""
        m, k, p = self.m, self.k, self.p
        if k == 0:
            return p[0]
        return p[k] + sum(m ** i * p[i] for i in range(1, k)) + p[0] + 1

    def is_identity(self):
        return self.k == 0 and self.p[0] == 0

    def to_json(self):
        return json.dumps({"m": self.m, "k": self.k, "p": list(self.p)},
                          separators=(",", ":"))

    @classmethod
    def from_json(cls, text):
        data = json.loads(text)
        return cls(data["m"], data["k"], data["p"])


def ladder_word(m, k):
    """The nested absorber f0 f1^{m^k - 1} f0 f1^{m^{k-1} - 1} ... f0 f1^{m-1} f0.

    For k = 0 this is the bare mask f0.  Left-multiplying it by f0 f1^{q}
    with suitable q leaves it fixed, which is the content of the absorption
    relations below.
    """
    if k < 0:
        raise ValueError("block index must be >= 0")
    runs = []
    for i in range(k, 0, -1):
        runs.append((F0, 1))
        runs.append((F1, m ** i - 1))
    runs.append((F0, 1))
    return GeneratorWord(m, runs)


def absorption_relation(m, k, p):
    """Relation pair f0 f1^{p m^k - 1} . L_k = L_k for 1 <= p <= m-1."""
    if k < 0:
        raise ValueError("relation index must be >= 0")
    if not 1 <= p <= m - 1:
        raise ValueError(f"need 1 <= p <= m-1, got p={p}")
    tail = ladder_word(m, k)
    lhs = GeneratorWord(m, ((F0, 1), (F1, p * m ** k - 1))) * tail
    return lhs, tail


def carry_relation(m, k):
    """Relation pair f0 f1^{m^k + m^{k+1} - 1} . L_k = f1^{m^{k+1}} . L_k."""
    if k < 0:
        raise ValueError("relation index must be >= 0")
    tail = ladder_word(m, k)
    lhs = GeneratorWord(m, ((F0, 1), (F1, m ** k + m ** (k + 1) - 1))) * tail
    return lhs, GeneratorWord(m, ((F1, m ** (k + 1)),)) * tail


def prefix_relation(m, k, ps):
    """General prefix-cancelling relation with parameters (p_{k+2}, ..., p_1).

    The right-hand side is f1^{m^{k+1} p_{k+1}} f0 f1^{m^k p_k - 1} ... f0
    f1^{m p_1 - 1} f0; the left-hand side prepends f0 f1^{m^k p_{k+2} - 1}.
    Requires 1 <= p_{k+2} <= m-1, p_{k+1} >= 0 and p_i >= 1 below that.
    Absorption is the special case (p, 0, 1, ..., 1) and carry is (1, ..., 1).
    """
    ps = tuple(ps)
    if k < 0:
        raise ValueError("relation index must be >= 0")
    if len(ps) != k + 2:
        raise ValueError(f"need k+2 parameters, got {len(ps)} for k={k}")
    if not 1 <= ps[0] <= m - 1:
        raise ValueError(f"need 1 <= p_(k+2) <= m-1, got {ps[0]}")
    if ps[1] < 0:
        raise ValueError("p_(k+1) must be >= 0")
    if any(q < 1 for q in ps[2:]):
        raise ValueError("parameters p_k..p_1 must be >= 1")
    runs = [(F1, m ** (k + 1) * ps[1])]
    for idx in range(2, k + 2):
        i = k + 2 - idx  # exponent level, k down to 1
        runs.append((F0, 1))
        runs.append((F1, m ** i * ps[idx] - 1))
    runs.append((F0, 1))
    rhs = GeneratorWord(m, runs)
    lhs = GeneratorWord(m, ((F0, 1), (F1, m ** k * ps[0] - 1))) * rhs
    return lhs, rhs


def _indexed_exponents(word):
    """Exponent list p_0, p_1, ..., p_{2k} read off right to left.

    Even indices hold successor exponents, odd indices mask exponents; both
    ends are padded with zero successor runs so the list length is odd.
    """
    runs = word.runs
    if runs and runs[-1][0] == F1:
        p = [runs[-1][1]]
        rest = runs[:-1]
    else:
        p = [0]
        rest = runs
    for gen, exp in reversed(rest):
        p.append(exp)
    if len(p) % 2 == 0:
        p.append(0)
    return p


def reduce_word(word):
    """Normal form of the element a word represents.

    A single right-to-left scan over the run-length encoding: mask runs
    collapse to a single f0; each successor run, plus the carry r from
    cancellations to its right, must match the shape m^j * q - 1 at the j-th
    committed level or else the level's mask cancels and the surplus
    r = val - low_term(val + 1) + 1 migrates into the next successor run.
    Cost is O(#runs) arithmetic operations on unbounded integers, each
    touching numbers no wider than the written length.
    """
    m = word.m
    p = _indexed_exponents(word)
    if len(p) == 1:
        return NormalForm(m, 0, (p[0],))
    twok = len(p) - 1
    levels = [p[0]]
    j = 0
    r = 0
    i = 1
    while i <= twok - 1:
        if i % 2 == 1:
            j += 1
            r = 0
            i += 1
            continue
        val = p[i] + r
        mj = m ** j
        if val % mj == mj - 1:
            levels.append(val)
            i += 1
        else:
            r = val - low_term(val + 1, m) + 1
            i += 2
    assert len(levels) == j
    exps = [levels[0]]
    for t in range(1, j):
        exps.append((levels[t] + 1) // m ** t)
    exps.append(p[twok] + r)
    return NormalForm(m, j, tuple(exps))


def word_problem(w1, w2):
    """True iff two words represent the same monoid element."""
    if w1.m != w2.m:
        raise ValueError("alphabet mismatch")
    return reduce_word(w1) == reduce_word(w2)


def restrict_normal_form(nf, x):
    """Normal form of the restriction of an element at the one-letter word x.

    Closed form of the action on the tail behind one consumed symbol.  With
    r2 = m - 1 - (p_0 mod m), the restriction keeps the mask tower only at
    x = r2; everywhere else the bottom level dissolves into a successor
    power.  In the r2 branch the whole exponent tower divides by m; the first
    level p_{i0} not divisible by m (if any) merges into the level above it.
    """
    m, k, p = nf.m, nf.k, nf.p
    if not 0 <= x < m:
        raise ValueError(f"symbol {x} out of range for alphabet of size {m}")
    if k == 0:
        return NormalForm(m, 0, ((p[0] + x) // m,))
    r2 = m - 1 - p[0] % m
    if k == 1:
        if x == r2:
            return NormalForm(m, 1, (p[0] // m, p[1] // m))
        return NormalForm(m, 0, (p[1] // m + (p[0] + x) // m,))
    if x != r2:
        newp = (p[1] - 1 + (p[0] + x) // m,) + p[2:k] + (p[k] // m,)
        return NormalForm(m, k - 1, newp)
    if all(p[i] % m == 0 for i in range(1, k)):
        return NormalForm(m, k, (p[0] // m,) + tuple(p[i] // m for i in range(1, k))
                          + (p[k] // m,))
    i0 = next(i for i in range(1, k) if p[i] % m != 0)
    low = (p[0] // m,) + tuple(p[i] // m for i in range(1, i0))
    if i0 == k - 1:
        # the merged level is the new head: the carry m^{k-1}*[p_{k-1}/m]
        # lands there as a plain successor power
        return NormalForm(m, k - 1, low + (p[k] // m + m ** (k - 1) * (p[k - 1] // m),))
    newp = low + (p[i0 + 1] + p[i0] // m,) + p[i0 + 2:k] + (p[k] // m,)
    return NormalForm(m, k - 1, newp)


def has_rule_occurrence(word):
    """True iff some left-hand side of the prefix relations occurs in the word.

    Exact, run-level decision: a factor f0 f1^A f0 f1^{B_k} f0 ... f1^{B_1} f0
    is a left-hand side iff valuation(A + 1) = k and m^j divides B_j + 1 for
    every interior block; a doubled mask is the degenerate A = 0 case.
    """
    m = word.m
    runs = word.runs
    if any(g == F0 and e >= 2 for g, e in runs):
        return True
    for i, (g, _) in enumerate(runs):
        if g != F0 or i + 2 >= len(runs):
            continue
        a = runs[i + 1][1]
        k = valuation(a + 1, m)
        if i + 2 * (k + 1) >= len(runs):
            continue
        ok = True
        for j in range(k, 0, -1):
            b = runs[i + 1 + 2 * (k - j + 1)][1]
            if (b + 1) % m ** j != 0:
                ok = False
                break
        if ok:
            return True
    return False


def enumerate_normal_forms(m, max_length):
    """All normal forms of elements of length <= max_length, deterministically."""
    for p0 in range(max_length + 1):
        yield NormalForm(m, 0, (p0,))
    k = 1
    while 1 + sum(m ** i for i in range(1, k)) <= max_length:
        inner_budget = max_length - 1

        def walk(i, budget, chosen):
            if i == k:
                for p0 in range(budget + 1):
                    for pk in range(budget - p0 + 1):
                        yield NormalForm(m, k, (p0,) + chosen + (pk,))
                return
            step = m ** i
            pi = 1
            while pi * step <= budget - sum(m ** t for t in range(i + 1, k)):
                yield from walk(i + 1, budget - pi * step, chosen + (pi,))
                pi += 1

        yield from walk(1, inner_budget, ())
        k += 1


# -- words as transformations -------------------------------------------------

_WORD_ELEMENT_LETTER_LIMIT = 200
_MASK_RUN_GUARD = 100_000


def successor_power_machine(m, exponent):
    """Transducer of the map "add `exponent`" on m-adic digit streams.

    States are the exponents reachable by carrying: c goes to (c + x) // m on
    input x with output (c + x) mod m, so the machine has O(m log exponent)
    states and huge powers of the successor stay cheap.
    """
    if exponent < 0:
        raise ValueError("exponent must be >= 0")
    pos = {exponent: 0}
    order = [exponent]
    trans = []
    out = []
    qi = 0
    while qi < len(order):
        c = order[qi]
        qi += 1
        trow = []
        orow = []
        for x in range(m):
            nxt = (c + x) // m
            idx = pos.get(nxt)
            if idx is None:
                idx = len(order)
                pos[nxt] = idx
                order.append(nxt)
            trow.append(idx)
            orow.append((c + x) % m)
        trans.append(tuple(trow))
        out.append(tuple(orow))
    return MealyMachine(m, len(order), tuple(trans), tuple(out))


def word_element(word, strategy="auto"):
    """Canonical transformation of a generator word.

    "letters" composes one generator at a time (the plain route, used as the
    oracle in tests); "runs" builds each successor run from its carry
    transducer in one step, which is the only feasible route once exponents
    grow past the written-length scale.  "auto" switches on the letter count.
    """
    m = word.m
    if strategy not in ("auto", "letters", "runs"):
        raise ValueError(f"unknown strategy {strategy!r}")
    if strategy == "auto":
        strategy = "letters" if word.letter_count() <= _WORD_ELEMENT_LETTER_LIMIT else "runs"
    base = mask_successor_machine(m)
    elem = identity_element(m)
    for gen, exp in reversed(word.runs):
        if strategy == "runs" and gen == F1:
            power = successor_power_machine(m, exp)
            elem = compose_state(power, 0, elem)
        else:
            if gen == F0 and exp > _MASK_RUN_GUARD:
                raise GuardExceeded(f"mask run of {exp} letters refused")
            state = GEN_STATE[gen]
            for _ in range(exp):
                elem = compose_state(base, state, elem)
    return elem


def restriction_word(word, x):
    """Restriction of a word's transformation at symbol x, again as a word.

    Walks the letters right to left through the three-state machine, tracking
    the symbol as it is rewritten; identity restrictions drop out.  This is
    the semantic route against which restrict_normal_form is checked.
    """
    m = word.m
    if not 0 <= x < m:
        raise ValueError(f"symbol {x} out of range for alphabet of size {m}")
    machine = mask_successor_machine(m)
    rev = []
    cur = x
    for gen, exp in reversed(word.runs):
        state = GEN_STATE[gen]
        for _ in range(exp):
            nxt, cur = machine.step(state, cur)
            if nxt == STATE_MASK:
                rev.append((F0, 1))
            elif nxt == STATE_SUCCESSOR:
                rev.append((F1, 1))
    return GeneratorWord(m, list(reversed(rev))), cur


# -- Cayley structure ---------------------------------------------------------


@dataclass(frozen=True)
class CayleyBlock:
    """Self-similar block of the left Cayley graph.

    Vertices sit on a successor spine 0 .. m^i - 1; every vertex except the
    rightmost carries one mask edge back to an earlier-or-equal vertex.
    """

    m: int
    index: int
    vertices: int
    f1_path: tuple
    f0_edges: tuple

    def __post_init__(self):
        if self.vertices != self.m ** self.index:
            raise ValueError("block must have m^i vertices")
        if self.f1_path != tuple(range(self.vertices)):
            raise ValueError("successor spine must be 0..m^i-1")
        sources = [u for u, _ in self.f0_edges]
        if sources != list(range(self.vertices - 1)):
            raise ValueError("every non-rightmost vertex needs exactly one mask edge")
        if any(v > u for u, v in self.f0_edges):
            raise ValueError("mask edges must point to earlier-or-equal vertices")

    def f1_edge_count(self):
        return self.vertices - 1

    def to_dot(self):
        lines = ["digraph block {", "  rankdir=LR;"]
        for v in range(self.vertices):
            lines.append(f'  v{v} [label="{v}"];')
        for u in range(self.vertices - 1):
            lines.append(f'  v{u} -> v{u + 1} [label="f1"];')
        for u, v in self.f0_edges:
            lines.append(f'  v{u} -> v{v} [label="f0"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def cayley_block(m, i):
    """Block i, built from the recursive picture: m copies of block i-1 are
    chained by successor edges and each of the first m-1 copies hooks its
    rightmost vertex back to the leftmost vertex by a mask edge."""
    if m < 2:
        raise ValueError(f"alphabet size must be >= 2, got {m}")
    if i < 0:
        raise ValueError("block index must be >= 0")
    edges = []
    size = 1
    for _ in range(i):
        grown = []
        for c in range(m):
            off = c * size
            grown.extend((u + off, v + off) for u, v in edges)
        for c in range(m - 1):
            grown.append((c * size + size - 1, 0))
        edges = grown
        size *= m
    edges.sort()
    return CayleyBlock(m, i, size, tuple(range(size)), tuple(edges))


@dataclass(frozen=True)
class CayleyBall:
    """Radius-R ball of the left Cayley graph of the mask/successor monoid.

    Vertex 0 is the identity; `words` holds each vertex's geodesic (which is
    its normal-form word), and edges (u, gen, v) mean v = gen . u with both
    endpoints inside the ball.  Identity loops are omitted.
    """

    m: int
    radius: int
    words: tuple
    edges: tuple

    def to_dot(self):
        lines = ["digraph cayley {", "  rankdir=LR;"]
        for v, word in enumerate(self.words):
            label = word.to_string() or "e"
            lines.append(f'  v{v} [label="{label}"];')
        for u, gen, v in self.edges:
            lines.append(f'  v{u} -> v{v} [label="{GEN_NAMES[gen]}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


CAYLEY_BALL_GUARD = 100_000


def cayley_ball(m, radius, element_guard=CAYLEY_BALL_GUARD):
    """Ball of radius R, generated semantically by BFS over canonical
    transformation keys (not from the recursive block picture; that the two
    agree is checked by the tests, never assumed)."""
    if radius < 0:
        raise ValueError("radius must be >= 0")
    base = mask_successor_machine(m)
    gens = [(gen, canonical_element(base, GEN_STATE[gen])) for gen in (F0, F1)]
    root = identity_element(m)
    index = {root.key: 0}
    elems = [root]
    letters = [()]
    frontier = [0]
    for _ in range(radius):
        nxt = []
        for vi in frontier:
            for gen, gelem in gens:
                new = compose_state(base, GEN_STATE[gen], elems[vi])
                if new.key not in index:
                    if len(elems) >= element_guard:
                        raise GuardExceeded(
                            f"cayley ball exceeded {element_guard} vertices")
                    index[new.key] = len(elems)
                    elems.append(new)
                    letters.append((gen,) + letters[vi])
                    nxt.append(index[new.key])
        frontier = nxt
    edges = []
    for vi, elem in enumerate(elems):
        for gen, _ in gens:
            target = compose_state(base, GEN_STATE[gen], elem)
            ti = index.get(target.key)
            if ti is not None:
                edges.append((vi, gen, ti))
    words = tuple(word_from_letters(m, ls) for ls in letters)
    return CayleyBall(m, radius, words, tuple(edges))


def loop_free_path_words(ball):
    """Words spelled by all vertex-disjoint paths from the ball's root.

    The path root -g1-> v1 -g2-> v2 ... spells the word g_t ... g_2 g_1 (new
    generators multiply on the left).  These words are exactly the normal
    forms of length up to the radius.
    """
    adjacency = [[] for _ in ball.words]
    for u, gen, v in ball.edges:
        adjacency[u].append((gen, v))
    words = []

    def walk(v, visited, rev_letters):
        words.append(word_from_letters(ball.m, tuple(reversed(rev_letters))))
        for gen, t in adjacency[v]:
            if t not in visited:
                visited.add(t)
                rev_letters.append(gen)
                walk(t, visited, rev_letters)
                rev_letters.pop()
                visited.remove(t)

    walk(0, {0}, [])
    return words
