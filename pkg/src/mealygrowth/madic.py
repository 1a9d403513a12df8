"""Integer semantics of the mask/successor generators.

Nonnegative integers embed into digit words LSB-first in base m (padded with
zeros), and on that encoding the successor generator literally adds one while
the mask generator sends q to q &_m (q + 1), where &_m keeps a digit exactly
where both operands agree.  Acting on integers directly gives a third,
machine-free route to evaluate generator words, used as an oracle against the
transducer action.

Only nonnegative m-adics are implemented; sign handling never arises here.
"""

from __future__ import annotations

from .family import F1


class MadicCodec:
    """LSB-first base-m encoding of integers 0 <= p < m^digits."""

    __slots__ = ("m", "digits")

    def __init__(self, m, digits):
        if m < 2:
            raise ValueError(f"base must be >= 2, got {m}")
        if digits < 1:
            raise ValueError(f"digit count must be >= 1, got {digits}")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "digits", digits)

    def __setattr__(self, name, value):
        raise AttributeError("MadicCodec is immutable")

    def encode(self, p):
        if p < 0:
            raise ValueError("only nonnegative integers are encodable")
        if p >= self.m ** self.digits:
            raise ValueError(f"{p} needs more than {self.digits} base-{self.m} digits")
        word = []
        for _ in range(self.digits):
            p, d = divmod(p, self.m)
            word.append(d)
        return tuple(word)

    def decode(self, word):
        value = 0
        for i, d in enumerate(word):
            if not 0 <= d < self.m:
                raise ValueError(f"digit {d} out of range for base {self.m}")
            value += d * self.m ** i
        return value


def madic_and(p, q, m):
    """Digitwise: keep a base-m digit where p and q agree, else write 0.

    For m = 2 this is the bitwise AND of the two integers.
    """
    if p < 0 or q < 0:
        raise ValueError("operands must be nonnegative")
    result = 0
    scale = 1
    while p or q:
        p, dp = divmod(p, m)
        q, dq = divmod(q, m)
        if dp == dq:
            result += dp * scale
        scale *= m
    return result


def act_on_integer(word, p):
    """Image of an integer under a generator word, applied right to left.

    A successor run adds its exponent; one mask step sends q to
    q &_m (q + 1), which zeroes the maximal low run of (m-1)-digits together
    with the digit just above it.
    """
    if p < 0:
        raise ValueError("only nonnegative integers are acted on")
    m = word.m
    for gen, exp in reversed(word.runs):
        if gen == F1:
            p += exp
        else:
            for _ in range(exp):
                p = madic_and(p, p + 1, m)
    return p
