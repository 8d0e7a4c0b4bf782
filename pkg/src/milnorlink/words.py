"""Free-group words, the epsilon counting functionals and the Magnus expansion.

Words are plain sequences of signed generator letters and are never reduced
implicitly.  The Magnus expansion sends the generator ``g_i`` to ``1 + h_i`` and
its inverse to ``1 - h_i + h_i^2 - ...`` inside the ring of noncommutative
integer power series, truncated at a fixed degree.
"""

from __future__ import annotations

import re
from collections import defaultdict
from typing import Iterable, Mapping, NamedTuple, Sequence

__all__ = [
    "Letter",
    "Word",
    "free_reduce",
    "epsilon",
    "epsilon_pair",
    "TruncatedSeries",
    "series_mul",
    "magnus_expand",
    "magnus_coeff",
]


class Letter(NamedTuple):
    generator: int
    sign: int = 1

    def inverse(self) -> "Letter":
        return Letter(self.generator, -self.sign)

    def __str__(self):
        return f"g{self.generator}" if self.sign > 0 else f"g{self.generator}^-1"


def _check_letter(letter) -> Letter:
    gen, sign = letter
    if isinstance(gen, bool) or not isinstance(gen, int) or gen < 1:
        raise ValueError(f"generator index must be a positive integer, got {gen!r}")
    if sign not in (1, -1):
        raise ValueError(f"letter sign must be +1 or -1, got {sign!r}")
    return Letter(gen, sign)


_TOKEN = re.compile(r"^(?P<name>g\d+|[A-Za-z]\w*)(?P<inv>\^-1)?$")


class Word(tuple):
    """An unreduced word in the free group, stored as a tuple of letters.

    ``Word([(1, 1), (2, -1)])`` is ``g1 g2^-1``.  Concatenation with ``+``
    and :meth:`inverse` return new words; nothing cancels unless
    :func:`free_reduce` is called.
    """

    __slots__ = ()

    def __new__(cls, letters: Iterable = ()):
        return super().__new__(cls, (_check_letter(x) for x in letters))

    @classmethod
    def parse(cls, text: str, aliases: Mapping[str, int] | None = None) -> "Word":
        """Parse ``"g1 g2 g1^-1 g2^-1"``.

        Tokens other than ``g<k>`` are looked up in ``aliases`` (for instance
        ``{"i": 1, "j": 2, "k": 3}``).
        """
        letters = []
        for token in text.split():
            match = _TOKEN.match(token)
            if match is None:
                raise ValueError(f"bad word token {token!r}")
            name = match.group("name")
            if re.fullmatch(r"g\d+", name):
                gen = int(name[1:])
            elif aliases and name in aliases:
                gen = aliases[name]
            else:
                raise ValueError(f"unknown generator {name!r}")
            letters.append((gen, -1 if match.group("inv") else 1))
        return cls(letters)

    def __str__(self):
        return " ".join(str(x) for x in self)

    def __repr__(self):
        return f"Word({str(self)!r})"

    def __add__(self, other):
        return Word(tuple.__add__(self, tuple(other)))

    def __mul__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n >= 0:
            return Word(tuple(self) * n)
        return self.inverse() * (-n)

    def __getitem__(self, item):
        result = tuple.__getitem__(self, item)
        if isinstance(item, slice):
            return Word(result)
        return result

    def inverse(self) -> "Word":
        return Word(x.inverse() for x in reversed(self))

    def generators(self) -> set[int]:
        return {x.generator for x in self}


def _as_word(w) -> Word:
    return w if isinstance(w, Word) else Word(w)


def free_reduce(w: Sequence) -> Word:
    """Cancel adjacent ``x x^-1`` pairs until none remain."""
    stack: list[Letter] = []
    for letter in _as_word(w):
        if stack and stack[-1].generator == letter.generator and stack[-1].sign == -letter.sign:
            stack.pop()
        else:
            stack.append(letter)
    return Word(stack)


def epsilon(i: int, w: Sequence) -> int:
    """Exponent sum of generator ``i`` in ``w``."""
    return sum(sign for gen, sign in w if gen == i)


def epsilon_pair(i: int, j: int, w: Sequence) -> int:
    """Signed count of occurrences of ``i ... j`` in ``w``.

    Each ``i^r`` followed (not necessarily adjacently) by ``j^s`` contributes
    ``r*s``.  Letters of other generators are ignored.
    """
    if i == j:
        raise ValueError("epsilon_pair needs two distinct generators")
    total = 0
    seen_i = 0
    for gen, sign in w:
        if gen == i:
            seen_i += sign
        elif gen == j:
            total += seen_i * sign
    return total


class TruncatedSeries:
    """Integer power series in noncommuting ``h_1, h_2, ...`` modulo degree > d.

    Monomials are tuples of variable indices, so ``(1, 2)`` is ``h_1 h_2`` and
    ``()`` is the constant term.  Zero coefficients are never stored.
    """

    __slots__ = ("degree_bound", "_terms")

    def __init__(self, terms: Mapping[tuple, int] | None = None, degree_bound: int = 0):
        if degree_bound < 0:
            raise ValueError("degree bound must be nonnegative")
        self.degree_bound = degree_bound
        clean = {}
        for mono, coeff in (terms or {}).items():
            mono = tuple(mono)
            if len(mono) > degree_bound:
                raise ValueError(f"monomial {mono} exceeds degree bound {degree_bound}")
            if coeff:
                clean[mono] = int(coeff)
        self._terms = clean

    @classmethod
    def one(cls, degree_bound: int) -> "TruncatedSeries":
        return cls({(): 1}, degree_bound)

    @classmethod
    def variable(cls, i: int, degree_bound: int) -> "TruncatedSeries":
        if degree_bound == 0:
            return cls({}, 0)
        return cls({(i,): 1}, degree_bound)

    @classmethod
    def _trusted(cls, terms: dict, degree_bound: int) -> "TruncatedSeries":
        s = cls.__new__(cls)
        s.degree_bound = degree_bound
        s._terms = {m: c for m, c in terms.items() if c}
        return s

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def coefficient(self, monomial: Sequence[int]) -> int:
        monomial = tuple(monomial)
        if len(monomial) > self.degree_bound:
            raise ValueError(f"monomial {monomial} exceeds degree bound {self.degree_bound}")
        return self._terms.get(monomial, 0)

    def _check(self, other: "TruncatedSeries"):
        if not isinstance(other, TruncatedSeries):
            raise TypeError(f"expected TruncatedSeries, got {type(other).__name__}")
        if other.degree_bound != self.degree_bound:
            raise ValueError(
                f"degree bounds differ: {self.degree_bound} vs {other.degree_bound}")

    def __add__(self, other):
        self._check(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return TruncatedSeries._trusted(out, self.degree_bound)

    def __neg__(self):
        return TruncatedSeries._trusted({m: -c for m, c in self._terms.items()}, self.degree_bound)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        d = self.degree_bound
        out: dict = defaultdict(int)
        for m1, c1 in self._terms.items():
            room = d - len(m1)
            for m2, c2 in other._terms.items():
                if len(m2) <= room:
                    out[m1 + m2] += c1 * c2
        return TruncatedSeries._trusted(out, d)

    def inverse(self) -> "TruncatedSeries":
        """Inverse of a series with constant term +-1."""
        c0 = self._terms.get((), 0)
        if c0 not in (1, -1):
            raise ValueError("only series with constant term +-1 are invertible over Z")
        one = TruncatedSeries.one(self.degree_bound)
        # (c0 + x)^-1 = c0 * sum (-c0 x)^n
        x = TruncatedSeries._trusted({m: -c0 * c for m, c in self._terms.items() if m}, self.degree_bound)
        total, power = one, one
        for _ in range(self.degree_bound):
            power = power * x
            total = total + power
        return TruncatedSeries._trusted({m: c0 * c for m, c in total._terms.items()}, self.degree_bound)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.degree_bound == other.degree_bound and self._terms == other._terms

    def __hash__(self):
        return hash((self.degree_bound, frozenset(self._terms.items())))

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for mono in sorted(self._terms, key=lambda m: (len(m), m)):
            c = self._terms[mono]
            name = "*".join(f"h{i}" for i in mono)
            if not name:
                body = str(abs(c))
            elif abs(c) == 1:
                body = name
            else:
                body = f"{abs(c)}*{name}"
            parts.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self):
        return f"TruncatedSeries({str(self)!r}, degree_bound={self.degree_bound})"


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a * b


def _times_letter(terms: dict, gen: int, sign: int, d: int) -> dict:
    # right multiplication by 1 + h (sign +1) or 1 - h + h^2 - ... (sign -1)
    out = dict(terms)
    for mono, c in terms.items():
        room = d - len(mono)
        ext = mono
        coeff = c
        for _ in range(room if sign < 0 else min(room, 1)):
            ext = ext + (gen,)
            coeff = coeff * sign
            out[ext] = out.get(ext, 0) + coeff
    return out


def magnus_expand(w: Sequence, d: int) -> TruncatedSeries:
    """Magnus expansion of ``w`` truncated above degree ``d``."""
    if d < 0:
        raise ValueError("degree bound must be nonnegative")
    terms = {(): 1}
    for gen, sign in _as_word(w):
        terms = _times_letter(terms, gen, sign, d)
        terms = {m: c for m, c in terms.items() if c}
    return TruncatedSeries._trusted(terms, d)


def magnus_coeff(w: Sequence, monomial: Sequence[int], d: int | None = None) -> int:
    """Coefficient of ``h_{m1} ... h_{ms}`` in the Magnus expansion of ``w``."""
    monomial = tuple(monomial)
    if d is None:
        d = len(monomial)
    if len(monomial) > d:
        raise ValueError(f"monomial {monomial} is longer than degree bound {d}")
    return magnus_expand(w, d).coefficient(monomial)
