"""Graded alphabets, associative words and nonassociative (bracketed) monomials.

The ordering conventions are the load-bearing part of this module.  The
lexicographic order ``lex_less`` makes every nonempty word smaller than the
empty word, so a proper prefix of a word is *greater* than the word itself
("x" > "xy").  The degree-lexicographic order ``deglex_less`` compares by
length first and is well founded.  Everything downstream (Lyndon-Shirshov
recognition, leading terms, completion) assumes exactly these two orders.

All types here are immutable values with structural equality; operations are
pure functions.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import AlphabetError, WordError

_NAME_RE = re.compile(r"[A-Za-z0-9_]+\Z")


class Generator(NamedTuple):
    """A single graded symbol: name, parity in Z2, and position in its alphabet."""

    name: str
    parity: int
    rank: int


@dataclass(frozen=True)
class Alphabet:
    """Ordered, parity-graded set of generator symbols.

    Input order defines the ranks: ``names[0]`` is the smallest symbol under
    the generator order.  Names must be unique, nonempty tokens over
    ``[A-Za-z0-9_]``; parities are 0 (even) or 1 (odd).
    """

    names: tuple[str, ...]
    parities: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.names:
            raise AlphabetError("alphabet must contain at least one generator")
        if len(self.names) != len(self.parities):
            raise AlphabetError("names and parities differ in length")
        seen: set[str] = set()
        for name in self.names:
            if not isinstance(name, str) or not _NAME_RE.match(name):
                raise AlphabetError(f"invalid generator name {name!r}")
            if name in seen:
                raise AlphabetError(f"duplicate generator name {name!r}")
            seen.add(name)
        for parity in self.parities:
            if parity not in (0, 1):
                raise AlphabetError(f"parity must be 0 or 1, got {parity!r}")

    @classmethod
    def from_spec(cls, spec: str) -> "Alphabet":
        """Parse an alphabet string like ``"y:0,x:1"`` (ascending order)."""
        names: list[str] = []
        parities: list[int] = []
        for chunk in spec.split(","):
            chunk = chunk.strip()
            if not chunk:
                raise AlphabetError(f"empty entry in alphabet spec {spec!r}")
            name, sep, parity_s = chunk.partition(":")
            if not sep:
                raise AlphabetError(f"missing ':parity' in alphabet entry {chunk!r}")
            try:
                parity = int(parity_s)
            except ValueError:
                raise AlphabetError(f"bad parity {parity_s!r} in entry {chunk!r}") from None
            names.append(name.strip())
            parities.append(parity)
        return cls(tuple(names), tuple(parities))

    @property
    def size(self) -> int:
        return len(self.names)

    @cached_property
    def _rank_of(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.names)}

    @cached_property
    def _single_char(self) -> bool:
        return all(len(name) == 1 for name in self.names)

    def rank(self, name: str) -> int:
        try:
            return self._rank_of[name]
        except KeyError:
            raise AlphabetError(f"unknown generator {name!r}") from None

    def generator(self, key: "str | int") -> Generator:
        index = self.rank(key) if isinstance(key, str) else key
        if not 0 <= index < self.size:
            raise AlphabetError(f"generator index {index} out of range")
        return Generator(self.names[index], self.parities[index], index)

    def generators(self) -> Iterator[Generator]:
        for i in range(self.size):
            yield self.generator(i)

    def empty_word(self) -> "AssocWord":
        return AssocWord(self, ())

    def letter(self, key: "str | int") -> "AssocWord":
        return AssocWord(self, (self.generator(key).rank,))

    def word(self, keys: Iterable["str | int"]) -> "AssocWord":
        return AssocWord(self, tuple(self.generator(k).rank for k in keys))

    def with_appended(self, name: str, parity: int) -> "Alphabet":
        """New alphabet with one extra symbol appended as the greatest element."""
        return Alphabet(self.names + (name,), self.parities + (parity,))


class AssocWord:
    """Immutable associative word over an :class:`Alphabet`.

    The empty word is the identity of concatenation and the maximum of the
    lexicographic order.  Parity is the Z2-sum of letter parities.
    """

    __slots__ = ("alphabet", "indices", "parity", "_hash")

    def __init__(self, alphabet: Alphabet, indices: Sequence[int]):
        idx = tuple(indices)
        for i in idx:
            if not 0 <= i < alphabet.size:
                raise AlphabetError(f"letter index {i} out of range")
        self.alphabet = alphabet
        self.indices = idx
        self.parity = sum(alphabet.parities[i] for i in idx) & 1
        self._hash = hash((alphabet, idx))

    def __len__(self) -> int:
        return len(self.indices)

    @property
    def is_empty(self) -> bool:
        return not self.indices

    @property
    def letters(self) -> tuple[Generator, ...]:
        return tuple(self.alphabet.generator(i) for i in self.indices)

    @property
    def deglex_key(self) -> tuple[int, tuple[int, ...]]:
        """Sort key realizing deglex: ascending key order is ascending deglex."""
        return (len(self.indices), self.indices)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AssocWord):
            return NotImplemented
        return self.indices == other.indices and self.alphabet == other.alphabet

    def __hash__(self) -> int:
        return self._hash

    def __add__(self, other: "AssocWord") -> "AssocWord":
        if self.alphabet != other.alphabet:
            raise AlphabetError("cannot concatenate words over different alphabets")
        return AssocWord(self.alphabet, self.indices + other.indices)

    def __getitem__(self, item: slice) -> "AssocWord":
        if not isinstance(item, slice):
            raise TypeError("words support slicing only; use .letters for letters")
        return AssocWord(self.alphabet, self.indices[item])

    def __str__(self) -> str:
        if not self.indices:
            return "1"
        names = [self.alphabet.names[i] for i in self.indices]
        sep = "" if self.alphabet._single_char else "."
        return sep.join(names)

    def __repr__(self) -> str:
        return f"AssocWord({self!s})"


class LieMonomial:
    """Nonassociative word: a leaf generator or a binary bracket of two monomials.

    ``word`` caches the bracket-removing image (in-order leaf concatenation),
    so ``rho`` is a constant-time accessor.
    """

    __slots__ = ("left", "right", "word", "_hash")

    def __init__(self, *, left: "LieMonomial | None", right: "LieMonomial | None",
                 word: AssocWord):
        self.left = left
        self.right = right
        self.word = word
        if left is None:
            self._hash = hash((0, word))
        else:
            self._hash = hash((1, left._hash, right._hash))  # type: ignore[union-attr]

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    @property
    def parity(self) -> int:
        return self.word.parity

    @property
    def alphabet(self) -> Alphabet:
        return self.word.alphabet

    @property
    def generator(self) -> Generator:
        if not self.is_leaf:
            raise WordError("not a leaf monomial")
        return self.word.alphabet.generator(self.word.indices[0])

    @property
    def deglex_key(self) -> tuple[int, tuple[int, ...]]:
        return self.word.deglex_key

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, LieMonomial):
            return NotImplemented
        if self._hash != other._hash or self.word != other.word:
            return False
        if self.is_leaf or other.is_leaf:
            return self.is_leaf and other.is_leaf
        return self.left == other.left and self.right == other.right

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        if self.is_leaf:
            return str(self.word)
        return f"[{self.left},{self.right}]"

    def __repr__(self) -> str:
        return f"LieMonomial({self!s})"


def leaf(alphabet: Alphabet, key: "str | int") -> LieMonomial:
    """Leaf monomial for a single generator."""
    return LieMonomial(left=None, right=None, word=alphabet.letter(key))


def node(left_m: LieMonomial, right_m: LieMonomial) -> LieMonomial:
    """Bracket node ``[left, right]`` of two monomials."""
    return LieMonomial(left=left_m, right=right_m, word=left_m.word + right_m.word)


def rho(m: LieMonomial) -> AssocWord:
    """Bracket-removing homomorphism: in-order concatenation of the leaves."""
    return m.word


def lex_less(u: AssocWord, v: AssocWord) -> bool:
    """Strict lexicographic order with the empty word as maximum.

    Compare first letters by generator rank, recurse on equal prefixes; when
    one word is a proper prefix of the other, the longer word is smaller.
    """
    if u.alphabet != v.alphabet:
        raise AlphabetError("cannot compare words over different alphabets")
    if u.indices == v.indices:
        return False
    if not u.indices:
        return False
    if not v.indices:
        return True
    for a, b in zip(u.indices, v.indices):
        if a != b:
            return a < b
    return len(u.indices) > len(v.indices)


def deglex_less(u: AssocWord, v: AssocWord) -> bool:
    """Strict degree-lexicographic order: by length, then lex within a length."""
    if u.alphabet != v.alphabet:
        raise AlphabetError("cannot compare words over different alphabets")
    if len(u.indices) != len(v.indices):
        return len(u.indices) < len(v.indices)
    return u.indices < v.indices


def cyclic_rotations(u: AssocWord) -> list[AssocWord]:
    """All ``len(u)`` rotations of a nonempty word, in rotation order."""
    if u.is_empty:
        raise WordError("cyclic rotations of the empty word are undefined")
    n = len(u)
    return [AssocWord(u.alphabet, u.indices[i:] + u.indices[:i]) for i in range(n)]


def find_occurrences(v: AssocWord, u: AssocWord) -> list[tuple[AssocWord, AssocWord]]:
    """All factorizations ``u = a + v + b``, ordered by increasing ``len(a)``.

    Overlapping occurrences are all reported.  Returns an empty list when
    ``v`` is not a subword of ``u``.
    """
    if v.is_empty:
        raise WordError("occurrences of the empty word are undefined")
    if v.alphabet != u.alphabet:
        raise AlphabetError("cannot search across different alphabets")
    out: list[tuple[AssocWord, AssocWord]] = []
    n, k = len(u), len(v)
    for i in range(n - k + 1):
        if u.indices[i:i + k] == v.indices:
            out.append((u[:i], u[i + k:]))
    return out
