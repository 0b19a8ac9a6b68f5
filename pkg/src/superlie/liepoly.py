"""Free Lie superalgebra elements over an exact field, their expansion into
the free associative superalgebra, leading terms, and reduction modulo a set
of monic relations.

A :class:`LiePoly` is stored in the canonical linear basis of standard
bracketings of super-Lyndon-Shirshov words.  Expansion is triangular: the
expansion of a basis monomial has its own word as deglex-greatest term, with
coefficient 1 (or 2 for the square monomials), which makes the coordinates
unique and conversion back from the envelope a straight elimination.

Coefficients are :class:`fractions.Fraction` or :class:`superlie.fields.FpElement`;
both support mixed arithmetic with ints, so the code below is field-agnostic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import NotLieElementError, RelationError, WordError
from .lyndon import (
    is_super_ls_monomial,
    is_super_ls_word,
    special_bracketing_skeleton,
    standard_bracketing,
)
from .words import Alphabet, AssocWord, LieMonomial, find_occurrences, leaf


class AssocPoly:
    """Finite linear combination of associative words; zero coefficients absent."""

    __slots__ = ("alphabet", "terms")

    def __init__(self, alphabet: Alphabet, terms: "dict[AssocWord, object] | None" = None):
        self.alphabet = alphabet
        self.terms = {}
        if terms:
            for word, coeff in terms.items():
                if coeff == 0:
                    continue
                if word.alphabet != alphabet:
                    raise WordError("term over a different alphabet")
                self.terms[word] = coeff

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, AssocPoly):
            return NotImplemented
        return self.alphabet == other.alphabet and self.terms == other.terms

    def __add__(self, other: "AssocPoly") -> "AssocPoly":
        out = dict(self.terms)
        for word, coeff in other.terms.items():
            new = out.get(word, 0) + coeff
            if new == 0:
                out.pop(word, None)
            else:
                out[word] = new
        return AssocPoly(self.alphabet, out)

    def __sub__(self, other: "AssocPoly") -> "AssocPoly":
        return self + other.scale(-1)

    def __neg__(self) -> "AssocPoly":
        return self.scale(-1)

    def scale(self, coeff) -> "AssocPoly":
        if coeff == 0:
            return AssocPoly(self.alphabet)
        return AssocPoly(self.alphabet, {w: c * coeff for w, c in self.terms.items()})

    def __mul__(self, other: "AssocPoly") -> "AssocPoly":
        out: dict[AssocWord, object] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                word = w1 + w2
                new = out.get(word, 0) + c1 * c2
                if new == 0:
                    out.pop(word, None)
                else:
                    out[word] = new
        return AssocPoly(self.alphabet, out)

    def word_mul(self, prefix: AssocWord, suffix: AssocWord) -> "AssocPoly":
        return AssocPoly(self.alphabet,
                         {prefix + w + suffix: c for w, c in self.terms.items()})

    def leading_term(self) -> tuple[AssocWord, object]:
        if not self.terms:
            raise WordError("zero polynomial has no leading term")
        word = max(self.terms, key=lambda w: w.deglex_key)
        return word, self.terms[word]

    def sorted_terms(self) -> list[tuple[AssocWord, object]]:
        return sorted(self.terms.items(), key=lambda kv: kv[0].deglex_key, reverse=True)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return _join_terms([(c, str(w)) for w, c in self.sorted_terms()])

    __repr__ = __str__


def _fmt_coeff(coeff, body: str) -> str:
    if coeff == 1:
        return body
    if coeff == -1:
        return f"-{body}"
    return f"{coeff}*{body}"


def _join_terms(terms: list[tuple[object, str]]) -> str:
    """Render sorted (coefficient, body) pairs with signs folded into the
    separators for rational coefficients."""
    parts: list[str] = []
    for coeff, body in terms:
        negative = isinstance(coeff, Fraction) and coeff < 0
        if not parts:
            parts.append(_fmt_coeff(coeff, body))
        elif negative:
            parts.append(f" - {_fmt_coeff(-coeff, body)}")
        else:
            parts.append(f" + {_fmt_coeff(coeff, body)}")
    return "".join(parts)


_MONOMIAL_OK: set[LieMonomial] = set()


def _check_basis_monomial(m: LieMonomial) -> None:
    if m in _MONOMIAL_OK:
        return
    if not is_super_ls_monomial(m):
        raise NotLieElementError(f"{m} is not a super-Lyndon-Shirshov monomial")
    _MONOMIAL_OK.add(m)


class LiePoly:
    """Element of the free Lie superalgebra in the super-LS monomial basis."""

    __slots__ = ("alphabet", "terms", "_hash")

    def __init__(self, alphabet: Alphabet, terms: "dict[LieMonomial, object] | None" = None):
        self.alphabet = alphabet
        self.terms = {}
        self._hash = None
        if terms:
            for m, coeff in terms.items():
                if coeff == 0:
                    continue
                if m.alphabet != alphabet:
                    raise WordError("term over a different alphabet")
                _check_basis_monomial(m)
                self.terms[m] = coeff

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, LiePoly):
            return NotImplemented
        return self.alphabet == other.alphabet and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(sorted(
                (hash(m), hash(c)) for m, c in self.terms.items())))
        return self._hash

    def __add__(self, other: "LiePoly") -> "LiePoly":
        out = dict(self.terms)
        for m, coeff in other.terms.items():
            new = out.get(m, 0) + coeff
            if new == 0:
                out.pop(m, None)
            else:
                out[m] = new
        return LiePoly(self.alphabet, out)

    def __sub__(self, other: "LiePoly") -> "LiePoly":
        return self + other.scale(-1)

    def __neg__(self) -> "LiePoly":
        return self.scale(-1)

    def scale(self, coeff) -> "LiePoly":
        if coeff == 0:
            return LiePoly(self.alphabet)
        return LiePoly(self.alphabet, {m: c * coeff for m, c in self.terms.items()})

    def leading_monomial(self) -> LieMonomial:
        if not self.terms:
            raise WordError("zero polynomial has no leading term")
        return max(self.terms, key=lambda m: m.deglex_key)

    def leading_word(self) -> AssocWord:
        return self.leading_monomial().word

    def monic(self) -> "LiePoly":
        _, coeff = leading_term(self)
        return self.scale(1 / coeff)

    def parity_components(self) -> dict[int, "LiePoly"]:
        parts: dict[int, dict[LieMonomial, object]] = {}
        for m, coeff in self.terms.items():
            parts.setdefault(m.parity, {})[m] = coeff
        return {p: LiePoly(self.alphabet, t) for p, t in parts.items()}

    def max_word_length(self) -> int:
        return max((len(m.word) for m in self.terms), default=0)

    def sorted_terms(self) -> list[tuple[LieMonomial, object]]:
        return sorted(self.terms.items(), key=lambda kv: kv[0].deglex_key, reverse=True)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return _join_terms([(c, str(m)) for m, c in self.sorted_terms()])

    __repr__ = __str__


def generator_poly(alphabet: Alphabet, key: "str | int") -> LiePoly:
    return LiePoly(alphabet, {leaf(alphabet, key): Fraction(1)})


def monomial_poly(m: LieMonomial, coeff=Fraction(1)) -> LiePoly:
    return LiePoly(m.alphabet, {m: coeff})


_EXPANSIONS: dict[LieMonomial, dict[AssocWord, int]] = {}


def _expand_monomial(m: LieMonomial) -> dict[AssocWord, int]:
    """Integer-coefficient expansion of a bracket monomial in the envelope."""
    cached = _EXPANSIONS.get(m)
    if cached is not None:
        return cached
    if m.is_leaf:
        out = {m.word: 1}
    else:
        assert m.left is not None and m.right is not None
        left = _expand_monomial(m.left)
        right = _expand_monomial(m.right)
        sign = -1 if (m.left.parity and m.right.parity) else 1
        out = {}
        for w1, c1 in left.items():
            for w2, c2 in right.items():
                c = c1 * c2
                w = w1 + w2
                out[w] = out.get(w, 0) + c
                w = w2 + w1
                out[w] = out.get(w, 0) - sign * c
        out = {w: c for w, c in out.items() if c}
    _EXPANSIONS[m] = out
    return out


def expand(f: LiePoly) -> AssocPoly:
    """Associative-envelope image under ``[x,y] = xy - (-1)^{|x||y|} yx``."""
    out: dict[AssocWord, object] = {}
    for m, coeff in f.terms.items():
        for word, k in _expand_monomial(m).items():
            new = out.get(word, 0) + coeff * k
            if new == 0:
                out.pop(word, None)
            else:
                out[word] = new
    return AssocPoly(f.alphabet, out)


def leading_term(f: LiePoly) -> tuple[AssocWord, object]:
    """Deglex-greatest word of ``expand(f)`` with its coefficient.

    By triangularity this is the greatest basis word of ``f``, with the
    stored coefficient doubled on square monomials ``[v,v]``.
    """
    m = f.leading_monomial()
    coeff = f.terms[m]
    if not m.is_leaf and m.left == m.right:
        coeff = coeff * 2
    return m.word, coeff


def to_ls_coordinates(p: AssocPoly) -> LiePoly:
    """Inverse of :func:`expand` on the Lie subspace.

    Triangular elimination against expansions of standard bracketings, taken
    in decreasing deglex order.  Raises when a nonzero remainder has a
    non-super-LS leading word, i.e. the input is not a Lie element.
    """
    work = dict(p.terms)
    coords: dict[LieMonomial, object] = {}
    while work:
        word = max(work, key=lambda w: w.deglex_key)
        if word.is_empty or not is_super_ls_word(word):
            raise NotLieElementError(
                f"not a Lie element: irreducible remainder at word {word}")
        coeff = work[word]
        bracketing = standard_bracketing(word)
        coeff = coeff / bracketing.leading_coefficient
        coords[bracketing.monomial] = coeff
        for w, k in _expand_monomial(bracketing.monomial).items():
            new = work.get(w, 0) - coeff * k
            if new == 0:
                work.pop(w, None)
            else:
                work[w] = new
    return LiePoly(p.alphabet, coords)


_MONO_BRACKETS: dict[tuple[LieMonomial, LieMonomial], LiePoly] = {}


def _mono_bracket(m1: LieMonomial, m2: LieMonomial) -> LiePoly:
    """Bracket of two basis monomials, rational coefficients, memoized."""
    key = (m1, m2)
    got = _MONO_BRACKETS.get(key)
    if got is None:
        e1 = _expand_monomial(m1)
        e2 = _expand_monomial(m2)
        sign = -1 if (m1.parity and m2.parity) else 1
        out: dict[AssocWord, Fraction] = {}
        for w1, c1 in e1.items():
            for w2, c2 in e2.items():
                c = Fraction(c1 * c2)
                w = w1 + w2
                new = out.get(w, 0) + c
                if new == 0:
                    out.pop(w, None)
                else:
                    out[w] = new
                w = w2 + w1
                new = out.get(w, 0) - sign * c
                if new == 0:
                    out.pop(w, None)
                else:
                    out[w] = new
        got = to_ls_coordinates(AssocPoly(m1.alphabet, out))
        _MONO_BRACKETS[key] = got
    return got


def _mul_fraction(coeff, k: Fraction):
    """coeff * k where coeff is a field element and k an exact rational."""
    if k.denominator == 1:
        return coeff * k.numerator
    return coeff * k.numerator / k.denominator


def superbracket(f: LiePoly, g: LiePoly) -> LiePoly:
    """Lie superalgebra product, re-expressed in the basis.

    Bilinear over memoized monomial brackets; on parity-homogeneous
    arguments it satisfies
    ``expand([f,g]) = expand(f)expand(g) - (-1)^{|f||g|} expand(g)expand(f)``.
    """
    if f.alphabet != g.alphabet:
        raise WordError("operands over different alphabets")
    out: dict[LieMonomial, object] = {}
    for m1, c1 in f.terms.items():
        for m2, c2 in g.terms.items():
            scale = c1 * c2
            for m, k in _mono_bracket(m1, m2).terms.items():
                new = out.get(m, 0) + _mul_fraction(scale, k)
                if new == 0:
                    out.pop(m, None)
                else:
                    out[m] = new
    return LiePoly(f.alphabet, out)


def relative_bracketing(u: AssocWord, v: AssocWord, a: AssocWord, b: AssocWord,
                        ) -> LiePoly:
    """The monic bracketing of ``u`` relative to the subword ``v``: the special
    bracketing rescaled so the expanded leading coefficient is 1."""
    from .lyndon import special_bracketing

    result = special_bracketing(u, v, a, b)
    poly = to_ls_coordinates(
        AssocPoly(u.alphabet,
                  {w: Fraction(k) for w, k in _expand_monomial(result.monomial).items()}))
    return poly.scale(Fraction(1, result.leading_coefficient))


_RBP_CACHE: dict[tuple[AssocWord, LiePoly, AssocWord, AssocWord], LiePoly] = {}


def relative_bracketing_poly(u: AssocWord, p: LiePoly, a: AssocWord, b: AssocWord,
                             ) -> LiePoly:
    """The monic bracketing of ``u`` relative to a monic polynomial ``p``:
    ``p`` is substituted for the bracketing of its leading word."""
    cached = _RBP_CACHE.get((u, p, a, b))
    if cached is not None:
        return cached
    if p.is_zero:
        raise RelationError("cannot bracket relative to the zero polynomial")
    pw, pc = leading_term(p)
    if pc != 1:
        raise RelationError(f"relation {p} is not monic (leading coefficient {pc})")
    skeleton, atoms, _ = special_bracketing_skeleton(u, pw, a, b)
    unit = pc / pc  # the 1 of whatever field p lives over

    def ev(sk: tuple) -> LiePoly:
        if sk[0] == "leaf":
            word = atoms[sk[1]]
            if len(word) == 1:
                return LiePoly(u.alphabet, {leaf(u.alphabet, word.indices[0]): unit})
            return p
        return superbracket(ev(sk[1]), ev(sk[2]))

    value = ev(skeleton)
    word, coeff = leading_term(value)
    if word != u:
        raise RelationError(f"internal error: leading word {word} != {u}")
    value = value.scale(1 / coeff)
    _RBP_CACHE[(u, p, a, b)] = value
    return value


def reduce(f: LiePoly, relations: Iterable[LiePoly],
           record: "list | None" = None) -> LiePoly:
    """Full reduction of ``f`` modulo monic relations with super-LS leading words.

    Repeatedly eliminates the deglex-greatest reducible basis word, choosing
    the first matching relation in the given order and the occurrence with the
    smallest prefix.  ``record`` (if given) collects one
    ``(word, relation_index, prefix, suffix, coefficient)`` tuple per step.
    """
    rels: list[LiePoly] = list(relations)
    leads: list[AssocWord] = []
    for r in rels:
        if r.is_zero:
            raise RelationError("zero relation")
        word, coeff = leading_term(r)
        if coeff != 1:
            raise RelationError(f"relation {r} is not monic")
        if not is_super_ls_word(word):
            raise RelationError(f"relation leading word {word} is not super-LS")
        leads.append(word)

    # pop the deglex-greatest word; eliminations only ever introduce smaller
    # words, so words moved to `done` stay irreducible-or-settled
    work = dict(f.terms)
    done: dict[LieMonomial, object] = {}
    while work:
        m = max(work, key=lambda m: m.deglex_key)
        coeff = work.pop(m)
        target = None
        for si, lead in enumerate(leads):
            occurrences = find_occurrences(lead, m.word)
            if occurrences:
                target = (si, occurrences[0])
                break
        if target is None:
            done[m] = coeff
            continue
        si, (a, b) = target
        step = relative_bracketing_poly(m.word, rels[si], a, b)
        for m2, k in step.terms.items():
            if m2 == m:
                continue
            new = work.get(m2, 0) - coeff * k
            if new == 0:
                work.pop(m2, None)
            else:
                work[m2] = new
        if record is not None:
            record.append((m.word, si, a, b, coeff))
    return LiePoly(f.alphabet, done)
