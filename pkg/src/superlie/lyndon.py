"""Recognition and bracketing of (super-)Lyndon-Shirshov words and monomials.

A nonempty word is Lyndon-Shirshov (LS) when it is strictly greater than all
of its nontrivial cyclic rotations; its super variant additionally admits
``v + v`` for an LS word ``v`` of odd total parity.  Each super-LS word has a
unique super-LS monomial over it (the standard bracketing), and a super-LS
subword can always be bracketed as a unit inside a larger super-LS word (the
special bracketing).

The special bracketing here is found by a small dynamic program over the
"atom" sequence prefix-letters / distinguished-subword / suffix-letters: a
bracket tree is valid exactly when at every internal node the left span word
is lex-greater than the right span word, or the two span words are equal with
odd parity (which doubles the leading coefficient).  Any tree satisfying the
node conditions expands with leading word equal to the whole word, so the
search is both complete and self-certifying.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import BracketingError, NotLyndonError, WordError
from .words import Alphabet, AssocWord, LieMonomial, leaf, lex_less, node

MARKER = -1  # atom id of the distinguished subword in a special bracketing


def is_ls_word(u: AssocWord) -> bool:
    """True when ``u`` is a single letter or ``vw > wv`` for every split ``u = vw``."""
    if u.is_empty:
        raise WordError("the empty word is not eligible")
    n = len(u)
    if n == 1:
        return True
    for i in range(1, n):
        rotation = u[i:] + u[:i]
        if not lex_less(rotation, u):
            return False
    return True


def is_super_ls_word(u: AssocWord) -> bool:
    """LS, or ``v + v`` with ``v`` an LS word of odd total parity."""
    if u.is_empty:
        raise WordError("the empty word is not eligible")
    if is_ls_word(u):
        return True
    n = len(u)
    if n % 2:
        return False
    half = u[: n // 2]
    return half.indices == u[n // 2:].indices and half.parity == 1 and is_ls_word(half)


def is_ls_monomial(m: LieMonomial) -> bool:
    """Descent conditions: children LS, left > right, and the left child's own
    right part is at most the right child."""
    if m.is_leaf:
        return True
    u1, u2 = m.left, m.right
    assert u1 is not None and u2 is not None
    if not (is_ls_monomial(u1) and is_ls_monomial(u2)):
        return False
    if not lex_less(u2.word, u1.word):
        return False
    if not u1.is_leaf:
        v2 = u1.right
        assert v2 is not None
        if lex_less(u2.word, v2.word):
            return False
    return True


def is_super_ls_monomial(m: LieMonomial) -> bool:
    if m.is_leaf or is_ls_monomial(m):
        return True
    u1, u2 = m.left, m.right
    assert u1 is not None and u2 is not None
    return u1 == u2 and u1.parity == 1 and is_ls_monomial(u1)


@dataclass(frozen=True)
class BracketingResult:
    """A bracket arrangement together with the coefficient of its leading word
    (the word itself) in the associative expansion."""

    monomial: LieMonomial
    leading_coefficient: int


def standard_bracketing(u: AssocWord) -> BracketingResult:
    """The canonical monomial over a super-LS word.

    For an LS word the split is at the longest proper LS suffix; for
    ``v + v`` the bracket is ``[std(v), std(v)]`` with leading coefficient 2.
    """
    if u.is_empty:
        raise WordError("the empty word is not eligible")
    if len(u) == 1:
        return BracketingResult(leaf(u.alphabet, u.indices[0]), 1)
    if is_ls_word(u):
        for i in range(1, len(u)):
            if is_ls_word(u[i:]):
                left = standard_bracketing(u[:i]).monomial
                right = standard_bracketing(u[i:]).monomial
                return BracketingResult(node(left, right), 1)
        raise NotLyndonError(f"no LS suffix found in {u}")  # unreachable for LS input
    n = len(u)
    half = u[: n // 2]
    if n % 2 == 0 and half.indices == u[n // 2:].indices and half.parity == 1 \
            and is_ls_word(half):
        m = standard_bracketing(half).monomial
        return BracketingResult(node(m, m), 2)
    raise NotLyndonError(f"{u} is not a super-Lyndon-Shirshov word")


# A skeleton is a nested tuple ('leaf', atom_pos) | ('node', lt, rt) over the
# atom sequence of a special bracketing.

def special_bracketing_skeleton(
    u: AssocWord, v: AssocWord, a: AssocWord, b: AssocWord,
) -> tuple[tuple, list[AssocWord], int]:
    """Bracket skeleton of ``u = a + v + b`` treating ``v`` as one atom.

    Returns ``(skeleton, atom_words, outside_coefficient)`` where the atom
    list holds the single-letter words of ``a`` and ``b`` and, at position
    ``len(a)``, the whole word ``v``; ``outside_coefficient`` is the product
    of the node factors (2 for each equal-odd node), not counting the leading
    coefficient of the bracketing of ``v`` itself.
    """
    if a + v + b != u:
        raise WordError(f"{u} does not factor as given a,v,b")
    if not is_super_ls_word(u):
        raise NotLyndonError(f"{u} is not a super-Lyndon-Shirshov word")
    if not is_super_ls_word(v):
        raise NotLyndonError(f"{v} is not a super-Lyndon-Shirshov word")

    alphabet = u.alphabet
    atoms: list[AssocWord] = [alphabet.letter(i) for i in a.indices]
    marker_pos = len(atoms)
    atoms.append(v)
    atoms.extend(alphabet.letter(i) for i in b.indices)
    m = len(atoms)

    span_cache: dict[tuple[int, int], AssocWord] = {}

    def span_word(i: int, j: int) -> AssocWord:
        key = (i, j)
        w = span_cache.get(key)
        if w is None:
            w = atoms[i]
            for t in range(i + 1, j):
                w = w + atoms[t]
            span_cache[key] = w
        return w

    # node condition, on the two concatenations: the leading coefficient of
    # [P,Q] at word LR is c_L*c_R when LR > RL, and c_L*c_R*(1-(-1)^{|L||R|})
    # when LR == RL (powers of a common word), which survives only when both
    # parities are odd
    def allowed(i: int, k: int, j: int) -> int:
        lw, rw = span_word(i, k), span_word(k, j)
        cat_lr = lw + rw
        cat_rl = rw + lw
        if cat_lr.indices == cat_rl.indices:
            return 2 if (lw.parity == 1 and rw.parity == 1) else 0
        return 1 if lex_less(cat_rl, cat_lr) else 0

    # minimize the leading coefficient (product of node factors); among equal
    # coefficients take the smallest split point, for determinism
    best: dict[tuple[int, int], "tuple[int, int] | None"] = {}

    def solve(i: int, j: int) -> "tuple[int, int] | None":
        if j - i == 1:
            return (1, -1)
        key = (i, j)
        if key in best:
            return best[key]
        winner = None
        for k in range(i + 1, j):
            factor = allowed(i, k, j)
            if not factor:
                continue
            left = solve(i, k)
            right = solve(k, j)
            if left is None or right is None:
                continue
            cost = factor * left[0] * right[0]
            if winner is None or cost < winner[0]:
                winner = (cost, k)
        best[key] = winner
        return winner

    def build(i: int, j: int) -> tuple:
        if j - i == 1:
            return ("leaf", i)
        _, k = best[(i, j)]
        return ("node", build(i, k), build(k, j))

    top = solve(0, m)
    if top is None:
        raise BracketingError(f"no bracket arrangement of {u} around {v}")
    skeleton = build(0, m)
    return skeleton, atoms, top[0]


def special_bracketing(u: AssocWord, v: AssocWord, a: AssocWord, b: AssocWord,
                       ) -> BracketingResult:
    """A bracketing of ``u = a + v + b`` containing the standard bracketing of
    ``v`` as a sub-monomial, with leading word ``u``."""
    if a.is_empty and b.is_empty:
        return standard_bracketing(u)
    skeleton, atoms, outside = special_bracketing_skeleton(u, v, a, b)
    inner = standard_bracketing(v)

    def realize(sk: tuple) -> LieMonomial:
        if sk[0] == "leaf":
            word = atoms[sk[1]]
            if len(word) == 1:
                return leaf(word.alphabet, word.indices[0])
            return inner.monomial
        return node(realize(sk[1]), realize(sk[2]))

    return BracketingResult(realize(skeleton), outside * inner.leading_coefficient)


def enumerate_super_ls_words(
    alphabet: Alphabet, max_len: int, weights: "tuple[int, ...] | None" = None,
) -> list[AssocWord]:
    """All super-LS words of length (or total letter weight) at most the bound,
    sorted by deglex.

    ``weights`` assigns each generator a positive integer weight; by default
    every letter weighs 1 and the bound is the plain word length.
    """
    if max_len < 1:
        raise WordError("max_len must be at least 1")
    if weights is None:
        weights = (1,) * alphabet.size
    if len(weights) != alphabet.size or any(w < 1 for w in weights):
        raise WordError("weights must be positive, one per generator")

    found: list[AssocWord] = []
    indices = list(range(alphabet.size))

    def grow(prefix: list[int], weight: int) -> None:
        if prefix:
            w = AssocWord(alphabet, prefix)
            if is_super_ls_word(w):
                found.append(w)
        for i in indices:
            if weight + weights[i] <= max_len:
                prefix.append(i)
                grow(prefix, weight + weights[i])
                prefix.pop()

    grow([], 0)
    found.sort(key=lambda w: w.deglex_key)
    return found


def word_weight(u: AssocWord, weights: tuple[int, ...]) -> int:
    return sum(weights[i] for i in u.indices)


def all_bracketings(u: AssocWord) -> list[LieMonomial]:
    """Every bracket arrangement of a nonempty word (Catalan many); test oracle."""
    if u.is_empty:
        raise WordError("the empty word has no bracketings")

    def trees(i: int, j: int) -> list[LieMonomial]:
        if j - i == 1:
            return [leaf(u.alphabet, u.indices[i])]
        out: list[LieMonomial] = []
        for k in range(i + 1, j):
            for lt, rt in product(trees(i, k), trees(k, j)):
                out.append(node(lt, rt))
        return out

    return trees(0, len(u))
