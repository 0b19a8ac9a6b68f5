"""Compositions of monic relations, triviality checking, degree-bounded
Shirshov completion, and irreducible-word bases.

Overlap ambiguities are only formed at super-Lyndon-Shirshov overlap words:
the Lie composition needs a bracketing of the overlap word relative to each
relation, and those exist only for super-LS words.  Candidate overlaps whose
word fails the test (for example ``xx`` against itself at ``xxx``) are
skipped; they carry no Lie-side critical pair.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    BracketingError,
    NotCompletedError,
    RelationError,
    ResourceLimitError,
)
from .liepoly import (
    AssocPoly,
    LiePoly,
    leading_term,
    reduce,
    relative_bracketing_poly,
)
from .lyndon import enumerate_super_ls_words, is_super_ls_word
from .words import Alphabet, AssocWord, deglex_less, find_occurrences


class RelationSet:
    """Deduplicated monic relations with super-LS leading words, sorted by
    deglex of the leading word.  ``completed_to`` records the degree bound of
    the last successful completion, if any."""

    __slots__ = ("alphabet", "relations", "completed_to")

    def __init__(self, relations, alphabet: "Alphabet | None" = None,
                 completed_to: "int | None" = None):
        rels = []
        seen = set()
        for r in relations:
            if r.is_zero:
                raise RelationError("zero relation")
            word, coeff = leading_term(r)
            if coeff != 1:
                r = r.monic()
                word, coeff = leading_term(r)
            if not is_super_ls_word(word):
                raise RelationError(f"leading word {word} is not super-Lyndon-Shirshov")
            key = tuple(sorted(((m.word.indices, str(c)) for m, c in r.terms.items())))
            if key in seen:
                continue
            seen.add(key)
            rels.append(r)
        if alphabet is None:
            if not rels:
                raise RelationError("empty relation set needs an explicit alphabet")
            alphabet = rels[0].alphabet
        for r in rels:
            if r.alphabet != alphabet:
                raise RelationError("relations over different alphabets")
        rels.sort(key=lambda r: r.leading_word().deglex_key)
        self.alphabet = alphabet
        self.relations = tuple(rels)
        self.completed_to = completed_to

    def __iter__(self):
        return iter(self.relations)

    def __len__(self):
        return len(self.relations)

    def __getitem__(self, i: int) -> LiePoly:
        return self.relations[i]

    def leading_words(self) -> list[AssocWord]:
        return [r.leading_word() for r in self.relations]

    def max_lead_length(self) -> int:
        return max((len(w) for w in self.leading_words()), default=0)


@dataclass(frozen=True)
class Ambiguity:
    kind: str            # "intersection" | "inclusion"
    i: int               # index of f in the relation set
    j: int               # index of g
    w: AssocWord         # the overlap word
    a: AssocWord         # for inclusion: w = a + g_lead + b; unused otherwise
    b: AssocWord


def find_ambiguities(S: RelationSet, max_len: int) -> list[Ambiguity]:
    """All intersection and inclusion ambiguities with ``len(w) <= max_len``
    whose overlap word is super-LS, sorted by (deglex of w, kind, indices)."""
    leads = S.leading_words()
    empty = S.alphabet.empty_word()
    out: list[Ambiguity] = []
    for i, fl in enumerate(leads):
        for j, gl in enumerate(leads):
            # intersections: a proper suffix of f_lead equals a proper prefix of g_lead
            for q in range(1, min(len(fl), len(gl))):
                if fl.indices[len(fl) - q:] != gl.indices[:q]:
                    continue
                w = fl + gl[q:]
                if len(w) > max_len or not is_super_ls_word(w):
                    continue
                out.append(Ambiguity("intersection", i, j, w, empty, empty))
            # inclusions: g_lead occurs inside f_lead
            if i != j and len(gl) <= len(fl) and len(fl) <= max_len:
                for a, b in find_occurrences(gl, fl):
                    if a.is_empty and b.is_empty and leads[i] == leads[j]:
                        continue
                    out.append(Ambiguity("inclusion", i, j, fl, a, b))
    out.sort(key=lambda amb: (amb.w.deglex_key, amb.kind, amb.i, amb.j,
                              len(amb.a.indices)))
    return out


def lie_composition(S: RelationSet, amb: Ambiguity) -> LiePoly:
    """The composition polynomial of an ambiguity produced by
    :func:`find_ambiguities`; its leading word is deglex-below ``w``."""
    f = S[amb.i]
    g = S[amb.j]
    w = amb.w
    if amb.kind == "intersection":
        fl = f.leading_word()
        gl = g.leading_word()
        empty = S.alphabet.empty_word()
        wf = relative_bracketing_poly(w, f, empty, w[len(fl):])
        wg = relative_bracketing_poly(w, g, w[: len(w) - len(gl)], empty)
        comp = wf - wg
    elif amb.kind == "inclusion":
        comp = f - relative_bracketing_poly(w, g, amb.a, amb.b)
    else:
        raise RelationError(f"unknown ambiguity kind {amb.kind!r}")
    if not comp.is_zero and not deglex_less(comp.leading_word(), w):
        raise BracketingError(
            f"composition at {w} has leading word {comp.leading_word()}, not below {w}")
    return comp


def assoc_composition(f: AssocPoly, g: AssocPoly, w: AssocWord, kind: str,
                      a: "AssocWord | None" = None,
                      b: "AssocWord | None" = None) -> AssocPoly:
    """Associative composition ``fa - bg`` (intersection) or ``f - agb``
    (inclusion); cross-check oracle for :func:`lie_composition`."""
    fl, fc = f.leading_term()
    gl, gc = g.leading_term()
    if fc != 1 or gc != 1:
        raise RelationError("associative composition needs monic operands")
    empty = w.alphabet.empty_word()
    if kind == "intersection":
        suffix = w[len(fl):]
        prefix = w[: len(w) - len(gl)]
        if fl + suffix != w or prefix + gl != w:
            raise RelationError(f"{w} is not an overlap of {fl} and {gl}")
        return f.word_mul(empty, suffix) - g.word_mul(prefix, empty)
    if kind == "inclusion":
        if a is None or b is None or w != fl or a + gl + b != w:
            raise RelationError(f"{w} is not an inclusion of {gl} in {fl}")
        return f - g.word_mul(a, b)
    raise RelationError(f"unknown composition kind {kind!r}")


@dataclass
class CompositionReport:
    pair: tuple[int, int]
    w: AssocWord
    kind: str
    value: LiePoly
    remainder: LiePoly
    trivial: bool
    leading_word_of_value: "AssocWord | None"
    elimination_words: list[AssocWord] = field(default_factory=list)


def check_triviality(comp: LiePoly, w: AssocWord, relations,
                     pair: tuple[int, int] = (-1, -1),
                     kind: str = "intersection") -> CompositionReport:
    """Reduce a composition modulo the relations, recording every elimination
    word; trivial means zero remainder with all eliminations deglex-below w."""
    if comp.is_zero:
        return CompositionReport(pair, w, kind, comp, comp, True, None)
    lead = comp.leading_word()
    if not deglex_less(lead, w):
        return CompositionReport(pair, w, kind, comp, comp, False, lead)
    record: list = []
    remainder = reduce(comp, relations, record)
    words = [entry[0] for entry in record]
    trivial = remainder.is_zero and all(deglex_less(u, w) for u in words)
    return CompositionReport(pair, w, kind, comp, remainder, trivial, lead, words)


@dataclass
class CompletionLogEntry:
    pass_no: int
    w: AssocWord
    kind: str
    f_lead: AssocWord
    g_lead: AssocWord
    trivial: bool
    added_lead: "AssocWord | None"


@dataclass
class CompletionLog:
    entries: list[CompletionLogEntry] = field(default_factory=list)

    def added_leads(self) -> list[AssocWord]:
        return [e.added_lead for e in self.entries if e.added_lead is not None]

    def render(self) -> str:
        lines = []
        for e in self.entries:
            added = f" added={e.added_lead}" if e.added_lead is not None else ""
            lines.append(
                f"pass {e.pass_no}: w={e.w} kind={e.kind} "
                f"pair=({e.f_lead},{e.g_lead}) trivial={'yes' if e.trivial else 'no'}"
                f"{added}")
        if not lines:
            lines.append("no ambiguities")
        return "\n".join(lines)


def _interreduce(rels: list[LiePoly]) -> list[LiePoly]:
    current = sorted(rels, key=lambda r: r.leading_word().deglex_key)
    changed = True
    while changed:
        changed = False
        for i in range(len(current)):
            others = current[:i] + current[i + 1:]
            reduced = reduce(current[i], others)
            if reduced.is_zero:
                del current[i]
                changed = True
                break
            reduced = reduced.monic()
            if reduced != current[i]:
                current[i] = reduced
                current.sort(key=lambda r: r.leading_word().deglex_key)
                changed = True
                break
    return current


def complete(S: RelationSet, max_deg: int,
             max_relations: int = 10000) -> tuple[RelationSet, CompletionLog]:
    """Degree-bounded Shirshov completion.

    Repeatedly computes all compositions with overlap word of length at most
    ``max_deg`` in deglex order; every nontrivial one is fully reduced, made
    monic and adjoined, with the whole set inter-reduced after each pass.  On
    return every composition within the bound is trivial.
    """
    if S.relations and max_deg < S.max_lead_length():
        raise RelationError(
            f"max_deg {max_deg} is below the largest relation degree "
            f"{S.max_lead_length()}")
    rels = _interreduce(list(S.relations))
    log = CompletionLog()
    pass_no = 0
    while True:
        pass_no += 1
        base = RelationSet(rels, alphabet=S.alphabet)
        current = list(base.relations)
        added_any = False
        for amb in find_ambiguities(base, max_deg):
            comp = lie_composition(base, amb)
            rep = check_triviality(comp, amb.w, current,
                                   pair=(amb.i, amb.j), kind=amb.kind)
            added_lead = None
            if not rep.trivial:
                h = rep.remainder.monic()
                added_lead = h.leading_word()
                current = _interreduce(current + [h])
                if len(current) > max_relations:
                    raise ResourceLimitError(
                        f"completion exceeded {max_relations} relations")
                added_any = True
            log.entries.append(CompletionLogEntry(
                pass_no, amb.w, amb.kind,
                base[amb.i].leading_word(), base[amb.j].leading_word(),
                rep.trivial, added_lead))
        rels = current
        if not added_any:
            break
        if pass_no > max_relations:
            raise ResourceLimitError("completion did not stabilize")
    return RelationSet(rels, alphabet=S.alphabet, completed_to=max_deg), log


def irreducible_words(S: RelationSet, max_len: int) -> list[AssocWord]:
    """Super-LS words of length at most ``max_len`` containing no relation
    leading word; these index a linear basis of the quotient up to that degree."""
    if S.relations and (S.completed_to is None or S.completed_to < max_len):
        raise NotCompletedError(
            f"relation set is not completed to degree {max_len}")
    leads = S.leading_words()
    out = []
    for w in enumerate_super_ls_words(S.alphabet, max_len):
        if any(find_occurrences(lead, w) for lead in leads):
            continue
        out.append(w)
    return out
