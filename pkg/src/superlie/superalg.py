"""Finite-dimensional Lie superalgebras given by structure constants:
validation, HNN-extension presentations, embedding checks, derivation
extension along a free generating set, and the two-generator embedding
construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product

from .errors import StructureError, UnexpectedAmbiguityError
from .gsb import (
    CompletionLog,
    CompositionReport,
    RelationSet,
    check_triviality,
    complete,
    find_ambiguities,
    irreducible_words,
    lie_composition,
)
from .liepoly import LiePoly, leading_term, reduce, superbracket
from .lyndon import enumerate_super_ls_words, standard_bracketing, word_weight
from .words import Alphabet, AssocWord, LieMonomial, leaf, node


class StructureAlgebra:
    """A Lie superalgebra presented by a graded basis and a sparse table of
    structure constants, stored antisymmetrically completed."""

    __slots__ = ("alphabet", "alpha", "field")

    def __init__(self, alphabet: Alphabet, alpha: dict, field):
        self.alphabet = alphabet
        self.alpha = {k: v for k, v in alpha.items() if v != 0}
        self.field = field

    @classmethod
    def from_entries(cls, alphabet: Alphabet, entries, field) -> "StructureAlgebra":
        """Build from explicitly listed brackets ``(i, j) -> {k: coeff}``.

        The missing orientation of each pair is filled in by graded
        antisymmetry; listing both orientations inconsistently is an error.
        """
        given: dict[tuple[int, int], dict[int, object]] = {}
        for (i, j), values in entries:
            if (i, j) in given:
                raise StructureError(
                    f"bracket [{alphabet.names[i]},{alphabet.names[j]}] listed twice")
            given[(i, j)] = dict(values)
        alpha: dict[tuple[int, int, int], object] = {}
        parities = alphabet.parities
        for (i, j), values in given.items():
            sign = -1 if (parities[i] and parities[j]) else 1
            if (j, i) in given and (j, i) != (i, j):
                mirror = given[(j, i)]
                keys = set(values) | set(mirror)
                for k in keys:
                    lhs = mirror.get(k, field.zero())
                    rhs = values.get(k, field.zero()) * (-sign)
                    if lhs != rhs:
                        raise StructureError(
                            f"brackets [{alphabet.names[i]},{alphabet.names[j]}] and "
                            f"[{alphabet.names[j]},{alphabet.names[i]}] violate graded "
                            "antisymmetry")
            for k, coeff in values.items():
                if coeff == 0:
                    continue
                alpha[(i, j, k)] = coeff
                if (j, i) not in given and i != j:
                    alpha[(j, i, k)] = coeff * (-sign)
        return cls(alphabet, alpha, field)

    @property
    def dim(self) -> int:
        return self.alphabet.size

    def coeff(self, i: int, j: int, k: int):
        return self.alpha.get((i, j, k), self.field.zero())

    def bracket_row(self, i: int, j: int) -> dict[int, object]:
        out = {}
        for k in range(self.dim):
            c = self.alpha.get((i, j, k))
            if c is not None:
                out[k] = c
        return out


@dataclass(frozen=True)
class SubalgebraSpec:
    """Subset of the basis spanning a graded subalgebra."""

    members: tuple[int, ...]


@dataclass(frozen=True)
class DerivationSpec:
    """Homogeneous derivation on a subalgebra, by images of its basis."""

    parity: int
    beta: dict  # (a_index, v_index) -> coeff

    def image_row(self, a: int, dim: int) -> dict[int, object]:
        out = {}
        for v in range(dim):
            c = self.beta.get((a, v))
            if c is not None and c != 0:
                out[v] = c
        return out


@dataclass
class ValidationReport:
    subject: str
    violations: list[str] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def render(self) -> str:
        if self.ok:
            return f"{self.subject}: ok"
        lines = [f"{self.subject}: {len(self.violations)} violation(s)"]
        lines.extend(f"  {v}" for v in self.violations)
        return "\n".join(lines)


def validate_structure(L: StructureAlgebra) -> ValidationReport:
    """Exhaustive check of parity homogeneity, graded antisymmetry, the
    structure-constant Jacobi identity, and the odd-square coherence."""
    report = ValidationReport("structure")
    names = L.alphabet.names
    parities = L.alphabet.parities
    n = L.dim
    for (i, j, k), c in sorted(L.alpha.items()):
        if (parities[i] + parities[j]) % 2 != parities[k]:
            report.violations.append(
                f"parity: [{names[i]},{names[j]}] has component {names[k]} "
                f"of wrong parity")
    for i in range(n):
        for j in range(n):
            sign = -1 if (parities[i] and parities[j]) else 1
            for k in range(n):
                lhs = L.coeff(j, i, k)
                rhs = L.coeff(i, j, k) * (-sign)
                if lhs != rhs:
                    report.violations.append(
                        f"antisymmetry fails at [{names[i]},{names[j]}] -> {names[k]}")
        if parities[i] == 0:
            for k in range(n):
                if L.coeff(i, i, k) != 0:
                    report.violations.append(
                        f"[{names[i]},{names[i]}] must vanish for even {names[i]}")
    for x in range(n):
        for y in range(n):
            sign = -1 if (parities[x] and parities[y]) else 1
            for z in range(n):
                for u in range(n):
                    total = L.field.zero()
                    for v in range(n):
                        total = total + L.coeff(y, z, v) * L.coeff(x, v, u)
                        total = total - L.coeff(x, y, v) * L.coeff(v, z, u)
                        total = total - sign * (L.coeff(x, z, v) * L.coeff(y, v, u))
                    if total != 0:
                        report.violations.append(
                            f"Jacobi fails at ({names[x]},{names[y]},{names[z]}) "
                            f"-> {names[u]}")
    for x in range(n):
        if parities[x] == 1:
            for u in range(n):
                total = L.field.zero()
                for v in range(n):
                    total = total + L.coeff(x, x, v) * L.coeff(x, v, u)
                if total != 0:
                    report.violations.append(
                        f"odd square coherence fails at {names[x]} -> {names[u]}")
    return report


def validate_subalgebra(L: StructureAlgebra, A: SubalgebraSpec) -> ValidationReport:
    report = ValidationReport("subalgebra")
    names = L.alphabet.names
    members = set(A.members)
    for a in A.members:
        if not 0 <= a < L.dim:
            report.violations.append(f"member index {a} out of range")
            return report
    for a in A.members:
        for b in A.members:
            for v in range(L.dim):
                if v not in members and L.coeff(a, b, v) != 0:
                    report.violations.append(
                        f"not closed: [{names[a]},{names[b]}] has component "
                        f"{names[v]} outside the subalgebra")
    return report


def validate_derivation(L: StructureAlgebra, A: SubalgebraSpec,
                        d: DerivationSpec) -> ValidationReport:
    """Check parity homogeneity of the images and the derivation condition
    on all pairs of subalgebra basis elements."""
    report = ValidationReport("derivation")
    names = L.alphabet.names
    parities = L.alphabet.parities
    members = set(A.members)
    for (a, v), c in sorted(d.beta.items()):
        if c == 0:
            continue
        if a not in members:
            report.violations.append(f"image given for {names[a]} outside the subalgebra")
            continue
        if (parities[a] + d.parity) % 2 != parities[v]:
            report.violations.append(
                f"parity: d({names[a]}) has component {names[v]} of wrong parity")

    def beta(a: int, v: int):
        return d.beta.get((a, v), L.field.zero())

    for a in A.members:
        sign = -1 if (d.parity and parities[a]) else 1
        for b in A.members:
            for u in range(L.dim):
                lhs = L.field.zero()
                for c in A.members:
                    lhs = lhs + L.coeff(a, b, c) * beta(c, u)
                rhs = L.field.zero()
                for v in range(L.dim):
                    rhs = rhs + beta(a, v) * L.coeff(v, b, u)
                    rhs = rhs + sign * (beta(b, v) * L.coeff(a, v, u))
                if lhs != rhs:
                    report.violations.append(
                        f"derivation condition fails at ({names[a]},{names[b]}) "
                        f"-> {names[u]}")
    return report


def ad_derivation(L: StructureAlgebra, A: SubalgebraSpec, z: int) -> DerivationSpec:
    """The inner derivation b -> [z, b] restricted to the subalgebra."""
    beta = {}
    for a in A.members:
        for v in range(L.dim):
            c = L.coeff(z, a, v)
            if c != 0:
                beta[(a, v)] = c
    return DerivationSpec(parity=L.alphabet.parities[z], beta=beta)


@dataclass
class Presentation:
    """Generators and monic relations; kind is one of ``structure``, ``hnn``
    or ``two_gen``.  The name fields record the distinguished symbols."""

    alphabet: Alphabet
    relations: RelationSet
    kind: str
    field: object
    base_names: tuple[str, ...]
    sub_names: tuple[str, ...] = ()
    t_name: "str | None" = None
    a_name: "str | None" = None
    b_name: "str | None" = None
    derivation_parity: "int | None" = None
    parity_assignment: "tuple[int, int, int] | None" = None
    parity_assignments: "tuple[tuple[int, int, int], ...]" = ()

    @property
    def t_rank(self) -> "int | None":
        return None if self.t_name is None else self.alphabet.rank(self.t_name)


def _fresh_name(base: str, taken) -> str:
    name = base
    while name in taken:
        name += "_"
    return name


def _letter_poly(alphabet: Alphabet, index: int, unit) -> LiePoly:
    return LiePoly(alphabet, {leaf(alphabet, index): unit})


def _structure_relations(L: StructureAlgebra, alphabet: Alphabet,
                         rank_map: dict[int, int]) -> list[LiePoly]:
    """Relations [x,y] - sum(alpha) for x > y, and the monic halves of
    [x,x] - sum(alpha) for odd x, over a target alphabet containing X."""
    unit = L.field.one()
    rels = []
    old_order = sorted(range(L.dim), key=lambda i: rank_map[i])
    for bi in range(len(old_order)):
        for ai in range(bi + 1, len(old_order)):
            y, x = old_order[bi], old_order[ai]
            m = node(leaf(alphabet, rank_map[x]), leaf(alphabet, rank_map[y]))
            r = LiePoly(alphabet, {m: unit})
            for k, c in L.bracket_row(x, y).items():
                r = r - _letter_poly(alphabet, rank_map[k], c)
            rels.append(r)
    for x in range(L.dim):
        if L.alphabet.parities[x] == 1:
            m = node(leaf(alphabet, rank_map[x]), leaf(alphabet, rank_map[x]))
            r = LiePoly(alphabet, {m: unit})
            for k, c in L.bracket_row(x, x).items():
                r = r - _letter_poly(alphabet, rank_map[k], c)
            rels.append(r.monic())
    return rels


def structure_presentation(L: StructureAlgebra) -> Presentation:
    """Presentation of ``L`` itself by its structure constants."""
    report = validate_structure(L)
    if not report.ok:
        raise StructureError(report.render())
    rank_map = {i: i for i in range(L.dim)}
    rels = _structure_relations(L, L.alphabet, rank_map)
    return Presentation(
        alphabet=L.alphabet,
        relations=RelationSet(rels, alphabet=L.alphabet),
        kind="structure",
        field=L.field,
        base_names=L.alphabet.names,
    )


def hnn_presentation(L: StructureAlgebra, A: SubalgebraSpec,
                     d: DerivationSpec) -> Presentation:
    """The presentation with a fresh symbol ``t`` of degree |d| and relations
    [x,y], [x,x] (odd x), and [t,a] = d(a); order of generators is
    subalgebra < rest < t, each block in input order."""
    for rep in (validate_structure(L), validate_subalgebra(L, A),
                validate_derivation(L, A, d)):
        if not rep.ok:
            raise StructureError(rep.render())
    members = list(A.members)
    rest = [i for i in range(L.dim) if i not in set(members)]
    order = members + rest
    t_name = _fresh_name("t", L.alphabet.names)
    names = tuple(L.alphabet.names[i] for i in order) + (t_name,)
    parities = tuple(L.alphabet.parities[i] for i in order) + (d.parity,)
    alphabet = Alphabet(names, parities)
    rank_map = {old: new for new, old in enumerate(order)}
    t_rank = alphabet.size - 1

    rels = _structure_relations(L, alphabet, rank_map)
    unit = L.field.one()
    for a in members:
        m = node(leaf(alphabet, t_rank), leaf(alphabet, rank_map[a]))
        r = LiePoly(alphabet, {m: unit})
        for v, c in d.image_row(a, L.dim).items():
            r = r - _letter_poly(alphabet, rank_map[v], c)
        rels.append(r)
    return Presentation(
        alphabet=alphabet,
        relations=RelationSet(rels, alphabet=alphabet),
        kind="hnn",
        field=L.field,
        base_names=tuple(L.alphabet.names[i] for i in order),
        sub_names=tuple(L.alphabet.names[i] for i in members),
        t_name=t_name,
        derivation_parity=d.parity,
    )


FAMILY_ORDER = ("xy.yz", "xy.yy", "xx.xy", "ta.ab", "ta.aa")


@dataclass
class SurveyEntry:
    family: str
    report: CompositionReport


@dataclass
class SurveyReport:
    entries: list[SurveyEntry]

    def by_family(self, family: str) -> list[SurveyEntry]:
        return [e for e in self.entries if e.family == family]

    def render(self) -> str:
        lines = [f"composition survey: {len(self.entries)} ambiguities"]
        for family in FAMILY_ORDER:
            members = self.by_family(family)
            trivial = sum(1 for e in members if e.report.trivial)
            lines.append(f"family {family}: {len(members)} instance(s), "
                         f"{trivial} trivial, {len(members) - trivial} nontrivial")
        for e in self.entries:
            rep = e.report
            lead = "0" if rep.leading_word_of_value is None \
                else str(rep.leading_word_of_value)
            lines.append(
                f"  {e.family} w={rep.w} trivial={'yes' if rep.trivial else 'no'} "
                f"value-lead={lead}")
        return "\n".join(lines)


def _classify_family(P: Presentation, fl: AssocWord, gl: AssocWord,
                     kind: str) -> "str | None":
    if kind != "intersection" or len(fl) != 2 or len(gl) != 2:
        return None
    t = P.t_rank

    def pattern(w: AssocWord) -> str:
        if t is not None and w.indices[0] == t:
            return "ta"
        if w.indices[0] == w.indices[1]:
            return "xx"
        return "xy"

    pf, pg = pattern(fl), pattern(gl)
    if pf == "xy" and pg == "xy":
        return "xy.yz"
    if pf == "xy" and pg == "xx":
        return "xy.yy"
    if pf == "xx" and pg == "xy":
        return "xx.xy"
    if pf == "ta" and pg == "xy":
        return "ta.ab"
    if pf == "ta" and pg == "xx":
        return "ta.aa"
    return None


def composition_survey(P: Presentation, max_deg: "int | None" = None) -> SurveyReport:
    """Compute every composition of the presentation, classified into the five
    overlap families of a structure-constant presentation.

    An ambiguity outside the five families raises
    :class:`UnexpectedAmbiguityError`.
    """
    S = P.relations
    bound = max_deg if max_deg is not None else 2 * S.max_lead_length() - 1
    entries: list[SurveyEntry] = []
    for amb in find_ambiguities(S, bound):
        fl = S[amb.i].leading_word()
        gl = S[amb.j].leading_word()
        family = _classify_family(P, fl, gl, amb.kind)
        if family is None:
            raise UnexpectedAmbiguityError(
                f"ambiguity at w={amb.w} between leads {fl} and {gl} "
                f"({amb.kind}) is outside the expected families")
        comp = lie_composition(S, amb)
        rep = check_triviality(comp, amb.w, S, pair=(amb.i, amb.j), kind=amb.kind)
        entries.append(SurveyEntry(family, rep))
    order = {f: k for k, f in enumerate(FAMILY_ORDER)}
    entries.sort(key=lambda e: (order[e.family], e.report.w.deglex_key,
                                e.report.pair))
    return SurveyReport(entries)


@dataclass
class EmbeddingReport:
    completed: RelationSet
    log: CompletionLog
    added_leads: list[AssocWord]
    min_added_length: "int | None"
    letters_irreducible: bool

    @property
    def ok(self) -> bool:
        degree_ok = self.min_added_length is None or self.min_added_length >= 2
        return degree_ok and self.letters_irreducible

    def render(self) -> str:
        added = ", ".join(str(w) for w in self.added_leads) or "none"
        return "\n".join([
            f"completion added relations: {added}",
            f"single letters irreducible: {'yes' if self.letters_irreducible else 'no'}",
            f"embedding check: {'PASS' if self.ok else 'FAIL'}",
        ])


def embedding_check(P: Presentation, max_deg: int) -> EmbeddingReport:
    """Complete the presentation and verify the embedding evidence: every
    added relation has degree at least 2 and every generator letter stays
    irreducible."""
    completed, log = complete(P.relations, max_deg)
    added = log.added_leads()
    min_added = min((len(w) for w in added), default=None)
    letters_ok = all(len(w) >= 2 for w in completed.leading_words())
    return EmbeddingReport(completed, log, added, min_added, letters_ok)


class _RowSpace:
    """Row echelon span of Lie polynomials, keyed by leading monomial."""

    def __init__(self):
        self.rows: dict[LieMonomial, LiePoly] = {}

    def residual(self, p: LiePoly) -> LiePoly:
        while not p.is_zero:
            m = p.leading_monomial()
            row = self.rows.get(m)
            if row is None:
                return p
            p = p - row.scale(p.terms[m])
        return p

    def add(self, p: LiePoly) -> "LiePoly | None":
        r = self.residual(p)
        if r.is_zero:
            return None
        r = r.scale(1 / r.terms[r.leading_monomial()])
        self.rows[r.leading_monomial()] = r
        return r

    def contains(self, p: LiePoly) -> bool:
        return self.residual(p).is_zero

    @property
    def rank(self) -> int:
        return len(self.rows)


def _homogeneous_degree(p: LiePoly) -> int:
    lengths = {len(m.word) for m in p.terms}
    if len(lengths) != 1:
        raise StructureError(f"element {p} is not degree-homogeneous")
    return lengths.pop()


def _homogeneous_parity(p: LiePoly) -> int:
    parities = {m.parity for m in p.terms}
    if len(parities) != 1:
        raise StructureError(f"element {p} is not parity-homogeneous")
    return parities.pop()


def free_basis_check(elems: list[LiePoly], max_deg: int) -> "bool | None":
    """Whether the given homogeneous elements generate a subalgebra whose
    per-degree dimensions match a free Lie superalgebra on abstract
    generators of the same degrees and parities.

    Returns ``None`` when the bound is too small to test any bracket.
    """
    if not elems:
        raise StructureError("need at least one element")
    degrees = [_homogeneous_degree(p) for p in elems]
    parities = [_homogeneous_parity(p) for p in elems]
    if max_deg < max(degrees):
        return None

    # abstract side: super-LS word counts over a weighted alphabet
    abstract = Alphabet(tuple(f"z{i + 1}" for i in range(len(elems))),
                        tuple(parities))
    weights = tuple(degrees)
    abstract_counts: dict[int, int] = {}
    for w in enumerate_super_ls_words(abstract, max_deg, weights=weights):
        wt = word_weight(w, weights)
        abstract_counts[wt] = abstract_counts.get(wt, 0) + 1

    # concrete side: left-normed closure with rank tracking per degree
    spaces: dict[int, _RowSpace] = {}
    queue: list[tuple[int, LiePoly]] = []
    for deg, p in zip(degrees, elems):
        space = spaces.setdefault(deg, _RowSpace())
        stored = space.add(p)
        if stored is not None:
            queue.append((deg, stored))
    qi = 0
    while qi < len(queue):
        deg, p = queue[qi]
        qi += 1
        for gdeg, g in zip(degrees, elems):
            total = deg + gdeg
            if total > max_deg:
                continue
            q = superbracket(p, g)
            if q.is_zero:
                continue
            space = spaces.setdefault(total, _RowSpace())
            stored = space.add(q)
            if stored is not None:
                queue.append((total, stored))

    for n in range(1, max_deg + 1):
        concrete = spaces[n].rank if n in spaces else 0
        if concrete != abstract_counts.get(n, 0):
            return False
    if not any(d1 + d2 <= max_deg for d1 in degrees for d2 in degrees):
        return None
    return True


@dataclass
class DerivationExtension:
    """Leibniz extension of a map on free generators to their subalgebra."""

    abstract_alphabet: Alphabet
    weights: tuple[int, ...]
    basis: list[LieMonomial]                 # abstract super-LS monomials
    elements: dict[LieMonomial, LiePoly]     # abstract monomial -> concrete value
    images: dict[LieMonomial, LiePoly]       # abstract monomial -> derivative

    def derivative(self, p: LiePoly) -> LiePoly:
        """Linear extension of the derivative to abstract polynomials."""
        out = None
        for m, c in p.terms.items():
            term = self.images[m].scale(c)
            out = term if out is None else out + term
        if out is None:
            raise StructureError("derivative of the zero polynomial is ambiguous")
        return out


def extend_derivation(Z: list[LiePoly], images: list[LiePoly], max_deg: int,
                      parity: "int | None" = None) -> DerivationExtension:
    """Extend ``z_i -> images[i]`` by the Leibniz rule along the standard
    bracketing of each abstract basis element of the subalgebra generated by
    ``Z``, and verify the extension is a derivation on all bounded pairs.

    Inconsistency (signalling non-free generators or a parity mismatch)
    raises :class:`StructureError`.
    """
    if len(Z) != len(images) or not Z:
        raise StructureError("need matching nonempty generator and image lists")
    ambient = Z[0].alphabet
    degrees = [_homogeneous_degree(z) for z in Z]
    parities = [_homogeneous_parity(z) for z in Z]
    d_parity = parity
    for z_par, img in zip(parities, images):
        if img.is_zero:
            continue
        p = (_homogeneous_parity(img) - z_par) % 2
        if d_parity is None:
            d_parity = p
        elif d_parity != p:
            raise StructureError("images do not define a homogeneous map")
    if d_parity is None:
        d_parity = 0

    abstract = Alphabet(tuple(f"z{i + 1}" for i in range(len(Z))), tuple(parities))
    weights = tuple(degrees)
    basis_words = enumerate_super_ls_words(abstract, max_deg, weights=weights)
    basis = [standard_bracketing(w).monomial for w in basis_words]

    elements: dict[LieMonomial, LiePoly] = {}
    derivs: dict[LieMonomial, LiePoly] = {}

    def element(m: LieMonomial) -> LiePoly:
        got = elements.get(m)
        if got is None:
            if m.is_leaf:
                got = Z[m.word.indices[0]]
            else:
                got = superbracket(element(m.left), element(m.right))
            elements[m] = got
        return got

    def deriv(m: LieMonomial) -> LiePoly:
        got = derivs.get(m)
        if got is None:
            if m.is_leaf:
                got = images[m.word.indices[0]]
            else:
                sign = -1 if (d_parity and m.left.parity) else 1
                got = superbracket(deriv(m.left), element(m.right)) + \
                    superbracket(element(m.left), deriv(m.right)).scale(sign)
            derivs[m] = got
        return got

    for m in basis:
        element(m)
        deriv(m)

    ext = DerivationExtension(abstract, weights, basis, elements,
                              {m: derivs[m] for m in basis})

    # the Leibniz rule must hold for every bounded pair, not only along the
    # bracketing used to define the extension
    for m1 in basis:
        w1 = word_weight(m1.word, weights)
        for m2 in basis:
            if w1 + word_weight(m2.word, weights) > max_deg:
                continue
            product_abstract = superbracket(_monomial_unit(abstract, m1),
                                            _monomial_unit(abstract, m2))
            if product_abstract.is_zero:
                via_basis = None
            else:
                via_basis = ext.derivative(product_abstract)
            sign = -1 if (d_parity and m1.parity) else 1
            direct = superbracket(derivs[m1], elements[m2]) + \
                superbracket(elements[m1], derivs[m2]).scale(sign)
            if via_basis is None:
                if not direct.is_zero:
                    raise StructureError(
                        f"inconsistent extension at [{m1},{m2}]: generators are "
                        "not free or parities mismatch")
            elif via_basis != direct:
                raise StructureError(
                    f"inconsistent extension at [{m1},{m2}]: generators are "
                    "not free or parities mismatch")
    return ext


def _monomial_unit(alphabet: Alphabet, m: LieMonomial) -> LiePoly:
    from fractions import Fraction
    return LiePoly(alphabet, {m: Fraction(1)})


def two_generator_presentation(L: StructureAlgebra, n_max: int,
                               max_deg: "int | None" = None,
                               parities: "tuple[int, int] | None" = None,
                               ) -> Presentation:
    """Presentation of the two-generator algebra containing ``L``: the free
    product of ``L`` with free generators a, b, plus a stabilizing symbol t
    with [t,a] = b and [t, [b^n, a]] = c_n for the basis elements c_n of L.

    Parities of (a, b, t) must satisfy |b| = |t|+|a| and
    |c_n| = |t| + n|b| + |a|; all consistent assignments are searched and
    recorded, honouring a requested (|a|, |b|) when one is given.
    """
    report = validate_structure(L)
    if not report.ok:
        raise StructureError(report.render())
    k = L.dim
    if k > n_max:
        raise StructureError(
            f"basis has {k} elements but only {n_max} stabilizer relations allowed")
    if max_deg is not None and k + 2 > max_deg:
        raise StructureError(
            f"max_deg {max_deg} cannot express the degree-{k + 2} relation")

    c_parities = L.alphabet.parities
    consistent = []
    for pa, pb, pt in product((0, 1), repeat=3):
        if (pa + pt) % 2 != pb:
            continue
        if any((pt + n * pb + pa) % 2 != c_parities[n - 1] for n in range(1, k + 1)):
            continue
        consistent.append((pa, pb, pt))
    if parities is not None:
        consistent = [c for c in consistent if (c[0], c[1]) == tuple(parities)]
    if not consistent:
        raise StructureError(
            "no parity assignment of (a, b, t) satisfies |b| = |t|+|a| and "
            "|c_n| = |t| + n|b| + |a| for all n")
    pa, pb, pt = consistent[0]

    taken = set(L.alphabet.names)
    a_name = _fresh_name("a", taken)
    taken.add(a_name)
    b_name = _fresh_name("b", taken)
    taken.add(b_name)
    t_name = _fresh_name("t", taken)
    names = L.alphabet.names + (a_name, b_name, t_name)
    parities_all = L.alphabet.parities + (pa, pb, pt)
    alphabet = Alphabet(names, parities_all)
    a_rank, b_rank, t_rank = k, k + 1, k + 2

    rank_map = {i: i for i in range(k)}
    rels = _structure_relations(L, alphabet, rank_map)
    unit = L.field.one()
    rels.append(LiePoly(alphabet, {node(leaf(alphabet, t_rank),
                                        leaf(alphabet, a_rank)): unit})
                - _letter_poly(alphabet, b_rank, unit))
    for n in range(1, k + 1):
        m = leaf(alphabet, a_rank)
        for _ in range(n):
            m = node(leaf(alphabet, b_rank), m)
        rels.append(LiePoly(alphabet, {node(leaf(alphabet, t_rank), m): unit})
                    - _letter_poly(alphabet, n - 1, unit))
    return Presentation(
        alphabet=alphabet,
        relations=RelationSet(rels, alphabet=alphabet),
        kind="two_gen",
        field=L.field,
        base_names=L.alphabet.names,
        t_name=t_name,
        a_name=a_name,
        b_name=b_name,
        parity_assignment=(pa, pb, pt),
        parity_assignments=tuple(consistent),
    )


@dataclass
class MembershipReport:
    completed: RelationSet
    span_rank: int
    b_in_span: bool
    c_in_span: dict[str, bool]
    c_independent: bool

    @property
    def ok(self) -> bool:
        return self.b_in_span and all(self.c_in_span.values()) and self.c_independent

    def render(self) -> str:
        lines = [f"subalgebra generated by {{a, t}}: rank {self.span_rank}"]
        lines.append(f"b in span: {'yes' if self.b_in_span else 'no'}")
        for name in sorted(self.c_in_span):
            lines.append(f"{name} in span: {'yes' if self.c_in_span[name] else 'no'}")
        lines.append(f"base generators independent: "
                     f"{'yes' if self.c_independent else 'no'}")
        lines.append(f"membership check: {'PASS' if self.ok else 'FAIL'}")
        return "\n".join(lines)


def two_gen_membership_check(P: Presentation, max_deg: int) -> MembershipReport:
    """Verify that b and every reachable c_n lie in the subalgebra generated
    by {a, t} in the completed quotient, and that the c_n stay independent."""
    if P.kind != "two_gen":
        raise StructureError("presentation is not a two-generator construction")
    k = len(P.base_names)
    if k + 2 > max_deg:
        raise StructureError(
            f"degree bound {max_deg} is too small: c_{k} needs degree {k + 2}")
    completed, _ = complete(P.relations, max_deg)
    unit = P.field.one()
    alphabet = P.alphabet

    def nf(p: LiePoly) -> LiePoly:
        return reduce(p, completed)

    a_poly = nf(_letter_poly(alphabet, alphabet.rank(P.a_name), unit))
    t_poly = nf(_letter_poly(alphabet, alphabet.rank(P.t_name), unit))
    span = _RowSpace()
    queue = []
    for p in (a_poly, t_poly):
        stored = span.add(p)
        if stored is not None:
            queue.append(stored)
    qi = 0
    while qi < len(queue):
        p = queue[qi]
        qi += 1
        if p.max_word_length() + 1 > max_deg:
            continue
        for g in (a_poly, t_poly):
            q = nf(superbracket(p, g))
            if q.is_zero:
                continue
            stored = span.add(q)
            if stored is not None:
                queue.append(stored)

    b_in = span.contains(nf(_letter_poly(alphabet, alphabet.rank(P.b_name), unit)))
    c_in: dict[str, bool] = {}
    c_space = _RowSpace()
    independent_count = 0
    for name in P.base_names:
        p = nf(_letter_poly(alphabet, alphabet.rank(name), unit))
        c_in[name] = span.contains(p)
        if not p.is_zero and c_space.add(p) is not None:
            independent_count += 1
    return MembershipReport(
        completed=completed,
        span_rank=span.rank,
        b_in_span=b_in,
        c_in_span=c_in,
        c_independent=independent_count == k,
    )
