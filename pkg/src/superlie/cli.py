"""Command line interface: algebra file ingestion, expression parsing, and
deterministic reports for the validation / composition / completion /
embedding workflows.

Exit codes: 0 success, 1 semantic failure, 2 parse failure, 3 resource bound.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .errors import (
    FieldError,
    NotCompletedError,
    ResourceLimitError,
    StructureError,
    SuperlieError,
)
from .fields import field_from_string
from .gsb import RelationSet, complete, irreducible_words
from .liepoly import LiePoly, expand, reduce, superbracket
from .lyndon import enumerate_super_ls_words, standard_bracketing
from .superalg import (
    DerivationSpec,
    Presentation,
    StructureAlgebra,
    SubalgebraSpec,
    ad_derivation,
    composition_survey,
    embedding_check,
    hnn_presentation,
    structure_presentation,
    two_gen_membership_check,
    two_generator_presentation,
    validate_derivation,
    validate_structure,
    validate_subalgebra,
)
from .words import Alphabet, leaf

EXIT_OK = 0
EXIT_SEMANTIC = 1
EXIT_PARSE = 2
EXIT_RESOURCE = 3


class CliParseFailure(Exception):
    pass


class CliSemanticFailure(Exception):
    pass


# ---------------------------------------------------------------------------
# algebra files


def _expect(cond: bool, message: str) -> None:
    if not cond:
        raise CliParseFailure(message)


def parse_algebra_data(data):
    """Build the in-memory model from decoded JSON; structural problems raise
    CliParseFailure, content problems raise CliSemanticFailure."""
    _expect(isinstance(data, dict), "top level must be an object")
    _expect("field" in data, "missing 'field'")
    _expect(isinstance(data["field"], str), "'field' must be a string")
    _expect("generators" in data, "missing 'generators'")
    _expect(isinstance(data["generators"], list) and data["generators"],
            "'generators' must be a nonempty list")
    names, parities = [], []
    for k, gen in enumerate(data["generators"]):
        _expect(isinstance(gen, dict) and "name" in gen and "parity" in gen,
                f"generators[{k}] must have 'name' and 'parity'")
        _expect(isinstance(gen["name"], str), f"generators[{k}].name must be a string")
        _expect(gen["parity"] in (0, 1), f"generators[{k}].parity must be 0 or 1")
        names.append(gen["name"])
        parities.append(gen["parity"])
    try:
        field = field_from_string(data["field"])
        alphabet = Alphabet(tuple(names), tuple(parities))
    except SuperlieError as exc:
        raise CliSemanticFailure(str(exc)) from None

    def parse_value(value, where: str) -> dict[int, object]:
        _expect(isinstance(value, list), f"{where} must be a list")
        out: dict[int, object] = {}
        for k, item in enumerate(value):
            _expect(isinstance(item, dict) and "coef" in item and "gen" in item,
                    f"{where}[{k}] must have 'coef' and 'gen'")
            _expect(isinstance(item["coef"], str),
                    f"{where}[{k}].coef must be an exact coefficient string")
            _expect(isinstance(item["gen"], str), f"{where}[{k}].gen must be a string")
            try:
                rank = alphabet.rank(item["gen"])
                coeff = field.parse(item["coef"])
            except SuperlieError as exc:
                raise CliSemanticFailure(f"{where}[{k}]: {exc}") from None
            if rank in out:
                raise CliSemanticFailure(f"{where}[{k}]: duplicate component")
            out[rank] = coeff
        return out

    entries = []
    brackets = data.get("brackets", [])
    _expect(isinstance(brackets, list), "'brackets' must be a list")
    for k, item in enumerate(brackets):
        _expect(isinstance(item, dict) and "left" in item and "right" in item
                and "value" in item,
                f"brackets[{k}] must have 'left', 'right' and 'value'")
        try:
            i = alphabet.rank(item["left"])
            j = alphabet.rank(item["right"])
        except SuperlieError as exc:
            raise CliSemanticFailure(f"brackets[{k}]: {exc}") from None
        entries.append(((i, j), parse_value(item["value"], f"brackets[{k}].value")))
    try:
        algebra = StructureAlgebra.from_entries(alphabet, entries, field)
    except SuperlieError as exc:
        raise CliSemanticFailure(str(exc)) from None

    subalgebra = None
    if "subalgebra" in data:
        _expect(isinstance(data["subalgebra"], list), "'subalgebra' must be a list")
        members = []
        for name in data["subalgebra"]:
            _expect(isinstance(name, str), "'subalgebra' entries must be strings")
            try:
                members.append(alphabet.rank(name))
            except SuperlieError as exc:
                raise CliSemanticFailure(f"subalgebra: {exc}") from None
        if len(set(members)) != len(members):
            raise CliSemanticFailure("subalgebra lists a generator twice")
        subalgebra = SubalgebraSpec(tuple(sorted(members)))

    derivation = None
    if "derivation" in data:
        der = data["derivation"]
        _expect(isinstance(der, dict) and "parity" in der and "images" in der,
                "'derivation' must have 'parity' and 'images'")
        _expect(der["parity"] in (0, 1), "derivation parity must be 0 or 1")
        _expect(isinstance(der["images"], list), "derivation images must be a list")
        if subalgebra is None:
            subalgebra = SubalgebraSpec(tuple(range(alphabet.size)))
        members = set(subalgebra.members)
        beta = {}
        for k, item in enumerate(der["images"]):
            _expect(isinstance(item, dict) and "gen" in item and "value" in item,
                    f"derivation.images[{k}] must have 'gen' and 'value'")
            try:
                a = alphabet.rank(item["gen"])
            except SuperlieError as exc:
                raise CliSemanticFailure(f"derivation.images[{k}]: {exc}") from None
            if a not in members:
                raise CliSemanticFailure(
                    f"derivation.images[{k}]: {item['gen']} is outside the subalgebra")
            row = parse_value(item["value"], f"derivation.images[{k}].value")
            for v, coeff in row.items():
                beta[(a, v)] = coeff
        derivation = DerivationSpec(parity=der["parity"], beta=beta)
    elif subalgebra is None and "subalgebra" not in data:
        subalgebra = None

    return algebra, subalgebra, derivation


def parse_algebra(path: str):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as exc:
        raise CliParseFailure(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise CliParseFailure(f"{path}: invalid JSON: {exc}") from None
    return parse_algebra_data(data)


def serialize_algebra(L: StructureAlgebra, A, d) -> str:
    """Canonical file form: one orientation per bracket (greater generator on
    the left), components sorted by rank."""
    names = L.alphabet.names

    def value_list(row: dict[int, object]):
        return [{"coef": L.field.format(row[k]), "gen": names[k]}
                for k in sorted(row)]

    brackets = []
    for i in range(L.dim):
        for j in range(i + 1):
            row = L.bracket_row(i, j)
            if row:
                brackets.append({"left": names[i], "right": names[j],
                                 "value": value_list(row)})
    obj: dict = {
        "field": L.field.name,
        "generators": [{"name": n, "parity": p}
                       for n, p in zip(names, L.alphabet.parities)],
        "brackets": brackets,
    }
    if A is not None:
        obj["subalgebra"] = [names[i] for i in A.members]
    if d is not None:
        images = []
        for a in (A.members if A is not None else range(L.dim)):
            row = d.image_row(a, L.dim)
            if row:
                images.append({"gen": names[a], "value": value_list(row)})
        obj["derivation"] = {"parity": d.parity, "images": images}
    return json.dumps(obj, indent=2) + "\n"


# ---------------------------------------------------------------------------
# expression parsing

_TOKEN_RE = re.compile(r"\s*(?:(?P<num>-?\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
                       r"|(?P<sym>[\[\],+*-]))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            rest = text[pos:].strip()
            if not rest:
                break
            raise CliParseFailure(f"bad token at {rest[:10]!r}")
        if m.lastgroup is not None:
            tokens.append((m.lastgroup, m.group(m.lastgroup)))
        pos = m.end()
    return tokens


class _ExprParser:
    """expr := ['-'] term (('+'|'-') term)*; term := [coef '*'] atom;
    atom := name | '[' expr ',' expr ']'"""

    def __init__(self, text: str, alphabet: Alphabet, field):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.alphabet = alphabet
        self.field = field

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def parse(self) -> LiePoly:
        poly = self.parse_expr()
        if self.pos != len(self.tokens):
            raise CliParseFailure(f"unexpected trailing token {self.peek()[1]!r}")
        return poly

    def parse_expr(self) -> LiePoly:
        negate = False
        if self.peek() == ("sym", "-"):
            self.take()
            negate = True
        poly = self.parse_term()
        if negate:
            poly = -poly
        while self.peek()[0] == "sym" and self.peek()[1] in "+-":
            op = self.take()[1]
            term = self.parse_term()
            poly = poly + term if op == "+" else poly - term
        return poly

    def parse_term(self) -> LiePoly:
        kind, text = self.peek()
        coeff = self.field.one()
        if kind == "num":
            self.take()
            try:
                coeff = self.field.parse(text)
            except FieldError as exc:
                raise CliSemanticFailure(str(exc)) from None
            if self.peek() == ("sym", "*"):
                self.take()
            else:
                raise CliParseFailure("coefficient must be followed by '*'")
        return self.parse_atom().scale(coeff)

    def parse_atom(self) -> LiePoly:
        kind, text = self.take()
        if kind == "name":
            try:
                rank = self.alphabet.rank(text)
            except SuperlieError:
                raise CliSemanticFailure(f"unknown generator {text!r}") from None
            return LiePoly(self.alphabet, {leaf(self.alphabet, rank): self.field.one()})
        if (kind, text) == ("sym", "["):
            left = self.parse_expr()
            if self.take() != ("sym", ","):
                raise CliParseFailure("expected ',' in bracket")
            right = self.parse_expr()
            if self.take() != ("sym", "]"):
                raise CliParseFailure("expected ']' in bracket")
            return superbracket(left, right)
        raise CliParseFailure(f"unexpected token {text!r}")


def parse_expression(text: str, alphabet: Alphabet, field) -> LiePoly:
    return _ExprParser(text, alphabet, field).parse()


# ---------------------------------------------------------------------------
# report assembly


def _emit(args, text: str, payload: dict) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _build_presentation(algebra, subalgebra, derivation) -> Presentation:
    if derivation is not None:
        if subalgebra is None:
            subalgebra = SubalgebraSpec(tuple(range(algebra.dim)))
        return hnn_presentation(algebra, subalgebra, derivation)
    return structure_presentation(algebra)


def _relations_payload(relations: RelationSet) -> list[dict]:
    return [{"lead": str(r.leading_word()), "relation": str(r)} for r in relations]


def _parse_word(alphabet: Alphabet, text: str):
    if "." in text:
        parts = text.split(".")
    else:
        parts = list(text)
    try:
        return alphabet.word(parts)
    except SuperlieError as exc:
        raise CliSemanticFailure(str(exc)) from None


# ---------------------------------------------------------------------------
# subcommands


def _cmd_validate(args) -> int:
    algebra, subalgebra, derivation = parse_algebra(args.file)
    reports = [validate_structure(algebra)]
    if subalgebra is not None:
        reports.append(validate_subalgebra(algebra, subalgebra))
    if derivation is not None:
        reports.append(validate_derivation(algebra, subalgebra, derivation))
    ok = all(r.ok for r in reports)
    text = "\n".join(r.render() for r in reports)
    payload = {
        "ok": ok,
        "reports": [{"subject": r.subject, "ok": r.ok, "violations": r.violations}
                    for r in reports],
    }
    _emit(args, text, payload)
    return EXIT_OK if ok else EXIT_SEMANTIC


def _cmd_basis(args) -> int:
    alphabet = Alphabet.from_spec(args.alphabet)
    words = enumerate_super_ls_words(alphabet, args.max_len)
    counts = [0] * args.max_len
    for w in words:
        counts[len(w) - 1] += 1
    lines = [str(w) for w in words]
    lines.append("counts: " + ",".join(str(c) for c in counts))
    payload = {"words": [str(w) for w in words], "counts": counts}
    _emit(args, "\n".join(lines), payload)
    return EXIT_OK


def _cmd_bracket(args) -> int:
    alphabet = Alphabet.from_spec(args.alphabet)
    word = _parse_word(alphabet, args.word)
    try:
        result = standard_bracketing(word)
    except SuperlieError as exc:
        raise CliSemanticFailure(str(exc)) from None
    from fractions import Fraction
    poly = LiePoly(alphabet, {result.monomial: Fraction(1)})
    expansion = expand(poly)
    text = "\n".join([
        f"bracketing: {result.monomial}",
        f"leading coefficient: {result.leading_coefficient}",
        f"expansion: {expansion}",
    ])
    payload = {
        "bracketing": str(result.monomial),
        "leading_coefficient": result.leading_coefficient,
        "expansion": str(expansion),
    }
    _emit(args, text, payload)
    return EXIT_OK


def _cmd_compose(args) -> int:
    algebra, subalgebra, derivation = parse_algebra(args.file)
    presentation = _build_presentation(algebra, subalgebra, derivation)
    survey = composition_survey(presentation, args.max_deg)
    payload = {
        "entries": [
            {
                "family": e.family,
                "w": str(e.report.w),
                "kind": e.report.kind,
                "trivial": e.report.trivial,
                "value_lead": None if e.report.leading_word_of_value is None
                else str(e.report.leading_word_of_value),
            }
            for e in survey.entries
        ],
    }
    _emit(args, survey.render(), payload)
    return EXIT_OK


def _cmd_complete(args) -> int:
    algebra, subalgebra, derivation = parse_algebra(args.file)
    presentation = _build_presentation(algebra, subalgebra, derivation)
    completed, log = complete(presentation.relations, args.max_deg)
    lines = ["completed relations:"]
    lines.extend(f"  {r}" for r in completed)
    lines.append("log:")
    lines.extend("  " + line for line in log.render().splitlines())
    payload = {
        "relations": _relations_payload(completed),
        "log": log.render().splitlines(),
    }
    _emit(args, "\n".join(lines), payload)
    return EXIT_OK


def _cmd_normal_form(args) -> int:
    algebra, subalgebra, derivation = parse_algebra(args.file)
    presentation = _build_presentation(algebra, subalgebra, derivation)
    completed, _ = complete(presentation.relations, args.max_deg)
    poly = parse_expression(args.expr, presentation.alphabet, presentation.field)
    normal = reduce(poly, completed)
    _emit(args, str(normal), {"normal_form": str(normal)})
    return EXIT_OK


def _cmd_embed_check(args) -> int:
    algebra, subalgebra, derivation = parse_algebra(args.file)
    presentation = _build_presentation(algebra, subalgebra, derivation)
    report = embedding_check(presentation, args.max_deg)
    payload = {
        "ok": report.ok,
        "added_leads": [str(w) for w in report.added_leads],
        "letters_irreducible": report.letters_irreducible,
    }
    _emit(args, report.render(), payload)
    return EXIT_OK if report.ok else EXIT_SEMANTIC


def _cmd_two_gen(args) -> int:
    algebra, _, _ = parse_algebra(args.file)
    presentation = two_generator_presentation(algebra, args.n_max, args.max_deg)
    report = two_gen_membership_check(presentation, args.max_deg)
    lines = [
        "parity assignments (a,b,t): "
        + "; ".join(str(p) for p in presentation.parity_assignments),
        f"chosen: {presentation.parity_assignment}",
        "relations:",
    ]
    lines.extend(f"  {r}" for r in presentation.relations)
    lines.append(report.render())
    payload = {
        "parity_assignments": [list(p) for p in presentation.parity_assignments],
        "chosen": list(presentation.parity_assignment),
        "relations": _relations_payload(presentation.relations),
        "ok": report.ok,
        "b_in_span": report.b_in_span,
        "c_in_span": report.c_in_span,
        "c_independent": report.c_independent,
    }
    _emit(args, "\n".join(lines), payload)
    return EXIT_OK if report.ok else EXIT_SEMANTIC


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="superlie",
        description="Lyndon-Shirshov words, Groebner-Shirshov bases and "
                    "HNN-extensions of Lie superalgebras")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--log", action="store_true",
                       help="append non-deterministic human extras")

    p = sub.add_parser("validate", help="validate an algebra file")
    p.add_argument("file")
    add_format(p)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("basis", help="super-Lyndon-Shirshov words and counts")
    p.add_argument("--alphabet", required=True)
    p.add_argument("--max-len", type=int, required=True)
    add_format(p)
    p.set_defaults(func=_cmd_basis)

    p = sub.add_parser("bracket", help="standard bracketing of a word")
    p.add_argument("--alphabet", required=True)
    p.add_argument("--word", required=True)
    add_format(p)
    p.set_defaults(func=_cmd_bracket)

    p = sub.add_parser("compose", help="survey the compositions of a presentation")
    p.add_argument("file")
    p.add_argument("--max-deg", type=int, default=None)
    add_format(p)
    p.set_defaults(func=_cmd_compose)

    p = sub.add_parser("complete", help="degree-bounded completion")
    p.add_argument("file")
    p.add_argument("--max-deg", type=int, required=True)
    add_format(p)
    p.set_defaults(func=_cmd_complete)

    p = sub.add_parser("normal-form", help="reduce an expression")
    p.add_argument("file")
    p.add_argument("--expr", required=True)
    p.add_argument("--max-deg", type=int, required=True)
    add_format(p)
    p.set_defaults(func=_cmd_normal_form)

    p = sub.add_parser("embed-check", help="embedding evidence at bounded degree")
    p.add_argument("file")
    p.add_argument("--max-deg", type=int, required=True)
    add_format(p)
    p.set_defaults(func=_cmd_embed_check)

    p = sub.add_parser("two-gen", help="two-generator construction and membership")
    p.add_argument("file")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--max-deg", type=int, required=True)
    add_format(p)
    p.set_defaults(func=_cmd_two_gen)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliParseFailure as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except CliSemanticFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC
    except (StructureError, NotCompletedError, SuperlieError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC


if __name__ == "__main__":
    raise SystemExit(main())
