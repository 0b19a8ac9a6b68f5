"""Exception hierarchy shared by all superlie modules."""


class SuperlieError(Exception):
    """Base class for all errors raised by this package."""


class AlphabetError(SuperlieError):
    """Malformed alphabet, or an operation mixing two different alphabets."""


class WordError(SuperlieError):
    """Invalid word argument, e.g. an empty word where a nonempty one is required."""


class FieldError(SuperlieError):
    """Unsupported coefficient field or malformed coefficient literal."""


class NotLyndonError(SuperlieError):
    """A word or monomial is not (super-)Lyndon-Shirshov where one is required."""


class BracketingError(SuperlieError):
    """No valid bracket arrangement exists; internal error for valid inputs."""


class NotLieElementError(SuperlieError):
    """An associative polynomial does not lie in the free Lie superalgebra."""


class RelationError(SuperlieError):
    """A relation polynomial violates the requirements of a relation set."""


class NotCompletedError(SuperlieError):
    """An operation needs a relation set completed to a degree it does not have."""


class ResourceLimitError(SuperlieError):
    """A configured resource cap (relation count) was exceeded."""


class StructureError(SuperlieError):
    """Invalid structure-constant data, subalgebra or derivation input."""


class UnexpectedAmbiguityError(SuperlieError):
    """An overlap ambiguity outside the five expected families of an
    HNN presentation was found."""
