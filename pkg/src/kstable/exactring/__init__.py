"""Exact arithmetic in Z[q^{±1/2}][Λ] and its fraction field."""

from .character import CharacterAssignment, evaluate_character, parse_character
from .laurent import LaurentPoly, format_monomial, orient, pack, unpack
from .newton import Polytope, newton_polygon
from .ratfn import RationalFn, SingularCharacter, factor_atoms, probably_equal, register_atoms


def exact_divide(p: LaurentPoly, atom: LaurentPoly) -> LaurentPoly | None:
    """Quotient p / atom for a binomial atom 1 - q^j e^μ, or None."""
    if len(atom) == 2 and atom.terms.get(0) == 1:
        (key,) = [k for k in atom.terms if k != 0]
        if atom.terms[key] == -1:
            return p.divide_atom(key)
    if atom.is_constant() and atom.constant_term() == 0:
        raise ZeroDivisionError("zero divisor")
    if len(atom) != 2:
        raise ValueError(f"{atom} is not a binomial atom")
    return p.exact_divide(atom)


def rf_equals(a: RationalFn, b: RationalFn) -> bool:
    return a.equals(b)


__all__ = [
    "CharacterAssignment", "LaurentPoly", "Polytope", "RationalFn", "SingularCharacter",
    "evaluate_character", "exact_divide", "factor_atoms", "format_monomial", "newton_polygon",
    "orient", "pack", "parse_character", "probably_equal", "register_atoms", "rf_equals", "unpack",
]
