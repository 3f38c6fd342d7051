"""Prime tableaux of Grassmannian cluster algebras."""
from .errors import TabprimeError
from .tableaux import Tableau, from_rows, parse_tableau, format_tableau, union, reduce, equivalent
from .separation import weakly_separated, noncrossing
from .correspondence import (
    DominantMonomial,
    monomial_to_tableau,
    tableau_to_monomial,
    parse_monomial,
    format_monomial,
)
from .factorization import noncrossing_factorize, brute_force_factorize
from .primality import is_prime_2col, classify_2col, count_2col_prime, ssyt_count
from .promotion import bender_knuth, promote, orbit, orbit_cover
from .canonical_basis import kl_polynomial, ch
from .enumeration import enumerate_ssyt

__version__ = "0.1.0"

__all__ = [
    "TabprimeError", "Tableau", "from_rows", "parse_tableau", "format_tableau", "union", "reduce",
    "equivalent", "weakly_separated", "noncrossing", "DominantMonomial", "monomial_to_tableau",
    "tableau_to_monomial", "parse_monomial", "format_monomial", "noncrossing_factorize",
    "brute_force_factorize", "is_prime_2col", "classify_2col", "count_2col_prime", "ssyt_count",
    "bender_knuth", "promote", "orbit", "orbit_cover", "kl_polynomial", "ch", "enumerate_ssyt",
]
