"""Associated primes of monomial ideals, of their powers, and the stable set."""

from ._kernels import BACKEND
from .constructor import (
    ConstructionTrace,
    lemma_intersection_check,
    realize_stable_set,
    search_d,
    verify_power_distribution,
)
from .core import (
    Ambient,
    AmbientMismatchError,
    ExponentOverflowError,
    IdealError,
    Monomial,
    MonomialIdeal,
    MonomialPrime,
    colon_mon,
    colon_prime,
    divides,
    gcd,
    intersect,
    lcm,
    localize_restrict,
    member,
    min_gen_degree,
    minimalize,
    power,
    product,
)
from .decomposition import ass, irreducible_decomposition, min_primes, primary_decomposition
from .stable import (
    StabilizationConfig,
    ass_infinity,
    ass_of_power,
    is_assoc_of_power,
    is_in_ass_infinity,
    socle_nonzero,
)
from .textio import parse_document, render_document, render_json

__version__ = "0.1.0"
