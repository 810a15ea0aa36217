"""Exact-arithmetic toolkit for determinantal Rees/fiber presentations.

Construct generic, ladder and column-window determinantal data; emit the
generator families of the presentation ideals of their multi-Rees algebras
and special fiber rings; and certify claimed Groebner bases, subalgebra
(initial-algebra) bases and exchange properties against independent
brute-force oracles, all over exact fields.
"""

from .poly import (
    EQ,
    GT,
    LT,
    DomainError,
    EliminationBasis,
    GroebnerBasis,
    Order,
    PolyRing,
    Polynomial,
    PrimeField,
    QQ,
    RationalField,
    Tvar,
    Variable,
    buchberger,
    compare,
    delta_grevlex,
    division,
    eliminate,
    elimination_order,
    normal_form,
    parse_poly,
    permuted_lex,
    product_order,
    s_polynomial,
    sigma_grevlex,
    sigma_prime,
    tau_lex,
    tau_prime,
    tvar,
    weight_order,
    xvar,
)
from .determinantal import (
    CustomSpec,
    GenericSpec,
    Instance,
    LadderSpec,
    MatrixShape,
    SpecError,
    UnitIntervalSpec,
    enumerate_D,
    index_set,
    initial_minor,
    instance,
    ladder_index_set,
    minor,
    unit_index_set,
)
from .tableau import (
    is_semistandard,
    is_standard,
    is_standard_pair,
    standardize,
    support,
    vibrations,
)
from .relations import (
    ClosureError,
    RelationFamily,
    en_full,
    en_initial,
    exchange_H,
    make_family,
    plucker_initial,
    plucker_lifted,
    rees_full_family,
    rees_initial_family,
)
from .verify import (
    Certificate,
    InconclusiveError,
    KernelBasis,
    certify_groebner,
    certify_minors_groebner,
    certify_sagbi,
    check_l_exchange,
    fiber_kernel_oracle,
    rees_kernel_oracle,
    subduct,
)

__version__ = "0.1.0"
