"""cubic93: which pure cubic radicands give a sextic 3-class group (9, 3).

For a cube-free d >= 2 let k = Q(cbrt(d), zeta_3).  This package decides
when the 3-class group of k can be of type (9, 3), certifies it given the
cubic field's exact 3-class number and the unit index, and explains every
verdict with the underlying arithmetic: Eisenstein factorizations, cubic
residue symbols, ramification counts and genus numbers.
"""

from .cas import CasConfig, CasError, CasResult, CasUnavailableError, cas_query
from .classifier import (
    ClassGroupShape,
    EquivalenceResult,
    FormClass,
    Reason,
    ReasonCode,
    Verdict,
    VerdictStatus,
    classify,
    hk_from_hgamma,
    necessary_form,
    scan,
    type93_equivalence,
)
from .eisenstein import (
    LAMBDA,
    OMEGA,
    OMEGA_SQUARED,
    ONE,
    UNITS,
    ZERO,
    CubicCharacterValue,
    EisensteinFactorization,
    EisensteinInt,
    PrimeSplitting,
    SplitKind,
    cubic_character,
    factor,
    factor_rational_prime,
    gcd,
    is_one_mod_lambda_cubed,
    is_one_mod_three,
    one_mod_three_associate,
    primary_associate,
    rational_cubic_symbol,
)
from .fixtures import (
    FixtureError,
    FixtureRow,
    TableReport,
    TableRowResult,
    append_verdicts,
    load_bundled_fixtures,
    load_fixtures,
    reproduce_table,
    save_fixtures,
)
from .genus import (
    BoundStatus,
    GenusReport,
    SplitPrimeBound,
    format_cubic,
    genus_field_description,
    genus_number,
    period_polynomial,
    split_prime_bound,
)
from .radicand import (
    GerthForm,
    Mod9Residue,
    NormalizedRadicand,
    cube_free_sieve,
    gerth_decompose,
    normalize,
    residue_mod9,
)
from .ramification import (
    K0Prime,
    K0PrimeKind,
    QStar,
    RamificationReport,
    count_t,
    gamma_ramified,
    q_star,
    ramify,
    sigma_rank,
)

__version__ = "0.1.0"
