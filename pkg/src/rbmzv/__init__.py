"""Free commutative Rota-Baxter algebras, multiple zeta values and their
q-analogs: exact mixable/quasi-shuffle products, symbolic identity
verification, double-shuffle relation generation and numeric checks by
truncated nested sums.
"""

from .coefficients import (
    ONE_MINUS_Q,
    PolyQ,
    Q_VAR,
    RatFuncQ,
    TruncSeries,
    poly_gcd,
    ratfunc_normalize,
    series_exp,
    series_log1p,
    series_mul,
)
from .letters import (
    COMPOSITION,
    MONOMIAL,
    QLETTERS,
    WORD,
    X0,
    X1,
    CompositionLetters,
    LetterSystem,
    MonomialLetters,
    PolylogLetters,
    QLetters,
    WordLetters,
)
from .tensor_algebra import (
    ShaAlgebra,
    ShaElement,
    mixable_shuffle,
    mixable_shuffle_direct,
    quasi_shuffle,
    render_lincomb,
    render_word,
)
from .identity_engine import (
    IdentityReport,
    bohnenblust_spitzer_check,
    congruence_check,
    exp_star_log_check,
    freshman_power,
    set_partitions,
    spitzer_check,
)
from .mzv_calculus import (
    CongruenceRelation,
    InadmissibleError,
    Relation,
    comp_to_word,
    congruence_zeta_relation,
    double_shuffle_relation,
    hoffman_partition_relation,
    is_admissible,
    q_stuffle,
    shuffle_zeta,
    spitzer_zeta_relation,
    stuffle,
    word_to_comp,
)
from .numeric_eval import (
    EvalConfig,
    EvalResult,
    eval_relation,
    mpl_num,
    nested_sum_oracle,
    qmzv_num,
    zeta_num,
)
from . import operator_gallery

__version__ = "0.1.0"
