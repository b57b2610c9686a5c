"""Exact generalized question-mark functions over alternating Luroth
expansions: evaluation, inversion, interval dynamics, and experiments."""

from .analysis import (
    MeasureTable,
    SingularityReport,
    conjugation_residual,
    measure_compare,
    singularity_stats,
)
from .contfrac import (
    ContinuedFraction,
    canonicalize,
    cf_eval,
    cf_of_rational,
    cf_of_surd,
    cf_periodic_to_surd,
    convergents,
    shift_digits,
)
from .dynamics import (
    OrbitRecord,
    gauss_step,
    is_preperiodic,
    luroth_map,
    luroth_step,
    orbit,
    orbit_rows,
)
from .errors import (
    DomainError,
    InconclusiveError,
    ParseError,
    PrecisionError,
    QmarkError,
)
from .exactnum import (
    QuadraticSurd,
    Value,
    compare,
    decimal_str,
    format_value,
    isqrt,
    mobius_apply,
    parse_value,
    rat_arith,
    surd_floor,
    surd_normalize,
)
from .partition import Partition, builtin_partitions
from .question import (
    ApproxValue,
    BlockSummary,
    LurothDigits,
    block_summary,
    luroth_digits_of,
    luroth_series_eval,
    mediant_oracle,
    q_eval,
    q_eval_rational,
    q_eval_real,
    q_eval_surd,
    q_inverse_rational,
)

__version__ = "0.1.0"

__all__ = [
    "ApproxValue",
    "BlockSummary",
    "ContinuedFraction",
    "DomainError",
    "InconclusiveError",
    "LurothDigits",
    "MeasureTable",
    "OrbitRecord",
    "ParseError",
    "Partition",
    "PrecisionError",
    "QmarkError",
    "QuadraticSurd",
    "SingularityReport",
    "Value",
    "block_summary",
    "builtin_partitions",
    "canonicalize",
    "cf_eval",
    "cf_of_rational",
    "cf_of_surd",
    "cf_periodic_to_surd",
    "compare",
    "conjugation_residual",
    "convergents",
    "decimal_str",
    "format_value",
    "gauss_step",
    "is_preperiodic",
    "isqrt",
    "luroth_digits_of",
    "luroth_map",
    "luroth_series_eval",
    "luroth_step",
    "measure_compare",
    "mediant_oracle",
    "mobius_apply",
    "orbit",
    "orbit_rows",
    "parse_value",
    "q_eval",
    "q_eval_rational",
    "q_eval_real",
    "q_eval_surd",
    "q_inverse_rational",
    "rat_arith",
    "shift_digits",
    "singularity_stats",
    "surd_floor",
    "surd_normalize",
    "__version__",
]
