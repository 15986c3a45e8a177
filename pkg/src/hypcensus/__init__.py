"""Census of hyperelliptic curves over odd finite fields.

Exact isomorphism-class counts (plain and self-dual), symbolic conditional
polynomials in q, and a brute-force group-action oracle for cross-checking.
"""

__version__ = "0.1.0"

from .census import CensusReport, census_report, hyp, sd, y_nset_classes  # noqa: F401
from .field import FieldCtx, make_field  # noqa: F401
from .oracle import (  # noqa: F401
    BudgetError,
    OracleResult,
    burnside_hyp,
    orbit_census,
    selfdual_nset,
    verify_suite,
)
from .symbolic import (  # noqa: F401
    ConditionalPolynomial,
    render,
    restrict_to_class,
    symbolic_hyp,
    symbolic_sd,
)
