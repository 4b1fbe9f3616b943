from mzvlab.catalog import binomial, hurwitz, kyzeta, polylog, structural  # noqa: F401
from mzvlab.catalog.base import (
    CATALOG,
    Identity,
    Param,
    VerificationReport,
    get_identity,
    list_identities,
    run_suite,
    summarize,
    verify,
)

__all__ = [
    "CATALOG",
    "Identity",
    "Param",
    "VerificationReport",
    "get_identity",
    "list_identities",
    "run_suite",
    "summarize",
    "verify",
]
