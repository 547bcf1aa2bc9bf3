"""Risk-management graph validation: ingestion, saturation, shape checking.

Thin wrapper around the native extension. The heavy lifting lives in the
C++ core; this package re-exports its operations.
"""

try:
    from riskman_validator._riskman import (  # type: ignore
        RiskmanError,
        distill,
        fixture,
        generate_ps,
        multiply_magnitudes,
        validate_files,
        validate_texts,
        __version__,
    )
except ImportError:  # extension built next to the package (ctest layout)
    from _riskman import (  # type: ignore
        RiskmanError,
        distill,
        fixture,
        generate_ps,
        multiply_magnitudes,
        validate_files,
        validate_texts,
        __version__,
    )

__all__ = [
    "RiskmanError",
    "distill",
    "fixture",
    "generate_ps",
    "multiply_magnitudes",
    "validate_files",
    "validate_texts",
    "__version__",
]
