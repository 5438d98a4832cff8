"""Exact counts of rational plane curves with prescribed contacts to a smooth plane cubic."""

try:
    from ._gwcubic import (  # noqa: F401
        Engine,
        InvalidInput,
        flex_count,
        kontsevich_number,
        tangent_count,
    )
except ImportError:  # running against a build tree, where the module is top-level
    from _gwcubic import (  # noqa: F401
        Engine,
        InvalidInput,
        flex_count,
        kontsevich_number,
        tangent_count,
    )

__all__ = [
    "Engine",
    "InvalidInput",
    "flex_count",
    "kontsevich_number",
    "tangent_count",
]
