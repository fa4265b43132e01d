"""
Figure definitions.

Importing this package registers every figure.

Example:
    from zenorates.figures import registry

    for series in registry.build("1a"):
        print(series.label)
"""
from zenorates.figures.registry import FigureMetadata, registry
from zenorates.figures import catalog  # noqa: F401  (registers figures)
from zenorates.figures.catalog import reference_run

__all__ = [
    "FigureMetadata",
    "reference_run",
    "registry",
]
