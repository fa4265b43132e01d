"""
Figure registry.

Decorator-based lookup of named figure builders. A builder returns the
curves (one FigureSeries each) that make up the figure.
"""
from typing import Callable, Optional
import logging

from zenorates.schemas.run import FigureSeries

logger = logging.getLogger(__name__)

FigureBuilder = Callable[[], list[FigureSeries]]


class FigureMetadata:
    """Metadata about a registered figure."""

    def __init__(
        self,
        name: str,
        func: FigureBuilder,
        description: Optional[str] = None,
    ):
        self.name = name
        self.func = func
        self.description = description or func.__doc__ or "No description"

    def __repr__(self) -> str:
        return f"<Figure {self.name}: {self.description[:50]}>"


class FigureRegistry:
    """
    Registry of reproducible figures.

    Example:
        registry = FigureRegistry()

        @registry.register("1a", description="Γ⁽⁰⁾ for three strong couplings")
        def figure_1a() -> list[FigureSeries]:
            ...
    """

    def __init__(self):
        self._figures: dict[str, FigureMetadata] = {}

    def register(self, name: str, description: Optional[str] = None) -> Callable:
        """
        Decorator to register a figure builder.

        Raises:
            ValueError: If the name is already registered
        """
        def decorator(func: FigureBuilder) -> FigureBuilder:
            if name in self._figures:
                existing = self._figures[name].func
                raise ValueError(
                    f"Figure '{name}' is already registered. "
                    f"Existing: {existing.__module__}.{existing.__name__}"
                )

            self._figures[name] = FigureMetadata(name=name, func=func, description=description)
            logger.debug(f"Registered figure: {name} -> {func.__module__}.{func.__name__}")
            return func

        return decorator

    def get_metadata(self, name: str) -> FigureMetadata:
        """
        Raises:
            KeyError: If the figure is not registered
        """
        if name not in self._figures:
            available = ", ".join(self.list())
            raise KeyError(f"Figure '{name}' not registered. Available figures: [{available}]")
        return self._figures[name]

    def build(self, name: str) -> list[FigureSeries]:
        """Curves of a registered figure."""
        return self.get_metadata(name).func()

    def list(self) -> list[str]:
        return sorted(self._figures.keys())

    def list_with_descriptions(self) -> dict[str, str]:
        return {name: metadata.description for name, metadata in sorted(self._figures.items())}

    def __len__(self) -> int:
        return len(self._figures)

    def __contains__(self, name: str) -> bool:
        return name in self._figures

    def __repr__(self) -> str:
        return f"<FigureRegistry: {len(self)} figures registered>"


# Global singleton registry
registry = FigureRegistry()
