from __future__ import annotations

import logging
from typing import Any, Mapping

from pydantic import ValidationError

from zenorates.core.errors import ConfigValidationError
from zenorates.schemas.model import ModelConfig, ValidatedConfig

logger = logging.getLogger(__name__)


def validate(config: ModelConfig | Mapping[str, Any]) -> ValidatedConfig:
    """
    Check every model invariant and return the (unchanged) config.

    Raises:
        ConfigValidationError: listing every violated invariant, not just
            the first one.

    Example:
        config = validate({"system": {"epsilon": 1.0, "delta": 0.05},
                           "weak": {"coupling": 0.03}})
    """
    data = config.model_dump() if isinstance(config, ModelConfig) else dict(config)

    try:
        validated = ModelConfig.model_validate(data)
    except ValidationError as exc:
        error = ConfigValidationError.from_pydantic(exc)
        logger.debug(f"Config rejected: {error}")
        raise error from None

    if validated.strong is not None and validated.strong.coupling < validated.weak.coupling:
        # The polaron treatment assumes |g_k| >> |f_k|
        logger.warning(
            f"Strong coupling G={validated.strong.coupling} is below weak coupling "
            f"F={validated.weak.coupling}; the strong/weak separation does not hold"
        )

    return validated
