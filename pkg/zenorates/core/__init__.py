"""
Numerical core: kernels, quadrature, decay rates, regime analysis, oracles.

Example:
    from zenorates.core import decay_rate, validate

    config = validate({"system": {"epsilon": 1.0, "delta": 0.05},
                       "weak": {"coupling": 0.03},
                       "strong": {"coupling": 0.4}})
    decay_rate(config, 1.0).gamma
"""
from zenorates.core.kernels import KernelMethod, kernels, phi_i1, phi_i2, phi_r1, phi_r2
from zenorates.core.quadrature import integrate, weighted_time_integral
from zenorates.core.rates import (
    decay_integrand_one,
    decay_integrand_two,
    decay_rate,
    effective_rate,
    gamma0,
    gamma1,
    rate_curve,
    survival_after_n,
    survival_deficit_terms,
    survival_one_reservoir,
    survival_two_reservoir,
)
from zenorates.core.regime import classify, find_extrema, find_transitions, first_maximum, label_regimes
from zenorates.core.validation import validate

__all__ = [
    "KernelMethod",
    "classify",
    "decay_integrand_one",
    "decay_integrand_two",
    "decay_rate",
    "effective_rate",
    "find_extrema",
    "find_transitions",
    "first_maximum",
    "gamma0",
    "gamma1",
    "integrate",
    "kernels",
    "label_regimes",
    "phi_i1",
    "phi_i2",
    "phi_r1",
    "phi_r2",
    "rate_curve",
    "survival_after_n",
    "survival_deficit_terms",
    "survival_one_reservoir",
    "survival_two_reservoir",
    "validate",
    "weighted_time_integral",
]
