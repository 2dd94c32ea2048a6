"""Exact binomial probabilities in rational arithmetic"""
import math
from fractions import Fraction

__all__ = ["binomial_pmf", "binomial_pmf_exact", "binomial_table"]


def _as_fraction(p):
    """Accept Fraction, int, decimal/ratio strings like "1/6", or floats (taken at their exact binary value)."""
    if isinstance(p, Fraction):
        frac = p
    elif isinstance(p, str):
        frac = Fraction(p.strip())
    else:
        frac = Fraction(p)
    if not 0 <= frac <= 1:
        raise ValueError(f"Probability must lie in [0, 1], but got {p}.")
    return frac


def binomial_pmf_exact(n: int, trials: int, p) -> Fraction:
    """C(trials, n) * p**n * (1 - p)**(trials - n) as an exact fraction."""
    if trials < 0:
        raise ValueError(f"trials must be non-negative, but got {trials}.")
    if not 0 <= n <= trials:
        raise ValueError(f"n must lie in [0, {trials}], but got {n}.")
    q = _as_fraction(p)
    return math.comb(trials, n) * q**n * (1 - q) ** (trials - n)


def binomial_pmf(n: int, trials: int, p) -> float:
    return float(binomial_pmf_exact(n, trials, p))


def binomial_table(trials: int, p):
    """[(n, exact p(n)) for n = 0..trials]."""
    return [(n, binomial_pmf_exact(n, trials, p)) for n in range(trials + 1)]
