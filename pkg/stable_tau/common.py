import random
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from stable_tau.config import (
    DEFAULT_MAX_VERTICES,
    DEFAULT_NILPOTENCY_BOUND,
    DEFAULT_SEED,
    SUGGESTED_PRIMES,
)
from stable_tau.linalg import Element, FieldSpec


class EngineError(Exception):
    """Base class for every error raised by the engine."""


class InputError(EngineError, ValueError):
    """The input document, quiver map or field choice is unusable."""


class NotSplitError(InputError):
    """The algebra does not split over the chosen field."""


class ResourceAbort(EngineError):
    """A configured search budget was exhausted."""


class RefusedError(EngineError):
    """The request is outside what the verifier is able to decide."""


class InternalError(EngineError, AssertionError):
    """A computed object failed its own post-validation."""


@dataclass
class EngineOptions:
    max_vertices: int = DEFAULT_MAX_VERTICES
    nilpotency_bound: int = DEFAULT_NILPOTENCY_BOUND
    seed: int = DEFAULT_SEED
    # Candidate moduli offered when the field lacks roots of unity.
    primes: Tuple[int, ...] = SUGGESTED_PRIMES


def parse_seed(raw: str) -> int:
    text = raw.strip().lower()
    try:
        value = int(text, 16) if text.startswith("0x") else int(text)
    except ValueError as error:
        raise InputError(f"Seed must be an integer or 0x-prefixed hex, got {raw!r}") from error
    if value < 0:
        raise InputError("Seed cannot be negative")
    return value


def format_seed(seed: int) -> str:
    return f"0x{seed:X}"


def parse_positive(raw: object, name: str) -> int:
    try:
        value = int(raw)  # type: ignore[arg-type]
    except (TypeError, ValueError) as error:
        raise InputError(f"{name} must be an integer") from error
    if value <= 0:
        raise InputError(f"{name} must be greater than zero")
    return value


def parse_coefficient(field: FieldSpec, raw: object, where: str) -> Element:
    try:
        return field.convert(raw)
    except (TypeError, ValueError, ZeroDivisionError, OverflowError) as error:
        raise InputError(f"{where}: coefficient {raw} is not an element of {field.label}") from error


def suggest_prime(exponent: int, group_order: int, candidates: Sequence[int] = SUGGESTED_PRIMES) -> Optional[int]:
    for prime in candidates:
        if (prime - 1) % exponent == 0 and group_order % prime != 0:
            return prime
    return None


_RANDOM = random.Random(DEFAULT_SEED)


def engine_random() -> random.Random:
    return _RANDOM


def reseed(seed: int) -> None:
    _RANDOM.seed(seed)
