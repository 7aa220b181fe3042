"""Unit-tagged scalars for interface boundaries.

Internally everything is plain floats in SI base units; Quantity exists
so that unit mistakes at the public boundary (config parsing, CLI
input) fail loudly instead of being silently coerced.
"""

from dataclasses import dataclass
import math

from .errors import UnitMismatchError

# Semantic unit tags used at package interfaces.
KNOWN_UNITS = frozenset(
    {
        "m",  # meters
        "A",  # amperes
        "V",  # volts
        "kg",
        "T*m",  # tesla*meter (vector potential)
        "T*m/A",  # coil constant
        "T",  # tesla
        "kg*m/s",  # momentum
        "1/m",  # inverse interfringe
        "1",  # dimensionless
    }
)


@dataclass(frozen=True)
class Quantity:
    """A scalar with a semantic unit tag."""

    value: float
    unit: str

    def __post_init__(self):
        if self.unit not in KNOWN_UNITS:
            raise UnitMismatchError(f"unknown unit tag {self.unit!r}")
        if not math.isfinite(self.value):
            raise ValueError("Quantity value must be finite")

    def _check(self, other):
        if not isinstance(other, Quantity):
            raise UnitMismatchError(
                f"cannot combine Quantity[{self.unit}] with bare {type(other).__name__}"
            )
        if other.unit != self.unit:
            raise UnitMismatchError(
                f"unit mismatch: {self.unit!r} vs {other.unit!r}"
            )

    def __add__(self, other):
        self._check(other)
        return Quantity(self.value + other.value, self.unit)

    def __sub__(self, other):
        self._check(other)
        return Quantity(self.value - other.value, self.unit)

    def __mul__(self, scalar):
        if isinstance(scalar, Quantity):
            raise UnitMismatchError("Quantity*Quantity products are not supported")
        return Quantity(self.value * float(scalar), self.unit)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if isinstance(scalar, Quantity):
            self._check(scalar)  # same-unit ratio is dimensionless
            return Quantity(self.value / scalar.value, "1")
        return Quantity(self.value / float(scalar), self.unit)

    def __lt__(self, other):
        self._check(other)
        return self.value < other.value

    def __le__(self, other):
        self._check(other)
        return self.value <= other.value
