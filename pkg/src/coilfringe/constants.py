"""Physical constants in SI units.

All internal computation in this package is done in double-precision SI
base units. The values below are the exact SI-2019 defined values for h
and e, and CODATA recommended values for m_e and mu0.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class PhysicalConstants:
    """Fixed set of physical constants (SI).

    h    Planck constant, J*s
    e    elementary charge, C
    m_e  electron mass, kg
    mu0  vacuum permeability, T*m/A
    """

    h: float = 6.62607015e-34
    e: float = 1.602176634e-19
    m_e: float = 9.1093837015e-31
    mu0: float = 1.25663706212e-6

    def __post_init__(self):
        for name in ("h", "e", "m_e", "mu0"):
            if getattr(self, name) <= 0:
                raise ValueError(f"constant {name} must be strictly positive")


_SI = PhysicalConstants()


def constants() -> PhysicalConstants:
    """Return the authoritative constant set.

    Pure and deterministic; repeated calls return the same frozen
    instance. Tests that need modified constants may construct their own
    PhysicalConstants and pass it explicitly where supported.
    """
    return _SI
