"""CODATA 2018 constants, 10 significant digits, per unit system."""

import math

GAUSSIAN = "gaussian"
SI = "si"
UNIT_SYSTEMS = (GAUSSIAN, SI)

# hbar [erg s | J s], e [statC | C], c [cm/s | m/s], electron mass [g | kg]
_TABLE = {
    GAUSSIAN: {
        "hbar": 1.054571817e-27,
        "e": 4.803204713e-10,
        "c": 2.997924580e10,
        "m_e": 9.109383702e-28,
    },
    SI: {
        "hbar": 1.054571817e-34,
        "e": 1.602176634e-19,
        "c": 2.997924580e8,
        "m_e": 9.109383702e-31,
    },
}


def constants(unit_system: str = GAUSSIAN) -> dict:
    try:
        return dict(_TABLE[unit_system])
    except KeyError:
        raise ValueError(f"unknown unit system {unit_system!r}; expected one of {UNIT_SYSTEMS}") from None


def flux_quantum(unit_system: str = GAUSSIAN) -> float:
    """hc/e in gaussian units (G cm^2), h/e in SI (Wb)."""
    k = _TABLE[unit_system]
    h = 2.0 * math.pi * k["hbar"]
    if unit_system == GAUSSIAN:
        return h * k["c"] / k["e"]
    return h / k["e"]
