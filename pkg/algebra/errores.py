"""Jerarquía de errores de la librería.

Los errores estructurales (tablas mal formadas) se distinguen de los fallos de
axiomas: un fallo de axioma nunca es una excepción, se reporta en un AxiomReport.
"""
from typing import Optional, Tuple


class KiteBLError(Exception):
    """Raíz de todos los errores de KiteBL."""


class StructuralError(KiteBLError):
    """Tablas con dimensiones o entradas fuera de rango, elementos con forma incorrecta."""


class InvalidSizeError(KiteBLError):
    """Tamaño no positivo al construir una cadena del catálogo."""


class PreconditionError(KiteBLError):
    """Se violó el contrato de una operación."""


class NotBasicError(KiteBLError):
    def __init__(self, mensaje: str, testigo: Optional[Tuple[int, ...]] = None):
        super().__init__(mensaje)
        self.testigo = testigo


class NonInjectiveError(KiteBLError):
    """lambda o rho no son inyectivas."""


class EnumerationBoundError(KiteBLError):
    def __init__(self, size: int, bound: int):
        super().__init__(
            f"El álgebra tiene {size} elementos y la cota de enumeración es {bound} "
            f"(ajustable con KITEBL_ENUM_BOUND)."
        )
        self.size = size
        self.bound = bound


class InvariantError(KiteBLError):
    """Falló una verificación interna; indica un bug, no una entrada inválida."""


class FormatError(KiteBLError):
    def __init__(self, mensaje: str, posicion: str = ""):
        super().__init__(f"{mensaje} ({posicion})" if posicion else mensaje)
        self.posicion = posicion


class UnknownCatalogNameError(KiteBLError):
    pass


class ConfigError(KiteBLError):
    pass
