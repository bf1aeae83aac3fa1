"""Catálogo de pseudo hoops con nombre.

Gramática de nombres:
    trivial | godel:n | lukasiewicz:n | product:A*B | osum:A+B
Los operandos pueden ir entre paréntesis para anidar, p. ej.
    osum:(product:godel:2*godel:2)+godel:2
"""
import logging
from typing import List, Tuple

from algebra.errores import InvalidSizeError, UnknownCatalogNameError
from algebra.hoop_core import (
    FiniteHoop,
    direct_product,
    godel_chain,
    lukasiewicz_chain,
    ordinal_sum,
    trivial_hoop,
)

logger = logging.getLogger(__name__)

NOMBRES_LISTADOS = [
    "trivial",
    *(f"godel:{n}" for n in range(2, 7)),
    *(f"lukasiewicz:{n}" for n in range(2, 7)),
    "product:godel:2*godel:2",
    "product:godel:2*lukasiewicz:3",
    "osum:godel:2+godel:2",
    "osum:(product:godel:2*godel:2)+godel:2",
]


def _quitar_parentesis(texto: str) -> str:
    texto = texto.strip()
    while texto.startswith("(") and texto.endswith(")") and _cierre_de(texto, 0) == len(texto) - 1:
        texto = texto[1:-1].strip()
    return texto


def _cierre_de(texto: str, apertura: int) -> int:
    profundidad = 0
    for i in range(apertura, len(texto)):
        if texto[i] == "(":
            profundidad += 1
        elif texto[i] == ")":
            profundidad -= 1
            if profundidad == 0:
                return i
    raise UnknownCatalogNameError(f"paréntesis sin cerrar en {texto!r}")


def _partir(texto: str, separador: str) -> Tuple[str, str]:
    profundidad = 0
    for i, caracter in enumerate(texto):
        if caracter == "(":
            profundidad += 1
        elif caracter == ")":
            profundidad -= 1
        elif caracter == separador and profundidad == 0:
            return texto[:i], texto[i + 1:]
    raise UnknownCatalogNameError(f"se esperaba '{separador}' en {texto!r}")


def _tamano(parametro: str, nombre: str) -> int:
    try:
        return int(parametro)
    except ValueError:
        raise UnknownCatalogNameError(f"parámetro no entero en {nombre!r}")


def obtener_hoop(nombre: str) -> FiniteHoop:
    texto = _quitar_parentesis(nombre)
    if texto == "trivial":
        return trivial_hoop()
    familia, _, parametro = texto.partition(":")
    try:
        if familia == "godel":
            return godel_chain(_tamano(parametro, nombre))
        if familia == "lukasiewicz":
            return lukasiewicz_chain(_tamano(parametro, nombre))
    except InvalidSizeError as e:
        raise UnknownCatalogNameError(f"{nombre!r}: {e}") from e
    if familia == "product":
        izquierda, derecha = _partir(parametro, "*")
        return direct_product(obtener_hoop(izquierda), obtener_hoop(derecha))
    if familia == "osum":
        izquierda, derecha = _partir(parametro, "+")
        return ordinal_sum(obtener_hoop(izquierda), obtener_hoop(derecha))
    raise UnknownCatalogNameError(f"nombre de catálogo desconocido: {nombre!r}")


def listar_catalogo() -> List[Tuple[str, int]]:
    return [(nombre, obtener_hoop(nombre).size) for nombre in NOMBRES_LISTADOS]
