"""Búsqueda de isomorfismos entre álgebras finitas pequeñas por vuelta atrás."""
import logging
from typing import Dict, List, Optional, Tuple

import numpy as np

from algebra.bl_verifier import Algebra, is_homomorphism
from algebra.errores import InvariantError
from algebra.kite_builder import FiniteBL

logger = logging.getLogger(__name__)

Firma = Tuple[int, int, bool]


def _firmas(B: Algebra) -> List[Firma]:
    """(tamaño del conjunto inferior, tamaño del superior, idempotencia) de cada elemento."""
    leq = B.leq
    diagonal = np.diag(B.mul_t) == np.arange(B.size)
    return [
        (int(leq[:, x].sum()), int(leq[x, :].sum()), bool(diagonal[x]))
        for x in range(B.size)
    ]


def _pares_de_tablas(A: Algebra, B: Algebra):
    pares = [(A.mul, B.mul), (A.ldiv, B.ldiv), (A.rdiv, B.rdiv)]
    if isinstance(A, FiniteBL) and isinstance(B, FiniteBL):
        pares += [(A.meet, B.meet), (A.join, B.join)]
    return pares


class _Busqueda:
    def __init__(self, A: Algebra, B: Algebra):
        self.n = A.size
        self.tablas = _pares_de_tablas(A, B)
        self.firmas_a = _firmas(A)
        self.firmas_b = _firmas(B)

    def propagar(self, f: List[int], usados: Dict[int, int]) -> bool:
        """Completa las imágenes forzadas por las tablas; False si hay conflicto."""
        cambio = True
        while cambio:
            cambio = False
            asignados = [a for a in range(self.n) if f[a] >= 0]
            for a in asignados:
                for b in asignados:
                    for ta, tb in self.tablas:
                        c, d = ta[a][b], tb[f[a]][f[b]]
                        if f[c] >= 0:
                            if f[c] != d:
                                return False
                        elif d in usados or self.firmas_a[c] != self.firmas_b[d]:
                            return False
                        else:
                            f[c] = d
                            usados[d] = c
                            cambio = True
        return True

    def buscar(self, f: List[int], usados: Dict[int, int]) -> Optional[List[int]]:
        if not self.propagar(f, usados):
            return None
        libres = [a for a in range(self.n) if f[a] < 0]
        if not libres:
            return f
        candidatos = {
            a: [d for d in range(self.n) if d not in usados and self.firmas_b[d] == self.firmas_a[a]]
            for a in libres
        }
        a = min(libres, key=lambda x: (len(candidatos[x]), x))
        for d in candidatos[a]:
            g, nuevos_usados = list(f), dict(usados)
            g[a] = d
            nuevos_usados[d] = a
            resultado = self.buscar(g, nuevos_usados)
            if resultado is not None:
                return resultado
        return None


def find_isomorphism(A: Algebra, B: Algebra) -> Optional[Tuple[int, ...]]:
    if A.size != B.size or isinstance(A, FiniteBL) != isinstance(B, FiniteBL):
        return None
    busqueda = _Busqueda(A, B)
    if sorted(busqueda.firmas_a) != sorted(busqueda.firmas_b):
        return None
    f = [-1] * A.size
    usados: Dict[int, int] = {}
    fijos = [(A.identidad, B.identidad)]
    if isinstance(A, FiniteBL):
        fijos.append((A.zero, B.zero))
    for a, d in fijos:
        if f[a] >= 0 and f[a] != d or d in usados and usados[d] != a:
            return None
        if busqueda.firmas_a[a] != busqueda.firmas_b[d]:
            return None
        f[a] = d
        usados[d] = a
    resultado = busqueda.buscar(f, usados)
    if resultado is None:
        logger.debug(f"{A.name or '?'} y {B.name or '?'} no son isomorfas")
        return None
    if not is_homomorphism(A, B, resultado):
        raise InvariantError("la biyección hallada no preserva las operaciones")
    return tuple(resultado)


def are_isomorphic(A: Algebra, B: Algebra) -> bool:
    return find_isomorphism(A, B) is not None
