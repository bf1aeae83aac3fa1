"""Utilidades sobre relaciones de orden representadas como matrices booleanas n×n.

Convención: leq[a, b] es True si a ≤ b.
"""
from typing import List, Optional, Tuple

import networkx as nx
import numpy as np

Testigo = Tuple[int, ...]


def primer_testigo(mascara: np.ndarray) -> Optional[Testigo]:
    """Primer índice True en orden lexicográfico (orden C de numpy), o None."""
    indices = np.argwhere(mascara)
    if indices.size == 0:
        return None
    return tuple(int(v) for v in indices[0])


def todos_los_testigos(mascara: np.ndarray) -> List[Testigo]:
    return [tuple(int(v) for v in fila) for fila in np.argwhere(mascara)]


def fallas_orden_parcial(leq: np.ndarray) -> List[np.ndarray]:
    """Máscaras de violación de reflexividad (a,), antisimetría (a,b) y transitividad (a,b,c)."""
    n = leq.shape[0]
    reflexiva = ~np.diag(leq)
    antisimetrica = leq & leq.T & ~np.eye(n, dtype=bool)
    transitiva = leq[:, :, None] & leq[None, :, :] & ~leq[:, None, :]
    return [reflexiva, antisimetrica, transitiva]


def tabla_infimos(leq: np.ndarray) -> np.ndarray:
    """Tabla de ínfimos; -1 donde el par no tiene máximo de cotas inferiores."""
    traspuesta = leq.T
    # cotas[a, b, z]: z ≤ a y z ≤ b
    cotas = traspuesta[:, None, :] & traspuesta[None, :, :]
    # alguna cota w no queda por debajo de z
    excedidas = (cotas.astype(np.int64) @ (~leq).astype(np.int64)) > 0
    mejores = cotas & ~excedidas
    return np.where(mejores.any(axis=2), mejores.argmax(axis=2), -1)


def tabla_supremos(leq: np.ndarray) -> np.ndarray:
    return tabla_infimos(leq.T)


def aristas_hasse(leq: np.ndarray) -> List[Tuple[int, int]]:
    """Pares de cobertura a ⋖ b, ordenados."""
    n = leq.shape[0]
    grafo = nx.DiGraph()
    grafo.add_nodes_from(range(n))
    grafo.add_edges_from(
        (a, b) for a in range(n) for b in range(n) if a != b and leq[a, b]
    )
    reduccion = nx.transitive_reduction(grafo)
    return sorted(reduccion.edges())
