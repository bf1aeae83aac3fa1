import logging
from typing import Any, Mapping, Optional, Sequence, Tuple, Union

import numpy as np
from pydantic import ValidationError

from algebra.errores import StructuralError
from algebra.hoop_core import AcumuladorTestigos, AxiomReport, FiniteHoop
from algebra.kite_builder import FiniteBL
from algebra.orden import primer_testigo

logger = logging.getLogger(__name__)

Algebra = Union[FiniteHoop, FiniteBL]


def como_bl(candidato: Union[FiniteBL, Mapping[str, Any]]) -> FiniteBL:
    if isinstance(candidato, FiniteBL):
        return candidato
    try:
        return FiniteBL.model_validate(candidato)
    except ValidationError as e:
        raise StructuralError(f"tablas mal formadas: {e}") from e


def check_pseudo_bl(
    B: Union[FiniteBL, Mapping[str, Any]], all_witnesses: bool = False
) -> AxiomReport:
    """Barrido exhaustivo de los axiomas de pseudo álgebra BL.

    El orden usado es el del retículo (x ≤ y sii x ∧ y = x); la residuación
    se comprueba contra ese orden, no contra el derivado de las divisiones.
    """
    B = como_bl(B)
    n, cero, uno = B.size, B.zero, B.one
    M, L, R = B.mul_t, B.ldiv_t, B.rdiv_t
    inf, sup = B.meet_t, B.join_t
    leq = B.leq_reticulo
    a = np.arange(n)
    X, Y = a[:, None], a[None, :]
    A3, B3, C3 = a[:, None, None], a[None, :, None], a[None, None, :]
    acumulador = AcumuladorTestigos(all_witnesses)

    acumulador.registrar("bounded-lattice", (np.diag(inf) != a) | (np.diag(sup) != a))
    acumulador.registrar("bounded-lattice", (inf != inf.T) | (sup != sup.T))
    acumulador.registrar("bounded-lattice", inf[inf[A3, B3], C3] != inf[A3, inf[B3, C3]])
    acumulador.registrar("bounded-lattice", sup[sup[A3, B3], C3] != sup[A3, sup[B3, C3]])
    # absorción
    acumulador.registrar("bounded-lattice", (inf[X, sup[X, Y]] != X) | (sup[X, inf[X, Y]] != X))
    acumulador.registrar("bounded-lattice", (inf[cero, :] != cero) | (sup[uno, :] != uno))

    acumulador.registrar("monoid", (M[uno, :] != a) | (M[:, uno] != a))
    acumulador.registrar("monoid", M[M[A3, B3], C3] != M[A3, M[B3, C3]])

    p = leq[M[A3, B3], C3]
    q = leq[B3, L[A3, C3]]
    r = leq[A3, R[C3, B3]]
    acumulador.registrar("residuation", (p != q) | (p != r))

    # x(x\(x∧y)) = x∧y = ((x∧y)/x)x
    acumulador.registrar(
        "meet-division", (M[X, L[X, inf]] != inf) | (M[R[inf, X], X] != inf)
    )
    # x(x\y) = x∧y = (y/x)x
    acumulador.registrar("divisibility", (M[X, L] != inf) | (M[R.T, X] != inf))
    # (x\y) ∨ (y\x) = 1 = (y/x) ∨ (x/y)
    acumulador.registrar(
        "prelinearity", (sup[L, L.T] != uno) | (sup[R.T, R] != uno)
    )

    informe = acumulador.informe()
    logger.info(
        f"Verificación BL de {B.name or '?'} (n={n}): "
        f"{'aprobada' if informe.passed else 'fallida en ' + ', '.join(informe.axiomas_fallidos)}"
    )
    return informe


def find_noncommutative_witness(B: Algebra) -> Optional[Tuple[int, int]]:
    """Primer par (x, y) en orden canónico con x·y ≠ y·x."""
    return primer_testigo(B.mul_t != B.mul_t.T)


def is_homomorphism(A: Algebra, B: Algebra, mapping: Sequence[int]) -> bool:
    if len(mapping) != A.size:
        raise StructuralError(f"la aplicación tiene {len(mapping)} valores, se esperaban {A.size}")
    B.validar_indice(*mapping)
    f = np.asarray(mapping, dtype=np.intp)
    fx, fy = f[:, None], f[None, :]
    if f[A.identidad] != B.identidad:
        return False
    pares = [(A.mul_t, B.mul_t), (A.ldiv_t, B.ldiv_t), (A.rdiv_t, B.rdiv_t)]
    if isinstance(A, FiniteBL) and isinstance(B, FiniteBL):
        if f[A.zero] != B.zero:
            return False
        pares += [(A.meet_t, B.meet_t), (A.join_t, B.join_t)]
    return all(bool((f[tabla_a] == tabla_b[fx, fy]).all()) for tabla_a, tabla_b in pares)
