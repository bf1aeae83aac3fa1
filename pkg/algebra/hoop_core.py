"""Pseudo hoops finitos como tablas de operaciones y verificación exhaustiva de sus axiomas.

Convenciones de las tablas (índices del soporte 0..size-1):
    mul[x][y]  = x·y
    ldiv[x][y] = x\\y   (división izquierda)
    rdiv[x][y] = x/y    (división derecha)
El orden se deriva como a ≤ b sii a\\b = 1.
"""
import logging
from functools import lru_cache
from typing import Any, Dict, List, Mapping, Optional, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, ValidationError, model_validator

from algebra.errores import InvalidSizeError, InvariantError, PreconditionError, StructuralError
from algebra.orden import (
    Testigo,
    fallas_orden_parcial,
    primer_testigo,
    tabla_infimos,
    tabla_supremos,
    todos_los_testigos,
)

logger = logging.getLogger(__name__)

Tabla = Tuple[Tuple[int, ...], ...]


# ------------------ TABLAS ------------------

@lru_cache(maxsize=2048)
def como_arreglo(tabla: Tabla) -> np.ndarray:
    """Vista numpy de solo lectura de una tabla (cacheada por contenido)."""
    arreglo = np.array(tabla, dtype=np.intp).reshape(len(tabla), len(tabla))
    arreglo.setflags(write=False)
    return arreglo


@lru_cache(maxsize=2048)
def _orden_desde_division(ldiv: Tabla, unidad: int) -> np.ndarray:
    leq = como_arreglo(ldiv) == unidad
    leq.setflags(write=False)
    return leq


def validar_tabla(nombre: str, tabla: Tabla, size: int) -> None:
    if len(tabla) != size:
        raise ValueError(f"la tabla {nombre} tiene {len(tabla)} filas, se esperaban {size}")
    for i, fila in enumerate(tabla):
        if len(fila) != size:
            raise ValueError(f"la fila {i} de {nombre} tiene {len(fila)} entradas, se esperaban {size}")
        for j, valor in enumerate(fila):
            if not 0 <= valor < size:
                raise ValueError(f"{nombre}[{i}][{j}] = {valor} fuera del soporte 0..{size - 1}")


def validar_etiquetas(etiquetas: Optional[Tuple[str, ...]], size: int, sin_comas: bool = True) -> None:
    if etiquetas is None:
        return
    if len(etiquetas) != size:
        raise ValueError(f"se esperaban {size} etiquetas, se recibieron {len(etiquetas)}")
    if len(set(etiquetas)) != size:
        raise ValueError("las etiquetas deben ser distintas")
    for etiqueta in etiquetas:
        if not etiqueta or (sin_comas and "," in etiqueta) or any(c.isspace() for c in etiqueta):
            raise ValueError(f"etiqueta inválida {etiqueta!r}: no vacía, sin comas ni espacios")


class TablasMixin:
    """Vistas numpy y orden derivado, compartidos por hoops y álgebras BL."""

    @property
    def identidad(self) -> int:
        raise NotImplementedError

    @property
    def mul_t(self) -> np.ndarray:
        return como_arreglo(self.mul)

    @property
    def ldiv_t(self) -> np.ndarray:
        return como_arreglo(self.ldiv)

    @property
    def rdiv_t(self) -> np.ndarray:
        return como_arreglo(self.rdiv)

    @property
    def leq(self) -> np.ndarray:
        return _orden_desde_division(self.ldiv, self.identidad)

    @property
    def etiquetas(self) -> Tuple[str, ...]:
        if self.labels is not None:
            return self.labels
        return tuple("1" if i == self.identidad else f"a{i}" for i in range(self.size))

    def validar_indice(self, *indices: int) -> None:
        for idx in indices:
            if not isinstance(idx, (int, np.integer)) or not 0 <= idx < self.size:
                raise StructuralError(f"índice {idx!r} fuera del soporte 0..{self.size - 1}")


# ------------------ SCHEMAS ------------------

class FiniteHoop(TablasMixin, BaseModel):
    model_config = ConfigDict(frozen=True)

    name: Optional[str] = None
    size: int
    unit: int
    mul: Tabla
    ldiv: Tabla
    rdiv: Tabla
    labels: Optional[Tuple[str, ...]] = None

    @model_validator(mode="after")
    def validar_forma(self):
        if self.size < 1:
            raise ValueError("size debe ser positivo")
        if not 0 <= self.unit < self.size:
            raise ValueError(f"unit = {self.unit} fuera del soporte")
        for nombre in ("mul", "ldiv", "rdiv"):
            validar_tabla(nombre, getattr(self, nombre), self.size)
        validar_etiquetas(self.labels, self.size)
        return self

    @property
    def identidad(self) -> int:
        return self.unit


class Violation(BaseModel):
    model_config = ConfigDict(frozen=True)

    axiom: str
    witness: Tuple[int, ...]


class AxiomReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    passed: bool
    violations: Tuple[Violation, ...] = ()

    @model_validator(mode="after")
    def validar_consistencia(self):
        if self.passed != (len(self.violations) == 0):
            raise ValueError("passed debe ser True exactamente cuando no hay violaciones")
        return self

    @property
    def axiomas_fallidos(self) -> List[str]:
        return list(dict.fromkeys(v.axiom for v in self.violations))


class AcumuladorTestigos:
    """Recoge el primer testigo por axioma (o todos, en modo detallado) en orden canónico."""

    def __init__(self, todos: bool = False):
        self.todos = todos
        self._por_axioma: Dict[str, List[Testigo]] = {}

    def registrar(self, axioma: str, mascara: np.ndarray) -> None:
        if self.todos:
            testigos = todos_los_testigos(mascara)
            if testigos:
                self._por_axioma.setdefault(axioma, []).extend(testigos)
        elif axioma not in self._por_axioma:
            testigo = primer_testigo(mascara)
            if testigo is not None:
                self._por_axioma[axioma] = [testigo]

    def informe(self) -> AxiomReport:
        violaciones = tuple(
            Violation(axiom=axioma, witness=testigo)
            for axioma, testigos in self._por_axioma.items()
            for testigo in testigos
        )
        return AxiomReport(passed=not violaciones, violations=violaciones)


def como_hoop(candidato: Union[FiniteHoop, Mapping[str, Any]]) -> FiniteHoop:
    if isinstance(candidato, FiniteHoop):
        return candidato
    try:
        return FiniteHoop.model_validate(candidato)
    except ValidationError as e:
        raise StructuralError(f"tablas mal formadas: {e}") from e


# ------------------ AXIOMAS ------------------

def check_pseudo_hoop(
    tablas: Union[FiniteHoop, Mapping[str, Any]], all_witnesses: bool = False
) -> AxiomReport:
    """Barrido exhaustivo de los axiomas (i)-(v), residuación y orden parcial."""
    h = como_hoop(tablas)
    n, u = h.size, h.unit
    M, L, R, leq = h.mul_t, h.ldiv_t, h.rdiv_t, h.leq
    a = np.arange(n)
    A2, B2 = a[:, None], a[None, :]
    A3, B3, C3 = a[:, None, None], a[None, :, None], a[None, None, :]
    acumulador = AcumuladorTestigos(all_witnesses)

    for mascara in fallas_orden_parcial(leq):
        acumulador.registrar("partial-order", mascara)
    acumulador.registrar("partial-order", ~leq[:, u])
    # a ≤ b sii b/a = 1
    acumulador.registrar("partial-order", leq != (R.T == u))
    infimos = tabla_infimos(leq)
    acumulador.registrar("partial-order", infimos < 0)

    acumulador.registrar("neutrality", (M[u, :] != a) | (M[:, u] != a))
    acumulador.registrar("self-division", (np.diag(L) != u) | (np.diag(R) != u))
    acumulador.registrar("associativity", M[M[A3, B3], C3] != M[A3, M[B3, C3]])
    # (iii) c/(a·b) = (c/b)/a
    acumulador.registrar("right-division-product", R[C3, M[A3, B3]] != R[R[C3, B3], A3])
    # (iv) (a·b)\c = b\(a\c)
    acumulador.registrar("left-division-product", L[M[A3, B3], C3] != L[B3, L[A3, C3]])

    # (v) forma corregida: (b/a)·a = (a/b)·b = a·(a\b) = b·(b\a)
    e1 = M[R[B2, A2], A2]
    e2 = M[R[A2, B2], B2]
    e3 = M[A2, L[A2, B2]]
    e4 = M[B2, L[B2, A2]]
    distinto_de_infimo = (infimos >= 0) & (e1 != infimos)
    acumulador.registrar(
        "meet-coincidence", (e1 != e2) | (e1 != e3) | (e1 != e4) | distinto_de_infimo
    )

    p = leq[M[A3, B3], C3]
    q = leq[B3, L[A3, C3]]
    r = leq[A3, R[C3, B3]]
    acumulador.registrar("residuation", (p != q) | (p != r))

    # a ≤ b sii a = c·b para algún c
    divisible = np.zeros((n, n), dtype=bool)
    divisible[M, np.broadcast_to(B2, (n, n))] = True
    acumulador.registrar("order-divisibility", leq != divisible)

    informe = acumulador.informe()
    logger.info(
        f"Verificación de pseudo hoop {h.name or '?'} (n={n}): "
        f"{'aprobada' if informe.passed else 'fallida en ' + ', '.join(informe.axiomas_fallidos)}"
    )
    return informe


def derive_order(h: FiniteHoop) -> np.ndarray:
    """Relación a ≤ b sii a\\b = 1 (matriz booleana de solo lectura)."""
    return h.leq


def meet(h: FiniteHoop, a: int, b: int) -> int:
    h.validar_indice(a, b)
    return int(h.mul_t[h.rdiv_t[b, a], a])


def join(h: FiniteHoop, a: int, b: int) -> int:
    """((b/a)\\b) ∧ ((a/b)\\a); en un hoop básico coincide con el supremo."""
    h.validar_indice(a, b)
    if tabla_supremos(h.leq)[a, b] < 0:
        raise PreconditionError(f"el par ({a}, {b}) no tiene supremo en {h.name or 'el hoop'}")
    L, R = h.ldiv_t, h.rdiv_t
    return meet(h, int(L[R[b, a], b]), int(L[R[a, b], a]))


def no_basico_con_testigo(h: FiniteHoop) -> Optional[Tuple[str, Testigo]]:
    L, R, leq = h.ldiv_t, h.rdiv_t, h.leq
    a = np.arange(h.size)
    A3, B3, C3 = a[:, None, None], a[None, :, None], a[None, None, :]
    # (i) c/(b/a) ≤ c/(c/(a/b))
    primera = ~leq[R[C3, R[B3, A3]], R[C3, R[C3, R[A3, B3]]]]
    testigo = primer_testigo(primera)
    if testigo is not None:
        return "basic-i", testigo
    # (ii) (a\b)\c ≤ ((b\a)\c)\c
    segunda = ~leq[L[L[A3, B3], C3], L[L[L[B3, A3], C3], C3]]
    testigo = primer_testigo(segunda)
    if testigo is not None:
        return "basic-ii", testigo
    return None


def check_basic(h: FiniteHoop) -> bool:
    return no_basico_con_testigo(h) is None


def check_wajsberg(h: FiniteHoop) -> bool:
    L, R = h.ldiv_t, h.rdiv_t
    a = np.arange(h.size)
    A2, B2 = a[:, None], a[None, :]
    # (W1) (b/a)\b = (a/b)\a ; (W2) b/(a\b) = a/(b\a)
    w1 = L[R[B2, A2], B2] == L[R[A2, B2], A2]
    w2 = R[B2, L[A2, B2]] == R[A2, L[B2, A2]]
    return bool(w1.all() and w2.all())


def check_commutative(h: FiniteHoop) -> bool:
    simetrica = bool((h.mul_t == h.mul_t.T).all())
    # x\y = y/x en la convención rdiv[x][y] = x/y
    divisiones_iguales = bool((h.ldiv_t == h.rdiv_t.T).all())
    if simetrica != divisiones_iguales:
        raise InvariantError(
            f"conmutatividad de · ({simetrica}) y coincidencia de divisiones "
            f"({divisiones_iguales}) discrepan en {h.name or 'el hoop'}"
        )
    return simetrica


def check_distributive(h: FiniteHoop) -> bool:
    infimos, supremos = tabla_infimos(h.leq), tabla_supremos(h.leq)
    if (infimos < 0).any() or (supremos < 0).any():
        return False
    a = np.arange(h.size)
    A3, B3, C3 = a[:, None, None], a[None, :, None], a[None, None, :]
    izquierda = infimos[A3, supremos[B3, C3]]
    derecha = supremos[infimos[A3, B3], infimos[A3, C3]]
    return bool((izquierda == derecha).all())


def is_trivial(h: FiniteHoop) -> bool:
    return h.size == 1


# ------------------ CATÁLOGO BASE ------------------

def _etiquetas_cadena(n: int) -> Tuple[str, ...]:
    return tuple(f"e{i}" for i in range(n - 1)) + ("1",)


def godel_chain(n: int) -> FiniteHoop:
    if n < 1:
        raise InvalidSizeError(f"una cadena necesita al menos un elemento, se pidió n={n}")
    tope = n - 1
    mul = tuple(tuple(min(i, j) for j in range(n)) for i in range(n))
    ldiv = tuple(tuple(tope if i <= j else j for j in range(n)) for i in range(n))
    rdiv = tuple(tuple(tope if j <= i else i for j in range(n)) for i in range(n))
    return FiniteHoop(
        name=f"G{n}", size=n, unit=tope, mul=mul, ldiv=ldiv, rdiv=rdiv, labels=_etiquetas_cadena(n)
    )


def lukasiewicz_chain(n: int) -> FiniteHoop:
    if n < 1:
        raise InvalidSizeError(f"una cadena necesita al menos un elemento, se pidió n={n}")
    tope = n - 1
    mul = tuple(tuple(max(0, i + j - tope) for j in range(n)) for i in range(n))
    ldiv = tuple(tuple(min(tope, tope - i + j) for j in range(n)) for i in range(n))
    rdiv = tuple(tuple(min(tope, tope - j + i) for j in range(n)) for i in range(n))
    return FiniteHoop(
        name=f"Ł{n}", size=n, unit=tope, mul=mul, ldiv=ldiv, rdiv=rdiv, labels=_etiquetas_cadena(n)
    )


def trivial_hoop() -> FiniteHoop:
    return godel_chain(1).model_copy(update={"name": "trivial"})


def _como_tabla(arreglo: np.ndarray) -> Tabla:
    return tuple(tuple(int(v) for v in fila) for fila in arreglo)


def _envolver(etiqueta: str) -> str:
    return f"({etiqueta})" if "." in etiqueta else etiqueta


def direct_product(h1: FiniteHoop, h2: FiniteHoop) -> FiniteHoop:
    """Producto directo; el par (x1, x2) ocupa el índice x1*|h2| + x2."""
    n2 = h2.size
    k = np.arange(h1.size * n2)
    p1, p2 = k // n2, k % n2
    X1, Y1 = p1[:, None], p1[None, :]
    X2, Y2 = p2[:, None], p2[None, :]

    def coordenadas(t1: np.ndarray, t2: np.ndarray) -> Tabla:
        return _como_tabla(t1[X1, Y1] * n2 + t2[X2, Y2])

    etiquetas = tuple(
        "1" if (x1 == h1.unit and x2 == h2.unit)
        else f"{_envolver(h1.etiquetas[x1])}.{_envolver(h2.etiquetas[x2])}"
        for x1, x2 in zip(p1.tolist(), p2.tolist())
    )
    return FiniteHoop(
        name=f"({h1.name or '?'}*{h2.name or '?'})",
        size=h1.size * n2,
        unit=h1.unit * n2 + h2.unit,
        mul=coordenadas(h1.mul_t, h2.mul_t),
        ldiv=coordenadas(h1.ldiv_t, h2.ldiv_t),
        rdiv=coordenadas(h1.rdiv_t, h2.rdiv_t),
        labels=etiquetas,
    )


def ordinal_sum(h1: FiniteHoop, h2: FiniteHoop) -> FiniteHoop:
    """h1 sin su unidad queda estrictamente debajo de h2; la unidad común es la de h2."""
    inferiores = [x for x in range(h1.size) if x != h1.unit]
    k = len(inferiores)
    size = k + h2.size
    unidad = k + h2.unit
    posicion = {x: i for i, x in enumerate(inferiores)}
    posicion[h1.unit] = unidad

    def abajo(i: int) -> bool:
        return i < k

    def operar(tabla1: Tabla, tabla2: Tabla, x: int, y: int, mixta) -> int:
        if abajo(x) and abajo(y):
            return posicion[tabla1[inferiores[x]][inferiores[y]]]
        if not abajo(x) and not abajo(y):
            return k + tabla2[x - k][y - k]
        return mixta(x, y)

    # x abajo, y arriba: x·y = y·x = x, x\y = 1, y\x = x, x/y = x, y/x = 1
    mul = tuple(
        tuple(operar(h1.mul, h2.mul, x, y, lambda p, q: p if abajo(p) else q) for y in range(size))
        for x in range(size)
    )
    ldiv = tuple(
        tuple(operar(h1.ldiv, h2.ldiv, x, y, lambda p, q: unidad if abajo(p) else q) for y in range(size))
        for x in range(size)
    )
    rdiv = tuple(
        tuple(operar(h1.rdiv, h2.rdiv, x, y, lambda p, q: p if abajo(p) else unidad) for y in range(size))
        for x in range(size)
    )
    etiquetas = tuple(f"{h1.etiquetas[x]}_0" for x in inferiores) + tuple(
        "1" if j == h2.unit else f"{h2.etiquetas[j]}_1" for j in range(h2.size)
    )
    return FiniteHoop(
        name=f"({h1.name or '?'}+{h2.name or '?'})",
        size=size,
        unit=unidad,
        mul=mul,
        ldiv=ldiv,
        rdiv=rdiv,
        labels=etiquetas,
    )
