"""Filtros, filtros normales, congruencias y cocientes de pseudo hoops y pseudo álgebras BL finitas."""
import logging
from functools import reduce
from typing import Iterable, List, Optional, Set, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from algebra.errores import EnumerationBoundError, InvariantError, PreconditionError
from algebra.hoop_core import FiniteHoop, Tabla
from algebra.kite_builder import FiniteBL, Parte
from config import obtener_cota_enumeracion

logger = logging.getLogger(__name__)

Algebra = Union[FiniteHoop, FiniteBL]


# ------------------ SCHEMAS ------------------

class FilterSet(BaseModel):
    model_config = ConfigDict(frozen=True)

    members: Tuple[int, ...]

    @model_validator(mode="after")
    def validar_orden(self):
        if list(self.members) != sorted(set(self.members)):
            raise ValueError("members debe estar ordenado y sin repeticiones")
        return self

    @classmethod
    def de(cls, miembros: Iterable[int]) -> "FilterSet":
        return cls(members=tuple(sorted({int(m) for m in miembros})))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, x: int) -> bool:
        return x in self.members

    def mascara(self, size: int) -> np.ndarray:
        mascara = np.zeros(size, dtype=bool)
        mascara[list(self.members)] = True
        return mascara


class CongruencePartition(BaseModel):
    model_config = ConfigDict(frozen=True)

    classes: Tuple[Tuple[int, ...], ...]
    class_of: Tuple[int, ...]

    @model_validator(mode="after")
    def validar_particion(self):
        for k, clase in enumerate(self.classes):
            if any(self.class_of[x] != k for x in clase):
                raise ValueError(f"class_of no coincide con la clase {k}")
        if sum(len(c) for c in self.classes) != len(self.class_of):
            raise ValueError("las clases no cubren el soporte")
        return self


class Irreducibility(BaseModel):
    model_config = ConfigDict(frozen=True)

    holds: bool
    monolith: Optional[FilterSet] = None


# ------------------ FILTROS ------------------

def _clausura_mascara(B: Algebra, mascara: np.ndarray) -> np.ndarray:
    mascara = mascara.copy()
    mascara[B.identidad] = True
    M, leq = B.mul_t, B.leq
    while True:
        indices = np.flatnonzero(mascara)
        nueva = mascara | leq[indices].any(axis=0)
        nueva[M[np.ix_(indices, indices)].ravel()] = True
        if (nueva == mascara).all():
            return mascara
        mascara = nueva


def filter_closure(B: Algebra, seed: Iterable[int]) -> FilterSet:
    semilla = list(seed)
    if not semilla:
        raise PreconditionError("la semilla del filtro no puede ser vacía")
    B.validar_indice(*semilla)
    mascara = np.zeros(B.size, dtype=bool)
    mascara[semilla] = True
    return FilterSet.de(np.flatnonzero(_clausura_mascara(B, mascara)))


def is_filter(B: Algebra, S: Iterable[int]) -> bool:
    miembros = list(S)
    B.validar_indice(*miembros)
    mascara = np.zeros(B.size, dtype=bool)
    mascara[miembros] = True
    if not mascara[B.identidad]:
        return False
    indices = np.flatnonzero(mascara)
    hacia_arriba = B.leq[indices].any(axis=0)
    productos = B.mul_t[np.ix_(indices, indices)]
    return bool(mascara[hacia_arriba].all() and mascara[productos].all())


def _exigir_filtro(B: Algebra, F: FilterSet) -> np.ndarray:
    if not is_filter(B, F.members):
        raise PreconditionError(f"{list(F.members)} no es un filtro de {B.name or 'el álgebra'}")
    return F.mascara(B.size)


def is_normal(B: Algebra, F: FilterSet) -> bool:
    """b/a ∈ F sii a\\b ∈ F, para todo a, b."""
    mascara = _exigir_filtro(B, F)
    return bool((mascara[B.rdiv_t.T] == mascara[B.ldiv_t]).all())


def _exigir_cota(B: Algebra) -> None:
    cota = obtener_cota_enumeracion()
    if B.size > cota:
        raise EnumerationBoundError(B.size, cota)


def _orden_canonico(filtros: Iterable[FilterSet]) -> List[FilterSet]:
    return sorted(filtros, key=lambda F: (len(F.members), F.members))


def enumerate_filters(B: Algebra) -> List[FilterSet]:
    """Clausuras de singletons y uniones por pares de filtros ya hallados, hasta punto fijo."""
    _exigir_cota(B)
    hallados: Set[FilterSet] = set()
    for x in range(B.size):
        hallados.add(filter_closure(B, [x]))
    pendientes = list(hallados)
    while pendientes:
        nuevos: Set[FilterSet] = set()
        for F in pendientes:
            for G in list(hallados):
                union = filter_closure(B, F.members + G.members)
                if union not in hallados and union not in nuevos:
                    nuevos.add(union)
        hallados |= nuevos
        pendientes = list(nuevos)
    filtros = _orden_canonico(hallados)
    logger.debug(f"{len(filtros)} filtros en {B.name or 'el álgebra'} (n={B.size})")
    return filtros


def enumerate_normal_filters(B: Algebra) -> List[FilterSet]:
    normales = [F for F in enumerate_filters(B) if is_normal(B, F)]
    logger.info(f"{len(normales)} filtros normales en {B.name or 'el álgebra'} (n={B.size})")
    return normales


def is_maximal_filter(B: Algebra, F: FilterSet) -> bool:
    mascara = _exigir_filtro(B, F)
    if mascara.all():
        raise PreconditionError("el filtro no es propio: coincide con todo el soporte")
    for x in np.flatnonzero(~mascara):
        extendida = mascara.copy()
        extendida[x] = True
        if not _clausura_mascara(B, extendida).all():
            return False
    return True


# ------------------ CONGRUENCIAS Y COCIENTES ------------------

def _tablas(B: Algebra) -> List[Tuple[str, np.ndarray]]:
    tablas = [("mul", B.mul_t), ("ldiv", B.ldiv_t), ("rdiv", B.rdiv_t)]
    if isinstance(B, FiniteBL):
        tablas += [("meet", B.meet_t), ("join", B.join_t)]
    return tablas


def congruence_of(B: Algebra, F: FilterSet) -> CongruencePartition:
    """a ≈_F b sii a\\b, b\\a ∈ F; clases numeradas por su menor elemento."""
    if not is_normal(B, F):
        raise PreconditionError(f"{list(F.members)} no es un filtro normal")
    mascara = F.mascara(B.size)
    L = B.ldiv_t
    relacion = mascara[L] & mascara[L.T]
    representante = relacion.argmax(axis=1)
    if not (relacion == relacion[representante]).all():
        raise InvariantError("≈_F no es una relación de equivalencia")
    representantes = sorted(set(int(r) for r in representante))
    numero = {r: k for k, r in enumerate(representantes)}
    clase = np.array([numero[int(r)] for r in representante], dtype=np.intp)

    # compatibilidad: la clase de x∘y depende solo de las clases de x e y
    reps = np.array(representantes, dtype=np.intp)
    for nombre, tabla in _tablas(B):
        inducida = clase[tabla[np.ix_(reps, reps)]]
        if not (clase[tabla] == inducida[clase[:, None], clase[None, :]]).all():
            raise InvariantError(f"la congruencia de {list(F.members)} no es compatible con {nombre}")

    clases = tuple(tuple(int(x) for x in np.flatnonzero(clase == k)) for k in range(len(reps)))
    return CongruencePartition(classes=clases, class_of=tuple(int(c) for c in clase))


def class_map(B: Algebra, F: FilterSet) -> Tuple[int, ...]:
    return congruence_of(B, F).class_of


def _tabla_inducida(tabla: np.ndarray, clase: np.ndarray, reps: np.ndarray) -> Tabla:
    return tuple(tuple(int(v) for v in fila) for fila in clase[tabla[np.ix_(reps, reps)]])


def quotient(B: Algebra, F: FilterSet) -> Algebra:
    particion = congruence_of(B, F)
    clase = np.asarray(particion.class_of, dtype=np.intp)
    reps = np.array([c[0] for c in particion.classes], dtype=np.intp)
    k = len(reps)
    etiquetas = tuple(f"c{i}" for i in range(k))
    nombre = f"{B.name or '?'}/{{{','.join(str(m) for m in F.members)}}}"
    comunes = dict(
        name=nombre,
        size=k,
        mul=_tabla_inducida(B.mul_t, clase, reps),
        ldiv=_tabla_inducida(B.ldiv_t, clase, reps),
        rdiv=_tabla_inducida(B.rdiv_t, clase, reps),
        labels=etiquetas,
    )
    if isinstance(B, FiniteHoop):
        cociente = FiniteHoop(unit=int(clase[B.unit]), **comunes)
    else:
        cociente = FiniteBL(
            zero=int(clase[B.zero]),
            one=int(clase[B.one]),
            meet=_tabla_inducida(B.meet_t, clase, reps),
            join=_tabla_inducida(B.join_t, clase, reps),
            provenance=f"cociente de {B.name or '?'} por el filtro {list(F.members)}",
            **comunes,
        )
    logger.info(f"Cociente {nombre}: {B.size} → {k} elementos")
    return cociente


def is_subdirectly_irreducible(B: Algebra) -> Irreducibility:
    """Existe un filtro normal no trivial mínimo (el monolito).

    Las álgebras triviales no se consideran subdirectamente irreducibles.
    """
    if B.size == 1:
        logger.warning(f"{B.name or 'el álgebra'} es trivial: se toma como no subdirectamente irreducible")
        return Irreducibility(holds=False)
    no_triviales = [F for F in enumerate_normal_filters(B) if F.members != (B.identidad,)]
    interseccion = reduce(lambda s, F: s & set(F.members), no_triviales, set(range(B.size)))
    if interseccion == {B.identidad}:
        return Irreducibility(holds=False)
    return Irreducibility(holds=True, monolith=FilterSet.de(interseccion))


# ------------------ FILTROS DEL KITE ------------------

def _exigir_kite(K: FiniteBL) -> None:
    if not isinstance(K, FiniteBL) or not K.es_kite:
        raise PreconditionError(f"{getattr(K, 'name', None) or 'el álgebra'} no es un kite")


def upper_block(K: FiniteBL) -> FilterSet:
    """El bloque superior A^I."""
    _exigir_kite(K)
    return FilterSet.de(i for i, x in enumerate(K.elements) if x.part == Parte.UPPER)


def lift_hoop_filter(K: FiniteBL, N: FilterSet) -> FilterSet:
    """N^I: elementos superiores con todas sus coordenadas en N."""
    _exigir_kite(K)
    if not is_filter(K.hoop, N.members):
        raise PreconditionError(f"{list(N.members)} no es un filtro de {K.hoop.name or 'el hoop'}")
    miembros = set(N.members)
    return FilterSet.de(
        i for i, x in enumerate(K.elements)
        if x.part == Parte.UPPER and all(c in miembros for c in x.coords)
    )
