"""Componentes conexas de (λ, ρ), irreducibilidad subdirecta de kites, clasificación finita
y representación subdirecta por componentes."""
import logging
from functools import reduce
from typing import List, Optional, Sequence, Tuple

import networkx as nx
from pydantic import BaseModel, ConfigDict

from algebra.bl_verifier import is_homomorphism
from algebra.errores import InvariantError, PreconditionError
from algebra.filter_engine import (
    FilterSet,
    class_map,
    enumerate_normal_filters,
    is_normal,
    is_subdirectly_irreducible,
    quotient,
)
from algebra.hoop_core import FiniteHoop, is_trivial
from algebra.isomorfismo import find_isomorphism
from algebra.kite_builder import (
    FiniteBL,
    KiteElement,
    KiteSpec,
    Parte,
    build_kite,
    element_index,
)

logger = logging.getLogger(__name__)


# ------------------ SCHEMAS ------------------

class ComponentPartition(BaseModel):
    model_config = ConfigDict(frozen=True)

    components: Tuple[Tuple[int, ...], ...]
    j_of: Tuple[Tuple[int, ...], ...]


class KiteClass(BaseModel):
    model_config = ConfigDict(frozen=True)

    tag: str
    n: Optional[int] = None
    reason: Optional[str] = None
    # pi[i] es la nueva etiqueta de i ∈ I; tau[j] la de j ∈ J
    pi: Optional[Tuple[int, ...]] = None
    tau: Optional[Tuple[int, ...]] = None

    @property
    def etiqueta(self) -> str:
        if self.tag in ("CyclicNN", "ChainN1N"):
            return f"{self.tag}({self.n})"
        if self.tag == "NotSIPattern":
            return f"NotSIPattern({self.reason})"
        return self.tag

    @property
    def expected_mv(self) -> Optional[bool]:
        if self.tag in ("Degenerate00", "Degenerate11", "CyclicNN"):
            return True
        if self.tag in ("Degenerate10", "ChainN1N"):
            return False
        return None

    @property
    def expected_good(self) -> Optional[bool]:
        if self.tag == "ChainN1N":
            return False
        if self.tag == "NotSIPattern":
            return None
        return True


class FactorComponent(BaseModel):
    model_config = ConfigDict(frozen=True)

    component: Tuple[int, ...]
    spec: KiteSpec
    filter: FilterSet


class HoopFactor(BaseModel):
    model_config = ConfigDict(frozen=True)

    filter: FilterSet
    hoop: FiniteHoop
    mapping: Tuple[int, ...]


class SubdirectFactor(BaseModel):
    model_config = ConfigDict(frozen=True)

    hoop_filter: FilterSet
    component: Tuple[int, ...]
    spec: KiteSpec
    kite: FiniteBL
    mapping: Tuple[int, ...]


class SubdirectRepresentation(BaseModel):
    model_config = ConfigDict(frozen=True)

    hoop_factors: Tuple[HoopFactor, ...]
    factors: Tuple[SubdirectFactor, ...]
    injective: bool


# ------------------ COMPONENTES ------------------

def connected_components(spec: KiteSpec) -> ComponentPartition:
    """Componentes del grafo no dirigido sobre I con una arista {λ(j), ρ(j)} por cada j."""
    grafo = nx.MultiGraph()
    grafo.add_nodes_from(range(spec.i_size))
    grafo.add_edges_from((spec.lambda_[j], spec.rho[j], j) for j in range(spec.j_size))
    componentes = sorted(tuple(sorted(c)) for c in nx.connected_components(grafo))

    j_of = []
    for componente in componentes:
        miembros = set(componente)
        por_lambda = tuple(j for j in range(spec.j_size) if spec.lambda_[j] in miembros)
        por_rho = tuple(j for j in range(spec.j_size) if spec.rho[j] in miembros)
        if por_lambda != por_rho:
            raise InvariantError(f"λ⁻¹(C) ≠ ρ⁻¹(C) para la componente {list(componente)}")
        j_of.append(por_lambda)
    return ComponentPartition(components=tuple(componentes), j_of=tuple(j_of))


def restrict_spec(spec: KiteSpec, component: Sequence[int]) -> KiteSpec:
    """(I′, J′ = λ⁻¹(I′), λ|J′, ρ|J′) reetiquetados en orden creciente."""
    nuevo = {i: k for k, i in enumerate(sorted(component))}
    js = [j for j in range(spec.j_size) if spec.lambda_[j] in nuevo]
    if any(spec.rho[j] not in nuevo for j in js):
        raise PreconditionError(f"{list(component)} no es unión de componentes conexas")
    return KiteSpec.crear(
        len(nuevo),
        [nuevo[spec.lambda_[j]] for j in js],
        [nuevo[spec.rho[j]] for j in js],
    )


def irreducibility_predicate(h: FiniteHoop, spec: KiteSpec) -> bool:
    """Lado sintáctico del criterio: h subdirectamente irreducible y (λ, ρ) conexo."""
    if is_trivial(h):
        raise PreconditionError("el criterio de irreducibilidad no aplica a kites sobre el hoop trivial")
    if spec.i_size == 0:
        logger.warning("I = ∅: el kite es el álgebra de Boole de dos elementos; se toma como irreducible")
        return True
    return is_subdirectly_irreducible(h).holds and len(connected_components(spec).components) == 1


theorem43_predicate = irreducibility_predicate


# ------------------ CLASIFICACIÓN ------------------

def classify_finite(spec: KiteSpec) -> KiteClass:
    i_size, j_size = spec.i_size, spec.j_size
    if (i_size, j_size) == (0, 0):
        return KiteClass(tag="Degenerate00", pi=(), tau=())
    if len(connected_components(spec).components) != 1:
        return KiteClass(tag="NotSIPattern", reason="disconnected")
    if (i_size, j_size) == (1, 0):
        return KiteClass(tag="Degenerate10", pi=(0,), tau=())
    if (i_size, j_size) == (1, 1):
        return KiteClass(tag="Degenerate11", pi=(0,), tau=(0,))

    lam_inv = spec.lambda_inverse
    if i_size == j_size:
        # σ = ρ∘λ⁻¹ es una permutación; conexa sii es un único ciclo
        inicio = 0
    elif i_size == j_size + 1:
        # el camino empieza en el único punto fuera de ρ(J)
        inicio = next(i for i in range(i_size) if i not in set(spec.rho))
    else:
        return KiteClass(tag="NotSIPattern", reason=f"|I|={i_size}, |J|={j_size}")

    recorrido = [inicio]
    while lam_inv[recorrido[-1]] is not None:
        siguiente = spec.rho[lam_inv[recorrido[-1]]]
        if siguiente == inicio:
            break
        recorrido.append(siguiente)
    if len(recorrido) != i_size:
        return KiteClass(tag="NotSIPattern", reason="not a single cycle or path")

    pi = [0] * i_size
    for k, i in enumerate(recorrido):
        pi[i] = k
    tau = tuple(pi[spec.lambda_[j]] for j in range(j_size))
    tag = "CyclicNN" if i_size == j_size else "ChainN1N"
    return KiteClass(tag=tag, n=j_size, pi=tuple(pi), tau=tau)


# ------------------ DESCOMPOSICIÓN ------------------

def nucleo_restriccion(K: FiniteBL, component: Sequence[int]) -> FilterSet:
    """Elementos superiores cuyas coordenadas en la componente son todas la unidad."""
    u = K.hoop.unit
    return FilterSet.de(
        k for k, x in enumerate(K.elements)
        if x.part == Parte.UPPER and all(x.coords[i] == u for i in component)
    )


def _factores_por_componente(K: FiniteBL) -> List[Tuple[FactorComponent, FiniteBL, Tuple[int, ...]]]:
    """(componente, kite factor, proyección K → factor) para cada componente conexa."""
    if K.spec.i_size == 0:
        identidad = tuple(range(K.size))
        factor = FactorComponent(component=(), spec=K.spec, filter=FilterSet.de([K.one]))
        return [(factor, K, identidad)]

    factores = []
    for componente in connected_components(K.spec).components:
        N = nucleo_restriccion(K, componente)
        if not is_normal(K, N):
            raise InvariantError(f"el núcleo de la componente {list(componente)} no es normal")
        restringida = restrict_spec(K.spec, componente)
        cociente = quotient(K, N)
        kite_factor = build_kite(K.hoop, restringida)
        iso = find_isomorphism(cociente, kite_factor)
        if iso is None:
            raise InvariantError(
                f"K/N no es isomorfo al kite restringido ({restringida.describir()})"
            )
        clases = class_map(K, N)
        proyeccion = tuple(iso[c] for c in clases)
        factores.append(
            (FactorComponent(component=componente, spec=restringida, filter=N), kite_factor, proyeccion)
        )
    return factores


def _inyectiva(size: int, aplicaciones: Sequence[Sequence[int]]) -> bool:
    imagenes = {tuple(f[x] for f in aplicaciones) for x in range(size)}
    return len(imagenes) == size


def decompose(h: FiniteHoop, spec: KiteSpec) -> List[FactorComponent]:
    K = build_kite(h, spec)
    factores = _factores_por_componente(K)
    if not _inyectiva(K.size, [p for _, _, p in factores]):
        raise InvariantError("la aplicación conjunta a los factores no es inyectiva")
    logger.info(f"Descomposición de {K.name}: {len(factores)} factores")
    return [f for f, _, _ in factores]


def _factores_del_hoop(h: FiniteHoop) -> List[HoopFactor]:
    """Familia subdirecta de cocientes s.i. de h, minimizada de forma voraz."""
    identidad = tuple(range(h.size))
    if is_subdirectly_irreducible(h).holds:
        return [HoopFactor(filter=FilterSet.de([h.unit]), hoop=h, mapping=identidad)]

    candidatos = [
        F for F in enumerate_normal_filters(h)
        if len(F) < h.size and is_subdirectly_irreducible(quotient(h, F)).holds
    ]

    def interseccion_trivial(familia: List[FilterSet]) -> bool:
        comun = reduce(lambda s, F: s & set(F.members), familia, set(range(h.size)))
        return comun == {h.unit}

    if not interseccion_trivial(candidatos):
        raise InvariantError(f"los cocientes s.i. de {h.name or 'el hoop'} no separan puntos")
    familia = list(candidatos)
    for F in sorted(candidatos, key=lambda F: (len(F), F.members)):
        resto = [G for G in familia if G != F]
        if resto and interseccion_trivial(resto):
            familia = resto
    return [HoopFactor(filter=F, hoop=quotient(h, F), mapping=class_map(h, F)) for F in familia]


def _levantar(K: FiniteBL, Kq: FiniteBL, mapping: Tuple[int, ...]) -> Tuple[int, ...]:
    """Aplicación K → Kq inducida coordenada a coordenada por h → h/F."""
    return tuple(
        element_index(Kq, KiteElement(part=x.part, coords=tuple(mapping[c] for c in x.coords)))
        for x in K.elements
    )


def subdirect_representation(h: FiniteHoop, spec: KiteSpec) -> SubdirectRepresentation:
    K = build_kite(h, spec)
    if is_trivial(h):
        logger.warning("hoop trivial: el kite es el álgebra de Boole de dos elementos, factor único")
        identidad = tuple(range(K.size))
        factor_hoop = HoopFactor(filter=FilterSet.de([h.unit]), hoop=h, mapping=(0,))
        factor = SubdirectFactor(
            hoop_filter=factor_hoop.filter, component=tuple(range(spec.i_size)),
            spec=spec, kite=K, mapping=identidad,
        )
        return SubdirectRepresentation(hoop_factors=(factor_hoop,), factors=(factor,), injective=True)

    factores_hoop = _factores_del_hoop(h)
    factores: List[SubdirectFactor] = []
    for factor_hoop in factores_hoop:
        Kq = build_kite(factor_hoop.hoop, spec)
        levantada = _levantar(K, Kq, factor_hoop.mapping)
        for componente, kite_factor, proyeccion in _factores_por_componente(Kq):
            mapping = tuple(proyeccion[y] for y in levantada)
            if not is_homomorphism(K, kite_factor, mapping):
                raise InvariantError(f"la proyección a {kite_factor.name} no es un homomorfismo")
            if not irreducibility_predicate(factor_hoop.hoop, componente.spec):
                raise InvariantError(f"el factor {kite_factor.name} no es subdirectamente irreducible")
            factores.append(
                SubdirectFactor(
                    hoop_filter=factor_hoop.filter,
                    component=componente.component,
                    spec=componente.spec,
                    kite=kite_factor,
                    mapping=mapping,
                )
            )

    inyectiva = _inyectiva(K.size, [f.mapping for f in factores])
    if not inyectiva:
        raise InvariantError("la representación subdirecta no es inyectiva")
    logger.info(
        f"Representación subdirecta de {K.name}: {len(factores_hoop)} factores del hoop, "
        f"{len(factores)} factores kite"
    )
    return SubdirectRepresentation(
        hoop_factors=tuple(factores_hoop), factors=tuple(factores), injective=inyectiva
    )
