"""Construcción del kite (Ā)^J ⊎ A^I a partir de un pseudo hoop básico y dos inyecciones λ, ρ: J → I.

Convención única para la división derecha: rdiv(x, y) = x/y. Los ocho casos de división
quedan así (f̄, ḡ elementos de la parte inferior, a, b de la superior):

    ⟨a⟩\\⟨b⟩ = ⟨a_i\\b_i⟩              ⟨a⟩/⟨b⟩ = ⟨a_i/b_i⟩
    ⟨a⟩\\⟨f̄⟩ = ⟨(f_j·a_λ(j))‾⟩        ⟨f̄⟩/⟨a⟩ = ⟨(a_ρ(j)·f_j)‾⟩
    ⟨f̄⟩\\⟨ḡ⟩ = ⟨f_k/g_k : k=ρ⁻¹(i)⟩   ⟨ḡ⟩/⟨f̄⟩ = ⟨g_k\\f_k : k=λ⁻¹(i)⟩   (1 si k no está definido)
    ⟨f̄⟩\\⟨a⟩ = 1                      ⟨a⟩/⟨f̄⟩ = 1
"""
import logging
from enum import Enum
from itertools import product
from typing import Dict, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from algebra.errores import (
    InvariantError,
    NonInjectiveError,
    NotBasicError,
    PreconditionError,
    StructuralError,
)
from algebra.hoop_core import (
    FiniteHoop,
    Tabla,
    TablasMixin,
    check_pseudo_hoop,
    como_arreglo,
    is_trivial,
    no_basico_con_testigo,
    validar_etiquetas,
    validar_tabla,
)
from algebra.orden import tabla_infimos, tabla_supremos

logger = logging.getLogger(__name__)


# ------------------ SCHEMAS ------------------

class Parte(str, Enum):
    LOWER = "L"
    UPPER = "U"


class KiteElement(BaseModel):
    model_config = ConfigDict(frozen=True)

    part: Parte
    coords: Tuple[int, ...]


class KiteSpec(BaseModel):
    model_config = ConfigDict(frozen=True, populate_by_name=True)

    i_size: int = Field(ge=0)
    j_size: int = Field(ge=0)
    lambda_: Tuple[int, ...] = Field(alias="lambda")
    rho: Tuple[int, ...]

    @model_validator(mode="after")
    def validar_forma(self):
        for nombre, mapa in (("lambda", self.lambda_), ("rho", self.rho)):
            if len(mapa) != self.j_size:
                raise ValueError(f"{nombre} tiene {len(mapa)} valores, se esperaban j_size={self.j_size}")
            for valor in mapa:
                if not 0 <= valor < self.i_size:
                    raise ValueError(f"{nombre} toma el valor {valor}, fuera de I = 0..{self.i_size - 1}")
        return self

    @classmethod
    def crear(cls, i_size: int, lambda_, rho) -> "KiteSpec":
        return cls(i_size=i_size, j_size=len(lambda_), lambda_=tuple(lambda_), rho=tuple(rho))

    @property
    def es_inyectiva(self) -> bool:
        return len(set(self.lambda_)) == self.j_size and len(set(self.rho)) == self.j_size

    def validar_inyectividad(self) -> None:
        if not self.es_inyectiva:
            raise NonInjectiveError(
                f"lambda={list(self.lambda_)} y rho={list(self.rho)} deben ser inyectivas"
            )

    def _inversa(self, mapa: Tuple[int, ...]) -> Tuple[Optional[int], ...]:
        inversa: List[Optional[int]] = [None] * self.i_size
        for j, i in enumerate(mapa):
            inversa[i] = j
        return tuple(inversa)

    @property
    def lambda_inverse(self) -> Tuple[Optional[int], ...]:
        return self._inversa(self.lambda_)

    @property
    def rho_inverse(self) -> Tuple[Optional[int], ...]:
        return self._inversa(self.rho)

    def describir(self) -> str:
        return f"I={self.i_size}, J={self.j_size}, λ={list(self.lambda_)}, ρ={list(self.rho)}"


class FiniteBL(TablasMixin, BaseModel):
    model_config = ConfigDict(frozen=True)

    name: Optional[str] = None
    size: int
    zero: int
    one: int
    mul: Tabla
    ldiv: Tabla
    rdiv: Tabla
    meet: Tabla
    join: Tabla
    labels: Optional[Tuple[str, ...]] = None
    elements: Optional[Tuple[KiteElement, ...]] = None
    hoop: Optional[FiniteHoop] = None
    spec: Optional[KiteSpec] = None
    verified: bool = True
    provenance: Optional[str] = None

    @model_validator(mode="after")
    def validar_forma(self):
        if self.size < 1:
            raise ValueError("size debe ser positivo")
        for nombre in ("zero", "one"):
            if not 0 <= getattr(self, nombre) < self.size:
                raise ValueError(f"{nombre} fuera del soporte")
        for nombre in ("mul", "ldiv", "rdiv", "meet", "join"):
            validar_tabla(nombre, getattr(self, nombre), self.size)
        validar_etiquetas(self.labels, self.size, sin_comas=False)
        if self.elements is not None and len(self.elements) != self.size:
            raise ValueError(f"se esperaban {self.size} elementos, se recibieron {len(self.elements)}")
        if (self.hoop is None) != (self.spec is None):
            raise ValueError("hoop y spec deben venir juntos")
        return self

    @property
    def identidad(self) -> int:
        return self.one

    @property
    def meet_t(self) -> np.ndarray:
        return como_arreglo(self.meet)

    @property
    def join_t(self) -> np.ndarray:
        return como_arreglo(self.join)

    @property
    def leq_reticulo(self) -> np.ndarray:
        """Orden del retículo: x ≤ y sii x ∧ y = x."""
        return self.meet_t == np.arange(self.size)[:, None]

    @property
    def es_kite(self) -> bool:
        return self.elements is not None and self.hoop is not None and self.spec is not None


class Verdict(BaseModel):
    model_config = ConfigDict(frozen=True)

    holds: bool
    witness: Optional[int] = None


# ------------------ OPERACIONES DEL KITE ------------------

Crudo = Tuple[str, Tuple[int, ...]]


class OperacionesKite:
    """Fórmulas del kite sobre elementos crudos (parte, coordenadas)."""

    def __init__(self, hoop: FiniteHoop, spec: KiteSpec):
        self.hoop = hoop
        self.spec = spec
        self.M, self.L, self.R = hoop.mul, hoop.ldiv, hoop.rdiv
        self.u = hoop.unit
        self.leq_hoop = hoop.leq
        self.lam, self.rho = spec.lambda_, spec.rho
        self.lam_inv, self.rho_inv = spec.lambda_inverse, spec.rho_inverse
        self.cero: Crudo = ("L", (self.u,) * spec.j_size)
        self.uno: Crudo = ("U", (self.u,) * spec.i_size)

    def mul(self, x: Crudo, y: Crudo) -> Crudo:
        (px, a), (py, b) = x, y
        if px == "U" and py == "U":
            return "U", tuple(self.M[ai][bi] for ai, bi in zip(a, b))
        if px == "U":
            # ⟨a⟩·⟨f̄⟩ = ⟨(f_j / a_λ(j))‾⟩
            return "L", tuple(self.R[f][a[self.lam[j]]] for j, f in enumerate(b))
        if py == "U":
            # ⟨f̄⟩·⟨a⟩ = ⟨(a_ρ(j) \ f_j)‾⟩
            return "L", tuple(self.L[b[self.rho[j]]][f] for j, f in enumerate(a))
        return self.cero

    def ldiv(self, x: Crudo, y: Crudo) -> Crudo:
        (px, a), (py, b) = x, y
        if px == "U" and py == "U":
            return "U", tuple(self.L[ai][bi] for ai, bi in zip(a, b))
        if px == "U":
            # ⟨a⟩\⟨f̄⟩ = ⟨(f_j · a_λ(j))‾⟩
            return "L", tuple(self.M[f][a[self.lam[j]]] for j, f in enumerate(b))
        if py == "L":
            # ⟨f̄⟩\⟨ḡ⟩ = ⟨f_k / g_k⟩ con k = ρ⁻¹(i)
            return "U", tuple(
                self.u if k is None else self.R[a[k]][b[k]] for k in self.rho_inv
            )
        return self.uno

    def rdiv(self, x: Crudo, y: Crudo) -> Crudo:
        (px, a), (py, b) = x, y
        if px == "U" and py == "U":
            return "U", tuple(self.R[ai][bi] for ai, bi in zip(a, b))
        if px == "L" and py == "U":
            # ⟨f̄⟩/⟨a⟩ = ⟨(a_ρ(j) · f_j)‾⟩
            return "L", tuple(self.M[b[self.rho[j]]][f] for j, f in enumerate(a))
        if px == "L":
            # ⟨ḡ⟩/⟨f̄⟩ = ⟨g_k \ f_k⟩ con k = λ⁻¹(i)
            return "U", tuple(
                self.u if k is None else self.L[a[k]][b[k]] for k in self.lam_inv
            )
        return self.uno

    def menor_o_igual(self, x: Crudo, y: Crudo) -> bool:
        (px, a), (py, b) = x, y
        if px != py:
            return px == "L"
        if px == "U":
            return all(self.leq_hoop[ai, bi] for ai, bi in zip(a, b))
        # la parte inferior está invertida: f̄ ≤ ḡ sii g ≤ f
        return all(self.leq_hoop[bi, ai] for ai, bi in zip(a, b))

    def validar(self, x: KiteElement) -> Crudo:
        largo = self.spec.j_size if x.part == Parte.LOWER else self.spec.i_size
        if len(x.coords) != largo:
            raise StructuralError(
                f"el elemento {x.part.value} necesita {largo} coordenadas, tiene {len(x.coords)}"
            )
        self.hoop.validar_indice(*x.coords)
        return x.part.value, tuple(x.coords)


def _elemento(crudo: Crudo) -> KiteElement:
    return KiteElement(part=Parte(crudo[0]), coords=crudo[1])


def enumerar_elementos(n: int, spec: KiteSpec) -> List[Crudo]:
    """Orden canónico: bloque inferior lexicográfico, luego bloque superior lexicográfico."""
    inferiores = [("L", c) for c in product(range(n), repeat=spec.j_size)]
    superiores = [("U", c) for c in product(range(n), repeat=spec.i_size)]
    return inferiores + superiores


def etiqueta_elemento(hoop: FiniteHoop, x: KiteElement) -> str:
    return f"{x.part.value}:" + ",".join(hoop.etiquetas[c] for c in x.coords)


def build_kite(h: FiniteHoop, spec: KiteSpec, force: bool = False) -> FiniteBL:
    spec.validar_inyectividad()
    informe = check_pseudo_hoop(h)
    if not informe.passed:
        raise PreconditionError(
            f"{h.name or 'el hoop'} no es un pseudo hoop: falla {', '.join(informe.axiomas_fallidos)}"
        )
    verificado = True
    testigo = no_basico_con_testigo(h)
    if testigo is not None:
        axioma, tupla = testigo
        mensaje = f"{h.name or 'el hoop'} no es básico: falla {axioma} en {tupla}"
        if not force:
            raise NotBasicError(mensaje, tupla)
        logger.warning(f"{mensaje}; se construye el kite sin verificar (force)")
        verificado = False

    ops = OperacionesKite(h, spec)
    crudos = enumerar_elementos(h.size, spec)
    indice: Dict[Crudo, int] = {x: k for k, x in enumerate(crudos)}
    rango = range(len(crudos))

    def tabular(operacion) -> Tabla:
        return tuple(tuple(indice[operacion(x, y)] for y in crudos) for x in crudos)

    leq = np.array([[ops.menor_o_igual(x, y) for y in crudos] for x in crudos], dtype=bool)
    infimos, supremos = tabla_infimos(leq), tabla_supremos(leq)
    if (infimos < 0).any() or (supremos < 0).any():
        raise InvariantError("el orden del kite no es un retículo")

    kite = FiniteBL(
        name=f"K({h.name or '?'}; {spec.describir()})",
        size=len(crudos),
        zero=indice[ops.cero],
        one=indice[ops.uno],
        mul=tabular(ops.mul),
        ldiv=tabular(ops.ldiv),
        rdiv=tabular(ops.rdiv),
        meet=tuple(tuple(int(infimos[x, y]) for y in rango) for x in rango),
        join=tuple(tuple(int(supremos[x, y]) for y in rango) for x in rango),
        labels=tuple(etiqueta_elemento(h, _elemento(x)) for x in crudos),
        elements=tuple(_elemento(x) for x in crudos),
        hoop=h,
        spec=spec,
        verified=verificado,
    )
    logger.info(f"Kite construido sobre {h.name or '?'} ({spec.describir()}): {kite.size} elementos")
    return kite


def _operaciones(K: FiniteBL) -> OperacionesKite:
    if not K.es_kite:
        raise PreconditionError(f"{K.name or 'el álgebra'} no es un kite (faltan hoop/spec/elements)")
    return OperacionesKite(K.hoop, K.spec)


def kite_mul(K: FiniteBL, x: KiteElement, y: KiteElement) -> KiteElement:
    ops = _operaciones(K)
    return _elemento(ops.mul(ops.validar(x), ops.validar(y)))


def kite_ldiv(K: FiniteBL, x: KiteElement, y: KiteElement) -> KiteElement:
    """x\\y"""
    ops = _operaciones(K)
    return _elemento(ops.ldiv(ops.validar(x), ops.validar(y)))


def kite_rdiv(K: FiniteBL, x: KiteElement, y: KiteElement) -> KiteElement:
    """x/y"""
    ops = _operaciones(K)
    return _elemento(ops.rdiv(ops.validar(x), ops.validar(y)))


def zero_element(K: FiniteBL) -> KiteElement:
    return _elemento(_operaciones(K).cero)


def one_element(K: FiniteBL) -> KiteElement:
    return _elemento(_operaciones(K).uno)


def negations(K: FiniteBL, x: KiteElement) -> Tuple[KiteElement, KiteElement]:
    """(x⁻, x~) = (0/x, x\\0)."""
    cero = zero_element(K)
    return kite_rdiv(K, cero, x), kite_ldiv(K, x, cero)


def element_index(K: FiniteBL, x: KiteElement) -> int:
    ops = _operaciones(K)
    parte, coords = ops.validar(x)
    n = K.hoop.size
    posicion = 0
    for c in coords:
        posicion = posicion * n + c
    return posicion if parte == "L" else n ** K.spec.j_size + posicion


def element_at(K: FiniteBL, idx: int) -> KiteElement:
    _operaciones(K)
    K.validar_indice(idx)
    return K.elements[idx]


def dimension(K: FiniteBL, x: KiteElement) -> int:
    ops = _operaciones(K)
    _, coords = ops.validar(x)
    return sum(1 for c in coords if c != ops.u)


def double_negation_transport(K: FiniteBL, x: KiteElement, kind: str, m: int) -> KiteElement:
    """m veces x ↦ x~~ (kind="tilde") o x ↦ x-- (kind="minus")."""
    if kind not in ("tilde", "minus"):
        raise PreconditionError(f"kind debe ser 'tilde' o 'minus', se recibió {kind!r}")
    if m < 0:
        raise PreconditionError("m debe ser no negativo")
    cero = zero_element(K)
    for _ in range(m):
        if kind == "tilde":
            x = kite_ldiv(K, kite_ldiv(K, x, cero), cero)
        else:
            x = kite_rdiv(K, cero, kite_rdiv(K, cero, x))
    return x


# ------------------ BONDAD Y PSEUDO MV ------------------

def good_by_spec(spec: KiteSpec) -> bool:
    return set(spec.lambda_) == set(spec.rho)


def mv_by_spec(spec: KiteSpec) -> bool:
    return set(spec.lambda_) == set(range(spec.i_size)) == set(spec.rho)


def tablas_negacion(B: FiniteBL) -> Tuple[np.ndarray, np.ndarray]:
    """Vectores x ↦ x⁻ = 0/x y x ↦ x~ = x\\0."""
    menos = B.rdiv_t[B.zero, :]
    tilde = B.ldiv_t[:, B.zero]
    return menos, tilde


def _contrastar_con_spec(B: FiniteBL, semantico: bool, sintactico, propiedad: str) -> None:
    if not B.es_kite or not B.verified or is_trivial(B.hoop):
        return
    esperado = sintactico(B.spec)
    if semantico != esperado:
        raise InvariantError(
            f"{propiedad}: evaluación directa ({semantico}) y predicado sobre λ, ρ ({esperado}) "
            f"discrepan en {B.name}"
        )


def is_good(B: FiniteBL) -> Verdict:
    menos, tilde = tablas_negacion(B)
    # x⁻~ frente a x~⁻
    distintos = np.flatnonzero(tilde[menos] != menos[tilde])
    veredicto = Verdict(holds=distintos.size == 0, witness=int(distintos[0]) if distintos.size else None)
    _contrastar_con_spec(B, veredicto.holds, good_by_spec, "bondad")
    return veredicto


def is_pseudo_mv(B: FiniteBL) -> Verdict:
    menos, tilde = tablas_negacion(B)
    x = np.arange(B.size)
    distintos = np.flatnonzero((tilde[menos] != x) | (menos[tilde] != x))
    veredicto = Verdict(holds=distintos.size == 0, witness=int(distintos[0]) if distintos.size else None)
    _contrastar_con_spec(B, veredicto.holds, mv_by_spec, "pseudo MV")
    return veredicto
