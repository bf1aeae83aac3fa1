import json
import uuid
import logging
from datetime import datetime
from typing import List, Optional

from fastapi import APIRouter, HTTPException, Depends, Query
from sqlalchemy.orm import Session
from pydantic import BaseModel, model_validator

from config import get_db
from models.algebra_guardada import AlgebraGuardada
from models.informe import Informe
from algebra.bl_verifier import check_pseudo_bl, find_noncommutative_witness
from algebra.catalogo import obtener_hoop
from algebra.errores import KiteBLError
from algebra.filter_engine import enumerate_normal_filters, is_subdirectly_irreducible, upper_block
from algebra.hoop_core import FiniteHoop, is_trivial
from algebra.kite_builder import FiniteBL, KiteSpec, build_kite, is_good, is_pseudo_mv, tablas_negacion
from algebra.structure_analysis import (
    classify_finite,
    connected_components,
    irreducibility_predicate,
    subdirect_representation,
)
from routers.hoops import buscar_algebra
from utils.formato_utils import documento_bl, documento_informe, formatear_elemento, parsear_bl, parsear_hoop
from utils.http_utils import error_http

logger = logging.getLogger(__name__)

router = APIRouter()

# ------------------ SCHEMAS ------------------

class KiteCreate(BaseModel):
    hoop: Optional[FiniteHoop] = None
    hoop_id: Optional[str] = None
    catalogo: Optional[str] = None
    spec: KiteSpec
    force: bool = False

    @model_validator(mode="after")
    def validar_origen(self):
        origenes = [o for o in (self.hoop, self.hoop_id, self.catalogo) if o is not None]
        if len(origenes) != 1:
            raise ValueError("indique exactamente uno de hoop, hoop_id o catalogo")
        return self

class KiteResumen(BaseModel):
    id: Optional[str] = None
    size: int
    good: bool
    mv: bool
    components: int
    clase: str
    subdirectly_irreducible: Optional[bool] = None
    bl_passed: bool
    verified: bool

class FactorResumen(BaseModel):
    component: List[int]
    spec: KiteSpec
    clase: str
    size: int
    hoop: str

class DescomposicionResumen(BaseModel):
    hoop_factors: List[str]
    factors: List[FactorResumen]
    injective: bool

# ------------------ HELPER FUNCTIONS ------------------

def resolver_hoop(data: KiteCreate, db: Session) -> FiniteHoop:
    if data.hoop is not None:
        return data.hoop
    if data.hoop_id is not None:
        try:
            return parsear_hoop(buscar_algebra(db, data.hoop_id, "hoop").documento)
        except KiteBLError as e:
            raise error_http(e)
    try:
        return obtener_hoop(data.catalogo)
    except KiteBLError as e:
        raise error_http(e)

def cargar_kite(db: Session, kite_id: str) -> FiniteBL:
    return parsear_bl(buscar_algebra(db, kite_id, "bl").documento)

def predicado_irreducible(h: FiniteHoop, spec: KiteSpec) -> Optional[bool]:
    return None if is_trivial(h) else irreducibility_predicate(h, spec)

# ------------------ RUTAS ------------------

@router.post("", response_model=KiteResumen)
def crear_kite(data: KiteCreate, db: Session = Depends(get_db)):
    h = resolver_hoop(data, db)
    try:
        K = build_kite(h, data.spec, force=data.force)
        informe = check_pseudo_bl(K)
        resumen = KiteResumen(
            size=K.size,
            good=is_good(K).holds,
            mv=is_pseudo_mv(K).holds,
            components=len(connected_components(data.spec).components),
            clase=classify_finite(data.spec).etiqueta,
            subdirectly_irreducible=predicado_irreducible(h, data.spec),
            bl_passed=informe.passed,
            verified=K.verified,
        )
    except KiteBLError as e:
        raise error_http(e)

    nuevo = AlgebraGuardada(
        id=str(uuid.uuid4()),
        tipo="bl",
        nombre=K.name,
        tamano=K.size,
        documento=documento_bl(K),
        fecha=datetime.utcnow(),
    )
    db.add(nuevo)
    db.add(Informe(
        id=str(uuid.uuid4()),
        algebra_id=nuevo.id,
        aprobado=informe.passed,
        documento=documento_informe(informe, K.name),
        fecha=datetime.utcnow(),
    ))
    db.commit()
    logger.info(f"Kite guardado {nuevo.id} ({K.size} elementos)")
    return resumen.model_copy(update={"id": nuevo.id})

@router.post("/descomposicion", response_model=DescomposicionResumen)
def descomponer(data: KiteCreate, db: Session = Depends(get_db)):
    h = resolver_hoop(data, db)
    try:
        representacion = subdirect_representation(h, data.spec)
        return DescomposicionResumen(
            hoop_factors=[f.hoop.name or "?" for f in representacion.hoop_factors],
            factors=[
                FactorResumen(
                    component=list(f.component),
                    spec=f.spec,
                    clase=classify_finite(f.spec).etiqueta,
                    size=f.kite.size,
                    hoop=f.kite.hoop.name or "?",
                )
                for f in representacion.factors
            ],
            injective=representacion.injective,
        )
    except KiteBLError as e:
        raise error_http(e)

@router.get("/{kite_id}")
def obtener_kite(kite_id: str, db: Session = Depends(get_db)):
    return json.loads(buscar_algebra(db, kite_id, "bl").documento)

@router.get("/{kite_id}/informe")
def obtener_informe(kite_id: str, db: Session = Depends(get_db)):
    buscar_algebra(db, kite_id, "bl")
    informe = db.query(Informe).filter_by(algebra_id=kite_id).order_by(Informe.fecha.desc()).first()
    if not informe:
        raise HTTPException(status_code=404, detail="El kite no tiene informe.")
    return json.loads(informe.documento)

@router.get("/{kite_id}/filtros")
def filtros_normales(kite_id: str, db: Session = Depends(get_db)):
    K = cargar_kite(db, kite_id)
    try:
        normales = enumerate_normal_filters(K)
    except KiteBLError as e:
        raise error_http(e)
    return {"filtros": [[formatear_elemento(K, x) for x in F.members] for F in normales]}

@router.get("/{kite_id}/monolito")
def monolito(kite_id: str, db: Session = Depends(get_db)):
    K = cargar_kite(db, kite_id)
    try:
        resultado = is_subdirectly_irreducible(K)
    except KiteBLError as e:
        raise error_http(e)
    if not resultado.holds:
        return {"irreducible": False, "monolito": None, "bloque_superior": False}
    return {
        "irreducible": True,
        "monolito": [formatear_elemento(K, x) for x in resultado.monolith.members],
        "bloque_superior": K.es_kite and resultado.monolith == upper_block(K),
    }

@router.get("/{kite_id}/testigos")
def testigos(kite_id: str, tipo: str = Query(..., pattern="^(good|comm)$"), db: Session = Depends(get_db)):
    K = cargar_kite(db, kite_id)
    if tipo == "comm":
        par = find_noncommutative_witness(K)
        return {"conmutativo": par is None, "testigo": None if par is None else [formatear_elemento(K, x) for x in par]}
    veredicto = is_good(K)
    if veredicto.holds:
        return {"bueno": True, "testigo": None}
    x = veredicto.witness
    menos, tilde = tablas_negacion(K)
    return {
        "bueno": False,
        "testigo": formatear_elemento(K, x),
        "menos_tilde": formatear_elemento(K, int(tilde[menos[x]])),
        "tilde_menos": formatear_elemento(K, int(menos[tilde[x]])),
    }
