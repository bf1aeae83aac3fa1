import json
import uuid
import logging
from datetime import datetime
from typing import List, Optional

from fastapi import APIRouter, HTTPException, Depends
from sqlalchemy.orm import Session
from pydantic import BaseModel

from config import get_db
from models.algebra_guardada import AlgebraGuardada
from algebra.catalogo import listar_catalogo, obtener_hoop
from algebra.errores import KiteBLError
from algebra.hoop_core import (
    AxiomReport,
    FiniteHoop,
    check_basic,
    check_commutative,
    check_pseudo_hoop,
    check_wajsberg,
)
from utils.formato_utils import documento_hoop
from utils.http_utils import error_http

logger = logging.getLogger(__name__)

router = APIRouter()

# ------------------ SCHEMAS ------------------

class CatalogoItem(BaseModel):
    nombre: str
    tamano: int

class VerificacionHoop(BaseModel):
    informe: AxiomReport
    basico: bool = False
    wajsberg: bool = False
    conmutativo: bool = False

class AlgebraOut(BaseModel):
    id: str
    tipo: str
    nombre: Optional[str] = None
    tamano: int

    class Config:
        from_attributes = True

# ------------------ HELPER FUNCTIONS ------------------

def verificar(h: FiniteHoop) -> VerificacionHoop:
    informe = check_pseudo_hoop(h)
    if not informe.passed:
        return VerificacionHoop(informe=informe)
    try:
        return VerificacionHoop(
            informe=informe,
            basico=check_basic(h),
            wajsberg=check_wajsberg(h),
            conmutativo=check_commutative(h),
        )
    except KiteBLError as e:
        raise error_http(e)

def buscar_algebra(db: Session, algebra_id: str, tipo: str) -> AlgebraGuardada:
    algebra = db.query(AlgebraGuardada).filter_by(id=algebra_id, tipo=tipo).first()
    if not algebra:
        raise HTTPException(status_code=404, detail=f"No existe {tipo} con id {algebra_id}.")
    return algebra

# ------------------ RUTAS ------------------

@router.get("/catalogo", response_model=List[CatalogoItem])
def catalogo():
    return [CatalogoItem(nombre=nombre, tamano=tamano) for nombre, tamano in listar_catalogo()]

@router.get("/catalogo/{nombre}")
def hoop_del_catalogo(nombre: str):
    try:
        return json.loads(documento_hoop(obtener_hoop(nombre)))
    except KiteBLError as e:
        raise error_http(e)

@router.post("/verificar", response_model=VerificacionHoop)
def verificar_hoop(data: FiniteHoop):
    return verificar(data)

@router.post("", response_model=AlgebraOut)
def guardar_hoop(data: FiniteHoop, db: Session = Depends(get_db)):
    verificacion = verificar(data)
    if not verificacion.informe.passed:
        raise HTTPException(
            status_code=400,
            detail=f"No es un pseudo hoop: falla {', '.join(verificacion.informe.axiomas_fallidos)}",
        )
    nuevo = AlgebraGuardada(
        id=str(uuid.uuid4()),
        tipo="hoop",
        nombre=data.name,
        tamano=data.size,
        documento=documento_hoop(data),
        fecha=datetime.utcnow(),
    )
    db.add(nuevo)
    db.commit()
    db.refresh(nuevo)
    logger.info(f"Hoop guardado {nuevo.id} ({data.name}, n={data.size})")
    return nuevo

@router.get("/{hoop_id}")
def obtener_hoop_guardado(hoop_id: str, db: Session = Depends(get_db)):
    return json.loads(buscar_algebra(db, hoop_id, "hoop").documento)
