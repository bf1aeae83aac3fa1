from fastapi import FastAPI
from routers import hoops as hoops_router
from routers import kites as kites_router

from models import algebra_guardada as algebra_guardada_model
from models import informe as informe_model
from config import engine, Base

Base.metadata.create_all(bind=engine)

# Crear instancia de FastAPI
app = FastAPI(title="KiteBL API")

# Ruta base para verificar que la API está funcionando
@app.get("/")
async def root():
    return {
        "message": "KiteBL API is running!",
        "status": "active",
        "version": "1.0.0",
        "endpoints": {
            "catalogo": "/hoops/catalogo",
            "verificar_hoop": "/hoops/verificar",
            "hoops": "/hoops",
            "kites": "/kites",
            "descomposicion": "/kites/descomposicion"
        }
    }

# Registrar rutas
app.include_router(hoops_router.router, prefix="/hoops")
app.include_router(kites_router.router, prefix="/kites")
