import os
import logging
from dotenv import load_dotenv
from sqlalchemy import create_engine
from sqlalchemy.orm import sessionmaker, declarative_base

from algebra.errores import ConfigError

load_dotenv()

# Configurar logging
logging.basicConfig(
    level=os.getenv("KITEBL_LOG_LEVEL", "INFO").upper(),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)

DEFAULT_ENUM_BOUND = 16

# URL de conexión desde variable de entorno
SQLALCHEMY_DATABASE_URL = os.getenv("KITEBL_DATABASE_URL", "sqlite:///./kitebl.db")

_connect_args = {"check_same_thread": False} if SQLALCHEMY_DATABASE_URL.startswith("sqlite") else {}
engine = create_engine(SQLALCHEMY_DATABASE_URL, connect_args=_connect_args)
SessionLocal = sessionmaker(autocommit=False, autoflush=False, bind=engine)

Base = declarative_base()


def get_db():
    db = SessionLocal()
    try:
        yield db
    finally:
        db.close()


def obtener_cota_enumeracion() -> int:
    """Cota de enumeración de filtros; se lee en cada llamada para que el entorno pueda cambiarla."""
    valor = os.getenv("KITEBL_ENUM_BOUND")
    if valor is None or valor.strip() == "":
        return DEFAULT_ENUM_BOUND
    try:
        cota = int(valor)
    except ValueError:
        raise ConfigError(f"KITEBL_ENUM_BOUND debe ser un entero, se recibió {valor!r}")
    if cota < 1:
        raise ConfigError(f"KITEBL_ENUM_BOUND debe ser positivo, se recibió {cota}")
    return cota
