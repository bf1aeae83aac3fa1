from sqlalchemy import Column, String, Text, DateTime, Integer
from config import Base
import uuid
from datetime import datetime


def generate_uuid():
    return str(uuid.uuid4())


class AlgebraGuardada(Base):
    __tablename__ = "algebras"

    id = Column(String(64), primary_key=True, default=generate_uuid)
    tipo = Column(String(10), nullable=False)  # "hoop" o "bl"
    nombre = Column(String(255), nullable=True)
    tamano = Column(Integer, nullable=False)
    documento = Column(Text, nullable=False)  # documento JSON versionado
    fecha = Column(DateTime, default=datetime.utcnow)
