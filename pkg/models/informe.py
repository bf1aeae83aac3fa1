from sqlalchemy import Column, String, Text, DateTime, Boolean, ForeignKey
from config import Base
import uuid
from datetime import datetime


def generate_uuid():
    return str(uuid.uuid4())


class Informe(Base):
    __tablename__ = "informes"

    id = Column(String(64), primary_key=True, default=generate_uuid)
    algebra_id = Column(String(64), ForeignKey("algebras.id"), nullable=False)
    aprobado = Column(Boolean, nullable=False)
    documento = Column(Text, nullable=False)  # AxiomReport serializado
    fecha = Column(DateTime, default=datetime.utcnow)
