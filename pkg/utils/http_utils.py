import logging

from fastapi import HTTPException

from algebra.errores import (
    EnumerationBoundError,
    FormatError,
    KiteBLError,
    NonInjectiveError,
    NotBasicError,
    PreconditionError,
    StructuralError,
    UnknownCatalogNameError,
)

logger = logging.getLogger(__name__)


def error_http(e: KiteBLError) -> HTTPException:
    """Traduce un error de la librería al código HTTP correspondiente."""
    if isinstance(e, EnumerationBoundError):
        codigo = 413
    elif isinstance(e, UnknownCatalogNameError):
        codigo = 404
    elif isinstance(e, (StructuralError, FormatError)):
        codigo = 422
    elif isinstance(e, (NotBasicError, NonInjectiveError, PreconditionError)):
        codigo = 400
    else:
        codigo = 500
    logger.error(f"{type(e).__name__}: {e}")
    return HTTPException(status_code=codigo, detail=str(e))
