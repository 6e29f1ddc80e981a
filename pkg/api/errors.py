from fastapi import HTTPException
from loguru import logger

from specgap.exceptions import SpecGapError, UnknownFormulaError, UnknownKindError


def http_error(e: Exception, action: str) -> HTTPException:
    """Map a failure to the HTTP status the routers return."""
    if isinstance(e, (UnknownKindError, UnknownFormulaError)):
        return HTTPException(status_code=404, detail=str(e))
    if isinstance(e, SpecGapError):
        return HTTPException(status_code=400, detail=str(e))
    logger.error(f"Error {action}: {str(e)}")
    return HTTPException(status_code=500, detail=f"Error {action}: {str(e)}")
