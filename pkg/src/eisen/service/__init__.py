"""HTTP service layer: pydantic schemas, handlers, and the FastAPI app."""

from . import handlers, models

__all__ = ["handlers", "models"]
