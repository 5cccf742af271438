"""FastAPI service wrapping the validator core."""

from .app import app

__all__ = ["app"]
