"""FastAPI service wrapping the core package.

Run it with ``uvicorn ptqm.service:app`` or ``ptqm serve``.
"""

from .app import create_app

app = create_app()

__all__ = ["app", "create_app"]
