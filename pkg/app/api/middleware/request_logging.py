"""Middleware de logging des requêtes."""

import time
import uuid

from fastapi import Request
from starlette.middleware.base import BaseHTTPMiddleware

from app.core.logging import get_logger

logger = get_logger(__name__)

REQUEST_ID_HEADER = "X-Request-ID"


class RequestLoggingMiddleware(BaseHTTPMiddleware):
    """Journaliser chaque requête avec un identifiant et sa durée."""

    async def dispatch(self, request: Request, call_next):
        """Logger la requête, puis la réponse avec la durée de traitement."""
        request_id = request.headers.get(REQUEST_ID_HEADER) or uuid.uuid4().hex[:12]
        start = time.perf_counter()
        logger.debug(
            f"Requête: {request.method} {request.url.path}",
            request_id=request_id,
            client=request.client.host if request.client else None,
        )

        response = await call_next(request)

        elapsed = time.perf_counter() - start
        log = logger.warning if response.status_code >= 500 else logger.info
        log(
            f"{request.method} {request.url.path} -> {response.status_code}",
            request_id=request_id,
            status_code=response.status_code,
            duration_s=round(elapsed, 4),
        )
        response.headers[REQUEST_ID_HEADER] = request_id
        response.headers["X-Process-Time"] = f"{elapsed:.4f}"
        return response
