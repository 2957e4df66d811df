"""
HTTP application entry point.

Serves the same analyses as the CLI as read-only JSON endpoints.
"""

import logging

from config.settings import settings
from fastapi import FastAPI, Request, status
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse

from src.presentation.routes import router

logging.basicConfig(
    level=settings.log_level.upper(),
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
)
logger = logging.getLogger(__name__)

app = FastAPI(
    title="Follower Sets API",
    description="""
    Exact and depth-limited counting of follower, predecessor and extender
    sets of subshifts, with soficity criteria.

    ## Systems
    - Finite labeled-graph presentations (exact)
    - The up/down/equals shift (exact)
    - S-gap shifts (depth-limited lower bounds)
    """,
    version=settings.app_version,
    docs_url="/docs",
    redoc_url="/redoc",
)


# Decision: Return 400 instead of FastAPI's default 422 for malformed input;
# 422 is reserved for analyses that exceed their computation budget.
@app.exception_handler(RequestValidationError)
async def validation_exception_handler(
    request: Request, exc: RequestValidationError
) -> JSONResponse:
    errors = exc.errors()
    error_messages = [f"{err['loc'][-1]}: {err['msg']}" for err in errors]
    logger.warning(f"Rejected {request.url.path}: {'; '.join(error_messages)}")

    return JSONResponse(
        status_code=status.HTTP_400_BAD_REQUEST,
        content={
            "detail": {
                "error": "ValidationError",
                "message": "Request validation failed",
                "errors": error_messages,
            }
        },
    )


app.include_router(router)


@app.get("/", tags=["root"])
def root() -> dict[str, str]:
    """Root endpoint with API information."""
    return {
        "service": settings.app_name,
        "version": settings.app_version,
        "docs": "/docs",
        "health": "/api/v1/health",
    }


if __name__ == "__main__":
    import uvicorn

    uvicorn.run(
        "src.main:app",
        host=settings.api_host,
        port=settings.api_port,
        reload=settings.api_reload,
        log_level=settings.log_level.lower(),
    )
