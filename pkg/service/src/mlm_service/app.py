"""HTTP surface: POST /v1/score and GET /v1/health.

Status codes: 400 malformed body or bad premask ranges, 413 over-limit
batch or over-length sequence, 422 an item with every word premasked.
Responses depend only on the request body and the loaded checkpoint.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from .config import ServiceConfig
from .scoring import AllMaskedError, BadSpanError, MaskedLmScorer, OverLengthError


class ScoreItem(BaseModel):
    tokens: list[str]
    premask: list[tuple[int, int]] = Field(default_factory=list)


class ScoreBody(BaseModel):
    mode: str = "masked"
    items: list[ScoreItem]


def create_app(config: ServiceConfig, scorer: MaskedLmScorer | None = None) -> FastAPI:
    app = FastAPI(title="fusenorm-mlm-service")
    if scorer is None:
        scorer = MaskedLmScorer(
            config.model,
            device=config.device,
            max_batch=config.max_batch,
            max_tokens=config.max_tokens,
        )
    app.state.scorer = scorer
    app.state.config = config

    @app.exception_handler(RequestValidationError)
    async def malformed_body(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"error": str(exc.errors()[:3])})

    @app.get("/v1/health")
    def health():
        return {"status": "ok", "model": scorer.model_id}

    @app.post("/v1/score")
    def score(body: ScoreBody):
        if body.mode != "masked":
            return JSONResponse(
                status_code=400, content={"error": f"unsupported mode {body.mode!r}"}
            )
        if len(body.items) > config.max_batch:
            return JSONResponse(
                status_code=413,
                content={"error": f"batch of {len(body.items)} exceeds limit {config.max_batch}"},
            )
        scores: list[float] = []
        for i, item in enumerate(body.items):
            try:
                scores.append(scorer.pll(item.tokens, item.premask))
            except OverLengthError as e:
                return JSONResponse(status_code=413, content={"error": f"item {i}: {e}"})
            except AllMaskedError as e:
                return JSONResponse(status_code=422, content={"error": f"item {i}: {e}"})
            except BadSpanError as e:
                return JSONResponse(status_code=400, content={"error": f"item {i}: {e}"})
        return {"scores": scores}

    return app
