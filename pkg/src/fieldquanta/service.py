"""HTTP service wrapping the classification pipeline.

The pipeline is a pure computation, so the service is stateless: every
request carries its full input (a builtin name or a spec document) and the
response is the report. Run it with

    uvicorn fieldquanta.service:app
"""

from __future__ import annotations

import numpy as np
from fastapi import FastAPI
from fastapi.responses import JSONResponse, PlainTextResponse
from fastapi.requests import Request

from . import __version__
from .catalog import BUILTIN_NAMES, builtin, from_document
from .errors import (FieldQuantaError, InconsistencyError, InvalidInput, ParseError,
                     UnknownName, ValidationError)
from .modes import mode_csv, real_solution_from_positive
from .pipeline import DEMOS, RunConfig, classify_theory, demo
from .schemas import (BuiltinsResponse, ClassifyRequest, DemoResponse, HealthResponse,
                      ModesCsvRequest, ValidateRequest, ValidateResponse)

_INPUT_ERRORS = (ValidationError, ParseError, UnknownName, InvalidInput)


def _error_payload(err: FieldQuantaError) -> dict:
    payload = {"error": type(err).__name__, "detail": str(err)}
    if isinstance(err, ValidationError):
        payload["violations"] = err.violations
    return payload


def create_app() -> FastAPI:
    app = FastAPI(title="fieldquanta", version=__version__)

    @app.exception_handler(FieldQuantaError)
    async def _handle_domain_error(request: Request, err: FieldQuantaError):
        if isinstance(err, _INPUT_ERRORS):
            status = 400
        elif isinstance(err, InconsistencyError):
            status = 500
        else:
            status = 500
        return JSONResponse(status_code=status, content=_error_payload(err))

    @app.get("/health", response_model=HealthResponse)
    def health():
        return HealthResponse(status="ok", version=__version__)

    @app.get("/builtins", response_model=BuiltinsResponse)
    def builtins():
        return BuiltinsResponse(names=list(BUILTIN_NAMES), demos=sorted(DEMOS))

    @app.post("/classify")
    def classify(req: ClassifyRequest):
        spec = builtin(req.builtin) if req.builtin else from_document(req.spec)
        cfg = RunConfig(seed=req.seed)
        if req.tolerances is not None:
            cfg.eps_rel = req.tolerances.eps_rel
            cfg.eps_rank = req.tolerances.eps_rank
        if req.modes is not None:
            cfg.modes_sites = req.modes.sites
            cfg.modes_length = req.modes.length
        return JSONResponse(classify_theory(spec, cfg))

    @app.post("/validate", response_model=ValidateResponse)
    def validate(req: ValidateRequest):
        try:
            from_document(req.spec).validate()
        except ValidationError as err:
            return ValidateResponse(valid=False, errors=err.violations)
        except ParseError as err:
            return ValidateResponse(valid=False, errors=[str(err)])
        return ValidateResponse(valid=True)

    @app.get("/demo/{name}", response_model=DemoResponse)
    def run_demo(name: str):
        try:
            text = demo(name)
        except UnknownName as err:
            return JSONResponse(status_code=404, content=_error_payload(err))
        return DemoResponse(name=name, text=text)

    @app.post("/modes/csv")
    def modes_csv(req: ModesCsvRequest):
        spec = builtin(req.builtin)
        f = spec.field_named(req.field_name) if req.field_name else spec.fields[0]
        rng = np.random.default_rng(req.seed)
        n = f.internal.dim
        c = rng.normal(size=(req.sites, n)) + 1j * rng.normal(size=(req.sites, n))
        if f.dispersion.first_order:
            from .reps import real_type
            from .cxify import decompose
            rt = real_type(f.internal)
            sectors = decompose(f.internal, rt.J)
            c = c @ sectors.P_plus.T
        sol = real_solution_from_positive(c, f.dispersion, req.length)
        return PlainTextResponse(mode_csv(sol), media_type="text/csv")

    return app


app = create_app()
