"""HTTP face of the toolkit: one endpoint per CLI command.

Run with: uvicorn fiberlink.service:app
"""

from __future__ import annotations

from typing import Literal

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel

from .diagram import DiagramError, ParseError
from .reports import VERSION, evaluate

app = FastAPI(title="fiberlink", version=VERSION)


class DiagramRequest(BaseModel):
    text: str


class RealizeRequest(BaseModel):
    text: str
    target: Literal["plane", "sphere"] = "plane"


class Report(BaseModel):
    version: str
    command: str
    input_digest: str
    result: dict


class Health(BaseModel):
    status: str
    version: str


def _evaluate(command: str, text: str, target: str = "plane") -> dict:
    try:
        return evaluate(command, text, target)
    except ParseError as err:
        raise HTTPException(
            status_code=422,
            detail={"code": "syntax-error", "message": err.message, "line": err.line, "column": err.column},
        ) from err
    except DiagramError as err:
        raise HTTPException(status_code=422, detail={"code": "diagram-error", "message": str(err)}) from err


@app.get("/v1/health", response_model=Health)
def health():
    return {"status": "ok", "version": VERSION}


@app.post("/v1/parse", response_model=Report)
def parse(req: DiagramRequest):
    return _evaluate("parse", req.text)


@app.post("/v1/invariants", response_model=Report)
def invariants(req: DiagramRequest):
    return _evaluate("invariants", req.text)


@app.post("/v1/obstruction", response_model=Report)
def obstruction(req: DiagramRequest):
    return _evaluate("obstruction", req.text)


@app.post("/v1/realize", response_model=Report)
def realize(req: RealizeRequest):
    return _evaluate("realize", req.text, req.target)


@app.post("/v1/hp", response_model=Report)
def hp(req: DiagramRequest):
    return _evaluate("hp", req.text)


@app.post("/v1/witness", response_model=Report)
def witness(req: DiagramRequest):
    return _evaluate("witness", req.text)
