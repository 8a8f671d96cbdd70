"""Pydantic request/response models for the HTTP service."""

from __future__ import annotations

import math

from pydantic import BaseModel, Field, model_validator


class HealthResponse(BaseModel):
    status: str
    version: str


class BuiltinsResponse(BaseModel):
    names: list[str]
    demos: list[str]


class ToleranceOverrides(BaseModel):
    eps_rel: float | None = None
    eps_rank: float | None = None


class ModesOptions(BaseModel):
    sites: int = Field(64, gt=0)
    length: float = Field(2.0 * math.pi, gt=0.0)


class ClassifyRequest(BaseModel):
    builtin: str | None = None
    spec: dict | None = None
    seed: int = 0
    modes: ModesOptions | None = None
    tolerances: ToleranceOverrides | None = None

    @model_validator(mode="after")
    def _exactly_one_source(self):
        if (self.builtin is None) == (self.spec is None):
            raise ValueError("provide exactly one of 'builtin' or 'spec'")
        return self


class ValidateRequest(BaseModel):
    spec: dict


class ValidateResponse(BaseModel):
    valid: bool
    errors: list[str] = []


class DemoResponse(BaseModel):
    name: str
    text: str


class ModesCsvRequest(BaseModel):
    builtin: str
    field_name: str | None = None
    sites: int = Field(64, gt=0)
    length: float = Field(2.0 * math.pi, gt=0.0)
    seed: int = 0
