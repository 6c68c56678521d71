"""Pydantic request/response models for the HTTP service."""

from __future__ import annotations

from typing import Optional, Union

from pydantic import BaseModel, ConfigDict, Field


class FrameModel(BaseModel):
    width: float
    height: float


class ObjectModel(BaseModel):
    id: str
    x: float
    y: float
    w: float
    h: float


class LayoutDocumentModel(BaseModel):
    model_config = ConfigDict(extra="ignore")

    schema_version: int = 1
    frame: FrameModel
    objects: list[ObjectModel]


class EvaluateResponse(BaseModel):
    balance: float
    equilibrium: float
    symmetry: float
    sequence: float
    rhythm: float
    av: float
    object_count: int
    schema_version: int


class ObjectiveModel(BaseModel):
    mode: str
    weights: Optional[list[float]] = None
    target: Optional[Union[float, list[float]]] = None


class SearchParamsModel(BaseModel):
    seed: int = 0
    iterations: int = 20_000
    initial_temperature: float = 0.1
    cooling: float = 0.9995
    move_scale: float = 0.1
    forbid_overlap: bool = False


class OptimizeRequest(BaseModel):
    model_config = ConfigDict(extra="ignore")

    layout: LayoutDocumentModel
    objective: ObjectiveModel
    params: SearchParamsModel = Field(default_factory=SearchParamsModel)


class OptimizeResponse(BaseModel):
    best_layout: LayoutDocumentModel
    best_score: float
    trace: list[tuple[int, float]]
    evaluations: int
    rng: str


class HealthResponse(BaseModel):
    status: str
    version: str


class ApiErrorModel(BaseModel):
    code: str
    message: str
    object_id: Optional[str] = None
