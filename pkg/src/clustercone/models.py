"""Uniform construction of polygon and root models."""

from __future__ import annotations

from dataclasses import dataclass

from .polygon import ModelSpec, PolygonModel
from .roots import CartanType, RootModel

CLASSICAL = set("ABCD")


@dataclass(frozen=True)
class ModelConfig:
    family: str
    rank: int
    frozen_mode: str = "special"
    model: str = "auto"  # polygon | root | auto
    coxeter: tuple[int, ...] | None = None

    def resolved_model(self) -> str:
        if self.model == "auto":
            return "polygon" if self.family in CLASSICAL else "root"
        return self.model


def build_model(cfg: ModelConfig):
    """A :class:`PolygonModel` or :class:`RootModel` for the configuration.

    The root model has no frozen variables, so it requires ``frozen_mode='none'``.
    """
    kind = cfg.resolved_model()
    if kind == "polygon":
        if cfg.family not in CLASSICAL:
            raise ValueError(f"no polygon model for type {cfg.family}")
        return PolygonModel(ModelSpec(cfg.family, cfg.rank, cfg.frozen_mode))
    if kind == "root":
        if cfg.frozen_mode != "none":
            raise ValueError("the root model has no frozen variables; use frozen_mode='none'")
        return RootModel(CartanType(cfg.family, cfg.rank), cfg.coxeter)
    raise ValueError(f"unknown model {cfg.model!r}")


def make_model(family: str, rank: int, frozen_mode: str = "special", model: str = "auto", coxeter=None):
    if model == "auto" and family not in CLASSICAL:
        frozen_mode = "none"
    return build_model(ModelConfig(family, rank, frozen_mode, model, coxeter))
