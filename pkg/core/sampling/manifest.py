from typing import List, Literal, Optional

from pydantic import BaseModel, Field, model_validator

from core.model import SamplingSpec


class SamplingSpecDocument(BaseModel):
    """Descrição serializável de um SamplingSpec"""
    mode: Literal["constant", "per-instance"]
    rates: Optional[List[float]] = None

    @classmethod
    def from_spec(cls, spec: SamplingSpec) -> "SamplingSpecDocument":
        return cls(**spec.describe())

    def to_spec(self) -> SamplingSpec:
        return SamplingSpec(self.mode, self.rates)


class SamplingManifest(BaseModel):
    """Registro de proveniência da amostragem, para que o treino possa corrigi-la"""
    seed: int = Field(ge=0)
    spec: SamplingSpecDocument
    original_count: int = Field(ge=0)
    retained_count: int = Field(ge=0)
    per_label_retained: List[int]
    per_label_original: List[int]

    @model_validator(mode="after")
    def _check_counts(self) -> "SamplingManifest":
        if self.retained_count > self.original_count:
            raise ValueError("retained_count maior que original_count")
        if sum(self.per_label_retained) != self.retained_count:
            raise ValueError("contagens por rótulo não somam retained_count")
        if sum(self.per_label_original) != self.original_count:
            raise ValueError("contagens originais por rótulo não somam original_count")
        return self
