"""
Ring: Delivery (Interface Adapters / Shared Boundary Schemas)

Responsibility:
Defines the schemas shared by every feature:
- GraphSource: where the graph of a run or analysis comes from. Exactly one of file,
  named, random or inline edge list.
- GraphDocument: base of the JSON documents that carry optional node labels.

Dependency constraints:
- Must not import from any feature.
- Must not depend on infrastructure implementations.
"""

from __future__ import annotations

from pydantic import (
    BaseModel,
    Field,
    SerializerFunctionWrapHandler,
    model_serializer,
    model_validator,
)


class RandomGraphParams(BaseModel):
    n: int = Field(ge=1)
    p: float = Field(ge=0.0, le=1.0)
    seed: int = Field(ge=0)


class GraphSource(BaseModel):
    file: str | None = None
    named: str | None = None
    random: RandomGraphParams | None = None
    edge_list: str | None = None

    @model_validator(mode="after")
    def _exactly_one(self) -> GraphSource:
        given = [
            name
            for name in ("file", "named", "random", "edge_list")
            if getattr(self, name) is not None
        ]
        if len(given) != 1:
            raise ValueError(
                f"exactly one graph source is required, got {given or 'none'}"
            )
        return self

    def describe(self) -> str:
        if self.file is not None:
            return f"file:{self.file}"
        if self.named is not None:
            return f"named:{self.named}"
        if self.random is not None:
            return f"random:{self.random.n},{self.random.p},{self.random.seed}"
        return "edge_list"


class GraphDocument(BaseModel):
    """
    Base for every JSON document that names nodes. `labels` maps node ids to the
    labels of the input graph and is omitted entirely when the graph has none.
    """

    labels: list[str] | None = None

    @model_serializer(mode="wrap")
    def _omit_absent_labels(self, handler: SerializerFunctionWrapHandler) -> dict:
        data = handler(self)
        if data.get("labels") is None:
            data.pop("labels", None)
        return data
