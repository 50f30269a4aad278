"""Lattice spec files and the canonical lattice JSON written by ``build``.

A spec is a JSON object whose ``"kind"`` selects how the lattice is made.
Lattice files that omit ``"kind"`` and carry a ``"gram"``, ``"ambient"`` or
``"construction"`` entry (plus optional ``"name"`` and ``"sign"``) are read
as the matching kind.
On the command line a lattice can also be given as ``named:E7^2``,
``glue:<file>`` or simply a catalog name.
"""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Annotated, Any, Dict, List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, PositiveInt, TypeAdapter, model_validator

from .codes import BinaryCode
from .common import IntMatrix
from .constructions import GlueSpec, construction_a, gamma, glue_lattice, lattice_from_generators, named, root_lattice
from .lattice import AmbientBasis, Lattice, LatticeError, diagonal, direct_sum

logger = logging.getLogger(__name__)


class NamedSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["named"] = "named"
    name: str

    def build(self) -> Lattice:
        return named(self.name)


class RootSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["root"] = "root"
    type: Literal["Z", "A", "D", "E"]
    n: PositiveInt

    def build(self) -> Lattice:
        if self.type == "Z":
            return diagonal(self.n)
        return root_lattice(self.type, self.n)


class GammaSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["gamma"] = "gamma"
    k: PositiveInt

    def build(self) -> Lattice:
        return gamma(self.k)


class GlueFileSpec(BaseModel):
    """Root-lattice rows plus glue; Elkies-list entries without shipped data use this."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["glue"] = "glue"
    glue: GlueSpec
    label: str = ""
    require_unimodular: bool = True

    def build(self) -> Lattice:
        lattice = glue_lattice(self.glue, label=self.label)
        if self.require_unimodular and not lattice.is_unimodular():
            raise LatticeError(f"glued lattice has determinant {lattice.determinant()}, expected 1")
        return lattice


class ConstructionASpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["construction_a"] = "construction_a"
    code: BinaryCode
    label: str = ""

    def build(self) -> Lattice:
        return construction_a(self.code, label=self.label)


class GramSpec(BaseModel):
    """Explicit Gram matrix; also the canonical form written by ``build``."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["gram"] = "gram"
    gram: IntMatrix
    sign: Optional[Literal[1, -1]] = None
    ambient: Optional[AmbientBasis] = None
    label: str = ""

    def build(self) -> Lattice:
        if self.ambient is not None:
            return Lattice(gram=self.gram, sign=self.sign or 1, ambient=self.ambient, label=self.label)
        return Lattice.from_gram(self.gram, sign=self.sign, label=self.label)


class AmbientSpec(BaseModel):
    """Generators in ambient coordinates, scaled by ``denominator``."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["ambient"] = "ambient"
    rows: IntMatrix
    denominator: PositiveInt = 1
    radical: PositiveInt = 1
    sign: Literal[1, -1] = 1
    label: str = ""

    def build(self) -> Lattice:
        lattice = lattice_from_generators(
            self.rows, denominator=self.denominator, radical=self.radical, label=self.label
        )
        return lattice if self.sign == 1 else lattice.model_copy(update={"sign": -1})


class DirectSumSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["direct_sum"] = "direct_sum"
    parts: List["LatticeSpec"] = Field(min_length=1)

    @model_validator(mode="before")
    @classmethod
    def _infer_part_kinds(cls, data: Any) -> Any:
        if isinstance(data, dict) and isinstance(data.get("parts"), list):
            return {**data, "parts": [infer_kind(part) for part in data["parts"]]}
        return data

    def build(self) -> Lattice:
        lattice = self.parts[0].build()
        for part in self.parts[1:]:
            lattice = direct_sum(lattice, part.build())
        return lattice


LatticeSpec = Annotated[
    Union[NamedSpec, RootSpec, GammaSpec, GlueFileSpec, ConstructionASpec, GramSpec, AmbientSpec, DirectSumSpec],
    Field(discriminator="kind"),
]
DirectSumSpec.model_rebuild()

_SPEC_ADAPTER: TypeAdapter[LatticeSpec] = TypeAdapter(LatticeSpec)

_LABELLED_KINDS = frozenset({"glue", "construction_a", "gram", "ambient"})


def infer_kind(data: Any) -> Any:
    """Rewrite a lattice file without ``"kind"`` into the tagged form; other input passes through."""
    if not isinstance(data, dict) or "kind" in data:
        return data
    label = data.get("name", "")
    sign = data.get("sign")
    tagged: Dict[str, Any]
    if "gram" in data:
        tagged = {"kind": "gram", "gram": data["gram"]}
        if isinstance(data.get("ambient"), dict):
            tagged["ambient"] = data["ambient"]
    elif isinstance(data.get("ambient"), dict):
        tagged = {"kind": "ambient", **data["ambient"]}
    elif isinstance(data.get("construction"), dict):
        tagged = dict(infer_kind(data["construction"]))
        if sign not in (None, 1):
            raise ValueError("a construction cannot carry sign -1; give a gram or an ambient basis")
        sign = None
    else:
        return data
    if label and tagged.get("kind") in _LABELLED_KINDS:
        tagged.setdefault("label", label)
    if sign is not None:
        tagged["sign"] = sign
    return tagged


def parse_spec(data: object) -> LatticeSpec:
    """Validate a decoded JSON object as one of the spec kinds."""
    return _SPEC_ADAPTER.validate_python(infer_kind(data))


def canonical_spec(lattice: Lattice) -> GramSpec:
    return GramSpec(gram=lattice.gram, sign=lattice.sign, ambient=lattice.ambient, label=lattice.label)


def canonical_json(lattice: Lattice) -> str:
    """Stable JSON for a lattice: a fixed point of load → build → dump."""
    payload = canonical_spec(lattice).model_dump(mode="json")
    return json.dumps(payload, sort_keys=True, indent=2)


def load_lattice(source: str) -> Lattice:
    """Resolve ``named:X``, ``glue:<file>``, a spec file path, or a bare catalog name."""
    if source.startswith("named:"):
        return named(source[len("named:") :])
    if source.startswith("glue:"):
        path = Path(source[len("glue:") :])
        glue = GlueSpec.model_validate_json(path.read_text())
        return GlueFileSpec(glue=glue, label=path.stem).build()
    path = Path(source)
    if path.suffix == ".json" or path.is_file():
        logger.debug("reading lattice spec from %s", path)
        return parse_spec(json.loads(path.read_text())).build()
    return named(source)
