"""
Pydantic schemas for quiver input documents and command reports
"""

from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.quivers.quiver import QuiverMode


class ArrowDocument(BaseModel):
    """One arrow of a JSON quiver document"""
    model_config = ConfigDict(populate_by_name=True)

    source: str = Field(..., alias="from", description="Source vertex")
    target: str = Field(..., alias="to", description="Target vertex")
    seq: Optional[List[int]] = Field(None, description="Dualization sequence (a1,...,am)")
    val: Optional[List[int]] = Field(None, description="Valuation shorthand (d,e)")

    @field_validator("val")
    @classmethod
    def validate_val(cls, v):
        if v is not None and len(v) != 2:
            raise ValueError("val takes exactly two entries d,e")
        return v

    @model_validator(mode="after")
    def one_label(self):
        if self.seq is not None and self.val is not None:
            raise ValueError("an arrow takes seq or val, not both")
        return self


class QuiverDocument(BaseModel):
    """JSON mirror of the text quiver format"""
    mode: QuiverMode = Field(QuiverMode.HEREDITARY, description="hereditary or general")
    vertices: List[str] = Field(default_factory=list, description="Vertex names, isolated ones included")
    arrows: List[ArrowDocument] = Field(default_factory=list, description="Labeled arrows")


class ReasonReport(BaseModel):
    """Machine-readable cause of a failed Köthe clause"""
    kind: str = Field(..., description="Failure kind")
    detail: Optional[str] = Field(None, description="Condition name, expected shape or forbidden type")
    vertex: Optional[str] = Field(None, description="Offending vertex")
    arrow: Optional[List[str]] = Field(None, description="Offending arrow as [source, target]")
    expected: Optional[List[int]] = Field(None, description="Expected dimension sequence")
    found: Optional[List[int]] = Field(None, description="Dimension sequence found")


class ComponentBase(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    vertices: List[str] = Field(..., description="Component vertices in name order")
    type: str = Field(..., description="Diagram type, e.g. E6 or I2(5)")
    error: Optional[str] = Field(None, description="Library error raised on this component")


class KoetheComponentReport(ComponentBase):
    rep_finite: bool = Field(..., alias="repFinite", description="Representation-finite")
    koethe: bool = Field(..., description="Component matches a Köthe clause")
    clause: Optional[int] = Field(None, description="Matched clause 1..8")
    parameter: Optional[int] = Field(None, description="Sink position t for the two-chain B clause")
    reason: Optional[ReasonReport] = Field(None, description="Why no clause matched")


class KoetheReport(BaseModel):
    components: List[KoetheComponentReport] = Field(..., description="Per-component verdicts")
    koethe: bool = Field(..., description="Every component is Köthe")


class ClassifyComponentReport(ComponentBase):
    rep_finite: bool = Field(..., alias="repFinite", description="Representation-finite")
    simply_laced: bool = Field(..., alias="simplyLaced", description="Every label trivial on an A/D/E diagram")
    sink_sequence: Optional[List[str]] = Field(None, alias="sinkSequence", description="Admissible sequence of sinks")
    steps: Optional[int] = Field(None, description="Tower steps until every source vector turned negative")


class ClassifyReport(BaseModel):
    components: List[ClassifyComponentReport] = Field(..., description="Per-component classification")


class IndecReport(BaseModel):
    vector: List[int] = Field(..., description="Dimension vector in component vertex order")
    t: int = Field(..., description="Tower stage")
    sink: str = Field(..., description="Sink of the stage whose simple vector was reflected")


class IndecsComponentReport(ComponentBase):
    indecomposables: List[IndecReport] = Field(default_factory=list, description="Branch system with provenance")
    count: int = Field(0, description="Number of indecomposables")


class IndecsReport(BaseModel):
    components: List[IndecsComponentReport] = Field(..., description="Per-component enumerations")


class RootsComponentReport(ComponentBase):
    roots: List[List[int]] = Field(default_factory=list, description="Positive roots in component vertex order")
    count: int = Field(0, description="Number of positive roots")
    highest: Optional[List[int]] = Field(None, description="Highest root")
    symmetrizer: Optional[List[int]] = Field(None, description="Symmetrizer f")


class RootsReport(BaseModel):
    components: List[RootsComponentReport] = Field(..., description="Per-component root systems")


class RepReport(BaseModel):
    dims: List[int] = Field(..., description="Dimension vector in component vertex order")
    top: List[int] = Field(..., description="Dimension vector of the top")
    maps: Dict[str, List[List[str]]] = Field(default_factory=dict, description="Arrow matrices keyed 'source->target'")


class RepsComponentReport(ComponentBase):
    representations: List[RepReport] = Field(default_factory=list, description="Matrix indecomposables")
    count: int = Field(0, description="Number of indecomposables")


class RepsReport(BaseModel):
    components: List[RepsComponentReport] = Field(..., description="Per-component matrix enumerations")


class WitnessReport(BaseModel):
    dims: List[int] = Field(..., description="Dimension vector of the witness")
    top: List[int] = Field(..., description="Top dimension vector, some entry at least 2")


class CrossCheckComponentReport(ComponentBase):
    model_config = ConfigDict(populate_by_name=True)

    decision: Optional[bool] = Field(None, description="Diagrammatic verdict")
    brute_force: Optional[bool] = Field(None, alias="bruteForce", description="All indecomposables multiplicity-free top")
    agree: Optional[bool] = Field(None, description="Both verdicts coincide")
    checked: int = Field(0, description="Indecomposables built before stopping")
    witness: Optional[WitnessReport] = Field(None, description="First indecomposable without multiplicity-free top")


class CrossCheckReport(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    components: List[CrossCheckComponentReport] = Field(..., description="Per-component cross checks")
    decision: bool = Field(..., description="Diagrammatic verdict")
    brute_force: Optional[bool] = Field(
        None, alias="bruteForce", description="Brute-force verdict, null when a component could not be checked"
    )
    agree: Optional[bool] = Field(None, description="No component disagrees, null when a component could not be checked")
    errored: int = Field(0, description="Components whose brute-force check failed")


class DimSeqValidateReport(BaseModel):
    sequence: List[int] = Field(..., description="Input sequence")
    valid: bool = Field(..., description="Recurrences hit the boundary values")
    cyclic: bool = Field(..., description="Every rotation is valid")
    x: List[int] = Field(..., description="x_0 .. x_m")
    y: List[int] = Field(..., description="y_0 .. y_m")
    koethe: bool = Field(..., description="Sequence equals the Köthe shape of its length")


class SequenceClassReport(BaseModel):
    canonical: List[int] = Field(..., description="Least member under rotation and reversal")
    members: List[List[int]] = Field(..., description="Rotations and reversals in the class")
    indecomposables: List[List[int]] = Field(..., description="Rank-2 indecomposable vectors of the canonical member")
    koethe: bool = Field(..., description="Class contains the Köthe shape")


class DimSeqListReport(BaseModel):
    m: int = Field(..., ge=3, description="Sequence length")
    classes: List[SequenceClassReport] = Field(..., description="Classes of dimension sequences")


class DimSeqIndecsReport(BaseModel):
    sequence: List[int] = Field(..., description="Input sequence")
    indecomposables: List[List[int]] = Field(..., description="Indecomposable vectors (x, y)")
