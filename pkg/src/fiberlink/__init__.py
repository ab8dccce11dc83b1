"""Link-diagram calculus for singular-set and submersion-fiber realizability."""

from .diagram import (
    Crossing,
    DiagramError,
    FramedLink,
    LabeledScene,
    LinkDiagram,
    ParseError,
    Violation,
    canonical_form,
    crossing_sign,
    disjoint_union,
    mirror,
    parse_diagram,
    parse_file,
    parse_framed_link,
    parse_scene,
    permute_components,
    reverse_component,
    serialize,
    serialize_framed_link,
    serialize_scene,
    sublink,
    validate,
)
from .invariants import (
    LinkingMatrix,
    SeifertData,
    hopf_invariant,
    is_framed_null_cobordant,
    linking_matrix,
    seifert,
    self_crossing_count,
)
from .moves import (
    R1Minus,
    R1Plus,
    R2Minus,
    R2Plus,
    R3,
    apply_reidemeister,
    find_bigons,
    find_kinks,
    find_triangles,
)
from .obstruction import (
    FramingChange,
    ObstructionVector,
    ParityStatus,
    framing_change_delta,
    framing_parity,
    obstruction_vector,
    parity_identity_check,
)
from .realizability import (
    ChillingworthReport,
    HpReport,
    RealizabilityReport,
    SplitReport,
    Verdict,
    WitnessLink,
    chillingworth_report,
    hp_submersion_check,
    realize_singular,
    split_possible,
    witness_scene,
    witness_singular,
)
from .reports import VERSION, evaluate, exit_code_for, input_digest

__version__ = VERSION

__all__ = [
    "Crossing",
    "DiagramError",
    "FramedLink",
    "LabeledScene",
    "LinkDiagram",
    "ParseError",
    "Violation",
    "canonical_form",
    "crossing_sign",
    "disjoint_union",
    "mirror",
    "parse_diagram",
    "parse_file",
    "parse_framed_link",
    "parse_scene",
    "permute_components",
    "reverse_component",
    "serialize",
    "serialize_framed_link",
    "serialize_scene",
    "sublink",
    "validate",
    "LinkingMatrix",
    "SeifertData",
    "hopf_invariant",
    "is_framed_null_cobordant",
    "linking_matrix",
    "seifert",
    "self_crossing_count",
    "R1Minus",
    "R1Plus",
    "R2Minus",
    "R2Plus",
    "R3",
    "apply_reidemeister",
    "find_bigons",
    "find_kinks",
    "find_triangles",
    "FramingChange",
    "ObstructionVector",
    "ParityStatus",
    "framing_change_delta",
    "framing_parity",
    "obstruction_vector",
    "parity_identity_check",
    "ChillingworthReport",
    "HpReport",
    "RealizabilityReport",
    "SplitReport",
    "Verdict",
    "WitnessLink",
    "chillingworth_report",
    "hp_submersion_check",
    "realize_singular",
    "split_possible",
    "witness_scene",
    "witness_singular",
    "VERSION",
    "evaluate",
    "exit_code_for",
    "input_digest",
]
