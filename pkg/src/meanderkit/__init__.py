"""meanderkit: exact meander calculus for seaweed subalgebras of sl(n).

A meander type like ``6|1/2|3|2`` names a planar arc diagram; this package
computes its signature under two deterministic reduction systems, the index
and plane homotopy type read off the signature, the principal-element
spectrum of Frobenius meanders, gcd index formulas for small block counts,
and infinite Frobenius families, with every combinatorial route
cross-checked by exact rational linear algebra over the seaweed matrix
algebra itself.
"""

from .core import (
    ComponentSummary,
    Composition,
    ConsistencyError,
    MeanderError,
    MeanderGraph,
    MeanderType,
    NotFrobeniusError,
    ParseError,
    PreconditionError,
    build_graph,
    components,
    format_type,
    index_naive,
    parse_type,
)
from .formulas import (
    FourBlockType,
    family_biparabolic,
    family_parabolic,
    index_four_block,
    index_two_block,
)
from .lab import (
    GcdCondition,
    ScanReport,
    five_block_meanders,
    load_config,
    scan_block_measures,
    scan_unimodality,
    search_gcd_conditions,
)
from .lie import (
    PrincipalElement,
    SeaweedPattern,
    ad_spectrum,
    canonical_functional,
    cybe_residual,
    index_oracle,
    kirillov_matrix,
    principal_element,
    seaweed_positions,
)
from .spectrum import (
    SpectrumFlags,
    admissible_pairs,
    block_measures,
    classify,
    measure,
    spectrum,
    spectrum_to_json,
)
from .winding import (
    HomotopySymbol,
    Move,
    PlaneHomotopyType,
    RefinedStep,
    UpMove,
    WindUpError,
    apply_up_move,
    enumerate_meanders,
    generate_frobenius,
    hat_reversed,
    homotopy_type,
    index_from_signature,
    is_frobenius,
    parse_signature,
    parse_up_moves,
    signature_refined,
    signature_simplified,
    signature_to_text,
    step_refined,
    step_refined_full,
    step_simplified,
    up_moves_to_text,
    wind_up,
)

__version__ = "0.1.0"
