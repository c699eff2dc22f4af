"""Densities, Ramsey classes and random thresholds for small uniform hypergraphs."""

from .arrowing import ArrowInstance, ArrowResult, Outcome, arrows, arrows_to, ramsey_number, verify_witness
from .catalog import CATALOG, resolve
from .classes import ClassReport, Denseness, in_xr, in_xr_or_yr, in_yr, ramsey_dense_sufficient
from .containment import (
    HypothesisError,
    UndecidedError,
    containment_decision,
    corollary71_verify,
    equivalence_decision,
    partition_condition,
)
from .densities import (
    asym_density,
    delta_parameter,
    find_heart,
    is_heart,
    is_strictly_f_balanced,
    is_strictly_r_balanced,
    max_density,
    max_r_density,
    mr,
)
from .hypercore import Hypergraph, HypergraphFormatError, canonical_form, copies_of, parse, serialize
from .randlab import (
    ArrowsTuple,
    ContainmentHolds,
    ContainsCopy,
    SampleConfig,
    ThresholdEstimator,
    estimate_event,
    fit_threshold,
    sample,
    sweep,
)

__version__ = "0.1.0"
