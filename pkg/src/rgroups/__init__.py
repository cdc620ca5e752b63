"""Exact combinatorial calculator for Knapp-Stein R-groups of classical
groups and their inner forms."""

from .errors import (
    ConfigurationError,
    InternalInconsistencyError,
    UnsupportedLeviError,
    ValidationError,
)
from .groupdata import (
    FAMILIES,
    QUASI_SPLIT,
    GroupDatum,
    LeviDatum,
    LeviDescription,
    enumerate_inner_forms,
    enumerate_levis,
    require_valid_levi,
    validate_levi,
)
from .repdatum import (
    Scenario,
    ScenarioPair,
    SigmaDatum,
    scenario_from_json,
    scenario_to_json,
    sigma_equal,
    transfer_datum,
    validate_sigma,
)
from .rootdata import BlockRoot, reduced_roots
from .weylgroup import (
    WeylContext,
    WeylElement,
    act_on_root,
    act_on_sigma,
    compose,
    enumerate_weyl,
    fixed_space_dim,
    identity,
    inverse,
    reflection_element,
    sign_change,
    transposition,
    weyl_context,
)
from .rgroup import (
    ClosedFormResult,
    RGroupResult,
    TransferReport,
    closed_form,
    closed_form_matches,
    delta_prime,
    endoscopic_side,
    ensure_supported,
    knapp_stein,
    stabilizer,
    transfer_check,
)
from .elliptic import (
    EllipticReport,
    arthur_elliptic,
    components,
    elliptic_report,
    herb_applicable,
    herb_elliptic,
)
from .sweep import SweepResult, iter_scenarios, iter_sigmas, run_sweep

__version__ = "0.1.0"
