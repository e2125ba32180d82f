"""Total difference chromatic numbers: exact solver, family constructions,
and labeling verification."""

from .graph import (
    EdgeListParseError, Graph, GraphError, INFINITE, diameter, emit_edge_list,
    parse_edge_list,
)
from .families import (
    CaterpillarSpec, CycleSpec, FamilyError, FamilySpec, GearSpec, HelmSpec,
    MaximalLobsterSpec, PathSpec, StarSpec, UniformTreeSpec, WheelSpec, build,
    uniform_tree_vertex_count, validate,
)
from .verifier import (
    Labeling, LabelingError, Violation, ViolationReport, check_labeling,
    definitional_check, find_violations, induced_edge_labels, is_k_tdl,
    labeling_from_json, labeling_to_json, max_label_used,
    power_of_three_labeling, report_to_json,
)
from .solver import (
    BoundsResult, BudgetExceeded, SearchOptions, brute_force_chi, chi_td,
    decide_k_tdl, has_k_tdl, lower_bound, vertex_order,
)
from .constructions import (
    ConstructionError, ConstructionResult, chi_td_caterpillar, chi_td_gear,
    chi_td_helm, chi_td_star, chi_td_uniform_tree_h2, chi_td_wheel,
    closed_form, feasible_center_labels, label_caterpillar, label_cycle,
    label_gear, label_helm, label_path, label_star, label_uniform_tree,
    label_wheel,
)
from .lobster import (
    LobsterContext, LobsterError, MTable, label_maximal_lobster,
    lobster_bounds, m_table, m_value, pair_valid, stabilization_point,
)

__all__ = [name for name in dir() if not name.startswith("_")]
