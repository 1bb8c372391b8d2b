"""fuzzdec: decomposing fuzzy binary relations into strict preference and
indifference components via triangular norms and conorms."""

from .verdicts import TriState, Verdict, fails, holds, unknown
from .operators import (
    EPSILON,
    BinaryOp,
    Kind,
    check_collapse_implies_absorption,
    check_first_coordinate_continuity,
    check_norm_axioms,
    check_strict_near_zero,
    check_strictly_increasing_first,
    degree_grid,
    dual,
    make_conorm,
    make_custom,
    make_family,
    make_norm,
    parse_op_spec,
)
from .divisors import (
    DegreeInterval,
    bisection_one_interval,
    bisection_zero_interval,
    one_interval,
    strong_existence,
    strong_uniqueness,
    zero_interval,
)
from .relations import (
    FuzzyRelation,
    RelationParseError,
    crisp_decompose,
    format_relation,
    is_asymmetric,
    is_crisp,
    is_reflexive,
    is_s_connected,
    is_symmetric,
    is_t_transitive,
    load_relation,
    parse_relation,
    relation_from_dict,
    save_relation,
)
from .decompose import (
    Decomposition,
    DecompositionError,
    Mode,
    ResidualValue,
    bisection_residual,
    canonical_decompose,
    enumerate_decompositions,
    indifference_part,
    residual,
    residual_array,
    strong_decompose,
    verify_strong,
    verify_weak,
)
from .preferences import (
    AxiomVerdict,
    DecompositionRule,
    FPReport,
    PreferenceTriplet,
    RuleClass,
    RuleClassification,
    audit_fp,
    classify_rule,
    find_collapse_witness,
    make_rule,
    mj_counterexample,
    sample_relations,
    tie_strict_max_decomposition,
    triplet_from_decomposition,
)
from .regions import (
    RegionGrid,
    pair_weakly_decomposable,
    relation_weakly_decomposes,
    restricted_decomposability,
    strong_region,
    t_transitive_closure,
    transitivity_preserves_verdict,
    weak_region,
)
from .tables import (
    Table1Verdict,
    Table2Verdict,
    TableCell,
    diff_against_reference,
    generate_table1,
    generate_table2,
    render_table,
)

__version__ = "0.1.0"
