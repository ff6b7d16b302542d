"""Random instances, source problems and the hardness constructions."""

from hyperball.services.generators.random_instances import (
    gen_path_instance,
    gen_random,
    random_gamma4,
    random_hitting_set,
    random_mcis,
    random_mr,
)
from hyperball.services.generators.reductions import (
    mr_center_from_2red,
    reduce_gamma4,
    reduce_hittingset,
    reduce_mcis,
    reduce_mr_to_2blue,
    reduce_mr_to_2red,
    solve_mr_via_2red,
)
from hyperball.services.generators.sources import (
    Gamma4Constraint,
    Gamma4Instance,
    HittingSetInstance,
    MCISInstance,
    MRInstance,
    parse_gamma4,
    parse_hitting_set,
    parse_mcis,
    parse_mr,
    read_source,
    rest_mr_variants,
    solve_gamma4_bf,
    solve_hittingset_bf,
    solve_mcis_bf,
    solve_mr_bf,
    solve_rest_mr_bf,
    write_gamma4,
    write_hitting_set,
    write_mcis,
    write_mr,
)

__all__ = [
    "gen_random",
    "gen_path_instance",
    "random_mr",
    "random_hitting_set",
    "random_mcis",
    "random_gamma4",
    "reduce_mr_to_2red",
    "reduce_mr_to_2blue",
    "mr_center_from_2red",
    "solve_mr_via_2red",
    "reduce_gamma4",
    "reduce_hittingset",
    "reduce_mcis",
    "MRInstance",
    "HittingSetInstance",
    "MCISInstance",
    "Gamma4Constraint",
    "Gamma4Instance",
    "parse_mr",
    "parse_hitting_set",
    "parse_mcis",
    "parse_gamma4",
    "write_mr",
    "write_hitting_set",
    "write_mcis",
    "write_gamma4",
    "read_source",
    "rest_mr_variants",
    "solve_mr_bf",
    "solve_rest_mr_bf",
    "solve_hittingset_bf",
    "solve_mcis_bf",
    "solve_gamma4_bf",
]
