"""Local Laplacian solver with boundary conditions via Dirichlet heat kernel pagerank."""

from ._localhk import (
    BoundaryProblem,
    CapacityError,
    DirichletOperator,
    DomainError,
    Error,
    Graph,
    ParseError,
    ScheduleError,
    SingularityError,
    SolveReport,
    SolverSchedule,
    ValidationError,
    VertexSubset,
    WalkCounters,
    approx_dirhkpr,
    error_bound,
    estimate_lambda1,
    exact_dirhkpr,
    exact_local_solution,
    greens_solver,
    load_boundary,
    load_graph,
    load_subset,
    local_linear_solver,
    make_schedule,
    riemann_sum_solution,
    sweep_norms,
    validate,
)

__version__ = "0.1.0"
