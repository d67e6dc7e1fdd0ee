"""Branching k-path vertex covers of forests."""
from .bounds import (BoundValue, PeelStep, PeelTrace, ReductionResult,
                     branching_preserved, check_certificate, lower_bound,
                     peel_certificate, reduce_to_directed)
from .errors import *  # noqa: F401,F403
from .forest import (RootedDirectedForest, UndirectedForest, VertexKind,
                     build_directed, build_undirected, classify)
from .generators import gen_directed_extremal, gen_random, gen_undirected_extremal
from .kernels import BACKEND
from .solver import SolveResult, solve, solve_bruteforce
from .verify import (BareSegmentDecomposition, Violation, decompose_bare_segments,
                     is_cover, verify_fast, verify_naive)

__version__ = "0.1.0"
