"""Connected and total connected domination games on small graphs."""

from ._kernels import BACKEND
from .classify import ClassLabel, VerificationResult, classify, tree_class, tree_game_value
from .families import (cartesian_product, complete, corona, cycle, direct_product, empty,
                       family_D15, family_F, family_G, generalized_corona, path, paw, star)
from .formats import emit_graph6, parse_graph6
from .game import GameReport, GameSolver, Player, Variant, game_report, naive_solve, solve
from .graph import BITSET_CAP, Graph, GraphError, build_graph, is_connected

__version__ = "0.1.0"
