import pkg_resources
__version__ = pkg_resources.get_distribution('boxmis').version

from .utils.errors import (BoxmisError, CheckpointError, ConstructionError, DimensionError,
                           GoldenMismatch, PreconditionError)
from .geometry.box import Box, dominates, intersects
from .geometry.classes import ORDER, ShapeClass, ValidationReport
from .geometry.arrangement import (Arrangement, connected_components, intersection_graph,
                                   validate_order, validate_shape)
from .expectation.graph import OrderedGraph
from .expectation.polynomial import ExpectationPolynomial, greedy_p_polynomial, optimize_p
from .expectation.mis import mis_of_boxes, mis_size
from .policies.spec import PolicySpec
from .policies.random_source import RandomSource
from .policies.policy import Trace, run_policy
from .adversaries.instance import AdaptivePackSpec, MarkingSpec, VerifiedInstance
from .adversaries.marking import marking_generate
from .adversaries.pack import adaptive_pack_play
from .search.search import SearchConfig, SearchResult, minimax_search
from .utils.loader import load_arrangements_from_stream, load_graphs_from_stream
import boxmis.tuning
import boxmis.harness
