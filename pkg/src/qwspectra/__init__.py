"""Exact construction and spectral checks of quantum-walk matrices on graphs."""

from .charpoly import charpoly_exact, det_bareiss
from .errors import (ParseError, PreconditionViolation, QWSpectraError)
from .formats import parse_edge_list, parse_graph6, read_graph_file, to_graph6
from .graph import Graph, NotSRG, SRGParams, girth, srg_params
from .isospec import Fingerprint, batch_compare, compare, fingerprint
from .kernels import BACKEND
from .matrix import ExactMatrix
from .poly import ExactPolynomial
from .scalars import GaussianRational
from .theorems import (VerificationReport, backtracking_decomposition, count_backtracking_paths,
                       spectrum_u2_plus, spectrum_u_plus, verify_cor21, verify_cor22,
                       verify_eq24, verify_theorem1, verify_theorem2)

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "ExactMatrix", "ExactPolynomial", "Fingerprint", "GaussianRational", "Graph",
    "NotSRG", "ParseError", "PreconditionViolation", "QWSpectraError", "SRGParams",
    "VerificationReport", "backtracking_decomposition", "batch_compare", "charpoly_exact",
    "compare", "count_backtracking_paths", "det_bareiss", "fingerprint", "girth",
    "parse_edge_list", "parse_graph6", "read_graph_file", "spectrum_u2_plus", "spectrum_u_plus",
    "srg_params", "to_graph6", "verify_cor21", "verify_cor22", "verify_eq24", "verify_theorem1",
    "verify_theorem2",
]
