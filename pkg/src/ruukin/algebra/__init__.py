from .dump import dumps, loads
from .matrix import PolyMatrix, det_bareiss, det_cofactor, polymatrix_det
from .poly import VARIABLES, MPoly, div_exact, parse
from .resultant import resultant, resultant_sylvester, sylvester_matrix
from .scalar import ExtScalar

__all__ = [
    "ExtScalar", "MPoly", "PolyMatrix", "VARIABLES", "det_bareiss", "det_cofactor",
    "div_exact", "dumps", "loads", "parse", "polymatrix_det", "resultant",
    "resultant_sylvester", "sylvester_matrix",
]
