"""Sol/QSol computation, abelian duality and the verification suite."""
from .solitary import qsol, sol, solitary_report
from .duality import AbelianPresentation, delta
