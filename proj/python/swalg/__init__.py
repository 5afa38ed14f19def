from ._swalg import (
    __version__,
    cartesian_energies,
    degeneracy,
    fd_eigen_1d,
    jacobi,
    laguerre,
    racah_energies,
    run,
    verify_relations,
)

__all__ = [
    "__version__",
    "cartesian_energies",
    "degeneracy",
    "fd_eigen_1d",
    "jacobi",
    "laguerre",
    "racah_energies",
    "run",
    "verify_relations",
]
