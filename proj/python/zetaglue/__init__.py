"""Zeta-regularized determinants on product cylinders [0, L] x Y."""

from ._zetaglue import (
    ConvergenceError,
    CrossSection,
    SingularParameterError,
    ZetaglueError,
    glue,
    hurwitz_zeta,
    interface_spectrum,
    log_det,
    log_det_star,
    run_cli,
    segment_eigenvalues,
    spectrum,
    zeta,
)

__all__ = [
    "ConvergenceError",
    "CrossSection",
    "SingularParameterError",
    "ZetaglueError",
    "glue",
    "hurwitz_zeta",
    "interface_spectrum",
    "log_det",
    "log_det_star",
    "run_cli",
    "segment_eigenvalues",
    "spectrum",
    "zeta",
]
