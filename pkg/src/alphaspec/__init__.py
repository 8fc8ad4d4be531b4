"""Alpha-spectral radii of uniform hypergraphs and the ordering of supertrees."""

from .hypergraph import Hypergraph, build, degrees, is_connected, is_supertree, read_text, write_text
from .spectral import PowerOptions, SpectralResult, alpha_spectral_radius, apply_alpha, rayleigh, residual, rho_alpha

__all__ = [
    "Hypergraph",
    "PowerOptions",
    "SpectralResult",
    "alpha_spectral_radius",
    "apply_alpha",
    "build",
    "degrees",
    "is_connected",
    "is_supertree",
    "rayleigh",
    "read_text",
    "residual",
    "rho_alpha",
    "write_text",
]
