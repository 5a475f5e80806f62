"""Perverse sheaves on reductive Borel-Serre compactifications: local data, link cohomology and Ext^1."""
from .ext import ExtResult, ext1, ext_partners, hom_dim, middle_self_extension_detector
from .kostant import kostant_modules, kostant_weight, weyl_dim
from .linkcoh import link_cohomology, local_shriek, local_star
from .rootsys import build_root_system, element, min_coset_reps, weyl_elements
from .simplexih import ih_simplex, stratified_simplex
from .strata import dual_perversity, perversity, stratum_dims
from .weights import symbol

__all__ = [
    "ExtResult", "build_root_system", "dual_perversity", "element", "ext1", "ext_partners", "hom_dim",
    "ih_simplex", "kostant_modules", "kostant_weight", "link_cohomology", "local_shriek", "local_star",
    "middle_self_extension_detector", "min_coset_reps", "perversity", "stratified_simplex",
    "stratum_dims", "symbol", "weyl_dim", "weyl_elements",
]
__version__ = "0.1.0"
