"""Digraph homomorphisms, rigid arc replacement and representations of finite categories."""

from .category import (DeltaCategory, FinCategory, GraphFunctor, OrdinalMap, check_graph_functor,
                       delta_count, delta_maps, delta_truncation, monoid_to_category, rt_functor,
                       validate_category)
from .density import DensityProfile, density_profile, find_subdivided_clique
from .gadget import (IndicatorGadget, ReplacedDigraph, embed_in_subdivided_clique,
                     indicator_for_depth, lift_hom, make_gadget, project_hom, star_replace,
                     verify_full_faithful_pair)
from .graphs import Digraph, Graph, VertexMap, degeneracy, is_hom, make_standard, subdivide, underlying
from .homs import EnumLimit, endomorphisms, hom_enumerate, hom_exists, hom_tuples
from .representation import MonoidTable, girth_separation, represent_category, represent_monoid
from .stability import OrderVerdict, PPFormula, order_witness, pp_eval, shift_strict

__version__ = "0.1.0"
