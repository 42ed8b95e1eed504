"""Exact homology, cut-and-paste invariants and squares K-theory on finite data."""

from .constructions import (circle_reflection, lift_to_layers, mapping_torus, product, simplex_boundary,
                            staircase_torus, torus_automorphism)
from .cutpaste import (Bordism, GroupDescription, InvariantTuple, invariant_tuple, sk_boundary_class,
                       sk_boundary_split, sk_equivalent, skk_equivalent, skk_group_structure)
from .errors import ContractError, ParseError, ResourceError, ScissorsError, StructuralError
from .fixtures import fixture
from .forms import intersection_form, manifold_signature
from .homology import (ChainComplex, ChainMap, FgAbGroup, HomologyMap, IntegerChainComplex, free_determinant,
                       homology, induced_map, signature)
from .invariants import (check_duality_identity, euler_characteristic, k1_class,
                         kervaire_semicharacteristic)
from .linalg import smith_normal_form
from .simplicial import (FiniteCategory, SimplicialObject, edgewise_subdivide, free_degeneracies, nerve,
                         normalized_chains)
from .squares import (GridSimplex, SquaresCategory, coequalizer_pi0, grid_nerve, k0_presentation,
                      string_to_grid, validate_squares)
from .triangulation import (SubcomplexInclusion, Triangulation, VertexAutomorphism, automorphism_action,
                            is_sk_embedding, parse_triangulation, format_triangulation, validate)

__version__ = "0.1.0"
