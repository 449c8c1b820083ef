"""Real moment-angle complexes, flag complexes, right-angled Coxeter groups and
finite pieces of Davis complexes, all as exact combinatorial objects."""

from .errors import CapacityError, DomainError, InputError, MomentAngleError, StructureError
from .simplicial import (SimplicialComplex, flag_witness, from_facets, full_subcomplex,
                         is_conelike, is_flag, is_sphere_triangulation, link, parse_scx,
                         format_scx, skeleton)
from .cellcx import (CellComplex, euler_characteristic, gromov_link_condition, isomorphic_to,
                     validate, vertex_link)
from .polyprod import build_cc, build_polyhedral_product, build_rk, euler_formula
from .homology import (homology, hochster_cross_check, reduced_simplicial_homology,
                       smith_normal_form)
from .asphericity import builtin_pair, davis_criterion, rk_aspherical
from .coxeter import (ball, brute_equal, invert, lambda_map, multiply, normal_form,
                      parabolic_membership, racg_from_complex, sphere_sizes)
from .davis import (basic_construction, covering_check, davis_ball, mirrored_chamber,
                    npc_certificate, pi1_presentation)
from .catalog import catalog

__version__ = "0.1.0"
