"""Exact Alexander-type invariants of plane curve complements."""

from .words import (Word, GroupPresentation, BraidWord, AbelianizationMap, apply_braid,
                    abelianization, fox_derivatives, fox_jacobian, simplify_presentation)
from .laurent import LaurentPoly, AlexanderPolynomial, minor_ideal, univariate_order
from .cyclotomic import CyclotomicElement, CharacterPoint, evaluate_at_character
from .serialize import parse_poly, poly_to_text
from .braidvk import (BraidMonodromyData, RealArrangement, vk_presentation,
                      real_arrangement_monodromy, plane_curve_rho)
from .charvar import (CharVarReport, BranchedCoverSpec, characteristic_variety,
                      depth_at_character, depth_from_generator_angles, alexander_polynomial,
                      unbranched_cover_rank, branched_cover_b1, cyclic_building_data,
                      first_betti)
from .localsing import (QuasiHomWeights, SpectrumList, ResolutionData, QuasiAdjPolytope,
                        spectrum_genfn, local_monodromy_charpoly, quasiadjunction_polytopes,
                        faces_of_quasiadjunction, lct_polytope)
from .globalalex import (PointConditionSet, LocalTypeList, superabundance_p2,
                         alexander_from_contributing_faces, local_product, check_divisibility,
                         milnor_charpoly_constraint)
from .lonne import bp_presentation, discriminant_presentation, bp_bilinear, cube_points
