"""Exact projective-geometry toolkit over prime fields.

Builds Groebner bases, Hilbert-series invariants, apolarity rank strata,
Heisenberg-invariant cubic pencils, and the linkage constructions of elliptic
scrolls, Del Pezzo 3-folds, and a degree-12 Calabi-Yau 3-fold.
"""

from .field import PrimeFieldConfig, primitive_root_of_unity
from .poly import (GREVLEX, LEX, MonomialOrder, PolyRing, Polynomial,
                   block_order, parse_polynomial, render_polynomial)
from .groebner import (GradedBasis, Ideal, graded_piece, groebner_basis,
                       linear_multiples, minimal_generator_degrees,
                       minimal_generators, normal_form)
from .hilbert import (SchemeReport, hilbert_function, hilbert_polynomial,
                      scheme_report)
from .idealops import (LinkageStep, eliminate, image_ideal_graded, intersect,
                       link, quotient, saturate, saturate_irrelevant)
from .apolarity import (DualRingPair, PositiveDimensionalStratum, QuadricWeb,
                        apolar_pair, base_locus, orthogonal_complement,
                        quadric_matrix, rank_strata, strata_ideals)
from .heisenberg import (LinearAction, PencilCoords, cubic_pencil,
                         invariant_cubics, invariant_pencil_basis, line_orbit,
                         planes_of_r, schrodinger_generators,
                         segre_scroll_ideal, three_p3s, vanishes_on_line)
from .constructions import (DEFAULT_PRIME, SECONDARY_PRIME, UNION_COORDS,
                            DegenerateParameter, NamedScheme, PipelineReport,
                            PolarizationRow, RetryExhausted, bilink_pipeline,
                            del_pezzo, elliptic_scroll, enumerate_polarizations,
                            family_planes_in, general_w_system,
                            scroll_meets_segre, scroll_singularity_check,
                            scroll_union, segre_curve_decomposition,
                            standard_ring, w_system)
from .claims import CLAIMS, ClaimResult, ResourceExceeded, run_all, run_claim

__version__ = "0.1.0"
