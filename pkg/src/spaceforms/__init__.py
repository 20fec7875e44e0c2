"""Exact deck-group representation theory and twisted Laplacian spectra
on spherical space forms."""

from .exactnum import CONDUCTOR, CycloNum, Rational, embed_float, galois, root_of_unity
from .groups import (FiniteGroup, Quat, SubgroupHandle, binary_polyhedral,
                     build_binary_polyhedral, cyclic_group, left_cosets,
                     find_index2_subgroup, verify_generator_conjugations)
from .characters import (CharacterTable, ClassFunction, character_table,
                         cyclic_character, inner_product, restrict,
                         spin_character)
from .induction import (InducedDecomposition, MonomialRep, induce_character,
                        induce_in_stages, induced_matrices, induction_table,
                        frobenius_multiplicity)
from .spectra import (DegeneracySeries, SpectralWeight, TwistSpec, degeneracy,
                      degeneracy_series, lens_torsion,
                      oracle_projector_degeneracy, spectral_sum)
from .theorems import (compare_reference_matrices, solve_irrep_quantities,
                       sunada_check, verify_central_relations,
                       verify_dimension_relation, verify_isospectrality)
from .mckay import (McKayGraph, CompactifiedDiagram, class_correspondence,
                    compactified_diagram, export_dot, mckay_graph)

__version__ = "0.1.0"
