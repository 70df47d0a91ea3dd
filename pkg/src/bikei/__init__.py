"""Involutory biracks (bikei) and their link counting invariants."""

from .birack import (AxiomReport, ClassificationFlags, FiniteBirack, TsrParams, classify,
                     column_group, format_matrix_file, from_matrix, is_involutory,
                     kink_map_and_rank, make_constant_action, make_tsr, parse_matrix_file,
                     sideways_map, subbirack_closure, to_matrix, tsr_involutory_criterion,
                     verify_axioms)
from .counting import (Labeling, count_labelings_backtrack, count_labelings_linear,
                       phi_column_group, phi_image, phi_integral, phi_writhe)
from .diagram import (Crossing, LinkDiagram, Presentation, extract_presentation, insert_kinks,
                      parse_braid_word, parse_gauss_code, parse_presentation_file)
from .polynomial import EnhancementPolynomial
from .search import SearchPredicate, enumerate_biracks, search_tsr

__all__ = [name for name in dir() if not name.startswith("_")]
