"""Higman-Thompson groups as tables of prefix codes, their images in the
Cuntz algebras, and the permutative representations on orbits of x -> nx mod 1.

All arithmetic is exact (integers and ``fractions.Fraction``).
"""

from .words import AdmissibilityError, PrefixCode, format_word, parse_word
from .intervals import NadicInterval, phi, phi_inv
from .tables import (Table, classify, compose, equal, format_table, identity, invert,
                     parse_table, random_table, reduce, validate)
from .plmaps import PLMap, evaluate, table_to_plmap, plmap_to_table
from .cuntz import CuntzSum, Monomial, adjoint, parse_sum, psi
from .embeddings import EmbeddingParams, embed_table, f_morphism, gamma, iota_sum
from .orbits import cycle_of, enumerate_orbit, equivalent, parse_point
from .representation import FormalVector, act, apply_sum, matrix_section, u_image

__version__ = "0.1.0"
