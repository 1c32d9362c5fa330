"""Reduced and cyclically reduced products of free-group words.

The package computes reduced and cyclically reduced forms with cancellation
traces, classifies the cancellation structure of products, builds
four-term identities with explicit collapse schedules, constructs
stabilized product families, and enumerates product-and-rotation closures.
"""

from .words import (Alphabet, Letter, LeviSplit, Word, canonical_rotation,
                    concat, cyclic_shift_between, inverse, is_cyclically_reduced,
                    is_prefix, is_reduced, is_subword, is_suffix, letter_key,
                    levi_split, power, reverse, rotate)
from .reduction import (POLICIES, CancellationEvent, CancellationTrace,
                        CycRedDecomposition, MaxCancellation, cancel_any_order,
                        cyc_product, cyc_reduce, max_cancellation, reduce,
                        reduced_product, replay_trace, rotate_trace)
from .structure import (ComplicWitness, PuzoReport, Shirv4CaseA, Shirv4CaseB,
                        Shirv4Witness, ShirvCase, ShirvCase1, ShirvCase2,
                        ShirvCase3, classify_shirv, decompose_conjugate,
                        is_cyclic_perm_term, puzo_witness, shirv4_decompose,
                        verify_common_border)
from .identities import (CollapsehInput, Deletion, ExchangeA, ExchangeB,
                         HElement, PhiElement, collapse_element,
                         collapse_schedule, conjugate, execute, h_for_cyc_product,
                         h_from_product, identity_from_equivalence,
                         is_proper_power, pairwise_nonconjugate, phi, psi)
from .latin import LatinPair, find_stabilizing_conjugator, latin_pairs
from .closure import ClosureConfig, ClosureSet, ContainsResult
from . import closure
from .syntax import (COMPACT_ALPHABET, WordSyntaxError, format_compact,
                     format_spaced, parse_compact, parse_spaced)

__version__ = "0.1.0"
