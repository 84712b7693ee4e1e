"""Algebraic Markov calculus for links in link complements and closed
3-manifolds: mixed braid words, Artin combing through a fixed braid, and the
full move calculus with bounded equivalence search."""

from .braid import (BraidWord, NormalForm, WordLengthError, equal, free_reduce,
                    normal_form, oracle_equal, permutation_of)
from .combing import CombedPair, comb, compute_rho
from .equivalence import (Certificate, SearchBudget, bounded_search,
                          canonical_key, random_walk, replay)
from .grammar import WordSyntaxError, format_word, parse_word
from .manifolds import ManifoldSpec, make_spec, preset, verify_preset
from .mixed import (MixedBraidWord, check_presentation, embed, mixed_equal,
                    strand_permutation, winding_vector)
from .moves import (LoopWordCache, MoveRecord, algebraic_band_move,
                    band_substitute, combed_band_move, compute_r, framing_loop,
                    l_move, m_move, markov_conjugate, nonpure_band_move,
                    twisted_conjugate)

__all__ = [name for name in dir() if not name.startswith("_")]
