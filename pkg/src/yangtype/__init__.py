"""Exact symbolic computation for Yangian-type algebras built from words
over a finite alphabet: PBW arithmetic in U(gl(N,C)^{+L}), parameter
liftings, universal quadratic-linear commutation relations, and the
associated Poisson/necklace layer."""

from .scalars import S, SPoly
from .words import (EPSILON, circular_canonical, dominated_words, parse_word,
                    pseudo_concat, transition_coeff, word_to_str)
from .pbw import DEFAULT, PbwElement, ProjectionOrder
from .lift import lift_t, lift_t_series, special, trace_special, verify_projection
from .stable import (extract_by_linear_algebra, instantiate, instantiate_check,
                     normalize_relation, stable_comm, yangian_regression)
from .poisson import (bracket_pp, bracket_pt, bracket_tt, g_bracket,
                      h_bracket_pp, kks, leibniz_oracle, poisson_bracket)
from .matrices import MatrixTuple, eval_entry, eval_trace, invariance_check

__version__ = "0.1.0"
