"""Linear piques on finite cyclic groups: characters, similarity, isomorphism."""

from linpique.modarith import (
    CrtDecomposition,
    crt_combine,
    crt_split,
    euler_phi,
    factorize,
    p_part,
    unit_group,
    unit_group_is_cyclic,
    unit_order,
)
from linpique.permutation import Permutation, automorphism_permutation, parse_cycles
from linpique.pique import LinearPique, Word, parse_pique, parse_word
from linpique.character import characters_equal, character_table, char_value
from linpique.similarity import permutationally_similar, verify_witness
from linpique.isomorphism import linear_isomorphic, pique_isomorphic, identity_fingerprint

__version__ = "0.1.0"

__all__ = [
    "CrtDecomposition",
    "LinearPique",
    "Permutation",
    "Word",
    "automorphism_permutation",
    "char_value",
    "character_table",
    "characters_equal",
    "crt_combine",
    "crt_split",
    "euler_phi",
    "factorize",
    "identity_fingerprint",
    "linear_isomorphic",
    "p_part",
    "parse_cycles",
    "parse_pique",
    "parse_word",
    "permutationally_similar",
    "pique_isomorphic",
    "unit_group",
    "unit_group_is_cyclic",
    "unit_order",
    "verify_witness",
]
