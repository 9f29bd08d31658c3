"""Structure-preserving maps between finite structures."""
from dblcat.maps.catpsfun import CatPsFun, constant_psfun, validate_cat_psfun
from dblcat.maps.equivalence import (EquivWitness, equivalence_witness,
                                     verify_equivalence)
from dblcat.maps.functors import (Functor, NatTrans, compose_functors,
                                  constant_functor, enumerate_functors,
                                  enumerate_nat_trans, hcompose_nat,
                                  identity_functor, identity_nat, inverse_nat,
                                  is_essentially_surjective, is_fully_faithful,
                                  is_nat_iso, validate_functor,
                                  validate_nat_trans, vcompose_nat,
                                  whisker_left_nat, whisker_right_nat)
from dblcat.maps.pseudo import (PsDblFunctor, PseudoFunctor2,
                                constant_pseudofunctor2,
                                identity_ps_dbl_functor,
                                identity_pseudofunctor2, strict_dbl_functor,
                                strict_functor2, validate_ps_dbl_functor,
                                validate_pseudofunctor2)
from dblcat.maps.psnat import (Modif, PsNat, PsNat2, compose_psnat,
                               enumerate_modifications, enumerate_psnats,
                               enumerate_psnats2, identity_modification,
                               identity_psnat, validate_modification,
                               validate_psnat, validate_psnat2)

__all__ = [
    "CatPsFun", "constant_psfun", "validate_cat_psfun",
    "EquivWitness", "equivalence_witness", "verify_equivalence",
    "Functor", "NatTrans", "compose_functors", "constant_functor",
    "enumerate_functors", "enumerate_nat_trans", "hcompose_nat",
    "identity_functor", "identity_nat", "inverse_nat",
    "is_essentially_surjective", "is_fully_faithful", "is_nat_iso",
    "validate_functor", "validate_nat_trans", "vcompose_nat",
    "whisker_left_nat", "whisker_right_nat",
    "PsDblFunctor", "PseudoFunctor2", "constant_pseudofunctor2",
    "identity_ps_dbl_functor", "identity_pseudofunctor2", "strict_dbl_functor",
    "strict_functor2", "validate_ps_dbl_functor", "validate_pseudofunctor2",
    "Modif", "PsNat", "PsNat2", "compose_psnat", "enumerate_modifications",
    "enumerate_psnats", "enumerate_psnats2", "identity_modification",
    "identity_psnat", "validate_modification", "validate_psnat",
    "validate_psnat2",
]
