"""Twisted cohomology, jump loci and Kähler diagnostics for solvmanifold models."""

from .scalar import Scalar
from .forms import Form
from .weights import WeightClass, WeightGroup, class_equal, enumerate_K, is_unitary, multiindex_class
from .model import InvariantComplex, ModelSpec, build_complex, hull_is_abelian, lower_central_series, validate
from .cohomology import cup, hyper_lefschetz, jump_loci, lefschetz_test, massey_triple, mu_symmetry
from .hodge import (
    bott_chern,
    dolbeault_cohomology,
    holomorphic_one_forms,
    hyper_shd_test,
    shd_test,
    spectral_sequence,
    split_bigrading,
)
from .fixture import parse, parse_text, serialize
from .classify import classify

__version__ = "0.1.0"

__all__ = [
    "Scalar", "Form", "WeightClass", "WeightGroup", "class_equal", "enumerate_K", "is_unitary", "multiindex_class",
    "InvariantComplex", "ModelSpec", "build_complex", "hull_is_abelian", "lower_central_series", "validate",
    "cup", "hyper_lefschetz", "jump_loci", "lefschetz_test", "massey_triple", "mu_symmetry",
    "bott_chern", "dolbeault_cohomology", "holomorphic_one_forms", "hyper_shd_test", "shd_test",
    "spectral_sequence", "split_bigrading", "parse", "parse_text", "serialize", "classify",
]
