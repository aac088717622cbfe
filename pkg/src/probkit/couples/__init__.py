"""Joint laws of discrete couples and convolution of laws."""

from .convolution import (
    ConvolvedMass,
    IntegerMass,
    convolve,
    convolve_power,
    convolve_sequences,
    generating_function,
)
from .csv_io import JointCsvResult, format_joint_csv, parse_joint_csv, read_joint_csv, write_joint_csv
from .joint import (
    ConditionalLaw,
    JointLaw,
    PairedRv,
    conditional_expectation,
    conditional_law,
    diagonal_mgf_factorizes,
    exact_tower_expectation,
    is_independent,
    joint_from_pairs,
    joint_mgf,
    marginal_x,
    marginal_y,
    product_joint,
    tower_expectation,
)

__all__ = [
    "ConditionalLaw",
    "ConvolvedMass",
    "IntegerMass",
    "JointCsvResult",
    "JointLaw",
    "PairedRv",
    "conditional_expectation",
    "conditional_law",
    "convolve",
    "convolve_power",
    "convolve_sequences",
    "diagonal_mgf_factorizes",
    "exact_tower_expectation",
    "format_joint_csv",
    "generating_function",
    "is_independent",
    "joint_from_pairs",
    "joint_mgf",
    "marginal_x",
    "marginal_y",
    "parse_joint_csv",
    "product_joint",
    "read_joint_csv",
    "tower_expectation",
    "write_joint_csv",
]
