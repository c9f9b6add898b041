"""Phonetic keys and inverted indexes for Ukrainian surnames and medicine titles."""

from ._core import (
    CleanError,
    DegenerateInput,
    Index,
    IndexFormatError,
    clean_medicine,
    clean_surname,
    edit_distance,
    fold_homoglyphs,
    format_percent,
    medicine_keys,
    optimization_coefficient,
    surname_key,
    surname_key_trace,
)

__all__ = [
    "CleanError",
    "DegenerateInput",
    "Index",
    "IndexFormatError",
    "clean_medicine",
    "clean_surname",
    "edit_distance",
    "fold_homoglyphs",
    "format_percent",
    "medicine_keys",
    "optimization_coefficient",
    "surname_key",
    "surname_key_trace",
]
