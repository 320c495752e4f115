from .models import MinorModel, StrongModel, compose, is_valid_model, validate_model, validate_strong_model
from .search import connected_sets, copies, find_strong_model, has_minor, has_subgraph
from .extract import (
    OneHighResult,
    disjoint_model_to_minor,
    fan_from_layered_path,
    fat_minor_from_strong_model,
    fat_star_from_high_pairs,
    find_forest,
    high_degree_threshold,
    make_connected_model,
    many_high,
    one_high,
    rainbow_clique,
    two_connected_high,
)
from .split import SplitResult, SplitSide, split_weak_model

__all__ = [
    "MinorModel",
    "StrongModel",
    "compose",
    "is_valid_model",
    "validate_model",
    "validate_strong_model",
    "connected_sets",
    "copies",
    "find_strong_model",
    "has_minor",
    "has_subgraph",
    "OneHighResult",
    "disjoint_model_to_minor",
    "fan_from_layered_path",
    "fat_minor_from_strong_model",
    "fat_star_from_high_pairs",
    "find_forest",
    "high_degree_threshold",
    "make_connected_model",
    "many_high",
    "one_high",
    "rainbow_clique",
    "two_connected_high",
    "SplitResult",
    "SplitSide",
    "split_weak_model",
]
